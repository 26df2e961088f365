#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Hanoiwalk quantum search simulator
   Command line test suite
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import argparse
import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

import hanoi_search as cli
import hanoiwalk.io.tables as tables
import hanoiwalk.search as search
from hanoiwalk.config import settings


class CLITestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def path(self, name):
        return os.path.join(self.tmp, name)

    def main(self, *args):
        '''Run the command line quietly in the temp directory and return the exit status'''
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            status = cli.main(['-q', '--out-dir', self.tmp] + list(args))
        self.stderr = err.getvalue()
        return status

    def read(self, name):
        return tables.read_table(self.path(name))

    def manifest(self):
        return self.read(tables.MANIFEST_NAME)


class TestTopologyCommand(CLITestCase):
    def test_chain(self):
        self.assertEqual(self.main('--mode', 'chain', 'topology', '--n', '4', '--stats'), cli.EXIT_OK)

        rows = self.read('edges_chain_n4.csv')
        self.assertEqual(len(rows), 32)
        self.assertEqual(sorted((r['k'], r['k_prime']) for r in rows if r['class'] == 'loop'),
                         [('0', '0'), ('8', '8')])

        mf = self.manifest()
        self.assertEqual(len(mf), 1)
        self.assertEqual(mf[0]['command'], 'topology')
        self.assertEqual(json.loads(mf[0]['parameters'])['mode'], 'chain')

    def test_paired_doubled(self):
        self.assertEqual(self.main('topology', '--n', '2', '--out', self.path('e.csv')), cli.EXIT_OK)
        level = [(r['k'], r['k_prime']) for r in self.read('e.csv') if r['class'] == 'level']
        self.assertEqual(level, [('1', '3'), ('1', '3')])

    def test_bad_n(self):
        self.assertEqual(self.main('topology', '--n', '1'), cli.EXIT_USAGE)
        self.assertFalse(os.path.exists(self.path(tables.MANIFEST_NAME)))


class TestRunCommand(CLITestCase):
    def test_run(self):
        status = self.main('--dump-state', self.path('state.csv'), 'run', '--method', 'modified',
                           '--epsilon', '0.75', '--n', '6')
        self.assertEqual(status, cli.EXIT_OK)

        series = self.read('series_modified_paired_n6_k3.csv')
        self.assertEqual(len(series), 137)
        self.assertAlmostEqual(float(series[0]['p_marked']), 1.0 / 64, delta=1e-15)

        rpt = self.read('series_modified_paired_n6_k3_report.csv')
        self.assertEqual(len(rpt), 1)
        self.assertEqual(rpt[0]['epsilon'], '0.75')
        self.assertEqual(rpt[0]['cos_delta'], '')
        t_f = int(rpt[0]['t_f'])
        self.assertEqual(float(rpt[0]['p_f']), float(series[t_f]['p_marked']))

        self.assertEqual(len(self.read('state.csv')), 4 * 64)

        outputs = self.manifest()[0]['outputs'].split(';')
        self.assertEqual(len(outputs), 3)

    def test_tulsi(self):
        status = self.main('run', '--method', 'tulsi', '--n', '5', '--cos-delta', '0.25', '--tmax', '60',
                           '--out', self.path('t.csv'))
        self.assertIn(status, (cli.EXIT_OK, cli.EXIT_NO_PEAK))
        self.assertEqual(len(self.read('t.csv')), 61)

        params = json.loads(self.manifest()[0]['parameters'])
        self.assertEqual(params['cos_delta'], 0.25)
        self.assertEqual(params['tmax'], 60)

    def test_validation(self):
        self.assertEqual(self.main('run', '--method', 'abstract', '--epsilon', '0.9', '--n', '6'),
                         cli.EXIT_USAGE)
        self.assertIn('epsilon', self.stderr)

        self.assertEqual(self.main('run', '--method', 'modified', '--c', '1.0', '--n', '6'), cli.EXIT_USAGE)
        self.assertEqual(self.main('run', '--n', '6', '--window', '4'), cli.EXIT_USAGE)
        self.assertEqual(self.main('run', '--n', '6', '--method', 'grover'), cli.EXIT_USAGE)

    def test_no_peak(self):
        status = self.main('run', '--method', 'modified', '--epsilon', '2', '--n', '5', '--tmax', '50')
        self.assertEqual(status, cli.EXIT_NO_PEAK)
        self.assertEqual(len(self.read('series_modified_paired_n5_k3.csv')), 51)
        self.assertFalse(os.path.exists(self.path('series_modified_paired_n5_k3_report.csv')))
        self.assertEqual(len(self.manifest()), 1)

    def test_resource(self):
        saved = settings.work_budget
        try:
            settings.work_budget = 1.0
            self.assertEqual(self.main('run', '--n', '6'), cli.EXIT_FAILURE)
            self.assertIn('HANOIWALK_WORK_BUDGET', self.stderr)
        finally:
            settings.work_budget = saved


class TestConfigFile(CLITestCase):
    def _config(self, text):
        fname = self.path('run.cfg')
        with open(fname, 'w') as fh:
            fh.write(text)
        return fname

    def test_file_values(self):
        cfg = self._config('# Tulsi run\nmethod = tulsi\nn = 5\ntmax = 80\nmode = chain\n')
        self.assertIn(self.main('--config', cfg, 'run'), (cli.EXIT_OK, cli.EXIT_NO_PEAK))
        self.assertEqual(len(self.read('series_tulsi_chain_n5_k3.csv')), 81)

    def test_flag_override(self):
        cfg = self._config('method = modified\nn = 5\ntmax = 80\n')
        self.assertIn(self.main('--config', cfg, 'run', '--tmax', '60', '--n', '6'),
                      (cli.EXIT_OK, cli.EXIT_NO_PEAK))
        self.assertEqual(len(self.read('series_modified_paired_n6_k3.csv')), 61)

    def test_bad_file(self):
        cfg = self._config('n = 5\nbogus = 1\n')
        self.assertEqual(self.main('--config', cfg, 'run'), cli.EXIT_USAGE)
        self.assertIn('line 2', self.stderr)

        cfg = self._config('n = 1\n')
        self.assertEqual(self.main('--config', cfg, 'run'), cli.EXIT_USAGE)

        cfg = self._config('method = grover\n')
        self.assertEqual(self.main('--config', cfg, 'run', '--n', '5'), cli.EXIT_USAGE)

        # Keys for another command are rejected
        cfg = self._config('variable = size\n')
        self.assertEqual(self.main('--config', cfg, 'run', '--n', '5'), cli.EXIT_USAGE)


class TestSweepFitCommands(CLITestCase):
    def test_sweep_and_fit(self):
        status = self.main('--jobs', '1', 'sweep', '--variable', 'size', '--method', 'modified',
                           '--n-range', '5..7', '--out', self.path('sweep.csv'))
        self.assertEqual(status, cli.EXIT_OK)

        rows = self.read('sweep.csv')
        self.assertEqual([r['N'] for r in rows], ['32', '64', '128'])
        self.assertTrue(all(r['status'] == 'ok' for r in rows))
        self.assertTrue(all(r['sweep_variable'] == 'size' for r in rows))

        status = self.main('fit', self.path('sweep.csv'), '--y', 'p_f', '--out', self.path('fit.csv'))
        self.assertEqual(status, cli.EXIT_OK)
        fit = self.read('fit.csv')
        self.assertEqual(fit[0]['points_used'], '3')

        mf = self.manifest()
        self.assertEqual([m['command'] for m in mf], ['sweep', 'fit'])

    def test_deterministic(self):
        args = ('--jobs', '1', 'sweep', '--variable', 'epsilon', '--method', 'tulsi', '--n', '5',
                '--epsilon-grid', '0.5,1.0')
        self.main(*(args + ('--out', self.path('a.csv'))))
        self.main(*(args + ('--out', self.path('b.csv'))))

        with open(self.path('a.csv')) as fa, open(self.path('b.csv')) as fb:
            self.assertEqual(fa.read(), fb.read())

    def test_fit_table(self):
        with open(self.path('pts.csv'), 'w') as fh:
            fh.write('N,t_f\n')
            for n in range(4, 10):
                fh.write('{},{}\n'.format(2 ** n, 1.25 * (2 ** n) ** 0.65))

        self.assertEqual(self.main('fit', self.path('pts.csv'), '--y', 't_f'), cli.EXIT_OK)
        fit = self.read('fit_t_f_N.csv')[0]
        self.assertAlmostEqual(float(fit['exponent']), 0.65, places=10)
        self.assertEqual(fit['points_used'], '5') # N = 16 is below the default fit range

        self.assertEqual(self.main('fit', self.path('pts.csv'), '--y', 't_f', '--min-x', '1'), cli.EXIT_OK)
        self.assertEqual(self.read('fit_t_f_N.csv')[0]['points_used'], '6')

    def test_fit_errors(self):
        with open(self.path('two.csv'), 'w') as fh:
            fh.write('N,p_f\n32,0.1\n64,0.08\n')
        self.assertEqual(self.main('fit', self.path('two.csv'), '--y', 'p_f'), cli.EXIT_USAGE)

        with open(self.path('bad.csv'), 'w') as fh:
            fh.write('N,p_f\n32,0.1\n64\n128,0.05\n')
        self.assertEqual(self.main('fit', self.path('bad.csv'), '--y', 'p_f'), cli.EXIT_FAILURE)
        self.assertIn('line 3', self.stderr)

        self.assertEqual(self.main('fit', self.path('two.csv'), '--y', 'cost_total'), cli.EXIT_FAILURE)

    def test_bad_grid(self):
        self.assertEqual(self.main('sweep', '--variable', 'size', '--n-range', '5..x'), cli.EXIT_USAGE)
        self.assertEqual(self.main('sweep', '--variable', 'delta', '--method', 'modified'), cli.EXIT_USAGE)

    def test_height_fraction_only(self):
        # Leaving out --window keeps the window open so it tracks each grid size
        peak = cli._peak_params(argparse.Namespace(window=None, height_fraction=0.7))
        self.assertIsNone(peak.smooth_window)
        self.assertEqual(peak.height_fraction, 0.7)
        self.assertIsNone(cli._peak_params(argparse.Namespace(window=None,
            height_fraction=search.DEFAULT_HEIGHT_FRACTION)))
        self.assertEqual(cli._peak_params(argparse.Namespace(window=9, height_fraction=0.7)).smooth_window, 9)

        status = self.main('--jobs', '1', 'sweep', '--variable', 'size', '--method', 'modified',
                           '--n-range', '5..6', '--height-fraction', '0.7', '--out', self.path('hf.csv'))
        self.assertIn(status, (cli.EXIT_OK, cli.EXIT_NO_PEAK))
        self.assertEqual([r['N'] for r in self.read('hf.csv')], ['32', '64'])


if __name__ == '__main__':
    unittest.main()
