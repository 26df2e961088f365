#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Hanoiwalk quantum search simulator
   Sweep and power law fit test suite
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import math
import unittest

import numpy as np

import hanoiwalk.analysis as analysis
from hanoiwalk.errors import DomainError, TableParseError
from hanoiwalk.search import PeakParams, default_window
from hanoiwalk.walker import TulsiParams


class TestPowerLaw(unittest.TestCase):
    def test_exact(self):
        xs = [2.0 ** n for n in range(5, 13)]
        fit = analysis.fit_powerlaw([(x, 2.0 * x ** 0.5) for x in xs])

        self.assertAlmostEqual(fit.prefactor, 2.0, delta=1e-12)
        self.assertAlmostEqual(fit.exponent, 0.5, delta=1e-12)
        self.assertAlmostEqual(fit.r_squared, 1.0, delta=1e-12)
        self.assertEqual(fit.points_used, 8)

        fit = analysis.fit_powerlaw([(x, 0.62 * x ** -0.37) for x in xs])
        self.assertAlmostEqual(fit.exponent, -0.37, delta=1e-12)
        self.assertAlmostEqual(fit.prefactor, 0.62, delta=1e-12)
        self.assertAlmostEqual(analysis.repetitions_exponent(fit), 0.185, delta=1e-12)

    def test_three_points(self):
        # Normal equations for log x = (0, 1, 3), log y = (0, 2, 3):
        # slope = 13/14, intercept = 3/7
        pts = [(math.exp(a), math.exp(b)) for a, b in ((0, 0), (1, 2), (3, 3))]
        fit = analysis.fit_powerlaw(pts)

        self.assertAlmostEqual(fit.exponent, 13.0 / 14.0, places=12)
        self.assertAlmostEqual(fit.prefactor, math.exp(3.0 / 7.0), places=12)
        self.assertGreater(fit.r_squared, 0.0)
        self.assertLess(fit.r_squared, 1.0)

    def test_scale_equivariance(self):
        xs = np.array([32.0, 64.0, 128.0, 256.0, 512.0])
        ys = 1.25 * xs ** 0.65 * np.array([1.02, 0.97, 1.01, 1.0, 0.99])

        a = analysis.fit_powerlaw(zip(xs, ys))
        b = analysis.fit_powerlaw(zip(xs, 3.7 * ys))

        self.assertAlmostEqual(a.exponent, b.exponent, delta=1e-12)
        self.assertAlmostEqual(b.prefactor / a.prefactor, 3.7, delta=1e-12)
        self.assertAlmostEqual(a.r_squared, b.r_squared, delta=1e-12)

    def test_errors(self):
        self.assertRaises(DomainError, analysis.fit_powerlaw, [(1.0, 1.0), (2.0, 2.0)])
        self.assertRaises(DomainError, analysis.fit_powerlaw, [])
        self.assertRaises(DomainError, analysis.fit_powerlaw, [(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)])
        self.assertRaises(DomainError, analysis.fit_powerlaw, [(1.0, 1.0), (-2.0, 1.0), (3.0, 1.0)])
        self.assertRaises(DomainError, analysis.fit_powerlaw, [(2.0, 1.0), (2.0, 2.0), (2.0, 3.0)])

    def test_evaluate(self):
        fit = analysis.ScalingFit(2.0, 0.5, 1.0, 3)
        self.assertTrue(np.allclose(fit([4.0, 16.0]), [4.0, 8.0]))


class TestTables(unittest.TestCase):
    def _rows(self):
        rows = []
        for i, n in enumerate(range(4, 10)):
            N = 2 ** n
            rows.append({'N': str(N), 't_f': repr(1.25 * N ** 0.65), 'status': 'ok', '_line': i + 2})
        return rows

    def test_fit_table(self):
        rows = self._rows()
        fit = analysis.fit_table(rows, 'N', 't_f')
        self.assertAlmostEqual(fit.exponent, 0.65, delta=1e-12)
        self.assertEqual(fit.points_used, 6)

        fit = analysis.fit_table(rows, 'N', 't_f', min_x=32)
        self.assertEqual(fit.points_used, 5)

    def test_skip_failed(self):
        rows = self._rows()
        rows[2]['status'] = 'no_peak'
        rows[2]['t_f'] = ''
        rows[3]['t_f'] = ''
        self.assertEqual(analysis.fit_table(rows, 'N', 't_f').points_used, 4)

        with self.assertRaises(DomainError):
            analysis.fit_table(rows, 'N', 't_f', min_x=128)

    def test_bad_value(self):
        rows = self._rows()
        rows[4]['t_f'] = 'fast'
        with self.assertRaises(TableParseError) as cm:
            analysis.fit_table(rows, 'N', 't_f', fname='sweep.csv')
        self.assertEqual(cm.exception.line, 6)
        self.assertIn('sweep.csv', str(cm.exception))

    def test_best_row(self):
        rows = [
            {'value': 0.5, 'cost_total': 90.0, 'status': 'ok'},
            {'value': 0.75, 'cost_total': 80.0, 'status': 'ok'},
            {'value': 1.0, 'cost_total': None, 'status': 'no_peak'},
            {'value': 1.25, 'cost_total': 80.0, 'status': 'ok'}
        ]
        self.assertEqual(analysis.best_row(rows)['value'], 0.75)
        self.assertEqual(analysis.best_row(rows, 'value')['value'], 0.5)
        self.assertRaises(DomainError, analysis.best_row, rows[2:3])


class TestSweepSpec(unittest.TestCase):
    def test_grids(self):
        spec = analysis.SweepSpec('size', 'modified', n_range=[7, 5, 6, 5])
        self.assertEqual(spec.grid, [5, 6, 7])
        self.assertEqual([cfg.n for _, cfg in spec.points], [5, 6, 7])
        self.assertTrue(all(cfg.epsilon == 0.75 for _, cfg in spec.points))

        spec = analysis.SweepSpec('epsilon', 'tulsi')
        self.assertEqual(spec.grid, [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0])

        spec = analysis.SweepSpec('size', 'tulsi')
        self.assertEqual(spec.grid, list(range(5, 13)))

        spec = analysis.SweepSpec('target', 'modified', n=5)
        self.assertEqual(spec.grid, [1, 2, 3, 4, 8, 16])

        spec = analysis.SweepSpec('delta', 'tulsi', n=8, c_grid=[2.0, 1.0],
                                  tulsi=TulsiParams(rule='inv_sqrt_log'))
        self.assertEqual([cfg.tulsi.c for _, cfg in spec.points], [1.0, 2.0])
        self.assertAlmostEqual(spec.points[1][1].cos_delta, 2.0 / math.sqrt(8.0), places=15)

    def test_invalid(self):
        self.assertRaises(DomainError, analysis.SweepSpec, 'size', 'modified', n_range=[])
        self.assertRaises(DomainError, analysis.SweepSpec, 'size', 'modified', n_range=[1, 2])
        self.assertRaises(DomainError, analysis.SweepSpec, 'epsilon', 'modified', epsilon_grid=[0.5, 2.5])
        self.assertRaises(DomainError, analysis.SweepSpec, 'epsilon', 'abstract')
        self.assertRaises(DomainError, analysis.SweepSpec, 'delta', 'modified')
        self.assertRaises(DomainError, analysis.SweepSpec, 'delta', 'tulsi',
                          tulsi=TulsiParams.from_cos(0.5))
        self.assertRaises(DomainError, analysis.SweepSpec, 'target', 'modified', n=4, k0_grid=[3, 16])
        self.assertRaises(ValueError, analysis.SweepSpec, 'time', 'modified')

    def test_as_dict(self):
        d = analysis.SweepSpec('epsilon', 'modified', n=6, epsilon_grid=[0.5, 1.0]).as_dict()
        self.assertEqual(d['variable'], 'epsilon')
        self.assertEqual(d['grid'], [0.5, 1.0])
        self.assertNotIn('tmax', d)

    def test_open_window(self):
        spec = analysis.SweepSpec('size', 'modified', n_range=[5, 12], peak=PeakParams(None, 0.7))
        windows = [cfg.peak.smooth_window for _, cfg in spec.points]
        self.assertEqual(windows, [5, 123])
        self.assertEqual(windows, [default_window(cfg.t_max) for _, cfg in spec.points])
        self.assertTrue(all(cfg.peak.height_fraction == 0.7 for _, cfg in spec.points))

        d = spec.as_dict()
        self.assertNotIn('window', d)
        self.assertEqual(d['height_fraction'], 0.7)

        d = analysis.SweepSpec('size', 'modified', n_range=[5, 12], peak=PeakParams(9, 0.7)).as_dict()
        self.assertEqual(d['window'], 9)


class TestSweep(unittest.TestCase):
    def test_rows(self):
        spec = analysis.SweepSpec('epsilon', 'modified', n=6, epsilon_grid=[2.0, 1.0, 0.75])
        seen = []
        rows = analysis.sweep(spec, jobs=1, progress=lambda d, t, r: seen.append((d, t)))

        self.assertEqual(seen, [(1, 3), (2, 3), (3, 3)])
        self.assertEqual([r['value'] for r in rows], [0.75, 1.0, 2.0])
        self.assertTrue(all(r['sweep_variable'] == 'epsilon' for r in rows))

        # The decoupled coin at epsilon = 2 never finds the target
        self.assertEqual([r['status'] for r in rows], ['ok', 'ok', 'no_peak'])
        self.assertNotIn('t_f', rows[2])
        self.assertEqual(rows[2]['epsilon'], 2.0)
        self.assertGreater(rows[0]['p_f'], 2.0 / 64)

    def test_deterministic(self):
        spec = analysis.SweepSpec('size', 'tulsi', n_range=[4, 5, 6])
        a = analysis.sweep(spec, jobs=1)
        b = analysis.sweep(spec, jobs=1)
        c = analysis.sweep(spec, jobs=2)

        self.assertEqual(a, b)
        self.assertEqual(a, c)

    def test_jobs(self):
        spec = analysis.SweepSpec('size', 'modified', n_range=[4])
        self.assertRaises(DomainError, analysis.sweep, spec, 0)


if __name__ == '__main__':
    unittest.main()
