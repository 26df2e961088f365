#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Hanoiwalk quantum search simulator
   CSV table I/O test suite
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import json
import os
import shutil
import tempfile
import unittest

import numpy as np

import hanoiwalk.io.tables as tables
from hanoiwalk.errors import TableParseError
from hanoiwalk.search import Method
from hanoiwalk.topology import EdgeClass


class TestFormat(unittest.TestCase):
    def test_values(self):
        self.assertEqual(tables.format_value(None), '')
        self.assertEqual(tables.format_value(0.1), '0.1')
        self.assertEqual(tables.format_value(np.float64(0.1)), '0.1')
        self.assertEqual(tables.format_value(np.int64(12)), '12')
        self.assertEqual(tables.format_value(3), '3')
        self.assertEqual(tables.format_value(1.0 / 3.0), '0.3333333333333333')
        self.assertEqual(tables.format_value(Method.TULSI), 'tulsi')
        self.assertEqual(tables.format_value(EdgeClass.LOOP), 'loop')
        self.assertEqual(tables.format_value(True), 'true')
        self.assertEqual(tables.format_value('chain'), 'chain')

        # Shortest round-trip representation
        x = 0.1 + 0.2
        self.assertEqual(float(tables.format_value(x)), x)


class TestTableFiles(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def _path(self, name):
        return os.path.join(self.tmp, name)

    def _write(self, name, text):
        fname = self._path(name)
        with open(fname, 'w') as fh:
            fh.write(text)
        return fname

    def test_series(self):
        fname = self._path('series.csv')
        tables.write_series(fname, np.array([0.25, 0.5, 0.125]))

        with open(fname) as fh:
            self.assertEqual(fh.read(), 't,p_marked\n0,0.25\n1,0.5\n2,0.125\n')

    def test_dict_rows(self):
        fname = self._path('sweep.csv')
        tables.write_table(fname, tables.SWEEP_HEADER, [
            {'sweep_variable': 'size', 'value': 5, 'method': 'modified', 'N': 32, 'status': 'no_peak'}
        ])

        rows = tables.read_table(fname, required=('N', 'status'))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['N'], '32')
        self.assertEqual(rows[0]['t_f'], '')
        self.assertEqual(rows[0]['_line'], 2)

    def test_edges(self):
        fname = self._path('edges.csv')
        tables.write_edges(fname, [(0, 0, EdgeClass.LOOP), (1, 3, EdgeClass.LEVEL)])
        with open(fname) as fh:
            self.assertEqual(fh.read(), 'k,k_prime,class\n0,0,loop\n1,3,level\n')

    def test_parse_errors(self):
        fname = self._write('empty.csv', '')
        self.assertRaises(TableParseError, tables.read_table, fname)

        fname = self._write('short.csv', 'N,p_f\n32,0.1\n64\n128,0.05\n')
        with self.assertRaises(TableParseError) as cm:
            tables.read_table(fname)
        self.assertEqual(cm.exception.line, 3)
        self.assertIn('line 3', str(cm.exception))

        fname = self._write('cols.csv', 'N,p_f\n32,0.1\n')
        with self.assertRaises(TableParseError) as cm:
            tables.read_table(fname, required=('N', 't_f'))
        self.assertIn('t_f', str(cm.exception))

        rows = tables.read_table(fname)
        with self.assertRaises(TableParseError):
            tables.column_float(rows[0], 't_f')

    def test_blank_lines(self):
        fname = self._write('blank.csv', 'N,p_f\n32,0.1\n\n64,0.05\n')
        rows = tables.read_table(fname)
        self.assertEqual([r['_line'] for r in rows], [2, 4])

    def test_manifest(self):
        for i in range(2):
            mf = tables.append_manifest(self.tmp, 'run', '1.0.0', {'n': 5, 'method': Method.MODIFIED,
                'epsilon': 0.75, 'grid': [1, 2]}, ['a.csv', 'b.csv'], '2026-01-01T00:00:00', 1.5)

        self.assertEqual(mf, self._path('manifest.csv'))
        rows = tables.read_table(mf, required=tables.MANIFEST_HEADER)
        self.assertEqual(len(rows), 2)

        params = json.loads(rows[0]['parameters'])
        self.assertEqual(params, {'n': 5, 'method': 'modified', 'epsilon': 0.75, 'grid': [1, 2]})
        self.assertEqual(list(params.keys()), sorted(params.keys()))
        self.assertEqual(rows[1]['outputs'], 'a.csv;b.csv')
        self.assertEqual(float(rows[1]['duration_s']), 1.5)


if __name__ == '__main__':
    unittest.main()
