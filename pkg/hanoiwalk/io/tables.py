#!/usr/bin/python
# -*- coding: utf-8 -*-

'''CSV table I/O

All tables are plain CSV with a header row. Floats are written with their
shortest round-trip representation so identical results produce identical
files.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import csv
from enum import Enum
import json
import numbers
import os

from hanoiwalk.errors import TableParseError


SERIES_HEADER = ('t', 'p_marked')
REPORT_HEADER = ('method', 'mode', 'n', 'N', 'k0', 'epsilon', 'cos_delta', 't_f', 'p_f',
                 'cost_single', 'cost_total')
SWEEP_HEADER = ('sweep_variable', 'value') + REPORT_HEADER + ('status',)
EDGE_HEADER = ('k', 'k_prime', 'class')
STATE_HEADER = ('ancilla', 'coin', 'vertex', 're', 'im')
FIT_HEADER = ('prefactor', 'exponent', 'r_squared', 'points_used')
MANIFEST_HEADER = ('command', 'version', 'parameters', 'outputs', 'started', 'duration_s')

MANIFEST_NAME = 'manifest.csv'


def format_value(v):
    '''Convert a value to its CSV text

    None becomes an empty field, floats use repr() and enums their value.
    '''
    if v is None:
        return ''
    if isinstance(v, Enum):
        return str(v.value)
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if isinstance(v, numbers.Integral):
        return str(int(v))
    if isinstance(v, numbers.Real):
        return repr(float(v)) # Strips numpy scalar types
    return str(v)


def write_table(fname, header, rows):
    '''Write a CSV table

    fname (string)
        Output file

    header (sequence of string)
        Column names

    rows (iterable of sequence or dict)
        Table rows. Dict rows are ordered by header and missing keys are
        left empty.
    '''
    with open(fname, 'w', newline='') as fh:
        w = csv.writer(fh, lineterminator='\n')
        w.writerow(header)
        for r in rows:
            if isinstance(r, dict):
                r = [r.get(h) for h in header]
            w.writerow([format_value(v) for v in r])


def read_table(fname, required=()):
    '''Read a CSV table with a header row

    fname (string)
        The file to read

    required (sequence of string)
        Columns that must be present in the header

    Returns a list of dicts mapping column names to field strings. Each dict
      also carries the source line number under the key '_line'.

    Raises TableParseError if the file is empty, a row has the wrong number
      of fields, or a required column is missing.
    '''
    with open(fname, 'r', newline='') as fh:
        rd = csv.reader(fh)
        try:
            header = next(rd)
        except StopIteration:
            raise TableParseError('Empty table', None, fname)
        except csv.Error as e:
            raise TableParseError(str(e), 1, fname)

        header = [h.strip() for h in header]
        for col in required:
            if col not in header:
                raise TableParseError('Missing column "{}"'.format(col), 1, fname)

        rows = []
        try:
            for fields in rd:
                if not fields: # Blank line
                    continue
                if len(fields) != len(header):
                    raise TableParseError('Expected {} fields, found {}'.format(len(header),
                        len(fields)), rd.line_num, fname)
                row = dict(zip(header, fields))
                row['_line'] = rd.line_num
                rows.append(row)
        except csv.Error as e:
            raise TableParseError(str(e), rd.line_num, fname)

    return rows


def column_float(row, col, fname=None):
    '''Convert a table field to float

    Raises TableParseError on an empty or non-numeric field.
    '''
    try:
        return float(row[col])
    except (KeyError, ValueError):
        raise TableParseError('Non-numeric value "{}" in column "{}"'.format(row.get(col, ''), col),
            row.get('_line'), fname)


def write_series(fname, series):
    '''Write a probability series as "t,p_marked" rows'''
    write_table(fname, SERIES_HEADER, ((t, float(p)) for t, p in enumerate(series)))


def write_edges(fname, edges):
    '''Write an edge list of (k, k_prime, EdgeClass) tuples'''
    write_table(fname, EDGE_HEADER, edges)


def write_fit(fname, fit):
    '''Write a single ScalingFit row'''
    write_table(fname, FIT_HEADER, [(fit.prefactor, fit.exponent, fit.r_squared, fit.points_used)])


def write_state(fname, amplitudes, has_ancilla):
    '''Write every amplitude of a walker state

    amplitudes (numpy array)
        State amplitudes shaped (N, 4) or (2, N, 4)

    has_ancilla (bool)
        Selects the layout of amplitudes. Ancilla free states are reported
        with ancilla = 0.
    '''
    amps = amplitudes if has_ancilla else amplitudes[None, ...]

    def rows():
        for b, blk in enumerate(amps):
            for k, vert in enumerate(blk):
                for a, z in enumerate(vert):
                    yield (b, a, k, float(z.real), float(z.imag))

    write_table(fname, STATE_HEADER, rows())


def append_manifest(out_dir, command, version, parameters, outputs, started, duration):
    '''Append one row to the manifest in an output directory

    out_dir (string)
        Directory holding manifest.csv. The header is written when the file is created.

    command (string)
        The command that produced the outputs

    version (string)
        Package version

    parameters (dict)
        The full parameter set. Stored as JSON with sorted keys.

    outputs (sequence of string)
        Paths of the files produced

    started (string)
        ISO 8601 start time

    duration (float)
        Wall clock duration in seconds

    Returns the manifest path.
    '''
    fname = os.path.join(out_dir, MANIFEST_NAME)
    new_file = not os.path.exists(fname)

    params = json.dumps(parameters, sort_keys=True, default=format_value)
    row = (command, version, params, ';'.join(outputs), started, round(duration, 6))

    with open(fname, 'a', newline='') as fh:
        w = csv.writer(fh, lineterminator='\n')
        if new_file:
            w.writerow(MANIFEST_HEADER)
        w.writerow([format_value(v) for v in row])

    return fname
