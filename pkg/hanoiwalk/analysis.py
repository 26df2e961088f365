#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Parameter sweeps and power law fits

A sweep runs one search per grid point of a single variable (network size,
coin parameter, Tulsi scale, or marked vertex) with every other parameter
held fixed. Grid points are independent and may run in a worker pool. The
resulting table rows are always in ascending grid order.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

from enum import Enum
import math
import multiprocessing as mp

import numpy as np
import scipy.stats as stats

from hanoiwalk.config import settings
from hanoiwalk.errors import DomainError, NoPeakError
import hanoiwalk.io.tables as tables
from hanoiwalk.search import DEFAULT_K0, Method, SearchConfig, report_row, run_search
from hanoiwalk.topology import EdgeMode, check_n
from hanoiwalk.walker import CosDeltaRule, TulsiParams


class SweepVariable(Enum):
    '''The parameter varied by a sweep'''
    SIZE = 'size'
    EPSILON = 'epsilon'
    DELTA = 'delta'
    TARGET = 'target'


DEFAULT_N_RANGE = list(range(5, 13))
DEFAULT_EPSILON_GRID = [0.25 * i for i in range(1, 9)]
DEFAULT_C_GRID = [0.5, 0.75, 1.0, 1.25, 1.5, 2.0]

# Scaling fits skip sizes below this to suppress small network transients
DEFAULT_MIN_N = 32


def default_target_grid(n):
    '''Smallest vertex of every hierarchy level plus the usual target 3'''
    return sorted(set([2 ** k1 for k1 in range(n)] + [DEFAULT_K0]))


class SweepSpec(object):
    '''Description of a one dimensional parameter sweep

    :ivar variable: The SweepVariable being varied

    :ivar method: The search Method used at every grid point

    :ivar grid: Sorted list of grid values

    :ivar points: List of (value, SearchConfig) pairs in grid order
    '''
    def __init__(self, variable, method, n=9, k0=DEFAULT_K0, epsilon=None, tulsi=None,
                 edge_mode=EdgeMode.PAIRED, t_max=None, peak=None, n_range=None,
                 epsilon_grid=None, c_grid=None, k0_grid=None):
        '''
        variable (SweepVariable or string)
            The parameter to sweep

        method (Method or string)
            The search method

        n, k0, epsilon, tulsi, edge_mode, t_max, peak
            The fixed run parameters (see SearchConfig). The swept parameter
            overrides its fixed counterpart. t_max and peak default per grid
            point when None.

        n_range (sequence of int)
            Grid for SIZE sweeps. Defaults to 5 .. 12.

        epsilon_grid (sequence of float)
            Grid for EPSILON sweeps. Defaults to 0.25 .. 2.0 in steps of 0.25.

        c_grid (sequence of float)
            Grid of Tulsi scale factors for DELTA sweeps

        k0_grid (sequence of int)
            Grid for TARGET sweeps. Defaults to default_target_grid(n).

        Raises DomainError for empty grids, invalid grid values, or a
          variable that doesn't apply to the method.
        '''
        self.variable = SweepVariable(variable)
        self.method = Method(method)
        self.edge_mode = EdgeMode(edge_mode)

        self.base = {
            'n': n,
            'k0': k0,
            'epsilon': epsilon,
            'tulsi': tulsi,
            'edge_mode': self.edge_mode,
            't_max': t_max,
            'peak': peak
        }

        v = self.variable
        if v == SweepVariable.SIZE:
            grid = DEFAULT_N_RANGE if n_range is None else n_range
            grid = [check_n(x) for x in grid]
        elif v == SweepVariable.EPSILON:
            if self.method == Method.ABSTRACT:
                raise DomainError('The abstract search algorithm has a fixed coin; use the modified method')
            grid = DEFAULT_EPSILON_GRID if epsilon_grid is None else epsilon_grid
            grid = [float(x) for x in grid]
        elif v == SweepVariable.DELTA:
            if self.method != Method.TULSI:
                raise DomainError('Delta sweeps only apply to the tulsi method')
            if tulsi is not None and tulsi.rule == CosDeltaRule.EXPLICIT:
                raise DomainError('Delta sweeps vary the scale of an INV_LOG or INV_SQRT_LOG rule')
            grid = DEFAULT_C_GRID if c_grid is None else c_grid
            grid = [float(x) for x in grid]
        else: # TARGET
            grid = default_target_grid(check_n(n)) if k0_grid is None else k0_grid
            grid = [int(x) for x in grid]

        if len(grid) == 0:
            raise DomainError('Empty {} grid'.format(v.value))

        self.grid = sorted(set(grid))
        self.points = [(x, self._config(x)) for x in self.grid]

    def _config(self, x):
        kw = dict(self.base)
        v = self.variable
        if v == SweepVariable.SIZE:
            kw['n'] = x
        elif v == SweepVariable.EPSILON:
            kw['epsilon'] = x
        elif v == SweepVariable.DELTA:
            rule = CosDeltaRule.INV_LOG if kw['tulsi'] is None else kw['tulsi'].rule
            kw['tulsi'] = TulsiParams(rule=rule, c=x)
        else:
            kw['k0'] = x

        return SearchConfig(self.method, **kw)

    def template(self):
        '''The SearchConfig for the fixed parameters'''
        return SearchConfig(self.method, **self.base)

    def as_dict(self):
        '''Returns the sweep parameters as a dict of plain values'''
        d = self.template().as_dict()
        d['variable'] = self.variable.value
        d['grid'] = list(self.grid)
        if self.base['t_max'] is None:
            del d['tmax']
        peak = self.base['peak']
        if peak is None or peak.smooth_window is None:
            del d['window'] # Varies with t_max
        if peak is None:
            del d['height_fraction']
        return d

    def __repr__(self):
        return 'SweepSpec({}, {}, {})'.format(self.variable.value, self.method.value, self.grid)


def _run_point(point):
    # Worker entry point; must stay at module level to be picklable
    variable, value, config = point
    row = {'sweep_variable': variable, 'value': value}
    try:
        _, report = run_search(config)
        row.update(report_row(config, report))
        row['status'] = 'ok'
    except NoPeakError:
        row.update(report_row(config))
        row['status'] = 'no_peak'

    return row


def sweep(spec, jobs=None, progress=None):
    '''Run every grid point of a sweep

    spec (SweepSpec)
        The sweep to run

    jobs (int or None)
        Maximum number of worker processes. Defaults to settings.worker_count.
        With one job the points run in the calling process.

    progress (callable or None)
        Called as progress(done, total, row) after each point completes

    Returns a list of row dicts keyed by the sweep CSV columns, in grid order.
      Points without a detectable peak have status 'no_peak' and empty peak
      columns instead of aborting the sweep.
    '''
    jobs = settings.worker_count if jobs is None else jobs
    if jobs < 1:
        raise DomainError('Worker count must be >= 1 (got {})'.format(jobs))

    work = [(spec.variable.value, x, cfg) for x, cfg in spec.points]
    total = len(work)
    jobs = min(jobs, total)

    rows = []
    if jobs == 1:
        for pt in work:
            rows.append(_run_point(pt))
            if progress is not None:
                progress(len(rows), total, rows[-1])
    else:
        with mp.Pool(processes=jobs) as pool:
            for row in pool.imap(_run_point, work):
                rows.append(row)
                if progress is not None:
                    progress(len(rows), total, row)

    # imap preserves submission order which is already the grid order
    return rows


class ScalingFit(object):
    '''Power law y = prefactor * x**exponent

    :ivar prefactor: Positive scale factor

    :ivar exponent: Power law exponent

    :ivar r_squared: Coefficient of determination of the log-log fit

    :ivar points_used: Number of points in the fit
    '''
    def __init__(self, prefactor, exponent, r_squared, points_used):
        self.prefactor = prefactor
        self.exponent = exponent
        self.r_squared = r_squared
        self.points_used = points_used

    def __call__(self, x):
        return self.prefactor * np.asarray(x, dtype=float) ** self.exponent

    def __repr__(self):
        return 'ScalingFit({:.4g} x^{:.4g}, r2={:.4f}, points={})'.format(self.prefactor,
            self.exponent, self.r_squared, self.points_used)


def fit_powerlaw(points):
    '''Least squares power law fit on log-log transformed data

    points (sequence of (float, float))
        The (x, y) data

    Returns a ScalingFit.

    Raises DomainError with fewer than 3 points or non-positive values.
    '''
    pts = np.asarray(list(points), dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 3:
        raise DomainError('A power law fit needs at least 3 points (got {})'.format(len(pts)))
    if pts.shape[1] != 2:
        raise DomainError('Fit points must be (x, y) pairs')
    if np.any(pts <= 0.0) or not np.all(np.isfinite(pts)):
        raise DomainError('Power law fit requires finite positive values')

    lx, ly = np.log(pts[:, 0]), np.log(pts[:, 1])
    if np.ptp(lx) == 0.0:
        raise DomainError('Power law fit needs at least two distinct x values')

    res = stats.linregress(lx, ly)
    r2 = min(1.0, res.rvalue ** 2)

    return ScalingFit(math.exp(res.intercept), float(res.slope), float(r2), len(pts))


def _ok_rows(rows):
    return [r for r in rows if r.get('status', 'ok') == 'ok']


def fit_table(rows, x='N', y='cost_single', min_x=None, fname=None):
    '''Fit a power law to two columns of a sweep or report table

    rows (sequence of dict)
        Table rows as returned by sweep() or hanoiwalk.io.tables.read_table()

    x, y (string)
        Column names

    min_x (float or None)
        Rows with x below this value are excluded

    fname (string or None)
        Source file name used in error messages

    Returns a ScalingFit.

    Raises TableParseError for non-numeric fields.
    Raises DomainError if fewer than 3 points remain.
    '''
    points = []
    for r in _ok_rows(rows):
        if r.get(x) in (None, '') or r.get(y) in (None, ''):
            continue
        xv = tables.column_float(r, x, fname)
        if min_x is not None and xv < min_x:
            continue
        points.append((xv, tables.column_float(r, y, fname)))

    return fit_powerlaw(points)


def best_row(rows, key='cost_total'):
    '''Find the grid point minimizing a column

    Ties resolve to the earliest row.

    Raises DomainError if no successful row has a value for key.
    '''
    best, best_val = None, None
    for r in _ok_rows(rows):
        if r.get(key) in (None, ''):
            continue
        val = float(r[key])
        if best_val is None or val < best_val:
            best, best_val = r, val

    if best is None:
        raise DomainError('No successful rows with a "{}" value'.format(key))
    return best


def repetitions_exponent(fit):
    '''Scaling exponent of the amplitude amplification repetitions

    With p_f ~ N**a the repetitions 1/sqrt(p_f) grow as N**(-a/2).

    fit (ScalingFit)
        A fit of p_f against N
    '''
    return -fit.exponent / 2.0
