#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Search runs, first peak detection and cost accounting

Three search methods are supported:

  ABSTRACT
    U' = S C' with the Grover coin, started from the uniform superposition.
  MODIFIED
    U' with the epsilon coin and the matching biased initial state.
  TULSI
    Tulsi's ancilla controlled operator U'' started from |1> v(epsilon) |u_P>.

A run records the probability of the marked vertex after every step. The
success probability is taken at the first peak of that series.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

from enum import Enum
import math
import time

import numpy as np
import scipy.signal as signal

from hanoiwalk.config import settings
from hanoiwalk.errors import DomainError, NoPeakError, NormDriftError, ResourceError
from hanoiwalk.topology import COIN_DIM, EdgeMode, check_n, get_topology
import hanoiwalk.walker as walker


class Method(Enum):
    '''Enumeration of search methods'''
    ABSTRACT = 'abstract'
    TULSI = 'tulsi'
    MODIFIED = 'modified'


DEFAULT_K0 = 3
DEFAULT_EPSILON = {
    Method.ABSTRACT: 1.0,
    Method.TULSI: 1.0,
    Method.MODIFIED: 0.75
}


def default_t_max(N):
    '''Default step horizon: ceil(6 * N**0.75)

    This sits well above the observed first peak time, which grows roughly
    as N**0.65.
    '''
    return int(math.ceil(6.0 * N ** 0.75))


DEFAULT_HEIGHT_FRACTION = 0.5


class PeakParams(object):
    '''Smoothing and gating parameters for first peak detection

    :ivar smooth_window: Odd moving average window length (1 disables smoothing).
      None selects default_window() for the step horizon of each run.

    :ivar height_fraction: A lobe must stand out from the minima on either side
      by this fraction of its own height
    '''
    def __init__(self, smooth_window=None, height_fraction=DEFAULT_HEIGHT_FRACTION):
        if smooth_window is not None and (int(smooth_window) != smooth_window or smooth_window < 1 \
                or smooth_window % 2 == 0):
            raise DomainError('Smoothing window must be an odd integer >= 1 (got {})'.format(smooth_window))
        if not 0.0 < height_fraction <= 1.0:
            raise DomainError('Height fraction must be in (0, 1] (got {})'.format(height_fraction))

        self.smooth_window = None if smooth_window is None else int(smooth_window)
        self.height_fraction = float(height_fraction)

    def resolve(self, t_max):
        '''Fix an open smoothing window for a step horizon

        Returns self when the window is already set, otherwise a new PeakParams.
        '''
        if self.smooth_window is not None:
            return self
        return PeakParams(default_window(t_max), self.height_fraction)

    def __repr__(self):
        return 'PeakParams({}, {})'.format(self.smooth_window, self.height_fraction)


def default_window(t_max):
    '''Smoothing window on the scale of the first lobe

    The window is max(3, ceil(t_max / 25)) rounded up to an odd number. With
    the default horizon this is roughly 0.4 t_f.
    '''
    w = int(math.ceil(t_max / 25.0))
    if w % 2 == 0:
        w += 1
    return max(3, w)


def default_peak_params(t_max):
    '''Peak parameters scaled to a step horizon'''
    return PeakParams(default_window(t_max), DEFAULT_HEIGHT_FRACTION)


class SearchConfig(object):
    '''Complete description of one search run

    :ivar method: The search Method

    :ivar n: Network size exponent (N = 2**n)

    :ivar k0: Marked vertex

    :ivar epsilon: Coin parameter (always 1.0 for ABSTRACT)

    :ivar tulsi: TulsiParams for the TULSI method, None otherwise

    :ivar t_max: Number of steps to simulate

    :ivar edge_mode: EdgeMode of the network

    :ivar peak: PeakParams for first peak detection
    '''
    def __init__(self, method, n, k0=DEFAULT_K0, epsilon=None, tulsi=None, t_max=None,
                 edge_mode=EdgeMode.PAIRED, peak=None):
        '''
        Raises DomainError when the parameters violate a method's constraints.
        '''
        self.method = Method(method)
        self.n = check_n(n)
        self.N = 2 ** self.n
        self.edge_mode = EdgeMode(edge_mode)

        if isinstance(k0, bool) or int(k0) != k0 or not 0 <= k0 < self.N:
            raise DomainError('Marked vertex {} is outside of the network (N = {})'.format(k0, self.N))
        self.k0 = int(k0)

        if epsilon is None:
            epsilon = DEFAULT_EPSILON[self.method]
        elif self.method == Method.ABSTRACT and epsilon != 1.0:
            raise DomainError('The abstract search algorithm uses the Grover coin (epsilon = 1); ' \
                'got epsilon = {}'.format(epsilon))
        self.epsilon = walker.epsilon_coin(epsilon).epsilon # Validates range

        if self.method == Method.TULSI:
            self.tulsi = walker.TulsiParams() if tulsi is None else tulsi
        elif tulsi is not None:
            raise DomainError('Tulsi parameters only apply to the tulsi method')
        else:
            self.tulsi = None

        if t_max is None:
            t_max = default_t_max(self.N)
        if int(t_max) != t_max or t_max < 1:
            raise DomainError('Step horizon must be a positive integer (got {})'.format(t_max))
        self.t_max = int(t_max)

        self.peak = (PeakParams() if peak is None else peak).resolve(self.t_max)

    @property
    def has_ancilla(self):
        return self.method == Method.TULSI

    @property
    def cos_delta(self):
        '''cos(delta) for TULSI runs, None otherwise'''
        if self.tulsi is None:
            return None
        return self.tulsi.cos_delta(self.N)

    def work(self):
        '''Amplitude updates needed for a full run'''
        return (2 if self.has_ancilla else 1) * COIN_DIM * self.N * self.t_max

    def as_dict(self):
        '''Returns the parameters as a dict of plain values'''
        d = {
            'method': self.method.value,
            'n': self.n,
            'k0': self.k0,
            'epsilon': self.epsilon,
            'tmax': self.t_max,
            'mode': self.edge_mode.value,
            'window': self.peak.smooth_window,
            'height_fraction': self.peak.height_fraction
        }
        if self.tulsi is not None:
            d['delta_rule'] = self.tulsi.rule.value
            if self.tulsi.rule == walker.CosDeltaRule.EXPLICIT:
                d['cos_delta'] = self.cos_delta
            else:
                d['c'] = self.tulsi.c
        return d

    def __repr__(self):
        return 'SearchConfig({}, n={}, k0={}, epsilon={}, t_max={}, {})'.format(self.method.value,
            self.n, self.k0, self.epsilon, self.t_max, self.edge_mode.value)


def make_config(method, n, **kwargs):
    '''Convenience constructor for SearchConfig'''
    return SearchConfig(method, n, **kwargs)


def run_series(config, run_info=None):
    '''Simulate a search run and record the marked vertex probability

    config (SearchConfig)
        The run to simulate

    run_info (dict or None)
        An optional dictionary that is filled with run diagnostics:
        'final_state' (WalkerState), 'max_norm_drift' (float),
        'work' (amplitude updates), and 'elapsed' (seconds).

    Returns a numpy array p with p[t] for t = 0 .. t_max.

    Raises ResourceError if the run exceeds the configured work budget.
    Raises NormDriftError if the state norm drifts beyond the configured budget.
    '''
    work = config.work()
    if work > settings.work_budget:
        raise ResourceError('Run needs {:g} amplitude updates, budget is {:g} ' \
            '(set HANOIWALK_WORK_BUDGET to raise it)'.format(work, settings.work_budget))

    t_start = time.perf_counter()

    topo = get_topology(config.n, config.edge_mode)
    coin = walker.epsilon_coin(config.epsilon)
    state = walker.build_initial_state(config.epsilon, config.n, config.has_ancilla)

    if config.has_ancilla:
        def step(s):
            walker.step_tulsi(s, config, topo=topo, coin=coin)
    else:
        def step(s):
            walker.step_search(s, config, topo=topo, coin=coin)

    k0 = config.k0
    series = np.empty(config.t_max + 1)
    series[0] = walker.marked_probability(state, k0)
    max_drift = walker.norm_drift(state)

    for t in range(1, config.t_max + 1):
        step(state)
        series[t] = walker.marked_probability(state, k0)

        drift = walker.norm_drift(state)
        if drift > settings.drift_budget:
            raise NormDriftError('Norm drift {:g} at step {} exceeds budget {:g}'.format(drift,
                t, settings.drift_budget))
        max_drift = max(max_drift, drift)

    if run_info is not None:
        run_info['final_state'] = state
        run_info['max_norm_drift'] = max_drift
        run_info['work'] = work
        run_info['elapsed'] = time.perf_counter() - t_start

    return series


def smooth_series(series, window):
    '''Centered moving average with the window truncated at the boundaries

    series (sequence of float)
        The values to smooth

    window (int)
        Odd window length

    Returns a numpy array the same length as series.
    '''
    series = np.asarray(series, dtype=float)
    if window == 1:
        return series.copy()

    kernel = np.ones(window)
    total = np.convolve(series, kernel, mode='same')
    count = np.convolve(np.ones(len(series)), kernel, mode='same')
    return total / count


class PeakReport(object):
    '''The first peak of a probability series

    :ivar t_f: Step of the first peak

    :ivar p_f: Raw (unsmoothed) success probability at t_f

    :ivar cost_single: Evolution steps for a single run (t_f)

    :ivar cost_total: Steps including amplitude amplification (t_f / sqrt(p_f))

    :ivar series_max: Maximum of the raw series

    :ivar t_global: Step of the tallest smoothed peak
    '''
    def __init__(self, t_f, p_f, series_max, t_global):
        self.t_f = int(t_f)
        self.p_f = float(p_f)
        self.cost_single = float(self.t_f)
        self.cost_total = self.t_f / math.sqrt(self.p_f)
        self.series_max = float(series_max)
        self.t_global = int(t_global)

    def __repr__(self):
        return 'PeakReport(t_f={}, p_f={})'.format(self.t_f, self.p_f)


def detect_first_peak(series, peak, n_vertices=None):
    '''Locate the first principal lobe of a probability series

    The series is smoothed with a centered moving average. Candidates are the
    local maxima of the smoothed series plus its last sample when still rising.
    A candidate is a lobe when it exceeds the floor and its prominence is at
    least peak.height_fraction of its height. The earliest lobe wins, even when
    later revivals are taller. When no candidate qualifies the tallest one is used.

    t_f is the raw maximum within one smoothing window around the lobe and p_f
    is read from the raw series at t_f.

    series (sequence of float)
        Marked vertex probability for t = 0, 1, ...

    peak (PeakParams)
        Smoothing and gating parameters. An open window is resolved from the
        series length.

    n_vertices (int or None)
        Network size used for the 2/N floor. When None the floor is twice
        the initial probability (which is 1/N for every search method).

    Returns a PeakReport.

    Raises NoPeakError when the series never rises after t = 0 or never
      exceeds the floor.
    Raises DomainError if the series is shorter than the smoothing window.
    '''
    raw = np.asarray(series, dtype=float)
    peak = peak.resolve(len(raw) - 1)
    if len(raw) < max(peak.smooth_window, 2):
        raise DomainError('Series of length {} is too short for a window of {}'.format(len(raw),
            peak.smooth_window))

    smooth = smooth_series(raw, peak.smooth_window)
    floor = 2.0 / n_vertices if n_vertices is not None else 2.0 * raw[0]

    if smooth[-1] > smooth[-2]: # Still rising at the horizon
        smooth = np.append(smooth, smooth[-2])

    candidates = signal.find_peaks(smooth)[0]
    if len(candidates) == 0:
        raise NoPeakError()

    heights = smooth[candidates]
    tallest = int(np.argmax(heights))
    if heights[tallest] <= floor:
        raise NoPeakError('Series never exceeds {:g} (t_max too small or degenerate run)'.format(floor))

    prominences = signal.peak_prominences(smooth, candidates)[0]
    lobes = np.flatnonzero((heights > floor) & (prominences >= peak.height_fraction * heights))
    lobe = candidates[lobes[0]] if len(lobes) > 0 else candidates[tallest]

    half = peak.smooth_window // 2
    lo = max(0, lobe - half)
    t_f = lo + int(np.argmax(raw[lo:lobe + half + 1]))

    p_f = raw[t_f]
    if p_f <= 0.0:
        raise NoPeakError('Zero probability at the first peak (t = {})'.format(t_f))

    return PeakReport(t_f, p_f, raw.max(), candidates[tallest])


class CostRecord(object):
    '''Cost of a search run

    :ivar method: The Method the cost applies to (or None)

    :ivar cost_single: Evolution steps for one run

    :ivar cost_total: Steps including the amplitude amplification overhead

    :ivar repetitions: Estimated repetitions ceil(1 / sqrt(p_f))
    '''
    def __init__(self, method, cost_single, cost_total, repetitions):
        self.method = method
        self.cost_single = cost_single
        self.cost_total = cost_total
        self.repetitions = repetitions

    def __repr__(self):
        return 'CostRecord({}, {}, {})'.format(self.cost_single, self.cost_total, self.repetitions)


def evaluate_cost(report, method=None):
    '''Compute the single run and amplification adjusted costs of a run

    Amplitude amplification is accounted for analytically: boosting a success
    probability p_f to near certainty costs about 1 / sqrt(p_f) repetitions.

    report (PeakReport)
        The first peak of the run

    method (Method or None)
        The method that produced the report

    Returns a CostRecord.
    '''
    boost = 1.0 / math.sqrt(report.p_f)
    return CostRecord(None if method is None else Method(method), float(report.t_f),
                      report.t_f * boost, int(math.ceil(boost)))


def run_search(config, run_info=None):
    '''Run a search and locate its first peak

    Returns a (series, PeakReport) pair.

    Raises NoPeakError if no peak is found. The series is attached to the
      exception as its "series" attribute so it can still be saved.
    '''
    series = run_series(config, run_info)
    try:
        report = detect_first_peak(series, config.peak, config.N)
    except NoPeakError as e:
        e.series = series
        raise

    return series, report


def report_row(config, report=None):
    '''Build a report table row

    config (SearchConfig)
        The run configuration

    report (PeakReport or None)
        The detected peak. Peak columns are left empty when None.

    Returns a dict keyed by the report CSV column names.
    '''
    row = {
        'method': config.method.value,
        'mode': config.edge_mode.value,
        'n': config.n,
        'N': config.N,
        'k0': config.k0,
        'epsilon': config.epsilon,
        'cos_delta': config.cos_delta
    }
    if report is not None:
        row.update(t_f=report.t_f, p_f=report.p_f, cost_single=report.cost_single,
                   cost_total=report.cost_total)
    return row
