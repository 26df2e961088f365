#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Hanoiwalk quantum search simulator
   Experiment command line
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import argparse
import datetime
import os
import sys
import time

import hanoiwalk
import hanoiwalk.analysis as analysis
from hanoiwalk.config import read_run_config
from hanoiwalk.errors import DomainError, NoPeakError, TableParseError, WalkError
import hanoiwalk.io.tables as tables
import hanoiwalk.search as search
import hanoiwalk.topology as topology
import hanoiwalk.util.eng as eng
from hanoiwalk.util.color import note, success, warn, error
import hanoiwalk.walker as walker


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NO_PEAK = 3

COMMANDS = ('topology', 'run', 'sweep', 'fit')


def network_exponent(s):
    '''argparse type for the network size exponent'''
    try:
        return topology.check_n(int(s))
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError('n must be an integer >= 2 (got "{}")'.format(s))


def int_grid(s):
    '''Parse "a..b" (inclusive) or "a,b,c" into a list of int'''
    try:
        if '..' in s:
            lo, hi = s.split('..')
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in s.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('Invalid integer grid "{}"'.format(s))


def float_grid(s):
    '''Parse "a,b,c" into a list of float'''
    try:
        return [float(x) for x in s.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('Invalid number grid "{}"'.format(s))


def _add_search_options(p):
    p.add_argument('--method', choices=[m.value for m in search.Method], default='modified',
        help='Search method')
    p.add_argument('--k0', type=int, default=search.DEFAULT_K0, help='Marked vertex')
    p.add_argument('--epsilon', type=float, help='Coin parameter in (0, 2]')
    p.add_argument('--cos-delta', type=float, help="Explicit cos(delta) for Tulsi's method")
    p.add_argument('--c', type=float, help='Scale for the Tulsi delta rule')
    p.add_argument('--delta-rule', choices=['inv_log', 'inv_sqrt_log'], default='inv_log',
        help='Rule deriving cos(delta) from N')
    p.add_argument('--tmax', type=int, help='Number of steps (default ceil(6 N^0.75))')
    p.add_argument('--window', type=int, help='Peak smoothing window (odd)')
    p.add_argument('--height-fraction', type=float, default=search.DEFAULT_HEIGHT_FRACTION,
        help='Minimum prominence of the first lobe relative to its height')


def build_parser():
    '''Create the argument parser with all subcommands'''
    parser = argparse.ArgumentParser(prog='hanoi_search',
        description='Quantum walk search on degree-4 Hanoi networks')

    parser.add_argument('--mode', choices=[m.value for m in topology.EdgeMode], default='paired',
        help='Level edge interpretation')
    parser.add_argument('--jobs', type=int, help='Worker processes for sweeps (default: all cores)')
    parser.add_argument('--out-dir', default='.', help='Output directory')
    parser.add_argument('--config', help='Read "key = value" defaults from FILE')
    parser.add_argument('--dump-state', help='Write the final state of a run to FILE')
    parser.add_argument('-q', '--quiet', action='store_true', default=False,
        help='Suppress informational output')
    parser.add_argument('--version', action='version', version='%(prog)s ' + hanoiwalk.__version__)

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('topology', help='Export the edge list of a network')
    p.add_argument('--n', type=network_exponent, required=True, help='Network size exponent (N = 2^n)')
    p.add_argument('--stats', action='store_true', default=False, help='Print diameter and mean distance')
    p.add_argument('--out', help='Edge CSV file')

    p = sub.add_parser('run', help='Run a single search')
    p.add_argument('--n', type=network_exponent, required=True, help='Network size exponent (N = 2^n)')
    _add_search_options(p)
    p.add_argument('--out', help='Series CSV file (the report goes to *_report.csv)')

    p = sub.add_parser('sweep', help='Sweep one parameter')
    p.add_argument('--variable', choices=[v.value for v in analysis.SweepVariable], required=True,
        help='Parameter to sweep')
    p.add_argument('--n', type=network_exponent, default=9, help='Fixed network size exponent')
    _add_search_options(p)
    p.add_argument('--n-range', type=int_grid, help='SIZE grid as "lo..hi" or a comma list')
    p.add_argument('--epsilon-grid', type=float_grid, help='EPSILON grid as a comma list')
    p.add_argument('--c-grid', type=float_grid, help='DELTA grid of Tulsi scales')
    p.add_argument('--k0-grid', type=int_grid, help='TARGET grid of marked vertices')
    p.add_argument('--out', help='Sweep CSV file')

    p = sub.add_parser('fit', help='Fit a power law to a table')
    p.add_argument('table', help='Sweep or report CSV to read')
    p.add_argument('--x', default='N', help='Independent column')
    p.add_argument('--y', default='cost_single', help='Dependent column')
    p.add_argument('--min-x', type=float, help='Exclude rows below this x (default 32 for x = N)')
    p.add_argument('--out', help='Fit CSV file')

    parser.command_parsers = sub.choices
    return parser


def _actions(parser):
    return {a.dest: a for a in parser._actions if a.dest not in ('help', 'version')}


def _convert(action, val, line, fname):
    if action.nargs == 0: # Flags
        return val.lower() in ('1', 'true', 'yes', 'on')
    try:
        conv = action.type(val) if action.type is not None else val
    except (argparse.ArgumentTypeError, ValueError) as e:
        raise TableParseError(str(e), line, fname)
    if action.choices is not None and conv not in action.choices:
        raise TableParseError('"{}" is not one of {}'.format(val, ', '.join(action.choices)), line, fname)
    return conv


def apply_config_file(parser, argv):
    '''Load defaults from the file named by --config

    Flags given on the command line take precedence over file values.
    Raises TableParseError for unknown keys or invalid values.
    '''
    # Required subcommand options may come from the file so only --config is parsed here
    pre_parser = argparse.ArgumentParser(add_help=False)
    pre_parser.add_argument('--config')
    pre, rest = pre_parser.parse_known_args(argv)

    command = next((a for a in rest if a in COMMANDS), None)
    if pre.config is None or command is None:
        return

    values = read_run_config(pre.config)

    sub_parser = parser.command_parsers[command]
    top_actions = _actions(parser)
    sub_actions = _actions(sub_parser)

    top_defaults = {}
    sub_defaults = {}
    for key, (val, line) in sorted(values.items()):
        if key in sub_actions:
            sub_defaults[key] = _convert(sub_actions[key], val, line, pre.config)
        elif key in top_actions and key not in ('config', 'command'):
            top_defaults[key] = _convert(top_actions[key], val, line, pre.config)
        else:
            raise TableParseError('Unknown key "{}" for command "{}"'.format(key, command),
                line, pre.config)

    # Required options satisfied by the file
    for key in sub_defaults:
        sub_actions[key].required = False

    parser.set_defaults(**top_defaults)
    sub_parser.set_defaults(**sub_defaults)


def main(argv=None):
    '''Entry point for script'''
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv

    try:
        apply_config_file(parser, argv)
        options = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    except TableParseError as e:
        print(error('Config error: {}'.format(e)), file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(error('Unable to read config: {}'.format(e)), file=sys.stderr)
        return EXIT_USAGE

    try:
        os.makedirs(options.out_dir, exist_ok=True)

        started = datetime.datetime.now().isoformat(timespec='seconds')
        t_start = time.perf_counter()

        status, outputs = globals()['cmd_' + options.command](options) # Call the command routine

        params = {k: v for k, v in vars(options).items() if k not in ('quiet', 'command')}
        tables.append_manifest(options.out_dir, options.command, hanoiwalk.__version__, params,
                               outputs, started, time.perf_counter() - t_start)
        return status

    except DomainError as e:
        print(error('Invalid parameter: {}'.format(e)), file=sys.stderr)
        return EXIT_USAGE
    except NoPeakError as e:
        print(error(str(e)), file=sys.stderr)
        return EXIT_NO_PEAK
    except (WalkError, OSError) as e:
        print(error('Error: {}'.format(e)), file=sys.stderr)
        return EXIT_FAILURE


def _say(options, msg=''):
    if not options.quiet:
        print(msg)


def _out_path(options, default_name):
    if options.out is not None:
        return options.out
    return os.path.join(options.out_dir, default_name)


def cmd_topology(options):
    topo = topology.get_topology(options.n, options.mode)
    edges = topology.dump_edges(topo)

    fname = _out_path(options, 'edges_{}_n{}.csv'.format(topo.edge_mode.value, topo.n))
    tables.write_edges(fname, edges)

    loops = sum(1 for e in edges if e[2] == topology.EdgeClass.LOOP)
    _say(options, note('HN4 {} network, N = {}'.format(topo.edge_mode.value, topo.N)))
    _say(options, '  {} edges ({} loops)'.format(len(edges), loops))

    if options.stats:
        diameter, mean_dist = topology.distance_stats(topo)
        _say(options, '  Diameter: {}'.format(diameter))
        _say(options, '  Mean distance: {:.4f}'.format(mean_dist))

    _say(options, success('Wrote {}'.format(fname)))
    return EXIT_OK, [fname]


def _tulsi_params(options):
    if options.cos_delta is not None:
        return walker.TulsiParams.from_cos(options.cos_delta)
    if options.c is not None or options.method == search.Method.TULSI.value:
        return walker.TulsiParams(rule=options.delta_rule, c=1.0 if options.c is None else options.c)
    return None


def _peak_params(options):
    if options.window is None and options.height_fraction == search.DEFAULT_HEIGHT_FRACTION:
        return None
    # An open window is resolved against the t_max of each run
    return search.PeakParams(options.window, options.height_fraction)


def cmd_run(options):
    config = search.make_config(options.method, options.n, k0=options.k0, epsilon=options.epsilon,
        tulsi=_tulsi_params(options), t_max=options.tmax, edge_mode=options.mode,
        peak=_peak_params(options))

    _say(options, note('Running {}'.format(config)))

    series_file = _out_path(options, 'series_{}_{}_n{}_k{}.csv'.format(config.method.value,
        config.edge_mode.value, config.n, config.k0))
    report_file = os.path.splitext(series_file)[0] + '_report.csv'
    outputs = [series_file]

    run_info = {}
    status = EXIT_OK
    try:
        series, report = search.run_search(config, run_info)
    except NoPeakError as e:
        series, report = e.series, None
        print(error(str(e)), file=sys.stderr)
        status = EXIT_NO_PEAK

    tables.write_series(series_file, series)

    if report is not None:
        tables.write_table(report_file, tables.REPORT_HEADER, [search.report_row(config, report)])
        outputs.append(report_file)

    if options.dump_state is not None:
        walker.dump_state(run_info['final_state'], options.dump_state)
        outputs.append(options.dump_state)

    _say(options, '  Elapsed: {}'.format(eng.eng_si(run_info['elapsed'], 's')))
    _say(options, '  Max norm drift: {:.3g}'.format(run_info['max_norm_drift']))

    if report is not None:
        cost = search.evaluate_cost(report, config.method)
        _say(options, '  t_f = {}, p_f = {:.6g}'.format(report.t_f, report.p_f))
        _say(options, '  Cost: {:g} single, {:.6g} with amplification ({} repetitions)'.format(
            cost.cost_single, cost.cost_total, cost.repetitions))

    _say(options, success('Wrote {}'.format(', '.join(outputs))))
    return status, outputs


def cmd_sweep(options):
    if options.dump_state is not None:
        print(warn('--dump-state only applies to the run command'), file=sys.stderr)

    tulsi = _tulsi_params(options)
    if options.variable == analysis.SweepVariable.DELTA.value and options.cos_delta is not None:
        raise DomainError('A delta sweep varies the Tulsi scale; drop --cos-delta')

    spec = analysis.SweepSpec(options.variable, options.method, n=options.n, k0=options.k0,
        epsilon=options.epsilon, tulsi=tulsi, edge_mode=options.mode, t_max=options.tmax,
        peak=_peak_params(options), n_range=options.n_range, epsilon_grid=options.epsilon_grid,
        c_grid=options.c_grid, k0_grid=options.k0_grid)

    _say(options, note('Sweeping {} over {} points'.format(spec.variable.value, len(spec.grid))))

    def progress(done, total, row):
        flag = '' if row['status'] == 'ok' else '  ({})'.format(row['status'])
        _say(options, '  [{}/{}] {} = {}{}'.format(done, total, row['sweep_variable'], row['value'], flag))

    t_start = time.perf_counter()
    rows = analysis.sweep(spec, jobs=options.jobs, progress=progress)

    fname = _out_path(options, 'sweep_{}_{}_{}.csv'.format(spec.variable.value, spec.method.value,
        spec.edge_mode.value))
    tables.write_table(fname, tables.SWEEP_HEADER, rows)

    _say(options, '  Elapsed: {}'.format(eng.eng_si(time.perf_counter() - t_start, 's')))

    failed = sum(1 for r in rows if r['status'] != 'ok')
    try:
        best = analysis.best_row(rows)
        _say(options, '  Lowest total cost at {} = {} ({:.6g})'.format(spec.variable.value,
            best['value'], best['cost_total']))
    except DomainError:
        pass

    if failed:
        print(warn('{} of {} points had no detectable peak'.format(failed, len(rows))), file=sys.stderr)
        return EXIT_NO_PEAK, [fname]

    _say(options, success('Wrote {}'.format(fname)))
    return EXIT_OK, [fname]


def cmd_fit(options):
    if options.dump_state is not None:
        print(warn('--dump-state only applies to the run command'), file=sys.stderr)

    rows = tables.read_table(options.table, required=(options.x, options.y))

    min_x = options.min_x
    if min_x is None and options.x == 'N':
        min_x = analysis.DEFAULT_MIN_N

    fit = analysis.fit_table(rows, options.x, options.y, min_x, fname=options.table)

    fname = _out_path(options, 'fit_{}_{}.csv'.format(options.y, options.x))
    tables.write_fit(fname, fit)

    _say(options, note('{} = {:.4g} * {}^{:.4f}'.format(options.y, fit.prefactor, options.x, fit.exponent)))
    _say(options, '  r^2 = {:.6f} over {} points'.format(fit.r_squared, fit.points_used))
    if options.y == 'p_f' and options.x == 'N':
        _say(options, '  Amplification repetitions ~ N^{:.4f}'.format(analysis.repetitions_exponent(fit)))

    _say(options, success('Wrote {}'.format(fname)))
    return EXIT_OK, [fname]


if __name__ == '__main__':
    sys.exit(main())
