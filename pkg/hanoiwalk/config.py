#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Manage Hanoiwalk configuration data

Library settings come from an optional hanoiwalk.cfg file installed next to
the package and are then overridden by environment variables. Experiment runs
can additionally be described by flat "key = value" files read with
read_run_config().
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import configparser
import os
import re

from hanoiwalk.errors import TableParseError


class ConfigSettings(object):
    '''Container for general hanoiwalk library settings'''
    def __init__(self):
        self.work_budget = 2.0e11   # Max. amplitude-steps for one run
        self.drift_budget = 1.0e-10 # Max. |norm**2 - 1| tolerated during evolution
        self.jobs = None            # Worker count for sweeps (None: available cores)
        self.config_source = 'defaults'
        self.config_path = 'unknown'

    @property
    def worker_count(self):
        '''The number of sweep workers to use when none is requested explicitly'''
        if self.jobs is not None:
            return self.jobs
        return os.cpu_count() or 1

    def status(self):
        '''Returns a list of strings summarizing the active settings'''
        return [
            'Settings from: {}'.format(self.config_source),
            '  Work budget: {:g} amplitude-steps'.format(self.work_budget),
            '  Drift budget: {:g}'.format(self.drift_budget),
            '  Workers: {}'.format(self.worker_count)
        ]


def _parse_config():
    '''Read the library configuration file if it exists'''
    global settings

    config = configparser.ConfigParser()
    hw_dir = os.path.dirname(os.path.abspath(__file__))
    config_path = os.path.join(hw_dir, 'hanoiwalk.cfg')
    config.read(config_path)

    settings.config_path = config_path

    if 'limits' in config.sections():
        settings.work_budget = config.getfloat('limits', 'work_budget', fallback=settings.work_budget)
        settings.drift_budget = config.getfloat('limits', 'drift_budget', fallback=settings.drift_budget)
        if config.has_option('limits', 'jobs'):
            settings.jobs = config.getint('limits', 'jobs')
        settings.config_source = config_path


def _apply_env():
    '''Override settings from HANOIWALK_* environment variables'''
    env_map = (
        ('HANOIWALK_WORK_BUDGET', 'work_budget', float),
        ('HANOIWALK_DRIFT_BUDGET', 'drift_budget', float),
        ('HANOIWALK_JOBS', 'jobs', int)
    )

    for var, attr, conv in env_map:
        val = os.getenv(var)
        if val is None:
            continue
        try:
            setattr(settings, attr, conv(val))
        except ValueError:
            raise ValueError('Invalid value for {}: "{}"'.format(var, val))
        settings.config_source = 'environment'


_RUN_SECTION = 'run'

def read_run_config(fname):
    '''Read a flat run configuration file

    The file holds one "key = value" pair per line. Blank lines and lines
    starting with "#" or ";" are ignored. Keys are case-insensitive and a "-"
    in a key is treated as "_" so that flag names can be used verbatim.

    fname (string)
        The file to read

    Returns a dict mapping each key to a (value string, line number) pair.

    Raises TableParseError if the file cannot be parsed.
    '''
    with open(fname, 'r') as fh:
        text = fh.read()

    config = configparser.ConfigParser(interpolation=None, delimiters=('=',))
    try:
        config.read_string('[{}]\n{}'.format(_RUN_SECTION, text), source=fname)
    except configparser.DuplicateOptionError as e:
        raise TableParseError('Duplicate key "{}"'.format(e.option), e.lineno - 1, fname)
    except configparser.ParsingError as e:
        lineno = e.errors[0][0] - 1 if e.errors else None
        raise TableParseError('Expected "key = value"', lineno, fname)
    except configparser.Error as e:
        raise TableParseError(str(e), None, fname)

    # configparser doesn't track line numbers for options so find them here
    line_nums = {}
    for i, line in enumerate(text.splitlines(), 1):
        m = re.match(r'\s*([^=#;\s][^=]*?)\s*=', line)
        if m:
            line_nums.setdefault(m.group(1).lower(), i)

    values = {}
    for key, val in config.items(_RUN_SECTION):
        values[key.replace('-', '_')] = (val.strip(), line_nums.get(key))

    return values


# Parse settings when this module loads

settings = ConfigSettings()
_parse_config()
_apply_env()
