#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Exception classes shared by all Hanoiwalk modules
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)


class WalkError(RuntimeError):
    '''Base class for all Hanoiwalk errors'''
    pass


class DomainError(WalkError, ValueError):
    '''A parameter is outside of its valid domain'''
    pass


class NoFactorizationError(DomainError):
    '''Vertex 0 has no (level, index) decomposition'''
    def __init__(self, msg='Vertex 0 has no level decomposition; treat it as the loop root'):
        DomainError.__init__(self, msg)


class ResourceError(WalkError):
    '''A run would exceed the configured work budget'''
    pass


class NormDriftError(WalkError):
    '''The state norm drifted beyond the allowed budget'''
    pass


class NoPeakError(WalkError):
    '''No first maximum could be located in a probability series'''
    def __init__(self, msg='No peak found in probability series (t_max too small or degenerate run)'):
        WalkError.__init__(self, msg)


class TableParseError(WalkError):
    '''Malformed CSV table or configuration file

    :ivar line: The 1-based line number where the problem was found (or None)
    '''
    def __init__(self, msg, line=None, fname=None):
        self.line = line
        self.fname = fname
        loc = []
        if fname is not None:
            loc.append(str(fname))
        if line is not None:
            loc.append('line {}'.format(line))

        if loc:
            msg = '{}: {}'.format(', '.join(loc), msg)
        WalkError.__init__(self, msg)
