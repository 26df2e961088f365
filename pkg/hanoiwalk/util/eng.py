#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Engineering unit string formatting
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import math


si_prefixes = {
    12:  'T',
    9:   'G',
    6:   'M',
    3:   'k',
    0:   '',
    -3:  'm',
    -6:  'u',
    -9:  'n',
    -12: 'p'
}


def to_eng(f):
    '''Split a number into a mantissa and an exponent that is a multiple of 3

    f (number)
        The number to convert

    Returns a (float, int) pair (mantissa, exponent) with 1 <= |mantissa| < 1000.
      Zero is returned as (0.0, 0).
    '''
    if f == 0:
        return 0.0, 0

    e_exp = 3 * int(math.floor(math.log10(abs(f)) / 3))
    return f / 10.0 ** e_exp, e_exp


def eng_si(f, units='', frac_digits=3, unit_sep=' '):
    '''Create an engineering formatted string with SI prefixes

    f (number)
        The number to format

    units (string)
        Unit symbol appended after the SI prefix

    frac_digits (int)
        The number of fractional digits to display

    unit_sep (string)
        The separator between the number and the units

    Returns a string such as "12.300 ms".

    Raises ValueError if frac_digits is negative.
    '''
    if frac_digits < 0:
        raise ValueError('frac_digits must be a positive integer')

    e_num, e_exp = to_eng(f)
    digits = '{0:.{1}f}'.format(e_num, frac_digits)
    if e_exp in si_prefixes:
        return digits + unit_sep + si_prefixes[e_exp] + units

    return '{}e{}{}{}'.format(digits, e_exp, unit_sep, units)
