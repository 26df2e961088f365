#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Colorized console messages

Colors are applied with colorama when it is installed. Set the NO_COLOR
environment variable to disable them. Redirected output is never colorized.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

import os
import sys

try:
    import colorama
    from colorama import Fore, Style

except ImportError:
    colorama = None


def _truthy(val):
    return val.lower() in ('1', 'true', 't', 'y', 'yes')


def _use_color(stream):
    if colorama is None or _truthy(os.getenv('NO_COLOR', 'false')):
        return False
    try:
        return stream.isatty()
    except (AttributeError, ValueError):
        return False


if colorama is not None:
    colorama.init()

    _styles = {
        'note': Fore.BLUE,
        'success': Fore.GREEN,
        'warn': Fore.YELLOW + Style.BRIGHT,
        'error': Fore.RED + Style.BRIGHT
    }
else:
    _styles = {}


def colorize(t, kind, stream=None):
    '''Wrap text in the color codes for a message kind

    t (string)
        The text to colorize

    kind (string)
        One of 'note', 'success', 'warn', or 'error'

    stream (file-like or None)
        The stream the text is destined for. Defaults to sys.stdout.

    Returns the (possibly) colorized string.
    '''
    stream = sys.stdout if stream is None else stream
    if not _use_color(stream) or kind not in _styles:
        return t

    return ''.join([_styles[kind], t, Style.RESET_ALL])


def note(t):
    return colorize(t, 'note')

def success(t):
    return colorize(t, 'success')

def warn(t):
    return colorize(t, 'warn', sys.stderr)

def error(t):
    return colorize(t, 'error', sys.stderr)
