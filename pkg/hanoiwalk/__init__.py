#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Hanoiwalk quantum search simulator

Coined quantum walk search on degree-4 Hanoi networks
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

__version__ = '1.0.0'

import hanoiwalk.config
import hanoiwalk.errors
import hanoiwalk.topology
import hanoiwalk.walker
import hanoiwalk.search
import hanoiwalk.analysis
