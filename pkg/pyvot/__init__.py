#!/usr/bin/env python
#
#   __init__.py
#   pyvot
#
#   Copyright (C) 2026 pyvot developers
#
#   This file is part of pyvot.
#
#   pyvot is free software; you can redistribute it and/or modify it under the
#   terms of the GNU Lesser General Public License as published by the Free
#   Software Foundation; either version 3 of the License, or (at your option)
#   any later version.
#
#   pyvot is distributed in the hope that it will be useful, but WITHOUT ANY
#   WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
#   FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for
#   more details.
#
#   You should have received a copy of the GNU Lesser General Public License
#   along with this library.  If not, see <http://www.gnu.org/licenses/>.
#

"""
A revised simplex solver with a two-variable pivoting rule.

Each iteration may move two nonbasic variables at once: the pair is chosen by
solving a small two-variable linear program, which is done exactly by the slope
method in `pyvot.slope2v`.  Dantzig's rule is available for comparison, and
`pyvot.bench` runs both over Klee-Minty cubes, random problems, Netlib
problems and degenerate cycling examples.

:License:
    pyvot is free software; you can redistribute it and/or modify it under the
    terms of the `GNU Lesser General Public License`_ as published by the `Free
    Software Foundation`_; either version 3 of the License, or (at your option)
    any later version.

    pyvot is distributed in the hope that it will be useful, but **WITHOUT ANY
    WARRANTY**; without even the implied warranty of **MERCHANTABILITY** or
    **FITNESS FOR A PARTICULAR PURPOSE**.  See the `GNU Lesser General Public
    License`_ for more details.

.. _GNU Lesser General Public License: http://www.gnu.org/licenses/lgpl.html
.. _Free Software Foundation: http://fsf.org/
"""

__author__ = 'pyvot developers'
__date__ = 'October 13, 2026'
__all__ = ['bench',
           'config',
           'engine',
           'fixtures',
           'generators',
           'linalg',
           'model',
           'mpsio',
           'pivot',
           'slope2v',
           'timer',
           'solve',
           'SolverOptions',]
__docformat__ = 'reStructuredText'
__version__ = '0.1.0'

from pyvot import timer
from pyvot import model
from pyvot import linalg
from pyvot import slope2v
from pyvot import pivot
from pyvot import engine
from pyvot import generators
from pyvot import mpsio
from pyvot import fixtures
from pyvot import config
from pyvot import bench

from pyvot.engine import solve, SolverOptions
