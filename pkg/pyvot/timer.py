#!/usr/bin/env python
#
#   timer.py
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

"""Timing utilities"""

import time

__author__ = 'pyvot developers'
__date__ = 'October 6, 2026'
__all__ = ['Stopwatch',]
__docformat__ = 'reStructuredText'

class Stopwatch(object):
    """
    Accumulating wall-clock stopwatch on a monotonic clock.

    Can be used as a context manager::

        watch = Stopwatch()
        with watch:
            result = solve(lp)
        print(watch.elapsedMs)

    :IVariables:
        clock : function
            Zero-argument function returning seconds
        elapsed : float
            Accumulated seconds from finished intervals
    """
    def __init__(self, clock=None):
        """
        Initializes the stopwatch.

        :Parameters:
            clock : function
                Time source, ``time.perf_counter`` by default
        """
        if clock is None:
            clock = time.perf_counter
        self.clock = clock
        self.reset()

    def reset(self):
        """Stops the stopwatch and clears the accumulated time."""
        self.elapsed = 0.0
        self._started = None

    @property
    def running(self):
        return self._started is not None

    def start(self):
        """
        Starts a new interval.

        :Raises RuntimeError: If the stopwatch is already running.
        """
        if self.running:
            raise RuntimeError("Stopwatch already running")
        self._started = self.clock()

    def stop(self):
        """
        Ends the current interval.

        :Returns: Total accumulated seconds
        :ReturnType: float
        """
        if not self.running:
            raise RuntimeError("Stopwatch is not running")
        self.elapsed += self.clock() - self._started
        self._started = None
        return self.elapsed

    def read(self):
        """Returns accumulated seconds, including a running interval."""
        if self.running:
            return self.elapsed + (self.clock() - self._started)
        return self.elapsed

    @property
    def elapsedMs(self):
        return self.read() * 1000.0

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, excType, excValue, traceback):
        self.stop()
        return False
