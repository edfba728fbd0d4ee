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

"""Run all tests."""

import unittest

from tests import (acceptancetest, benchtest, configtest, enginetest,
                   fixturestest, generatorstest, linalgtest, modeltest,
                   mpsiotest, pivottest, slopetest, timertest)

__author__ = 'pyvot developers'
__date__ = 'October 17, 2026'
__all__ = ['acceptancetest',
           'benchtest',
           'configtest',
           'enginetest',
           'fixturestest',
           'generatorstest',
           'linalgtest',
           'modeltest',
           'mpsiotest',
           'pivottest',
           'slopetest',
           'timertest',
           'test_suite',
           'load_tests',]

test_suite = unittest.TestSuite([modeltest.test_suite,
                                 linalgtest.test_suite,
                                 slopetest.test_suite,
                                 pivottest.test_suite,
                                 enginetest.test_suite,
                                 generatorstest.test_suite,
                                 mpsiotest.test_suite,
                                 fixturestest.test_suite,
                                 configtest.test_suite,
                                 timertest.test_suite,
                                 benchtest.test_suite,
                                 acceptancetest.test_suite,])

def load_tests(loader, tests, pattern):
    return test_suite

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
