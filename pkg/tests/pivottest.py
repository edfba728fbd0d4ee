#!/usr/bin/env python
#
#   pivottest.py
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

import unittest

import numpy as np

from pyvot import linalg
from pyvot.model import BasisPartition, StandardFormLP
from pyvot.pivot import *

__author__ = 'pyvot developers'
__date__ = 'October 15, 2026'
__all__ = ['PricingTestCase',
           'EnteringTestCase',
           'RatioTestCase',
           'LongestStepTestCase',
           'test_suite',]

class _Basis(object):
    """Bare state holding a partition and its factors."""
    def __init__(self, lp, basic):
        self.partition = BasisPartition(basic, lp.numCols)
        self.factors = linalg.luFactor(lp.columns(basic))

class PricingTestCase(unittest.TestCase):
    def testSlackBasis(self):
        """With A_B = I and c_B = 0 reduced costs are c_N"""
        lp = StandardFormLP([[1.0, 2.0, 1.0, 0.0], [3.0, 4.0, 0.0, 1.0]],
                            [1, 1], [-1.0, 2.0, 0.0, 0.0])
        state = _Basis(lp, [2, 3])
        self.assertTrue(np.array_equal(simplexMultipliers(state, lp),
                                       [0.0, 0.0]))
        self.assertTrue(np.allclose(reducedCosts(state, lp), [-1.0, 2.0]))

    def testDuplicateColumn(self):
        """A copy of a basic column prices to zero"""
        lp = StandardFormLP([[2.0, 1.0, 2.0], [1.0, 3.0, 1.0]], [1, 1],
                            [5.0, -1.0, 5.0])
        state = _Basis(lp, [0, 1])
        costs = reducedCosts(state, lp)
        self.assertEqual(state.partition.nonbasic, [2])
        self.assertAlmostEqual(costs[0], 0.0)

    def testMultipliers(self):
        """Multipliers solve the transposed system"""
        lp = StandardFormLP([[1.0, 2.0, 1.0], [0.0, 3.0, 1.0]], [1, 1],
                            [1.0, 5.0, 0.0])
        state = _Basis(lp, [0, 1])
        self.assertTrue(np.allclose(simplexMultipliers(state, lp),
                                    [1.0, 1.0]))
        self.assertTrue(np.allclose(reducedCosts(state, lp), [-2.0]))

class EnteringTestCase(unittest.TestCase):
    def testDantzig(self):
        """Most negative wins, lowest slot on ties"""
        self.assertEqual(dantzigEntering([0.5, -2.0, -2.0, -0.1]), 1)
        self.assertIsNone(dantzigEntering([0.0, 0.3]))
        self.assertIsNone(dantzigEntering([-1e-13]))
        self.assertIsNone(dantzigEntering([]))

    def testBland(self):
        """First improving slot wins regardless of size"""
        self.assertEqual(blandEntering([-0.1, -5.0]), 0)
        self.assertIsNone(blandEntering([0.0, 1.0, 2.0]))
        self.assertIsNone(blandEntering([0.0, -1e-12]))

    def testBlandKeys(self):
        """Keys order the candidates"""
        self.assertEqual(blandEntering([-1.0, -2.0, -3.0], keys=[5, 2, 9]),
                         1)
        self.assertEqual(blandEntering([-1.0, 2.0, -3.0], keys=[5, 2, 9]),
                         0)

    def testCandidateSet(self):
        """Candidates are below minus the tolerance"""
        costs = [-1.0, -1e-10, 0.0, -3.0, 2.0]
        self.assertEqual(candidateSet(costs).tolist(), [0, 3])
        self.assertEqual(candidateSet(costs, 1e-11).tolist(), [0, 1, 3])

class RatioTestCase(unittest.TestCase):
    def testMinimum(self):
        """Smallest ratio over positive entries"""
        outcome = ratioTest([6.0, 3.0, 2.0], [2.0, 0.0, -1.0])
        self.assertEqual(outcome.leavingSlot, 0)
        self.assertEqual(outcome.step, 3.0)
        self.assertFalse(outcome.unbounded)

    def testTie(self):
        """Ties go to the lowest row"""
        outcome = ratioTest([4.0, 4.0], [2.0, 2.0])
        self.assertEqual(outcome.leavingSlot, 0)
        self.assertEqual(outcome.step, 2.0)

    def testTieKeys(self):
        """Ties go to the smallest key when keys are given"""
        outcome = ratioTest([4.0, 4.0], [2.0, 2.0], keys=[7, 3])
        self.assertEqual(outcome.leavingSlot, 1)

    def testUnbounded(self):
        """No positive entry means no leaving row"""
        outcome = ratioTest([1.0, 2.0], [0.0, -1.0])
        self.assertTrue(outcome.unbounded)
        self.assertIsNone(outcome.leavingSlot)
        self.assertEqual(outcome.step, float('inf'))

    def testPivotTolerance(self):
        """Tiny entries are not eligible"""
        outcome = ratioTest([1.0, 5.0], [1e-12, 1.0])
        self.assertEqual(outcome.leavingSlot, 1)
        self.assertEqual(outcome.step, 5.0)

    def testDegenerate(self):
        """A zero basic value gives a zero step"""
        outcome = ratioTest([0.0, 5.0], [1.0, 1.0])
        self.assertEqual(outcome.leavingSlot, 0)
        self.assertEqual(outcome.step, 0.0)

class LongestStepTestCase(unittest.TestCase):
    def setUp(self):
        self.lp = StandardFormLP([[1.0, 0.0, 1.0, 0.0],
                                  [0.0, 1.0, 0.0, 1.0]],
                                 [1.0, 5.0], [0.0, 0.0, -1.0, -1.0])
        self.factors = linalg.luFactor(np.eye(2))

    def testLongest(self):
        """The candidate that can move furthest wins"""
        ctx = PivotContext([-1.0, -1.0], [1.0, 5.0], [2, 3])
        slot, outcome = longestStepEntering(ctx, -1, self.lp, self.factors)
        self.assertEqual(slot, 1)
        self.assertEqual(outcome.step, 5.0)
        self.assertEqual(outcome.leavingSlot, 1)

    def testExclude(self):
        """The excluded slot is skipped"""
        ctx = PivotContext([-1.0, -1.0], [1.0, 5.0], [2, 3])
        slot, outcome = longestStepEntering(ctx, 1, self.lp, self.factors)
        self.assertEqual(slot, 0)
        self.assertEqual(outcome.step, 1.0)
        self.assertIsNone(longestStepEntering(
            PivotContext([-1.0, 1.0], [1.0, 5.0], [2, 3]), 0, self.lp,
            self.factors))

    def testFilter(self):
        """Candidates well above the minimum are dropped"""
        ctx = PivotContext([-10.0, -0.5], [1.0, 5.0], [2, 3],
                           filterThreshold=0)
        self.assertEqual(ctx.filtered().tolist(), [0])
        self.assertIsNone(longestStepEntering(ctx, 0, self.lp,
                                              self.factors))

    def testFilterDisabled(self):
        """Without a fraction every candidate stays"""
        ctx = PivotContext([-10.0, -0.5], [1.0, 5.0], [2, 3],
                           filterFraction=None, filterThreshold=0)
        self.assertEqual(ctx.filtered().tolist(), [0, 1])

    def testFilterThreshold(self):
        """Small candidate sets are not filtered"""
        ctx = PivotContext([-10.0, -0.5], [1.0, 5.0], [2, 3])
        self.assertEqual(ctx.filtered().tolist(), [0, 1])

    def testManyCandidates(self):
        """Above the threshold the filter applies"""
        costs = -np.ones(60)
        costs[0] = -100.0
        ctx = PivotContext(costs, np.ones(2), np.arange(60))
        self.assertEqual(ctx.filtered().tolist(), [0])

_loader = unittest.TestLoader()
test_suite = unittest.TestSuite([
    _loader.loadTestsFromTestCase(PricingTestCase),
    _loader.loadTestsFromTestCase(EnteringTestCase),
    _loader.loadTestsFromTestCase(RatioTestCase),
    _loader.loadTestsFromTestCase(LongestStepTestCase),])

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
