#!/usr/bin/env python
#
#   slopetest.py
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

import math
import unittest

import numpy as np

from pyvot.slope2v import *
from tests import oracles

__author__ = 'pyvot developers'
__date__ = 'October 15, 2026'
__all__ = ['SlopeValueTestCase',
           'UnboundedTestCase',
           'SlopeSolveTestCase',
           'OracleTestCase',
           'test_suite',]

def structural(rows, rhs, cost):
    return TwoVarLP.fromStructural(np.array(rows, dtype=float).reshape(-1, 2),
                                   rhs, cost)

def checkCertificate(test, problem, result, msg=''):
    """
    Check that the basis rows are tight at ``result.x``, that the cost lies
    in their cone and that their slope values bracket the cost's.
    """
    j, k = result.basisRows
    rows, rhs, cost = problem.rows, problem.rhs, problem.cost
    for row in (j, k):
        gap = abs(rows[row].dot(result.x) - rhs[row])
        scale = 1.0 + abs(rhs[row]) + np.abs(rows[row]).dot(np.abs(result.x))
        test.assertLessEqual(gap, 1e-8 * scale,
                             "Basis row %d is not tight%s" % (row, msg))
    weights = np.linalg.solve(np.array([rows[j], rows[k]]).T, cost)
    test.assertTrue(np.all(weights >= -1e-9 * (1.0 + np.abs(weights).max())),
                    "Cost %r outside the cone of rows %d, %d%s" %
                    (tuple(cost), j, k, msg))
    low, high = sorted([result.alpha[j], result.alpha[k]])
    target = computeAlpha(cost, result.bigM)
    slack = 1e-9 * result.bigM
    test.assertTrue(low <= target + slack and target <= high + slack,
                    "Slope %g not within [%g, %g]%s" %
                    (target, low, high, msg))

class SlopeValueTestCase(unittest.TestCase):
    def testBigM(self):
        """Offset is one more than the largest ratio"""
        bigM, m1, m2 = computeBigM(structural([[1, 2]], [1], [1, 1]))
        self.assertEqual(m1, 0.5)
        self.assertEqual(m2, 2.0)
        self.assertEqual(bigM, 3.0)

    def testBigMCostRatio(self):
        """A steep cost raises the offset"""
        bigM = computeBigM(structural([[1, 1]], [1], [1, 9]))[0]
        self.assertEqual(bigM, 10.0)

    def testAlphaTable(self):
        """Every sign pattern maps to its slope value"""
        cases = [((2, 1), 0.5),
                 ((0, -3), -20.0),
                 ((-1, 2), 10.5),
                 ((0, 0), 30.0),
                 ((-1, -1), 30.0),
                 ((1, -2), -12.0),
                 ((3, 0), -10.0),
                 ((0, 4), 10.0),
                 ((-2, 0), 20.0),]
        for row, expected in cases:
            self.assertEqual(computeAlpha(row, 10.0), expected,
                             "Wrong slope value for row %r" % (row,))

    def testAlphaOrder(self):
        """Slope values increase counterclockwise from (0, -1)"""
        rows = [(0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0)]
        values = [computeAlpha(row, 5.0) for row in rows]
        self.assertEqual(values, sorted(values))
        self.assertEqual(len(set(values)), len(values))

    def testAlphaOrderRandom(self):
        """Slope values follow the angle measured counterclockwise from
        (0, -1)"""
        rng = np.random.default_rng(20261017)
        for trial in range(200):
            rows = rng.uniform(-1.0, 1.0, size=(12, 2))
            rows[rng.random(size=rows.shape) < 0.2] = 0.0
            problem = structural(rows, np.ones(12), [1, 1])
            bigM = computeBigM(problem)[0]
            live = [row for row in problem.rows
                    if not ((row[0] < 0 and row[1] < 0) or not row.any())]
            angles = [(math.atan2(row[1], row[0]) + math.pi / 2) %
                      (2 * math.pi) for row in live]
            values = [computeAlpha(row, bigM) for row in live]
            ranked = sorted(zip(angles, values))
            for (angle1, value1), (angle2, value2) in zip(ranked, ranked[1:]):
                if angle2 - angle1 > 1e-12:
                    self.assertLess(value1, value2,
                                    "Order broken on trial %d" % trial)
                else:
                    self.assertAlmostEqual(value1, value2, places=9)
            self.assertTrue(all(value < 2.5 * bigM for value in values))

class UnboundedTestCase(unittest.TestCase):
    def testWholeQuadrant(self):
        """Only the axes bracket the cost"""
        self.assertTrue(isUnbounded((0, -1), (-1, 0)))

    def testBox(self):
        """A box is bounded"""
        self.assertFalse(isUnbounded((1, 0), (0, 1)))

    def testOpeningWedge(self):
        """Rows opening towards the cost are unbounded"""
        self.assertTrue(isUnbounded((1, -2), (-1, 1)))
        problem = structural([[1, -2], [-1, 1]], [1, 4], [1, 1])
        self.assertEqual(oracles.twoVarOracle(problem)[0], 'unbounded')
        self.assertEqual(slopeSolve(problem).status, UNBOUNDED)

    def testClosingWedge(self):
        """Rows closing against the cost are bounded"""
        self.assertFalse(isUnbounded((1, -1), (-1, 2)))
        problem = structural([[1, -1], [-1, 2]], [1, 4], [1, 1])
        status, best = oracles.twoVarOracle(problem)
        self.assertEqual(status, 'optimal')
        result = slopeSolve(problem)
        self.assertEqual(result.status, OPTIMAL)
        self.assertAlmostEqual(result.objective, best)
        self.assertTrue(np.allclose(result.x, [6.0, 5.0]))

    def testAxisPairs(self):
        """Axis-aligned pairs"""
        self.assertTrue(isUnbounded((1, 0), (-1, 0)))
        self.assertTrue(isUnbounded((0, -1), (0, 1)))
        self.assertTrue(isUnbounded((1, -1), (-1, 0)))
        self.assertFalse(isUnbounded((1, 0), (-1, 1)))

class SlopeSolveTestCase(unittest.TestCase):
    def testUnitBox(self):
        """max x1 + x2 over the unit box"""
        problem = structural([[1, 0], [0, 1]], [1, 1], [1, 1])
        result = slopeSolve(problem)
        self.assertEqual(result.status, OPTIMAL)
        self.assertTrue(np.allclose(result.x, [1.0, 1.0]))
        self.assertAlmostEqual(result.objective, 2.0)
        self.assertEqual(sorted(result.basisRows), [0, 1])
        checkCertificate(self, problem, result)

    def testNoRows(self):
        """Only nonnegativity is unbounded"""
        problem = structural(np.zeros((0, 2)), [], [1, 1])
        result = slopeSolve(problem)
        self.assertEqual(result.status, UNBOUNDED)
        self.assertIsNone(result.x)
        self.assertEqual(result.objective, float('inf'))

    def testDegenerateVertex(self):
        """Three rows meet at the optimum"""
        problem = structural([[1, 1], [1, 0], [0, 1]], [2, 2, 2], [2, 1])
        result = slopeSolve(problem)
        self.assertEqual(result.status, OPTIMAL)
        self.assertTrue(np.allclose(result.x, [2.0, 0.0]))
        self.assertAlmostEqual(result.objective, 4.0)
        checkCertificate(self, problem, result)

    def testDuplicateRows(self):
        """A repeated row is redundant"""
        problem = structural([[1, 1], [1, 1]], [2, 2], [1, 2])
        result = slopeSolve(problem)
        self.assertTrue(np.allclose(result.x, [0.0, 2.0]))
        self.assertAlmostEqual(result.objective, 4.0)
        checkCertificate(self, problem, result)

    def testVacuousRows(self):
        """Rows that always hold do not change the answer"""
        problem = structural([[0, 0], [-1, -2], [1, 1]], [0, 3, 5], [3, 1])
        result = slopeSolve(problem)
        self.assertTrue(np.allclose(result.x, [5.0, 0.0]))
        self.assertAlmostEqual(result.objective, 15.0)
        checkCertificate(self, problem, result)

    def testMinForm(self):
        """Minimization with negative costs"""
        result = solveMinForm([[1, 0], [0, 1]], [3, 4], [-1, -2])
        self.assertTrue(np.allclose(result.x, [3.0, 4.0]))
        self.assertAlmostEqual(result.objective, 11.0)
        self.assertRaises(ValueError, solveMinForm, [[1, 0]], [1], [-1, 0])
        self.assertRaises(ValueError, solveMinForm, [[1, 0]], [-1], [-1, -1])

    def testValidation(self):
        """Malformed problems are rejected"""
        self.assertRaises(ValueError, TwoVarLP, [[1, 0], [0, 1]], [0, 0],
                          [1, 1])
        self.assertRaises(ValueError, structural, [[1, 0]], [1], [1, -1])
        self.assertRaises(ValueError, structural, [[1, 0]], [1], [1, 1, 1])

    def testOperationCount(self):
        """Work grows like a sort plus a sweep"""
        rng = np.random.default_rng(3)
        for m in (10, 100, 1000):
            rows = rng.uniform(0.1, 1.0, size=(m, 2))
            problem = structural(rows, np.ones(m), [1, 1])
            result = slopeSolve(problem)
            size = m + 2
            bound = size * math.log(size, 2) + 2 * size * result.passes
            self.assertGreaterEqual(result.passes, 1)
            self.assertLessEqual(result.operations, bound,
                                 "Too much work for m=%d" % m)

class OracleTestCase(unittest.TestCase):
    def checkAgainstOracle(self, problem, trial):
        status, best = oracles.twoVarOracle(problem)
        msg = " on trial %d: rows=%r rhs=%r cost=%r" % \
              (trial, problem.rows.tolist(), problem.rhs.tolist(),
               problem.cost.tolist())
        result = slopeSolve(problem)
        self.assertEqual(result.status, status, "Status differs" + msg)
        if status != 'optimal':
            return
        self.assertLessEqual(abs(result.objective - best),
                             1e-7 * (1.0 + abs(best)),
                             "Objective %r differs from %r%s" %
                             (result.objective, best, msg))
        activity = problem.rows.dot(result.x)
        slack = 1e-9 * (1.0 + np.abs(problem.rhs) +
                        np.abs(problem.rows).dot(np.abs(result.x)))
        self.assertTrue(np.all(activity <= problem.rhs + slack),
                        "Infeasible point" + msg)
        checkCertificate(self, problem, result, msg)

    def testRandomProblems(self):
        """The slope method agrees with vertex enumeration on integer data"""
        rng = np.random.default_rng(20261015)
        for trial in range(1000):
            rows, rhs, cost = oracles.randomTwoVar(rng)
            self.checkAgainstOracle(TwoVarLP.fromStructural(rows, rhs, cost),
                                    trial)

    def testRealValuedProblems(self):
        """The slope method agrees with vertex enumeration on real data"""
        rng = np.random.default_rng(20261016)
        for trial in range(2000):
            rows, rhs, cost = oracles.randomRealTwoVar(rng)
            self.checkAgainstOracle(TwoVarLP.fromStructural(rows, rhs, cost),
                                    trial)

    def testBetweenBracketRows(self):
        """Rows left between the final pair are rechecked"""
        # The bracket (1, 0.9), (0.9, 1) meets far out; (1, 0.5) and
        # (0.5, 1) replace it and the old bracket ends up inside the pair.
        problem = structural([[1.0, 0.9], [0.9, 1.0], [1.0, 0.0],
                              [0.0, 1.0], [1.0, 0.5], [0.5, 1.0]],
                             [100.0, 100.0, 10.0, 10.0, 14.0, 14.0], [1, 1])
        result = slopeSolve(problem)
        self.assertEqual(result.status, OPTIMAL)
        self.assertTrue(np.allclose(result.x, [28.0 / 3, 28.0 / 3]))
        self.assertAlmostEqual(result.objective, 56.0 / 3)
        self.assertEqual(sorted(result.basisRows), [4, 5])
        self.assertEqual(result.passes, 2)
        status, best = oracles.twoVarOracle(problem)
        self.assertEqual(status, 'optimal')
        self.assertAlmostEqual(best, result.objective)
        checkCertificate(self, problem, result)

_loader = unittest.TestLoader()
test_suite = unittest.TestSuite([
    _loader.loadTestsFromTestCase(SlopeValueTestCase),
    _loader.loadTestsFromTestCase(UnboundedTestCase),
    _loader.loadTestsFromTestCase(SlopeSolveTestCase),
    _loader.loadTestsFromTestCase(OracleTestCase),])

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
