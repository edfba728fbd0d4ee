#!/usr/bin/env python
#
#   linalgtest.py
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

from pyvot.linalg import *

__author__ = 'pyvot developers'
__date__ = 'October 15, 2026'
__all__ = ['FactorTestCase',
           'SolveTestCase',
           'SingularTestCase',
           'test_suite',]

def backwardError(M, x, b):
    """Residual of a solve relative to the data it came from."""
    residual = np.abs(M.dot(x) - b).max()
    size = np.abs(M).sum(axis=1).max() * np.abs(x).max() + np.abs(b).max()
    return residual / max(size, 1.0)

class FactorTestCase(unittest.TestCase):
    def testReconstruct(self):
        """Factors reproduce the matrix"""
        M = np.array([[0.0, 2.0, 1.0],
                      [4.0, 1.0, 0.0],
                      [1.0, 3.0, 5.0]])
        factors = luFactor(M)
        self.assertFalse(factors.perturbed)
        self.assertTrue(np.allclose(factors.reconstruct(), M))
        self.assertTrue(np.allclose(factors.L.dot(factors.U),
                                    M[factors.rowPerm]))
        self.assertTrue(np.allclose(np.diag(factors.L), 1.0),
                        "L must have a unit diagonal")

    def testInputUntouched(self):
        """Factoring does not modify the argument"""
        M = np.array([[1.0, 2.0], [3.0, 4.0]])
        luFactor(M)
        self.assertTrue(np.array_equal(M, [[1.0, 2.0], [3.0, 4.0]]))

    def testScale(self):
        """Scale is the infinity norm, at least 1"""
        self.assertEqual(luFactor([[0.5, 0.0], [0.0, 0.25]]).scale, 1.0)
        self.assertEqual(luFactor([[3.0, -4.0], [1.0, 1.0]]).scale, 7.0)

    def testBadInput(self):
        """Non-square and non-finite matrices are rejected"""
        self.assertRaises(ValueError, luFactor, np.ones((2, 3)))
        self.assertRaises(ValueError, luFactor, np.ones(3))
        self.assertRaises(ValueError, luFactor, [[1.0, np.nan], [0.0, 1.0]])
        self.assertRaises(ValueError, luFactor, [[1.0, 0.0], [np.inf, 1.0]])

class SolveTestCase(unittest.TestCase):
    def testRandomSystems(self):
        """Solves are backward stable on random matrices"""
        rng = np.random.default_rng(20261015)
        for trial in range(1000):
            m = int(rng.integers(2, 21))
            M = rng.standard_normal((m, m))
            b = rng.standard_normal(m)
            factors = luFactor(M)
            x = solveBasis(factors, b)
            self.assertLess(backwardError(M, x, b), 1e-10,
                            "Solve failed on trial %d (m=%d)" % (trial, m))
            p = solveBasisTranspose(factors, b)
            self.assertLess(backwardError(M.T, p, b), 1e-10,
                            "Transpose solve failed on trial %d (m=%d)" %
                            (trial, m))

    def testMultiMatchesSingle(self):
        """Multiple right-hand sides match separate solves exactly"""
        rng = np.random.default_rng(7)
        M = rng.standard_normal((6, 6))
        C = rng.standard_normal((6, 4))
        factors = luFactor(M)
        X = solveBasisMulti(factors, C)
        for k in range(4):
            self.assertTrue(np.array_equal(X[:, k],
                                           solveBasis(factors, C[:, k])))

    def testIdentity(self):
        """The slack basis solves to the right-hand side"""
        factors = luFactor(np.eye(3))
        self.assertTrue(np.array_equal(solveBasis(factors, [1.0, 2.0, 3.0]),
                                       [1.0, 2.0, 3.0]))

    def testLengthChecks(self):
        """Wrong right-hand side shapes are rejected"""
        factors = luFactor(np.eye(3))
        self.assertRaises(ValueError, solveBasis, factors, [1.0, 2.0])
        self.assertRaises(ValueError, solveBasisTranspose, factors,
                          [1.0, 2.0, 3.0, 4.0])
        self.assertRaises(ValueError, solveBasisMulti, factors, np.ones(3))
        self.assertRaises(ValueError, solveBasisMulti, factors,
                          np.ones((3, 0)))
        self.assertRaises(ValueError, solveBasisMulti, factors,
                          np.ones((2, 2)))

class SingularTestCase(unittest.TestCase):
    def testRankDeficient(self):
        """A dependent row is perturbed, not rejected"""
        M = np.array([[1.0, 2.0], [2.0, 4.0]])
        factors = luFactor(M)
        self.assertTrue(factors.perturbed)
        self.assertEqual(factors.perturbedDiagonals, [1])
        self.assertAlmostEqual(factors.epsUsed, EPSILON * 6.0)
        self.assertEqual(factors.U[1, 1], factors.epsUsed,
                         "Zero pivot should become +eps")
        x = solveBasis(factors, [1.0, 2.0])
        self.assertTrue(np.all(np.isfinite(x)))

    def testZeroMatrix(self):
        """Every diagonal of the zero matrix is replaced"""
        factors = luFactor(np.zeros((3, 3)))
        self.assertEqual(factors.perturbedDiagonals, [0, 1, 2])
        self.assertEqual(factors.epsUsed, EPSILON)
        x = solveBasis(factors, [1.0, 1.0, 1.0])
        self.assertTrue(np.all(np.isfinite(x)))

    def testNegativePivotKeepsSign(self):
        """Small negative pivots stay negative"""
        M = np.array([[1.0, 0.0], [0.0, -1e-14]])
        factors = luFactor(M)
        self.assertEqual(factors.perturbedDiagonals, [1])
        self.assertEqual(factors.U[1, 1], -EPSILON)

    def testThresholds(self):
        """Custom tolerances are honoured"""
        M = np.array([[1.0, 0.0], [0.0, 1e-6]])
        self.assertFalse(luFactor(M).perturbed)
        factors = luFactor(M, singularTol=1e-5, eps=1e-3)
        self.assertEqual(factors.perturbedDiagonals, [1])
        self.assertEqual(factors.U[1, 1], 1e-3)

_loader = unittest.TestLoader()
test_suite = unittest.TestSuite([
    _loader.loadTestsFromTestCase(FactorTestCase),
    _loader.loadTestsFromTestCase(SolveTestCase),
    _loader.loadTestsFromTestCase(SingularTestCase),])

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
