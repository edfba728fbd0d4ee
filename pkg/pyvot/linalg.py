#!/usr/bin/env python
#
#   linalg.py
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
Basis factorization and solves.

The basis matrix is factored as ``P A_B = L U`` with partial pivoting and
every solve goes through the triangular factors; no inverse is ever formed.
A (nearly) singular basis is not an error: tiny diagonal entries of ``U`` are
replaced by a small signed epsilon and the replacement is recorded.  There is
no least-squares fallback.
"""

import logging
import warnings

import numpy as np
from scipy import linalg as sla

__author__ = 'pyvot developers'
__date__ = 'October 3, 2026'
__all__ = ['SINGULAR_TOL',
           'EPSILON',
           'LUFactors',
           'luFactor',
           'solveBasis',
           'solveBasisTranspose',
           'solveBasisMulti',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

SINGULAR_TOL = 1e-11
EPSILON = 1e-10

class LUFactors(object):
    """
    LU factors of a square matrix.

    The combined LAPACK array and pivot vector are kept as returned by
    ``scipy.linalg.lu_factor`` (with any perturbed diagonals patched in), so
    solves go straight to ``lu_solve``.

    :IVariables:
        lu : ``numpy.ndarray``
            ``L`` below the diagonal (unit diagonal implied), ``U`` on and
            above it
        piv : ``numpy.ndarray``
            LAPACK row interchanges
        perturbedDiagonals : list
            0-based indices of replaced ``U`` diagonals
        epsUsed : float
            Magnitude written into the replaced diagonals
        scale : float
            ``max(1, ||M||_inf)`` of the factored matrix
    """
    def __init__(self, lu, piv, perturbedDiagonals=(), epsUsed=0.0,
                 scale=1.0):
        self.lu = lu
        self.piv = piv
        self.perturbedDiagonals = list(perturbedDiagonals)
        self.epsUsed = epsUsed
        self.scale = scale

    @property
    def size(self):
        return self.lu.shape[0]

    @property
    def perturbed(self):
        return bool(self.perturbedDiagonals)

    @property
    def L(self):
        return np.tril(self.lu, -1) + np.eye(self.size)

    @property
    def U(self):
        return np.triu(self.lu)

    @property
    def rowPerm(self):
        """
        Row order of the factorization: ``M[rowPerm] == L.dot(U)``.
        """
        perm = np.arange(self.size)
        for i, p in enumerate(self.piv):
            perm[i], perm[p] = perm[p], perm[i]
        return perm

    def reconstruct(self):
        """Return the matrix these factors represent."""
        result = np.empty_like(self.lu)
        result[self.rowPerm] = self.L.dot(self.U)
        return result

def luFactor(M, singularTol=SINGULAR_TOL, eps=EPSILON):
    """
    Factor a square matrix.

    Diagonal entries of ``U`` with magnitude below
    ``singularTol * max(1, ||M||_inf)`` are replaced by
    ``eps * max(1, ||M||_inf)`` with the original sign (zero counts as
    positive).

    :Parameters:
        M : matrix
            Square matrix with finite entries
        singularTol : float
            Relative threshold for a singular pivot
        eps : float
            Relative replacement magnitude
    :Raises ValueError: If *M* is not square or has non-finite entries.
    :ReturnType: `LUFactors`
    """
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValueError("Expected a non-empty square matrix, got shape %r" %
                         (M.shape,))
    if not np.all(np.isfinite(M)):
        raise ValueError("Matrix has non-finite entries")
    scale = max(1.0, float(np.abs(M).sum(axis=1).max()))
    with warnings.catch_warnings():
        # Exactly singular input is handled below.
        warnings.simplefilter('ignore', sla.LinAlgWarning)
        lu, piv = sla.lu_factor(M, overwrite_a=True, check_finite=False)
    diagonal = lu.diagonal().copy()
    small = np.flatnonzero(np.abs(diagonal) < singularTol * scale)
    epsUsed = eps * scale
    for i in small:
        lu[i, i] = -epsUsed if diagonal[i] < 0 else epsUsed
    if len(small):
        log.debug("Perturbed %d diagonal(s) of U: %s", len(small),
                  ', '.join(str(i + 1) for i in small))
    return LUFactors(lu, piv, small.tolist(), epsUsed, scale)

def solveBasis(factors, b):
    """
    Solve ``M x = b`` by a forward solve with ``L`` and a backward solve with
    ``U``.

    :ReturnType: ``numpy.ndarray``
    """
    b = np.asarray(b, dtype=float)
    if b.shape != (factors.size,):
        raise ValueError("Right-hand side must have length %d" % factors.size)
    return sla.lu_solve((factors.lu, factors.piv), b, check_finite=False)

def solveBasisTranspose(factors, c):
    """
    Solve ``M' p = c`` through ``U' q = c`` and ``L' p = q``.

    :ReturnType: ``numpy.ndarray``
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (factors.size,):
        raise ValueError("Right-hand side must have length %d" % factors.size)
    return sla.lu_solve((factors.lu, factors.piv), c, trans=1,
                        check_finite=False)

def solveBasisMulti(factors, columns):
    """
    Solve ``M X = C`` column by column.

    Each column goes through `solveBasis`, so the result matches separate
    calls exactly.

    :Parameters:
        columns : matrix
            m-by-k right-hand sides, k >= 1
    :ReturnType: ``numpy.ndarray``
    """
    columns = np.asarray(columns, dtype=float)
    if columns.ndim != 2 or columns.shape[0] != factors.size or \
       columns.shape[1] < 1:
        raise ValueError("Expected an %d-by-k matrix with k >= 1, got %r" %
                         (factors.size, columns.shape))
    result = np.empty_like(columns)
    for k in range(columns.shape[1]):
        result[:, k] = solveBasis(factors, columns[:, k])
    return result
