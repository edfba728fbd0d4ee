#!/usr/bin/env python
#
#   slope2v.py
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
Two-variable linear programs.

Solves::

    max c1 x1 + c2 x2  subject to  A' x <= b', x >= 0

with ``c > 0`` and ``b' >= 0`` by the slope method: every constraint gets a
slope value ``alpha`` from the nine-case table in `computeAlpha`, the
constraints are sorted by it (which orders their normals counterclockwise) and
the search starts at the pair that brackets the cost slope ``c2 / c1``.
Violated rows are exchanged into the pair until none is left.

The last two rows of a `TwoVarLP` are always the nonnegativity rows
``(-1, 0)`` and ``(0, -1)``.

Sorting and the unboundedness test use an exact key per row, a *band* (which
of the table's cases applies) and the ratio inside that band.  The key orders
rows the same way ``alpha`` does but does not lose the ratio when it is tiny
next to ``M``.
"""

import logging
import math

import numpy as np

__author__ = 'pyvot developers'
__date__ = 'October 4, 2026'
__all__ = ['OPTIMAL',
           'UNBOUNDED',
           'SlopeError',
           'TwoVarLP',
           'SlopeResult',
           'computeBigM',
           'computeAlpha',
           'isUnbounded',
           'slopeSolve',
           'solveMinForm',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'

_DET_TOL = 1e-12
_FEAS_TOL = 1e-10

# Bands in ascending alpha order.
_NEG_AXIS2 = 0      # (0, -)     alpha = -2M
_QUAD4 = 1          # (+, -)     -M + a2/a1
_POS_AXIS1 = 2      # (+, 0)     -M
_QUAD1 = 3          # (+, +)     a2/a1
_POS_AXIS2 = 4      # (0, +)     M
_QUAD2 = 5          # (-, +)     M - a1/a2
_NEG_AXIS1 = 6      # (-, 0)     2M
_VACUOUS = 7        # (-, -) or (0, 0): 3M

class SlopeError(RuntimeError):
    """Raised when the row exchanges stop short of a feasible optimal pair."""
    pass

class TwoVarLP(object):
    """
    A two-variable LP in maximization form.

    :IVariables:
        rows : ``numpy.ndarray``
            (m+2)-by-2 constraint matrix; the last two rows are the
            nonnegativity rows
        rhs : ``numpy.ndarray``
            Right-hand side of length m+2
        cost : ``numpy.ndarray``
            Positive cost pair
    """
    def __init__(self, rows, rhs, cost, check=True):
        self.rows = np.array(rows, dtype=float).reshape(-1, 2)
        self.rhs = np.array(rhs, dtype=float).ravel()
        self.cost = np.array(cost, dtype=float).ravel()
        if check:
            self.validate()

    @classmethod
    def fromStructural(cls, rows, rhs, cost):
        """
        Build a problem from structural rows only, appending the
        nonnegativity rows.
        """
        rows = np.array(rows, dtype=float).reshape(-1, 2)
        rhs = np.array(rhs, dtype=float).ravel()
        return cls(np.vstack([rows, [[-1.0, 0.0], [0.0, -1.0]]]),
                   np.concatenate([rhs, [0.0, 0.0]]),
                   cost)

    @property
    def numStructural(self):
        return len(self.rows) - 2

    def validate(self):
        """
        :Raises ValueError: If the shape, nonnegativity rows, cost or
                            right-hand side break the problem's assumptions.
        """
        if len(self.rows) < 2 or len(self.rhs) != len(self.rows) or \
           self.cost.shape != (2,):
            raise ValueError("Inconsistent two-variable problem shapes")
        if not (np.array_equal(self.rows[-2], [-1.0, 0.0]) and
                np.array_equal(self.rows[-1], [0.0, -1.0]) and
                self.rhs[-2] == 0 and self.rhs[-1] == 0):
            raise ValueError("Last two rows must be the nonnegativity rows")
        if not np.all(self.cost > 0):
            raise ValueError("Costs must be positive, got %r" %
                             (tuple(self.cost),))
        if not np.all(self.rhs >= 0):
            raise ValueError("Right-hand side must be nonnegative")

class SlopeResult(object):
    """
    Outcome of `slopeSolve`.

    :IVariables:
        status : str
            `OPTIMAL` or `UNBOUNDED`
        x : ``numpy.ndarray``
            Optimal point (``None`` when unbounded)
        objective : float
            Optimal value (``inf`` when unbounded)
        basisRows : tuple
            0-based row indices ``(j', k')`` whose intersection is ``x``
        alpha : ``numpy.ndarray``
            Slope value per row
        bigM : float
            The ``M`` used for `alpha`
        operations : int
            Row checks plus an ``n log n`` charge for the sort
        passes : int
            Number of passes over the rows, the last one finding nothing
            violated
    """
    def __init__(self, status, x, objective, basisRows, alpha, bigM,
                 operations=0, passes=0):
        self.status = status
        self.x = x
        self.objective = objective
        self.basisRows = basisRows
        self.alpha = alpha
        self.bigM = bigM
        self.operations = operations
        self.passes = passes

    def __repr__(self):
        return '<SlopeResult %s x=%r rows=%r>' % (self.status, self.x,
                                                  self.basisRows)

def computeBigM(problem):
    """
    Compute the slope offset.

    :Returns: ``(M, M1, M2)`` where ``M1 = max |a1/a2|`` over rows with
              ``a2 != 0``, ``M2 = max |a2/a1|`` over rows with ``a1 != 0``
              and ``M = max(M1, M2, c2/c1) + 1``
    :ReturnType: tuple
    """
    a1, a2 = problem.rows[:, 0], problem.rows[:, 1]
    nz2 = a2 != 0
    nz1 = a1 != 0
    m1 = float(np.max(np.abs(a1[nz2] / a2[nz2]))) if nz2.any() else 0.0
    m2 = float(np.max(np.abs(a2[nz1] / a1[nz1]))) if nz1.any() else 0.0
    ratio = problem.cost[1] / problem.cost[0]
    return max(m1, m2, ratio) + 1.0, m1, m2

def computeAlpha(row, bigM):
    """
    Return the slope value of one constraint row.

    ==========  ==========  ===============
    ``a1``      ``a2``      ``alpha``
    ==========  ==========  ===============
    0           < 0         ``-2M``
    > 0         < 0         ``-M + a2/a1``
    > 0         0           ``-M``
    > 0         > 0         ``a2/a1``
    0           > 0         ``M``
    < 0         > 0         ``M - a1/a2``
    < 0         0           ``2M``
    0           0           ``3M``
    < 0         < 0         ``3M``
    ==========  ==========  ===============
    """
    a1, a2 = float(row[0]), float(row[1])
    if a1 == 0:
        if a2 < 0:
            return -2 * bigM
        elif a2 > 0:
            return bigM
        return 3 * bigM
    elif a1 > 0:
        if a2 < 0:
            return -bigM + a2 / a1
        elif a2 == 0:
            return -bigM
        return a2 / a1
    else:
        if a2 > 0:
            return bigM - a1 / a2
        elif a2 == 0:
            return 2 * bigM
        return 3 * bigM

def _band(row):
    a1, a2 = row[0], row[1]
    if a1 == 0:
        if a2 < 0:
            return _NEG_AXIS2, 0.0
        elif a2 > 0:
            return _POS_AXIS2, 0.0
        return _VACUOUS, 0.0
    elif a1 > 0:
        if a2 < 0:
            return _QUAD4, a2 / a1
        elif a2 == 0:
            return _POS_AXIS1, 0.0
        return _QUAD1, a2 / a1
    else:
        if a2 > 0:
            return _QUAD2, -a1 / a2
        elif a2 == 0:
            return _NEG_AXIS1, 0.0
        return _VACUOUS, 0.0

def isUnbounded(rowJ, rowK):
    """
    Decide unboundedness from the two rows bracketing the cost slope.

    With ``j'`` the last row below the cost slope and ``k'`` the first at or
    above it, the problem is unbounded when:

    - ``alpha_j' = -2M`` and ``alpha_k' >= M``, or
    - ``-2M < alpha_j' < -M`` and ``alpha_k' = 2M``, or
    - ``alpha_j' = -M`` and ``alpha_k' = 2M``, or
    - ``-2M < alpha_j' < -M``, ``M < alpha_k' < 2M`` and
      ``a2/a1`` of ``j'`` is at most ``a2/a1`` of ``k'``.

    The cases are read from the sign patterns of the rows.
    """
    bandJ, _ = _band(rowJ)
    bandK, _ = _band(rowK)
    if bandJ == _NEG_AXIS2:
        return bandK >= _POS_AXIS2
    elif bandJ == _QUAD4:
        if bandK == _NEG_AXIS1:
            return True
        if bandK == _QUAD2:
            return rowJ[1] / rowJ[0] <= rowK[1] / rowK[0]
        return False
    elif bandJ == _POS_AXIS1:
        return bandK == _NEG_AXIS1
    return False

def _intersect(rowA, rowB, rhsA, rhsB):
    det = rowA[0] * rowB[1] - rowA[1] * rowB[0]
    scale = abs(rowA[0] * rowB[1]) + abs(rowA[1] * rowB[0])
    if scale == 0 or abs(det) <= _DET_TOL * scale:
        return None
    x1 = (rhsA * rowB[1] - rowA[1] * rhsB) / det
    x2 = (rowA[0] * rhsB - rhsA * rowB[0]) / det
    return np.array([x1, x2])

def _violated(row, rhs, x):
    activity = row[0] * x[0] + row[1] * x[1]
    slack = _FEAS_TOL * (1.0 + abs(rhs) + abs(row[0] * x[0]) +
                         abs(row[1] * x[1]))
    return activity > rhs + slack

def _weights(rowA, rowB, v):
    # Solve w_A rowA + w_B rowB = v; the rows are not parallel.
    det = rowA[0] * rowB[1] - rowA[1] * rowB[0]
    return ((v[0] * rowB[1] - v[1] * rowB[0]) / det,
            (rowA[0] * v[1] - rowA[1] * v[0]) / det)

def _exchange(rows, rhs, cost, jRow, kRow, row):
    """
    Bring the violated `row` into the pair ``(jRow, kRow)``.

    The cost stays a nonnegative combination of the pair: with ``cost =
    l_j a_j + l_k a_k`` and ``a_row = u_j a_j + u_k a_k``, the row leaving
    is the one with ``u > 0`` and the smallest ``l / u``.  The objective at
    the pair's intersection never goes up.

    :Returns: ``(jRow, kRow, x)`` for the new pair, unordered
    :Raises SlopeError: If no row can leave.
    """
    lam = _weights(rows[jRow], rows[kRow], cost)
    mu = _weights(rows[jRow], rows[kRow], rows[row])
    best = None
    for leaving, stay, l, u in ((jRow, kRow, lam[0], mu[0]),
                                (kRow, jRow, lam[1], mu[1])):
        if u <= 0:
            continue
        y = _intersect(rows[row], rows[stay], rhs[row], rhs[stay])
        if y is None:
            continue
        step = max(l, 0.0) / u
        if best is None or step < best[0]:
            best = (step, stay, y)
    if best is None:
        raise SlopeError("Row %d cuts off rows %d and %d with no exchange" %
                         (row + 1, jRow + 1, kRow + 1))
    return best[1], row, best[2]


def slopeSolve(problem):
    """
    Solve a `TwoVarLP`.

    Rows are sorted by slope (ties by row index).  ``j'`` is the last row
    whose slope is below ``c2/c1`` and ``k'`` the next one.  Unless
    `isUnbounded` says otherwise, the search starts at their intersection.
    Each pass checks the rows outward from the pair, then the rows between
    them.  A violated row replaces one row of the pair, chosen so that the
    cost stays a nonnegative combination of the two (see `_exchange`), and
    the point moves to the new intersection.  Passes repeat until one finds
    no violated row, so the final pair is both feasible and optimal.  Rows
    whose coefficients are both negative or both zero hold for any
    ``x >= 0`` and are only checked at the end.

    :ReturnType: `SlopeResult`
    :Raises SlopeError: If no feasible pair is reached.
    """
    rows, rhs, cost = problem.rows, problem.rhs, problem.cost
    size = len(rows)
    bigM = computeBigM(problem)[0]
    alpha = np.array([computeAlpha(row, bigM) for row in rows])
    keys = [_band(row) for row in rows]
    bands = np.array([key[0] for key in keys])
    values = np.array([key[1] for key in keys])
    order = np.lexsort((np.arange(size), values, bands))
    operations = int(size * max(1.0, math.log(size, 2)))
    ratio = cost[1] / cost[0]
    below = (bands[order] < _QUAD1) | \
            ((bands[order] == _QUAD1) & (values[order] < ratio))
    jPos = int(np.count_nonzero(below)) - 1
    kPos = jPos + 1
    # Row (0, -1) is always below and row (-1, 0) always above the ratio.
    assert 0 <= jPos and kPos < size
    jRow, kRow = order[jPos], order[kPos]
    if isUnbounded(rows[jRow], rows[kRow]):
        return SlopeResult(UNBOUNDED, None, float('inf'), (jRow, kRow),
                           alpha, bigM, operations, 0)
    x = _intersect(rows[jRow], rows[kRow], rhs[jRow], rhs[kRow])
    while x is None:
        # Nearly parallel bracket: widen it upward.
        kPos += 1
        if kPos >= size or bands[order[kPos]] == _VACUOUS:
            raise SlopeError("Bracketing rows %d and %d are parallel" %
                             (jRow + 1, kRow + 1))
        kRow = order[kPos]
        x = _intersect(rows[jRow], rows[kRow], rhs[jRow], rhs[kRow])
        if x is not None and min(_weights(rows[jRow], rows[kRow], cost)) < 0:
            raise SlopeError("Rows %d and %d do not bracket the cost" %
                             (jRow + 1, kRow + 1))
    rank = np.empty(size, dtype=int)
    rank[order] = np.arange(size)
    # Vacuous rows sort last and hold whenever x >= 0; passes stop
    # before them.
    last = int(np.count_nonzero(bands != _VACUOUS)) - 1
    maxSwaps = size * size + 10
    swaps = 0
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        jPos, kPos = rank[jRow], rank[kRow]
        outward = []
        for step in range(1, last + 1):
            if jPos - step >= 0:
                outward.append(jPos - step)
            if kPos + step <= last:
                outward.append(kPos + step)
        for pos in outward + list(range(jPos + 1, kPos)):
            row = order[pos]
            if row == jRow or row == kRow:
                continue
            operations += 1
            if not _violated(rows[row], rhs[row], x):
                continue
            swaps += 1
            if swaps > maxSwaps:
                raise SlopeError("No progress after %d row exchanges" %
                                 maxSwaps)
            jRow, kRow, x = _exchange(rows, rhs, cost, jRow, kRow, row)
            if rank[jRow] > rank[kRow]:
                jRow, kRow = kRow, jRow
            changed = True
    activity = rows.dot(x)
    slack = _FEAS_TOL * (1.0 + np.abs(rhs) + np.abs(rows).dot(np.abs(x)))
    bad = np.flatnonzero(activity > rhs + slack)
    if len(bad):
        raise SlopeError("Sweep ended on a point violating row(s) %s" %
                         ', '.join(str(i + 1) for i in bad))
    x = np.maximum(x, 0.0)
    objective = float(cost.dot(x))
    log.debug("Slope optimum %r on rows %d, %d after %d pass(es)",
              tuple(x), jRow + 1, kRow + 1, passes)
    return SlopeResult(OPTIMAL, x, objective, (int(jRow), int(kRow)), alpha,
                       bigM, operations, passes)

def solveMinForm(rows, rhs, reducedCosts):
    """
    Solve ``min cbar'x, Abar x <= bbar, x >= 0`` for two variables.

    The costs are negated to reach the maximization form.

    :Parameters:
        rows : matrix
            m-by-2 structural rows ``Abar``
        rhs : vector
            ``bbar``, nonnegative
        reducedCosts : pair
            ``cbar``, both negative
    :Raises ValueError: If ``cbar`` is not negative or ``bbar`` has a
                        negative entry.
    :ReturnType: `SlopeResult`
    """
    reducedCosts = np.asarray(reducedCosts, dtype=float)
    if not np.all(reducedCosts < 0):
        raise ValueError("Both reduced costs must be negative")
    return slopeSolve(TwoVarLP.fromStructural(rows, rhs, -reducedCosts))
