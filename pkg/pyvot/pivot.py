#!/usr/bin/env python
#
#   pivot.py
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
Entering and leaving variable rules.

Slots index the basic and nonbasic lists of a
`pyvot.model.BasisPartition`.  All rules break ties towards the lowest slot
unless given explicit tie keys.
"""

import numpy as np

from pyvot import linalg

__author__ = 'pyvot developers'
__date__ = 'October 5, 2026'
__all__ = ['ZERO_TOL',
           'PIVOT_TOL',
           'FEAS_TOL',
           'FILTER_FRACTION',
           'FILTER_THRESHOLD',
           'PivotContext',
           'RatioOutcome',
           'simplexMultipliers',
           'reducedCosts',
           'candidateSet',
           'dantzigEntering',
           'ratioTest',
           'longestStepEntering',
           'blandEntering',]
__docformat__ = 'reStructuredText'

ZERO_TOL = 1e-9
PIVOT_TOL = 1e-10
FEAS_TOL = 1e-9
FILTER_FRACTION = 0.99
FILTER_THRESHOLD = 50

_TIE_TOL = 1e-12

class PivotContext(object):
    """
    Pricing information for one iteration.

    :IVariables:
        reducedCosts : ``numpy.ndarray``
            Reduced cost per nonbasic slot
        bbar : ``numpy.ndarray``
            Current basic values
        columns : ``numpy.ndarray``
            Column id per nonbasic slot
        candidates : ``numpy.ndarray``
            Nonbasic slots with a reduced cost below ``-zeroTol``
        filterFraction : float
            Longest-step filter fraction, or ``None`` to consider every
            candidate
        filterThreshold : int
            The filter only applies above this many candidates
    """
    def __init__(self, reducedCosts, bbar, columns, zeroTol=ZERO_TOL,
                 filterFraction=FILTER_FRACTION,
                 filterThreshold=FILTER_THRESHOLD):
        self.reducedCosts = np.asarray(reducedCosts, dtype=float)
        self.bbar = np.asarray(bbar, dtype=float)
        self.columns = np.asarray(columns, dtype=int)
        self.zeroTol = zeroTol
        self.candidates = candidateSet(self.reducedCosts, zeroTol)
        self.filterFraction = filterFraction
        self.filterThreshold = filterThreshold

    def filtered(self):
        """
        Return the candidates passing the longest-step filter.

        With more than `filterThreshold` candidates, only those with
        ``cbar < filterFraction * min(cbar)`` remain.
        """
        candidates = self.candidates
        if self.filterFraction is None or \
           len(candidates) <= self.filterThreshold:
            return candidates
        bound = self.filterFraction * self.reducedCosts[candidates].min()
        return candidates[self.reducedCosts[candidates] < bound]

class RatioOutcome(object):
    """
    Result of a ratio test.

    :IVariables:
        leavingSlot : int
            Basic slot that leaves, or ``None`` for an unbounded direction
        step : float
            Step length (``inf`` when unbounded)
        direction : ``numpy.ndarray``
            The column ``abar`` that was tested, when known
    """
    def __init__(self, leavingSlot, step, direction=None):
        self.leavingSlot = leavingSlot
        self.step = step
        self.direction = direction

    def __repr__(self):
        return '<RatioOutcome slot=%r step=%r>' % (self.leavingSlot,
                                                   self.step)

    @property
    def unbounded(self):
        return self.leavingSlot is None

def simplexMultipliers(state, lp):
    """
    Solve ``A_B' p = c_B`` with the state's factors.

    :ReturnType: ``numpy.ndarray``
    """
    basic = np.asarray(state.partition.basic, dtype=int)
    return linalg.solveBasisTranspose(state.factors, lp.c[basic])

def reducedCosts(state, lp, multipliers=None):
    """
    Return ``c_N - A_N' p`` in nonbasic slot order.

    :Parameters:
        state
            Anything with ``partition`` and ``factors`` attributes
        lp : `pyvot.model.StandardFormLP`
            Problem
        multipliers : vector
            ``p``, computed by `simplexMultipliers` if omitted
    :ReturnType: ``numpy.ndarray``
    """
    if multipliers is None:
        multipliers = simplexMultipliers(state, lp)
    nonbasic = np.asarray(state.partition.nonbasic, dtype=int)
    return lp.c[nonbasic] - lp.A.T.dot(multipliers)[nonbasic]

def candidateSet(costs, zeroTol=ZERO_TOL):
    """Return the slots whose reduced cost is below ``-zeroTol``."""
    return np.flatnonzero(np.asarray(costs) < -zeroTol)

def dantzigEntering(costs, zeroTol=ZERO_TOL):
    """
    Pick the most negative reduced cost.

    :Returns: Nonbasic slot, or ``None`` when no cost is below ``-zeroTol``
    """
    costs = np.asarray(costs, dtype=float)
    if not len(costs):
        return None
    slot = int(np.argmin(costs))
    if costs[slot] < -zeroTol:
        return slot
    return None

def blandEntering(costs, zeroTol=ZERO_TOL, keys=None):
    """
    Pick the first improving slot.

    :Parameters:
        keys : sequence
            Optional column ids; the candidate with the smallest key wins
    :Returns: Nonbasic slot, or ``None`` when optimal
    """
    candidates = candidateSet(costs, zeroTol)
    if not len(candidates):
        return None
    if keys is None:
        return int(candidates[0])
    keys = np.asarray(keys)
    return int(candidates[np.argmin(keys[candidates])])

def ratioTest(bbar, abar, pivotTol=PIVOT_TOL, keys=None):
    """
    Minimum ratio test over rows with ``abar > pivotTol``.

    Ratios within a relative ``1e-12`` of the minimum count as ties.  Ties go
    to the lowest row, or to the smallest key when *keys* (basic column ids)
    are given.

    :ReturnType: `RatioOutcome`
    """
    bbar = np.asarray(bbar, dtype=float)
    abar = np.asarray(abar, dtype=float)
    eligible = np.flatnonzero(abar > pivotTol)
    if not len(eligible):
        return RatioOutcome(None, float('inf'), abar)
    ratios = np.maximum(bbar[eligible], 0.0) / abar[eligible]
    step = ratios.min()
    tied = eligible[ratios <= step + _TIE_TOL * (1.0 + step)]
    if keys is None:
        slot = int(tied[0])
    else:
        slot = int(tied[np.argmin(np.asarray(keys)[tied])])
    return RatioOutcome(slot, float(bbar[slot] / abar[slot]
                                    if bbar[slot] > 0 else 0.0), abar)

def longestStepEntering(ctx, excludeSlot, lp, factors, pivotTol=PIVOT_TOL):
    """
    Pick the filtered candidate with the longest ratio-test step.

    :Parameters:
        ctx : `PivotContext`
            Current pricing
        excludeSlot : int
            Slot already chosen by another rule
        lp : `pyvot.model.StandardFormLP`
            Problem
        factors : `pyvot.linalg.LUFactors`
            Current basis factors
    :Returns: ``(slot, outcome)``, or ``None`` if no candidate remains or
              none has a finite step
    """
    slots = [int(s) for s in ctx.filtered() if s != excludeSlot]
    if not slots:
        return None
    directions = linalg.solveBasisMulti(factors,
                                        lp.columns(ctx.columns[slots]))
    best = None
    for k, slot in enumerate(slots):
        outcome = ratioTest(ctx.bbar, directions[:, k], pivotTol)
        if outcome.unbounded:
            continue
        if best is None or outcome.step > best[1].step:
            best = (slot, outcome)
    return best
