#!/usr/bin/env python
#
#   engine.py
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
The simplex driver.

`solve` runs a two-phase primal simplex on a
`pyvot.model.StandardFormLP`.  Two rules share all of the machinery:

``'dantzig'``
    Classic single pivots on the most negative reduced cost.
``'double'``
    Each iteration with at least two improving candidates picks the Dantzig
    column and the longest-step column, solves the two-variable LP they span
    exactly (`pyvot.slope2v`) and moves to its optimum, which may bring in
    one or both columns.

The basis is refactored from scratch after every change and ``x_B`` is
updated incrementally from the entering directions.  Cycling is guarded
against in two ways: zero basic values get a tiny positive perturbation, and
repeated degenerate stalls switch the solver to Bland's rule until the
objective improves again.

Each iteration produces an `IterationRecord`; the records are kept on the
result and may also be streamed to an `ITelemetrySink`.
"""

import logging

import numpy as np
from scipy import sparse
import zope.interface

from pyvot import linalg
from pyvot import pivot
from pyvot import slope2v
from pyvot.model import BasisPartition, StandardFormLP, infeasibility
from pyvot.timer import Stopwatch

__author__ = 'pyvot developers'
__date__ = 'October 8, 2026'
__all__ = ['OPTIMAL',
           'UNBOUNDED',
           'INFEASIBLE',
           'ITERATION_LIMIT',
           'NUMERICAL_ERROR',
           'DANTZIG',
           'DOUBLE',
           'RULES',
           'SINGLE_STEP',
           'DOUBLE_STEP',
           'BLAND_STEP',
           'STALL_STEP',
           'NORMAL_MODE',
           'BLAND_MODE',
           'NumericalBreakdown',
           'InvariantFault',
           'ITelemetrySink',
           'ListSink',
           'SolverOptions',
           'SimplexState',
           'StepOutcome',
           'IterationRecord',
           'SolveResult',
           'phase1',
           'assemble2DSubproblem',
           'doublePivotStep',
           'updateXB',
           'antiCyclingGuard',
           'solve',
           'checkDominance',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'
INFEASIBLE = 'infeasible'
ITERATION_LIMIT = 'iteration_limit'
NUMERICAL_ERROR = 'numerical_error'

DANTZIG = 'dantzig'
DOUBLE = 'double'
RULES = (DANTZIG, DOUBLE)

SINGLE_STEP = 'single'
DOUBLE_STEP = 'double'
BLAND_STEP = 'bland'
STALL_STEP = 'stall'

NORMAL_MODE = 'normal'
BLAND_MODE = 'bland'

CLAMP_TOL = 1e-11

class NumericalBreakdown(ArithmeticError):
    """Raised when an updated basic value falls below ``-feasTol``."""
    pass

class InvariantFault(RuntimeError):
    """
    Raised when basic feasibility was already lost before a step, or when
    the two-variable solve fails on a subproblem that is always solvable.
    """
    pass

## TELEMETRY ##

class ITelemetrySink(zope.interface.Interface):
    """Receiver for per-iteration records."""

    def record(record):
        """
        Accepts one iteration record.

        Called from the thread running the solve only.

        :Parameters:
            record : `IterationRecord`
                The finished iteration
        """

@zope.interface.implementer(ITelemetrySink)
class ListSink(object):
    """Sink that appends every record to `records`."""
    def __init__(self):
        self.records = []

    def record(self, record):
        self.records.append(record)

class IterationRecord(object):
    """
    What happened in one iteration.

    Column ids are 0-based.  ``f1``, ``f2`` and ``f3`` are the objective
    values after the Dantzig pivot, the longest-step pivot and the
    two-variable optimum; the ones that were not computed are ``None``.
    """
    __slots__ = ('iteration', 'phase', 'kind', 'entering', 'leaving',
                 'steps', 'f1', 'f2', 'f3', 'objective', 'basis')

    def __init__(self, iteration, phase, kind, entering, leaving, steps,
                 f1, f2, f3, objective, basis):
        self.iteration = iteration
        self.phase = phase
        self.kind = kind
        self.entering = entering
        self.leaving = leaving
        self.steps = steps
        self.f1 = f1
        self.f2 = f2
        self.f3 = f3
        self.objective = objective
        self.basis = basis

    def __repr__(self):
        return ('<IterationRecord %d %s in=%r out=%r obj=%r>' %
                (self.iteration, self.kind, [j + 1 for j in self.entering],
                 [j + 1 for j in self.leaving], self.objective))

    def asDict(self):
        return dict((name, getattr(self, name)) for name in self.__slots__)

def checkDominance(history, tol=1e-9):
    """
    Find double steps whose two-variable optimum lost to a single pivot.

    :Returns: Records with ``f3 > min(f1, f2) + tol * (1 + |f1|)``
    :ReturnType: list
    """
    bad = []
    for record in history:
        if record.f3 is None:
            continue
        if record.f3 > min(record.f1, record.f2) + tol * (1 + abs(record.f1)):
            bad.append(record)
    return bad

## OPTIONS ##

class SolverOptions(object):
    """
    Tunable solver settings.

    Every keyword of the constructor is an attribute of the same name:

    ``rule``
        ``'double'`` (default) or ``'dantzig'``
    ``zeroTol``, ``pivotTol``, ``feasTol``
        Optimality, ratio eligibility and feasibility tolerances
    ``singularTol``, ``eps``
        Passed to `pyvot.linalg.luFactor`
    ``filterFraction``, ``filterThreshold``
        Longest-step candidate filter; ``filterFraction=None`` disables it
    ``improveTol``
        Relative objective decrease that counts as progress
    ``perturbation``
        Relative size of the value given to zero basic variables
    ``stallLimit``
        Consecutive degenerate stalls before switching to Bland's rule
    ``bland``, ``perturb``
        Enable the two anti-cycling guards
    ``maxIterations``
        Iteration limit; ``None`` means ``1000 * (n + m)``
    ``breakdownRetries``
        Consecutive refactorization retries before giving up
    ``recordHistory``
        Keep every `IterationRecord` on the result
    ``telemetry``
        Optional `ITelemetrySink`
    """
    _defaults = (('rule', DOUBLE),
                 ('zeroTol', pivot.ZERO_TOL),
                 ('pivotTol', pivot.PIVOT_TOL),
                 ('feasTol', pivot.FEAS_TOL),
                 ('singularTol', linalg.SINGULAR_TOL),
                 ('eps', linalg.EPSILON),
                 ('filterFraction', pivot.FILTER_FRACTION),
                 ('filterThreshold', pivot.FILTER_THRESHOLD),
                 ('improveTol', 1e-12),
                 ('perturbation', 1e-10),
                 ('stallLimit', 2),
                 ('bland', True),
                 ('perturb', True),
                 ('maxIterations', None),
                 ('breakdownRetries', 3),
                 ('recordHistory', True),
                 ('telemetry', None),)

    def __init__(self, **kw):
        for name, default in self._defaults:
            setattr(self, name, kw.pop(name, default))
        if kw:
            raise TypeError("Unknown solver option(s): %s" %
                            ', '.join(sorted(kw)))
        if self.rule not in RULES:
            raise ValueError("Unknown rule %r" % (self.rule,))

    @classmethod
    def optionNames(cls):
        return [name for name, default in cls._defaults]

    def copy(self, **kw):
        values = dict((name, getattr(self, name))
                      for name in self.optionNames())
        values.update(kw)
        return SolverOptions(**values)

    def iterationLimit(self, lp):
        if self.maxIterations is not None:
            return int(self.maxIterations)
        return 1000 * (lp.numCols + lp.numRows)

## STATE ##

class SimplexState(object):
    """
    Mutable state of one simplex run.

    :IVariables:
        lp : `pyvot.model.StandardFormLP`
            Problem being iterated (rows may be sign-flipped or reduced)
        partition : `pyvot.model.BasisPartition`
            Current basis
        factors : `pyvot.linalg.LUFactors`
            Factors of the current basis matrix
        xB : ``numpy.ndarray``
            Working basic values, including perturbations
        realXB : ``numpy.ndarray``
            ``A_B^-1 b`` without perturbations
        objective : float
            ``c_B' xB``
        realObjective : float
            ``c_B' realXB``
        lastObjective : float
            `realObjective` before the latest step
        iteration : int
            Iterations taken in this phase
        blandMode : bool
            Whether Bland's rule is in force
        perturbationActive : bool
            Whether `xB` differs from `realXB`
        context : `pyvot.pivot.PivotContext`
            Pricing of the current iteration
        status : str
            ``None`` while running
    """
    def __init__(self, lp, partition, options, phase=2):
        self.lp = lp
        self.partition = partition
        self.options = options
        self.phase = phase
        self.factors = None
        self.xB = None
        self.realXB = None
        self.objective = 0.0
        self.realObjective = 0.0
        self.lastObjective = 0.0
        self.iteration = 0
        self.blandMode = False
        self.perturbationActive = False
        self.perturbations = 0
        self.stallCount = 0
        self.breakdowns = 0
        self.doublePivots = 0
        self.blandPivots = 0
        self.context = None
        self.multipliers = None
        self.status = None
        self.history = []
        self.phase1Iterations = 0
        self.phase1History = []
        self.phase1Stats = (0, 0)
        self.delta = options.perturbation * (1.0 + np.abs(lp.b).max())
        self.feasTol = options.feasTol * (1.0 + np.abs(lp.b).max())

    def basicCosts(self):
        return self.lp.c[np.asarray(self.partition.basic, dtype=int)]

    def refactor(self):
        columns = self.lp.columns(self.partition.basic)
        self.factors = linalg.luFactor(columns, self.options.singularTol,
                                       self.options.eps)

    def solveXB(self):
        """
        Return ``A_B^-1 b`` with values below the clamp threshold zeroed and
        negatives within tolerance raised to zero.
        """
        x = linalg.solveBasis(self.factors, self.lp.b)
        x[np.abs(x) < CLAMP_TOL] = 0.0
        x[(x < 0) & (x >= -self.feasTol)] = 0.0
        return x

    def start(self):
        """Factor the basis and compute the starting values."""
        self.refactor()
        self.resetXB()
        self.lastObjective = self.realObjective
        self.perturb()

    def resetXB(self):
        """Drop all perturbations and recompute ``xB`` from scratch."""
        self.xB = self.solveXB()
        self.realXB = self.xB.copy()
        self.perturbationActive = False
        self.updateObjective()

    def refreshReal(self):
        if self.perturbationActive:
            self.realXB = self.solveXB()
        else:
            self.realXB = self.xB.copy()
        self.realObjective = float(self.basicCosts().dot(self.realXB))

    def updateObjective(self):
        costs = self.basicCosts()
        self.objective = float(costs.dot(self.xB))
        if not self.perturbationActive:
            self.realXB = self.xB.copy()
        self.realObjective = float(costs.dot(self.realXB))

    def perturb(self):
        """Give every exact-zero basic value the perturbation ``delta``."""
        if not self.options.perturb or self.blandMode:
            return
        zero = self.xB == 0
        if zero.any():
            self.xB[zero] = self.delta
            self.perturbationActive = True
            self.perturbations += int(zero.sum())
            self.objective = float(self.basicCosts().dot(self.xB))

    def price(self):
        """Compute multipliers, reduced costs and the pivot context."""
        self.multipliers = pivot.simplexMultipliers(self, self.lp)
        costs = pivot.reducedCosts(self, self.lp, self.multipliers)
        self.context = pivot.PivotContext(
            costs, self.xB, self.partition.nonbasic,
            zeroTol=self.options.zeroTol,
            filterFraction=self.options.filterFraction,
            filterThreshold=self.options.filterThreshold)
        return self.context

class StepOutcome(object):
    """
    What a step did.

    :IVariables:
        kind : str
            `SINGLE_STEP`, `DOUBLE_STEP`, `BLAND_STEP` or `STALL_STEP`
        entering : list
            Column ids that became basic
        leaving : list
            Column ids that left the basis
        steps : list
            Values of the entering columns
        f1, f2, f3 : float
            Candidate objective values (``None`` when not computed)
        unbounded : bool
            Whether an unbounded direction was found
        degenerateBefore : bool
            Whether the true ``x_B`` had a zero entry before the step
    """
    def __init__(self, kind, entering=(), leaving=(), steps=(), f1=None,
                 f2=None, f3=None, unbounded=False):
        self.kind = kind
        self.entering = list(entering)
        self.leaving = list(leaving)
        self.steps = list(steps)
        self.f1 = f1
        self.f2 = f2
        self.f3 = f3
        self.unbounded = unbounded
        self.degenerateBefore = False

    def __repr__(self):
        return '<StepOutcome %s in=%r out=%r>' % (self.kind, self.entering,
                                                  self.leaving)

class SolveResult(object):
    """
    Outcome of `solve`.

    :IVariables:
        status : str
            `OPTIMAL`, `UNBOUNDED`, `INFEASIBLE`, `ITERATION_LIMIT` or
            `NUMERICAL_ERROR`
        x : ``numpy.ndarray``
            Final point in the problem's columns (``None`` if infeasible)
        objective : float
            ``c'x`` (``-inf`` when unbounded)
        iterations : int
            Iterations in both phases
        phase1Iterations : int
            Iterations spent in phase 1
        doublePivotCount : int
            Iterations that applied a two-variable step
        blandCount : int
            Iterations taken under Bland's rule
        infeasibility : float
            ``max |Ax - b|``
        wallTime : float
            Seconds spent in `solve`
        basis : list
            Final basic column ids
        reducedCosts : dict
            Final reduced cost per nonbasic column id
        history : list
            `IterationRecord` objects of both phases
        rule : str
            Rule used
    """
    def __init__(self, status, x=None, objective=float('nan'), iterations=0,
                 phase1Iterations=0, doublePivotCount=0, blandCount=0,
                 infeasibility=float('nan'), wallTime=0.0, basis=None,
                 reducedCosts=None, history=None, rule=DOUBLE):
        self.status = status
        self.x = x
        self.objective = objective
        self.iterations = iterations
        self.phase1Iterations = phase1Iterations
        self.doublePivotCount = doublePivotCount
        self.blandCount = blandCount
        self.infeasibility = infeasibility
        self.wallTime = wallTime
        self.basis = basis
        self.reducedCosts = reducedCosts
        self.history = history if history is not None else []
        self.rule = rule

    def __repr__(self):
        return '<SolveResult %s objective=%r iterations=%d>' % (
            self.status, self.objective, self.iterations)

    @property
    def optimal(self):
        return self.status == OPTIMAL

## STEPS ##

def updateXB(state, values, directions, leaving):
    """
    Move the basic values along the entering directions.

    Computes ``xB - directions * values``, zeroes magnitudes below ``1e-11``
    and puts the entering values into the leaving slots.

    :Parameters:
        state : `SimplexState`
            State before the basis change
        values : sequence
            Nonnegative entering values
        directions : matrix
            m-by-k columns ``A_B^-1 a_j`` of the entering columns
        leaving : sequence
            Basic slot per entering column
    :Raises NumericalBreakdown: If a remaining value drops below the
                                feasibility tolerance.
    :ReturnType: ``numpy.ndarray``
    """
    values = np.asarray(values, dtype=float)
    directions = np.asarray(directions, dtype=float).reshape(len(state.xB),
                                                             -1)
    if np.any(values < 0):
        raise ValueError("Entering values must be nonnegative")
    x = state.xB - directions.dot(values)
    x[np.abs(x) < CLAMP_TOL] = 0.0
    leaving = list(leaving)
    x[leaving] = 0.0
    low = np.flatnonzero(x < -state.feasTol)
    if len(low):
        raise NumericalBreakdown("Basic value(s) in slot(s) %s fell to %g" %
                                 (', '.join(str(i + 1) for i in low),
                                  x[low].min()))
    x = np.maximum(x, 0.0)
    for slot, value in zip(leaving, values):
        x[slot] = value
    return x

def _applyPivots(state, enteringSlots, leavingSlots, values, directions):
    """Change the basis, refactor and install the new basic values."""
    try:
        newX = updateXB(state, values, directions, leavingSlots)
    except NumericalBreakdown as e:
        log.warning("Numerical breakdown: %s; recomputing basic values", e)
        newX = None
    entering, leaving = [], []
    for basicSlot, nonbasicSlot in zip(leavingSlots, enteringSlots):
        inCol, outCol = state.partition.pivot(basicSlot, nonbasicSlot)
        entering.append(inCol)
        leaving.append(outCol)
    state.refactor()
    if newX is None:
        state.breakdowns += 1
        if state.breakdowns >= state.options.breakdownRetries:
            log.warning("Giving up after %d consecutive breakdowns",
                        state.breakdowns)
            state.status = NUMERICAL_ERROR
        state.resetXB()
        state.xB = np.maximum(state.xB, 0.0)
        state.realXB = state.xB.copy()
    else:
        state.breakdowns = 0
        state.xB = newX
    state.updateObjective()
    return entering, leaving

def assemble2DSubproblem(state, lp, j1, j2, directions=None):
    """
    Build the two-variable LP spanned by two improving nonbasic columns.

    The problem is ``min cbar_j1 x1 + cbar_j2 x2`` subject to
    ``Abar x <= xB``, turned into maximization form by negating the costs.
    Entries of ``Abar`` no larger than ``pivotTol`` in magnitude are treated
    as zero, as in the ratio test.

    :Parameters:
        state : `SimplexState`
            State with a current pivot context
        lp : `pyvot.model.StandardFormLP`
            Problem
        j1, j2 : int
            Distinct nonbasic slots with negative reduced costs
        directions : matrix
            Precomputed m-by-2 ``A_B^-1 [a_j1 a_j2]``
    :Raises InvariantFault: If a basic value is below ``-feasTol``.
    :ReturnType: `pyvot.slope2v.TwoVarLP`
    """
    ctx = state.context
    if j1 == j2:
        raise ValueError("Entering slots must differ")
    costs = ctx.reducedCosts[[j1, j2]]
    if not np.all(costs < 0):
        raise ValueError("Both entering columns must have negative reduced "
                         "costs")
    if directions is None:
        directions = linalg.solveBasisMulti(
            state.factors, lp.columns(ctx.columns[[j1, j2]]))
    rhs = np.array(state.xB, dtype=float)
    if np.any(rhs < -state.feasTol):
        raise InvariantFault("Basic values lost feasibility before the "
                             "two-variable step")
    rhs = np.maximum(rhs, 0.0)
    rows = np.array(directions, dtype=float)
    rows[np.abs(rows) <= state.options.pivotTol] = 0.0
    return slope2v.TwoVarLP.fromStructural(rows, rhs, -costs)

def _singleStep(state, slot, outcome, kind, f1=None, f2=None):
    ctx = state.context
    if outcome.unbounded:
        return StepOutcome(kind, [int(ctx.columns[slot])], [], [], f1=f1,
                           unbounded=True)
    step = outcome.step
    entering, leaving = _applyPivots(state, [slot], [outcome.leavingSlot],
                                     [step], outcome.direction)
    return StepOutcome(kind, entering, leaving, [step], f1=f1, f2=f2)

def doublePivotStep(state, lp=None):
    """
    Take one simplex step from the current pivot context.

    Under Bland's rule this is a single Bland pivot.  Otherwise the Dantzig
    column is found; with the ``'double'`` rule and at least two candidates
    the longest-step column joins it and the two-variable optimum is applied.
    Each structural row in the optimal pair of the two-variable problem
    makes one basic variable leave; a nonnegativity row in the pair keeps the
    matching entering column out.

    :Parameters:
        state : `SimplexState`
            Priced state (see `SimplexState.price`)
    :ReturnType: `StepOutcome`
    :Raises InvariantFault: If the two-variable solve fails.
    """
    if lp is None:
        lp = state.lp
    ctx = state.context
    options = state.options
    basicKeys = np.asarray(state.partition.basic)
    if state.blandMode:
        slot = pivot.blandEntering(ctx.reducedCosts, options.zeroTol,
                                   keys=ctx.columns)
        direction = linalg.solveBasis(state.factors,
                                      lp.column(ctx.columns[slot]))
        outcome = pivot.ratioTest(state.xB, direction, options.pivotTol,
                                  keys=basicKeys)
        state.blandPivots += 1
        return _singleStep(state, slot, outcome, BLAND_STEP)
    j1 = pivot.dantzigEntering(ctx.reducedCosts, options.zeroTol)
    d1 = linalg.solveBasis(state.factors, lp.column(ctx.columns[j1]))
    r1 = pivot.ratioTest(state.xB, d1, options.pivotTol)
    if r1.unbounded:
        return _singleStep(state, j1, r1, SINGLE_STEP)
    f1 = state.objective + ctx.reducedCosts[j1] * r1.step
    if options.rule == DANTZIG or len(ctx.candidates) < 2:
        return _singleStep(state, j1, r1, SINGLE_STEP, f1=f1)
    second = pivot.longestStepEntering(ctx, j1, lp, state.factors,
                                       options.pivotTol)
    if second is None:
        return _singleStep(state, j1, r1, SINGLE_STEP, f1=f1)
    j2, r2 = second
    f2 = state.objective + ctx.reducedCosts[j2] * r2.step
    directions = np.column_stack([d1, r2.direction])
    problem = assemble2DSubproblem(state, lp, j1, j2, directions)
    try:
        result = slope2v.slopeSolve(problem)
    except slope2v.SlopeError as e:
        raise InvariantFault("Two-variable solve failed on columns %d, %d: "
                             "%s" % (ctx.columns[j1] + 1,
                                     ctx.columns[j2] + 1, e))
    slots = [j1, j2]
    if result.status == slope2v.UNBOUNDED:
        return StepOutcome(DOUBLE_STEP, [int(ctx.columns[s]) for s in slots],
                           [], [], f1=f1, f2=f2, unbounded=True)
    f3 = state.objective + float(ctx.reducedCosts[slots].dot(result.x))
    numRows = lp.numRows
    leavingSlots = [r for r in result.basisRows if r < numRows]
    pinned = [r - numRows for r in result.basisRows if r >= numRows]
    enteringIdx = [k for k in (0, 1) if k not in pinned]
    if not leavingSlots:
        # Optimum at the origin: both steps are zero, so take the
        # degenerate Dantzig pivot.
        log.debug("Two-variable optimum at the origin; taking a Dantzig "
                  "pivot")
        return _singleStep(state, j1, r1, SINGLE_STEP, f1=f1, f2=f2)
    values = result.x[enteringIdx]
    entering, leaving = _applyPivots(state,
                                     [slots[k] for k in enteringIdx],
                                     leavingSlots, values,
                                     directions[:, enteringIdx])
    state.doublePivots += 1
    log.debug("Double step: in %s out %s, f1=%g f2=%g f3=%g",
              [j + 1 for j in entering], [j + 1 for j in leaving], f1, f2, f3)
    return StepOutcome(DOUBLE_STEP, entering, leaving, list(values), f1=f1,
                       f2=f2, f3=f3)

def antiCyclingGuard(state, outcome):
    """
    Update the anti-cycling mode after a step.

    A step that fails to decrease the true objective by more than
    ``improveTol * (1 + |objective|)`` while the true ``x_B`` had a zero
    entry both before and after it is a stall.  ``stallLimit`` consecutive
    stalls switch to Bland's rule and drop all perturbations; Bland's rule
    stays until the first strict decrease.  Outside Bland mode any zero
    basic value is then perturbed.

    :Returns: `NORMAL_MODE` or `BLAND_MODE`
    """
    options = state.options
    state.refreshReal()
    current = state.realObjective
    improved = state.lastObjective - current > \
        options.improveTol * (1.0 + abs(current))
    zeroAfter = bool(np.any(state.realXB == 0))
    if state.blandMode:
        if improved:
            state.blandMode = False
            state.stallCount = 0
            log.info("Leaving Bland mode at iteration %d", state.iteration)
    elif not improved and outcome.degenerateBefore and zeroAfter:
        state.stallCount += 1
        if outcome.kind != BLAND_STEP:
            outcome.kind = STALL_STEP
        if options.bland and state.stallCount >= options.stallLimit:
            state.blandMode = True
            state.resetXB()
            log.info("Entering Bland mode at iteration %d", state.iteration)
    else:
        state.stallCount = 0
    state.lastObjective = current
    if not state.blandMode:
        state.perturb()
    if state.blandMode:
        return BLAND_MODE
    return NORMAL_MODE

def _iterate(state, limit, target=None):
    """Run simplex iterations until a status is reached."""
    options = state.options
    sink = options.telemetry
    while state.status is None:
        if state.iteration >= limit:
            state.status = ITERATION_LIMIT
            break
        ctx = state.price()
        if target is not None and state.realObjective <= target:
            state.status = OPTIMAL
            break
        if not len(ctx.candidates):
            state.status = OPTIMAL
            break
        degenerate = bool(np.any(state.realXB == 0))
        outcome = doublePivotStep(state)
        if outcome.unbounded:
            state.status = UNBOUNDED
            break
        outcome.degenerateBefore = degenerate
        state.iteration += 1
        antiCyclingGuard(state, outcome)
        record = IterationRecord(state.iteration, state.phase, outcome.kind,
                                 outcome.entering, outcome.leaving,
                                 outcome.steps, outcome.f1, outcome.f2,
                                 outcome.f3, state.realObjective,
                                 state.partition.signature())
        if options.recordHistory:
            state.history.append(record)
        if sink is not None:
            sink.record(record)
        log.debug("Iteration %d (phase %d, %s): objective %.12g",
                  state.iteration, state.phase, outcome.kind,
                  state.realObjective)
    return state.status

## PHASES ##

def phase1(lp, options=None):
    """
    Find a basic feasible solution.

    Rows with negative ``b`` are negated.  Columns with a single positive
    entry seed the basis, later columns first; each row left uncovered gets
    an artificial column.  If any were needed, their sum is minimized with
    the same engine and rule, stopping as soon as it reaches zero.
    Artificials still basic at zero are exchanged for any original column
    with a nonzero entry in their row of ``A_B^-1 A``; if there is none the
    row is redundant and deleted.

    :Returns: A started `SimplexState` for phase 2, or a state whose
              ``status`` is `INFEASIBLE`, `ITERATION_LIMIT` or
              `NUMERICAL_ERROR`
    :ReturnType: `SimplexState`
    """
    if options is None:
        options = SolverOptions()
    signs = np.where(lp.b < 0, -1.0, 1.0)
    work = lp.withRowSigns(signs) if np.any(signs < 0) else lp
    numRows, numCols = work.shape
    A = work.A
    basic = [-1] * numRows
    # Slack columns come last; scanning backwards prefers them.
    for j in range(numCols - 1, -1, -1):
        start, end = A.indptr[j], A.indptr[j + 1]
        if end - start == 1 and A.data[start] > 0 and \
           basic[A.indices[start]] < 0:
            basic[A.indices[start]] = j
    missing = [i for i in range(numRows) if basic[i] < 0]
    if not missing:
        state = SimplexState(work, BasisPartition(basic, numCols), options)
        state.start()
        log.info("Phase 1: starting basis found directly")
        return state
    numArt = len(missing)
    artificial = sparse.csc_matrix(
        (np.ones(numArt), (missing, np.arange(numArt))),
        shape=(numRows, numArt))
    auxCost = np.concatenate([np.zeros(numCols), np.ones(numArt)])
    aux = StandardFormLP(sparse.hstack([A, artificial]), work.b, auxCost,
                         name=lp.name + ' (phase 1)')
    for k, i in enumerate(missing):
        basic[i] = numCols + k
    auxState = SimplexState(aux, BasisPartition(basic, numCols + numArt),
                            options, phase=1)
    auxState.start()
    target = auxState.feasTol
    log.info("Phase 1: %d artificial column(s)", numArt)
    _iterate(auxState, options.iterationLimit(lp), target=target)
    if auxState.status != OPTIMAL:
        return auxState
    auxState.refreshReal()
    if auxState.realObjective > target:
        log.info("Phase 1: infeasible (artificial sum %g)",
                 auxState.realObjective)
        auxState.status = INFEASIBLE
        return auxState
    partition = auxState.partition
    deleted = []
    dropSlots = []
    for slot in range(numRows):
        column = partition.basic[slot]
        if column < numCols:
            continue
        unit = np.zeros(numRows)
        unit[slot] = 1.0
        w = linalg.solveBasisTranspose(auxState.factors, unit)
        row = np.abs(A.T.dot(w))
        for j in partition.basic:
            if j < numCols:
                row[j] = 0.0
        j = int(np.argmax(row))
        if row[j] > options.pivotTol:
            partition.pivot(slot, partition.positionOf(j)[1])
            auxState.refactor()
        else:
            deleted.append(missing[column - numCols])
            dropSlots.append(slot)
    if deleted:
        log.info("Phase 1: deleting redundant row(s) %s",
                 ', '.join(str(i + 1) for i in sorted(deleted)))
        keep = [i for i in range(numRows) if i not in set(deleted)]
        work = work.withRows(keep)
    basic = [j for slot, j in enumerate(partition.basic)
             if slot not in set(dropSlots)]
    state = SimplexState(work, BasisPartition(basic, numCols), options)
    state.start()
    state.phase1Iterations = auxState.iteration
    state.phase1History = auxState.history
    state.phase1Stats = (auxState.doublePivots, auxState.blandPivots)
    return state

def solve(lp, options=None, **kw):
    """
    Solve a standard-form LP.

    :Parameters:
        lp : `pyvot.model.StandardFormLP`
            Problem
        options : `SolverOptions`
            Settings; keyword arguments override individual options
    :ReturnType: `SolveResult`
    """
    if options is None:
        options = SolverOptions(**kw)
    elif kw:
        options = options.copy(**kw)
    watch = Stopwatch()
    watch.start()
    limit = options.iterationLimit(lp)
    state = phase1(lp, options)
    phase1Iterations = state.phase1Iterations
    history = list(state.phase1History)
    extraDouble, extraBland = state.phase1Stats
    if state.phase == 1:
        # Phase 1 did not produce a feasible basis.
        wallTime = watch.stop()
        log.info("%s: %s after %d phase-1 iterations", lp.name, state.status,
                 state.iteration)
        return SolveResult(state.status, iterations=state.iteration,
                           phase1Iterations=state.iteration,
                           doublePivotCount=state.doublePivots,
                           blandCount=state.blandPivots,
                           wallTime=wallTime, history=state.history,
                           rule=options.rule)
    _iterate(state, max(0, limit - phase1Iterations))
    x = np.zeros(lp.numCols)
    realXB = state.solveXB()
    x[np.asarray(state.partition.basic, dtype=int)] = np.maximum(realXB, 0.0)
    if state.status == UNBOUNDED:
        objective = float('-inf')
    else:
        objective = float(lp.c.dot(x))
    history.extend(state.history)
    reduced = None
    if state.context is not None:
        reduced = dict(zip(state.context.columns.tolist(),
                           state.context.reducedCosts.tolist()))
    wallTime = watch.stop()
    result = SolveResult(state.status, x=x, objective=objective,
                         iterations=phase1Iterations + state.iteration,
                         phase1Iterations=phase1Iterations,
                         doublePivotCount=state.doublePivots + extraDouble,
                         blandCount=state.blandPivots + extraBland,
                         infeasibility=infeasibility(lp, x),
                         wallTime=wallTime,
                         basis=list(state.partition.basic),
                         reducedCosts=reduced, history=history,
                         rule=options.rule)
    log.info("%s: %s, objective %.12g, %d iterations (%d double)",
             lp.name, result.status, result.objective, result.iterations,
             result.doublePivotCount)
    return result
