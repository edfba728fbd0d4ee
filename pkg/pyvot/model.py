#!/usr/bin/env python
#
#   model.py
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
Linear program representations.

Three kinds of objects live here:

`GeneralLP`
    The row/column model read from MPS files: named rows of type ``L``, ``G``
    or ``E``, ranges, bounds and a single objective row.
`StandardFormLP`
    The problem every solver routine works on::

        min c'x  subject to  Ax = b, x >= 0

    ``A`` is kept in compressed sparse column storage.
`BasisPartition`
    The split of the standard-form columns into basic and nonbasic lists.

`toStandardForm` turns the first into the second and hands back a
`VariableMap` that undoes the conversion.

Indices are 0-based in storage.  Log messages and documentation count rows and
columns from 1.
"""

import logging
import math

import numpy as np
from scipy import sparse

__author__ = 'pyvot developers'
__date__ = 'October 3, 2026'
__all__ = ['ValidationError',
           'InfeasibleModelError',
           'MINIMIZE',
           'MAXIMIZE',
           'LESS',
           'GREATER',
           'EQUAL',
           'StandardFormLP',
           'BasisPartition',
           'ColumnView',
           'GeneralLP',
           'VariableMap',
           'toStandardForm',
           'splitColumns',
           'infeasibility',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

MINIMIZE = 'min'
MAXIMIZE = 'max'

LESS = 'L'
GREATER = 'G'
EQUAL = 'E'

_rowTypes = (LESS, GREATER, EQUAL)
_inf = float('inf')

class ValidationError(ValueError):
    """Raised when a model breaks one of its structural rules."""
    pass

class InfeasibleModelError(ValidationError):
    """Raised when a model is infeasible on its face (e.g. lower > upper)."""
    pass

## STANDARD FORM ##

class StandardFormLP(object):
    """
    A linear program ``min c'x, Ax = b, x >= 0``.

    Instances are immutable: the arrays are copied on construction and marked
    read-only, so one problem may be shared between solves.

    :IVariables:
        A : ``scipy.sparse.csc_matrix``
            Constraint matrix, canonical (no stored zeros, no duplicates)
        b : ``numpy.ndarray``
            Right-hand side
        c : ``numpy.ndarray``
            Cost vector
        name : str
            Label used in reports
        columnNames : list
            Optional column labels
    """
    def __init__(self, A, b, c, name='', columnNames=None):
        A = sparse.csc_matrix(A, dtype=float, copy=True)
        A.sum_duplicates()
        A.eliminate_zeros()
        b = np.array(b, dtype=float).ravel()
        c = np.array(c, dtype=float).ravel()
        m, n = A.shape
        if m < 1 or n < 1:
            raise ValidationError("Problem must have at least one row and "
                                  "one column (got %dx%d)" % (m, n))
        if len(b) != m:
            raise ValidationError("b has length %d, expected %d" % (len(b), m))
        if len(c) != n:
            raise ValidationError("c has length %d, expected %d" % (len(c), n))
        if not (np.all(np.isfinite(A.data)) and np.all(np.isfinite(b)) and
                np.all(np.isfinite(c))):
            raise ValidationError("Problem data must be finite")
        if columnNames is not None and len(columnNames) != n:
            raise ValidationError("Expected %d column names" % n)
        for array in (A.data, A.indices, A.indptr, b, c):
            array.flags.writeable = False
        self.A = A
        self.b = b
        self.c = c
        self.name = name
        self.columnNames = list(columnNames) if columnNames else None

    def __repr__(self):
        return '<StandardFormLP %r %dx%d>' % (self.name,
                                              self.numRows,
                                              self.numCols)

    @property
    def numRows(self):
        return self.A.shape[0]

    @property
    def numCols(self):
        return self.A.shape[1]

    @property
    def shape(self):
        return self.A.shape

    def column(self, j):
        """Return column *j* of ``A`` as a dense vector."""
        start, end = self.A.indptr[j], self.A.indptr[j + 1]
        result = np.zeros(self.numRows)
        result[self.A.indices[start:end]] = self.A.data[start:end]
        return result

    def columns(self, indices):
        """Return the selected columns of ``A`` as a dense m-by-k array."""
        return self.A[:, list(indices)].toarray()

    def dense(self):
        """Return ``A`` as a dense array."""
        return self.A.toarray()

    def objectiveValue(self, x):
        return float(np.dot(self.c, x))

    def withRows(self, rows):
        """
        Return the problem restricted to the given rows.

        :Parameters:
            rows : sequence of int
                Row indices to keep, in order
        :ReturnType: `StandardFormLP`
        """
        rows = list(rows)
        return StandardFormLP(self.A[rows, :], self.b[rows], self.c,
                              name=self.name, columnNames=self.columnNames)

    def withRowSigns(self, signs):
        """Return the problem with row *i* multiplied by ``signs[i]``."""
        signs = np.asarray(signs, dtype=float)
        A = sparse.diags(signs).dot(self.A)
        return StandardFormLP(A, self.b * signs, self.c,
                              name=self.name, columnNames=self.columnNames)

def infeasibility(lp, x):
    """
    Measure how far *x* is from satisfying ``Ax = b``.

    :Parameters:
        lp : `StandardFormLP`
            Problem
        x : vector
            Point of length n
    :Returns: ``max |Ax - b|``
    :ReturnType: float
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (lp.numCols,):
        raise ValueError("x must have length %d" % lp.numCols)
    return float(np.max(np.abs(lp.A.dot(x) - lp.b)))

## BASIS BOOKKEEPING ##

class BasisPartition(object):
    """
    Split of the columns ``0..n-1`` into basic and nonbasic lists.

    The basic list has one entry per row (the basic *slot*); the nonbasic list
    holds the remaining columns.  `positionOf` is kept as the inverse of both
    lists.

    :IVariables:
        basic : list
            Basic column per slot
        nonbasic : list
            Nonbasic column per slot
    """
    def __init__(self, basic, numCols, nonbasic=None):
        basic = [int(j) for j in basic]
        if len(set(basic)) != len(basic):
            raise ValidationError("Duplicate basic column")
        for j in basic:
            if not 0 <= j < numCols:
                raise ValidationError("Basic column %d out of range" % (j + 1))
        if nonbasic is None:
            basicSet = set(basic)
            nonbasic = [j for j in range(numCols) if j not in basicSet]
        else:
            nonbasic = [int(j) for j in nonbasic]
            if sorted(basic + nonbasic) != list(range(numCols)):
                raise ValidationError("Basic and nonbasic lists must "
                                      "partition the columns")
        self.basic = basic
        self.nonbasic = nonbasic
        self._isBasic = np.zeros(numCols, dtype=bool)
        self._slot = np.zeros(numCols, dtype=int)
        self._reindex()

    def _reindex(self):
        for slot, j in enumerate(self.basic):
            self._isBasic[j] = True
            self._slot[j] = slot
        for slot, j in enumerate(self.nonbasic):
            self._isBasic[j] = False
            self._slot[j] = slot

    def __repr__(self):
        return '<BasisPartition basic=%r>' % ([j + 1 for j in self.basic],)

    @property
    def numCols(self):
        return len(self._slot)

    def positionOf(self, column):
        """
        Locate a column.

        :Returns: ``(isBasic, slot)``
        :ReturnType: tuple
        """
        return bool(self._isBasic[column]), int(self._slot[column])

    def isBasic(self, column):
        return bool(self._isBasic[column])

    def pivot(self, basicSlot, nonbasicSlot):
        """
        Exchange a basic and a nonbasic column.

        The entering column takes the leaving column's basic slot and the
        leaving column takes the entering column's nonbasic slot.

        :Returns: ``(entering, leaving)`` column ids
        """
        entering = self.nonbasic[nonbasicSlot]
        leaving = self.basic[basicSlot]
        self.basic[basicSlot] = entering
        self.nonbasic[nonbasicSlot] = leaving
        self._isBasic[entering] = True
        self._slot[entering] = basicSlot
        self._isBasic[leaving] = False
        self._slot[leaving] = nonbasicSlot
        return entering, leaving

    def signature(self):
        """Return an order-independent key for the current basis."""
        return tuple(sorted(self.basic))

    def copy(self):
        return BasisPartition(self.basic, self.numCols, self.nonbasic)

    def check(self):
        """
        Verify the partition invariants.

        :Raises ValidationError: If the lists or the inverse map disagree.
        """
        if sorted(self.basic + self.nonbasic) != list(range(self.numCols)):
            raise ValidationError("Lists do not partition the columns")
        for slot, j in enumerate(self.basic):
            if self.positionOf(j) != (True, slot):
                raise ValidationError("Stale position for basic column %d" %
                                      (j + 1))
        for slot, j in enumerate(self.nonbasic):
            if self.positionOf(j) != (False, slot):
                raise ValidationError("Stale position for nonbasic column %d"
                                      % (j + 1))

class ColumnView(object):
    """
    Read-only selection of columns from a `StandardFormLP`.

    The view keeps a reference to the problem and an index array; nothing is
    copied until `toarray` is called.
    """
    def __init__(self, lp, indices):
        self.lp = lp
        self.indices = np.array(indices, dtype=int)

    def __len__(self):
        return len(self.indices)

    @property
    def shape(self):
        return (self.lp.numRows, len(self.indices))

    def column(self, k):
        return self.lp.column(self.indices[k])

    def toarray(self):
        return self.lp.A[:, self.indices].toarray()

    def dot(self, x):
        """Return ``A_S x`` for the selected columns ``S``."""
        full = np.zeros(self.lp.numCols)
        full[self.indices] = x
        return self.lp.A.dot(full)

    def transposeDot(self, p):
        """Return ``A_S' p`` for the selected columns ``S``."""
        return self.lp.A.T.dot(p)[self.indices]

def splitColumns(lp, partition):
    """
    Split a problem along a basis partition.

    :Parameters:
        lp : `StandardFormLP`
            Problem
        partition : `BasisPartition`
            Current basis
    :Returns: ``(A_B, A_N, c_B, c_N)`` where the first two are `ColumnView`
              objects
    :ReturnType: tuple
    """
    basic = np.array(partition.basic, dtype=int)
    nonbasic = np.array(partition.nonbasic, dtype=int)
    return (ColumnView(lp, basic), ColumnView(lp, nonbasic),
            lp.c[basic].copy(), lp.c[nonbasic].copy())

## GENERAL MODEL ##

class GeneralLP(object):
    """
    Named-row linear program as found in MPS files.

    The model is filled in by its builder methods and treated as read-only
    afterwards.  Coefficients on the objective row go to `objective`; all
    others go to `coefficients`.  A right-hand side on the objective row sets
    the objective constant to its negation, as MPS does.

    :IVariables:
        name : str
            Model name
        sense : str
            `MINIMIZE` or `MAXIMIZE`
        objectiveName : str
            Name of the objective row
        objectiveConstant : float
            Constant added to the objective
        rowNames : list
            Constraint rows in declaration order
        rowTypes : dict
            Row name to ``'L'``, ``'G'`` or ``'E'``
        columnNames : list
            Columns in declaration order
        coefficients : dict
            ``(row, column)`` to value
        objective : dict
            Column to objective coefficient
        rhs : dict
            Row to right-hand side (missing means 0)
        ranges : dict
            Row to range value
        bounds : dict
            Column to ``(lower, upper)`` (missing means ``(0, inf)``)
    """
    def __init__(self, name='', sense=MINIMIZE):
        if sense not in (MINIMIZE, MAXIMIZE):
            raise ValidationError("Unknown objective sense %r" % (sense,))
        self.name = name
        self.sense = sense
        self.objectiveName = None
        self.objectiveConstant = 0.0
        self.rowNames = []
        self.rowTypes = {}
        self.columnNames = []
        self._columnSet = set()
        self.coefficients = {}
        self.objective = {}
        self.rhs = {}
        self.ranges = {}
        self.bounds = {}

    def __repr__(self):
        return '<GeneralLP %r rows=%d columns=%d>' % (self.name,
                                                      self.numRows,
                                                      self.numColumns)

    @property
    def numRows(self):
        return len(self.rowNames)

    @property
    def numColumns(self):
        return len(self.columnNames)

    @property
    def numNonzeros(self):
        return len(self.coefficients)

    def hasRow(self, name):
        return name in self.rowTypes or name == self.objectiveName

    def hasColumn(self, name):
        return name in self._columnSet

    def setObjectiveRow(self, name):
        if self.objectiveName is not None:
            raise ValidationError("Objective row already set to %r" %
                                  (self.objectiveName,))
        if name in self.rowTypes:
            raise ValidationError("Duplicate row %r" % (name,))
        self.objectiveName = name

    def addRow(self, name, rowType):
        if rowType not in _rowTypes:
            raise ValidationError("Unknown row type %r for row %r" %
                                  (rowType, name))
        if self.hasRow(name):
            raise ValidationError("Duplicate row %r" % (name,))
        self.rowNames.append(name)
        self.rowTypes[name] = rowType

    def addColumn(self, name):
        if name in self._columnSet:
            raise ValidationError("Duplicate column %r" % (name,))
        self.columnNames.append(name)
        self._columnSet.add(name)

    def addCoefficient(self, row, column, value):
        """
        Add a coefficient, summing with any existing entry.

        :Returns: Whether an entry already existed
        :ReturnType: bool
        """
        if column not in self._columnSet:
            raise ValidationError("Undeclared column %r" % (column,))
        if row == self.objectiveName:
            duplicate = column in self.objective
            self.objective[column] = self.objective.get(column, 0.0) + value
        elif row in self.rowTypes:
            key = (row, column)
            duplicate = key in self.coefficients
            self.coefficients[key] = self.coefficients.get(key, 0.0) + value
        else:
            raise ValidationError("Undeclared row %r" % (row,))
        return duplicate

    def setRHS(self, row, value):
        if row == self.objectiveName:
            self.objectiveConstant = -value
        elif row in self.rowTypes:
            self.rhs[row] = value
        else:
            raise ValidationError("Undeclared row %r" % (row,))

    def setRange(self, row, value):
        if row not in self.rowTypes:
            raise ValidationError("Undeclared row %r" % (row,))
        self.ranges[row] = value

    def getBounds(self, column):
        return self.bounds.get(column, (0.0, _inf))

    def setBounds(self, column, lower=None, upper=None):
        """Change one or both bounds of a column."""
        if column not in self._columnSet:
            raise ValidationError("Undeclared column %r" % (column,))
        oldLower, oldUpper = self.getBounds(column)
        if lower is None:
            lower = oldLower
        if upper is None:
            upper = oldUpper
        self.bounds[column] = (float(lower), float(upper))

    def rowInterval(self, row):
        """
        Return the activity interval ``(lo, hi)`` of a constraint row.

        Ranges follow the MPS convention:

        ====  ==========  ===================
        Type  Range sign  Interval
        ====  ==========  ===================
        L     any         ``[b - |r|, b]``
        G     any         ``[b, b + |r|]``
        E     ``r > 0``   ``[b, b + r]``
        E     ``r < 0``   ``[b + r, b]``
        ====  ==========  ===================
        """
        rowType = self.rowTypes[row]
        b = self.rhs.get(row, 0.0)
        r = self.ranges.get(row)
        if rowType == LESS:
            return (-_inf if r is None else b - abs(r)), b
        elif rowType == GREATER:
            return b, (_inf if r is None else b + abs(r))
        elif r is None or r == 0:
            return b, b
        elif r > 0:
            return b, b + r
        else:
            return b + r, b

    def rowEntries(self):
        """
        Group the constraint coefficients by row.

        :Returns: Row name to list of ``(column, value)`` in column order
        :ReturnType: dict
        """
        order = dict((name, i) for i, name in enumerate(self.columnNames))
        result = dict((name, []) for name in self.rowNames)
        for (row, column), value in self.coefficients.items():
            result[row].append((column, value))
        for entries in result.values():
            entries.sort(key=lambda entry: order[entry[0]])
        return result

    def columnEntries(self):
        """Group the constraint coefficients by column."""
        order = dict((name, i) for i, name in enumerate(self.rowNames))
        result = dict((name, []) for name in self.columnNames)
        for (row, column), value in self.coefficients.items():
            result[column].append((row, value))
        for entries in result.values():
            entries.sort(key=lambda entry: order[entry[0]])
        return result

    def validate(self):
        """
        Check the model invariants.

        :Raises ValidationError: If there is no objective row or a
                                 coefficient names an unknown row or column.
        :Raises InfeasibleModelError: If a column has lower > upper.
        """
        if self.objectiveName is None:
            raise ValidationError("Model %r has an empty objective" %
                                  (self.name,))
        for row, column in self.coefficients:
            if row not in self.rowTypes or column not in self._columnSet:
                raise ValidationError("Coefficient (%r, %r) references an "
                                      "undeclared name" % (row, column))
        for column in self.objective:
            if column not in self._columnSet:
                raise ValidationError("Objective references undeclared "
                                      "column %r" % (column,))
        for column, (lower, upper) in self.bounds.items():
            if lower > upper:
                raise InfeasibleModelError("Column %r has lower bound %g "
                                           "above upper bound %g" %
                                           (column, lower, upper))

    def objectiveValue(self, values):
        """
        Evaluate the objective at a point.

        :Parameters:
            values : dict or sequence
                Column values, by name or in column order
        """
        if not isinstance(values, dict):
            values = dict(zip(self.columnNames, values))
        total = self.objectiveConstant
        for column, cost in self.objective.items():
            total += cost * values[column]
        return total

    def removeColumn(self, column):
        """
        Delete a column with its coefficients, cost and bounds.

        :Raises KeyError: If the column does not exist.
        """
        if column not in self._columnSet:
            raise KeyError(column)
        self.columnNames.remove(column)
        self._columnSet.discard(column)
        self.objective.pop(column, None)
        self.bounds.pop(column, None)
        for key in [key for key in self.coefficients if key[1] == column]:
            del self.coefficients[key]

    def removeRow(self, row):
        """
        Delete a constraint row with its coefficients, rhs and range.

        :Raises KeyError: If the row does not exist.
        """
        if row not in self.rowTypes:
            raise KeyError(row)
        self.rowNames.remove(row)
        del self.rowTypes[row]
        self.rhs.pop(row, None)
        self.ranges.pop(row, None)
        for key in [key for key in self.coefficients if key[0] == row]:
            del self.coefficients[key]

    def copy(self):
        other = GeneralLP(self.name, self.sense)
        other.objectiveName = self.objectiveName
        other.objectiveConstant = self.objectiveConstant
        other.rowNames = list(self.rowNames)
        other.rowTypes = dict(self.rowTypes)
        other.columnNames = list(self.columnNames)
        other._columnSet = set(self._columnSet)
        other.coefficients = dict(self.coefficients)
        other.objective = dict(self.objective)
        other.rhs = dict(self.rhs)
        other.ranges = dict(self.ranges)
        other.bounds = dict(self.bounds)
        return other

## CONVERSION ##

class VariableMap(object):
    """
    Maps standard-form values back to the original model.

    Each original column is ``offset + sum(coef * x_std[idx])`` over its
    terms.  The original objective equals ``sense * (c_std'x_std + constant)``
    where ``sense`` is 1 for minimization and -1 for maximization.

    :IVariables:
        columnNames : list
            Original columns
        offsets : ``numpy.ndarray``
            Shift per original column
        terms : list
            Per original column, a list of ``(stdIndex, coefficient)``
        sense : int
            1 or -1
        constant : float
            Standard-form objective constant
        numStd : int
            Number of standard-form columns
    """
    def __init__(self, columnNames, offsets, terms, sense, constant, numStd):
        self.columnNames = list(columnNames)
        self.offsets = np.asarray(offsets, dtype=float)
        self.terms = terms
        self.sense = sense
        self.constant = constant
        self.numStd = numStd

    def recover(self, xStd):
        """Return original column values in column order."""
        xStd = np.asarray(xStd, dtype=float)
        result = self.offsets.copy()
        for j, terms in enumerate(self.terms):
            for index, coef in terms:
                result[j] += coef * xStd[index]
        return result

    def recoverDict(self, xStd):
        return dict(zip(self.columnNames, self.recover(xStd)))

    def objective(self, lp, xStd):
        """Return the original objective value for a standard-form point."""
        return self.sense * (float(np.dot(lp.c, xStd)) + self.constant)

def toStandardForm(model):
    """
    Convert a `GeneralLP` to standard form.

    Columns:

    - finite lower bound *l*: ``x = l + x'``; a finite upper bound *u* adds
      the row ``x' + t = u - l``
    - only a finite upper bound: ``x = u - x'``
    - free: ``x = x+ - x-``

    Rows:

    - ``E``: kept as is
    - only an upper limit: slack ``+s``
    - only a lower limit: surplus ``-s``
    - ranged: ``a'x + s = hi`` plus ``s + t = hi - lo``

    Structural columns come first in model order, then slacks in the order
    their rows were emitted.

    :Parameters:
        model : `GeneralLP`
            Model to convert
    :Raises ValidationError: If the model is invalid or has no constraints.
    :Raises InfeasibleModelError: If a column has lower > upper.
    :Returns: ``(lp, variableMap)``
    :ReturnType: tuple
    """
    model.validate()
    names = []
    offsets = []
    terms = []
    upperRows = []

    def newColumn(name):
        names.append(name)
        return len(names) - 1

    for column in model.columnNames:
        lower, upper = model.getBounds(column)
        if lower > upper:
            raise InfeasibleModelError("Column %r has lower bound %g above "
                                       "upper bound %g" %
                                       (column, lower, upper))
        if not math.isinf(lower):
            index = newColumn(column)
            offsets.append(lower)
            terms.append([(index, 1.0)])
            if not math.isinf(upper):
                upperRows.append((index, upper - lower))
        elif not math.isinf(upper):
            index = newColumn(column + '~')
            offsets.append(upper)
            terms.append([(index, -1.0)])
        else:
            plus = newColumn(column + '+')
            minus = newColumn(column + '-')
            offsets.append(0.0)
            terms.append([(plus, 1.0), (minus, -1.0)])
    columnIndex = dict((name, j) for j, name in enumerate(model.columnNames))
    rowsI, colsI, vals = [], [], []
    rhs = []
    slacks = []     # (row, coefficient, name)

    def newRow(entries, value):
        row = len(rhs)
        for index, coef in entries:
            rowsI.append(row)
            colsI.append(index)
            vals.append(coef)
        rhs.append(value)
        return row

    rowEntries = model.rowEntries()
    for rowName in model.rowNames:
        lo, hi = model.rowInterval(rowName)
        if math.isinf(lo) and math.isinf(hi):
            log.debug("Dropping free row %s", rowName)
            continue
        combined = {}
        shift = 0.0
        for column, value in rowEntries[rowName]:
            j = columnIndex[column]
            shift += value * offsets[j]
            for index, coef in terms[j]:
                combined[index] = combined.get(index, 0.0) + value * coef
        entries = sorted(combined.items())
        lo -= shift
        hi -= shift
        if lo == hi:
            newRow(entries, hi)
        elif math.isinf(lo):
            row = newRow(entries, hi)
            slacks.append((row, 1.0, 's:' + rowName))
        elif math.isinf(hi):
            row = newRow(entries, lo)
            slacks.append((row, -1.0, 's:' + rowName))
        else:
            row = newRow(entries, hi)
            slack = len(names) + len(slacks)
            slacks.append((row, 1.0, 's:' + rowName))
            rangeRow = newRow([], hi - lo)
            rowsI.append(rangeRow)
            colsI.append(slack)
            vals.append(1.0)
            slacks.append((rangeRow, 1.0, 't:' + rowName))
    for index, width in upperRows:
        row = newRow([(index, 1.0)], width)
        slacks.append((row, 1.0, 'u:' + names[index]))
    if not rhs:
        raise ValidationError("Model %r has no constraints" % (model.name,))
    for row, coef, name in slacks:
        rowsI.append(row)
        colsI.append(newColumn(name))
        vals.append(coef)
    numRows, numCols = len(rhs), len(names)
    A = sparse.coo_matrix((vals, (rowsI, colsI)), shape=(numRows, numCols))
    sense = 1 if model.sense == MINIMIZE else -1
    c = np.zeros(numCols)
    constant = model.objectiveConstant
    for column, cost in model.objective.items():
        j = columnIndex[column]
        constant += cost * offsets[j]
        for index, coef in terms[j]:
            c[index] += sense * cost * coef
    lp = StandardFormLP(A, rhs, c, name=model.name, columnNames=names)
    varMap = VariableMap(model.columnNames, offsets, terms, sense,
                         sense * constant, numCols)
    log.debug("Standard form of %s: %d rows, %d columns", model.name,
              numRows, numCols)
    return lp, varMap
