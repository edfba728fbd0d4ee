#!/usr/bin/env python
#
#   mpsio.py
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
MPS input and output, presolve and postsolve.

Reading
-------

Both fixed and free MPS are accepted.  Each data line is split on whitespace
first; if the number of fields does not fit the section, the fixed-format
columns (2-3, 5-12, 15-22, 25-36, 40-47, 50-61) are tried instead, which
handles names with embedded spaces.  Comment lines start with ``*``.

Sections may appear in this order: ``NAME``, ``OBJSENSE``, ``ROWS``,
``COLUMNS``, ``RHS``, ``RANGES``, ``BOUNDS``, ``ENDATA``.  ``ROWS`` and
``COLUMNS`` are required.

Odd but legal input produces an `MPSWarning` (also kept in
`MpsDocument.warnings`):

- duplicate coefficient entries, which are summed
- objective rows after the first, which are ignored
- right-hand side, range and bound sets after the first, which are ignored
- an ``UP`` bound below zero on a column whose lower bound is still 0, which
  makes the lower bound minus infinity

Integer markers and the ``BV``, ``LI``, ``UI`` and ``SC`` bound types raise
`UnsupportedFeatureError`.

Presolve
--------

`presolve` applies a small set of exact reductions until nothing changes:

1. Fixed columns (lower == upper) are substituted into the rows.
2. Columns without coefficients are set to their best bound and removed (kept
   if that bound is infinite).
3. Rows without coefficients are checked against their interval and removed.

Finally every row's activity range over the column bounds is checked.  A
contradiction sets `PresolveReport.infeasible`; it is not an exception.
"""

import gzip
import logging
import math
import warnings

import numpy as np

from pyvot import engine
from pyvot.model import (GeneralLP, MINIMIZE, MAXIMIZE, LESS, GREATER,
                         EQUAL, toStandardForm)

__author__ = 'pyvot developers'
__date__ = 'October 11, 2026'
__all__ = ['MPSWarning',
           'MPSError',
           'UnsupportedFeatureError',
           'MpsDocument',
           'readDocument',
           'parseMPS',
           'readMPS',
           'writeMPS',
           'standardFormModel',
           'PresolveReport',
           'presolve',
           'postsolve',
           'ModelSolution',
           'solveModel',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

_inf = float('inf')

_sectionOrder = {'NAME': 0,
                 'OBJSENSE': 1,
                 'ROWS': 2,
                 'COLUMNS': 3,
                 'RHS': 4,
                 'RANGES': 5,
                 'BOUNDS': 6,
                 'ENDATA': 7,}
_fixedSlices = ((1, 3), (4, 12), (14, 22), (24, 36), (39, 47), (49, 61))
_valueBounds = ('UP', 'LO', 'FX')
_flagBounds = ('FR', 'MI', 'PL')
_integerBounds = ('BV', 'LI', 'UI', 'SC')
_senses = {'MIN': MINIMIZE,
           'MINIMIZE': MINIMIZE,
           'MAX': MAXIMIZE,
           'MAXIMIZE': MAXIMIZE,}

class MPSWarning(UserWarning):
    """Warning emitted for odd but legal MPS constructs."""
    pass

class MPSError(ValueError):
    """
    Raised for malformed MPS input.

    :IVariables:
        lineNumber : int
            1-based line of the problem, or ``None``
    """
    def __init__(self, message, lineNumber=None):
        self.message = message
        self.lineNumber = lineNumber
        if lineNumber is None:
            ValueError.__init__(self, message)
        else:
            ValueError.__init__(self, 'line %d: %s' % (lineNumber, message))

class UnsupportedFeatureError(MPSError):
    """Raised for integrality constructs, which are not supported."""
    pass

## READING ##

class MpsDocument(object):
    """
    Result of reading an MPS text.

    :IVariables:
        name : str
            Problem name from the ``NAME`` card
        sections : list
            ``(section, firstLine, lastLine)`` in file order
        warnings : list
            Warning messages, each prefixed with its line
        model : `pyvot.model.GeneralLP`
            Parsed model
        ignoredRows : set
            Objective rows after the first
    """
    def __init__(self):
        self.name = ''
        self.sections = []
        self.warnings = []
        self.model = None
        self.ignoredRows = set()
        self._sets = {}

    def __repr__(self):
        return '<MpsDocument %r sections=%r>' % (
            self.name, [section for section, first, last in self.sections])

    def sectionNames(self):
        return [section for section, first, last in self.sections]

    def warn(self, message, lineNumber):
        text = 'line %d: %s' % (lineNumber, message)
        self.warnings.append(text)
        warnings.warn(text, MPSWarning, stacklevel=3)

    def acceptSet(self, section, setName, lineNumber):
        """Return whether a data line of *setName* should be used."""
        first = self._sets.setdefault(section, setName)
        if first == setName:
            return True
        key = (section, setName)
        if key not in self._sets:
            self._sets[key] = True
            self.warn("ignoring %s set %r (using %r)" %
                      (section, setName, first), lineNumber)
        return False

def _number(token, lineNumber):
    try:
        value = float(token)
    except ValueError:
        raise MPSError("bad number %r" % (token,), lineNumber)
    if math.isnan(value):
        raise MPSError("bad number %r" % (token,), lineNumber)
    return value

def _fixedFields(line):
    fields = [line[start:end].strip() for start, end in _fixedSlices]
    while fields and not fields[-1]:
        fields.pop()
    if fields and not fields[0]:
        del fields[0]
    return fields

def _fitsSection(section, fields):
    count = len(fields)
    if section == 'ROWS':
        return count == 2
    elif section == 'COLUMNS':
        return count in (3, 5)
    elif section in ('RHS', 'RANGES'):
        return count in (2, 3, 4, 5)
    elif section == 'BOUNDS':
        if not fields:
            return False
        kind = fields[0].upper()
        if kind in _flagBounds or kind == 'BV':
            return count in (2, 3)
        return count in (3, 4)
    return count >= 1

def _fields(section, line):
    fields = line.split()
    if _fitsSection(section, fields) or "'MARKER'" in fields:
        return fields
    fixed = _fixedFields(line)
    if _fitsSection(section, fixed):
        return fixed
    return fields

def _pairs(fields, lineNumber):
    """Split ``[name, row, value, (row, value)]`` into name and pairs."""
    name = fields[0]
    rest = fields[1:]
    if len(rest) % 2:
        raise MPSError("unbalanced name/value pairs", lineNumber)
    pairs = []
    for i in range(0, len(rest), 2):
        pairs.append((rest[i], _number(rest[i + 1], lineNumber)))
    return name, pairs

def _readRows(doc, model, fields, lineNumber):
    if len(fields) != 2:
        raise MPSError("expected a row type and name", lineNumber)
    rowType, name = fields[0].upper(), fields[1]
    if rowType == 'N':
        if model.objectiveName is None:
            model.setObjectiveRow(name)
        else:
            doc.ignoredRows.add(name)
            doc.warn("ignoring extra objective row %r" % (name,), lineNumber)
    elif rowType in (LESS, GREATER, EQUAL):
        if model.hasRow(name) or name in doc.ignoredRows:
            raise MPSError("duplicate row %r" % (name,), lineNumber)
        model.addRow(name, rowType)
    else:
        raise MPSError("unknown row type %r" % (fields[0],), lineNumber)

def _readColumns(doc, model, fields, lineNumber):
    if "'MARKER'" in fields:
        raise UnsupportedFeatureError("integer markers are not supported",
                                      lineNumber)
    column, pairs = _pairs(fields, lineNumber)
    if not model.hasColumn(column):
        model.addColumn(column)
    for row, value in pairs:
        if row in doc.ignoredRows:
            continue
        if not model.hasRow(row):
            raise MPSError("unknown row %r" % (row,), lineNumber)
        if model.addCoefficient(row, column, value):
            doc.warn("duplicate entry (%s, %s) summed" % (row, column),
                     lineNumber)

def _readRowValues(doc, model, section, fields, lineNumber):
    if len(fields) % 2 == 0:
        setName, pairs = '', _pairs([''] + fields, lineNumber)[1]
    else:
        setName, pairs = _pairs(fields, lineNumber)
    if not doc.acceptSet(section, setName, lineNumber):
        return
    for row, value in pairs:
        if row in doc.ignoredRows:
            continue
        if not model.hasRow(row):
            raise MPSError("unknown row %r" % (row,), lineNumber)
        if section == 'RHS':
            model.setRHS(row, value)
        elif row == model.objectiveName:
            doc.warn("ignoring range on objective row %r" % (row,),
                     lineNumber)
        else:
            model.setRange(row, value)

def _readBounds(doc, model, fields, lineNumber):
    kind = fields[0].upper()
    if kind in _integerBounds:
        raise UnsupportedFeatureError("bound type %s is not supported" %
                                      (kind,), lineNumber)
    if kind not in _valueBounds and kind not in _flagBounds:
        raise MPSError("unknown bound type %r" % (fields[0],), lineNumber)
    hasValue = kind in _valueBounds
    rest = fields[1:]
    if len(rest) == (3 if hasValue else 2):
        setName, rest = rest[0], rest[1:]
    elif len(rest) == (2 if hasValue else 1):
        setName = ''
    else:
        raise MPSError("wrong number of fields for bound %s" % (kind,),
                       lineNumber)
    if not doc.acceptSet('BOUNDS', setName, lineNumber):
        return
    column = rest[0]
    if not model.hasColumn(column):
        raise MPSError("unknown column %r" % (column,), lineNumber)
    value = _number(rest[1], lineNumber) if hasValue else None
    lower, upper = model.getBounds(column)
    if kind == 'UP':
        if value < 0 and lower == 0:
            doc.warn("negative upper bound on %r sets its lower bound to "
                     "-inf" % (column,), lineNumber)
            model.setBounds(column, -_inf, value)
        else:
            model.setBounds(column, upper=value)
    elif kind == 'LO':
        model.setBounds(column, lower=value)
    elif kind == 'FX':
        model.setBounds(column, value, value)
    elif kind == 'FR':
        model.setBounds(column, -_inf, _inf)
    elif kind == 'MI':
        model.setBounds(column, lower=-_inf)
    else:
        model.setBounds(column, upper=_inf)

def _readSense(model, token, lineNumber):
    try:
        model.sense = _senses[token.upper()]
    except KeyError:
        raise MPSError("unknown objective sense %r" % (token,), lineNumber)

def readDocument(text):
    """
    Parse MPS text.

    :Parameters:
        text : str
            Whole file contents
    :Raises MPSError: For malformed input.
    :Raises UnsupportedFeatureError: For integrality constructs.
    :ReturnType: `MpsDocument`
    """
    doc = MpsDocument()
    model = GeneralLP()
    section = None
    sectionStart = 0
    lastLine = 0
    ended = False
    for lineNumber, line in enumerate(text.splitlines(), 1):
        line = line.rstrip('\r\n')
        if not line.strip() or line.startswith('*'):
            continue
        lastLine = lineNumber
        if not line[0].isspace():
            fields = line.split()
            keyword = fields[0].upper()
            if keyword not in _sectionOrder:
                raise MPSError("unknown section %r" % (fields[0],),
                               lineNumber)
            if section is not None:
                doc.sections.append((section, sectionStart, lineNumber - 1))
                if _sectionOrder[keyword] <= _sectionOrder[section]:
                    raise MPSError("section %s out of order" % (keyword,),
                                   lineNumber)
            section, sectionStart = keyword, lineNumber
            if keyword == 'NAME':
                doc.name = line[4:].strip() if len(fields) > 1 else ''
                model.name = doc.name
            elif keyword == 'OBJSENSE' and len(fields) > 1:
                _readSense(model, fields[1], lineNumber)
            elif keyword == 'ENDATA':
                doc.sections.append((section, lineNumber, lineNumber))
                ended = True
                break
            continue
        if section is None:
            raise MPSError("data before the first section", lineNumber)
        if section == 'NAME':
            raise MPSError("unexpected data in NAME section", lineNumber)
        fields = _fields(section, line)
        if section == 'OBJSENSE':
            _readSense(model, fields[0], lineNumber)
        elif section == 'ROWS':
            _readRows(doc, model, fields, lineNumber)
        elif section == 'COLUMNS':
            _readColumns(doc, model, fields, lineNumber)
        elif section in ('RHS', 'RANGES'):
            _readRowValues(doc, model, section, fields, lineNumber)
        else:
            _readBounds(doc, model, fields, lineNumber)
    if section is not None and not ended:
        doc.sections.append((section, sectionStart, lastLine))
    names = doc.sectionNames()
    for required in ('ROWS', 'COLUMNS'):
        if required not in names:
            raise MPSError("missing %s section" % (required,), lastLine)
    if model.objectiveName is None:
        raise MPSError("no objective (N) row", lastLine)
    doc.model = model
    log.debug("Read MPS model %r: %d rows, %d columns, %d nonzeros",
              model.name, model.numRows, model.numColumns,
              model.numNonzeros)
    return doc

def parseMPS(text):
    """
    Parse MPS text into a model.

    :ReturnType: `pyvot.model.GeneralLP`
    """
    return readDocument(text).model

def readMPS(path):
    """
    Read an MPS file; names ending in ``.gz`` are decompressed.

    :ReturnType: `pyvot.model.GeneralLP`
    """
    path = str(path)
    if path.endswith('.gz'):
        with gzip.open(path, 'rt') as f:
            text = f.read()
    else:
        with open(path) as f:
            text = f.read()
    return parseMPS(text)

## WRITING ##

def _formatNumber(value):
    return '%.17g' % value

def _dataLine(*fields):
    # Fields start in columns 2, 5, 15, 25 when they fit.
    line = ''
    for (start, end), field in zip(_fixedSlices, fields):
        line = line.ljust(start) + field
        if len(line) < end:
            line = line.ljust(end)
        line += ' '
    return line.rstrip()

def writeMPS(model, file=None):
    """
    Write a model in fixed-column MPS.

    Names longer than eight characters are written as they are, which free
    format readers (including this one) accept.

    :Parameters:
        model : `pyvot.model.GeneralLP`
            Model to write
        file : str or file
            Destination path or file object
    :Returns: The MPS text when *file* is ``None``
    """
    model.validate()
    lines = ['NAME          %s' % (model.name,)]
    if model.sense == MAXIMIZE:
        lines.extend(['OBJSENSE', '    MAX'])
    lines.append('ROWS')
    lines.append(' N  %s' % (model.objectiveName,))
    for row in model.rowNames:
        lines.append(' %s  %s' % (model.rowTypes[row], row))
    lines.append('COLUMNS')
    entries = model.columnEntries()
    for column in model.columnNames:
        values = []
        if column in model.objective:
            values.append((model.objectiveName, model.objective[column]))
        values.extend(entries[column])
        if not values:
            values.append((model.objectiveName, 0.0))
        for row, value in values:
            lines.append(_dataLine('', column, row, _formatNumber(value)))
    lines.append('RHS')
    if model.objectiveConstant:
        lines.append(_dataLine('', 'RHS', model.objectiveName,
                               _formatNumber(-model.objectiveConstant)))
    for row in model.rowNames:
        value = model.rhs.get(row, 0.0)
        if value:
            lines.append(_dataLine('', 'RHS', row, _formatNumber(value)))
    if model.ranges:
        lines.append('RANGES')
        for row in model.rowNames:
            if row in model.ranges:
                lines.append(_dataLine('', 'RNG', row,
                                       _formatNumber(model.ranges[row])))
    bounds = []
    for column in model.columnNames:
        lower, upper = model.getBounds(column)
        if (lower, upper) == (0.0, _inf):
            continue
        if lower == upper:
            bounds.append(('FX', column, lower))
        elif math.isinf(lower) and math.isinf(upper):
            bounds.append(('FR', column, None))
        else:
            if math.isinf(lower):
                bounds.append(('MI', column, None))
            elif lower != 0:
                bounds.append(('LO', column, lower))
            if not math.isinf(upper):
                bounds.append(('UP', column, upper))
    if bounds:
        lines.append('BOUNDS')
        for kind, column, value in bounds:
            if value is None:
                lines.append(_dataLine(kind, 'BND', column))
            else:
                lines.append(_dataLine(kind, 'BND', column,
                                       _formatNumber(value)))
    lines.append('ENDATA')
    text = '\n'.join(lines) + '\n'
    if file is None:
        return text
    if isinstance(file, str):
        if file.endswith('.gz'):
            with gzip.open(file, 'wt') as f:
                f.write(text)
        else:
            with open(file, 'w') as f:
                f.write(text)
    else:
        file.write(text)

def standardFormModel(lp):
    """
    Express a `pyvot.model.StandardFormLP` as an equality model.

    Rows are named ``R1..Rm``; columns keep the problem's names or become
    ``X1..Xn``.

    :ReturnType: `pyvot.model.GeneralLP`
    """
    model = GeneralLP(lp.name or 'LP')
    model.setObjectiveRow('COST')
    columns = lp.columnNames or ['X%d' % (j + 1) for j in range(lp.numCols)]
    rows = ['R%d' % (i + 1) for i in range(lp.numRows)]
    for row, value in zip(rows, lp.b):
        model.addRow(row, EQUAL)
        if value:
            model.setRHS(row, float(value))
    A = lp.A
    for j, column in enumerate(columns):
        model.addColumn(column)
        if lp.c[j]:
            model.addCoefficient('COST', column, float(lp.c[j]))
        for k in range(A.indptr[j], A.indptr[j + 1]):
            model.addCoefficient(rows[A.indices[k]], column,
                                 float(A.data[k]))
    return model

## PRESOLVE ##

class PresolveReport(object):
    """
    Record of the reductions made by `presolve`.

    :IVariables:
        columnNames : list
            Columns of the original model, in order
        reducedColumns : list
            Columns left in the reduced model, in order
        fixedColumns : list
            ``(column, value)`` for substituted fixed columns
        removedColumns : list
            ``(column, value)`` for removed empty columns
        removedRows : list
            Names of removed empty rows
        infeasible : bool
            Whether a contradiction was found
        reason : str
            What made the model infeasible
        objectiveOffset : float
            Objective contribution of the removed columns
    """
    def __init__(self, columnNames):
        self.columnNames = list(columnNames)
        self.reducedColumns = list(columnNames)
        self.fixedColumns = []
        self.removedColumns = []
        self.removedRows = []
        self.infeasible = False
        self.reason = None
        self.objectiveOffset = 0.0

    def __repr__(self):
        return ('<PresolveReport fixed=%d columns=%d rows=%d infeasible=%r>' %
                (len(self.fixedColumns), len(self.removedColumns),
                 len(self.removedRows), self.infeasible))

    @property
    def empty(self):
        return not (self.fixedColumns or self.removedColumns or
                    self.removedRows or self.infeasible)

    def markInfeasible(self, reason):
        if not self.infeasible:
            self.infeasible = True
            self.reason = reason
            log.info("Presolve: %s", reason)

def _tolerance(value):
    return 1e-9 * (1.0 + abs(value))

def _bestValue(model, column):
    """Return the optimal value of an empty column, or ``None``."""
    lower, upper = model.getBounds(column)
    cost = model.objective.get(column, 0.0)
    if model.sense == MAXIMIZE:
        cost = -cost
    if cost > 0:
        value = lower
    elif cost < 0:
        value = upper
    elif not math.isinf(lower):
        value = lower
    elif not math.isinf(upper):
        value = upper
    else:
        value = 0.0
    if math.isinf(value):
        return None
    return value

def _fixColumn(model, column, value, entries):
    for row, coef in entries:
        model.rhs[row] = model.rhs.get(row, 0.0) - coef * value
    offset = model.objective.get(column, 0.0) * value
    model.removeColumn(column)
    return offset

def _checkActivity(model, report):
    rowEntries = model.rowEntries()
    for row in model.rowNames:
        lo, hi = model.rowInterval(row)
        low = high = 0.0
        for column, coef in rowEntries[row]:
            lower, upper = model.getBounds(column)
            if coef > 0:
                low += coef * lower
                high += coef * upper
            else:
                low += coef * upper
                high += coef * lower
        if low > hi + _tolerance(hi) or high < lo - _tolerance(lo):
            report.markInfeasible("row %s cannot reach [%g, %g]" %
                                  (row, lo, hi))
            return

def presolve(model):
    """
    Apply the exact reductions described in the module documentation.

    The input model is not changed.  Applying `presolve` to its own output
    removes nothing more.

    :Parameters:
        model : `pyvot.model.GeneralLP`
            Model to reduce
    :Returns: ``(reducedModel, report)``
    :ReturnType: tuple
    """
    work = model.copy()
    report = PresolveReport(model.columnNames)
    for column in work.columnNames:
        lower, upper = work.getBounds(column)
        if lower > upper:
            report.markInfeasible("column %s has lower bound above upper "
                                  "bound" % (column,))
            return work, report
    changed = True
    while changed:
        changed = False
        columnEntries = work.columnEntries()
        for column in list(work.columnNames):
            lower, upper = work.getBounds(column)
            if lower == upper:
                report.objectiveOffset += _fixColumn(work, column, lower,
                                                     columnEntries[column])
                report.fixedColumns.append((column, lower))
                changed = True
            elif not columnEntries[column]:
                value = _bestValue(work, column)
                if value is not None:
                    report.objectiveOffset += _fixColumn(work, column, value,
                                                         ())
                    report.removedColumns.append((column, value))
                    changed = True
        rowEntries = work.rowEntries()
        for row in list(work.rowNames):
            if rowEntries[row]:
                continue
            lo, hi = work.rowInterval(row)
            if lo > _tolerance(lo) or hi < -_tolerance(hi):
                report.markInfeasible("empty row %s needs 0 in [%g, %g]" %
                                      (row, lo, hi))
            work.removeRow(row)
            report.removedRows.append(row)
            changed = True
    _checkActivity(work, report)
    report.reducedColumns = list(work.columnNames)
    if not report.empty:
        log.info("Presolve: %d fixed, %d empty columns, %d empty rows",
                 len(report.fixedColumns), len(report.removedColumns),
                 len(report.removedRows))
    return work, report

_presolve = presolve

def postsolve(report, reducedSolution, reducedObjective=0.0):
    """
    Map a solution of the reduced model back to the original columns.

    :Parameters:
        report : `PresolveReport`
            Report from `presolve`
        reducedSolution : dict or sequence
            Values by column name, or in `PresolveReport.reducedColumns`
            order
        reducedObjective : float
            Objective value of the reduced model at that point
    :Returns: ``(values, objective)`` with values in original column order
    :ReturnType: tuple
    """
    if not isinstance(reducedSolution, dict):
        reducedSolution = dict(zip(report.reducedColumns, reducedSolution))
    known = dict(report.fixedColumns)
    known.update(report.removedColumns)
    known.update(reducedSolution)
    values = np.array([known[column] for column in report.columnNames],
                      dtype=float)
    return values, reducedObjective + report.objectiveOffset

## PIPELINE ##

class ModelSolution(object):
    """
    Solution of a `pyvot.model.GeneralLP`.

    :IVariables:
        status : str
            One of the `pyvot.engine` statuses
        objective : float
            Objective in the model's own sense, constant included
        values : dict
            Column name to value (empty unless a point was found)
        result : `pyvot.engine.SolveResult`
            Standard-form result, or ``None`` if no solve was needed
        report : `PresolveReport`
            Presolve record, or ``None``
    """
    def __init__(self, status, objective, values=None, result=None,
                 report=None):
        self.status = status
        self.objective = objective
        self.values = values if values is not None else {}
        self.result = result
        self.report = report

    def __repr__(self):
        return '<ModelSolution %s objective=%r>' % (self.status,
                                                    self.objective)

def solveModel(model, options=None, presolve=False):
    """
    Solve a general model.

    Runs `presolve` (if asked), converts to standard form, solves, maps the
    point back and undoes the presolve.

    :Parameters:
        model : `pyvot.model.GeneralLP`
            Model to solve
        options : `pyvot.engine.SolverOptions`
            Solver settings
        presolve : bool
            Whether to presolve first
    :ReturnType: `ModelSolution`
    """
    report = None
    work = model
    if presolve:
        work, report = _presolve(model)
        if report.infeasible:
            return ModelSolution(engine.INFEASIBLE, float('nan'),
                                 report=report)
    worst = -_inf if work.sense == MINIMIZE else _inf
    if report is not None and not work.rowNames:
        # Only unbounded empty columns can be left.
        if work.columnNames:
            return ModelSolution(engine.UNBOUNDED, worst, report=report)
        values, objective = postsolve(report, {}, work.objectiveConstant)
        return ModelSolution(engine.OPTIMAL, objective,
                             dict(zip(report.columnNames, values)),
                             report=report)
    lp, varMap = toStandardForm(work)
    result = engine.solve(lp, options)
    if result.x is None:
        return ModelSolution(result.status, float('nan'), result=result,
                             report=report)
    values = varMap.recover(result.x)
    objective = work.objectiveValue(values)
    if result.status == engine.UNBOUNDED:
        objective = worst
    if report is not None:
        values, objective = postsolve(report,
                                      dict(zip(work.columnNames, values)),
                                      objective)
        names = report.columnNames
    else:
        names = work.columnNames
    return ModelSolution(result.status, objective,
                         dict(zip(names, values.tolist())), result, report)
