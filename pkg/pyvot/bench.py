#!/usr/bin/env python
#
#   bench.py
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
Benchmark harness comparing the pivoting rules.

Four suites are available:

``kleeminty``
    Klee-Minty cubes for the chosen variants and sizes
``random``
    Random problems, one per (m, seed); the longest-step filter is off
    unless asked for
``netlib``
    The bundled Netlib problems found in the fixture directory
``cycling``
    Small degenerate problems that make textbook pivoting cycle

Each problem is solved with every requested rule and gives one `RunRecord`.
Reports are written as CSV (``report.csv`` plus ``aggregates.csv``) or JSON
(``report.json``).  When both rules run, ``comparison.csv`` holds the
per-problem percentage improvement of the double rule over Dantzig's,
``100 * (t_D - t_2) / t_D``.

Run ``pyvot-bench --help`` for the command line.
"""

import argparse
import csv
import json
import logging
import math
import os
import sys

import numpy as np

from pyvot import config as pyvotConfig
from pyvot import engine
from pyvot import fixtures
from pyvot import generators
from pyvot import mpsio

__author__ = 'pyvot developers'
__date__ = 'October 13, 2026'
__all__ = ['CSV_FIELDS',
           'SUITES',
           'ComparisonError',
           'ProgramError',
           'RunRecord',
           'SuiteConfig',
           'BenchReport',
           'runSuite',
           'writeReport',
           'loadReport',
           'improvement',
           'compare',
           'aggregate',
           'main',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

CSV_FIELDS = ('problem', 'rule', 'status', 'objective', 'iterations',
              'double_pivots', 'infeasibility', 'time_ms', 'seed')
SUITES = ('kleeminty', 'random', 'netlib', 'cycling')
RULES = (engine.DANTZIG, engine.DOUBLE)

ERROR = 'error'
OBJECTIVE_TOL = 1e-6
DEFAULT_FIXTURES = os.path.join('tests', 'data', 'netlib')

class ComparisonError(ValueError):
    """Raised when two reports do not cover the same problems."""
    pass

class ProgramError(Exception):
    """Raised for command-line and configuration problems."""
    pass

## RECORDS ##

class RunRecord(object):
    """
    Result of one (problem, rule) run.

    :IVariables:
        problem : str
            Problem name
        rule : str
            ``'dantzig'`` or ``'double'``
        status : str
            Solver status, or ``'error'`` if the problem could not be run
        objective : float
            Objective in the problem's own terms
        iterations : int
            Total iterations
        doublePivots : int
            Iterations that took a two-variable step
        infeasibility : float
            ``max |Ax - b|`` of the final point
        timeMs : float
            Wall time of the solve in milliseconds
        seed : int
            Seed of a generated problem, or ``None``
        group : str
            Aggregation group (``'m=100'``, ``'variant 3'``, ...)
        expected : float
            Known optimal value, or ``None``
        message : str
            Error description for ``'error'`` records
    """
    def __init__(self, problem, rule, status, objective=float('nan'),
                 iterations=0, doublePivots=0, infeasibility=float('nan'),
                 timeMs=0.0, seed=None, group='', expected=None,
                 message=''):
        self.problem = problem
        self.rule = rule
        self.status = status
        self.objective = objective
        self.iterations = iterations
        self.doublePivots = doublePivots
        self.infeasibility = infeasibility
        self.timeMs = timeMs
        self.seed = seed
        self.group = group
        self.expected = expected
        self.message = message

    def __repr__(self):
        return '<RunRecord %s %s %s>' % (self.problem, self.rule, self.status)

    @property
    def key(self):
        return (self.problem, self.seed)

    @property
    def acceptable(self):
        """
        Whether the run counts as a success.

        Errors, iteration limits and numerical failures never do; a run with
        a known optimum must also be optimal and match it within ``1e-6``
        relative.
        """
        if self.status in (ERROR, engine.ITERATION_LIMIT,
                           engine.NUMERICAL_ERROR):
            return False
        if self.expected is None:
            return True
        if self.status != engine.OPTIMAL:
            return False
        return abs(self.objective - self.expected) <= \
            OBJECTIVE_TOL * max(1.0, abs(self.expected))

    def asRow(self):
        """Return the CSV fields as a dict."""
        return {'problem': self.problem,
                'rule': self.rule,
                'status': self.status,
                'objective': repr(float(self.objective)),
                'iterations': self.iterations,
                'double_pivots': self.doublePivots,
                'infeasibility': repr(float(self.infeasibility)),
                'time_ms': '%.3f' % self.timeMs,
                'seed': '' if self.seed is None else self.seed}

    def asDict(self):
        """Return a JSON-ready dict (the CSV fields plus extras)."""
        row = self.asRow()
        row.update({'objective': _jsonNumber(self.objective),
                    'infeasibility': _jsonNumber(self.infeasibility),
                    'time_ms': self.timeMs,
                    'seed': self.seed,
                    'group': self.group,
                    'expected': self.expected,
                    'message': self.message})
        return row

    @classmethod
    def fromDict(cls, row):
        """Build a record from a CSV row or a JSON object."""
        seed = row.get('seed')
        if seed in ('', None):
            seed = None
        expected = row.get('expected')
        return cls(row['problem'], row['rule'], row['status'],
                   _number(row.get('objective')),
                   int(row.get('iterations') or 0),
                   int(row.get('double_pivots') or 0),
                   _number(row.get('infeasibility')),
                   float(row.get('time_ms') or 0.0),
                   None if seed is None else int(seed),
                   row.get('group') or '',
                   None if expected in ('', None) else float(expected),
                   row.get('message') or '')

def _jsonNumber(value):
    # JSON has no inf or nan.
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return repr(value)
    return value

def _number(value):
    if value in (None, ''):
        return float('nan')
    return float(value)

## SUITES ##

class SuiteConfig(object):
    """
    What `runSuite` should do.

    :IVariables:
        suite : str
            One of `SUITES`
        rules : list
            Rules to run on every problem
        sizes : list
            Values of m (kleeminty and random)
        seeds : int
            Seeds ``0..seeds-1`` per size (random)
        variants : list
            Klee-Minty variants
        presolve : bool
            Presolve MPS problems (netlib and cycling)
        fixtureDir : str
            Directory of the Netlib files
        options : `pyvot.engine.SolverOptions`
            Base solver options; the rule is set per run
        filterFraction
            Longest-step filter override; `SuiteConfig.DEFAULT` keeps the
            suite's default
    """
    DEFAULT = object()

    def __init__(self, suite, rules=RULES, sizes=None, seeds=100,
                 variants=(1, 2, 3), presolve=False,
                 fixtureDir=DEFAULT_FIXTURES, options=None,
                 filterFraction=DEFAULT):
        if suite not in SUITES:
            raise ValueError("Unknown suite %r" % (suite,))
        for rule in rules:
            if rule not in RULES:
                raise ValueError("Unknown rule %r" % (rule,))
        if sizes is None:
            sizes = [100] if suite == 'random' else list(range(3, 11))
        self.suite = suite
        self.rules = list(rules)
        self.sizes = list(sizes)
        self.seeds = seeds
        self.variants = list(variants)
        self.presolve = presolve
        self.fixtureDir = fixtureDir
        if options is None:
            options = engine.SolverOptions()
        self.options = options
        self.filterFraction = filterFraction

    def optionsFor(self, rule):
        """Return the solver options of one run."""
        kw = {'rule': rule, 'recordHistory': False}
        if self.filterFraction is not SuiteConfig.DEFAULT:
            kw['filterFraction'] = self.filterFraction
        elif self.suite == 'random':
            kw['filterFraction'] = None
        return self.options.copy(**kw)

class BenchReport(object):
    """
    Records of a suite run.

    :IVariables:
        suite : str
            Suite name
        records : list
            `RunRecord` objects in run order
    """
    def __init__(self, suite, records=None):
        self.suite = suite
        self.records = list(records or [])

    def __len__(self):
        return len(self.records)

    def byRule(self, rule):
        return [record for record in self.records if record.rule == rule]

    @property
    def ok(self):
        return all(record.acceptable for record in self.records)

    def aggregates(self):
        return aggregate(self.records)

def _fromResult(name, rule, result, objective=None, **kw):
    if objective is None:
        objective = result.objective
    return RunRecord(name, rule, result.status, objective,
                     result.iterations, result.doublePivotCount,
                     result.infeasibility, result.wallTime * 1000.0, **kw)

def _runLP(config, name, lp, group, seed=None, expected=None):
    records = []
    for rule in config.rules:
        result = engine.solve(lp, config.optionsFor(rule))
        records.append(_fromResult(name, rule, result, seed=seed, group=group,
                                   expected=expected))
    return records

def _runFixtures(config, manager):
    """
    Run every fixture of *manager* under each rule.

    Each model is cached for the length of its runs, so it is read once no
    matter how many rules there are, and released before the next fixture.
    """
    records = []
    for key in manager.keys():
        fixture = manager.getFixture(key)
        if not fixture.available():
            log.error("Fixture %s is missing", key)
            for rule in config.rules:
                records.append(RunRecord(key, rule, ERROR, group=config.suite,
                                         expected=fixture.knownObjective,
                                         message='missing fixture file'))
            continue
        try:
            manager.cacheFixture(key)
        except (IOError, mpsio.MPSError) as e:
            log.error("Cannot load fixture %s: %s", key, e)
            for rule in config.rules:
                records.append(RunRecord(key, rule, ERROR, group=config.suite,
                                         expected=fixture.knownObjective,
                                         message=str(e)))
            continue
        try:
            for rule in config.rules:
                model = manager.loadFixture(key)
                solution = mpsio.solveModel(model, config.optionsFor(rule),
                                            presolve=config.presolve)
                if solution.result is None:
                    record = RunRecord(key, rule, solution.status,
                                       solution.objective, infeasibility=0.0,
                                       group=config.suite,
                                       expected=fixture.knownObjective)
                else:
                    record = _fromResult(key, rule, solution.result,
                                         solution.objective,
                                         group=config.suite,
                                         expected=fixture.knownObjective)
                records.append(record)
        finally:
            manager.uncacheFixture(key)
    return records

def runSuite(config):
    """
    Run every problem of a suite under every requested rule.

    :Parameters:
        config : `SuiteConfig`
            What to run
    :Raises generators.SizeError: If a Klee-Minty size is out of range.
    :ReturnType: `BenchReport`
    """
    report = BenchReport(config.suite)
    if config.suite == 'kleeminty':
        for variant in config.variants:
            for m in config.sizes:
                instance = generators.kleeMinty(variant, m)
                log.info("Running %s", instance.name)
                report.records.extend(
                    _runLP(config, instance.name, instance.lp,
                           'variant %d' % variant,
                           expected=instance.knownObjective))
    elif config.suite == 'random':
        for m in config.sizes:
            for seed in range(config.seeds):
                spec = generators.RandomLPSpec(m, seed)
                log.info("Running %s", spec.name)
                report.records.extend(
                    _runLP(config, spec.name, generators.randomLP(spec),
                           'm=%d' % m, seed=seed))
    elif config.suite == 'netlib':
        manager = fixtures.netlibFixtures(config.fixtureDir)
        report.records.extend(_runFixtures(config, manager))
    else:
        manager = fixtures.cyclingFixtures()
        report.records.extend(_runFixtures(config, manager))
    return report

## AGGREGATES AND COMPARISON ##

def aggregate(records):
    """
    Average the records per (group, rule).

    :Returns: Dicts with ``group``, ``rule``, ``count``, ``mean_iterations``,
              ``median_iterations``, ``mean_time_ms`` and ``failures``, in
              first-seen order
    :ReturnType: list
    """
    order = []
    groups = {}
    for record in records:
        key = (record.group, record.rule)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(record)
    rows = []
    for group, rule in order:
        members = groups[group, rule]
        iterations = np.array([r.iterations for r in members], dtype=float)
        times = np.array([r.timeMs for r in members], dtype=float)
        rows.append({'group': group,
                     'rule': rule,
                     'count': len(members),
                     'mean_iterations': float(iterations.mean()),
                     'median_iterations': float(np.median(iterations)),
                     'mean_time_ms': float(times.mean()),
                     'failures': sum(1 for r in members
                                     if not r.acceptable)})
    return rows

def improvement(baseline, candidate):
    """
    Percentage improvement of *candidate* over *baseline*.

    Positive means the candidate needed less; ``-100`` means twice as much.
    A zero baseline gives 0 when the candidate is also zero and ``nan``
    otherwise.
    """
    if baseline == 0:
        return 0.0 if candidate == 0 else float('nan')
    return (baseline - candidate) / float(baseline) * 100.0

def _records(report):
    if isinstance(report, BenchReport):
        return report.records
    return list(report)

def _byKey(records, side):
    rules = sorted(set(record.rule for record in records))
    if len(rules) > 1:
        raise ComparisonError("Report %s mixes rules (%s); select one with "
                              "--rule" % (side, ', '.join(rules)))
    result = {}
    for record in records:
        if record.key in result:
            raise ComparisonError("Report %s has %s twice" %
                                  (side, _keyName(record.key)))
        result[record.key] = record
    return result

def compare(reportA, reportB):
    """
    Compare two runs problem by problem.

    :Parameters:
        reportA : `BenchReport` or list
            Baseline records (one per problem)
        reportB : `BenchReport` or list
            Candidate records
    :Raises ComparisonError: If the problem sets differ, or a side mixes
                             rules or repeats a problem.
    :Returns: Row dicts, the last one with problem ``'(all)'`` comparing
              the means
    :ReturnType: list
    """
    a = _byKey(_records(reportA), 'A')
    b = _byKey(_records(reportB), 'B')
    if set(a) != set(b):
        onlyA = sorted(_keyName(key) for key in set(a) - set(b))
        onlyB = sorted(_keyName(key) for key in set(b) - set(a))
        raise ComparisonError("Problem sets differ: only in A: %s; only in "
                              "B: %s" % (', '.join(onlyA) or '-',
                                         ', '.join(onlyB) or '-'))
    if not a:
        raise ComparisonError("Nothing to compare")
    rows = []
    keys = [record.key for record in _records(reportA)]
    for key in keys:
        ra, rb = a[key], b[key]
        rows.append({'problem': _keyName(key),
                     'iterations_a': ra.iterations,
                     'iterations_b': rb.iterations,
                     'iterations_pct': improvement(ra.iterations,
                                                   rb.iterations),
                     'time_a_ms': ra.timeMs,
                     'time_b_ms': rb.timeMs,
                     'time_pct': improvement(ra.timeMs, rb.timeMs)})
    meanIterA = np.mean([a[key].iterations for key in keys])
    meanIterB = np.mean([b[key].iterations for key in keys])
    meanTimeA = np.mean([a[key].timeMs for key in keys])
    meanTimeB = np.mean([b[key].timeMs for key in keys])
    rows.append({'problem': '(all)',
                 'iterations_a': float(meanIterA),
                 'iterations_b': float(meanIterB),
                 'iterations_pct': improvement(meanIterA, meanIterB),
                 'time_a_ms': float(meanTimeA),
                 'time_b_ms': float(meanTimeB),
                 'time_pct': improvement(meanTimeA, meanTimeB)})
    return rows

def _keyName(key):
    problem, seed = key
    if seed is None:
        return problem
    return '%s#%d' % (problem, seed)

COMPARISON_FIELDS = ('problem', 'iterations_a', 'iterations_b',
                     'iterations_pct', 'time_a_ms', 'time_b_ms', 'time_pct')
AGGREGATE_FIELDS = ('group', 'rule', 'count', 'mean_iterations',
                    'median_iterations', 'mean_time_ms', 'failures')

def formatComparison(rows):
    lines = ['%-24s %10s %10s %9s %12s %12s %9s' %
             ('problem', 'iter A', 'iter B', 'iter %', 'time A ms',
              'time B ms', 'time %')]
    for row in rows:
        lines.append('%-24s %10.1f %10.1f %9.2f %12.3f %12.3f %9.2f' %
                     tuple(row[field] for field in COMPARISON_FIELDS))
    return '\n'.join(lines)

def formatAggregates(rows):
    lines = ['%-14s %-8s %6s %10s %10s %12s %8s' %
             ('group', 'rule', 'count', 'mean it', 'median it', 'mean ms',
              'failed')]
    for row in rows:
        lines.append('%-14s %-8s %6d %10.2f %10.1f %12.3f %8d' %
                     tuple(row[field] for field in AGGREGATE_FIELDS))
    return '\n'.join(lines)

## FILES ##

def _writeCSV(path, fields, rows):
    with open(path, 'w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)

def writeReport(report, directory, format='csv'):
    """
    Write a report (and its comparison when both rules ran).

    :Parameters:
        report : `BenchReport`
            Records to write
        directory : str
            Output directory, created if needed
        format : str
            ``'csv'`` or ``'json'``
    :Returns: Paths written
    :ReturnType: list
    """
    if not os.path.isdir(directory):
        os.makedirs(directory)
    paths = []
    aggregates = report.aggregates()
    if format == 'json':
        path = os.path.join(directory, 'report.json')
        with open(path, 'w') as f:
            json.dump({'suite': report.suite,
                       'records': [r.asDict() for r in report.records],
                       'aggregates': aggregates}, f, indent=2)
        paths.append(path)
    elif format == 'csv':
        path = os.path.join(directory, 'report.csv')
        _writeCSV(path, CSV_FIELDS, [r.asRow() for r in report.records])
        paths.append(path)
        path = os.path.join(directory, 'aggregates.csv')
        _writeCSV(path, AGGREGATE_FIELDS, aggregates)
        paths.append(path)
    else:
        raise ValueError("Unknown report format %r" % (format,))
    dantzig = report.byRule(engine.DANTZIG)
    double = report.byRule(engine.DOUBLE)
    if dantzig and double:
        path = os.path.join(directory, 'comparison.csv')
        _writeCSV(path, COMPARISON_FIELDS, compare(dantzig, double))
        paths.append(path)
    return paths

def loadReport(path, rule=None):
    """
    Read a report written by `writeReport` (JSON or CSV).

    :Parameters:
        rule : str
            Keep only the records of this rule
    :ReturnType: `BenchReport`
    """
    if path.endswith('.json'):
        with open(path) as f:
            data = json.load(f)
        suite = data.get('suite', '')
        rows = data['records']
    else:
        with open(path, newline='') as f:
            rows = list(csv.DictReader(f))
        suite = ''
    records = [RunRecord.fromDict(row) for row in rows]
    if rule is not None:
        records = [r for r in records if r.rule == rule]
    return BenchReport(suite, records)

## COMMAND LINE ##

def _parseSizes(text):
    """Parse ``100``, ``3,5,10`` or ``3-12`` into a list of ints."""
    sizes = []
    try:
        for part in str(text).split(','):
            part = part.strip()
            if '-' in part:
                first, last = part.split('-', 1)
                sizes.extend(range(int(first), int(last) + 1))
            else:
                sizes.append(int(part))
    except ValueError:
        raise ProgramError("Bad size list %r" % (text,))
    if not sizes or min(sizes) < 1:
        raise ProgramError("Sizes must be positive")
    return sizes

def _parseFilter(text):
    if text is None:
        return SuiteConfig.DEFAULT
    if str(text).lower() in ('off', 'none'):
        return None
    try:
        value = float(text)
    except ValueError:
        raise ProgramError("Bad --ls-filter value %r" % (text,))
    if not 0 < value <= 1:
        raise ProgramError("--ls-filter must be in (0, 1] or 'off'")
    return value

def _parseSwitch(text):
    if text in (None, True, False):
        return bool(text)
    return str(text).lower() in ('on', 'yes', 'true', '1')

def buildParser(progname):
    parser = argparse.ArgumentParser(
        prog=progname,
        description="Compare Dantzig's rule with the double pivot rule.")
    parser.add_argument('--suite', choices=SUITES)
    parser.add_argument('--rule', choices=RULES + ('both',))
    parser.add_argument('--m', metavar='SIZES',
                        help="sizes, e.g. 100, 3,5,10 or 3-12")
    parser.add_argument('--seeds', type=int, metavar='N')
    parser.add_argument('--variant', type=int, choices=(1, 2, 3))
    parser.add_argument('--max-iter', type=int, dest='maxIter', metavar='N')
    parser.add_argument('--ls-filter', dest='lsFilter',
                        metavar='FRACTION|off')
    parser.add_argument('--presolve', choices=('on', 'off'))
    parser.add_argument('--format', choices=('csv', 'json'))
    parser.add_argument('--out', metavar='DIR')
    parser.add_argument('--fixtures', metavar='DIR')
    parser.add_argument('--config', metavar='FILE')
    parser.add_argument('--compare', nargs=2, metavar=('A', 'B'),
                        help="compare two saved reports and exit; with "
                        "--rule, only that rule's records are compared")
    parser.add_argument('-q', '--quiet', action='store_true')
    parser.add_argument('-v', '--verbose', action='store_true')
    return parser

def _setupLogging(progname, quiet, verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(
        progname + ': %(levelname)s: %(message)s'))
    root = logging.getLogger('pyvot')
    root.addHandler(handler)
    if verbose:
        root.setLevel(logging.DEBUG)
    elif quiet:
        root.setLevel(logging.ERROR)
    else:
        root.setLevel(logging.WARNING)
    return handler

def _suiteConfig(args, conf):
    def pick(value, option, default):
        if value is not None:
            return value
        return pyvotConfig.getOption(conf, 'bench', option, default)

    suite = pick(args.suite, 'suite', None)
    if suite not in SUITES:
        raise ProgramError("A suite is required (one of %s)" %
                           ', '.join(SUITES))
    rule = pick(args.rule, 'rule', 'both')
    if rule == 'both':
        rules = list(RULES)
    elif rule in RULES:
        rules = [rule]
    else:
        raise ProgramError("Unknown rule %r" % (rule,))
    sizes = pick(args.m, 'm', None)
    sizes = None if sizes is None else _parseSizes(sizes)
    variant = pick(args.variant, 'variant', None)
    variants = (1, 2, 3) if variant is None else (int(variant),)
    seeds = int(pick(args.seeds, 'seeds', 100))
    if seeds < 1:
        raise ProgramError("--seeds must be positive")
    try:
        options = pyvotConfig.solverOptions(conf,
                                            maxIterations=args.maxIter)
    except (TypeError, ValueError) as e:
        raise ProgramError("Bad solver configuration: %s" % (e,))
    return SuiteConfig(suite, rules, sizes, seeds, variants,
                       _parseSwitch(pick(args.presolve, 'presolve', False)),
                       pick(args.fixtures, 'fixtures', DEFAULT_FIXTURES),
                       options,
                       _parseFilter(pick(args.lsFilter, 'ls-filter', None)))

def _runCompare(paths, quiet, rule=None):
    if rule == 'both':
        rule = None
    try:
        a = loadReport(paths[0], rule)
        b = loadReport(paths[1], rule)
    except (IOError, ValueError, KeyError) as e:
        raise ProgramError("Cannot read report: %s" % (e,))
    try:
        rows = compare(a, b)
    except ComparisonError as e:
        raise ProgramError(str(e))
    if not quiet:
        print(formatComparison(rows))
    return 0

def main(argv=None):
    """
    Command-line entry point.

    :Returns: 0 if every run succeeded, 1 if any failed, 2 for usage or
              configuration errors
    :ReturnType: int
    """
    if argv is None:
        argv = sys.argv[1:]
    progname = os.path.basename(sys.argv[0]) or 'pyvot-bench'
    parser = buildParser(progname)
    args = parser.parse_args(argv)
    handler = _setupLogging(progname, args.quiet, args.verbose)
    try:
        try:
            if args.compare:
                return _runCompare(args.compare, args.quiet, args.rule)
            conf = {}
            if args.config:
                if not os.path.isfile(args.config):
                    raise ProgramError("No such config file: %s" %
                                       args.config)
                conf = pyvotConfig.load(args.config)
            config = _suiteConfig(args, conf)
            try:
                report = runSuite(config)
            except generators.SizeError as e:
                raise ProgramError(str(e))
            out = args.out or pyvotConfig.getOption(conf, 'bench', 'out',
                                                    '.')
            fmt = args.format or pyvotConfig.getOption(conf, 'bench',
                                                       'format', 'csv')
            if fmt not in ('csv', 'json'):
                raise ProgramError("Unknown report format %r" % (fmt,))
            paths = writeReport(report, out, fmt)
        except ProgramError as e:
            print("%s: %s" % (progname, e), file=sys.stderr)
            return 2
        if not args.quiet:
            print(formatAggregates(report.aggregates()))
            for path in paths:
                print("wrote %s" % path)
        for record in report.records:
            if not record.acceptable:
                log.warning("%s (%s): %s %s", record.problem, record.rule,
                            record.status, record.message)
        return 0 if report.ok else 1
    finally:
        logging.getLogger('pyvot').removeHandler(handler)

if __name__ == '__main__':
    sys.exit(main())
