#!/usr/bin/env python
#
#   benchtest.py
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
import os
import shutil
import tempfile
import unittest

from pyvot import engine, fixtures
from pyvot.bench import *
from pyvot.bench import _parseFilter, _parseSizes, _runFixtures

__author__ = 'pyvot developers'
__date__ = 'October 17, 2026'
__all__ = ['ImprovementTestCase',
           'RecordTestCase',
           'SuiteTestCase',
           'MainTestCase',
           'test_suite',]

def record(problem, rule, iterations, timeMs=1.0, seed=None, group='g'):
    return RunRecord(problem, rule, engine.OPTIMAL, 0.0, iterations,
                     timeMs=timeMs, seed=seed, group=group)

class ImprovementTestCase(unittest.TestCase):
    def testPercentages(self):
        """Improvement is relative to the baseline"""
        self.assertEqual(improvement(100, 80), 20.0)
        self.assertEqual(improvement(100, 100), 0.0)
        self.assertEqual(improvement(100, 200), -100.0)
        self.assertEqual(improvement(0, 0), 0.0)
        self.assertTrue(math.isnan(improvement(0, 3)))

    def testCompare(self):
        """Rows per problem plus a row for the means"""
        a = [record('p', 'dantzig', 10, 4.0), record('q', 'dantzig', 20)]
        b = [record('p', 'double', 5, 1.0), record('q', 'double', 20)]
        rows = compare(a, b)
        self.assertEqual([row['problem'] for row in rows], ['p', 'q', '(all)'])
        self.assertEqual(rows[0]['iterations_pct'], 50.0)
        self.assertEqual(rows[0]['time_pct'], 75.0)
        self.assertEqual(rows[1]['iterations_pct'], 0.0)
        self.assertEqual(rows[2]['iterations_a'], 15.0)
        self.assertAlmostEqual(rows[2]['iterations_pct'],
                               100.0 * 2.5 / 15.0)

    def testSeedsKeepProblemsApart(self):
        """Records are matched by problem and seed"""
        a = [record('r', 'dantzig', 4, seed=0), record('r', 'dantzig', 6,
                                                         seed=1)]
        b = [record('r', 'double', 3, seed=1), record('r', 'double', 2,
                                                        seed=0)]
        rows = compare(a, b)
        self.assertEqual(rows[0]['problem'], 'r#0')
        self.assertEqual(rows[0]['iterations_b'], 2)

    def testMismatch(self):
        """Different problem sets cannot be compared"""
        a = [record('p', 'dantzig', 1)]
        b = [record('q', 'double', 1)]
        self.assertRaises(ComparisonError, compare, a, b)
        self.assertRaises(ComparisonError, compare, [], [])

    def testMixedRules(self):
        """A side holding both rules is rejected, not collapsed"""
        mixed = [record('km3', 'dantzig', 31), record('km3', 'double', 1)]
        self.assertRaises(ComparisonError, compare, mixed, list(mixed))
        try:
            compare(mixed, [record('km3', 'double', 1)])
        except ComparisonError as e:
            self.assertIn('dantzig, double', str(e))
        else:
            self.fail("Mixed rules were accepted")
        twice = [record('km3', 'double', 1), record('km3', 'double', 2)]
        self.assertRaises(ComparisonError, compare,
                          [record('km3', 'dantzig', 31)], twice)

class RecordTestCase(unittest.TestCase):
    def testAcceptable(self):
        """Success depends on status and the known optimum"""
        self.assertTrue(RunRecord('p', 'double', engine.OPTIMAL, 2.0,
                                  expected=2.0 + 1e-7).acceptable)
        self.assertFalse(RunRecord('p', 'double', engine.OPTIMAL, 2.1,
                                   expected=2.0).acceptable)
        self.assertFalse(RunRecord('p', 'double', engine.UNBOUNDED,
                                   expected=2.0).acceptable)
        self.assertTrue(RunRecord('p', 'double', engine.UNBOUNDED)
                        .acceptable)
        self.assertFalse(RunRecord('p', 'double', 'error').acceptable)
        self.assertFalse(RunRecord('p', 'double', engine.ITERATION_LIMIT)
                         .acceptable)

    def testAggregate(self):
        """Means and medians per group and rule"""
        records = [record('a', 'dantzig', 1, 2.0), record('b', 'dantzig', 3),
                   record('c', 'dantzig', 8), record('a', 'double', 1)]
        rows = aggregate(records)
        self.assertEqual([(r['group'], r['rule']) for r in rows],
                         [('g', 'dantzig'), ('g', 'double')])
        self.assertEqual(rows[0]['count'], 3)
        self.assertEqual(rows[0]['mean_iterations'], 4.0)
        self.assertEqual(rows[0]['median_iterations'], 3.0)
        self.assertEqual(rows[0]['failures'], 0)

    def testSizes(self):
        """Size lists, ranges and errors"""
        self.assertEqual(_parseSizes('100'), [100])
        self.assertEqual(_parseSizes('3-5,8'), [3, 4, 5, 8])
        self.assertEqual(_parseSizes(7), [7])
        self.assertRaises(ProgramError, _parseSizes, 'ten')
        self.assertRaises(ProgramError, _parseSizes, '0')

    def testFilter(self):
        """Filter flag values"""
        self.assertIs(_parseFilter(None), SuiteConfig.DEFAULT)
        self.assertIsNone(_parseFilter('off'))
        self.assertEqual(_parseFilter('0.9'), 0.9)
        self.assertRaises(ProgramError, _parseFilter, '1.5')
        self.assertRaises(ProgramError, _parseFilter, 'some')

class SuiteTestCase(unittest.TestCase):
    def testRandomFilterOff(self):
        """The random suite turns the filter off unless asked"""
        config = SuiteConfig('random')
        self.assertEqual(config.sizes, [100])
        self.assertIsNone(config.optionsFor(engine.DOUBLE).filterFraction)
        config = SuiteConfig('random', filterFraction=0.95)
        self.assertEqual(config.optionsFor(engine.DOUBLE).filterFraction,
                         0.95)
        options = SuiteConfig('kleeminty').optionsFor(engine.DANTZIG)
        self.assertEqual(options.rule, engine.DANTZIG)
        self.assertFalse(options.recordHistory)

    def testBadConfig(self):
        """Unknown suites and rules are rejected"""
        self.assertRaises(ValueError, SuiteConfig, 'miplib')
        self.assertRaises(ValueError, SuiteConfig, 'random',
                          rules=['steepest'])

    def testKleeMinty(self):
        """The double rule beats Dantzig on a small cube"""
        report = runSuite(SuiteConfig('kleeminty', sizes=[4], variants=[3]))
        self.assertEqual(len(report), 2)
        self.assertTrue(report.ok)
        dantzig = report.byRule(engine.DANTZIG)[0]
        double = report.byRule(engine.DOUBLE)[0]
        self.assertEqual(dantzig.iterations, 15)
        self.assertLess(double.iterations, dantzig.iterations)
        self.assertEqual(double.group, 'variant 3')

    def testRandom(self):
        """Every random run is kept with its seed"""
        report = runSuite(SuiteConfig('random', sizes=[8], seeds=3))
        self.assertEqual(len(report), 6)
        self.assertEqual(sorted(r.seed for r in report.byRule('double')),
                         [0, 1, 2])
        self.assertTrue(report.ok)

    def testMissingNetlib(self):
        """Missing files give error records"""
        directory = tempfile.mkdtemp()
        try:
            report = runSuite(SuiteConfig('netlib', rules=['double'],
                                          fixtureDir=directory))
        finally:
            shutil.rmtree(directory)
        self.assertEqual(len(report), 6)
        self.assertTrue(all(r.status == 'error' for r in report.records))
        self.assertFalse(report.ok)

    def testFixtureReadOnce(self):
        """Each fixture is loaded once for all rules and then released"""
        loads = []
        def factory():
            loads.append(1)
            return fixtures.bealeModel()
        manager = fixtures.FixtureManager()
        beale = fixtures.BuiltinFixture('beale', factory, -1.25)
        manager.addFixture('beale', beale)
        records = _runFixtures(SuiteConfig('cycling'), manager)
        self.assertEqual([r.rule for r in records], ['dantzig', 'double'])
        self.assertTrue(all(r.acceptable for r in records))
        self.assertEqual(len(loads), 1)
        self.assertFalse(beale.hasCache())
        self.assertEqual(manager.cacheCount, {})

class MainTestCase(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, *names):
        return os.path.join(self.directory, *names)

    def testCyclingCSV(self):
        """The cycling suite succeeds and writes its files"""
        status = main(['--suite', 'cycling', '--out', self.path('out'), '-q'])
        self.assertEqual(status, 0)
        for name in ('report.csv', 'aggregates.csv', 'comparison.csv'):
            self.assertTrue(os.path.isfile(self.path('out', name)), name)
        report = loadReport(self.path('out', 'report.csv'))
        self.assertEqual(len(report), 6)
        self.assertEqual(len(loadReport(self.path('out', 'report.csv'),
                                        rule='double')), 3)

    def testCompareReports(self):
        """Saved reports of each rule can be compared"""
        for rule in ('dantzig', 'double'):
            status = main(['--suite', 'cycling', '--rule', rule, '--format',
                           'json', '--out', self.path(rule), '-q'])
            self.assertEqual(status, 0)
        status = main(['--compare', self.path('dantzig', 'report.json'),
                       self.path('double', 'report.json'), '-q'])
        self.assertEqual(status, 0)

    def testCompareMixedReport(self):
        """A report with both rules needs --rule to be compared"""
        status = main(['--suite', 'cycling', '--out', self.path('both'),
                       '-q'])
        self.assertEqual(status, 0)
        report = self.path('both', 'report.csv')
        self.assertEqual(main(['--compare', report, report, '-q']), 2)
        self.assertEqual(main(['--compare', report, report, '--rule',
                               'double', '-q']), 0)

    def testConfigFile(self):
        """Suite settings can come from a file"""
        with open(self.path('bench.ini'), 'w') as f:
            f.write('[bench]\nsuite = kleeminty\nm = 3\nvariant = 1\n'
                    'out = %s\n\n[solver]\nstallLimit = 3\n' %
                    self.path('km'))
        status = main(['--config', self.path('bench.ini'), '-q'])
        self.assertEqual(status, 0)
        report = loadReport(self.path('km', 'report.csv'))
        self.assertEqual([r.problem for r in report.records],
                         ['km1-m3', 'km1-m3'])

    def testUsageErrors(self):
        """Usage problems exit with status 2"""
        self.assertEqual(main(['-q']), 2)
        self.assertEqual(main(['--suite', 'kleeminty', '--m', '500',
                               '--out', self.path('big'), '-q']), 2)
        self.assertEqual(main(['--suite', 'random', '--m', 'x', '-q']), 2)
        self.assertEqual(main(['--suite', 'cycling', '--config',
                               self.path('none.ini'), '-q']), 2)

    def testFailures(self):
        """Failed runs exit with status 1"""
        status = main(['--suite', 'netlib', '--rule', 'double', '--fixtures',
                       self.directory, '--out', self.path('netlib'), '-q'])
        self.assertEqual(status, 1)

_loader = unittest.TestLoader()
test_suite = unittest.TestSuite([
    _loader.loadTestsFromTestCase(ImprovementTestCase),
    _loader.loadTestsFromTestCase(RecordTestCase),
    _loader.loadTestsFromTestCase(SuiteTestCase),
    _loader.loadTestsFromTestCase(MainTestCase),])

if __name__ == '__main__':
    unittest.main(defaultTest='test_suite')
