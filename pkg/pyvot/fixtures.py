#!/usr/bin/env python
#
#   fixtures.py
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
Benchmark problem fixtures.

A `FixtureManager` stores fixture information under string keys.  Fixtures
are loaded on demand, and can be cached so repeated runs parse a file only
once::

    manager = FixtureManager()
    netlibFixtures('tests/data/netlib', manager)
    manager.cacheFixture('afiro')
    model = manager.loadFixture('afiro')

:Variables:
    NETLIB_OPTIMA : dict
        Reference optimal values of the Netlib benchmark problems
    NETLIB_BUNDLED : tuple
        The Netlib problems shipped in ``tests/data/netlib``; the rest are
        downloaded by ``fetchnetlib.py``
"""

import logging
import os

import zope.interface

from pyvot import mpsio
from pyvot.model import EQUAL, GeneralLP, LESS

__author__ = 'pyvot developers'
__date__ = 'October 12, 2026'
__all__ = ['NETLIB_OPTIMA',
           'NETLIB_BUNDLED',
           'IFixture',
           'Fixture',
           'MpsFixture',
           'BuiltinFixture',
           'FixtureManager',
           'netlibFixtures',
           'bealeModel',
           'scaledBealeModel',
           'chvatalModel',
           'cyclingFixtures',]
__docformat__ = 'reStructuredText'

log = logging.getLogger(__name__)

NETLIB_OPTIMA = {'afiro': -4.6475314286e+02,
                 'sc50a': -6.4575077059e+01,
                 'sc50b': -7.0000000000e+01,
                 'adlittle': 2.2549496316e+05,
                 'blend': -3.0812149846e+01,
                 # Netlib's published optimum, not -358.732
                 'share2b': -4.1573224074e+02,}

NETLIB_BUNDLED = ('afiro',)

class IFixture(zope.interface.Interface):
    """A benchmark problem with a known optimal value."""

    name = zope.interface.Attribute("Problem name used in reports")
    knownObjective = zope.interface.Attribute(
        "Optimal objective value, or None if unknown")

    def load():
        """Build and return the `pyvot.model.GeneralLP`."""

    def get():
        """Return the cached model, loading it if there is no cache."""

    def available():
        """Return whether the fixture can be loaded."""

@zope.interface.implementer(IFixture)
class Fixture(object):
    """
    Generic fixture.

    :IVariables:
        name : str
            Problem name
        knownObjective : float
            Optimal value (``None`` if unknown)
        cache
            Loaded model (``None`` if there isn't one)
    """
    def __init__(self, name, knownObjective=None):
        self.name = name
        self.knownObjective = knownObjective
        self.cache = None

    def __repr__(self):
        return '<%s %r>' % (type(self).__name__, self.name)

    def load(self):
        """
        Load the model.

        This is usually not called directly, instead, see the `get` method.
        """
        raise NotImplementedError()

    def available(self):
        return True

    def get(self):
        if self.hasCache():
            return self.cache
        return self.load()

    def createCache(self):
        if self.cache is None:
            self.cache = self.load()

    def hasCache(self):
        return self.cache is not None

    def destroyCache(self):
        self.cache = None

class MpsFixture(Fixture):
    """
    Fixture read from an MPS file.

    The file is looked up as ``<name>.mps``, ``<name>.mps.gz``, ``<name>``
    and ``<name>.gz`` in the directory, each in lower and upper case.
    """
    def __init__(self, directory, name, knownObjective=None):
        super(MpsFixture, self).__init__(name, knownObjective)
        self.directory = directory

    def candidates(self):
        names = []
        for base in (self.name.lower(), self.name.upper()):
            for suffix in ('.mps', '.mps.gz', '', '.gz'):
                names.append(os.path.join(self.directory, base + suffix))
        return names

    def findPath(self):
        """
        Locate the file.

        :Returns: The path, or ``None`` if there is no such file
        """
        for path in self.candidates():
            if os.path.isfile(path):
                return path
        return None

    def available(self):
        return self.findPath() is not None

    def load(self):
        """
        Parse the file.

        :Raises IOError: If the file is missing.
        :ReturnType: `pyvot.model.GeneralLP`
        """
        path = self.findPath()
        if path is None:
            raise IOError("No MPS file for %r in %s" % (self.name,
                                                         self.directory))
        log.debug("Loading fixture %s from %s", self.name, path)
        model = mpsio.readMPS(path)
        if not model.name:
            model.name = self.name
        return model

class BuiltinFixture(Fixture):
    """Fixture built by a factory function taking no arguments."""
    def __init__(self, name, factory, knownObjective=None):
        super(BuiltinFixture, self).__init__(name, knownObjective)
        self.factory = factory

    def load(self):
        return self.factory()

class FixtureManager(object):
    """
    Keyed fixture store.

    Caching is reference counted: each `cacheFixture` needs a matching
    `uncacheFixture` before the cache is dropped.

    :IVariables:
        fixtures : dict
            Fixtures by key
        cacheCount : dict
            Cache references by key
    """
    def __init__(self):
        self.fixtures = {}
        self.cacheCount = {}

    def __len__(self):
        return len(self.fixtures)

    def keys(self):
        """Return the fixture keys in sorted order."""
        return sorted(self.fixtures)

    def cleanup(self):
        """Drop every cache and fixture."""
        for key in self.cacheCount:
            self.getFixture(key).destroyCache()
        self.fixtures = {}
        self.cacheCount = {}

    def addFixture(self, key, fixture):
        """
        Adds a fixture to the manager.

        :Raises KeyError: If a fixture of the same key already exists.
        """
        if key in self.fixtures:
            raise KeyError(key)
        self.fixtures[key] = fixture

    def getFixture(self, key):
        """
        Retrieves a fixture.

        :Raises KeyError: If no fixture exists with that key.
        :ReturnType: `IFixture`
        """
        if self.hasFixture(key):
            return self.fixtures[key]
        raise KeyError(key)

    def hasFixture(self, key):
        return key in self.fixtures

    def cacheFixture(self, key):
        """Load a fixture, or take another reference to its cached model."""
        self.getFixture(key).createCache()
        self.cacheCount[key] = self.cacheCount.get(key, 0) + 1

    def uncacheFixture(self, key):
        """Release one cache reference, dropping the cache at zero."""
        self.cacheCount[key] = self.cacheCount.get(key, 0) - 1
        if self.cacheCount[key] <= 0:
            del self.cacheCount[key]
            self.getFixture(key).destroyCache()

    def loadFixture(self, key):
        """Return the fixture's model, from the cache if there is one."""
        return self.getFixture(key).get()

def netlibFixtures(directory, manager=None):
    """
    Register the bundled Netlib problems found (or expected) in *directory*.

    :Returns: The manager
    :ReturnType: `FixtureManager`
    """
    if manager is None:
        manager = FixtureManager()
    for name in sorted(NETLIB_OPTIMA):
        manager.addFixture(name, MpsFixture(directory, name,
                                            NETLIB_OPTIMA[name]))
    return manager

def _model(name, costs, rows, rowType, rhs):
    model = GeneralLP(name)
    model.setObjectiveRow('COST')
    columns = ['X%d' % (j + 1) for j in range(len(costs))]
    for column in columns:
        model.addColumn(column)
    for i, value in enumerate(rhs):
        model.addRow('R%d' % (i + 1), rowType)
        model.setRHS('R%d' % (i + 1), value)
    for j, column in enumerate(columns):
        if costs[j]:
            model.addCoefficient('COST', column, costs[j])
        for i, row in enumerate(rows):
            if row[j]:
                model.addCoefficient('R%d' % (i + 1), column, row[j])
    return model

def bealeModel():
    """The classic cycling example; optimum -1.25."""
    return _model('beale',
                  [0, 0, 0, -0.75, 20, -0.5, 6],
                  [[1, 0, 0, 0.25, -8, -1, 9],
                   [0, 1, 0, 0.5, -12, -0.5, 3],
                   [0, 0, 1, 0, 0, 1, 0]],
                  EQUAL, [0, 0, 1])

def scaledBealeModel():
    """Beale's example with rescaled columns; optimum -0.05."""
    return _model('beale-scaled',
                  [0, 0, 0, -0.75, 150, -0.02, 6],
                  [[1, 0, 0, 0.25, -60, -0.04, 9],
                   [0, 1, 0, 0.5, -90, -0.02, 3],
                   [0, 0, 1, 0, 0, 1, 0]],
                  EQUAL, [0, 0, 1])

def chvatalModel():
    """Chvatal's cycling example in inequality form; optimum -1."""
    return _model('chvatal',
                  [-10, 57, 9, 24],
                  [[0.5, -5.5, -2.5, 9],
                   [0.5, -1.5, -0.5, 1],
                   [1, 0, 0, 0]],
                  LESS, [0, 0, 1])

def cyclingFixtures(manager=None):
    """
    Register the degenerate cycling examples.

    :Returns: The manager
    :ReturnType: `FixtureManager`
    """
    if manager is None:
        manager = FixtureManager()
    manager.addFixture('beale', BuiltinFixture('beale', bealeModel, -1.25))
    manager.addFixture('beale-scaled',
                       BuiltinFixture('beale-scaled', scaledBealeModel,
                                      -0.05))
    manager.addFixture('chvatal',
                       BuiltinFixture('chvatal', chvatalModel, -1.0))
    return manager
