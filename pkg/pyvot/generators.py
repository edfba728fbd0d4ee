#!/usr/bin/env python
#
#   generators.py
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
Test problem families.

Klee-Minty cubes
    Three variants of the classic worst case for Dantzig's rule, all of the
    form ``min c'x, Gx <= h, x >= 0`` with lower-triangular ``G``.  Each
    instance knows its optimum in closed form.

    ========  ========================================  ==========  =========
    Variant   Row ``i``                                 Cost        Optimum
    ========  ========================================  ==========  =========
    1         ``sum 2^(i-j+1) x_j + x_i <= 5^i``        -2^(m-i)    -5^m
    2         ``sum 10^(i-j) x_j + x_i <= 100^(i-1)``   -10^(m-i)   -10^(2m-2)
    3         ``2 sum x_j + x_i <= 2^i - 1``            -1          -(2^m - 1)
    ========  ========================================  ==========  =========

    Sums run over ``j < i``.  The optimizer is zero except for
    ``x_m`` = -optimum.

Random problems
    ``A = [M I]`` with ``M`` uniform on ``[-0.5, 0.5)``, ``b`` uniform on
    ``[10, 11)`` and ``c = (c1, 0)`` with ``c1`` uniform on ``[-0.5, 0.5)``.
    Numbers come from numpy's PCG64 bit generator seeded with the 64-bit seed
    and are drawn in the order ``M`` (row-major), ``b``, ``c1``, so an
    instance depends only on ``(m, seed)``.
"""

import numpy as np
from scipy import sparse

from pyvot.model import (GeneralLP, LESS, StandardFormLP, toStandardForm)

__author__ = 'pyvot developers'
__date__ = 'October 9, 2026'
__all__ = ['SizeError',
           'MAX_SIZE',
           'KleeMintyInstance',
           'kleeMinty',
           'RandomLPSpec',
           'randomLP',]
__docformat__ = 'reStructuredText'

# Largest m whose data stays finite with some headroom.
MAX_SIZE = {1: 128, 2: 150, 3: 200}

class SizeError(ValueError):
    """Raised when a requested size is outside the supported range."""
    pass

class KleeMintyInstance(object):
    """
    A Klee-Minty problem with its known optimum.

    :IVariables:
        variant : int
            1, 2 or 3
        m : int
            Number of structural variables and constraints
        model : `pyvot.model.GeneralLP`
            The inequality form
        lp : `pyvot.model.StandardFormLP`
            Standard form with a slack per row (columns ``x_1..x_m`` first)
        knownX : ``numpy.ndarray``
            Optimizer in the original variables
        knownObjective : float
            Optimal value
    """
    def __init__(self, variant, m, model, lp, knownX, knownObjective):
        self.variant = variant
        self.m = m
        self.model = model
        self.lp = lp
        self.knownX = knownX
        self.knownObjective = knownObjective

    def __repr__(self):
        return '<KleeMintyInstance variant=%d m=%d>' % (self.variant, self.m)

    @property
    def name(self):
        return self.lp.name

    def knownStandardX(self):
        """Return the optimizer in standard form, slacks included."""
        x = np.zeros(self.lp.numCols)
        x[:self.m] = self.knownX
        x[self.m:] = self.lp.b - self.lp.A[:, :self.m].dot(self.knownX)
        return x

def _kleeMintyData(variant, m):
    """Return ``(G, h, c)`` as nested Python floats."""
    G = [[0.0] * m for i in range(m)]
    h = []
    c = []
    for i in range(1, m + 1):
        row = G[i - 1]
        row[i - 1] = 1.0
        for j in range(1, i):
            if variant == 1:
                row[j - 1] = 2.0 ** (i - j + 1)
            elif variant == 2:
                row[j - 1] = 10.0 ** (i - j)
            else:
                row[j - 1] = 2.0
        if variant == 1:
            h.append(5.0 ** i)
            c.append(-(2.0 ** (m - i)))
        elif variant == 2:
            h.append(100.0 ** (i - 1))
            c.append(-(10.0 ** (m - i)))
        else:
            h.append(2.0 ** i - 1)
            c.append(-1.0)
    return G, h, c

def kleeMinty(variant, m):
    """
    Build a Klee-Minty instance.

    :Parameters:
        variant : int
            1, 2 or 3
        m : int
            Size, from 1 to `MAX_SIZE` for the variant
    :Raises ValueError: For an unknown variant.
    :Raises SizeError: If *m* is out of range.
    :ReturnType: `KleeMintyInstance`
    """
    if variant not in MAX_SIZE:
        raise ValueError("Unknown Klee-Minty variant %r" % (variant,))
    if not 1 <= m <= MAX_SIZE[variant]:
        raise SizeError("Klee-Minty variant %d supports 1 <= m <= %d "
                        "(got %d)" % (variant, MAX_SIZE[variant], m))
    G, h, c = _kleeMintyData(variant, m)
    model = GeneralLP('km%d-m%d' % (variant, m))
    model.setObjectiveRow('COST')
    columns = ['X%d' % i for i in range(1, m + 1)]
    for column in columns:
        model.addColumn(column)
    for i in range(m):
        row = 'R%d' % (i + 1)
        model.addRow(row, LESS)
        model.setRHS(row, h[i])
    for j, column in enumerate(columns):
        model.addCoefficient('COST', column, c[j])
        for i in range(j, m):
            model.addCoefficient('R%d' % (i + 1), column, G[i][j])
    lp = toStandardForm(model)[0]
    knownX = np.zeros(m)
    knownX[-1] = h[-1]
    return KleeMintyInstance(variant, m, model, lp, knownX, -h[-1])

class RandomLPSpec(object):
    """
    Parameters of a random problem.

    :IVariables:
        m : int
            Number of rows
        seed : int
            Nonnegative seed below 2**64
        generator : str
            Bit generator; only ``'pcg64'`` is supported
    """
    def __init__(self, m, seed, generator='pcg64'):
        if m < 1:
            raise ValueError("m must be at least 1")
        if not 0 <= seed < 2 ** 64:
            raise ValueError("Seed must be a 64-bit unsigned integer")
        if generator != 'pcg64':
            raise ValueError("Unsupported generator %r" % (generator,))
        self.m = int(m)
        self.seed = int(seed)
        self.generator = generator

    def __repr__(self):
        return 'RandomLPSpec(%d, %d)' % (self.m, self.seed)

    def __eq__(self, other):
        return isinstance(other, RandomLPSpec) and \
            (self.m, self.seed, self.generator) == \
            (other.m, other.seed, other.generator)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.m, self.seed, self.generator))

    @property
    def name(self):
        return 'random-m%d-s%d' % (self.m, self.seed)

def randomLP(spec):
    """
    Build the random problem described by *spec*.

    :ReturnType: `pyvot.model.StandardFormLP`
    """
    m = spec.m
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    M = rng.uniform(-0.5, 0.5, size=(m, m))
    b = rng.uniform(10.0, 11.0, size=m)
    c1 = rng.uniform(-0.5, 0.5, size=m)
    A = sparse.hstack([sparse.csc_matrix(M), sparse.identity(m)],
                      format='csc')
    c = np.concatenate([c1, np.zeros(m)])
    return StandardFormLP(A, b, c, name=spec.name)
