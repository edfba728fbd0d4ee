#!/usr/bin/env python
#
#   setup.py
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

"""setuptools script for pyvot"""

from setuptools import setup
import sys

__author__ = 'pyvot developers'
__date__ = 'October 14, 2026'
__all__ = []

if sys.version_info < (3, 8):
    print("pyvot requires Python 3.8", file=sys.stderr)
    sys.exit(1)

setup(name="pyvot",
      version='0.1.0',
      description="Revised simplex solver with a two-variable pivoting rule",
      long_description="""\
pyvot is a revised simplex solver whose iterations can move two nonbasic
variables at once.  The pair and its step are found by solving a
two-variable linear program exactly.

Its features include:

* Bounded-variable MPS reader and writer
* Two-phase revised simplex with LU refactorization
* Dantzig and double pivoting rules
* Bland fallback and perturbation against cycling
* Klee-Minty and random problem generators
* Benchmark harness with CSV and JSON reports""",
      license='LGPL',
      author="pyvot developers",
      keywords="linear programming simplex pivoting rule MPS",
      classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',],
      test_suite='tests',
      packages=['pyvot'],
      install_requires=['numpy', 'scipy', 'zope.interface'],
      entry_points={
        'console_scripts': ['pyvot-bench = pyvot.bench:main'],
      },
      zip_safe=True,)
