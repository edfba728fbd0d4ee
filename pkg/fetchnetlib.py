#!/usr/bin/env python
#
#   fetchnetlib.py
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

"""Download the Netlib benchmark problems into tests/data/netlib"""

import gzip
import os
import sys
import urllib.request

__author__ = 'pyvot developers'
__date__ = 'October 14, 2026'

progname = os.path.basename(sys.argv[0])
baseURL = 'https://raw.githubusercontent.com/coin-or-tools/Data-Netlib/master/'
problems = ('afiro', 'sc50a', 'sc50b', 'adlittle', 'blend', 'share2b')
outputDir = os.path.join('tests', 'data', 'netlib')

class ProgramError(Exception):
    pass

def fetch(name, directory, quiet=False):
    for suffix in ('.mps', '.mps.gz'):
        present = os.path.join(directory, name + suffix)
        if os.path.exists(present):
            if not quiet:
                print("%s is already present" % present)
            return present
    path = os.path.join(directory, name + '.mps.gz')
    url = baseURL + name + '.mps.gz'
    if not quiet:
        print("Fetching %s..." % url)
    try:
        with urllib.request.urlopen(url) as response:
            data = response.read()
    except OSError as e:
        raise ProgramError("cannot fetch %s: %s" % (url, e))
    try:
        gzip.decompress(data)
    except OSError:
        raise ProgramError("%s is not a gzip file" % url)
    with open(path, 'wb') as f:
        f.write(data)
    return path

try:
    quiet = '-q' in sys.argv[1:]
    if not os.path.isdir(os.path.join(os.getcwd(), 'pyvot')):
        raise ProgramError("must be run in source directory")
    if not os.path.isdir(outputDir):
        os.makedirs(outputDir)
    for name in problems:
        fetch(name, outputDir, quiet)
except ProgramError as e:
    print("%s: %s" % (progname, e), file=sys.stderr)
    sys.exit(1)
except Exception as e:
    print("%s: internal error: %s" % (progname, e), file=sys.stderr)
    sys.exit(-1)
else:
    sys.exit(0)
