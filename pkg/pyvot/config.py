#!/usr/bin/env python
#
#   config.py
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
INI configuration for solver and benchmark runs.

Configuration is kept as a dictionary of sections, each a dictionary of
options.  Values are converted to what they look like: integers, floats
(``1e-9`` included), booleans, and ``off``/``none`` for "no value".

Here is a sample file::

    [solver]
    rule = double
    zeroTol = 1e-9
    filterFraction = off
    maxIterations = 50000

    [bench]
    suite = random
    m = 100
    seeds = 25

The ``[solver]`` section is turned into `pyvot.engine.SolverOptions` by
`solverOptions`.
"""

from configparser import ConfigParser
import os
import warnings

from pyvot.engine import SolverOptions

__author__ = 'pyvot developers'
__date__ = 'October 12, 2026'
__all__ = ['ConfigWarning',
           'load',
           'save',
           'getOption',
           'setOption',
           'solverOptions',]
__docformat__ = 'reStructuredText'

# Options that can be set from a file.
SOLVER_KEYS = ('rule', 'zeroTol', 'pivotTol', 'feasTol', 'singularTol', 'eps',
               'filterFraction', 'filterThreshold', 'stallLimit',
               'maxIterations', 'bland', 'perturb', 'recordHistory')

class ConfigWarning(UserWarning):
    """Warning emitted for configuration entries that are ignored."""
    pass

## CONFIG PARSER ##

class CaseConfigParser(ConfigParser):
    """A ``ConfigParser`` that is case-sensitive."""
    def optionxform(self, optstr):
        """Return the string in the same case."""
        return optstr

def load(*args, **kw):
    """
    Load a series of configuration files.

    Paths that do not exist are skipped.  Later files override earlier ones.

    :Keywords:
        convert : bool
            Whether the function should interpret the values as what they seem
            to be (e.g. ``float``, ``int``).  The default is ``True``.
    :Returns: Loaded configuration
    :ReturnType: dict
    """
    convertValues = kw.pop('convert', True)
    if kw:
        raise TypeError("Invalid keyword argument")
    parser = CaseConfigParser(interpolation=None)
    for configFile in args:
        if isinstance(configFile, str):
            path = os.path.normpath(os.path.expanduser(configFile))
            if not os.path.exists(path):
                continue
            with open(path) as f:
                parser.read_file(f, path)
        else:
            parser.read_file(configFile)
    configDict = {}
    for section in parser.sections():
        sectionDict = {}
        for option in parser.options(section):
            value = parser.get(section, option)
            if convertValues:
                value = _getValue(value)
            sectionDict[option] = value
        configDict[section] = sectionDict
    return configDict

def save(config, config_file):
    """
    Saves a configuration dictionary to a file.

    ``None`` values are written as ``off``.

    :Parameters:
        config : dict
            Configuration dictionary
        config_file : string or file
            File to write configuration to
    """
    parser = CaseConfigParser(interpolation=None)
    for section, values in config.items():
        parser.add_section(section)
        for option, value in values.items():
            if value is None:
                value = 'off'
            parser.set(section, option, str(value))
    if isinstance(config_file, str):
        path = os.path.normpath(os.path.expanduser(config_file))
        with open(path, 'w') as f:
            parser.write(f)
    else:
        parser.write(config_file)

def _getValue(value_string):
    """
    Retrieves a value from a ``ConfigParser`` string.

    :Parameters:
        value_string : string
            Option string to convert
    :Returns: The string's value, converted into an int, bool, float,
              ``None`` or string
    """
    boolLiterals = {'false': False,
                    'no': False,
                    'true': True,
                    'yes': True,
                    'on': True,}
    noneLiterals = ('off', 'none')
    stripped = value_string.strip()
    lowered = stripped.lower()
    if stripped.lstrip('-').isdigit():
        return int(stripped)
    elif lowered in noneLiterals:
        return None
    elif lowered in boolLiterals:
        return boolLiterals[lowered]
    elif _isFloat(stripped):
        return float(stripped)
    else:
        return str(value_string)

def _isFloat(value_string):
    """
    Returns whether the string is a ``float``.

    The format for a float is::

        [-]int[.[fraction]][e[-]exponent]

    :Parameters:
        value_string : string
            String to test for floatiness
    :ReturnType: bool
    """
    mantissa, sep, exponent = value_string.lower().partition('e')
    if sep and not exponent.lstrip('+-').isdigit():
        return False
    mantissa = mantissa.lstrip('-')
    if mantissa.count('.') > 1:
        return False
    digits = mantissa.replace('.', '')
    return digits.isdigit()

def getOption(config, section, option, default=None):
    """
    Look up ``config[section][option]``.

    :Returns: The value, or *default* if the section or the option is missing
    """
    return config.get(section, {}).get(option, default)

def setOption(config, section, option, value):
    """Set ``config[section][option]``, adding the section if needed."""
    config.setdefault(section, {})[option] = value

## SOLVER OPTIONS ##

def solverOptions(config, section='solver', **overrides):
    """
    Build solver options from a configuration section.

    Unknown keys produce a `ConfigWarning` and are ignored.  Keyword
    arguments override values from the file; ``None`` overrides are skipped
    so unset command-line flags do not mask the file.

    :Parameters:
        config : dict
            Configuration dictionary (a missing section means defaults)
        section : str
            Section to read
    :ReturnType: `pyvot.engine.SolverOptions`
    """
    values = {}
    for key, value in config.get(section, {}).items():
        if key not in SOLVER_KEYS:
            warnings.warn("Ignoring unknown option %r in [%s]" %
                          (key, section), ConfigWarning, stacklevel=2)
            continue
        values[key] = value
    for key, value in overrides.items():
        if value is not None:
            values[key] = value
    if 'filterFraction' in values and values['filterFraction'] is False:
        values['filterFraction'] = None
    return SolverOptions(**values)
