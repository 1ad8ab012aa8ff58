#!/usr/bin/env python

"""
This suite runs the unit tests with unittest discovery. Environment variables of monomial_acm.settings apply.
"""

import os
import sys
import unittest

import sympy

if __name__ == "__main__":
    print('sympy: ', sympy.__version__)
    print('Python: ', sys.version)
    sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))
    suite = unittest.defaultTestLoader.discover('tests', top_level_dir='.')
    result = unittest.TextTestRunner(verbosity=1).run(suite)
    sys.exit(not result.wasSuccessful())
