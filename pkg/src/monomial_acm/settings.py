"""
This file contains default settings. Every value can be overridden from the environment.
"""
from os import environ

# Field characteristic used when none is given: 0 means exact rationals
DEFAULT_CHARACTERISTIC = int(environ.get('MONOMIAL_ACM_CHAR', 0))

# Worker processes for validate / enumerate
DEFAULT_JOBS = int(environ.get('MONOMIAL_ACM_JOBS', 1))

LOG_LEVEL = environ.get('MONOMIAL_ACM_LOG_LEVEL', 'WARNING')

# Largest polarized ring on which Hochster's formula is run directly.
# Bigger non-squarefree ideals go through the upper Koszul complexes instead.
POLARIZE_MAX_VERTICES = int(environ.get('MONOMIAL_ACM_POLARIZE_MAX', 14))

# Faces are bitmasks in a single machine word
MAX_VERTICES = 64

MAX_EXPONENT = 2 ** 31 - 1
