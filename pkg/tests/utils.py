import json
import os
import random
from typing import Any, Dict, List

from monomial_acm import MonomialIdeal, SimplicialComplex

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def load_fixture(name):  # type: (str) -> List[Dict[str, Any]]
    with open(os.path.join(FIXTURES_DIR, '%s.json' % name)) as f:
        return json.load(f)


def fixture_by_name(fixture, name):  # type: (str, str) -> Dict[str, Any]
    return next(item for item in load_fixture(fixture) if item['name'] == name)


def random_ideal(rng, n, max_exponent=2, max_generators=4):  # type: (random.Random, int, int, int) -> MonomialIdeal
    """
    Nonzero proper ideal in n variables with exponents up to max_exponent
    """
    count = rng.randint(1, max_generators)
    generators = []  # type: List[List[int]]
    while len(generators) < count:
        exponents = [rng.randint(0, max_exponent) for _ in range(n)]
        if any(exponents):
            generators.append(exponents)
    return MonomialIdeal(n, generators)


def random_complex(rng, n, max_facets=4):  # type: (random.Random, int, int) -> SimplicialComplex
    """
    Complex on n vertices spanned by nonempty random faces
    """
    return SimplicialComplex(n, [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, max_facets))])


def all_exponents(n, max_exponent):  # type: (int, int) -> List[List[int]]
    """
    Every exponent vector in the box [0, max_exponent]^n
    """
    result = [[]]  # type: List[List[int]]
    for _ in range(n):
        result = [e + [k] for e in result for k in range(max_exponent + 1)]
    return result
