"""
Text and JSON grammars for monomials, ideals, complexes and polymatroidal specs.

    monomial     x3, x1^2*x2, 1
    ideal        (x1*x3, x2^2), () for the zero ideal
    complex      n=5; {1,2},{4,5},{3}   ({} is the empty face, the n= prefix is optional)
    veronese     V(d=2; a=1,2,1; n=3)   (n defaults to the number of bounds)
    transversal  T(n=4; {1,2},{3,4})
"""
import json
import re
from typing import Any, Dict, List, Optional, Union

from .exceptions import ParseError
from .monomials import Monomial, MonomialIdeal
from .polymatroidal import VeroneseSpec, TransversalSpec
from .simplicial import SimplicialComplex

__all__ = ['parse_monomial', 'parse_ideal', 'parse_complex', 'parse_veronese', 'parse_transversal', 'parse_input',
           'ideal_from_json', 'complex_from_json', 'spec_from_json', 'infer_n']

ParsedInput = Union[MonomialIdeal, SimplicialComplex, VeroneseSpec, TransversalSpec]

_FACTOR = re.compile(r'\Ax(?P<var>\d+)(?:\^(?P<exp>\d+))?\Z')
_FACE = re.compile(r'\{(?P<body>[^{}]*)\}')
_COMPLEX = re.compile(r'\A(?:n=(?P<n>\d+);)?(?P<faces>(?:\{[\d,]*\},?)*)\Z')
_VERONESE = re.compile(r"""
    \AV\(
    d=(?P<d>\d+);
    a=(?P<a>\d+(?:,\d+)*)
    (?:;n=(?P<n>\d+))?
    \)\Z
""", re.VERBOSE)
_TRANSVERSAL = re.compile(r'\AT\(n=(?P<n>\d+);(?P<sets>(?:\{[\d,]+\},?)+)\)\Z')


def _compact(text):  # type: (str) -> str
    return re.sub(r'\s+', '', text)


def _int_list(body):  # type: (str) -> List[int]
    return [int(v) for v in body.split(',') if v]


def _factors(text):  # type: (str) -> Dict[int, int]
    """
    Variable index -> exponent of a product like x1^2*x2. Repeated variables add up.
    """
    powers = {}  # type: Dict[int, int]
    if text == '1':
        return powers
    for factor in text.split('*'):
        match = _FACTOR.match(factor)
        if match is None:
            raise ParseError('Invalid monomial factor %r' % factor)
        var = int(match.group('var'))
        if var < 1:
            raise ParseError('Variable indices start from 1, got x%d' % var)
        powers[var] = powers.get(var, 0) + int(match.group('exp') or 1)
    return powers


def _to_monomial(powers, n):  # type: (Dict[int, int], int) -> Monomial
    if powers and max(powers) > n:
        raise ParseError('x%d does not exist in %d variables' % (max(powers), n))
    try:
        return Monomial(powers.get(i, 0) for i in range(1, n + 1))
    except ValueError as e:
        raise ParseError(str(e))


def infer_n(text):  # type: (str) -> int
    """
    Highest variable index mentioned in a monomial or ideal text, at least 1
    """
    indices = [int(v) for v in re.findall(r'x(\d+)', text)]
    return max(indices + [1])


def parse_monomial(text, n=None):  # type: (str, Optional[int]) -> Monomial
    text = _compact(text)
    if not text:
        raise ParseError('Empty monomial')
    return _to_monomial(_factors(text), n or infer_n(text))


def parse_ideal(text, n=None):  # type: (str, Optional[int]) -> MonomialIdeal
    """
    :param text: Comma separated monomials inside parentheses
    :param n: Ambient variable count. Inferred from the highest index if not given
    """
    text = _compact(text)
    if not (text.startswith('(') and text.endswith(')')):
        raise ParseError('Ideal must be enclosed in parentheses: %r' % text)
    n = n or infer_n(text)
    body = text[1:-1]
    generators = [_to_monomial(_factors(item), n) for item in body.split(',')] if body else []
    return MonomialIdeal(n, generators)


def parse_complex(text, n=None):  # type: (str, Optional[int]) -> SimplicialComplex
    """
    :param n: Vertex count when the text has no n= prefix. Defaults to the highest vertex
    """
    text = _compact(text)
    match = _COMPLEX.match(text)
    if match is None or not match.group('faces'):
        raise ParseError('Invalid complex %r' % text)

    faces = [_int_list(m.group('body')) for m in _FACE.finditer(match.group('faces'))]
    vertices = [v for f in faces for v in f]
    if match.group('n'):
        n = int(match.group('n'))
    elif n is None:
        if not vertices:
            raise ParseError('Complex %r lists no vertices, give the vertex count as n=...; {}' % text)
        n = max(vertices)

    if vertices and (min(vertices) < 1 or max(vertices) > n):
        raise ParseError('Complex %r uses vertices outside 1..%d' % (text, n))
    return SimplicialComplex.from_facets(n, faces)


def parse_veronese(text):  # type: (str) -> VeroneseSpec
    match = _VERONESE.match(_compact(text))
    if match is None:
        raise ParseError('Invalid Veronese spec %r' % text)
    a = _int_list(match.group('a'))
    n = int(match.group('n')) if match.group('n') else len(a)
    try:
        return VeroneseSpec(n, int(match.group('d')), a)
    except ValueError as e:
        raise ParseError(str(e))


def parse_transversal(text):  # type: (str) -> TransversalSpec
    match = _TRANSVERSAL.match(_compact(text))
    if match is None:
        raise ParseError('Invalid transversal spec %r' % text)
    sets = [_int_list(m.group('body')) for m in _FACE.finditer(match.group('sets'))]
    try:
        return TransversalSpec(int(match.group('n')), sets)
    except ValueError as e:
        raise ParseError(str(e))


def ideal_from_json(data):  # type: (Dict[str, Any]) -> MonomialIdeal
    """
    {"n": 3, "generators": [[1, 1, 0], [1, 0, 1]]}
    """
    try:
        return MonomialIdeal(int(data['n']), [Monomial(g) for g in data['generators']])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError('Invalid ideal JSON: %s' % e)


def complex_from_json(data):  # type: (Dict[str, Any]) -> SimplicialComplex
    """
    {"n": 5, "facets": [[1, 2], [4, 5], [3]]}
    """
    try:
        return SimplicialComplex.from_facets(int(data['n']), data['facets'])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError('Invalid complex JSON: %s' % e)


def spec_from_json(data):  # type: (Dict[str, Any]) -> Union[VeroneseSpec, TransversalSpec]
    """
    {"type": "veronese", "n": 3, "d": 2, "a": [1, 2, 1]} or {"type": "transversal", "n": 4, "sets": [[1, 2], [3, 4]]}
    """
    try:
        if data['type'] == 'veronese':
            return VeroneseSpec(int(data['n']), int(data['d']), data['a'])
        if data['type'] == 'transversal':
            return TransversalSpec(int(data['n']), data['sets'])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError('Invalid spec JSON: %s' % e)
    raise ParseError('Unknown spec type %r' % data['type'])


def _from_json(text):  # type: (str) -> ParsedInput
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError('Invalid JSON: %s' % e)
    if not isinstance(data, dict):
        raise ParseError('JSON input must be an object')

    if 'type' in data:
        return spec_from_json(data)
    if 'facets' in data:
        return complex_from_json(data)
    if 'generators' in data:
        return ideal_from_json(data)
    raise ParseError('JSON object is neither an ideal, a complex nor a spec')


def parse_input(text, n=None):  # type: (str, Optional[int]) -> ParsedInput
    """
    Dispatches on the leading token: JSON object, ideal, Veronese spec, transversal spec or complex
    """
    compact = _compact(text)
    if not compact:
        raise ParseError('Empty input')

    if compact.startswith('{"'):
        return _from_json(text)
    if compact.startswith('('):
        return parse_ideal(compact, n)
    if compact.startswith('V('):
        return parse_veronese(compact)
    if compact.startswith('T('):
        return parse_transversal(compact)
    if compact.startswith('{') or compact.startswith('n='):
        return parse_complex(compact, n)
    raise ParseError('Unrecognized input %r' % text)
