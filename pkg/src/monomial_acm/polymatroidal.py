"""
Polymatroidal ideals: the exchange property, Veronese type and transversal ideals with their
closed forms, and the CM / aCM classifications.
"""
import logging
from collections import namedtuple
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Dict, Any, FrozenSet

from sympy.utilities.iterables import connected_components

from .compatibility import popcount
from .exceptions import ZeroIdealError, TheoremOutOfScopeError, NotFullSupportedError, NotPolymatroidalError
from .homology import FieldSpec
from .invariants import is_acm, is_cm
from .monomials import Monomial, MonomialIdeal, MonomialPrime, prime_ideal_from_ideal

__all__ = ['VeroneseSpec', 'TransversalSpec', 'TransversalGraph', 'AcmClassification', 'PRINCIPAL',
           'TWO_COMPLEMENTS', 'SQUARE_CASE', 'VERONESE_TYPE_CASE', 'DISJOINT_PAIR_PRODUCT', 'NOT_ACM', 'VERONESE',
           'SQUAREFREE_VERONESE', 'NOT_CM', 'is_polymatroidal', 'is_matroidal', 'veronese_generate',
           'veronese_recognize', 'veronese_ass', 'veronese_depth', 'veronese_is_acm', 'veronese_is_cm',
           'transversal_graph', 'transversal_components', 'transversal_ass', 'transversal_depth', 'transversal_dim',
           'transversal_power_decomposition', 'match_acm_normal_form', 'classify_acm_transversal',
           'classify_cm_polymatroidal']

logger = logging.getLogger(__name__)

PRINCIPAL = 'Principal'
TWO_COMPLEMENTS = 'TwoComplements'
SQUARE_CASE = 'SquareCase'
VERONESE_TYPE_CASE = 'VeroneseTypeCase'
DISJOINT_PAIR_PRODUCT = 'DisjointPairProduct'
NOT_ACM = 'NotACM'

VERONESE = 'Veronese'
SQUAREFREE_VERONESE = 'SquarefreeVeronese'
NOT_CM = 'NotCM'


class VeroneseSpec(object):
    """
    I_(d; a_1, ..., a_n): every degree d monomial with deg_{x_i} <= a_i.
    Bounds 0 <= a_i <= d are accepted. The closed forms need d > 1 and every a_i >= 1.
    """
    __slots__ = ('n', 'd', 'a')

    def __init__(self, n, d, a):  # type: (int, int, Sequence[int]) -> None
        a = tuple(int(v) for v in a)
        if len(a) != n:
            raise ValueError('Expected %d bounds, got %d' % (n, len(a)))
        if d < 1:
            raise ValueError('Degree must be positive, got %d' % d)
        if any(v < 0 or v > d for v in a):
            raise ValueError('Bounds %s must lie in [0, %d]' % (list(a), d))
        self.n = n
        self.d = d
        self.a = a

    def in_closed_form_scope(self):  # type: () -> bool
        return self.d > 1 and min(self.a) >= 1

    def check_closed_form_scope(self):  # type: () -> None
        if not self.in_closed_form_scope():
            raise TheoremOutOfScopeError('Closed forms need d > 1 and all a_i >= 1, got %s' % self)

    def ideal(self):  # type: () -> MonomialIdeal
        return veronese_generate(self)

    def __eq__(self, other):
        if not isinstance(other, VeroneseSpec):
            return NotImplemented
        return (self.n, self.d, self.a) == (other.n, other.d, other.a)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.d, self.a))

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'type': 'veronese', 'n': self.n, 'd': self.d, 'a': list(self.a)}

    def __str__(self):
        return 'V(d=%d; a=%s; n=%d)' % (self.d, ','.join(str(v) for v in self.a), self.n)

    def __repr__(self):
        return 'VeroneseSpec(%s)' % self


TransversalGraph = namedtuple('TransversalGraph', ['vertices', 'edges'])


class TransversalSpec(object):
    """
    I = P_{F_1} ... P_{F_d} for non-empty variable sets F_i. Factor order is kept as given.
    """
    __slots__ = ('n', 'sets')

    def __init__(self, n, sets):  # type: (int, Iterable[Iterable[int]]) -> None
        sets = tuple(frozenset(int(v) for v in s) for s in sets)
        if not sets:
            raise ValueError('A transversal ideal needs at least one factor')
        for s in sets:
            if not s:
                raise ValueError('Factors must be non-empty')
            if min(s) < 1 or max(s) > n:
                raise ValueError('Factor %s uses variables outside 1..%d' % (sorted(s), n))
        self.n = n
        self.sets = sets

    @property
    def d(self):  # type: () -> int
        return len(self.sets)

    def primes(self):  # type: () -> List[MonomialPrime]
        return [MonomialPrime(s) for s in self.sets]

    def ideal(self):  # type: () -> MonomialIdeal
        result = None  # type: Optional[MonomialIdeal]
        for prime in self.primes():
            factor = prime.ideal(self.n)
            result = factor if result is None else result.product(factor)
        return result

    def union(self):  # type: () -> FrozenSet[int]
        return frozenset().union(*self.sets)

    def is_full_supported(self):  # type: () -> bool
        return len(self.union()) == self.n

    def masks(self):  # type: () -> List[int]
        return [MonomialPrime(s).mask for s in self.sets]

    def __eq__(self, other):
        if not isinstance(other, TransversalSpec):
            return NotImplemented
        return self.n == other.n and self.sets == other.sets

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.sets))

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'type': 'transversal', 'n': self.n, 'sets': [sorted(s) for s in self.sets]}

    def __str__(self):
        return 'T(n=%d; %s)' % (self.n, ','.join('{%s}' % ','.join(str(v) for v in sorted(s)) for s in self.sets))

    def __repr__(self):
        return 'TransversalSpec(%s)' % self


def is_polymatroidal(ideal):  # type: (MonomialIdeal) -> bool
    """
    Exchange property: for u, v in G(I) and i with deg_{x_i}(u) > deg_{x_i}(v) there is j with
    deg_{x_j}(u) < deg_{x_j}(v) and x_j u / x_i in G(I). Only ideals generated in one degree qualify.
    """
    if ideal.single_degree() is None:
        return False

    generators = set(ideal.generators)
    for u in ideal.generators:
        for v in ideal.generators:
            for i in range(ideal.n):
                if u[i] <= v[i]:
                    continue
                exchanged = False
                for j in range(ideal.n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if Monomial(w) in generators:
                            exchanged = True
                            break
                if not exchanged:
                    return False
    return True


def is_matroidal(ideal):  # type: (MonomialIdeal) -> bool
    return ideal.is_squarefree() and is_polymatroidal(ideal)


def _bounded_compositions(total, bounds):  # type: (int, Sequence[int]) -> Iterable[Tuple[int, ...]]
    if not bounds:
        if total == 0:
            yield ()
        return
    rest = sum(bounds[1:])
    for first in range(min(bounds[0], total), max(0, total - rest) - 1, -1):
        for tail in _bounded_compositions(total - first, bounds[1:]):
            yield (first,) + tail


def veronese_generate(spec):  # type: (VeroneseSpec) -> MonomialIdeal
    """
    :raises ZeroIdealError: If sum(a) < d, so no monomial fits the bounds
    """
    if sum(spec.a) < spec.d:
        raise ZeroIdealError('%s has no generators: sum of bounds is below the degree' % spec)
    return MonomialIdeal(spec.n, [Monomial(e) for e in _bounded_compositions(spec.d, spec.a)])


def veronese_recognize(ideal):  # type: (MonomialIdeal) -> Optional[VeroneseSpec]
    """
    Reads the bounds off the generators and checks that they regenerate the ideal
    """
    d = ideal.single_degree()
    if d is None:
        return None
    candidate = VeroneseSpec(ideal.n, d, [max(g[i] for g in ideal.generators) for i in range(ideal.n)])
    return candidate if veronese_generate(candidate) == ideal else None


def veronese_ass(spec):  # type: (VeroneseSpec) -> List[MonomialPrime]
    """
    P_A is associated iff sum(a) >= d - 1 + |A| and the bounds outside A sum to at most d - 1
    :raises TheoremOutOfScopeError: Unless d > 1 and every a_i >= 1
    """
    spec.check_closed_form_scope()
    total = sum(spec.a)
    result = []
    for mask in range(1, 1 << spec.n):
        size = popcount(mask)
        outside = sum(v for i, v in enumerate(spec.a) if not (mask >> i) & 1)
        if total >= spec.d - 1 + size and outside <= spec.d - 1:
            result.append(MonomialPrime.from_mask(mask))
    return sorted(result)


def veronese_depth(spec):  # type: (VeroneseSpec) -> int
    """
    depth R/I = max{0, d + n - 1 - sum(a)}. Variables with a_i = 0 do not occur in I,
    each of them adds one to the depth of the part on the other variables.
    """
    if sum(spec.a) < spec.d:
        raise ZeroIdealError('%s has no generators' % spec)
    supported = [v for v in spec.a if v]
    free = spec.n - len(supported)
    return max(0, spec.d + len(supported) - 1 - sum(supported)) + free


def _veronese_heights(spec):  # type: (VeroneseSpec) -> Tuple[int, int]
    heights = [p.height for p in veronese_ass(spec)]
    return min(heights), max(heights)


def veronese_is_acm(spec, field=None):  # type: (VeroneseSpec, Optional[FieldSpec]) -> bool
    """
    bight(I) - hte(I) <= 1. Specs outside the closed form scope go through the general pipeline.
    """
    if not spec.in_closed_form_scope():
        logger.debug('%s is outside the closed form scope, using the pipeline', spec)
        return bool(is_acm(spec.ideal(), field))
    hte, bight = _veronese_heights(spec)
    return bight - hte <= 1


def veronese_is_cm(spec, field=None):  # type: (VeroneseSpec, Optional[FieldSpec]) -> bool
    """
    bight(I) = hte(I)
    """
    if not spec.in_closed_form_scope():
        logger.debug('%s is outside the closed form scope, using the pipeline', spec)
        return bool(is_cm(spec.ideal(), field))
    hte, bight = _veronese_heights(spec)
    return bight == hte


def transversal_graph(spec):  # type: (TransversalSpec) -> TransversalGraph
    """
    Factors 1..d, joined when their variable sets meet
    """
    edges = [(i + 1, j + 1) for i, j in combinations(range(spec.d), 2) if spec.sets[i] & spec.sets[j]]
    return TransversalGraph(list(range(1, spec.d + 1)), edges)


def transversal_components(spec):  # type: (TransversalSpec) -> int
    return len(connected_components(tuple(transversal_graph(spec))))


def _is_connected_subset(mask, adjacency):  # type: (int, Sequence[int]) -> bool
    seen = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        reached = adjacency[low.bit_length() - 1] & mask & ~seen
        seen |= reached
        frontier |= reached
    return seen == mask


def _connected_unions(spec):  # type: (TransversalSpec) -> Dict[int, int]
    """
    For every union of the F_i over a connected set S of factors, the largest such |S|.
    A tree of G_I contributes only through its vertex set, so connected vertex sets cover all trees.
    """
    masks = spec.masks()
    adjacency = [sum(1 << j for j in range(spec.d) if j != i and masks[i] & masks[j]) for i in range(spec.d)]

    result = {}  # type: Dict[int, int]
    for subset in range(1, 1 << spec.d):
        if not _is_connected_subset(subset, adjacency):
            continue
        union = 0
        for i in range(spec.d):
            if (subset >> i) & 1:
                union |= masks[i]
        result[union] = max(result.get(union, 0), popcount(subset))
    return result


def transversal_ass(spec):  # type: (TransversalSpec) -> List[MonomialPrime]
    return sorted(MonomialPrime.from_mask(mask) for mask in _connected_unions(spec))


def transversal_depth(spec):  # type: (TransversalSpec) -> int
    """
    depth R/I = c(G_I) - 1 + n - |F_1 ∪ ... ∪ F_d|
    """
    return transversal_components(spec) - 1 + spec.n - len(spec.union())


def transversal_dim(spec):  # type: (TransversalSpec) -> int
    """
    dim R/I = n - min |F_i|: the minimal associated primes are the smallest factors
    """
    return spec.n - min(len(s) for s in spec.sets)


def transversal_power_decomposition(spec, k):  # type: (TransversalSpec, int) -> List[Tuple[MonomialPrime, int]]
    """
    I^k as an intersection of P^(k a), P running over Ass(I) and a the largest number of factors
    of a connected set whose union gives P
    """
    if k < 1:
        raise ValueError('Power must be positive, got %d' % k)
    unions = _connected_unions(spec)
    return sorted(((MonomialPrime.from_mask(mask), k * size) for mask, size in unions.items()),
                  key=lambda item: item[0].sort_key())


class AcmClassification(object):
    """
    aCM verdict of a full-supported transversal ideal, labelled with its normal form.
    literal is False for aCM ideals which belong to a case family without matching its normal form
    exactly, e.g. with repeated factors. needs_review marks Veronese type matches with r = n.
    """
    def __init__(self, verdict, parameters=None, literal=True, needs_review=False):
        # type: (str, Optional[Dict[str, Any]], bool, bool) -> None
        self.verdict = verdict
        self.parameters = parameters or {}
        self.literal = literal
        self.needs_review = needs_review

    @property
    def is_acm(self):  # type: () -> bool
        return self.verdict != NOT_ACM

    def __eq__(self, other):
        if not isinstance(other, AcmClassification):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'verdict': self.verdict, 'parameters': self.parameters, 'literal': self.literal,
                'needs_review': self.needs_review}

    def __str__(self):
        params = ', '.join('%s=%s' % (k, self.parameters[k]) for k in sorted(self.parameters))
        flags = '' if self.literal else ' (family member)'
        if self.needs_review:
            flags += ' (needs review)'
        return '%s%s%s' % (self.verdict, '(%s)' % params if params else '', flags)

    def __repr__(self):
        return 'AcmClassification(%s)' % self


def _missing_variable(monomial):  # type: (Monomial) -> Optional[int]
    missing = [i + 1 for i, e in enumerate(monomial) if e == 0]
    return missing[0] if len(missing) == 1 else None


def _match_two_complements(ideal):  # type: (MonomialIdeal) -> Optional[Dict[str, int]]
    if len(ideal) != 2 or ideal.n < 2 or not ideal.is_squarefree():
        return None
    missing = [_missing_variable(g) for g in ideal.generators]
    if None in missing or any(g.degree != ideal.n - 1 for g in ideal.generators):
        return None
    return {'i': min(missing), 'j': max(missing)}


def _match_square_case(ideal):  # type: (MonomialIdeal) -> Optional[Dict[str, int]]
    """
    (x_1 ... x_i^2 ... x_{n-1}, x_1 ... x_n) up to renaming the variable left out of the first generator
    """
    if len(ideal) != 2:
        return None
    full = [g for g in ideal.generators if all(e == 1 for e in g)]
    other = [g for g in ideal.generators if not all(e == 1 for e in g)]
    if len(full) != 1 or len(other) != 1:
        return None
    exponents = sorted(other[0])
    if exponents != [0] + [1] * (ideal.n - 2) + [2]:
        return None
    return {'i': other[0].index(2) + 1, 'j': other[0].index(0) + 1}


def _match_veronese_type(ideal):  # type: (MonomialIdeal) -> Optional[VeroneseSpec]
    spec = veronese_recognize(ideal)
    if spec is None or spec.d < 2 or any(v not in (spec.d, spec.d - 1) for v in spec.a):
        return None
    return spec


def _veronese_type_case(spec, literal):  # type: (VeroneseSpec, bool) -> AcmClassification
    r = sum(1 for v in spec.a if v == spec.d - 1)
    needs_review = r == spec.n
    if needs_review:
        logger.warning('%s matches the Veronese type case with r = n, flagged for review', spec)
    return AcmClassification(VERONESE_TYPE_CASE, {'r': r, 'd': spec.d}, literal=literal, needs_review=needs_review)


def _match_disjoint_pair_product(ideal):  # type: (MonomialIdeal) -> Optional[Dict[str, List[int]]]
    """
    (x_a, x_b)(x_c, x_d) with {a, b, c, d} = {1, 2, 3, 4}
    """
    if ideal.n != 4 or len(ideal) != 4 or not ideal.is_squarefree():
        return None
    for partner in (2, 3, 4):
        first = MonomialPrime([1, partner])
        second = MonomialPrime(v for v in range(2, 5) if v != partner)
        if ideal == first.ideal(4) * second.ideal(4):
            return {'F1': first.to_list(), 'F2': second.to_list()}
    return None


def match_acm_normal_form(ideal):  # type: (MonomialIdeal) -> Optional[AcmClassification]
    """
    Literal normal forms of aCM transversal ideals, tried in order on the ideal alone:
    principal or a single prime, two complements, the square case, Veronese type with bounds d - 1 and d,
    and a product of two disjoint pairs.
    :return: Matching classification, None if the ideal has none of these shapes
    """
    if ideal.is_principal():
        return AcmClassification(PRINCIPAL)

    prime = prime_ideal_from_ideal(ideal)
    if prime is not None:
        return AcmClassification(PRINCIPAL, {'prime': prime.to_list()})

    match = _match_two_complements(ideal)
    if match is not None:
        return AcmClassification(TWO_COMPLEMENTS, match)

    match = _match_square_case(ideal)
    if match is not None:
        return AcmClassification(SQUARE_CASE, match)

    veronese = _match_veronese_type(ideal)
    if veronese is not None:
        return _veronese_type_case(veronese, literal=True)

    pairs = _match_disjoint_pair_product(ideal)
    if pairs is not None:
        return AcmClassification(DISJOINT_PAIR_PRODUCT, pairs)
    return None


def classify_acm_transversal(spec):  # type: (TransversalSpec) -> AcmClassification
    """
    With dim R/I = n - min|F_i| and depth R/I = c(G_I) - 1 (full support), I is aCM iff c(G_I) >= n - min|F_i|.
    The verdict comes from that count alone. aCM ideals are then labelled with match_acm_normal_form,
    or with the family they fall in when no normal form matches literally.
    A single factor (d = 1) is the maximal ideal, labelled Principal.
    :raises NotFullSupportedError: If some variable occurs in no factor
    """
    if not spec.is_full_supported():
        raise NotFullSupportedError('%s does not involve every variable' % spec)

    n = spec.n
    components = transversal_components(spec)
    smallest = min(len(s) for s in spec.sets)
    if components < n - smallest:
        return AcmClassification(NOT_ACM)

    literal = match_acm_normal_form(spec.ideal())
    if literal is not None:
        return literal

    # Families: the same shapes with repeated factors
    if smallest == 1:
        # c(G_I) = n - 1: one component spans two variables {p, q}, the others one variable each
        block = next(s for s in _component_unions(spec) if len(s) == 2)
        singles = sorted(v for v in block if frozenset([v]) in spec.sets)
        p, q = sorted(block)
        if singles:
            i = singles[0]
            return AcmClassification(SQUARE_CASE, {'i': i, 'j': q if i == p else p}, literal=False)
        return AcmClassification(TWO_COMPLEMENTS, {'i': p, 'j': q}, literal=False)

    if smallest == 2 and components == 2 and n == 4:
        unions = sorted(sorted(s) for s in _component_unions(spec))
        return AcmClassification(DISJOINT_PAIR_PRODUCT, {'F1': unions[0], 'F2': unions[1]}, literal=False)

    assert components == 1, 'Unexpected aCM shape %s' % spec
    return AcmClassification(VERONESE_TYPE_CASE, {'d': spec.d}, literal=False)


def _component_unions(spec):  # type: (TransversalSpec) -> List[FrozenSet[int]]
    graph = transversal_graph(spec)
    return [frozenset().union(*(spec.sets[i - 1] for i in component))
            for component in connected_components(tuple(graph))]


def classify_cm_polymatroidal(ideal):  # type: (MonomialIdeal) -> str
    """
    A polymatroidal ideal is CM iff it is principal, a Veronese ideal or a squarefree Veronese ideal.
    Recognition runs on the support variables, the remaining ones are free.
    :raises NotPolymatroidalError: If the exchange property fails
    """
    if not is_polymatroidal(ideal):
        raise NotPolymatroidalError('%s is not polymatroidal' % ideal)

    if ideal.is_principal():
        return PRINCIPAL

    restricted, _ = ideal.restrict_support()
    d = restricted.single_degree()
    if restricted == MonomialIdeal.maximal(restricted.n).power(d):
        return VERONESE
    squarefree = VeroneseSpec(restricted.n, d, [1] * restricted.n)
    if 2 <= d < restricted.n and restricted == veronese_generate(squarefree):
        return SQUAREFREE_VERONESE
    return NOT_CM
