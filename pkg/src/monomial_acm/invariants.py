"""
Homological invariants of R/I and the Cohen-Macaulay / almost Cohen-Macaulay predicates
"""
import logging
from collections import namedtuple
from itertools import combinations, product as cartesian
from typing import List, Optional, Sequence, Dict, Any

from .exceptions import NotRegularSequenceError, ZeroIdealError
from .homology import FieldSpec, BettiTable, betti_table
from .monomials import MonomialIdeal, MonomialPrime, Monomial
from .simplicial import SimplicialComplex, minimal_vertex_covers, stanley_reisner_ideal, alexander_dual_complex

__all__ = ['InvariantReport', 'Verdict', 'TeraiCheck', 'LINEAR', 'ALMOST_LINEAR', 'NEITHER', 'minimal_primes',
           'ass_brute_force', 'depth_dim_pd', 'analyze', 'is_cm', 'is_acm', 'is_acm_by_height', 'resolution_shape',
           'is_monomial_regular_sequence', 'reg_of_regular_sequence', 'terai_identity_check']

logger = logging.getLogger(__name__)

LINEAR = 'linear'
ALMOST_LINEAR = 'almost_linear'
NEITHER = 'neither'


class Verdict(namedtuple('Verdict', ['holds', 'depth', 'dim'])):
    """
    A predicate value together with the depth and dimension it was read from. Truthy iff it holds.
    """
    __slots__ = ()

    def __bool__(self):
        return bool(self.holds)

    # Python 2.7
    __nonzero__ = __bool__


TeraiCheck = namedtuple('TeraiCheck', ['lhs', 'rhs', 'equal', 'reg_equals_pd', 'indeg_equals_codim'])


class InvariantReport(object):
    """
    Invariants of R/I for a monomial ideal I in n variables.
    hte, bight and the associated primes are those of I. For the zero ideal hte = bight = 0.
    reg and indeg are None for the zero ideal.
    """
    def __init__(self, n, dim, depth, pd, reg, indeg, hte, bight=None, ass=None, betti=None):
        # type: (int, int, int, int, Optional[int], Optional[int], int, Optional[int], Optional[List[MonomialPrime]], Optional[BettiTable]) -> None
        assert depth + pd == n, "Auslander-Buchsbaum failed: depth %d + pd %d != %d" % (depth, pd, n)
        assert dim == n - hte, "dim %d does not match height %d" % (dim, hte)

        self.n = n
        self.dim = dim
        self.depth = depth
        self.pd = pd
        self.reg = reg
        self.indeg = indeg
        self.hte = hte
        self.bight = bight
        self.ass = ass
        self.betti = betti

    @property
    def cm(self):  # type: () -> bool
        return self.depth == self.dim

    @property
    def acm(self):  # type: () -> bool
        return self.depth >= self.dim - 1

    def to_json(self):  # type: () -> Dict[str, Any]
        result = {
            'n': self.n,
            'dim': self.dim,
            'depth': self.depth,
            'pd': self.pd,
            'reg': self.reg,
            'indeg': self.indeg,
            'hte': self.hte,
            'bight': self.bight,
            'cm': self.cm,
            'acm': self.acm,
        }
        if self.ass is not None:
            result['ass'] = [p.to_list() for p in self.ass]
        return result

    def as_text(self):  # type: () -> str
        lines = ['%s: %s' % (key, _text_value(value)) for key, value in self.to_json().items() if key != 'ass']
        if self.ass is not None:
            lines.append('ass: %s' % ', '.join(str(p) for p in self.ass))
        return '\n'.join(lines)

    def __repr__(self):
        return 'InvariantReport(%s)' % self.to_json()


def _text_value(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return '-' if value is None else str(value)


def minimal_primes(ideal):  # type: (MonomialIdeal) -> List[MonomialPrime]
    """
    Minimal primes of I: minimal vertex covers of the generator supports of its radical.
    :return: Primes sorted by height, then variables. Empty for the zero ideal, which has height 0.
    """
    if ideal.is_zero():
        return []
    covers = minimal_vertex_covers(ideal.radical().generator_masks())
    return sorted(MonomialPrime.from_mask(c) for c in covers)


def ass_brute_force(ideal):  # type: (MonomialIdeal) -> List[MonomialPrime]
    """
    Associated primes as the prime colons I : m, m running over the divisors of lcm(G(I)) outside I.
    For such m, I : m contains x_i exactly for i in A = {i : x_i m ∈ I}, and equals P_A iff every
    u / gcd(u, m) with u in G(I) involves a variable of A.
    """
    if ideal.is_zero():
        return []

    n = ideal.n
    generators = ideal.generators
    result = set()
    for exponents in cartesian(*(range(e + 1) for e in ideal.lcm())):
        m = Monomial(exponents)
        if ideal.contains(m):
            continue

        a_mask = 0
        for i in range(n):
            bumped = list(exponents)
            bumped[i] += 1
            if ideal.contains(bumped):
                a_mask |= 1 << i

        if a_mask and all((g / g.gcd(m)).support_mask() & a_mask for g in generators):
            result.add(a_mask)

    return sorted(MonomialPrime.from_mask(mask) for mask in result)


def _height(primes):  # type: (Sequence[MonomialPrime]) -> int
    return min(p.height for p in primes) if primes else 0


def depth_dim_pd(ideal, field=None, method='auto'):
    # type: (MonomialIdeal, Optional[FieldSpec], str) -> InvariantReport
    """
    Core scalars of R/I. pd is read off the Betti table (of the polarization when I is not squarefree),
    depth = n - pd by Auslander-Buchsbaum, dim = n - hte from the minimal primes.
    :return: InvariantReport without bight and associated primes
    """
    table = betti_table(ideal, field, method=method)
    pd = table.projective_dimension
    hte = _height(minimal_primes(ideal))
    return InvariantReport(n=ideal.n, dim=ideal.n - hte, depth=ideal.n - pd, pd=pd, reg=table.ideal_regularity,
                           indeg=ideal.indeg(), hte=hte, betti=table)


def analyze(ideal, field=None, method='auto'):  # type: (MonomialIdeal, Optional[FieldSpec], str) -> InvariantReport
    """
    Full report: core scalars, associated primes and big height
    """
    report = depth_dim_pd(ideal, field, method=method)
    # Squarefree ideals have no embedded primes
    report.ass = minimal_primes(ideal) if ideal.is_squarefree() else ass_brute_force(ideal)
    report.bight = max(p.height for p in report.ass) if report.ass else 0

    assert report.hte <= report.bight <= report.pd, \
        "Heights out of order for %s: hte %d, bight %d, pd %d" % (ideal, report.hte, report.bight, report.pd)
    return report


def is_cm(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> Verdict
    report = depth_dim_pd(ideal, field)
    return Verdict(report.cm, report.depth, report.dim)


def is_acm_by_height(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> bool
    """
    aCM as hte(I) >= pd(R/I) - 1
    """
    report = depth_dim_pd(ideal, field)
    return report.hte >= report.pd - 1


def is_acm(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> Verdict
    """
    depth R/I >= dim R/I - 1, cross-checked against the height form
    """
    report = depth_dim_pd(ideal, field)
    assert report.acm == (report.hte >= report.pd - 1), "aCM routes disagree for %s" % ideal
    return Verdict(report.acm, report.depth, report.dim)


def resolution_shape(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> str
    """
    LINEAR if reg(I) = indeg(I), ALMOST_LINEAR if reg(I) = indeg(I) + 1, NEITHER otherwise.
    Non-squarefree ideals are read through polarization, which keeps the regularity.
    :raises ZeroIdealError: The zero ideal has no regularity
    """
    if ideal.is_zero():
        raise ZeroIdealError('The zero ideal has no resolution shape')

    table = betti_table(ideal, field)
    gap = table.ideal_regularity - ideal.indeg()
    if gap == 0:
        return LINEAR
    return ALMOST_LINEAR if gap == 1 else NEITHER


def is_monomial_regular_sequence(monomials):  # type: (Sequence[Monomial]) -> bool
    """
    Non-unit monomials form a regular sequence iff their supports are pairwise disjoint
    """
    if any(m.is_unit() for m in monomials):
        return False
    return all(not (u.support_mask() & v.support_mask()) for u, v in combinations(monomials, 2))


def reg_of_regular_sequence(monomials):  # type: (Sequence[Monomial]) -> int
    """
    reg(I) = d_1 + ... + d_r - r + 1 for an ideal generated by a regular sequence of degrees d_i
    :raises NotRegularSequenceError: If two supports overlap
    """
    if not monomials:
        raise ValueError('Empty sequence generates the zero ideal')
    if not is_monomial_regular_sequence(monomials):
        raise NotRegularSequenceError('Supports of %s overlap' % ', '.join(str(m) for m in monomials))
    return sum(m.degree for m in monomials) - len(monomials) + 1


def terai_identity_check(complex_, field=None):  # type: (SimplicialComplex, Optional[FieldSpec]) -> TeraiCheck
    """
    Compares reg(I_Δ) - indeg(I_Δ) with dim k[Δ∨] - depth k[Δ∨], each side computed on its own,
    together with reg(I_Δ) = pd k[Δ∨] and indeg(I_Δ) = n - dim k[Δ∨].
    :raises FullSimplexError: If Δ is the full simplex
    """
    ideal = stanley_reisner_ideal(complex_)
    dual = alexander_dual_complex(complex_)

    table = betti_table(ideal, field)
    reg, indeg = table.ideal_regularity, ideal.indeg()
    dual_report = depth_dim_pd(stanley_reisner_ideal(dual), field)

    lhs = reg - indeg
    rhs = dual_report.dim - dual_report.depth
    return TeraiCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs, reg_equals_pd=reg == dual_report.pd,
                      indeg_equals_codim=indeg == complex_.n - dual_report.dim)
