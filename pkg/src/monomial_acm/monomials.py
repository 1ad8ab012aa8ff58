"""
Exact arithmetic on monomials and monomial ideals of k[x1, ..., xn]
"""
import logging
from collections import namedtuple
from typing import Any, Dict, Iterable, Tuple, List, Optional, FrozenSet, Sequence, Union

from .exceptions import UnitIdealError, AmbientMismatchError
from .settings import MAX_EXPONENT

__all__ = ['Monomial', 'MonomialIdeal', 'MonomialPrime', 'Polarization', 'variable_name', 'prime_ideal_from_ideal',
           'prime_power_intersection', 'minimize', 'support', 'colon', 'intersect', 'product', 'power', 'radical',
           'is_squarefree', 'polarization_origins', 'polarized_names', 'polarize', 'depolarize']

logger = logging.getLogger(__name__)


def variable_name(i):  # type: (int) -> str
    return 'x%d' % i


class Monomial(tuple):
    """
    Exponent vector of x1^e1 * ... * xn^en. Ordered lexicographically on exponents, so x1 > x2 > ... > xn.
    """
    __slots__ = ()

    def __new__(cls, exponents):  # type: (Iterable[int]) -> Monomial
        exponents = tuple(int(e) for e in exponents)
        for e in exponents:
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError('Exponent %d is out of range [0, %d]' % (e, MAX_EXPONENT))
        return super(Monomial, cls).__new__(cls, exponents)

    @classmethod
    def unit(cls, n):  # type: (int) -> Monomial
        return cls((0,) * n)

    @classmethod
    def variable(cls, i, n, power=1):  # type: (int, int, int) -> Monomial
        """
        :param i: 1-based variable index
        :param n: Number of variables
        :param power: Exponent of the variable
        """
        if not 1 <= i <= n:
            raise AmbientMismatchError('Variable x%d does not exist in %d variables' % (i, n))
        return cls(power if j == i else 0 for j in range(1, n + 1))

    @classmethod
    def from_mask(cls, mask, n):  # type: (int, int) -> Monomial
        """
        Squarefree monomial with the variables of a bitmask (bit i - 1 stands for xi)
        """
        return cls((mask >> j) & 1 for j in range(n))

    @property
    def n(self):  # type: () -> int
        return len(self)

    @property
    def degree(self):  # type: () -> int
        return sum(self)

    def is_unit(self):  # type: () -> bool
        return not any(self)

    def is_squarefree(self):  # type: () -> bool
        return all(e <= 1 for e in self)

    def support(self):  # type: () -> FrozenSet[int]
        return frozenset(i + 1 for i, e in enumerate(self) if e)

    def support_mask(self):  # type: () -> int
        mask = 0
        for i, e in enumerate(self):
            if e:
                mask |= 1 << i
        return mask

    def _check_ambient(self, other):  # type: (Monomial) -> None
        if len(self) != len(other):
            raise AmbientMismatchError('Monomials live in %d and %d variables' % (len(self), len(other)))

    def divides(self, other):  # type: (Monomial) -> bool
        return all(a <= b for a, b in zip(self, other))

    def lcm(self, other):  # type: (Monomial) -> Monomial
        self._check_ambient(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other):  # type: (Monomial) -> Monomial
        self._check_ambient(other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def squarefree_part(self):  # type: () -> Monomial
        return Monomial(min(e, 1) for e in self)

    def __mul__(self, other):  # type: (Monomial) -> Monomial
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check_ambient(other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):  # type: (Monomial) -> Monomial
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check_ambient(other)
        if not other.divides(self):
            raise ValueError('%s does not divide %s' % (other, self))
        return Monomial(a - b for a, b in zip(self, other))

    def format(self, names=None):  # type: (Optional[Sequence[str]]) -> str
        """
        Text form: x1^2*x2, or 1 for the unit monomial
        :param names: Variable names. x1..xn by default
        """
        if self.is_unit():
            return '1'

        parts = []
        for i, e in enumerate(self):
            if not e:
                continue
            name = names[i] if names else variable_name(i + 1)
            parts.append(name if e == 1 else '%s^%d' % (name, e))
        return '*'.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'Monomial(%s, n=%d)' % (self.format(), len(self))


MonomialLike = Union[Monomial, Sequence[int]]


def _as_monomial(value):  # type: (MonomialLike) -> Monomial
    return value if isinstance(value, Monomial) else Monomial(value)


def _minimal_generators(n, generators):  # type: (int, Iterable[MonomialLike]) -> Tuple[Monomial, ...]
    unique = set()
    for g in generators:
        m = _as_monomial(g)
        if len(m) != n:
            raise AmbientMismatchError('Generator %s has %d exponents, expected %d' % (m, len(m), n))
        if m.is_unit():
            raise UnitIdealError('The unit monomial generates the whole ring')
        unique.add(m)

    # A proper divisor has smaller degree, so it is always kept before its multiples are looked at
    kept = []  # type: List[Monomial]
    for m in sorted(unique, key=lambda x: (x.degree, x)):
        if not any(k.divides(m) for k in kept):
            kept.append(m)

    return tuple(sorted(kept, reverse=True))


class MonomialIdeal(object):
    """
    A proper monomial ideal, stored by its unique minimal generating set G(I).
    The zero ideal has no generators. Values are immutable and hashable.
    """
    __slots__ = ('n', 'generators', '_hash')

    def __init__(self, n, generators=()):  # type: (int, Iterable[MonomialLike]) -> None
        n = int(n)
        if n < 1:
            raise ValueError('Ambient ring needs at least one variable')
        self.n = n
        self.generators = _minimal_generators(n, generators)
        self._hash = hash((n, self.generators))

    @classmethod
    def zero(cls, n):  # type: (int) -> MonomialIdeal
        return cls(n)

    @classmethod
    def maximal(cls, n):  # type: (int) -> MonomialIdeal
        return cls(n, [Monomial.variable(i, n) for i in range(1, n + 1)])

    @classmethod
    def from_masks(cls, n, masks):  # type: (int, Iterable[int]) -> MonomialIdeal
        """
        Squarefree ideal from generator supports given as bitmasks
        """
        return cls(n, [Monomial.from_mask(mask, n) for mask in masks])

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, monomial):  # type: (MonomialLike) -> bool
        return self.contains(monomial)

    def _check_ambient(self, other):  # type: (MonomialIdeal) -> None
        if self.n != other.n:
            raise AmbientMismatchError('Ideals live in %d and %d variables' % (self.n, other.n))

    def is_zero(self):  # type: () -> bool
        return not self.generators

    def is_principal(self):  # type: () -> bool
        return len(self.generators) == 1

    def contains(self, monomial):  # type: (MonomialLike) -> bool
        monomial = _as_monomial(monomial)
        return any(g.divides(monomial) for g in self.generators)

    def support(self):  # type: () -> FrozenSet[int]
        result = set()
        for g in self.generators:
            result.update(g.support())
        return frozenset(result)

    def support_mask(self):  # type: () -> int
        mask = 0
        for g in self.generators:
            mask |= g.support_mask()
        return mask

    def is_full_supported(self):  # type: () -> bool
        return len(self.support()) == self.n

    def restrict_support(self):  # type: () -> Tuple[MonomialIdeal, List[int]]
        """
        Drops the variables outside supp(I).
        :return: The same generators in |supp(I)| variables and the original index of every kept variable
        """
        kept = sorted(self.support())
        if not kept:
            return MonomialIdeal(self.n), list(range(1, self.n + 1))
        generators = [Monomial(g[i - 1] for i in kept) for g in self.generators]
        return MonomialIdeal(len(kept), generators), kept

    def generator_masks(self):  # type: () -> List[int]
        return [g.support_mask() for g in self.generators]

    def degrees(self):  # type: () -> List[int]
        return sorted(g.degree for g in self.generators)

    def indeg(self):  # type: () -> Optional[int]
        """
        Smallest generator degree, None for the zero ideal
        """
        return min(self.degrees()) if self.generators else None

    def single_degree(self):  # type: () -> Optional[int]
        """
        The common degree of all generators, None if generators have different degrees or the ideal is zero
        """
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def lcm(self):  # type: () -> Monomial
        result = Monomial.unit(self.n)
        for g in self.generators:
            result = result.lcm(g)
        return result

    def lcm_lattice(self):  # type: () -> FrozenSet[Monomial]
        """
        All least common multiples of non-empty subsets of G(I)
        """
        lattice = set()  # type: set
        for g in self.generators:
            lattice |= {g.lcm(m) for m in lattice}
            lattice.add(g)
        return frozenset(lattice)

    def colon(self, monomial):  # type: (MonomialLike) -> MonomialIdeal
        """
        I : m, generated by u / gcd(u, m) for u in G(I)
        :raises UnitIdealError: If m lies in I, since then I : m is the whole ring
        """
        monomial = _as_monomial(monomial)
        if len(monomial) != self.n:
            raise AmbientMismatchError('Monomial %s is not in %d variables' % (monomial, self.n))
        if self.contains(monomial):
            raise UnitIdealError('%s lies in the ideal, so the colon is the unit ideal' % (monomial,))
        return MonomialIdeal(self.n, [g / g.gcd(monomial) for g in self.generators])

    def intersect(self, other):  # type: (MonomialIdeal) -> MonomialIdeal
        self._check_ambient(other)
        return MonomialIdeal(self.n, [u.lcm(v) for u in self.generators for v in other.generators])

    def product(self, other):  # type: (MonomialIdeal) -> MonomialIdeal
        self._check_ambient(other)
        return MonomialIdeal(self.n, [u * v for u in self.generators for v in other.generators])

    def __mul__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.product(other)

    def power(self, k):  # type: (int) -> MonomialIdeal
        if k < 1:
            raise ValueError('Power must be positive, got %d' % k)
        result = self
        for _ in range(k - 1):
            result = result.product(self)
        return result

    def __pow__(self, k):
        return self.power(k)

    def radical(self):  # type: () -> MonomialIdeal
        return MonomialIdeal(self.n, [g.squarefree_part() for g in self.generators])

    def is_squarefree(self):  # type: () -> bool
        return all(g.is_squarefree() for g in self.generators)

    def polarize(self):  # type: () -> Polarization
        return polarize(self)

    def format(self, names=None):  # type: (Optional[Sequence[str]]) -> str
        return '(%s)' % ', '.join(g.format(names) for g in self.generators)

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'n': self.n, 'generators': [list(g) for g in self.generators]}

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'MonomialIdeal(%s, n=%d)' % (self.format(), self.n)


class MonomialPrime(object):
    """
    P_F = (xi | i in F) for a non-empty set F of 1-based variable indices
    """
    __slots__ = ('variables',)

    def __init__(self, variables):  # type: (Iterable[int]) -> None
        variables = frozenset(int(v) for v in variables)
        if not variables:
            raise ValueError('A monomial prime needs at least one variable')
        if min(variables) < 1:
            raise ValueError('Variable indices start from 1')
        self.variables = variables

    @classmethod
    def from_mask(cls, mask):  # type: (int) -> MonomialPrime
        return cls(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)

    @property
    def height(self):  # type: () -> int
        return len(self.variables)

    @property
    def mask(self):  # type: () -> int
        result = 0
        for v in self.variables:
            result |= 1 << (v - 1)
        return result

    def sort_key(self):  # type: () -> Tuple[int, Tuple[int, ...]]
        return self.height, tuple(sorted(self.variables))

    def ideal(self, n):  # type: (int) -> MonomialIdeal
        if max(self.variables) > n:
            raise AmbientMismatchError('Prime %s does not live in %d variables' % (self, n))
        return MonomialIdeal(n, [Monomial.variable(i, n) for i in self.variables])

    def power(self, k, n):  # type: (int, int) -> MonomialIdeal
        return self.ideal(n).power(k)

    def to_list(self):  # type: () -> List[int]
        return sorted(self.variables)

    def __eq__(self, other):
        if not isinstance(other, MonomialPrime):
            return NotImplemented
        return self.variables == other.variables

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):  # type: (MonomialPrime) -> bool
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.variables)

    def __str__(self):
        return '(%s)' % ', '.join(variable_name(v) for v in sorted(self.variables))

    def __repr__(self):
        return 'MonomialPrime%s' % self


def prime_ideal_from_ideal(ideal):  # type: (MonomialIdeal) -> Optional[MonomialPrime]
    """
    Returns the prime if the ideal is generated by variables, else None
    """
    if ideal.is_zero() or any(g.degree != 1 for g in ideal.generators):
        return None
    return MonomialPrime(ideal.support())


def prime_power_intersection(components, n):
    # type: (Iterable[Tuple[MonomialPrime, int]], int) -> MonomialIdeal
    """
    Expands an intersection of prime powers P1^e1 ∩ ... ∩ Pl^el into its minimal generators
    """
    result = None  # type: Optional[MonomialIdeal]
    for prime, exponent in components:
        component = prime.power(exponent, n)
        result = component if result is None else result.intersect(component)

    if result is None:
        raise ValueError('Empty intersection is the unit ideal')
    return result


# Spec level operations. They delegate to the value methods.

def minimize(generators, n):  # type: (Iterable[MonomialLike], int) -> MonomialIdeal
    return MonomialIdeal(n, generators)


def support(ideal):  # type: (MonomialIdeal) -> FrozenSet[int]
    return ideal.support()


def colon(ideal, monomial):  # type: (MonomialIdeal, MonomialLike) -> MonomialIdeal
    return ideal.colon(monomial)


def intersect(ideal, other, *others):  # type: (MonomialIdeal, MonomialIdeal, *MonomialIdeal) -> MonomialIdeal
    result = ideal.intersect(other)
    for item in others:
        result = result.intersect(item)
    return result


def product(ideal, other, *others):  # type: (MonomialIdeal, MonomialIdeal, *MonomialIdeal) -> MonomialIdeal
    result = ideal.product(other)
    for item in others:
        result = result.product(item)
    return result


def power(ideal, k):  # type: (MonomialIdeal, int) -> MonomialIdeal
    return ideal.power(k)


def radical(ideal):  # type: (MonomialIdeal) -> MonomialIdeal
    return ideal.radical()


def is_squarefree(ideal):  # type: (MonomialIdeal) -> bool
    return ideal.is_squarefree()


Polarization = namedtuple('Polarization', ['ideal', 'new_n', 'origins'])


def polarization_origins(ideal):  # type: (MonomialIdeal) -> List[Tuple[int, int]]
    """
    For every variable of the polarized ring, the pair (i, j): it is the j-th copy of xi.
    A variable which appears with maximal exponent e gets e copies, variables outside the support keep one.
    """
    origins = []
    for i in range(ideal.n):
        copies = max([g[i] for g in ideal.generators] + [1])
        origins.extend((i + 1, j) for j in range(1, copies + 1))
    return origins


def polarized_names(origins):  # type: (Sequence[Tuple[int, int]]) -> List[str]
    return ['x%d_%d' % (i, j) for i, j in origins]


def polarize(ideal):  # type: (MonomialIdeal) -> Polarization
    """
    Replaces x_i^a by the product of the first a copies of x_i.
    Projective dimension and regularity are preserved. Depth is not: depth(R/I) = n - pd, with pd read off the result.
    """
    origins = polarization_origins(ideal)
    offsets = {}
    for position, (i, j) in enumerate(origins):
        if j == 1:
            offsets[i] = position

    masks = []
    for g in ideal.generators:
        mask = 0
        for i, e in enumerate(g):
            for j in range(e):
                mask |= 1 << (offsets[i + 1] + j)
        masks.append(mask)

    new_n = len(origins)
    return Polarization(MonomialIdeal.from_masks(new_n, masks), new_n, origins)


def depolarize(polarized, origins, n):  # type: (MonomialIdeal, Sequence[Tuple[int, int]], int) -> MonomialIdeal
    """
    Substitutes every copy x{i}_{j} back by xi
    """
    if polarized.n != len(origins):
        raise AmbientMismatchError('Polarized ideal has %d variables, origins list %d' % (polarized.n, len(origins)))

    generators = []
    for g in polarized.generators:
        exponents = [0] * n
        for position, e in enumerate(g):
            exponents[origins[position][0] - 1] += e
        generators.append(Monomial(exponents))
    return MonomialIdeal(n, generators)
