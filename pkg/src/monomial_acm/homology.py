"""
Reduced simplicial homology over a field and graded Betti numbers of monomial ideals.
All ranks are exact: integer fraction-free elimination in characteristic 0, GF(p) arithmetic otherwise.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple, Any, Iterable

from sympy import isprime
from sympy.polys.domains import GF

from .compatibility import integer_matrix, domain_rank, popcount
from .exceptions import NotSquarefreeError, VoidComplexError
from .monomials import MonomialIdeal, Monomial, polarize
from .settings import DEFAULT_CHARACTERISTIC, POLARIZE_MAX_VERTICES
from .simplicial import SimplicialComplex, complex_of_ideal, mask_vertices, submasks

__all__ = ['FieldSpec', 'HomologyProfile', 'BettiTable', 'rank_over_field', 'boundary_rows', 'reduced_homology',
           'hochster_betti', 'koszul_betti', 'betti_table']

logger = logging.getLogger(__name__)


class FieldSpec(object):
    """
    Coefficient field: rationals for characteristic 0, GF(p) for a prime p
    """
    __slots__ = ('characteristic',)

    def __init__(self, characteristic=0):  # type: (int) -> None
        characteristic = int(characteristic)
        if characteristic != 0 and not isprime(characteristic):
            raise ValueError('Field characteristic must be 0 or a prime, got %d' % characteristic)
        self.characteristic = characteristic

    @classmethod
    def default(cls):  # type: () -> FieldSpec
        return cls(DEFAULT_CHARACTERISTIC)

    @classmethod
    def coerce(cls, value):  # type: (Any) -> FieldSpec
        if value is None:
            return cls.default()
        return value if isinstance(value, FieldSpec) else cls(value)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.characteristic == other.characteristic

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.characteristic)

    def __str__(self):
        return 'GF(%d)' % self.characteristic if self.characteristic else 'QQ'

    def __repr__(self):
        return 'FieldSpec(%d)' % self.characteristic


def rank_over_field(rows, field=None, width=None):
    # type: (Sequence[Sequence[int]], Optional[FieldSpec], Optional[int]) -> int
    """
    Exact rank of an integer matrix read over the field
    :param rows: Matrix rows
    :param field: FieldSpec. Default field from settings if not given
    :param width: Column count, required when there are no rows
    :return: Rank
    """
    field = FieldSpec.coerce(field)
    width = len(rows[0]) if width is None and rows else (width or 0)
    if not rows or not width:
        return 0

    matrix = integer_matrix(rows, width)
    if field.characteristic:
        matrix = matrix.convert_to(GF(field.characteristic))
    return domain_rank(matrix)


def boundary_rows(lower, upper):  # type: (Sequence[int], Sequence[int]) -> List[List[int]]
    """
    Matrix of the boundary map from faces `upper` (size s) to faces `lower` (size s - 1).
    Vertices of a face are taken in increasing order, deleting the vertex at position j has sign (-1)^j.
    :param lower: Face masks indexing the rows
    :param upper: Face masks indexing the columns
    """
    index = {mask: row for row, mask in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for col, face in enumerate(upper):
        for position, v in enumerate(mask_vertices(face)):
            rows[index[face & ~(1 << (v - 1))]][col] = -1 if position % 2 else 1
    return rows


class HomologyProfile(object):
    """
    Ranks of H̃_i for -1 <= i <= dim Δ. Indices outside that range read as 0.
    """
    def __init__(self, ranks, field):  # type: (Dict[int, int], FieldSpec) -> None
        self.ranks = dict(ranks)
        self.field = field

    def __getitem__(self, i):  # type: (int) -> int
        return self.ranks.get(i, 0)

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def nonzero(self):  # type: () -> Dict[int, int]
        return {i: r for i, r in self.ranks.items() if r}

    def is_acyclic(self):  # type: () -> bool
        return not self.nonzero()

    def vanishes_below(self, bound):  # type: (int) -> bool
        """
        True if H̃_i = 0 for every i < bound
        """
        return all(r == 0 for i, r in self.ranks.items() if i < bound)

    def euler_characteristic(self):  # type: () -> int
        return sum((-1) ** i * r for i, r in self.ranks.items())

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'char': self.field.characteristic, 'ranks': [[i, self.ranks[i]] for i in sorted(self.ranks)]}

    def __repr__(self):
        return 'HomologyProfile(%s over %s)' % (sorted(self.nonzero().items()), self.field)


def reduced_homology(complex_, field=None):  # type: (SimplicialComplex, Optional[FieldSpec]) -> HomologyProfile
    """
    Reduced homology from the augmented chain complex
    :raises VoidComplexError: The void complex has no chain complex
    """
    field = FieldSpec.coerce(field)
    if complex_.is_void():
        raise VoidComplexError('Homology of the void complex is not defined')

    by_size = complex_.faces_by_size()
    dim = complex_.dimension

    # Rank of the boundary leaving faces of size s
    boundary_rank = {}
    for s in range(1, dim + 2):
        boundary_rank[s] = rank_over_field(boundary_rows(by_size[s - 1], by_size[s]), field, len(by_size[s]))

    ranks = {}
    for i in range(-1, dim + 1):
        size = i + 1
        ranks[i] = len(by_size[size]) - boundary_rank.get(size, 0) - boundary_rank.get(size + 1, 0)

    return HomologyProfile(ranks, field)


class BettiTable(object):
    """
    Graded Betti numbers β_{i,j} of R/I, β_{0,0} = 1 included.
    """
    def __init__(self, entries, n=None):  # type: (Dict[Tuple[int, int], int], Optional[int]) -> None
        self.entries = {key: value for key, value in entries.items() if value}
        self.n = n

    def __getitem__(self, key):  # type: (Tuple[int, int]) -> int
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    @property
    def projective_dimension(self):  # type: () -> int
        return max(i for i, _ in self.entries)

    @property
    def regularity(self):  # type: () -> int
        """
        reg(R/I) = max{j - i : β_{i,j} != 0}
        """
        return max(j - i for i, j in self.entries)

    @property
    def ideal_regularity(self):  # type: () -> Optional[int]
        """
        reg(I) = reg(R/I) + 1, None for the zero ideal
        """
        if self.is_trivial():
            return None
        return max(j - i for i, j in self.entries if i > 0) + 1

    @property
    def initial_degree(self):  # type: () -> Optional[int]
        degrees = [j for i, j in self.entries if i == 1]
        return min(degrees) if degrees else None

    def is_trivial(self):  # type: () -> bool
        """
        Table of R/0
        """
        return self.projective_dimension == 0

    def totals(self):  # type: () -> List[int]
        result = [0] * (self.projective_dimension + 1)
        for (i, _), value in self.entries.items():
            result[i] += value
        return result

    def generator_degrees(self):  # type: () -> List[int]
        """
        Degrees j with β_{1,j}, repeated by multiplicity
        """
        result = []
        for (i, j), value in sorted(self.entries.items()):
            if i == 1:
                result.extend([j] * value)
        return result

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'betti': [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    def as_text(self):  # type: () -> str
        """
        Grid with a row per j - i and a column per homological degree i
        """
        pd = self.projective_dimension
        columns = list(range(pd + 1))
        cells = {(j - i, i): str(v) for (i, j), v in self.entries.items()}
        width = max([len(c) for c in cells.values()] + [len(str(t)) for t in self.totals()] + [len(str(pd))])

        def line(label, values):
            return '%7s %s' % (label, ' '.join(v.rjust(width) for v in values))

        lines = [line('', [str(i) for i in columns]), line('total:', [str(t) for t in self.totals()])]
        for row in range(self.regularity + 1):
            lines.append(line('%d:' % row, [cells.get((row, i), '.') for i in columns]))
        return '\n'.join(lines)

    def __str__(self):
        return self.as_text()

    def __repr__(self):
        return 'BettiTable(%s)' % sorted(self.entries.items())


def _union_lattice(masks):  # type: (Iterable[int]) -> List[int]
    lattice = set()  # type: set
    for mask in masks:
        lattice |= {mask | m for m in lattice}
        lattice.add(mask)
    return sorted(lattice)


def hochster_betti(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> BettiTable
    """
    Hochster's formula: β_{i,j}(k[Δ]) is the sum over |W| = j of dim H̃_{j-i-1}(Δ_W).
    Only unions of generator supports contribute, besides W = ∅ which gives β_{0,0}.
    :param ideal: Squarefree monomial ideal
    :param field: FieldSpec
    :return: BettiTable of R/I
    :raises NotSquarefreeError: For ideals with exponents above 1
    """
    field = FieldSpec.coerce(field)
    if not ideal.is_squarefree():
        raise NotSquarefreeError('Hochster formula needs a squarefree ideal, got %s' % ideal)

    complex_ = complex_of_ideal(ideal)
    entries = defaultdict(int)  # type: Dict[Tuple[int, int], int]
    entries[(0, 0)] = 1

    # Every W is visited once, so this doubles as the memo of induced subcomplex homology
    homology_by_subset = {}  # type: Dict[int, HomologyProfile]
    for subset in _union_lattice(ideal.generator_masks()):
        homology_by_subset[subset] = reduced_homology(complex_.induced(subset), field)
        j = popcount(subset)
        for k, rank in homology_by_subset[subset].nonzero().items():
            entries[(j - k - 1, j)] += rank

    logger.debug('Hochster formula over %d subsets for %s', len(homology_by_subset), ideal)
    return BettiTable(entries, ideal.n)


def upper_koszul_complex(ideal, degree):  # type: (MonomialIdeal, Monomial) -> SimplicialComplex
    """
    K^b(I) = {τ ⊆ supp(b) : x^(b - τ) ∈ I}
    """
    faces = []
    for tau in submasks(degree.support_mask()):
        shifted = Monomial(e - ((tau >> i) & 1) for i, e in enumerate(degree))
        if ideal.contains(shifted):
            faces.append(tau)
    return SimplicialComplex(ideal.n, faces)


def koszul_betti(ideal, field=None):  # type: (MonomialIdeal, Optional[FieldSpec]) -> BettiTable
    """
    Betti numbers of R/I from the upper Koszul complexes: β_{i,b}(I) = dim H̃_{i-1}(K^b(I)).
    Works for any monomial ideal without leaving its n variables. b runs over the lcm lattice.
    """
    field = FieldSpec.coerce(field)
    entries = defaultdict(int)  # type: Dict[Tuple[int, int], int]
    entries[(0, 0)] = 1

    lattice = ideal.lcm_lattice()
    for degree in lattice:
        profile = reduced_homology(upper_koszul_complex(ideal, degree), field)
        for k, rank in profile.nonzero().items():
            # H̃_k(K^b) gives β_{k+1,b}(I) = β_{k+2,b}(R/I)
            entries[(k + 2, degree.degree)] += rank

    logger.debug('Upper Koszul complexes over %d lattice points for %s', len(lattice), ideal)
    return BettiTable(entries, ideal.n)


def betti_table(ideal, field=None, method='auto'):  # type: (MonomialIdeal, Optional[FieldSpec], str) -> BettiTable
    """
    Betti table of R/I for any monomial ideal
    :param method: 'hochster' (polarizing first if needed), 'koszul', or 'auto'.
        'auto' runs Hochster on squarefree ideals and on polarizations with at most POLARIZE_MAX_VERTICES
        variables, the upper Koszul route otherwise.
    """
    field = FieldSpec.coerce(field)
    assert method in {'auto', 'hochster', 'koszul'}, "Unknown Betti method '%s'" % method

    if method == 'koszul':
        return koszul_betti(ideal, field)

    if ideal.is_squarefree():
        return hochster_betti(ideal, field)

    polarization = polarize(ideal)
    if method == 'auto' and polarization.new_n > POLARIZE_MAX_VERTICES:
        logger.debug('Polarization of %s has %d variables, using upper Koszul complexes',
                     ideal, polarization.new_n)
        return koszul_betti(ideal, field)

    table = hochster_betti(polarization.ideal, field)
    return BettiTable(table.entries, ideal.n)


def face_chain_sizes(complex_):  # type: (SimplicialComplex) -> Dict[int, int]
    """
    Number of faces per dimension, the empty face at -1
    """
    return {size - 1: len(faces) for size, faces in complex_.faces_by_size().items()}
