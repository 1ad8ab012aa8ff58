"""
Simplicial complexes on the vertex set {1, ..., n}, stored by their facets.
Faces are bitmasks: bit i - 1 stands for vertex i.
"""
import logging
from itertools import combinations
from typing import Iterable, List, Dict, Union, Sequence, Any

from sympy.utilities.iterables import connected_components

from .compatibility import popcount
from .exceptions import VoidComplexError, FullSimplexError, FaceNotInComplexError, SkeletonRangeError, \
    NotSquarefreeError, UnitIdealError, AmbientMismatchError
from .monomials import MonomialIdeal
from .settings import MAX_VERTICES

__all__ = ['SimplicialComplex', 'mask_vertices', 'vertices_mask', 'minimal_vertex_covers', 'from_facets',
           'stanley_reisner_ideal', 'complex_of_ideal', 'alexander_dual_ideal', 'alexander_dual_complex', 'link',
           'skeleton', 'pure_skeleton', 'is_pure', 'is_almost_pure', 'is_connected']

logger = logging.getLogger(__name__)

FaceLike = Union[int, Iterable[int]]


def mask_vertices(mask):  # type: (int) -> List[int]
    """
    1-based vertices of a face mask in increasing order
    """
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i + 1)
        mask >>= 1
        i += 1
    return result


def vertices_mask(vertices):  # type: (Iterable[int]) -> int
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def submasks(mask):  # type: (int) -> Iterable[int]
    """
    Every subset of a mask, the mask itself first and 0 last
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            break
        sub = (sub - 1) & mask


def maximal_masks(masks):  # type: (Iterable[int]) -> List[int]
    kept = []  # type: List[int]
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if not any(mask & k == mask for k in kept):
            kept.append(mask)
    return kept


def minimal_masks(masks):  # type: (Iterable[int]) -> List[int]
    kept = []  # type: List[int]
    for mask in sorted(set(masks), key=popcount):
        if not any(mask & k == k for k in kept):
            kept.append(mask)
    return kept


def minimal_vertex_covers(edges):  # type: (Iterable[int]) -> List[int]
    """
    Minimal transversals of a hypergraph, by adding one edge at a time.
    :param edges: Hyperedges as vertex bitmasks
    :return: Minimal covers as bitmasks. [0] if there are no edges, [] if some edge is empty
    """
    covers = [0]
    for edge in minimal_masks(edges):
        if edge == 0:
            return []

        extended = []
        for cover in covers:
            if cover & edge:
                extended.append(cover)
            else:
                extended.extend(cover | (1 << i) for i in range(edge.bit_length()) if (edge >> i) & 1)
        covers = minimal_masks(extended)

    return covers


def _face_sort_key(mask):
    return mask_vertices(mask)


class SimplicialComplex(object):
    """
    A complex stored by its facets. The void complex has no facets,
    the irrelevant complex {∅} has the single empty facet.
    """
    __slots__ = ('n', 'facets', '_hash')

    def __init__(self, n, facet_masks):  # type: (int, Iterable[int]) -> None
        n = int(n)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError('Vertex count must be in [0, %d], got %d' % (MAX_VERTICES, n))

        full = (1 << n) - 1
        facet_masks = list(facet_masks)
        for mask in facet_masks:
            if mask < 0 or mask & ~full:
                raise AmbientMismatchError('Face %s uses vertices outside 1..%d' % (mask_vertices(mask), n))

        self.n = n
        self.facets = tuple(sorted(maximal_masks(facet_masks), key=_face_sort_key))
        self._hash = hash((n, self.facets))

    @classmethod
    def from_facets(cls, n, facets):  # type: (int, Iterable[Iterable[int]]) -> SimplicialComplex
        """
        :param n: Number of vertices
        :param facets: Faces given as vertex collections. Faces contained in others are absorbed.
        """
        return cls(n, [vertices_mask(f) for f in facets])

    @classmethod
    def void(cls, n):  # type: (int) -> SimplicialComplex
        return cls(n, [])

    @classmethod
    def irrelevant(cls, n):  # type: (int) -> SimplicialComplex
        return cls(n, [0])

    @classmethod
    def simplex(cls, n):  # type: (int) -> SimplicialComplex
        return cls(n, [(1 << n) - 1])

    @property
    def full_mask(self):  # type: () -> int
        return (1 << self.n) - 1

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return self._hash

    def _check_not_void(self):
        if not self.facets:
            raise VoidComplexError('The void complex has no faces')

    def is_void(self):  # type: () -> bool
        return not self.facets

    def is_irrelevant(self):  # type: () -> bool
        return self.facets == (0,)

    def is_simplex(self):  # type: () -> bool
        return self.facets == (self.full_mask,)

    @property
    def dimension(self):  # type: () -> int
        self._check_not_void()
        return max(popcount(f) for f in self.facets) - 1

    def facet_vertices(self):  # type: () -> List[List[int]]
        return [mask_vertices(f) for f in self.facets]

    def contains(self, face):  # type: (FaceLike) -> bool
        mask = face if isinstance(face, int) else vertices_mask(face)
        return any(mask & f == mask for f in self.facets)

    def __contains__(self, face):
        return self.contains(face)

    def faces(self):  # type: () -> List[int]
        """
        All faces as masks, the empty face included for a non-void complex
        """
        result = set()
        for f in self.facets:
            result.update(submasks(f))
        return sorted(result, key=lambda m: (popcount(m), _face_sort_key(m)))

    def faces_by_size(self):  # type: () -> Dict[int, List[int]]
        """
        Faces grouped by vertex count. Each group is in increasing lexicographic vertex order.
        """
        result = {}  # type: Dict[int, List[int]]
        for mask in self.faces():
            result.setdefault(popcount(mask), []).append(mask)
        return result

    def top_facets(self):  # type: () -> List[int]
        """
        Facets of maximal size. A face belongs to the pure top skeleton iff it lies in one of them.
        """
        size = self.dimension + 1
        return [f for f in self.facets if popcount(f) == size]

    def in_pure_top_skeleton(self, face):  # type: (FaceLike) -> bool
        mask = face if isinstance(face, int) else vertices_mask(face)
        return any(mask & f == mask for f in self.top_facets())

    def link(self, face):  # type: (FaceLike) -> SimplicialComplex
        """
        lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}, on the same vertex count
        :raises FaceNotInComplexError: If F is not a face
        """
        mask = face if isinstance(face, int) else vertices_mask(face)
        if not self.contains(mask):
            raise FaceNotInComplexError('%s is not a face of the complex' % mask_vertices(mask))
        return SimplicialComplex(self.n, [f & ~mask for f in self.facets if mask & f == mask])

    def induced(self, vertices):  # type: (FaceLike) -> SimplicialComplex
        """
        Δ_W: faces contained in W. Vertices are not renumbered.
        """
        mask = vertices if isinstance(vertices, int) else vertices_mask(vertices)
        self._check_not_void()
        return SimplicialComplex(self.n, [f & mask for f in self.facets])

    def _check_skeleton_index(self, i):  # type: (int) -> None
        if not -1 <= i <= self.dimension:
            raise SkeletonRangeError('Skeleton index %d out of range [-1, %d]' % (i, self.dimension))

    def skeleton(self, i):  # type: (int) -> SimplicialComplex
        """
        Δ^(i): all faces with at most i + 1 vertices
        """
        self._check_skeleton_index(i)
        masks = []
        for f in self.facets:
            if popcount(f) <= i + 1:
                masks.append(f)
            else:
                masks.extend(vertices_mask(c) for c in combinations(mask_vertices(f), i + 1))
        return SimplicialComplex(self.n, masks)

    def pure_skeleton(self, i):  # type: (int) -> SimplicialComplex
        """
        Δ(i): the complex generated by the faces with exactly i + 1 vertices
        """
        self._check_skeleton_index(i)
        masks = []
        for f in self.facets:
            if popcount(f) >= i + 1:
                masks.extend(vertices_mask(c) for c in combinations(mask_vertices(f), i + 1))
        return SimplicialComplex(self.n, masks)

    def is_pure(self):  # type: () -> bool
        self._check_not_void()
        return len({popcount(f) for f in self.facets}) == 1

    def is_almost_pure(self):  # type: () -> bool
        self._check_not_void()
        sizes = [popcount(f) for f in self.facets]
        return max(sizes) - min(sizes) <= 1

    def is_connected(self):  # type: () -> bool
        """
        Connectivity of the facet intersection graph. A single facet, {∅} included, is connected.
        """
        self._check_not_void()
        count = len(self.facets)
        edges = [(i, j) for i, j in combinations(range(count), 2) if self.facets[i] & self.facets[j]]
        return len(connected_components((list(range(count)), edges))) == 1

    def relabel(self, permutation):  # type: (Sequence[int]) -> SimplicialComplex
        """
        :param permutation: Vertex i goes to permutation[i - 1]
        """
        if sorted(permutation) != list(range(1, self.n + 1)):
            raise ValueError('%s is not a permutation of 1..%d' % (list(permutation), self.n))
        return SimplicialComplex.from_facets(self.n, [[permutation[v - 1] for v in f]
                                                      for f in self.facet_vertices()])

    def minimal_nonfaces(self):  # type: () -> List[int]
        """
        Minimal vertex sets which are not faces: the transversals of the facet complements
        """
        self._check_not_void()
        return minimal_vertex_covers(self.full_mask & ~f for f in self.facets)

    def to_json(self):  # type: () -> Dict[str, Any]
        return {'n': self.n, 'facets': self.facet_vertices()}

    def format(self):  # type: () -> str
        return 'n=%d; %s' % (self.n, ','.join('{%s}' % ','.join(str(v) for v in f) for f in self.facet_vertices()))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'SimplicialComplex(%s)' % self.format()


def from_facets(n, facets):  # type: (int, Iterable[Iterable[int]]) -> SimplicialComplex
    return SimplicialComplex.from_facets(n, facets)


def stanley_reisner_ideal(complex_):  # type: (SimplicialComplex) -> MonomialIdeal
    """
    I_Δ, generated by the minimal non-faces
    :raises VoidComplexError: The void complex has no Stanley-Reisner ideal
    """
    return MonomialIdeal.from_masks(complex_.n, complex_.minimal_nonfaces())


def _check_squarefree(ideal):  # type: (MonomialIdeal) -> None
    if not ideal.is_squarefree():
        raise NotSquarefreeError('%s is not squarefree' % ideal)


def complex_of_ideal(ideal):  # type: (MonomialIdeal) -> SimplicialComplex
    """
    The complex Δ with I_Δ = I. Facets are the complements of the minimal primes.
    """
    _check_squarefree(ideal)
    full = (1 << ideal.n) - 1
    covers = minimal_vertex_covers(ideal.generator_masks())
    return SimplicialComplex(ideal.n, [full & ~c for c in covers])


def alexander_dual_ideal(ideal):  # type: (MonomialIdeal) -> MonomialIdeal
    """
    I∨, generated by the variable products of the minimal primes of I
    :raises UnitIdealError: For the zero ideal, whose dual is the unit ideal
    """
    _check_squarefree(ideal)
    if ideal.is_zero():
        raise UnitIdealError('The Alexander dual of the zero ideal is the unit ideal')
    return MonomialIdeal.from_masks(ideal.n, minimal_vertex_covers(ideal.generator_masks()))


def alexander_dual_complex(complex_):  # type: (SimplicialComplex) -> SimplicialComplex
    """
    Δ∨ = {V ∖ F : F ∉ Δ}. Facets are complements of the minimal non-faces.
    """
    if complex_.is_void():
        raise VoidComplexError('The void complex has no Alexander dual on the same convention')
    if complex_.is_simplex():
        raise FullSimplexError('The full simplex has no non-faces, its dual is void')
    full = complex_.full_mask
    return SimplicialComplex(complex_.n, [full & ~m for m in complex_.minimal_nonfaces()])


def link(complex_, face):  # type: (SimplicialComplex, FaceLike) -> SimplicialComplex
    return complex_.link(face)


def skeleton(complex_, i):  # type: (SimplicialComplex, int) -> SimplicialComplex
    return complex_.skeleton(i)


def pure_skeleton(complex_, i):  # type: (SimplicialComplex, int) -> SimplicialComplex
    return complex_.pure_skeleton(i)


def is_pure(complex_):  # type: (SimplicialComplex) -> bool
    return complex_.is_pure()


def is_almost_pure(complex_):  # type: (SimplicialComplex) -> bool
    return complex_.is_almost_pure()


def is_connected(complex_):  # type: (SimplicialComplex) -> bool
    return complex_.is_connected()
