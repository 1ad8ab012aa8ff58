"""
Almost Cohen-Macaulay complexes read off the reduced homology of links, without Betti numbers.

For Δ of dimension d - 1, Δ is aCM over k iff
    H̃_i(lk F) = 0 for i < dim lk F, when F is not in the pure top skeleton Δ(d - 1),
    H̃_i(lk F) = 0 for i < dim lk F - 1, when F is in Δ(d - 1).
A face is in Δ(d - 1) iff it lies in a facet of maximal dimension; this includes ∅.
"""
import logging
from collections import namedtuple
from typing import List, Optional, Tuple, Dict, Any

from .exceptions import WrongDimensionError, PreconditionNotACMError
from .homology import FieldSpec, reduced_homology
from .simplicial import SimplicialComplex, mask_vertices

__all__ = ['FaceRecord', 'LinkConditionReport', 'is_acm_via_links', 'is_cm_via_reisner', 'link_homology_vanishes',
           'acm_implies_almost_pure', 'connected_iff_acm_in_dimension_two', 'links_of_acm_are_acm']

logger = logging.getLogger(__name__)

FaceRecord = namedtuple('FaceRecord', ['face', 'in_pure_top', 'link_dim', 'offending'])


class LinkConditionReport(object):
    def __init__(self, dimension, records):  # type: (int, List[FaceRecord]) -> None
        self.dimension = dimension
        self.records = records

    @property
    def holds(self):  # type: () -> bool
        return not self.failures()

    def failures(self):  # type: () -> List[FaceRecord]
        return [r for r in self.records if r.offending]

    def to_json(self):  # type: () -> Dict[str, Any]
        return {
            'dim': self.dimension,
            'acm': self.holds,
            'failures': [{'face': r.face, 'in_pure_top': r.in_pure_top, 'link_dim': r.link_dim,
                          'degrees': r.offending} for r in self.failures()]
        }

    def __repr__(self):
        return 'LinkConditionReport(dim=%d, failures=%d)' % (self.dimension, len(self.failures()))


def is_acm_via_links(complex_, field=None):
    # type: (SimplicialComplex, Optional[FieldSpec]) -> Tuple[bool, LinkConditionReport]
    """
    :return: The verdict and the per-face records it was decided from, in face order
    :raises VoidComplexError: For the void complex
    """
    field = FieldSpec.coerce(field)
    dimension = complex_.dimension

    records = []
    for face in complex_.faces():
        link = complex_.link(face)
        link_dim = link.dimension
        in_top = complex_.in_pure_top_skeleton(face)
        bound = link_dim - 1 if in_top else link_dim
        profile = reduced_homology(link, field)
        offending = sorted(i for i, rank in profile.nonzero().items() if i < bound)
        records.append(FaceRecord(mask_vertices(face), in_top, link_dim, offending))

    report = LinkConditionReport(dimension, records)
    logger.debug('Link condition for %s over %s: %s', complex_, field, report)
    return report.holds, report


def link_homology_vanishes(complex_, field=None, slack=0):
    # type: (SimplicialComplex, Optional[FieldSpec], int) -> bool
    """
    True if H̃_i(lk F) = 0 for every face F and every i < dim lk F - slack
    """
    field = FieldSpec.coerce(field)
    for face in complex_.faces():
        link = complex_.link(face)
        if not reduced_homology(link, field).vanishes_below(link.dimension - slack):
            return False
    return True


def is_cm_via_reisner(complex_, field=None):  # type: (SimplicialComplex, Optional[FieldSpec]) -> bool
    """
    Reisner's criterion: H̃_i(lk F) = 0 for every face F and i < dim lk F
    """
    return link_homology_vanishes(complex_, field, slack=0)


def acm_implies_almost_pure(complex_, field=None):  # type: (SimplicialComplex, Optional[FieldSpec]) -> bool
    """
    An aCM complex is almost pure
    """
    acm, _ = is_acm_via_links(complex_, field)
    return not acm or complex_.is_almost_pure()


def connected_iff_acm_in_dimension_two(complex_, field=None):
    # type: (SimplicialComplex, Optional[FieldSpec]) -> bool
    """
    A 2-dimensional complex is connected iff it is aCM
    :raises WrongDimensionError: If dim Δ != 2
    """
    if complex_.dimension != 2:
        raise WrongDimensionError('Expected a 2-dimensional complex, got dimension %d' % complex_.dimension)
    acm, _ = is_acm_via_links(complex_, field)
    return complex_.is_connected() == acm


def links_of_acm_are_acm(complex_, field=None):  # type: (SimplicialComplex, Optional[FieldSpec]) -> bool
    """
    Every link of a non-empty face of an aCM complex is aCM, and CM when the face is outside Δ(d - 1)
    :raises PreconditionNotACMError: If the complex is not aCM
    """
    acm, _ = is_acm_via_links(complex_, field)
    if not acm:
        raise PreconditionNotACMError('%s is not aCM' % complex_)

    for face in complex_.faces():
        if not face:
            continue
        link = complex_.link(face)
        if not is_acm_via_links(link, field)[0]:
            return False
        if not complex_.in_pure_top_skeleton(face) and not is_cm_via_reisner(link, field):
            return False
    return True
