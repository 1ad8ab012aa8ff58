"""
This file contains tests for the link criterion of almost Cohen-Macaulay complexes
"""
from unittest import TestCase

from monomial_acm import FieldSpec, SimplicialComplex, parse_complex, stanley_reisner_ideal, is_acm, \
    WrongDimensionError, PreconditionNotACMError, VoidComplexError
from monomial_acm.acm_simplicial import FaceRecord, is_acm_via_links, is_cm_via_reisner, link_homology_vanishes, \
    acm_implies_almost_pure, connected_iff_acm_in_dimension_two, links_of_acm_are_acm
from tests.utils import fixture_by_name


def complex_of(n, *facets):
    return SimplicialComplex.from_facets(n, facets)


class LinkCriterionTest(TestCase):
    def test_known_complex(self):
        data = fixture_by_name('known_examples', 'two_edges_and_a_point')
        complex_ = parse_complex(data['input'])
        acm, report = is_acm_via_links(complex_)
        self.assertEqual(data['expected']['acm'], acm)
        self.assertEqual(data['expected']['cm'], is_cm_via_reisner(complex_))
        self.assertListEqual([], report.failures())
        self.assertEqual(len(complex_.faces()), len(report.records))

    def test_isolated_point(self):
        acm, report = is_acm_via_links(complex_of(4, [1, 2, 3], [4]))
        self.assertFalse(acm)
        self.assertListEqual([FaceRecord([], True, 2, [0])], report.failures())
        self.assertDictEqual({'dim': 2, 'acm': False, 'failures': [
            {'face': [], 'in_pure_top': True, 'link_dim': 2, 'degrees': [0]}]}, report.to_json())

    def test_agrees_with_depth(self):
        for text in ('n=5; {1,2,3},{3,4,5}', 'n=5; {1,2,3},{4,5}', 'n=4; {1,2},{3,4}', 'n=5; {1,2},{4,5},{3}',
                     'n=4; {1,2,3},{2,3,4}', 'n=3; {1},{2},{3}'):
            complex_ = parse_complex(text)
            self.assertEqual(bool(is_acm(stanley_reisner_ideal(complex_))), is_acm_via_links(complex_)[0], text)

    def test_irrelevant_complex(self):
        self.assertTrue(is_acm_via_links(SimplicialComplex.irrelevant(3))[0])

    def test_void(self):
        with self.assertRaises(VoidComplexError):
            is_acm_via_links(SimplicialComplex.void(3))


class ReisnerTest(TestCase):
    def test_circle(self):
        self.assertTrue(is_cm_via_reisner(complex_of(3, [1, 2], [1, 3], [2, 3])))

    def test_two_triangles_at_a_vertex(self):
        complex_ = complex_of(5, [1, 2, 3], [3, 4, 5])
        self.assertFalse(is_cm_via_reisner(complex_))
        self.assertTrue(link_homology_vanishes(complex_, slack=1))

    def test_projective_plane(self):
        complex_ = parse_complex(fixture_by_name('known_examples', 'projective_plane')['input'])
        self.assertTrue(is_cm_via_reisner(complex_, FieldSpec(0)))
        self.assertFalse(is_cm_via_reisner(complex_, FieldSpec(2)))
        self.assertTrue(is_acm_via_links(complex_, FieldSpec(0))[0])
        self.assertTrue(is_acm_via_links(complex_, FieldSpec(2))[0])


class StructureTest(TestCase):
    def test_almost_pure(self):
        self.assertTrue(acm_implies_almost_pure(complex_of(4, [1, 2, 3], [3, 4])))
        self.assertTrue(acm_implies_almost_pure(complex_of(4, [1, 2, 3], [4])))

    def test_dimension_two(self):
        self.assertTrue(connected_iff_acm_in_dimension_two(complex_of(5, [1, 2, 3], [3, 4, 5])))
        self.assertTrue(connected_iff_acm_in_dimension_two(complex_of(5, [1, 2, 3], [4, 5])))
        self.assertTrue(is_acm_via_links(complex_of(5, [1, 2, 3], [3, 4, 5]))[0])
        self.assertFalse(is_acm_via_links(complex_of(5, [1, 2, 3], [4, 5]))[0])

        with self.assertRaises(WrongDimensionError):
            connected_iff_acm_in_dimension_two(complex_of(3, [1, 2], [2, 3]))

    def test_links(self):
        complex_ = parse_complex(fixture_by_name('known_examples', 'two_edges_and_a_point')['input'])
        self.assertTrue(links_of_acm_are_acm(complex_))
        self.assertTrue(links_of_acm_are_acm(complex_of(5, [1, 2, 3], [3, 4, 5])))

        with self.assertRaises(PreconditionNotACMError):
            links_of_acm_are_acm(complex_of(4, [1, 2, 3], [4]))
