"""
This file contains tests for Veronese type and transversal polymatroidal ideals and their classifiers
"""
from unittest import TestCase

from monomial_acm import MonomialIdeal, MonomialPrime, parse_ideal, ass_brute_force, analyze, \
    prime_power_intersection, TheoremOutOfScopeError, ZeroIdealError, NotFullSupportedError, NotPolymatroidalError
from monomial_acm.polymatroidal import VeroneseSpec, TransversalSpec, AcmClassification, is_polymatroidal, \
    is_matroidal, veronese_generate, veronese_recognize, veronese_ass, veronese_depth, veronese_is_acm, \
    veronese_is_cm, transversal_graph, transversal_components, transversal_ass, transversal_depth, transversal_dim, \
    transversal_power_decomposition, match_acm_normal_form, classify_acm_transversal, classify_cm_polymatroidal, \
    PRINCIPAL, TWO_COMPLEMENTS, SQUARE_CASE, VERONESE_TYPE_CASE, DISJOINT_PAIR_PRODUCT, NOT_ACM, VERONESE, \
    SQUAREFREE_VERONESE, NOT_CM


class VeroneseSpecTest(TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            VeroneseSpec(2, 2, (3, 1))

        with self.assertRaises(ValueError):
            VeroneseSpec(3, 2, (1, 1))

        with self.assertRaises(ValueError):
            VeroneseSpec(2, 0, (0, 0))

    def test_format(self):
        spec = VeroneseSpec(3, 2, (1, 2, 1))
        self.assertEqual('V(d=2; a=1,2,1; n=3)', str(spec))
        self.assertDictEqual({'type': 'veronese', 'n': 3, 'd': 2, 'a': [1, 2, 1]}, spec.to_json())

    def test_scope(self):
        self.assertTrue(VeroneseSpec(2, 2, (1, 1)).in_closed_form_scope())
        self.assertFalse(VeroneseSpec(2, 1, (1, 1)).in_closed_form_scope())
        self.assertFalse(VeroneseSpec(2, 2, (2, 0)).in_closed_form_scope())


class VeroneseTest(TestCase):
    def test_generate(self):
        self.assertEqual('(x1*x2, x1*x3, x2^2, x2*x3)', str(veronese_generate(VeroneseSpec(3, 2, (1, 2, 1)))))
        self.assertEqual(MonomialIdeal.maximal(2) ** 3, VeroneseSpec(2, 3, (3, 3)).ideal())

        with self.assertRaises(ZeroIdealError):
            veronese_generate(VeroneseSpec(2, 3, (1, 1)))

    def test_recognize(self):
        spec = VeroneseSpec(3, 2, (1, 2, 1))
        self.assertEqual(spec, veronese_recognize(spec.ideal()))
        self.assertIsNone(veronese_recognize(parse_ideal('(x1*x2, x1*x3)')))
        self.assertIsNone(veronese_recognize(parse_ideal('(x1, x2*x3)')))

    def test_ass(self):
        spec = VeroneseSpec(3, 2, (1, 2, 1))
        expected = [MonomialPrime([1, 2]), MonomialPrime([2, 3]), MonomialPrime([1, 2, 3])]
        self.assertListEqual(expected, veronese_ass(spec))
        self.assertListEqual(ass_brute_force(spec.ideal()), veronese_ass(spec))

    def test_ass_out_of_scope(self):
        with self.assertRaises(TheoremOutOfScopeError):
            veronese_ass(VeroneseSpec(3, 1, (1, 1, 1)))

    def test_depth(self):
        self.assertEqual(0, veronese_depth(VeroneseSpec(3, 2, (1, 2, 1))))
        self.assertEqual(1, veronese_depth(VeroneseSpec(3, 2, (1, 1, 1))))
        self.assertEqual(1, veronese_depth(VeroneseSpec(3, 2, (2, 2, 0))))

    def test_depth_matches_pipeline(self):
        for spec in (VeroneseSpec(3, 2, (1, 2, 1)), VeroneseSpec(3, 3, (2, 2, 1)), VeroneseSpec(4, 2, (1, 1, 1, 1)),
                     VeroneseSpec(3, 2, (2, 2, 0))):
            self.assertEqual(analyze(spec.ideal()).depth, veronese_depth(spec), str(spec))

    def test_acm_and_cm(self):
        spec = VeroneseSpec(3, 2, (1, 2, 1))
        self.assertTrue(veronese_is_acm(spec))
        self.assertFalse(veronese_is_cm(spec))

        squarefree = VeroneseSpec(3, 2, (1, 1, 1))
        self.assertTrue(veronese_is_cm(squarefree))

    def test_out_of_scope_uses_pipeline(self):
        spec = VeroneseSpec(3, 1, (1, 1, 1))
        self.assertTrue(veronese_is_acm(spec))
        self.assertTrue(veronese_is_cm(spec))


class ExchangePropertyTest(TestCase):
    def test_polymatroidal(self):
        self.assertTrue(is_polymatroidal(parse_ideal('(x1*x3, x1*x4, x2*x3, x2*x4)')))
        self.assertTrue(is_polymatroidal(VeroneseSpec(3, 3, (2, 2, 1)).ideal()))
        self.assertFalse(is_polymatroidal(parse_ideal('(x1*x2, x3*x4)')))
        self.assertFalse(is_polymatroidal(parse_ideal('(x1, x2*x3)')))
        self.assertFalse(is_polymatroidal(MonomialIdeal.zero(2)))

    def test_matroidal(self):
        self.assertTrue(is_matroidal(parse_ideal('(x1*x2, x1*x3, x2*x3)')))
        self.assertFalse(is_matroidal(parse_ideal('(x1^2, x1*x2, x2^2)')))


class TransversalTest(TestCase):
    def test_spec(self):
        spec = TransversalSpec(4, [[1, 2], [3, 4]])
        self.assertEqual(2, spec.d)
        self.assertEqual('T(n=4; {1,2},{3,4})', str(spec))
        self.assertEqual(parse_ideal('(x1*x3, x1*x4, x2*x3, x2*x4)'), spec.ideal())
        self.assertTrue(spec.is_full_supported())
        self.assertFalse(TransversalSpec(4, [[1, 2]]).is_full_supported())

        with self.assertRaises(ValueError):
            TransversalSpec(2, [[1, 3]])

        with self.assertRaises(ValueError):
            TransversalSpec(2, [])

    def test_graph(self):
        spec = TransversalSpec(4, [[1, 2], [2, 3], [4]])
        graph = transversal_graph(spec)
        self.assertListEqual([1, 2, 3], graph.vertices)
        self.assertListEqual([(1, 2)], graph.edges)
        self.assertEqual(2, transversal_components(spec))

    def test_closed_forms(self):
        spec = TransversalSpec(4, [[1, 2], [3, 4]])
        self.assertEqual(1, transversal_depth(spec))
        self.assertEqual(2, transversal_dim(spec))
        self.assertListEqual([MonomialPrime([1, 2]), MonomialPrime([3, 4])], transversal_ass(spec))

    def test_ass_with_maximal_ideal(self):
        spec = TransversalSpec(3, [[1, 2], [2, 3]])
        self.assertListEqual(ass_brute_force(spec.ideal()), transversal_ass(spec))
        self.assertEqual(0, transversal_depth(spec))

    def test_closed_forms_match_pipeline(self):
        for sets in ([[1], [1, 2]], [[1, 2], [2, 3], [3, 4]], [[1, 2, 3], [1]], [[1, 2], [1, 2]], [[1], [3]]):
            spec = TransversalSpec(4, sets)
            report = analyze(spec.ideal())
            self.assertEqual(report.depth, transversal_depth(spec), str(spec))
            self.assertEqual(report.dim, transversal_dim(spec), str(spec))
            self.assertListEqual(report.ass, transversal_ass(spec), str(spec))

    def test_power_decomposition(self):
        spec = TransversalSpec(3, [[1, 2], [2, 3]])
        decomposition = transversal_power_decomposition(spec, 1)
        self.assertListEqual([(MonomialPrime([1, 2]), 1), (MonomialPrime([2, 3]), 1), (MonomialPrime([1, 2, 3]), 2)],
                             decomposition)
        for k in (1, 2, 3):
            self.assertEqual(spec.ideal() ** k,
                             prime_power_intersection(transversal_power_decomposition(spec, k), 3))

        with self.assertRaises(ValueError):
            transversal_power_decomposition(spec, 0)


class AcmClassifierTest(TestCase):
    def classify(self, n, *sets):
        return classify_acm_transversal(TransversalSpec(n, sets))

    def test_principal(self):
        self.assertEqual(AcmClassification(PRINCIPAL), self.classify(1, [1]))
        self.assertEqual(PRINCIPAL, self.classify(2, [1], [2]).verdict)

    def test_single_factor(self):
        self.assertEqual(AcmClassification(PRINCIPAL, {'prime': [1, 2, 3]}), self.classify(3, [1, 2, 3]))
        self.assertEqual(AcmClassification(PRINCIPAL, {'prime': [1, 2]}), self.classify(2, [2, 1]))
        for n in range(1, 5):
            result = self.classify(n, range(1, n + 1))
            self.assertEqual(PRINCIPAL, result.verdict, n)
            self.assertTrue(result.literal)

    def test_two_complements(self):
        self.assertEqual(AcmClassification(TWO_COMPLEMENTS, {'i': 1, 'j': 2}), self.classify(3, [3], [1, 2]))
        self.assertEqual(AcmClassification(NOT_ACM), self.classify(3, [1, 2, 3], [3]))

    def test_square_case(self):
        result = self.classify(3, [1], [2], [1, 3])
        self.assertEqual(AcmClassification(SQUARE_CASE, {'i': 1, 'j': 3}), result)
        self.assertTrue(result.literal)

    def test_veronese_type_case(self):
        self.assertEqual(AcmClassification(VERONESE_TYPE_CASE, {'r': 2, 'd': 2}), self.classify(3, [1, 2], [2, 3]))
        self.assertEqual(AcmClassification(VERONESE_TYPE_CASE, {'r': 0, 'd': 2}),
                         self.classify(3, [1, 2, 3], [1, 2, 3]))

    def test_disjoint_pair_product(self):
        self.assertEqual(AcmClassification(DISJOINT_PAIR_PRODUCT, {'F1': [1, 2], 'F2': [3, 4]}),
                         self.classify(4, [3, 4], [1, 2]))

    def test_repeated_factor_is_family_member(self):
        result = self.classify(4, [1, 2], [3, 4], [3, 4])
        self.assertEqual(DISJOINT_PAIR_PRODUCT, result.verdict)
        self.assertFalse(result.literal)
        self.assertIn('family member', str(result))

    def test_not_acm(self):
        result = self.classify(7, [1, 2, 3], [4, 5, 6, 7])
        self.assertEqual(AcmClassification(NOT_ACM), result)
        self.assertFalse(result.is_acm)

    def test_not_full_supported(self):
        with self.assertRaises(NotFullSupportedError):
            self.classify(3, [1, 2])

    def test_verdict_matches_pipeline(self):
        for n, sets in ((3, [[1], [2, 3]]), (3, [[1, 2], [1, 3]]), (4, [[1, 2], [2, 3], [3, 4]]),
                        (4, [[1], [2], [3, 4]]), (4, [[1, 2, 3], [2, 3, 4]]), (3, [[1, 2], [3], [3]])):
            spec = TransversalSpec(n, sets)
            self.assertEqual(analyze(spec.ideal()).acm, classify_acm_transversal(spec).is_acm, str(spec))

    def test_json(self):
        self.assertDictEqual({'verdict': SQUARE_CASE, 'parameters': {'i': 1, 'j': 3}, 'literal': True,
                              'needs_review': False}, self.classify(3, [1], [2], [1, 3]).to_json())


class NormalFormTest(TestCase):
    def test_shapes(self):
        self.assertEqual(AcmClassification(PRINCIPAL), match_acm_normal_form(parse_ideal('(x1^2*x2)')))
        self.assertEqual(AcmClassification(PRINCIPAL, {'prime': [1, 3]}),
                         match_acm_normal_form(parse_ideal('(x1, x3)', 3)))
        self.assertEqual(AcmClassification(TWO_COMPLEMENTS, {'i': 1, 'j': 3}),
                         match_acm_normal_form(parse_ideal('(x2*x3, x1*x2)')))
        self.assertEqual(AcmClassification(SQUARE_CASE, {'i': 1, 'j': 3}),
                         match_acm_normal_form(parse_ideal('(x1^2*x2, x1*x2*x3)')))
        self.assertEqual(AcmClassification(DISJOINT_PAIR_PRODUCT, {'F1': [1, 3], 'F2': [2, 4]}),
                         match_acm_normal_form(parse_ideal('(x1*x2, x1*x4, x2*x3, x3*x4)')))
        self.assertEqual(VERONESE_TYPE_CASE, match_acm_normal_form(MonomialIdeal.maximal(3) ** 2).verdict)

    def test_no_shape(self):
        self.assertIsNone(match_acm_normal_form(TransversalSpec(7, [[1, 2, 3], [4, 5, 6, 7]]).ideal()))
        self.assertIsNone(match_acm_normal_form(TransversalSpec(4, [[1, 2], [3, 4], [3, 4]]).ideal()))

    def test_literal_labels_agree_with_matcher(self):
        for spec in (TransversalSpec(3, [[3], [1, 2]]), TransversalSpec(3, [[1], [2], [1, 3]]),
                     TransversalSpec(4, [[3, 4], [1, 2]]), TransversalSpec(3, [[1, 2], [2, 3]]),
                     TransversalSpec(2, [[1, 2]])):
            classification = classify_acm_transversal(spec)
            self.assertTrue(classification.literal, str(spec))
            self.assertEqual(classification, match_acm_normal_form(spec.ideal()), str(spec))
            self.assertTrue(analyze(spec.ideal()).acm, str(spec))


class CmClassifierTest(TestCase):
    def test_classes(self):
        self.assertEqual(PRINCIPAL, classify_cm_polymatroidal(parse_ideal('(x1*x2)')))
        self.assertEqual(VERONESE, classify_cm_polymatroidal(MonomialIdeal.maximal(3) ** 2))
        self.assertEqual(SQUAREFREE_VERONESE, classify_cm_polymatroidal(parse_ideal('(x1*x2, x1*x3, x2*x3)')))
        self.assertEqual(NOT_CM, classify_cm_polymatroidal(parse_ideal('(x1*x3, x1*x4, x2*x3, x2*x4)')))

    def test_free_variables(self):
        self.assertEqual(VERONESE, classify_cm_polymatroidal(parse_ideal('(x1^2, x1*x2, x2^2)', 3)))

    def test_not_polymatroidal(self):
        with self.assertRaises(NotPolymatroidalError):
            classify_cm_polymatroidal(parse_ideal('(x1*x2, x3*x4)'))

    def test_matches_pipeline(self):
        for ideal in (parse_ideal('(x1*x2, x1*x3, x2*x3)'), VeroneseSpec(3, 2, (1, 2, 1)).ideal(),
                      TransversalSpec(3, [[1], [2, 3]]).ideal(), MonomialIdeal.maximal(2) ** 3):
            self.assertEqual(analyze(ideal).cm, classify_cm_polymatroidal(ideal) != NOT_CM, str(ideal))
