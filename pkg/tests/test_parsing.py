"""
This file contains tests for the text and JSON grammars
"""
from unittest import TestCase

from monomial_acm import parse_monomial, parse_ideal, parse_complex, parse_veronese, parse_transversal, parse_input, \
    ideal_from_json, complex_from_json, spec_from_json, infer_n, ParseError, UnitIdealError, Monomial, MonomialIdeal, \
    SimplicialComplex
from monomial_acm.polymatroidal import VeroneseSpec, TransversalSpec


class MonomialGrammarTest(TestCase):
    def test_monomial(self):
        self.assertEqual(Monomial((2, 1)), parse_monomial('x1^2*x2'))
        self.assertEqual(Monomial((0, 0, 1)), parse_monomial('x3'))
        self.assertEqual(Monomial((0, 0, 0)), parse_monomial('1', 3))

    def test_repeated_variable(self):
        self.assertEqual(Monomial((3,)), parse_monomial('x1 * x1^2'))

    def test_invalid(self):
        for text in ('', 'y1', 'x0', 'x1^', 'x1**2', '2*x1'):
            with self.assertRaises(ParseError):
                parse_monomial(text)

    def test_infer_n(self):
        self.assertEqual(7, infer_n('(x1*x7, x3)'))
        self.assertEqual(1, infer_n('()'))


class IdealGrammarTest(TestCase):
    def test_ideal(self):
        ideal = parse_ideal('(x1*x3, x2^2)')
        self.assertEqual(3, ideal.n)
        self.assertEqual('(x1*x3, x2^2)', str(ideal))

    def test_whitespace(self):
        self.assertEqual(parse_ideal('(x1*x3,x2^2)'), parse_ideal('  ( x1 * x3 ,\n x2^2 ) '))

    def test_explicit_n(self):
        ideal = parse_ideal('(x1*x2)', 4)
        self.assertEqual(4, ideal.n)
        self.assertFalse(ideal.is_full_supported())

    def test_zero(self):
        self.assertTrue(parse_ideal('()', 3).is_zero())

    def test_unit(self):
        with self.assertRaises(UnitIdealError):
            parse_ideal('(1, x1)')

    def test_invalid(self):
        with self.assertRaises(ParseError):
            parse_ideal('x1*x2')

        with self.assertRaises(ParseError):
            parse_ideal('(x1*y2)')

        with self.assertRaises(ParseError):
            parse_ideal('(x4)', 3)

    def test_text_round_trip(self):
        ideal = parse_ideal('(x1^3*x2, x2*x4, x3)')
        self.assertEqual(ideal, parse_ideal(str(ideal), ideal.n))


class ComplexGrammarTest(TestCase):
    def test_complex(self):
        complex_ = parse_complex('n=5; {1,2},{4,5},{3}')
        self.assertEqual(SimplicialComplex.from_facets(5, [[1, 2], [4, 5], [3]]), complex_)
        self.assertEqual('n=5; {1,2},{3},{4,5}', str(complex_))

    def test_inferred_n(self):
        self.assertEqual(3, parse_complex('{1,2},{2,3}').n)
        self.assertEqual(4, parse_complex('{1,2},{2,3}', 4).n)

    def test_empty_face(self):
        self.assertTrue(parse_complex('n=3; {}').is_irrelevant())

    def test_empty_face_needs_vertex_count(self):
        with self.assertRaises(ParseError) as context:
            parse_complex('{}')
        self.assertIn('n=', str(context.exception))

        with self.assertRaises(ParseError):
            parse_input(' { } ')

        self.assertEqual(SimplicialComplex.irrelevant(2), parse_complex('{}', 2))
        self.assertEqual(SimplicialComplex.irrelevant(2), parse_input('{}', 2))

    def test_invalid(self):
        with self.assertRaises(ParseError):
            parse_complex('n=2; {1,3}')

        with self.assertRaises(ParseError):
            parse_complex('n=2; (1,2)')

    def test_round_trip(self):
        complex_ = parse_complex('n=6; {1,2,3},{3,4},{5}')
        self.assertEqual(complex_, parse_complex(str(complex_)))


class SpecGrammarTest(TestCase):
    def test_veronese(self):
        self.assertEqual(VeroneseSpec(3, 2, (1, 2, 1)), parse_veronese('V(d=2; a=1,2,1; n=3)'))
        self.assertEqual(VeroneseSpec(3, 2, (1, 2, 1)), parse_veronese('V(d=2; a=1,2,1)'))

    def test_veronese_invalid(self):
        with self.assertRaises(ParseError):
            parse_veronese('V(d=2; a=3,1)')

        with self.assertRaises(ParseError):
            parse_veronese('V(d=2; a=1,1; n=3)')

        with self.assertRaises(ParseError):
            parse_veronese('V(a=1,1)')

    def test_transversal(self):
        spec = parse_transversal('T(n=4; {1,2},{3,4})')
        self.assertEqual(TransversalSpec(4, [[1, 2], [3, 4]]), spec)
        self.assertEqual(spec, parse_transversal(str(spec)))

    def test_transversal_invalid(self):
        with self.assertRaises(ParseError):
            parse_transversal('T(n=2; {1,3})')

        with self.assertRaises(ParseError):
            parse_transversal('T(n=2; {})')


class JsonGrammarTest(TestCase):
    def test_ideal(self):
        ideal = ideal_from_json({'n': 3, 'generators': [[1, 1, 0], [1, 0, 1]]})
        self.assertEqual('(x1*x2, x1*x3)', str(ideal))
        self.assertEqual(ideal, ideal_from_json(ideal.to_json()))

    def test_complex(self):
        complex_ = complex_from_json({'n': 3, 'facets': [[1, 2], [3]]})
        self.assertEqual(complex_, complex_from_json(complex_.to_json()))

    def test_spec(self):
        spec = spec_from_json({'type': 'veronese', 'n': 2, 'd': 2, 'a': [2, 1]})
        self.assertEqual(VeroneseSpec(2, 2, (2, 1)), spec)
        self.assertEqual(spec, spec_from_json(spec.to_json()))

        spec = TransversalSpec(3, [[1], [2, 3]])
        self.assertEqual(spec, spec_from_json(spec.to_json()))

    def test_invalid(self):
        with self.assertRaises(ParseError):
            ideal_from_json({'n': 3})

        with self.assertRaises(ParseError):
            spec_from_json({'type': 'unknown'})


class ParseInputTest(TestCase):
    def test_dispatch(self):
        self.assertIsInstance(parse_input('(x1*x2)'), MonomialIdeal)
        self.assertIsInstance(parse_input('{1,2},{3}'), SimplicialComplex)
        self.assertIsInstance(parse_input('n=3; {1,2}'), SimplicialComplex)
        self.assertIsInstance(parse_input('V(d=2; a=1,1)'), VeroneseSpec)
        self.assertIsInstance(parse_input('T(n=2; {1,2})'), TransversalSpec)
        self.assertIsInstance(parse_input('{"n": 2, "generators": [[1, 1]]}'), MonomialIdeal)
        self.assertIsInstance(parse_input('{"n": 2, "facets": [[1, 2]]}'), SimplicialComplex)
        self.assertIsInstance(parse_input('{"type": "transversal", "n": 2, "sets": [[1], [2]]}'), TransversalSpec)

    def test_n_is_passed(self):
        self.assertEqual(5, parse_input('(x1*x2)', 5).n)

    def test_invalid(self):
        for text in ('', '   ', '[1, 2]', '{"n": 2}', '{"n": 2', 'x1*x2'):
            with self.assertRaises(ParseError):
                parse_input(text)
