"""
This file contains tests for the command line front end
"""
import json
from io import StringIO
from unittest import TestCase

from monomial_acm.cli import run, build_parser


class CliTestCase(TestCase):
    def run_cli(self, *argv):
        out = StringIO()
        code = run(list(argv), out)
        return code, out.getvalue()


class InputVerbsTest(CliTestCase):
    def test_acm(self):
        self.assertEqual((0, 'aCM: true (dim 2, depth 1)\n'), self.run_cli('acm', '(x1*x2, x1*x3)'))

    def test_cm(self):
        self.assertEqual((0, 'CM: false (dim 2, depth 1)\n'), self.run_cli('cm', '(x1*x2, x1*x3)'))

    def test_acm_of_complex_reports_links(self):
        code, text = self.run_cli('acm', 'n=4; {1,2,3},{4}', '--json')
        self.assertEqual(0, code)
        data = json.loads(text)
        self.assertFalse(data['acm'])
        self.assertListEqual([{'face': [], 'in_pure_top': True, 'link_dim': 2, 'degrees': [0]}],
                             data['links']['failures'])

    def test_analyze(self):
        code, text = self.run_cli('analyze', '(x1*x2, x2*x3, x3*x4, x4*x1)')
        self.assertEqual(0, code)
        self.assertIn('pd: 3', text)
        self.assertIn('bight: 2', text)
        self.assertIn('ass: (x1, x3), (x2, x4)', text)

    def test_analyze_json(self):
        code, text = self.run_cli('analyze', '(x1*x2, x3)', '--char', '2', '--json')
        self.assertEqual(0, code)
        self.assertEqual(2, json.loads(text)['pd'])

    def test_explicit_n(self):
        code, text = self.run_cli('analyze', '(x1*x2)', '--n', '3', '--json')
        self.assertEqual(0, code)
        self.assertEqual(2, json.loads(text)['dim'])

    def test_dual(self):
        self.assertEqual((0, '(x1, x2, x3)\n'), self.run_cli('dual', '(x1*x2*x3)'))
        self.assertEqual((0, 'n=3; {}\n'), self.run_cli('dual', 'n=3; {1,2},{1,3},{2,3}'))

    def test_homology(self):
        code, text = self.run_cli('homology', 'n=3; {1,2},{1,3},{2,3}')
        self.assertEqual(0, code)
        self.assertListEqual(['over QQ', 'H~_-1: 0', 'H~_0: 0', 'H~_1: 1'], text.strip().split('\n'))

    def test_betti(self):
        self.assertEqual((0, '        0 1 2\n total: 1 2 1\n     0: 1 2 1\n'), self.run_cli('betti', '(x1, x2)'))

    def test_classify(self):
        code, text = self.run_cli('classify', 'T(n=4; {1,2},{3,4})')
        self.assertEqual(0, code)
        self.assertListEqual(['polymatroidal: true', 'aCM: DisjointPairProduct(F1=[1, 2], F2=[3, 4])', 'CM: NotCM'],
                             text.strip().split('\n'))

    def test_classify_ideal(self):
        code, text = self.run_cli('classify', '(x1*x2, x1*x3, x2^2, x2*x3)')
        self.assertEqual(0, code)
        self.assertIn('veronese: V(d=2; a=1,2,1; n=3)', text)
        self.assertIn('aCM: true', text)

    def test_veronese(self):
        code, text = self.run_cli('veronese', 'V(d=2; a=1,2,1)', '--json')
        self.assertEqual(0, code)
        data = json.loads(text)
        self.assertListEqual([[1, 2], [2, 3], [1, 2, 3]], data['ass'])
        self.assertEqual(0, data['depth'])
        self.assertTrue(data['acm'])
        self.assertFalse(data['cm'])

    def test_transversal(self):
        code, text = self.run_cli('transversal', 'T(n=3; {1,2},{2,3})', '--power', '2', '--json')
        self.assertEqual(0, code)
        self.assertListEqual([[[1, 2], 2], [[2, 3], 2], [[1, 2, 3], 4]], json.loads(text)['decomposition'])

    def test_wrong_spec(self):
        self.assertEqual(2, self.run_cli('veronese', '(x1*x2)')[0])
        self.assertEqual(2, self.run_cli('transversal', 'V(d=2; a=1,1)')[0])


class ExitCodesTest(CliTestCase):
    def test_parse_error(self):
        self.assertEqual(2, self.run_cli('analyze', 'x1*x2')[0])
        self.assertEqual(2, self.run_cli('homology', '{}')[0])

    def test_math_error(self):
        self.assertEqual(1, self.run_cli('analyze', '(1)')[0])
        self.assertEqual(1, self.run_cli('dual', '()')[0])
        self.assertEqual(1, self.run_cli('classify', 'T(n=3; {1,2})')[0])

    def test_usage_errors(self):
        with self.assertRaises(SystemExit):
            self.run_cli('validate')

        with self.assertRaises(SystemExit):
            self.run_cli('acm', '(x1)', '--char', '4')

        with self.assertRaises(SystemExit):
            self.run_cli('unknown', '(x1)')


class HarnessVerbsTest(CliTestCase):
    def test_validate(self):
        code, text = self.run_cli('validate', '--family', 'veronese', '--n-max', '2', '--d-max', '2')
        self.assertEqual(0, code)
        self.assertTrue(text.startswith('veronese: 5 instances checked\n'))
        self.assertNotIn('FAILED', text)

    def test_validate_json(self):
        code, text = self.run_cli('validate', '--family', 'transversal', '--n-max', '2', '--d-max', '2', '--json')
        self.assertEqual(0, code)
        data = json.loads(text)
        self.assertListEqual([], data['failures'])
        self.assertTrue(all(row['failed'] == 0 for row in data['checks']))

    def test_enumerate(self):
        code, text = self.run_cli('enumerate', '--family', 'veronese', '--n-max', '2', '--d-max', '2')
        self.assertEqual(0, code)
        lines = text.strip().split('\n')
        self.assertEqual(6, len(lines))
        self.assertEqual('spec,dim,depth,hte,bight,cm,acm,classification', lines[0])

    def test_parser_defaults(self):
        args = build_parser().parse_args(['validate', '--family', 'complex'])
        self.assertEqual(3, args.n_max)
        self.assertIsNone(args.char)
        self.assertFalse(args.up_to_symmetry)
