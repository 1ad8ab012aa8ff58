"""
Command line front end.

    monomial-acm acm "(x1*x2, x1*x3)" --n 3
    monomial-acm homology "n=6; {1,2,3},{1,3,4}" --char 2
    monomial-acm validate --family transversal --n-max 5 --d-max 3 --jobs 4
    monomial-acm enumerate --family veronese --n-max 3 --d-max 3 > veronese.csv

Exit codes: 0 on success, 1 on a mathematical error, 2 on a parse error, 3 on a validation mismatch.
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, IO, List, Optional, Union

from . import harness
from .acm_simplicial import is_acm_via_links
from .exceptions import MathError, ParseError, ValidationMismatch
from .homology import FieldSpec, betti_table, reduced_homology
from .invariants import analyze, depth_dim_pd, ass_brute_force
from .monomials import MonomialIdeal
from .parsing import parse_input
from .polymatroidal import VeroneseSpec, TransversalSpec, is_polymatroidal, veronese_ass, veronese_depth, \
    veronese_is_acm, veronese_is_cm, veronese_recognize, transversal_ass, transversal_components, transversal_depth, \
    transversal_dim, transversal_power_decomposition, classify_acm_transversal, classify_cm_polymatroidal
from .settings import LOG_LEVEL
from .simplicial import SimplicialComplex, stanley_reisner_ideal, complex_of_ideal, alexander_dual_ideal, \
    alexander_dual_complex

logger = logging.getLogger(__name__)

INPUT_VERBS = ('analyze', 'acm', 'cm', 'dual', 'homology', 'betti', 'classify', 'veronese', 'transversal')
HARNESS_VERBS = ('validate', 'enumerate')

Parsed = Union[MonomialIdeal, SimplicialComplex, VeroneseSpec, TransversalSpec]


def _characteristic(value):  # type: (str) -> int
    try:
        return FieldSpec(int(value)).characteristic
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(value):  # type: (str) -> int
    result = int(value)
    if result < 1:
        raise argparse.ArgumentTypeError('Expected a positive integer, got %s' % value)
    return result


def build_parser():  # type: () -> argparse.ArgumentParser
    parser = argparse.ArgumentParser(prog='monomial-acm', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('verb', choices=INPUT_VERBS + HARNESS_VERBS)
    parser.add_argument('input', nargs='?', default=None,
                        help='Ideal, complex, V(...) or T(...) spec, or a JSON object. '
                             'Read from --file or stdin if omitted')
    parser.add_argument('-f', '--file', default=None, help='Read the input from this file')
    parser.add_argument('--n', type=_positive, default=None, help='Number of variables / vertices')
    parser.add_argument('--char', type=_characteristic, default=None,
                        help='Field characteristic: 0 or a prime')
    parser.add_argument('--json', action='store_true', help='Print JSON instead of text')
    parser.add_argument('--power', type=_positive, default=1, help='Power k for the transversal decomposition')

    group = parser.add_argument_group('validate / enumerate')
    group.add_argument('--family', choices=harness.FAMILIES, default=None)
    group.add_argument('--n-max', type=_positive, default=3)
    group.add_argument('--d-max', type=_positive, default=3)
    group.add_argument('--jobs', type=_positive, default=None, help='Worker processes')
    group.add_argument('--seed', type=int, default=0, help='Seed for random samples')
    group.add_argument('--samples', type=int, default=0, help='Random instances added to the exhaustive ones')
    group.add_argument('--sample-n-max', type=_positive, default=7, help='Largest ring for random instances')
    group.add_argument('--up-to-symmetry', action='store_true',
                       help='Keep one instance per orbit of variable permutations')

    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def _configure_logging(verbosity):  # type: (int) -> None
    level = {0: LOG_LEVEL, 1: 'INFO'}.get(verbosity, 'DEBUG')
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')


def _read_input(args):  # type: (argparse.Namespace) -> str
    if args.file:
        with open(args.file) as f:
            return f.read()
    if args.input is not None:
        return args.input
    return sys.stdin.read()


def _text(value):  # type: (Any) -> str
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def _ideal_of(item):  # type: (Parsed) -> MonomialIdeal
    if isinstance(item, MonomialIdeal):
        return item
    if isinstance(item, SimplicialComplex):
        return stanley_reisner_ideal(item)
    return item.ideal()


def _complex_of(item):  # type: (Parsed) -> SimplicialComplex
    if isinstance(item, SimplicialComplex):
        return item
    if isinstance(item, MonomialIdeal):
        return complex_of_ideal(item)
    raise ParseError('Expected a complex or a squarefree ideal, got %s' % item)


def _warn_support(ideal):  # type: (MonomialIdeal) -> None
    if not ideal.is_zero() and not ideal.is_full_supported():
        logger.warning('%s does not involve every variable of x1..x%d, pass --n if that is not intended',
                       ideal, ideal.n)


class Command(object):
    """
    One parsed invocation. Each verb has a method of the same name returning a JSON-able dict and its text form.
    """
    def __init__(self, args, field):  # type: (argparse.Namespace, FieldSpec) -> None
        self.args = args
        self.field = field

    def analyze(self, item):
        ideal = _ideal_of(item)
        _warn_support(ideal)
        report = analyze(ideal, self.field)
        return report.to_json(), report.as_text()

    def _predicate(self, item, name):
        ideal = _ideal_of(item)
        _warn_support(ideal)
        report = depth_dim_pd(ideal, self.field)
        holds = report.acm if name == 'aCM' else report.cm
        data = {name.lower(): holds, 'dim': report.dim, 'depth': report.depth}
        if isinstance(item, SimplicialComplex) and name == 'aCM':
            _, links = is_acm_via_links(item, self.field)
            data['links'] = links.to_json()
        return data, '%s: %s (dim %d, depth %d)' % (name, _text(holds), report.dim, report.depth)

    def acm(self, item):
        return self._predicate(item, 'aCM')

    def cm(self, item):
        return self._predicate(item, 'CM')

    def dual(self, item):
        if isinstance(item, SimplicialComplex):
            dual = alexander_dual_complex(item)
        else:
            dual = alexander_dual_ideal(_ideal_of(item))
        return dual.to_json(), str(dual)

    def homology(self, item):
        profile = reduced_homology(_complex_of(item), self.field)
        lines = ['H~_%d: %d' % (i, profile[i]) for i in sorted(profile.ranks)]
        return profile.to_json(), '\n'.join(['over %s' % self.field] + lines)

    def betti(self, item):
        table = betti_table(_ideal_of(item), self.field)
        return table.to_json(), table.as_text()

    def classify(self, item):
        ideal = _ideal_of(item)
        data = {'polymatroidal': is_polymatroidal(ideal)}  # type: Dict[str, Any]
        if data['polymatroidal']:
            data['cm'] = classify_cm_polymatroidal(ideal)

        if isinstance(item, TransversalSpec):
            classification = classify_acm_transversal(item)
            data['acm'] = classification.to_json()
            acm_text = str(classification)
        else:
            spec = item if isinstance(item, VeroneseSpec) else veronese_recognize(ideal)
            data['veronese'] = str(spec) if spec is not None else None
            data['acm'] = veronese_is_acm(spec, self.field) if spec is not None else bool(depth_dim_pd(
                ideal, self.field).acm)
            acm_text = _text(data['acm'])

        lines = ['polymatroidal: %s' % _text(data['polymatroidal']), 'aCM: %s' % acm_text]
        if 'cm' in data:
            lines.append('CM: %s' % data['cm'])
        if data.get('veronese'):
            lines.append('veronese: %s' % data['veronese'])
        return data, '\n'.join(lines)

    def veronese(self, item):
        if not isinstance(item, VeroneseSpec):
            raise ParseError('Expected a V(d=...; a=...) spec, got %s' % item)
        ideal = item.ideal()
        ass = veronese_ass(item) if item.in_closed_form_scope() else ass_brute_force(ideal)
        data = {
            'spec': item.to_json(),
            'ideal': ideal.to_json(),
            'ass': [p.to_list() for p in ass],
            'depth': veronese_depth(item),
            'acm': veronese_is_acm(item, self.field),
            'cm': veronese_is_cm(item, self.field),
        }
        text = '\n'.join([
            'ideal: %s' % ideal,
            'ass: %s' % ', '.join(str(p) for p in ass),
            'depth: %d' % data['depth'],
            'acm: %s' % _text(data['acm']),
            'cm: %s' % _text(data['cm']),
        ])
        return data, text

    def transversal(self, item):
        if not isinstance(item, TransversalSpec):
            raise ParseError('Expected a T(n=...; ...) spec, got %s' % item)
        k = self.args.power
        ass = transversal_ass(item)
        decomposition = transversal_power_decomposition(item, k)
        data = {
            'spec': item.to_json(),
            'ideal': item.ideal().to_json(),
            'components': transversal_components(item),
            'dim': transversal_dim(item),
            'depth': transversal_depth(item),
            'ass': [p.to_list() for p in ass],
            'power': k,
            'decomposition': [[p.to_list(), e] for p, e in decomposition],
        }
        text = '\n'.join([
            'ideal: %s' % item.ideal(),
            'components: %d' % data['components'],
            'dim: %d' % data['dim'],
            'depth: %d' % data['depth'],
            'ass: %s' % ', '.join(str(p) for p in ass),
            'power %d: %s' % (k, ', '.join('%s^%d' % (p, e) for p, e in decomposition)),
        ])
        return data, text


def _validate(args, out):  # type: (argparse.Namespace, IO[str]) -> None
    if args.char is not None:
        characteristics = (args.char,)
    else:
        characteristics = (0, 2) if args.family == 'complex' else (0,)

    results = harness.validate(args.family, args.n_max, args.d_max, characteristics=characteristics, jobs=args.jobs,
                               samples=args.samples, sample_n_max=args.sample_n_max, seed=args.seed,
                               up_to_symmetry=args.up_to_symmetry)
    matrix = harness.summary(results)
    failed = harness.failures(results)

    if args.json:
        out.write(json.dumps({'family': args.family, 'checks': matrix.values(), 'failures': failed.values()},
                             sort_keys=True) + '\n')
    else:
        out.write('%s: %d instances checked\n' % (args.family, len(results.distinct('instance'))))
        width = max([len(name) for name in matrix.column('check')] + [5])
        out.write('%s  %8s  %8s\n' % ('check'.ljust(width), 'passed', 'failed'))
        for check, passed, failed_count in matrix.values_list('check', 'passed', 'failed'):
            out.write('%s  %8d  %8d\n' % (check.ljust(width), passed, failed_count))
        for row in failed[:20]:
            out.write('FAILED %s %s: expected %s, got %s\n' % (row.instance, row.check, row.expected, row.actual))

    harness.assert_all_ok(results)


def _enumerate(args, out):  # type: (argparse.Namespace, IO[str]) -> None
    rows = harness.enumerate_family(args.family, args.n_max, args.d_max, characteristic=args.char or 0,
                                    jobs=args.jobs, up_to_symmetry=args.up_to_symmetry)
    if args.json:
        out.write(json.dumps(rows.values(), sort_keys=True) + '\n')
    else:
        rows.to_csv(out)


def run(argv=None, out=None):  # type: (Optional[List[str]], Optional[IO[str]]) -> int
    """
    Parses argv, runs the verb and writes its report to out
    :return: Process exit code
    """
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    if args.verb in HARNESS_VERBS and args.family is None:
        parser.error('%s needs --family' % args.verb)
    if args.input is not None and args.file is not None:
        parser.error('Give the input either inline or with --file, not both')

    try:
        if args.verb == 'validate':
            _validate(args, out)
        elif args.verb == 'enumerate':
            _enumerate(args, out)
        else:
            field = FieldSpec.coerce(args.char)
            item = parse_input(_read_input(args), args.n)
            data, text = getattr(Command(args, field), args.verb)(item)
            out.write((json.dumps(data, sort_keys=True) if args.json else text) + '\n')
    except ValidationMismatch as e:
        logger.error(str(e))
        return 3
    except MathError as e:
        logger.error(str(e))
        return 1
    except (ParseError, ValueError) as e:
        logger.error(str(e))
        return 2
    return 0


def main(argv=None):  # type: (Optional[List[str]]) -> None
    sys.exit(run(argv))
