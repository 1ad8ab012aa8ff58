"""
Instance families, fast path against pipeline validation suites, and enumeration sweeps.
Every suite returns a ResultSet with one row per (instance, check).
"""
import logging
import random
from itertools import combinations_with_replacement, permutations, product as cartesian
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import binomial

from .acm_simplicial import is_acm_via_links, is_cm_via_reisner, acm_implies_almost_pure, \
    connected_iff_acm_in_dimension_two, links_of_acm_are_acm, link_homology_vanishes
from .compatibility import popcount
from .exceptions import ValidationMismatch
from .homology import FieldSpec, betti_table
from .invariants import analyze, ass_brute_force, minimal_primes, resolution_shape, reg_of_regular_sequence, \
    terai_identity_check, LINEAR, ALMOST_LINEAR
from .monomials import Monomial, MonomialIdeal, MonomialPrime, prime_power_intersection
from .polymatroidal import VeroneseSpec, TransversalSpec, is_polymatroidal, veronese_ass, veronese_depth, \
    veronese_is_acm, veronese_is_cm, veronese_recognize, transversal_ass, transversal_depth, transversal_dim, \
    transversal_power_decomposition, match_acm_normal_form, classify_acm_transversal, classify_cm_polymatroidal, NOT_CM
from .results import ResultSet
from .settings import DEFAULT_JOBS
from .simplicial import SimplicialComplex, stanley_reisner_ideal, complex_of_ideal, alexander_dual_ideal, \
    alexander_dual_complex, mask_vertices

logger = logging.getLogger(__name__)

FAMILIES = ('veronese', 'transversal', 'complex', 'squarefree', 'regular')

CHECK_FIELDS = ('family', 'instance', 'check', 'expected', 'actual', 'ok')
ENUMERATE_FIELDS = ('spec', 'dim', 'depth', 'hte', 'bight', 'cm', 'acm', 'classification')

# Number of antichains in the subsets of an n-set, the void complex included
DEDEKIND = (2, 3, 6, 20, 168, 7581, 7828354)


def veronese_family_size(n, d):  # type: (int, int) -> int
    """
    Bound vectors with 1 <= a_i <= d and sum(a) >= d
    """
    return d ** n - int(binomial(d - 1, n))


def transversal_family_size(n, d):  # type: (int, int) -> int
    """
    Multisets of d non-empty subsets of {1..n}
    """
    return int(binomial(2 ** n - 2 + d, d))


def complex_family_size(n):  # type: (int) -> int
    """
    Non-void complexes on n labelled vertices
    """
    return DEDEKIND[n] - 1


def complex_family_total(n_max):  # type: (int) -> int
    """
    Non-void complexes on n labelled vertices for every 1 <= n <= n_max, the size of the complex family
    """
    return sum(complex_family_size(n) for n in range(1, n_max + 1))


def _permute_mask(mask, permutation):  # type: (int, Sequence[int]) -> int
    result = 0
    for i, target in enumerate(permutation):
        if (mask >> i) & 1:
            result |= 1 << target
    return result


def _canonical_masks(masks, n):  # type: (Sequence[int], int) -> Tuple[int, ...]
    return min(tuple(sorted(_permute_mask(m, p) for m in masks)) for p in permutations(range(n)))


def veronese_specs(n_max, d_max, d_min=2, up_to_symmetry=False):
    # type: (int, int, int, bool) -> Iterator[VeroneseSpec]
    """
    All specs with 1 <= n <= n_max, d_min <= d <= d_max, 1 <= a_i <= d and sum(a) >= d.
    Up to symmetry, only non-increasing bound vectors are kept.
    """
    for n in range(1, n_max + 1):
        for d in range(d_min, d_max + 1):
            for a in cartesian(range(1, d + 1), repeat=n):
                if sum(a) < d:
                    continue
                if up_to_symmetry and list(a) != sorted(a, reverse=True):
                    continue
                yield VeroneseSpec(n, d, a)


def transversal_specs(n_max, d_max, d_min=1, up_to_symmetry=False, full_supported=False):
    # type: (int, int, int, bool, bool) -> Iterator[TransversalSpec]
    """
    All products of d monomial primes in n variables, factor order ignored.
    Up to symmetry, one representative per orbit of variable permutations is kept.
    """
    for n in range(1, n_max + 1):
        full = (1 << n) - 1
        for d in range(d_min, d_max + 1):
            for masks in combinations_with_replacement(range(1, full + 1), d):
                if full_supported and _union(masks) != full:
                    continue
                if up_to_symmetry and masks != _canonical_masks(masks, n):
                    continue
                yield TransversalSpec(n, [mask_vertices(m) for m in masks])


def _union(masks):  # type: (Iterable[int]) -> int
    result = 0
    for m in masks:
        result |= m
    return result


def _antichains(masks, start, chosen):  # type: (Sequence[int], int, List[int]) -> Iterator[List[int]]
    yield chosen
    for k in range(start, len(masks)):
        mask = masks[k]
        if all(mask & c != mask and mask & c != c for c in chosen):
            for result in _antichains(masks, k + 1, chosen + [mask]):
                yield result


def all_complexes(n, up_to_symmetry=False):  # type: (int, bool) -> Iterator[SimplicialComplex]
    """
    Every non-void complex on n labelled vertices, as facet antichains
    """
    masks = sorted(range(1 << n), key=lambda m: (popcount(m), mask_vertices(m)))
    for chosen in _antichains(masks, 0, []):
        if not chosen:
            continue
        if up_to_symmetry and tuple(sorted(chosen)) != _canonical_masks(chosen, n):
            continue
        yield SimplicialComplex(n, chosen)


def complexes_up_to(n_max, up_to_symmetry=False):  # type: (int, bool) -> Iterator[SimplicialComplex]
    """
    all_complexes(n) for n = 1 .. n_max in turn
    """
    for n in range(1, n_max + 1):
        for complex_ in all_complexes(n, up_to_symmetry):
            yield complex_


def random_complexes(count, n_max, seed=0):  # type: (int, int, int) -> List[SimplicialComplex]
    rng = random.Random(seed)
    result = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        facets = [rng.randint(0, (1 << n) - 1) for _ in range(rng.randint(1, n + 1))]
        result.append(SimplicialComplex(n, facets))
    return result


def random_squarefree_ideals(count, n_max, seed=0):  # type: (int, int, int) -> List[MonomialIdeal]
    rng = random.Random(seed)
    result = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        masks = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, n + 1))]
        result.append(MonomialIdeal.from_masks(n, masks))
    return result


def random_transversal_specs(count, n_max, d_max, seed=0):  # type: (int, int, int, int) -> List[TransversalSpec]
    rng = random.Random(seed)
    result = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        sets = [mask_vertices(rng.randint(1, (1 << n) - 1)) for _ in range(rng.randint(1, d_max))]
        result.append(TransversalSpec(n, sets))
    return result


def random_regular_sequences(count, n_max, seed=0, max_exponent=3):
    # type: (int, int, int, int) -> List[List[Monomial]]
    """
    Monomials on pairwise disjoint random variable blocks
    """
    rng = random.Random(seed)
    result = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        variables = list(range(n))
        rng.shuffle(variables)
        blocks = rng.randint(1, n)
        cuts = sorted(rng.sample(range(1, n), blocks - 1))
        sequence = []
        for start, stop in zip([0] + cuts, cuts + [n]):
            exponents = [0] * n
            for i in variables[start:stop]:
                exponents[i] = rng.randint(1, max_exponent)
            sequence.append(Monomial(exponents))
        result.append(sequence)
    return result


def _row(family, instance, check, expected, actual):  # type: (str, Any, str, Any, Any) -> Tuple
    return family, str(instance), check, str(expected), str(actual), expected == actual


def _primes_text(primes):  # type: (Sequence[MonomialPrime]) -> str
    return ' '.join(str(p) for p in primes)


def _polymatroidal_rows(family, instance, ideal, report):  # type: (str, Any, MonomialIdeal, Any) -> List[Tuple]
    maximal = MonomialPrime(range(1, ideal.n + 1))
    rows = [
        _row(family, instance, 'polymatroidal', True, is_polymatroidal(ideal)),
        _row(family, instance, 'height_route', report.acm, report.hte >= report.pd - 1),
        _row(family, instance, 'bight_gap', True, not report.acm or report.bight - report.hte <= 1),
        _row(family, instance, 'cm_classification', report.cm, classify_cm_polymatroidal(ideal) != NOT_CM),
    ]
    if report.acm and maximal in report.ass:
        rows.append(_row(family, instance, 'veronese_when_maximal_associated', True,
                         veronese_recognize(ideal) is not None))
    return rows


def check_veronese(task):  # type: (Tuple[VeroneseSpec, int]) -> List[Tuple]
    spec, characteristic = task
    field = FieldSpec(characteristic)
    ideal = spec.ideal()
    report = analyze(ideal, field)
    brute = ass_brute_force(ideal)

    rows = [
        _row('veronese', spec, 'ass', _primes_text(brute), _primes_text(veronese_ass(spec))),
        _row('veronese', spec, 'depth', report.depth, veronese_depth(spec)),
        _row('veronese', spec, 'acm', report.acm, veronese_is_acm(spec, field)),
        _row('veronese', spec, 'cm', report.cm, veronese_is_cm(spec, field)),
        _row('veronese', spec, 'recognize', spec, veronese_recognize(ideal)),
    ]
    return rows + _polymatroidal_rows('veronese', spec, ideal, report)


def check_transversal(task):  # type: (Tuple[TransversalSpec, int]) -> List[Tuple]
    spec, characteristic = task
    field = FieldSpec(characteristic)
    ideal = spec.ideal()
    report = analyze(ideal, field)

    rows = [
        _row('transversal', spec, 'depth', report.depth, transversal_depth(spec)),
        _row('transversal', spec, 'dim', report.dim, transversal_dim(spec)),
        _row('transversal', spec, 'ass', _primes_text(report.ass), _primes_text(transversal_ass(spec))),
    ]
    for k in (1, 2):
        decomposition = prime_power_intersection(transversal_power_decomposition(spec, k), spec.n)
        rows.append(_row('transversal', spec, 'power_%d' % k, ideal.power(k), decomposition))
    if spec.is_full_supported():
        classification = classify_acm_transversal(spec)
        rows.append(_row('transversal', spec, 'classification', report.acm, classification.is_acm))
        # The normal forms are matched on the ideal alone, apart from the component count
        normal_form = match_acm_normal_form(ideal)
        if normal_form is not None:
            rows.append(_row('transversal', spec, 'normal_form_is_acm', True, report.acm))
        if classification.literal and classification.is_acm:
            rows.append(_row('transversal', spec, 'normal_form_label', classification, normal_form))
    return rows + _polymatroidal_rows('transversal', spec, ideal, report)


def check_complex(task):  # type: (Tuple[SimplicialComplex, int]) -> List[Tuple]
    complex_, characteristic = task
    field = FieldSpec(characteristic)
    instance = '%s over %s' % (complex_, field)
    ideal = stanley_reisner_ideal(complex_)
    report = analyze(ideal, field)
    acm, _ = is_acm_via_links(complex_, field)

    rows = [
        _row('complex', instance, 'links_vs_pipeline', report.acm, acm),
        _row('complex', instance, 'reisner_vs_pipeline', report.cm, is_cm_via_reisner(complex_, field)),
        _row('complex', instance, 'almost_pure', True, acm_implies_almost_pure(complex_, field)),
        _row('complex', instance, 'round_trip', complex_, complex_of_ideal(ideal)),
    ]
    if complex_.dimension == 2:
        rows.append(_row('complex', instance, 'dim_two_connected', True,
                         connected_iff_acm_in_dimension_two(complex_, field)))
    if complex_.dimension >= 2 and link_homology_vanishes(complex_, field, slack=1):
        rows.append(_row('complex', instance, 'link_vanishing_connected', True, complex_.is_connected()))
    if acm:
        rows.append(_row('complex', instance, 'links_acm', True, links_of_acm_are_acm(complex_, field)))
    if not complex_.is_simplex():
        dual = alexander_dual_complex(complex_)
        rows.append(_row('complex', instance, 'duality', alexander_dual_ideal(ideal), stanley_reisner_ideal(dual)))
        rows.append(_row('complex', instance, 'dual_involution', complex_, alexander_dual_complex(dual)))
    return rows


def check_squarefree(task):  # type: (Tuple[MonomialIdeal, int]) -> List[Tuple]
    ideal, characteristic = task
    field = FieldSpec(characteristic)
    report = analyze(ideal, field)
    terai = terai_identity_check(complex_of_ideal(ideal), field)
    shape = resolution_shape(alexander_dual_ideal(ideal), field)

    return [
        _row('squarefree', ideal, 'terai', terai.lhs, terai.rhs),
        _row('squarefree', ideal, 'reg_equals_dual_pd', True, terai.reg_equals_pd),
        _row('squarefree', ideal, 'indeg_equals_dual_codim', True, terai.indeg_equals_codim),
        _row('squarefree', ideal, 'dual_shape_acm', report.acm, shape in (LINEAR, ALMOST_LINEAR)),
        _row('squarefree', ideal, 'dual_shape_cm', report.cm, shape == LINEAR),
        _row('squarefree', ideal, 'ass_equals_min', _primes_text(minimal_primes(ideal)),
             _primes_text(ass_brute_force(ideal))),
    ]


def check_regular_sequence(task):  # type: (Tuple[Sequence[Monomial], int]) -> List[Tuple]
    sequence, characteristic = task
    ideal = MonomialIdeal(len(sequence[0]), sequence)
    table = betti_table(ideal, FieldSpec(characteristic))
    return [_row('regular', ideal, 'reg', table.ideal_regularity, reg_of_regular_sequence(sequence))]


def fan_out(worker, tasks, jobs=None):  # type: (Callable[[Any], List], Iterable[Any], Optional[int]) -> List
    """
    Maps worker over tasks, in a process pool when jobs > 1. Results keep task order.
    """
    jobs = DEFAULT_JOBS if jobs is None else jobs
    if jobs <= 1:
        return [worker(task) for task in tasks]

    pool = Pool(jobs)
    try:
        return list(pool.imap(worker, tasks, chunksize=4))
    finally:
        pool.close()
        pool.join()


def _rows(worker, tasks, jobs):  # type: (Callable, List, Optional[int]) -> ResultSet
    logger.info('Running %s on %d instances', worker.__name__, len(tasks))
    return ResultSet(CHECK_FIELDS, [row for rows in fan_out(worker, tasks, jobs) for row in rows])


def validate(family, n_max, d_max=3, characteristics=(0,), jobs=None, samples=0, sample_n_max=7, seed=0,
             up_to_symmetry=False):
    # type: (str, int, int, Sequence[int], Optional[int], int, int, int, bool) -> ResultSet
    """
    Runs a family's equivalence suite: exhaustive instances up to n_max (and d_max), plus seeded random samples
    :param family: One of FAMILIES
    :param characteristics: Fields to run the homology based checks over
    :param samples: Random instances on top of the exhaustive ones
    :param sample_n_max: Largest ring for random instances
    """
    if family == 'veronese':
        tasks = [(spec, c) for c in characteristics
                 for spec in veronese_specs(n_max, d_max, up_to_symmetry=up_to_symmetry)]
        return _rows(check_veronese, tasks, jobs)

    if family == 'transversal':
        specs = list(transversal_specs(n_max, d_max, up_to_symmetry=up_to_symmetry))
        specs += random_transversal_specs(samples, sample_n_max, max(d_max, 1), seed)
        return _rows(check_transversal, [(spec, c) for c in characteristics for spec in specs], jobs)

    if family == 'complex':
        complexes = list(complexes_up_to(n_max, up_to_symmetry))
        complexes += random_complexes(samples, sample_n_max, seed)
        return _rows(check_complex, [(c, char) for char in characteristics for c in complexes], jobs)

    if family == 'squarefree':
        ideals = [stanley_reisner_ideal(c) for c in complexes_up_to(n_max, up_to_symmetry)
                  if not c.is_simplex()]
        ideals += random_squarefree_ideals(samples, sample_n_max, seed)
        return _rows(check_squarefree, [(i, char) for char in characteristics for i in ideals], jobs)

    if family == 'regular':
        sequences = random_regular_sequences(samples, sample_n_max, seed)
        return _rows(check_regular_sequence, [(s, char) for char in characteristics for s in sequences], jobs)

    raise ValueError("Unknown family '%s', expected one of %s" % (family, ', '.join(FAMILIES)))


def failures(results):  # type: (ResultSet) -> ResultSet
    return results.filter(ok=False)


def assert_all_ok(results):  # type: (ResultSet) -> None
    """
    :raises ValidationMismatch: Listing the first failing rows
    """
    failed = failures(results)
    if failed.count():
        sample = '; '.join('%s %s: expected %s, got %s' % (r.instance, r.check, r.expected, r.actual)
                           for r in failed[:5])
        raise ValidationMismatch('%d of %d checks failed: %s' % (failed.count(), results.count(), sample))


def summary(results):  # type: (ResultSet) -> ResultSet
    """
    Pass / fail matrix: one row per check name, in first appearance order
    """
    order = []  # type: List[str]
    counts = {}
    for row in results:
        if row.check not in counts:
            order.append(row.check)
            counts[row.check] = [0, 0]
        counts[row.check][0 if row.ok else 1] += 1
    return ResultSet(('check', 'passed', 'failed'), [(check, counts[check][0], counts[check][1]) for check in order])


def _enumerate_row(task):  # type: (Tuple[Any, int]) -> List[Tuple]
    instance, characteristic = task
    field = FieldSpec(characteristic)

    classification = ''
    if isinstance(instance, SimplicialComplex):
        ideal = stanley_reisner_ideal(instance)
    elif isinstance(instance, MonomialIdeal):
        ideal = instance
    else:
        ideal = instance.ideal()
        if isinstance(instance, TransversalSpec) and instance.is_full_supported():
            classification = str(classify_acm_transversal(instance))
        elif isinstance(instance, VeroneseSpec):
            classification = classify_cm_polymatroidal(ideal)

    report = analyze(ideal, field)
    return [(str(instance), report.dim, report.depth, report.hte, report.bight, report.cm, report.acm,
             classification)]


def enumerate_family(family, n_max, d_max=3, characteristic=0, jobs=None, up_to_symmetry=False):
    # type: (str, int, int, int, Optional[int], bool) -> ResultSet
    """
    One row of invariants per instance of the family
    """
    if family == 'veronese':
        instances = list(veronese_specs(n_max, d_max, up_to_symmetry=up_to_symmetry))
    elif family == 'transversal':
        instances = list(transversal_specs(n_max, d_max, up_to_symmetry=up_to_symmetry))
    elif family == 'complex':
        instances = list(complexes_up_to(n_max, up_to_symmetry))
    elif family == 'squarefree':
        instances = [stanley_reisner_ideal(c) for c in complexes_up_to(n_max, up_to_symmetry)
                     if not c.is_simplex()]
    else:
        raise ValueError("Family '%s' can't be enumerated" % family)

    tasks = [(instance, characteristic) for instance in instances]
    return ResultSet(ENUMERATE_FIELDS, [row for rows in fan_out(_enumerate_row, tasks, jobs) for row in rows])
