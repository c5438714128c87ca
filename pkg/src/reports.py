"""
Verification suites.
Each suite is a list of claims; a claim runs one computation and reports
PASS, FAIL or INCONCLUSIVE (budget or precision ran out).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src import charts, dvr, orbits, spin, weyl
from src.config import DEFAULT_PRIMES, RunConfig
from src.exactalg import (
    BudgetExhausted, CoefficientField, Ideal, RingSpec, is_generically_empty, krull_dim, same_ideal,
)
from src.interchange import dumps, write_json
from src.lifting import PrecisionExhausted, standard_lift_position, survey_lifts

PASS = 'PASS'
FAIL = 'FAIL'
INCONCLUSIVE = 'INCONCLUSIVE'

SUITES = ('picard', 'orthogonal', 'special-parahoric', 'spin', 'weyl', 'conjectures')


@dataclass
class Claim:
    """
    One verified statement.

    Attributes:
    -----------
    claim : str
        Short name of the check
    reference : str
        The mathematical fact being checked, in plain words
    status : str
        PASS, FAIL or INCONCLUSIVE
    witness : str or None
        The value that decided the status
    detail : str
        Extra context (counts, the budget message on INCONCLUSIVE)
    """
    claim: str
    reference: str
    status: str
    witness: Optional[str] = None
    detail: str = ''

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class ClaimTask:
    """A claim waiting to run: check(*args) returns (ok, witness, detail)."""
    claim: str
    reference: str
    check: Callable
    args: Tuple = ()


def run_claim(task: ClaimTask) -> Claim:
    """Run one check; exhausted budgets and precisions become INCONCLUSIVE."""
    try:
        ok, witness, detail = task.check(*task.args)
    except (BudgetExhausted, PrecisionExhausted) as exc:
        return Claim(task.claim, task.reference, INCONCLUSIVE, None, str(exc))
    return Claim(task.claim, task.reference, PASS if ok else FAIL,
                 None if witness is None else str(witness), detail)


def _sampling_field(config: RunConfig) -> CoefficientField:
    return CoefficientField(config.prime or DEFAULT_PRIMES[0])


# picard

@lru_cache(maxsize=None)
def _picard_report(p, samples, seed, budget):
    return charts.picard_I1_chart(CoefficientField(p), samples, seed, budget)[1]


def check_picard_sign(p, samples, seed, budget):
    report = _picard_report(p, samples, seed, budget)
    if report.sign is None:
        return False, None, 'neither X4 - u nor X4 + u lies in the radical of the u-saturation'
    found = f"X4 = {'+' if report.sign > 0 else '-'}u"
    # a + d = -2 X4 from the square relation, so tr X = -X4 and the trace -u forces X4 = +u
    return report.sign == 1, found, ('a + d = -2 X4 and tr X = -u force X4 = +u; the published '
                                     'statement X4 = -sqrt(pi0) has the opposite sign')


def check_picard_elimination(p, samples, seed, budget):
    report = _picard_report(p, samples, seed, budget)
    return report.eliminated_is_zero, report.eliminated_is_zero, 'eliminating a, b, c, d, p, q'


def check_picard_block(p, samples, seed, budget):
    report = _picard_report(p, samples, seed, budget)
    return report.lu_identity, report.lu_identity, ''


def check_picard_smooth(p, samples, seed, budget):
    report = _picard_report(p, samples, seed, budget)
    ok = report.samples >= 50 and report.smooth
    return ok, f"{report.smooth_samples}/{report.samples}", f"F{p}, seed {seed}"


def check_flat(spec, field, budget):
    verdict = charts.chart_flatness(spec, field, budget)
    witness = 'flat' if verdict.flat else f"u-torsion {verdict.witness.as_expr()}"
    return verdict.flat, witness, f"{spec.case} n={spec.n} ({spec.r},{spec.s}) {spec.level} over {field.label}"


def check_fiber_vs_orbit(n, r, s, kind, field, budget):
    result = orbits.special_fiber_vs_orbit(n, r, s, orbits.SymmetricPairTag(kind), field, budget)
    witness = (f"fiber dim {result.fiber_dim}, orbit dim {result.orbit_closure_dim}, "
               f"radicals agree {result.radicals_agree}, same ideal {result.same_ideal}")
    return result.consistent, witness, result.label


def picard_suite(config: RunConfig) -> List[ClaimTask]:
    p = _sampling_field(config).modulus
    args = (p, 50, config.seed, config.budget())
    field, budget = config.field(), config.budget()
    return [
        ClaimTask('picard-I1-generic-sign',
                  'On the generic fiber of the I = {1} chart, X4 equals +u',
                  check_picard_sign, args),
        ClaimTask('picard-I1-elimination',
                  'After fixing X4, eliminating a, b, c, d, p, q leaves no relation between x and y',
                  check_picard_elimination, args),
        ClaimTask('picard-I1-block-identity',
                  'The upper-left block of the isotropy matrix is (x^2, xy; xy, y^2) + (-2c, a-d; a-d, 2b)',
                  check_picard_block, args),
        ClaimTask('picard-I1-smooth',
                  'The I = {1} chart is smooth of relative dimension 2 at every sampled point',
                  check_picard_smooth, args),
        ClaimTask('picard-I0-flat',
                  'The wedge chart for n = 3, signature (2, 1) is flat over the DVR',
                  check_flat, (charts.ChartSpec('A', 3, 2, 1, 'wedge'), field, budget)),
        ClaimTask('picard-I0-special-fiber',
                  'The special fiber of that chart is the closure of the (2,1) orthogonal nilpotent orbit',
                  check_fiber_vs_orbit, (3, 2, 1, orbits.ORTHOGONAL, _sampling_field(config), budget)),
    ]


# orthogonal

def check_rank2_points(level, p, expected):
    points = charts.rank2_special_points(level, p)
    return len(points) == expected, len(points), f"points over F{p}: {points}"


def check_rank2_flatness(field, budget):
    naive, naive_charts = charts.rank2_flatness('naive', field, budget)
    spin_flat, _ = charts.rank2_flatness('spin', field, budget)
    bad = [''.join(c) for c, v in naive_charts.items() if not v]
    return (not naive and spin_flat), f"naive flat {naive}, spin flat {spin_flat}", f"non-flat naive charts: {bad}"


def check_rank4_constraints(field, budget):
    spec = RingSpec(('x2', 'x3', 'y2', 'y3', charts.U), field)
    x2, x3, y2, y3, u = spec.gens
    found = charts.spin_constraints(charts.ChartSpec('Orth', 2, 2, 2, 'spin'), field)
    expected = Ideal.of(spec, [y3, x2, x2 * y3 - x3 * y2 - u ** 2])
    ok = same_ideal(Ideal.of(spec, found), expected, budget)
    return ok, [str(g.as_expr()) for g in found], ''


def check_rank4_spin_fiber(field, budget):
    report = charts.rank4_report(field, budget)
    return (report.spin_radical_ok and report.spin_dim == 1,
            f"radical matches {report.spin_radical_ok}, dim {report.spin_dim}", '')


def check_rank4_naive_fiber(field, budget):
    report = charts.rank4_report(field, budget)
    ok = report.naive_dim == 1 and report.naive_components == 4 and report.naive_radical_ok
    return ok, (f"dim {report.naive_dim}, {report.naive_components} coordinate lines, "
                f"radical matches {report.naive_radical_ok}"), ''


def orthogonal_suite(config: RunConfig) -> List[ClaimTask]:
    p = _sampling_field(config).modulus
    field, budget = config.field(), config.budget()
    return [
        ClaimTask('rank2-naive-points',
                  'The naive special fiber of the rank 2 example has exactly 3 points',
                  check_rank2_points, ('naive', p, 3)),
        ClaimTask('rank2-spin-points',
                  'The spin special fiber of the rank 2 example has exactly 2 points',
                  check_rank2_points, ('spin', p, 2)),
        ClaimTask('rank2-flatness',
                  'The naive model of the rank 2 example is not flat; the spin model is',
                  check_rank2_flatness, (field, budget)),
        ClaimTask('rank4-spin-constraints',
                  'The spin condition in the rank 4 example adds y3, x2 and x2y3 - x3y2 - u^2',
                  check_rank4_constraints, (field, budget)),
        ClaimTask('rank4-spin-fiber',
                  'The spin special fiber of the rank 4 example is (x2, y3, y2x3) up to radical, of dimension 1',
                  check_rank4_spin_fiber, (field, budget)),
        ClaimTask('rank4-naive-fiber',
                  'The naive special fiber of the rank 4 example is the union of the 4 coordinate lines',
                  check_rank4_naive_fiber, (field, budget)),
    ]


# special parahoric

def check_fiber_dims(signatures, field, budget):
    found = {f"{n},{r},{s}": charts.wedge_special_fiber_dim(n, r, s, field, budget) for n, r, s in signatures}
    ok = all(found[f"{n},{r},{s}"] == r * s for n, r, s in signatures)
    return ok, found, 'expected r*s'


def check_generic_emptiness(signatures, field, budget):
    found = {}
    for n, r, s in signatures:
        I = charts.chart_ideal(charts.ChartSpec('B', n, r, s, 'naive'), field)
        found[f"{n},{r},{s}"] = is_generically_empty(I, charts.U, budget)
    return all(found.values()), found, ''


def check_even_odd_reduction(n, r, s, field, budget):
    result = charts.chart_even_sodd_reduction(n, r, s, 'wedge', field, budget, verify=True)
    return result.verified, result.verified, f"free variables {', '.join(result.free_variables)}"


def check_level_chain(spec, field, budget):
    report = charts.level_chain_report(spec, field, budget)
    ok = report.contained and report.generic_agreement
    return ok, f"contained {report.contained}, generic agreement {report.generic_agreement}", \
        f"{spec.case} n={spec.n} ({spec.r},{spec.s})"


def special_parahoric_suite(config: RunConfig) -> List[ClaimTask]:
    field = _sampling_field(config)
    budget = config.budget()
    return [
        ClaimTask('wedge-fiber-dimensions',
                  'Special fibers of wedge charts have dimension rs',
                  check_fiber_dims, (((3, 2, 1), (4, 2, 2), (5, 3, 2), (5, 4, 1)), field, budget)),
        ClaimTask('odd-s-generic-emptiness',
                  'For n even and s odd the chart at the pi-lattice misses the generic fiber',
                  check_generic_emptiness, (((4, 3, 1), (6, 5, 1)), field, budget)),
        ClaimTask('even-odd-reduction',
                  'For n = 4, signature (3, 1) the chart at F1 is the n = 2 chart times an affine space',
                  check_even_odd_reduction, (4, 3, 1, field, budget)),
        ClaimTask('level-chain-A-3',
                  'naive, wedge and spin ideals increase and agree after inverting u',
                  check_level_chain, (charts.ChartSpec('A', 3, 2, 1), field, budget)),
    ]


# spin

def _diagonal(values, K):
    N = len(values)
    return DomainMatrix([[K(values[i]) if i == j else K.zero for j in range(N)] for i in range(N)], (N, N), K)


def check_ae_square(count, seed, p):
    rng = np.random.default_rng(seed)
    bad = 0
    for K, low, high in ((CoefficientField(p).domain, 1, p), (QQ, -9, 10)):
        for i in range(count):
            n = 1 + i % 3
            values = [int(v) or 1 for v in rng.integers(low, high, size=2 * n)]
            gram = _diagonal(values, K)
            if spin.ae_square_check(gram) != spin.discriminant(gram).D:
                bad += 1
    return bad == 0, f"{2 * count - bad}/{2 * count}", f"F{p} and Q, seed {seed}"


def check_eigenspaces(max_n):
    sizes = {}
    ok = True
    for n in range(1, max_n + 1):
        full = comb(2 * n, n)
        plus = spin.eigen_basis(n, spin.PLUS)
        minus = spin.eigen_basis(n, spin.MINUS)
        sizes[n] = (len(plus), len(minus))
        spanning = spin.eigen_matrix(n, spin.PLUS, QQ).hstack(spin.eigen_matrix(n, spin.MINUS, QQ)).rank()
        eps = spin.plus_eigenvalue(n)
        ok &= len(plus) == len(minus) == full // 2 and spanning == full
        ok &= all(spin.apply_ae(v) == v.scaled(eps) for v in plus)
        ok &= all(spin.apply_ae(v) == v.scaled(-eps) for v in minus)
    return ok, sizes, 'plus and minus dimensions'


def check_rank4_plus_lattice(field):
    K = dvr.laurent_domain(field)
    Y, pivots = spin.lattice_pm_basis(spin.orthogonal_lattice_matrix(2, -1, K), 2, spin.PLUS)
    index = spin.wedge_indices(2)
    found = sorted(index[i] for i in pivots)
    rows = Y.to_list()
    col = next(c for c in range(Y.shape[1]) if rows[index.index((1, 4))][c] == K.one)
    vector = {index[i]: rows[i][col] for i in range(len(index)) if rows[i][col]}
    ok = found == [(1, 2), (1, 4), (3, 4)] and vector == {(1, 4): K.one, (2, 3): dvr.u_power(K, 2)}
    return ok, [''.join(map(str, S)) for S in found], 'the e14 column is e14 + u^2 e23'


def check_parity_rule(sizes):
    mismatches = []
    total = 0
    for n in sizes:
        gram = spin.split_gram(n, QQ)
        spaces = {T: spin.coordinate_subspace(T, n, QQ) for T in spin.isotropic_coordinate_indices(n)}
        plus = {T: spin.in_eigenspace(W, spin.PLUS) for T, W in spaces.items()}
        for T, W in spaces.items():
            for T2, W2 in spaces.items():
                total += 1
                same = spin.isotropic_parity(W, W2, gram) == spin.SAME
                if same != (plus[T] == plus[T2]):
                    mismatches.append((T, T2))
    return not mismatches, f"{total - len(mismatches)}/{total}", f"first mismatch {mismatches[:1]}"


def check_pi_lattice_point(cases, field):
    found = {f"{n},{r},{s}": charts.point_satisfies_spin(n, r, s, 'pi-lattice', field) for n, r, s in cases}
    ok = all(found[f"{n},{r},{s}"] == (s % 2 == 0) for n, r, s in cases)
    return ok, found, 'expected exactly for even s'


def check_f1_point(cases, field):
    found = {f"{n},{r},{s}": charts.point_satisfies_spin(n, r, s, 'f1', field) for n, r, s in cases}
    return all(found.values()), found, ''


def check_standard_points(cases, field):
    found = {f"{n},{r},{s}": charts.point_satisfies_spin(n, r, s, 'standard', field) for n, r, s in cases}
    return all(found.values()), found, ''


def check_spin_flatness(specs, primes, budget):
    verdicts = {}
    for spec in specs:
        for p in primes:
            verdicts[f"{spec.case} {spec.n},{spec.r},{spec.s} F{p}"] = \
                charts.chart_flatness(spec, CoefficientField(p), budget).flat
    return all(verdicts.values()), verdicts, ''


def spin_suite(config: RunConfig) -> List[ClaimTask]:
    field = config.field()
    spin_specs = (charts.ChartSpec('A', 3, 3, 0, 'spin'), charts.ChartSpec('A', 3, 2, 1, 'spin'),
                  charts.ChartSpec('B', 4, 4, 0, 'spin'), charts.ChartSpec('B', 4, 2, 2, 'spin'),
                  charts.ChartSpec('B1', 4, 3, 1, 'spin'))
    return [
        ClaimTask('ae-square-scalar',
                  'a_e squared is multiplication by the discriminant (-1)^n det',
                  check_ae_square, (100, config.seed, 5)),
        ClaimTask('eigenspace-dimensions',
                  'Both eigenspaces of a_e on the n-th wedge power have dimension C(2n, n)/2',
                  check_eigenspaces, (4,)),
        ClaimTask('rank4-plus-lattice',
                  'The plus part of the wedge square of the lattice Lambda_-1 has basis e12, e34, e14 + u^2 e23',
                  check_rank4_plus_lattice, (field,)),
        ClaimTask('parity-rule',
                  'Two Lagrangians lie in the same eigenspace iff their intersection has dimension congruent to n',
                  check_parity_rule, ((2, 3),)),
        ClaimTask('pi-lattice-point',
                  'pi times Lambda_m satisfies the spin condition exactly when s is even',
                  check_pi_lattice_point, (((4, 2, 2), (4, 3, 1), (2, 1, 1), (2, 2, 0)), field)),
        ClaimTask('f1-point',
                  'The point F_1 spanned by f_1, pi f_1, ..., pi f_{n-1} satisfies the spin condition for odd s',
                  check_f1_point, (((4, 3, 1),), field)),
        ClaimTask('standard-points',
                  'The standard points of signature (m, m) and (m+1, m) satisfy the spin condition',
                  check_standard_points, (((2, 1, 1), (3, 2, 1), (4, 2, 2)), field)),
        ClaimTask('spin-level-flatness',
                  'Spin-level charts for n = 3 and 4 are flat over the DVR',
                  check_spin_flatness, (spin_specs, (3, 5), config.budget())),
    ]


# weyl

def check_adm0(max_n):
    bad = []
    for n in range(3, max_n + 1):
        for s in range(n // 2 + 1):
            found = {weyl.dominant_coweight(w) for w in weyl.admissible_set(n, n - s, s)}
            if found != set(weyl.adm0(n, n - s, s)):
                bad.append((n, s))
    return not bad, f"mismatches {bad}", f"n up to {max_n}"


def check_adm0_chains(max_n):
    bad = []
    for n in range(3, max_n + 1):
        for s in range(n // 2 + 1):
            chain = weyl.adm0(n, n - s, s)
            if chain != weyl.dominance_closure(n, n - s, s):
                bad.append((n, s))
            elif any(not weyl.dominates(a, b) or a == b for a, b in zip(chain, chain[1:])):
                bad.append((n, s))
    return not bad, f"mismatches {bad}", f"n up to {max_n}"


def check_extreme_counts(max_n):
    bad = [(n, s) for n in range(2, max_n + 1) for s in range(n // 2 + 1)
           if len(weyl.extreme_elements(n, n - s, s)) != weyl.orbit_size(n, s)]
    return not bad, f"mismatches {bad}", ''


def check_histogram():
    found = weyl.length_histogram(weyl.admissible_set(3, 2, 1))
    return found == {2: 2, 1: 2, 0: 1}, found, 'n = 3, signature (2, 1)'


def check_vertexwise(sizes):
    failures = []
    total = 0
    for n in sizes:
        for s in range(n // 2 + 1):
            for I in weyl.valid_index_sets(n):
                total += 1
                result = weyl.vertexwise_check(n, n - s, s, I)
                if not result:
                    failures.append((n, s, sorted(I), result.counterexample))
    return not failures, f"{total - len(failures)}/{total}", f"first failure {failures[:1]}"


def check_coherence(max_n, max_k):
    bad = [(n, s, k) for n in range(2, max_n + 1) for s in range(1, n) for k in range(max_k + 1)
           if weyl.coherence_rhs(n, s, k) != weyl.coherence_rhs_bruteforce(n, s, k)]
    return not bad, f"mismatches {bad}", ''


def check_lift_surveys(signatures, config):
    found = {}
    for n, r, s in signatures:
        survey = survey_lifts(n, r, s, config.precision_for(n))
        found[f"{n},{r},{s}"] = survey.all_valid and survey.exhausts_extremes
    return all(found.values()), found, ''


def check_standard_lift(signatures, config):
    found = {}
    for n, r, s in signatures:
        position, expected = standard_lift_position(n, r, s, config.precision_for(n))
        found[f"{n},{r},{s}"] = position == expected
    return all(found.values()), found, 'S = {1..s} sits at the translation by lambda_s'


def weyl_suite(config: RunConfig) -> List[ClaimTask]:
    return [
        ClaimTask('adm0-enumeration', 'Dominant coweights of Adm form the closed-form chain',
                  check_adm0, (9,)),
        ClaimTask('adm0-chains', 'The closed-form chain is the dominance closure of the extreme translations',
                  check_adm0_chains, (9,)),
        ClaimTask('extreme-counts', 'Adm has exactly |W0 . lambda_s| extreme elements',
                  check_extreme_counts, (9,)),
        ClaimTask('n3-histogram', 'The Iwahori admissible set for n = 3 has lengths {2: 2, 1: 2, 0: 1}',
                  check_histogram),
        ClaimTask('vertexwise', 'Adm^I is the intersection of the vertex admissible sets',
                  check_vertexwise, ((3, 4, 5),)),
        ClaimTask('coherence-count', 'The product formula counts standard monomials on Gr(s, n)',
                  check_coherence, (6, 2)),
        ClaimTask('lift-surveys', 'Lifts over all valid S are valid and reach every extreme element',
                  check_lift_surveys, (((3, 2, 1), (4, 3, 1), (4, 2, 2)), config)),
        ClaimTask('standard-lift-position', 'The standard lift sits at the translation by lambda_s',
                  check_standard_lift, (((3, 2, 1), (4, 2, 2)), config)),
    ]


# conjectures

def check_orbit_dims(cases, field, budget):
    found = {}
    ok = True
    for n, s, kind in cases:
        I = orbits.orbit_closure_ideal(n, s, orbits.SymmetricPairTag(kind), field)
        dim = krull_dim(I, budget)
        found[f"{kind} {n},{s}"] = dim
        ok &= dim == orbits.orbit_dim(n - s, s)
    return ok, found, 'expected rs'


def check_orbit_points(cases, p, samples, seed):
    found = {}
    for n, s, kind in cases:
        hits, taken = orbits.sample_orbit_points(n, s, orbits.SymmetricPairTag(kind), p, samples, seed)
        found[f"{kind} {n},{s}"] = f"{hits}/{taken}"
    ok = all(v.split('/')[0] == v.split('/')[1] for v in found.values())
    return ok, found, f"F{p}, seed {seed}"


def conjectures_suite(config: RunConfig) -> List[ClaimTask]:
    field = _sampling_field(config)
    budget = config.budget()
    orbit_cases = ((3, 1, orbits.ORTHOGONAL), (4, 2, orbits.SYMPLECTIC),
                   (5, 1, orbits.ORTHOGONAL), (5, 2, orbits.ORTHOGONAL))
    point_cases = ((3, 1, orbits.ORTHOGONAL), (4, 2, orbits.SYMPLECTIC),
                   (5, 2, orbits.ORTHOGONAL), (6, 2, orbits.SYMPLECTIC))
    return [
        ClaimTask('fiber-vs-orbit-3', 'The n = 3 wedge special fiber is the orthogonal orbit closure',
                  check_fiber_vs_orbit, (3, 2, 1, orbits.ORTHOGONAL, field, budget)),
        ClaimTask('fiber-vs-orbit-4', 'The n = 4 wedge special fiber is the symplectic orbit closure',
                  check_fiber_vs_orbit, (4, 2, 2, orbits.SYMPLECTIC, field, budget)),
        ClaimTask('orbit-dimensions', 'The (2^s, 1^r) orbit closure has dimension rs',
                  check_orbit_dims, (orbit_cases, field, budget)),
        ClaimTask('orbit-points', 'Random points of the orbit satisfy the closure equations',
                  check_orbit_points, (point_cases, field.modulus, 20, config.seed)),
        ClaimTask('level-chain-B-4', 'naive, wedge and spin ideals increase and agree after inverting u',
                  check_level_chain, (charts.ChartSpec('B', 4, 2, 2), field, budget)),
    ]


SUITE_BUILDERS: Dict[str, Callable[[RunConfig], List[ClaimTask]]] = {
    'picard': picard_suite,
    'orthogonal': orthogonal_suite,
    'special-parahoric': special_parahoric_suite,
    'spin': spin_suite,
    'weyl': weyl_suite,
    'conjectures': conjectures_suite,
}


def suite_tasks(name, config: RunConfig) -> List[ClaimTask]:
    if name not in SUITE_BUILDERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    return SUITE_BUILDERS[name](config)


def run_suite(name, config: RunConfig = RunConfig(), jobs=1, verbose=False) -> List[Claim]:
    """
    Run every claim of a suite.

    Parameters:
    -----------
    name : str
        One of SUITES
    config : RunConfig
        Field, budgets, precision and seed
    jobs : int
        Worker processes; claims are independent, results keep suite order
    verbose : bool
        Print one line per claim

    Returns:
    --------
    list of Claim
    """
    tasks = suite_tasks(name, config)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            claims = list(pool.map(run_claim, tasks))
    else:
        claims = [run_claim(task) for task in tasks]
    if verbose:
        for c in claims:
            mark = '✓' if c.status == PASS else '⚠️ '
            print(f"{mark} [{c.status}] {c.claim}: {c.witness}")
    return claims


def exit_code(claims: List[Claim]) -> int:
    statuses = {c.status for c in claims}
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 2
    return 0


def suite_table(claims: List[Claim]) -> pd.DataFrame:
    return pd.DataFrame([c.to_json() for c in claims],
                        columns=['claim', 'reference', 'status', 'witness', 'detail'])


def config_to_json(config: RunConfig):
    return {
        'prime': config.prime,
        'max_pairs': config.max_pairs,
        'max_degree': config.max_degree,
        'u_precision': config.u_precision,
        'seed': config.seed,
    }


def bundle(name, config: RunConfig, claims: List[Claim]):
    """Report bundle: suite, run settings, claims in order and a status count."""
    counts = suite_table(claims)['status'].value_counts()
    return {
        'suite': name,
        'config': config_to_json(config),
        'claims': [c.to_json() for c in claims],
        'summary': {status: int(counts.get(status, 0)) for status in (PASS, FAIL, INCONCLUSIVE)},
        'exit_code': exit_code(claims),
    }


def write_bundle(name, config: RunConfig, claims: List[Claim], path=None):
    path = path or config.output_dir / f'verify_{name}.json'
    return write_json(bundle(name, config, claims), path)


if __name__ == "__main__":
    print("Verification Suite Test")
    print("=" * 60)
    config = RunConfig()
    claims = run_suite('weyl', config, verbose=True)
    print(suite_table(claims)[['claim', 'status']].to_string(index=False))
    print(dumps({'exit_code': exit_code(claims)}))
    print("\n" + "=" * 60)
