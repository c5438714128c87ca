"""
Polynomial chart ideals of naive, wedge and spin local models.

Unitary charts live in the ring k[x_ij, u] with π₀ = u² and √π₀ = u:
case A (n odd, the chart at Λ₀), case B (n even, the chart at πΛ_m) and
case B1 (n even, s odd, the chart at ℱ₁). The Picard chart for I = {1} and
the two small orthogonal examples are built here as well.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix

from src import dvr, spin
from src.exactalg import (
    DEFAULT_BUDGET, RATIONALS, Budget, BudgetExhausted, CoefficientField, Ideal, RingSpec,
    contains, count_points, eliminate, groebner_basis, ideal_from, intersect, is_flat_over_dvr,
    jacobian_corank, krull_dim, radical_membership, radicals_agree, same_ideal, saturate,
    special_fiber, substitute, transfer,
)

CASES = ('A', 'B', 'B1', 'Picard-I1', 'Orth')
LEVELS = ('naive', 'wedge', 'spin')
U = 'u'


@dataclass(frozen=True)
class ChartSpec:
    """
    Which chart to build.

    Attributes:
    -----------
    case : str
        'A' (n odd), 'B' (n even), 'B1' (n even, s odd), 'Picard-I1'
        (n = 3, signature (2, 1)) or 'Orth' (orthogonal examples, n = 1 or 2
        with signature (n, n))
    n, r, s : int
        Rank and signature
    level : str
        'naive', 'wedge' or 'spin'
    """
    case: str
    n: int
    r: int
    s: int
    level: str = 'naive'

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown chart case {self.case!r}; expected one of {CASES}")
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}; expected one of {LEVELS}")
        if self.case == 'Orth':
            if self.n not in (1, 2) or (self.r, self.s) != (self.n, self.n):
                raise ValueError(f"orthogonal charts exist for n = 1, 2 with signature (n, n), got {self}")
            if self.level == 'wedge':
                raise ValueError("orthogonal charts have levels naive and spin only")
            return
        if self.r + self.s != self.n or not 0 <= self.s <= self.r:
            raise ValueError(f"need r + s = n and 0 ≤ s ≤ r, got n={self.n} r={self.r} s={self.s}")
        if self.case == 'A' and self.n % 2 == 0:
            raise ValueError(f"case A needs odd n, got {self.n}")
        if self.case in ('B', 'B1') and (self.n % 2 or self.n < 2):
            raise ValueError(f"case {self.case} needs even n ≥ 2, got {self.n}")
        if self.case == 'B1' and (self.s % 2 == 0 or self.n < 4):
            raise ValueError(f"case B1 needs odd s and n ≥ 4, got n={self.n} s={self.s}")
        if self.case == 'Picard-I1':
            if (self.n, self.r, self.s) != (3, 2, 1) or self.level != 'naive':
                raise ValueError("the Picard chart is fixed: n = 3, (2, 1), level naive")

    def at_level(self, level):
        return ChartSpec(self.case, self.n, self.r, self.s, level)


def matrix_names(n, prefix='x', ncols=None) -> Tuple[str, ...]:
    return tuple(f'{prefix}{i}{j}' for i in range(1, n + 1) for j in range(1, (ncols or n) + 1))


def _dm(rows, R) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), len(rows[0]) if rows else 0), R)


def symbol_matrix(spec: RingSpec, prefix, nrows, ncols=None) -> DomainMatrix:
    ncols = ncols or nrows
    R = spec.ring.to_domain()
    rows = [[spec.var(f'{prefix}{i}{j}') for j in range(1, ncols + 1)] for i in range(1, nrows + 1)]
    return _dm(rows, R)


def scalar_matrix(n, c, R) -> DomainMatrix:
    return _dm([[c if i == j else R.zero for j in range(n)] for i in range(n)], R)


def antidiagonal(n, R) -> DomainMatrix:
    """H_n."""
    return _dm([[R.one if i + j == n - 1 else R.zero for j in range(n)] for i in range(n)], R)


def symplectic_form(n, R) -> DomainMatrix:
    """J_n = [[0, −H_m], [H_m, 0]] for n = 2m."""
    m = n // 2
    rows = [[R.zero] * n for _ in range(n)]
    for i in range(m):
        rows[i][n - 1 - i] = -R.one
        rows[m + i][m - 1 - i] = R.one
    return _dm(rows, R)


def sign_matrix(n, R) -> DomainMatrix:
    """E = diag(−1^m, 1^m); J_n = E·H_n."""
    m = n // 2
    return _dm([[(-R.one if i < m else R.one) if i == j else R.zero for j in range(n)] for i in range(n)], R)


def entries(M: DomainMatrix) -> List[object]:
    return [x for row in M.to_list() for x in row]


def minors(M: DomainMatrix, k) -> List[object]:
    """All k × k minors, row and column subsets in lexicographic order."""
    nrows, ncols = M.shape
    if k > min(nrows, ncols):
        return []
    rows = M.to_list()
    R = M.domain
    out = []
    for I in combinations(range(nrows), k):
        for J in combinations(range(ncols), k):
            out.append(_dm([[rows[i][j] for j in J] for i in I], R).det())
    return out


def target_charpoly(u, r, s, one) -> List[object]:
    """Coefficients of (T − u)^s (T + u)^r, leading coefficient first."""
    coeffs = [one]
    for root_sign, times in ((-1, s), (1, r)):
        for _ in range(times):
            shifted = coeffs + [0 * one]
            coeffs = [a + root_sign * u * b for a, b in zip(shifted, [0 * one] + coeffs)]
    return coeffs


def charpoly_conditions(X: DomainMatrix, u, r, s) -> List[object]:
    """char_X(T) − (T − u)^s (T + u)^r, coefficientwise."""
    actual = X.charpoly()
    wanted = target_charpoly(u, r, s, X.domain.one)
    return [a - b for a, b in zip(actual[1:], wanted[1:])]


def chart_ring(spec: ChartSpec, field: CoefficientField = RATIONALS) -> RingSpec:
    if spec.case == 'B1':
        return RingSpec(_reduction_names(spec.n) + (U,), field)
    if spec.case == 'Picard-I1':
        return RingSpec(PICARD_NAMES + (U,), field)
    if spec.case == 'Orth':
        return _orthogonal_ring(spec.n, spec.level, field)
    return RingSpec(matrix_names(spec.n) + (U,), field)


def structured_generators(spec: ChartSpec, field: CoefficientField = RATIONALS) -> Dict[str, List[object]]:
    """
    Generator groups of a case A or B chart before pruning: 'square'
    (X² − u²I), 'symmetry' (Xᵗ − HXH or Xᵗ + JXJ), 'charpoly', and at
    higher levels 'wedge' and 'spin'.
    """
    if spec.case not in ('A', 'B'):
        raise ValueError(f"structured generators exist for cases A and B, got {spec.case}")
    ring = chart_ring(spec, field)
    R = ring.ring.to_domain()
    n, r, s = spec.n, spec.r, spec.s
    u = ring.var(U)
    X = symbol_matrix(ring, 'x', n)
    XT = X.transpose()
    if spec.case == 'A':
        H = antidiagonal(n, R)
        symmetry = XT - H * X * H
    else:
        J = symplectic_form(n, R)
        symmetry = XT + J * X * J
    groups = {
        'square': entries(X * X - scalar_matrix(n, u ** 2, R)),
        'symmetry': entries(symmetry),
        'charpoly': charpoly_conditions(X, u, r, s),
    }
    if spec.level in ('wedge', 'spin') and r != s:
        groups['wedge'] = (minors(X - scalar_matrix(n, u, R), r + 1)
                           + minors(X + scalar_matrix(n, u, R), s + 1))
    if spec.level == 'spin':
        groups['spin'] = spin_constraints(spec, field)
    return groups


def prune(polys) -> List[object]:
    """Drop zeros and repeats up to a scalar, keeping first occurrences."""
    seen = {}
    for p in polys:
        if p and p.monic() not in seen:
            seen[p.monic()] = p
    return list(seen.values())


def chart_ideal(spec: ChartSpec, field: CoefficientField = RATIONALS) -> Ideal:
    """
    Ideal of the chart described by spec.

    Parameters:
    -----------
    spec : ChartSpec
        Case, rank, signature and level
    field : CoefficientField
        Q or F_p

    Returns:
    --------
    Ideal
        Generators only; no Gröbner basis is computed here
    """
    if spec.case == 'B1':
        return chart_even_sodd_reduction(spec.n, spec.r, spec.s, spec.level, field).ideal
    if spec.case == 'Picard-I1':
        return picard_I1_ideal(field)
    if spec.case == 'Orth':
        return orthogonal_chart_ideal('rank2' if spec.n == 1 else 'rank4', spec.level, field)
    ring = chart_ring(spec, field)
    groups = structured_generators(spec, field)
    return Ideal.of(ring, prune(g for group in groups.values() for g in group))


# Spin constraints

def _f1_coordinates(n):
    """Position in (f, πf) coordinates of each vector of the basis f₁, πf₁, πf₂..πf_{n−1}, f_n, πf_n, f₂..f_{n−1}."""
    return ([0, n] + [n + k - 1 for k in range(2, n)]
            + [n - 1, 2 * n - 1] + [k - 1 for k in range(2, n)])


def _lattice_coordinates_chart(spec: ChartSpec, ring: RingSpec):
    """Graph of the chart in lattice coordinates and the lattice basis in split coordinates."""
    n = spec.n
    R = ring.ring.to_domain()
    K = dvr.laurent_domain(ring.field)
    if spec.case == 'A':
        X = symbol_matrix(ring, 'x', n)
        P = X.vstack(scalar_matrix(n, R.one, R))
        L = spin.unitary_lattice_matrix(n, 0, K)
    elif spec.case == 'B':
        X = symbol_matrix(ring, 'x', n)
        E = sign_matrix(n, R)
        P = (E * X).vstack(E)
        L = spin.unitary_lattice_matrix(n, n // 2, K)
    else:
        # ℱ = {v + Xv : v ∈ Λ'} with Λ' = ⟨f₁, πf₁, πf₂..πf_{n−1}⟩ and Λ'' its complement
        k = n - 2
        X = (symbol_matrix(ring, 't', 2).hstack(symbol_matrix(ring, 'b', 2, k))
             .vstack(symbol_matrix(ring, 'c', k, 2).hstack(symbol_matrix(ring, 'y', k))))
        rows = scalar_matrix(n, R.one, R).vstack(X).to_list()
        placed = [None] * (2 * n)
        for i, c in enumerate(_f1_coordinates(n)):
            placed[c] = rows[i]
        P = _dm(placed, R)
        L = spin.unitary_lattice_matrix(n, n // 2, K)
    return P, spin.to_split(L, n)


def _to_chart_ring(f, ring):
    return transfer(f, ring.ring)


def plucker_constraints(P: DomainMatrix, L_split: DomainMatrix, label, ring: RingSpec) -> List[object]:
    """
    Linear conditions on the maximal minors w of P expressing that w lies in
    the O-span of the label eigen-lattice: w_R − Σ_q Y[R, q]·w_{P_q} for every
    non-pivot R, with unit denominators cleared.
    """
    n = P.shape[1]
    Y, pivots = spin.lattice_pm_basis(L_split, n, label)
    w = [row[0] for row in spin.plucker_vector(P).to_list()]
    Yrows = Y.to_list()
    out = []
    for R_ in range(len(w)):
        if R_ in pivots:
            continue
        coeffs = Yrows[R_]
        den = None
        for c in coeffs:
            if c:
                den = c.denom if den is None else den.lcm(c.denom)
        if den is None:
            constraint = w[R_]
        else:
            constraint = _to_chart_ring(den, ring) * w[R_]
            for q, c in enumerate(coeffs):
                if c:
                    constraint -= _to_chart_ring(c.numer * den.exquo(c.denom), ring) * w[pivots[q]]
        if constraint:
            out.append(constraint)
    return out


def spin_constraints(spec: ChartSpec, field: CoefficientField = RATIONALS) -> List[object]:
    """
    Plücker constraints putting ∧ⁿℱ in the (−1)^s eigen-lattice of the chart's
    base lattice. Case A uses the graph [X; I] on Λ₀; case B the graph
    [E·X; E] on Λ_m in the basis (f, πf); case B1 the graph of
    X = [[T, B], [C, Y]] from Λ' to Λ'' at ℱ₁, also on Λ_m.
    """
    if spec.case == 'Orth':
        return _orthogonal_spin(spec.n, field)
    if spec.case not in ('A', 'B', 'B1'):
        raise ValueError(f"chart case {spec.case} has no graph parameterization for the spin condition")
    ring = chart_ring(spec.at_level('naive'), field)
    P, L_split = _lattice_coordinates_chart(spec, ring)
    return plucker_constraints(P, L_split, spin.spin_sign(spec.s), ring)


def point_satisfies_spin(n, r, s, point='pi-lattice', field: CoefficientField = RATIONALS) -> bool:
    """
    Spin condition at a named point.

    'pi-lattice' is ℱ = π·Λ_m (n even): the origin of the case B chart at
    u = 0. 'f1' is ℱ₁ = ⟨f₁, πf₁, πf₂, …, πf_{n−1}⟩ (n even, s odd): the
    origin of the case B1 chart at u = 0. 'standard' is the generic point
    ⟨B_1..B_m, B_{n+1}..B_{n+m}⟩ for n even, or ⟨B_1..B_{m+1},
    B_{n+1}..B_{n+m}⟩ for n odd, in the split basis; its signature is
    (m, m) resp. (m+1, m).
    """
    m = n // 2
    if point in ('pi-lattice', 'f1'):
        spec = ChartSpec('B' if point == 'pi-lattice' else 'B1', n, r, s, 'naive')
        ring = chart_ring(spec, field)
        zero = [0] * len(ring.names)
        return all(not c(*zero) for c in spin_constraints(spec, field))
    if point == 'standard':
        expected = (m, m) if n % 2 == 0 else (m + 1, m)
        if (r, s) != expected:
            raise ValueError(f"the standard point has signature {expected}, got ({r}, {s})")
        K = dvr.laurent_domain(field)
        chosen = list(range(m + n % 2)) + list(range(n, n + m))
        W = spin.coordinate_subspace([c + 1 for c in chosen], n, K)
        if not (W.transpose() * spin.split_gram(n, K) * W).is_zero_matrix:
            raise ValueError("standard point is not isotropic")
        return spin.in_eigenspace(W, spin.spin_sign(s))
    raise ValueError(f"unknown point {point!r}; expected 'pi-lattice', 'f1' or 'standard'")


# The even n, odd s reduction

def _reduction_names(n):
    k = n - 2
    return (('t11', 't12', 't21', 't22')
            + tuple(f'b{i}{j}' for i in (1, 2) for j in range(1, k + 1))
            + tuple(f'c{i}{j}' for i in range(1, k + 1) for j in (1, 2))
            + matrix_names(k, 'y'))


@dataclass
class EvenOddReduction:
    """
    The chart at ℱ₁ and its identification with a smaller case B chart.

    Attributes:
    -----------
    ideal : Ideal
        Full chart ideal in (T, B, C, Y, u)
    reduced : Ideal
        Image after solving for t12, t21, t22, B₁ and C
    y_ideal : Ideal
        chart_ideal(B, n − 2, r − 1, s − 1) moved into the reduced ring
    free_variables : tuple of str
        x = t11 and B₂, which no reduced generator involves
    verified : bool
        reduced and y_ideal agree and the free variables are free
    """
    ideal: Ideal
    reduced: Ideal
    y_ideal: Ideal
    free_variables: Tuple[str, ...]
    verified: bool


def _two_by_two_symplectic(R):
    return _dm([[R.zero, -R.one], [R.one, R.zero]], R)


def chart_even_sodd_reduction(n, r, s, level='wedge', field: CoefficientField = RATIONALS,
                              budget: Budget = DEFAULT_BUDGET, verify=False) -> EvenOddReduction:
    """
    Chart at ℱ₁ = ⟨f₁, πf₁, πf₂, …, πf_{n−1}⟩ for n even and s odd.

    X = [[T, B], [C, Y]] with SXᵗ = XS for S = diag(J₂ᵗ, J_{n−2}),
    Y² = u²I, B₁ = B₂Y, char_Y = (T − u)^{s−1}(T + u)^{r−1}, at levels
    wedge and spin the minor conditions on Y ± uI, and at level spin the
    Plücker constraints of the graph. Solving the linear equations
    leaves chart_ideal(B, n − 2, r − 1, s − 1) in Y times an affine space
    in x = t11 and B₂.
    """
    ChartSpec('B1', n, r, s, level)
    k = n - 2
    ring = RingSpec(_reduction_names(n) + (U,), field)
    R = ring.ring.to_domain()
    u = ring.var(U)
    T = symbol_matrix(ring, 't', 2)
    B = symbol_matrix(ring, 'b', 2, k)
    C = symbol_matrix(ring, 'c', k, 2)
    Y = symbol_matrix(ring, 'y', k)
    X = T.hstack(B).vstack(C.hstack(Y))
    J2 = _two_by_two_symplectic(R)
    Jk = symplectic_form(k, R)
    zero_2k = _dm([[R.zero] * k for _ in range(2)], R)
    S = J2.transpose().hstack(zero_2k).vstack(zero_2k.transpose().hstack(Jk))
    gens = entries(S * X.transpose() - X * S)
    gens += entries(Y * Y - scalar_matrix(k, u ** 2, R))
    Brows = B.to_list()
    B2Y = (_dm([Brows[1]], R) * Y).to_list()[0]
    gens += [a - b for a, b in zip(Brows[0], B2Y)]
    gens += charpoly_conditions(Y, u, r - 1, s - 1)
    if level in ('wedge', 'spin') and r != s:
        gens += minors(Y - scalar_matrix(k, u, R), r) + minors(Y + scalar_matrix(k, u, R), s)
    if level == 'spin':
        gens += [transfer(g, ring.ring) for g in spin_constraints(ChartSpec('B1', n, r, s, 'spin'), field)]
    full = Ideal.of(ring, prune(gens))

    # solve t12 = t21 = 0, t22 = t11, B₁ = B₂Y, C = J_k·Bᵗ·J₂
    var = ring.var
    B_solved = _dm([B2Y, Brows[1]], R)
    C_solved = (Jk * B_solved.transpose() * J2).to_list()
    replacements = [(var('t12'), R.zero), (var('t21'), R.zero), (var('t22'), var('t11'))]
    replacements += [(var(f'b1{j}'), B2Y[j - 1]) for j in range(1, k + 1)]
    replacements += [(var(f'c{i}{j}'), C_solved[i - 1][j - 1]) for i in range(1, k + 1) for j in (1, 2)]
    dependent = ['t12', 't21', 't22'] + [f'b1{j}' for j in range(1, k + 1)] + \
                [f'c{i}{j}' for i in range(1, k + 1) for j in (1, 2)]
    reduced_spec = ring.without(dependent)
    reduced_polys = prune(transfer(g.compose(replacements), reduced_spec.ring) for g in full.gens)
    reduced = Ideal.of(reduced_spec, reduced_polys)
    small = chart_ideal(ChartSpec('B', k, r - 1, s - 1, level), field)
    renamed = {f'x{i}{j}': f'y{i}{j}' for i in range(1, k + 1) for j in range(1, k + 1)}
    y_ideal = Ideal.of(reduced_spec, [_rename(g, renamed, reduced_spec) for g in small.gens])
    free = ('t11',) + tuple(f'b2{j}' for j in range(1, k + 1))
    verified = False
    if verify:
        free_ok = not any(any(m[reduced_spec.names.index(v)] for m in g.itermonoms())
                          for g in reduced.gens for v in free)
        verified = free_ok and same_ideal(reduced, y_ideal, budget)
    return EvenOddReduction(full, reduced, y_ideal, free, verified)


def _rename(f, mapping, target: RingSpec):
    names = [s.name for s in f.ring.symbols]
    index = [target.names.index(mapping.get(nm, nm)) for nm in names]
    terms = {}
    for monom, coeff in f.iterterms():
        new = [0] * len(target.names)
        for i, e in zip(index, monom):
            new[i] += e
        terms[tuple(new)] = coeff
    return target.ring.from_dict(terms)


# Picard surfaces, I = {1}

PICARD_NAMES = ('a', 'b', 'c', 'd', 'p', 'q', 'x', 'y', 'x4')


@dataclass
class PicardReport:
    """
    Outcome of the Picard I = {1} computation.

    Attributes:
    -----------
    sign : int or None
        ε with X₄ = ε·u on the generic fiber, None if neither sign holds
    eliminated_is_zero : bool
        Elimination of a, b, c, d, p, q after X₄ = ε·u leaves the zero ideal
    lu_identity : bool
        The upper-left 2 × 2 block of ᵗA·D·A equals (x², xy; xy, y²) + (−2c, a−d; a−d, 2b)
    smooth_samples : int
        Sampled points where the Jacobian has corank 2
    samples : int
        Points sampled
    """
    sign: Optional[int]
    eliminated_is_zero: bool
    lu_identity: bool
    smooth_samples: int = 0
    samples: int = 0

    @property
    def smooth(self):
        return self.samples > 0 and self.smooth_samples == self.samples


def _picard_matrices(ring: RingSpec):
    R = ring.ring.to_domain()
    v = ring.var
    u = v(U)
    X = _dm([[v('a'), v('b'), v('p')], [v('c'), v('d'), v('q')], [v('x'), v('y'), v('x4')]], R)
    Kmat = _dm([[R.zero] * 3, [R.zero] * 3, [R.zero, R.zero, R.one]], R)
    H = _dm([[R.zero, R.one, R.zero], [-R.one, R.zero, R.zero], [R.zero] * 3], R)
    isotropy = X.transpose() * Kmat * X + H.transpose() * X + X.transpose() * H - Kmat * (u ** 2)
    return X, isotropy, u


def picard_I1_ideal(field: CoefficientField = RATIONALS) -> Ideal:
    """
    The 3 × 3 system of the I = {1} chart: ᵗX K X + ᵗH X + ᵗX H − u²K = 0,
    X² = u²I and char_X = (T − u)(T + u)², in the basis where A = [X; I].
    """
    ring = RingSpec(PICARD_NAMES + (U,), field)
    X, isotropy, u = _picard_matrices(ring)
    R = X.domain
    gens = entries(isotropy) + entries(X * X - scalar_matrix(3, u ** 2, R)) + charpoly_conditions(X, u, 2, 1)
    return Ideal.of(ring, prune(gens))


def picard_sample_point(x, y, u, sign, p):
    """The point of the I = {1} chart over (x, y, u) ∈ F_p³ with X₄ = sign·u."""
    inv2 = pow(2, -1, p)
    x4 = sign * u
    a = -x * y * inv2 - x4
    values = {
        'a': a, 'b': -y * y * inv2, 'c': x * x * inv2, 'd': a + x * y,
        'p': -y * x4, 'q': x * x4, 'x': x, 'y': y, 'x4': x4, U: u,
    }
    return [values[name] % p for name in PICARD_NAMES + (U,)]


def picard_I1_chart(field: CoefficientField = CoefficientField(3), samples=50, seed=42,
                    budget: Budget = DEFAULT_BUDGET) -> Tuple[Ideal, PicardReport]:
    """
    Build the I = {1} chart and check its structure: the generic value of
    X₄, elimination down to the free variables (x, y), the block identity
    for the upper-left corner of the isotropy matrix, and the Jacobian
    corank at random F_p-points.
    """
    I = picard_I1_ideal(field)
    ring = I.spec
    x4, u = ring.var('x4'), ring.var(U)
    generic = saturate(I, u, budget)
    sign = None
    for eps in (1, -1):
        if radical_membership(x4 - eps * u, generic, budget):
            sign = eps
            break
    eliminated_is_zero = False
    smooth = 0
    taken = 0
    if sign is not None:
        fixed = _fix_x4(I, sign, budget)
        rest = eliminate(fixed, ['a', 'b', 'c', 'd', 'p', 'q'], budget)
        eliminated_is_zero = rest.is_zero
        if field.modulus is not None:
            p = field.modulus
            rng = np.random.default_rng(seed)
            variables = ['a', 'b', 'c', 'd', 'p', 'q', 'x', 'y']
            for _ in range(samples):
                xv, yv, uv = (int(t) for t in rng.integers(0, p, size=3))
                point = picard_sample_point(xv, yv, uv, sign, p)
                taken += 1
                on_chart = all(not g(*point) for g in I.gens)
                if on_chart and jacobian_corank(list(fixed.gens), variables, _drop_x4(point)) == 2:
                    smooth += 1
    X, isotropy, _ = _picard_matrices(ring)
    v = ring.var
    block = [row[:2] for row in isotropy.to_list()[:2]]
    expected = [[v('x') ** 2 - 2 * v('c'), v('x') * v('y') + v('a') - v('d')],
                [v('x') * v('y') + v('a') - v('d'), v('y') ** 2 + 2 * v('b')]]
    lu = block == expected
    return I, PicardReport(sign, eliminated_is_zero, lu, smooth, taken)


def _fix_x4(I: Ideal, sign, budget):
    """Impose X₄ = sign·u by substitution, dropping x4 from the ring."""
    target = I.spec.without(['x4'])
    u = I.spec.var(U)
    polys = [transfer(g.compose(I.spec.var('x4'), sign * u), target.ring) for g in I.gens]
    return ideal_from(target, [f for f in polys if f], budget)


def _drop_x4(point):
    index = PICARD_NAMES.index('x4')
    return point[:index] + point[index + 1:]


# Orthogonal examples

def _orthogonal_ring(n, level, field):
    if n == 1:
        names = ('a', 'b', 'c', 'd') + (('eps',) if level == 'spin' else ()) + (U,)
    else:
        names = ('x2', 'x3', 'y2', 'y3', U)
    return RingSpec(names, field)


def _orthogonal_spin(n, field):
    if n == 1:
        ring = _orthogonal_ring(1, 'spin', field)
        a, b, c, d, eps, _ = ring.gens
        return [eps ** 2 - 1, (1 + eps) * b, (1 + eps) * d, (1 - eps) * a, (1 - eps) * c]
    ring = _orthogonal_ring(2, 'spin', field)
    R = ring.ring.to_domain()
    K = dvr.laurent_domain(field)
    x2, x3, y2, y3, _ = ring.gens
    # ℱ₋₁ in the basis e1, e2, e3, pe4 of Λ₋₁
    graph_minus = _dm([[R.one, R.zero], [x2, y2], [x3, y3], [R.zero, R.one]], R)
    # ℱ₁ in the basis e1/p, e2, e3, e4 of Λ₁: the annihilator of ℱ₋₁
    graph_plus = _dm([[-y3, -y2], [R.one, R.zero], [R.zero, R.one], [-x3, -x2]], R)
    constraints = []
    for graph, index in ((graph_minus, -1), (graph_plus, 1)):
        L = spin.orthogonal_lattice_matrix(2, index, K)
        constraints += plucker_constraints(graph, L, spin.PLUS, ring)
    return prune(constraints)


def orthogonal_chart_ideal(which, level='naive', field: CoefficientField = RATIONALS) -> Ideal:
    """
    The two orthogonal examples over k[u] with p ↦ u².

    rank2 (n = 1): the bihomogeneous ideal (ab, cd, bc − u²ad) on
    P¹ × P¹; the spin level adds the idempotent variable ε with ε² = 1 and
    (1+ε)b, (1+ε)d, (1−ε)a, (1−ε)c, splitting the scheme into its two
    spin components.

    rank4 (n = 2): the chart at the singular point, where the chain
    inclusions give (x₂x₃, y₂y₃, x₂y₂, x₃y₃, x₂y₃ + x₃y₂ + u²); the spin
    level adds the Plücker constraints from Λ₋₁ and Λ₁.
    """
    if which not in ('rank2', 'rank4'):
        raise ValueError(f"unknown orthogonal example {which!r}")
    if level not in ('naive', 'spin'):
        raise ValueError(f"orthogonal examples have levels naive and spin, got {level!r}")
    n = 1 if which == 'rank2' else 2
    ring = _orthogonal_ring(n, level, field)
    v = ring.var
    u = v(U)
    if n == 1:
        a, b, c, d = v('a'), v('b'), v('c'), v('d')
        gens = [a * b, c * d, b * c - u ** 2 * a * d]
    else:
        x2, x3, y2, y3 = v('x2'), v('x3'), v('y2'), v('y3')
        gens = [x2 * x3, y2 * y3, x2 * y2, x3 * y3, x2 * y3 + x3 * y2 + u ** 2]
    if level == 'spin':
        gens += [transfer(g, ring.ring) for g in _orthogonal_spin(n, field)]
    return Ideal.of(ring, prune(gens))


def _projective_line(p):
    return [(1, t) for t in range(p)] + [(0, 1)]


def rank2_special_points(level, p) -> List[Tuple[int, ...]]:
    """F_p-points of the special fiber of the rank 2 example on P¹ × P¹ (and ε at level spin)."""
    I = orthogonal_chart_ideal('rank2', level, CoefficientField(p))
    names = I.spec.names
    found = []
    eps_values = range(p) if level == 'spin' else [None]
    for (a, b), (c, d) in product(_projective_line(p), repeat=2):
        for e in eps_values:
            values = {'a': a, 'b': b, 'c': c, 'd': d, 'eps': e, U: 0}
            point = [values[nm] for nm in names]
            if all(not g(*point) for g in I.gens):
                found.append(tuple(x for x in point[:-1]))
    return found


RANK2_CHARTS = (('a', 'c'), ('a', 'd'), ('b', 'c'), ('b', 'd'))


def rank2_affine_charts(level='naive', field: CoefficientField = RATIONALS,
                           budget: Budget = DEFAULT_BUDGET) -> Dict[Tuple[str, str], Ideal]:
    """The four standard affine charts of P¹ × P¹, each setting one coordinate per factor to 1."""
    I = orthogonal_chart_ideal('rank2', level, field)
    return {chart: substitute(I, {chart[0]: 1, chart[1]: 1}, budget) for chart in RANK2_CHARTS}


def rank2_flatness(level='naive', field: CoefficientField = RATIONALS,
                      budget: Budget = DEFAULT_BUDGET):
    """Flatness chart by chart; returns (flat, {chart: verdict})."""
    verdicts = {chart: is_flat_over_dvr(J, U, budget)
                for chart, J in rank2_affine_charts(level, field, budget).items()}
    return all(verdicts.values()), verdicts


def rank4_axis_ideals(field: CoefficientField = RATIONALS) -> List[Ideal]:
    """The four coordinate lines in (x₂, x₃, y₂, y₃)."""
    spec = RingSpec(('x2', 'x3', 'y2', 'y3'), field)
    return [Ideal.of(spec, [g for j, g in enumerate(spec.gens) if j != i]) for i in range(4)]


@dataclass
class Rank4Report:
    """Special fibers of the rank 4 example at both levels."""
    spin_radical_ok: bool
    spin_dim: int
    naive_dim: int
    naive_components: int
    naive_radical_ok: bool


def rank4_report(field: CoefficientField = CoefficientField(3),
                    budget: Budget = DEFAULT_BUDGET) -> Rank4Report:
    """
    Compare the spin special fiber with (x₂, y₃, y₂x₃), and the naive special
    fiber with the union of the four coordinate lines.
    """
    spin_fiber = special_fiber(orthogonal_chart_ideal('rank4', 'spin', field), U, budget)
    naive_fiber = special_fiber(orthogonal_chart_ideal('rank4', 'naive', field), U, budget)
    spec = spin_fiber.spec
    x2, x3, y2, y3 = spec.gens
    two_lines = Ideal.of(spec, [x2, y3, y2 * x3])
    axes = rank4_axis_ideals(field)
    on_fiber = sum(1 for A in axes
                   if all(contains(A, transfer(g, A.ring), budget) for g in naive_fiber.gens)
                   and krull_dim(A, budget) == 1)
    union = axes[0]
    for A in axes[1:]:
        union = intersect(union, A, budget)
    return Rank4Report(
        spin_radical_ok=radicals_agree(spin_fiber, two_lines, budget),
        spin_dim=krull_dim(spin_fiber, budget),
        naive_dim=krull_dim(naive_fiber, budget),
        naive_components=on_fiber,
        naive_radical_ok=radicals_agree(naive_fiber, union, budget),
    )


# Level chain

@dataclass
class LevelChainReport:
    """Containment naive ⊆ wedge ⊆ spin and agreement after inverting u."""
    spec: ChartSpec
    levels: Tuple[str, ...]
    contained: bool
    generic_agreement: bool


def level_chain_report(spec: ChartSpec, field: CoefficientField = RATIONALS,
                       budget: Budget = DEFAULT_BUDGET) -> LevelChainReport:
    if spec.case not in ('A', 'B'):
        raise ValueError(f"level chains are defined for cases A and B, got {spec.case}")
    levels = LEVELS
    ideals = [chart_ideal(spec.at_level(level), field) for level in levels]
    contained = all(contains(groebner_basis(bigger, budget), g, budget)
                    for smaller, bigger in zip(ideals, ideals[1:]) for g in smaller.gens)
    u = ideals[0].spec.var(U)
    generic = saturate(ideals[0], u, budget)
    agreement = all(contains(generic, g, budget) for J in ideals[1:] for g in J.gens)
    return LevelChainReport(spec, levels, contained, agreement)


def wedge_special_fiber_dim(n, r, s, field: CoefficientField = CoefficientField(3),
                            budget: Budget = DEFAULT_BUDGET) -> int:
    case = 'A' if n % 2 else 'B'
    return krull_dim(special_fiber(chart_ideal(ChartSpec(case, n, r, s, 'wedge'), field), U, budget), budget)


def chart_flatness(spec: ChartSpec, field: CoefficientField = CoefficientField(3),
                   budget: Budget = DEFAULT_BUDGET):
    return is_flat_over_dvr(chart_ideal(spec, field), U, budget)


def count_special_points(spec: ChartSpec, p) -> int:
    """F_p-points of the special fiber of an affine chart (small charts only)."""
    I = special_fiber(chart_ideal(spec, CoefficientField(p)), U)
    return count_points(I, p)


if __name__ == "__main__":
    print("Chart Ideal Test")
    print("=" * 60)
    spec = ChartSpec('A', 3, 2, 1, 'wedge')
    groups = structured_generators(spec.at_level('naive'))
    print(f"Case A n=3 naive groups: {[len(g) for g in groups.values()]}")
    print(f"Rank 4 spin constraints: {_orthogonal_spin(2, RATIONALS)}")
    print(f"πΛ_2 satisfies spin for s=2: {point_satisfies_spin(4, 2, 2)}")
    try:
        I, report = picard_I1_chart(samples=5)
        print(f"Picard I={{1}}: sign {report.sign}, eliminated zero {report.eliminated_is_zero}")
    except BudgetExhausted as exc:
        print(f"⚠️  {exc}")
    print("\n" + "=" * 60)
