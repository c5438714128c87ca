"""
Lifting points of the generic fiber to lattices, and relative positions
of lattice chains.

A lift is an O_E-submodule ℱ_S of Λ ⊗ O_E, E = k((u)) with u² = π₀, in the
lattice coordinates (f_1..f_n, πf_1..πf_n). Relative positions are read off
from volumes of sums of lattices, which only needs elementary divisors.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src import dvr, spin
from src.exactalg import RATIONALS, CoefficientField
from src.weyl import AffineWeylElement, extreme_elements, translation


class PrecisionExhausted(RuntimeError):
    """The valuations involved exceed the requested u-adic precision."""

    def __init__(self, needed, precision):
        self.needed = needed
        self.precision = precision
        super().__init__(f"relative position needs u-adic precision {needed}, "
                         f"only {precision} allowed; raise --precision")


@dataclass(frozen=True)
class StandardLattice:
    """Λ_i = span{π⁻¹e_1..π⁻¹e_i, e_{i+1}..e_n} over O_F."""
    n: int
    i: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    def matrix(self, K) -> DomainMatrix:
        """Basis f, πf in (e, πe) coordinates."""
        return spin.unitary_lattice_matrix(self.n, self.i, K)


def dual_subset(S, n) -> Tuple[int, ...]:
    """S* = {n + 1 − a : a ∈ S}."""
    return tuple(sorted(n + 1 - a for a in S))


@dataclass(frozen=True)
class LiftSubset:
    """
    S ⊆ {1..n} with S ∩ S* empty; |S| is the s of the signature.
    """
    n: int
    S: Tuple[int, ...]

    def __post_init__(self):
        S = tuple(sorted(int(a) for a in self.S))
        object.__setattr__(self, 'S', S)
        if len(set(S)) != len(S) or any(not 1 <= a <= self.n for a in S):
            raise ValueError(f"{S} is not a subset of 1..{self.n}")
        clash = set(S) & set(self.dual)
        if clash:
            raise ValueError(f"S ∩ S* must be empty, found {sorted(clash)}")

    @property
    def s(self):
        return len(self.S)

    @property
    def dual(self):
        return dual_subset(self.S, self.n)

    @property
    def rest(self):
        """R ∖ S with R = {1..n} ∖ S*."""
        taken = set(self.S) | set(self.dual)
        return tuple(a for a in range(1, self.n + 1) if a not in taken)


def valid_lift_subsets(n, s) -> List[LiftSubset]:
    out = []
    for S in combinations(range(1, n + 1), s):
        if not set(S) & set(dual_subset(S, n)):
            out.append(LiftSubset(n, S))
    return out


def lattice_pi(n, K) -> DomainMatrix:
    """π on (f, πf): [[0, u²I], [I, 0]]."""
    return spin.pi_matrix(n, K)


@dataclass
class LiftResult:
    """
    ℱ_S with the outcome of each validity check.

    Attributes:
    -----------
    subset : LiftSubset
    lattice : StandardLattice
    basis : DomainMatrix
        2n × n matrix, columns spanning ℱ_S in lattice coordinates
    checks : dict
        'pi_stable', 'rank', 'isotropic', 'charpoly' → bool
    """
    subset: LiftSubset
    lattice: StandardLattice
    basis: DomainMatrix
    checks: Dict[str, bool]

    @property
    def valid(self):
        return all(self.checks.values())


def lift_basis(subset: LiftSubset, K) -> DomainMatrix:
    """Columns f_a, πf_a (a ∈ S*) and πf_j − u·f_j (j ∈ R ∖ S)."""
    n = subset.n
    N = 2 * n
    u = dvr.u_power(K, 1)
    cols = []
    for a in subset.dual:
        cols.append({a - 1: K.one})
        cols.append({n + a - 1: K.one})
    for j in subset.rest:
        cols.append({n + j - 1: K.one, j - 1: -u})
    rows = [[col.get(i, K.zero) for col in cols] for i in range(N)]
    return DomainMatrix(rows, (N, len(cols)), K)


def _restriction(F: DomainMatrix, A: DomainMatrix) -> DomainMatrix:
    """M with A·F = F·M, for F of full column rank with A·F inside its span."""
    _, pivots = F.transpose().rref()
    pivots = list(pivots)
    cols = list(range(F.shape[1]))
    return F.extract(pivots, cols).inv() * (A * F).extract(pivots, cols)


def lift_point(subset: LiftSubset, r, s, lattice: StandardLattice,
               field: CoefficientField = RATIONALS) -> LiftResult:
    """
    Build ℱ^Λ_S and check π-stability, rank n (as a direct summand),
    isotropy for the alternating form, and that π has characteristic
    polynomial (T + u)^r (T − u)^s on it.
    """
    n = subset.n
    if lattice.n != n or r + s != n:
        raise ValueError(f"signature ({r}, {s}) and lattice rank {lattice.n} must match n={n}")
    if subset.s != s:
        raise ValueError(f"|S| = {subset.s} but s = {s}")
    K = dvr.laurent_domain(field)
    F = lift_basis(subset, K)
    Pi = lattice_pi(n, K)
    L = lattice.matrix(K)
    gram = L.transpose() * spin.unitary_alternating_gram(n, K) * L

    checks = {}
    checks['rank'] = F.rank() == n and dvr.reduce_mod_u(F).rank() == n
    checks['pi_stable'] = all(dvr.in_span((Pi * F).extract(list(range(2 * n)), [c]), F) for c in range(n))
    checks['isotropic'] = (F.transpose() * gram * F).is_zero_matrix
    if checks['pi_stable'] and checks['rank']:
        M = _restriction(F, Pi)
        u = dvr.u_power(K, 1)
        target = [K.one]
        for root, times in ((u, r), (-u, s)):
            for _ in range(times):
                target = [a + root * b for a, b in zip(target + [K.zero], [K.zero] + target)]
        checks['charpoly'] = list(M.charpoly()) == target
    else:
        checks['charpoly'] = False
    return LiftResult(subset, lattice, F, checks)


def lift_chain_matrix(subset: LiftSubset, K) -> DomainMatrix:
    """Closed form g_S = diag(u^c) with c = 2 on S, 1 on R ∖ S, 0 on S*; lift_chain derives it from ℱ_S."""
    exps = []
    for a in range(1, subset.n + 1):
        exps.append(2 if a in subset.S else 0 if a in subset.dual else 1)
    return dvr.diagonal([dvr.u_power(K, e) for e in exps], K)


# Relative position

def chain_lattice(n, j, K) -> DomainMatrix:
    """λ_j = π^{-q}·λ_l for j = qn + l, λ_l = diag(u⁻¹ on the first l, 1 after)."""
    q, l = divmod(j, n)
    return dvr.diagonal([dvr.u_power(K, -q - (1 if k < l else 0)) for k in range(n)], K)


@dataclass(frozen=True)
class GLRelativePosition:
    """w with w·e_l = u^{d_l}·e_{σ(l)}, σ and d 1-based in l."""
    sigma: Tuple[int, ...]
    d: Tuple[int, ...]

    @property
    def translation_by_target(self):
        """t_k = d_{σ⁻¹(k)}."""
        t = [0] * len(self.sigma)
        for k, dl in zip(self.sigma, self.d):
            t[k - 1] = dl
        return tuple(t)


def gl_relative_position(h: DomainMatrix, precision: Optional[int] = None) -> GLRelativePosition:
    """
    Relative position of λ• and h·λ• in the extended affine Weyl group of GL_n.

    The mixed second difference of χ(i, j) = vol(λ_i + h·λ_j) equals 1
    exactly at (σ(l), l + n·d_l); the window of j is bounded by the
    elementary divisors of h.

    Raises:
    -------
    PrecisionExhausted
        When an elementary divisor of h exceeds `precision` in absolute value
    """
    n = h.shape[0]
    K = h.domain
    divisors = dvr.elementary_divisors(h)
    needed = max(abs(e) for e in divisors)
    if precision is not None and needed > precision:
        raise PrecisionExhausted(needed, precision)
    qmin, qmax = divisors[0], divisors[-1]

    @lru_cache(maxsize=None)
    def chi(i, j):
        return sum(dvr.elementary_divisors(chain_lattice(n, i, K).hstack(h * chain_lattice(n, j, K))))

    sigma = [0] * n
    d = [0] * n
    found = 0
    for i in range(1, n + 1):
        for j in range(n * qmin + 1, n * qmax + n + 1):
            mixed = chi(i, j) - chi(i - 1, j) - chi(i, j - 1) + chi(i - 1, j - 1)
            if mixed == 1:
                l = (j - 1) % n + 1
                sigma[l - 1] = i
                d[l - 1] = (j - l) // n
                found += 1
    if found != n or sorted(sigma) != list(range(1, n + 1)):
        raise PrecisionExhausted(needed + 1, needed)
    return GLRelativePosition(tuple(sigma), tuple(d))


def to_unitary(position: GLRelativePosition) -> AffineWeylElement:
    """
    Restrict a GL_n relative position of self-dual chains to the unitary
    Iwahori-Weyl group: σ must commute with k ↦ n + 1 − k, and
    t_k + t_{n+1−k} = δ must be constant; the translation is t_k − δ/2 on
    the first m coordinates.
    """
    n = len(position.sigma)
    m = n // 2
    t = position.translation_by_target
    shifts = {t[k] + t[n - 1 - k] for k in range(n)}
    if len(shifts) != 1 or next(iter(shifts)) % 2:
        raise ValueError(f"translation {t} is not a unitary similitude")
    delta = next(iter(shifts))
    sigma = position.sigma
    if any(sigma[n - l] != n + 1 - sigma[l - 1] for l in range(1, n + 1)):
        raise ValueError(f"permutation {sigma} does not commute with k ↦ n + 1 − k")
    inverse = [0] * n
    for l, k in enumerate(sigma, start=1):
        inverse[k - 1] = l
    perm, signs = [], []
    for k in range(1, m + 1):
        l = inverse[k - 1]
        if l <= m:
            perm.append(l - 1)
            signs.append(1)
        else:
            perm.append(n - l)
            signs.append(-1)
    y = tuple(t[k] - delta // 2 for k in range(m))
    return AffineWeylElement(n, y, tuple(perm), tuple(signs))


def relative_position(g: DomainMatrix, g2: DomainMatrix, precision: Optional[int] = None) -> AffineWeylElement:
    """
    Relative position of the chains g·λ• and g2·λ• as an element of the
    unitary Iwahori-Weyl group.

    Parameters:
    -----------
    g, g2 : DomainMatrix
        n × n invertible matrices over k(u)
    precision : int, optional
        Largest absolute u-adic valuation allowed

    Returns:
    --------
    AffineWeylElement
    """
    if g.shape != g2.shape or g.shape[0] != g.shape[1]:
        raise ValueError(f"expected square matrices of one size, got {g.shape} and {g2.shape}")
    return to_unitary(gl_relative_position(g.inv() * g2, precision))


def lift_lattice(result: LiftResult) -> DomainMatrix:
    """
    O-basis of L_S in e-coordinates: the inverse image in λ_i of the
    reduction of ℱ_S under λ_i → λ_i/u²λ_i, where f_k and πf_k go to the
    k-th basis vector of λ_i and u times it.
    """
    n = result.subset.n
    K = result.basis.domain
    u = dvr.u_power(K, 1)
    lam = chain_lattice(n, result.lattice.i, K)
    reduced = dvr.reduce_mod_u(result.basis).to_list()
    lift = [[K.convert_from(reduced[k][c], K.domain) + u * K.convert_from(reduced[n + k][c], K.domain)
             for c in range(n)] for k in range(n)]
    spanned = DomainMatrix(lift, (n, n), K).hstack(dvr.diagonal([u ** 2] * n, K))
    return dvr.lattice_basis(lam * spanned)


def lift_chain(result: LiftResult) -> DomainMatrix:
    """
    g with L_S• = g·λ•, from the lattice L_S at the lift's vertex and
    (L_S)_j = t_j·L_S for the diagonal translations t_j.

    Raises:
    -------
    ValueError
        If L_S has no basis of multiples of the standard basis vectors
    """
    n = result.subset.n
    B = lift_lattice(result)
    rows = B.to_list()
    if any(rows[i][j] for i in range(n) for j in range(n) if i != j):
        raise ValueError(f"L_S for S = {result.subset.S} is not split by the standard basis")
    return B * chain_lattice(n, result.lattice.i, B.domain).inv()


@dataclass
class LiftSurvey:
    """Relative positions of every lift against the extreme elements."""
    n: int
    r: int
    s: int
    positions: Dict[Tuple[int, ...], AffineWeylElement]
    all_valid: bool

    @property
    def attained(self):
        return set(self.positions.values())

    @property
    def exhausts_extremes(self):
        return self.attained == set(extreme_elements(self.n, self.r, self.s))


def survey_lifts(n, r, s, precision: Optional[int] = None,
                 field: CoefficientField = RATIONALS) -> LiftSurvey:
    """
    Lift every valid S on Λ₀, check it, and record the relative position of
    λ• and the chain L_S• read off from the lift.
    """
    K = dvr.laurent_domain(field)
    ident = dvr.diagonal([K.one] * n, K)
    positions = {}
    all_valid = True
    for subset in valid_lift_subsets(n, s):
        result = lift_point(subset, r, s, StandardLattice(n, 0), field)
        all_valid &= result.valid
        positions[subset.S] = relative_position(ident, lift_chain(result), precision)
    return LiftSurvey(n, r, s, positions, all_valid)


def standard_lift_position(n, r, s, precision=None) -> Tuple[AffineWeylElement, AffineWeylElement]:
    """Relative position for S = [1, s] next to the translation by λ_s."""
    K = dvr.laurent_domain()
    subset = LiftSubset(n, tuple(range(1, s + 1)))
    ident = dvr.diagonal([K.one] * n, K)
    result = lift_point(subset, r, s, StandardLattice(n, 0))
    found = relative_position(ident, lift_chain(result), precision)
    return found, translation(n, (1,) * s + (0,) * (n // 2 - s))


if __name__ == "__main__":
    print("Lifting Test")
    print("=" * 60)
    result = lift_point(LiftSubset(3, (1,)), 2, 1, StandardLattice(3, 0))
    print(f"ℱ_{{1}} on Λ₀, n=3: {result.checks}")
    survey = survey_lifts(4, 3, 1)
    print(f"n=4, s=1: {len(survey.positions)} lifts, exhausts extremes: {survey.exhausts_extremes}")
    print("\n" + "=" * 60)
