"""
Nilpotent orbits for the symmetric pairs (gl_n, o_n) and (gl_n, sp_n).

The orbit of type (2^s, 1^r) is only handled through its candidate
closure equations X² = 0, the symmetry condition, char_X = Tⁿ and the
vanishing of (s+1)- and (r+1)-minors.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src import charts
from src.exactalg import (
    DEFAULT_BUDGET, RATIONALS, Budget, CoefficientField, Ideal, RingSpec, krull_dim,
    radicals_agree, same_ideal, special_fiber,
)

ORTHOGONAL = 'orthogonal'
SYMPLECTIC = 'symplectic'


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of_type(cls, s, r):
        """(2^s, 1^r)."""
        return cls((2,) * s + (1,) * r)

    @property
    def total(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return '(' + ','.join(map(str, self.parts)) + ')'


def double_partition(lam: Partition) -> Partition:
    """(a_1, a_1, a_2, a_2, ...)."""
    return Partition(tuple(a for a in lam.parts for _ in range(2)))


def transpose_partition(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for a in lam.parts if a > i) for i in range(lam.parts[0])))


def partitions_of(n) -> List[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    def build(rest, largest) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in build(rest - first, first):
                yield (first,) + tail
    return [Partition(p) for p in build(n, n)]


def dominance_leq(rho: Partition, other: Partition) -> bool:
    """ρ ≤ ρ′ iff every partial sum of ρ is at most the one of ρ′."""
    if rho.total != other.total:
        raise ValueError(f"cannot compare partitions of {rho.total} and {other.total}")
    width = max(len(rho), len(other))
    a = np.cumsum(list(rho.parts) + [0] * (width - len(rho)))
    b = np.cumsum(list(other.parts) + [0] * (width - len(other)))
    return bool(np.all(a <= b))


def covered_partitions(rho: Partition) -> List[Partition]:
    """Partitions strictly below ρ with nothing strictly in between."""
    below = [q for q in partitions_of(rho.total) if q != rho and dominance_leq(q, rho)]
    return [q for q in below
            if not any(t != q and dominance_leq(q, t) for t in below)]


def orbit_dim(r, s) -> int:
    """Dimension of the fixed points of the (2^s, 1^r) orbit: rs."""
    if min(r, s) < 0:
        raise ValueError(f"signature ({r}, {s}) must be nonnegative")
    return r * s


@dataclass(frozen=True)
class SymmetricPairTag:
    """orthogonal: Xᵗ = HXH; symplectic: Xᵗ = −JXJ (n even)."""
    kind: str

    def __post_init__(self):
        if self.kind not in (ORTHOGONAL, SYMPLECTIC):
            raise ValueError(f"unknown symmetric pair {self.kind!r}")

    def check(self, n, s):
        if self.kind == SYMPLECTIC and (n % 2 or s % 2):
            raise ValueError(f"the symplectic pair needs n and s even, got n={n} s={s}; "
                             "for odd s the fixed points of the orbit are empty")

    @property
    def chart_case(self):
        return 'A' if self.kind == ORTHOGONAL else 'B'


def orbit_closure_ideal(n, s, pair: SymmetricPairTag, field: CoefficientField = RATIONALS) -> Ideal:
    """
    Candidate ideal of the closure of the (2^s, 1^r) orbit: X² = 0, the
    symmetry of the pair, char_X(T) = Tⁿ, ∧^{s+1}X = 0 and ∧^{r+1}X = 0.
    """
    r = n - s
    if not 0 <= s <= r:
        raise ValueError(f"need 0 ≤ s ≤ n − s, got n={n} s={s}")
    pair.check(n, s)
    spec = RingSpec(charts.matrix_names(n), field)
    R = spec.ring.to_domain()
    X = charts.symbol_matrix(spec, 'x', n)
    if pair.kind == ORTHOGONAL:
        H = charts.antidiagonal(n, R)
        symmetry = X.transpose() - H * X * H
    else:
        J = charts.symplectic_form(n, R)
        symmetry = X.transpose() + J * X * J
    gens = charts.entries(X * X) + charts.entries(symmetry)
    gens += charts.charpoly_conditions(X, R.zero, r, s)
    gens += charts.minors(X, s + 1) + charts.minors(X, r + 1)
    return Ideal.of(spec, charts.prune(gens))


@dataclass
class OrbitComparison:
    """
    Special fiber of the wedge chart next to the orbit-closure ideal.

    The reducedness question stays open; `label` records the size, field
    and budget the evidence was gathered at.
    """
    n: int
    r: int
    s: int
    pair: str
    fiber_dim: int
    orbit_closure_dim: int
    expected_dim: int
    radicals_agree: bool
    same_ideal: bool
    label: str

    @property
    def consistent(self):
        return self.radicals_agree and self.fiber_dim == self.orbit_closure_dim == self.expected_dim


def special_fiber_vs_orbit(n, r, s, pair: SymmetricPairTag, field: CoefficientField = CoefficientField(3),
                           budget: Budget = DEFAULT_BUDGET) -> OrbitComparison:
    pair.check(n, s)
    case = pair.chart_case
    if (case == 'A') != (n % 2 == 1):
        raise ValueError(f"the {pair.kind} pair arises from the n {'odd' if case == 'A' else 'even'} chart, got n={n}")
    chart = charts.chart_ideal(charts.ChartSpec(case, n, r, s, 'wedge'), field)
    fiber = special_fiber(chart, charts.U, budget)
    orbit = orbit_closure_ideal(n, s, pair, field)
    return OrbitComparison(
        n=n, r=r, s=s, pair=pair.kind,
        fiber_dim=krull_dim(fiber, budget),
        orbit_closure_dim=krull_dim(orbit, budget),
        expected_dim=orbit_dim(r, s),
        radicals_agree=radicals_agree(fiber, orbit, budget),
        same_ideal=same_ideal(fiber, orbit, budget),
        label=f"evidence at (n={n}, {field.label}, pairs≤{budget.max_pairs})",
    )


def _antidiagonal(k):
    return np.fliplr(np.eye(k, dtype=np.int64))


def _symplectic(k):
    m = k // 2
    J = np.zeros((k, k), dtype=np.int64)
    if m:
        J[:m, m:] = -_antidiagonal(m)
        J[m:, :m] = _antidiagonal(m)
    return J


def _isotropic_frame(n, s, pair, p, rng):
    """U = [I_s; B; C] with UᵗGU = 0 for the form G of the pair, over F_p."""
    inv2 = pow(2, -1, p)
    middle = n - 2 * s
    B = rng.integers(0, p, size=(middle, s))
    Hs = _antidiagonal(s)
    if pair.kind == ORTHOGONAL:
        Q = B.T @ _antidiagonal(middle) @ B if middle else np.zeros((s, s), dtype=np.int64)
        K = rng.integers(0, p, size=(s, s))
        M = -Q * inv2 + (K - K.T)
    else:
        Q = B.T @ _symplectic(middle) @ B if middle else np.zeros((s, s), dtype=np.int64)
        K = rng.integers(0, p, size=(s, s))
        M = Q * inv2 + (K + K.T)
    C = Hs @ M
    return np.vstack([np.eye(s, dtype=np.int64), B, C]) % p


def random_orbit_point(n, s, pair: SymmetricPairTag, p, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    A random F_p-point of the orbit closure: X = H·U·A·Uᵗ with A symmetric
    (orthogonal) or X = −J·U·A·Uᵗ with A alternating (symplectic), where U
    spans an isotropic s-dimensional subspace. Then X² = 0 and rank X ≤ s.
    """
    pair.check(n, s)
    if p == 2:
        raise ValueError("random orbit points need an odd prime")
    rng = rng if rng is not None else np.random.default_rng()
    if s == 0:
        return np.zeros((n, n), dtype=np.int64)
    U = _isotropic_frame(n, s, pair, p, rng)
    A = rng.integers(0, p, size=(s, s))
    if pair.kind == ORTHOGONAL:
        X = _antidiagonal(n) @ U @ (A + A.T) @ U.T
    else:
        X = -_symplectic(n) @ U @ (A - A.T) @ U.T
    return X % p


def vanishes_at(I: Ideal, X: np.ndarray, p) -> bool:
    point = [int(v) % p for v in X.flatten()]
    return all(int(g(*point)) % p == 0 for g in I.gens)


def sample_orbit_points(n, s, pair: SymmetricPairTag, p, samples=20, seed=42) -> Tuple[int, int]:
    """(points on the candidate variety, points sampled)."""
    I = orbit_closure_ideal(n, s, pair, CoefficientField(p))
    rng = np.random.default_rng(seed)
    hits = sum(1 for _ in range(samples) if vanishes_at(I, random_orbit_point(n, s, pair, p, rng), p))
    return hits, samples


if __name__ == "__main__":
    print("Orbit Test")
    print("=" * 60)
    lam = Partition((2, 1))
    print(f"double {lam} → {double_partition(lam)}, transpose → {transpose_partition(lam)}")
    print(f"covered by (2,2,1,1): {covered_partitions(Partition((2, 2, 1, 1)))}")
    print(f"orbit points (n=3, s=1): {sample_orbit_points(3, 1, SymmetricPairTag(ORTHOGONAL), 5)}")
    print("\n" + "=" * 60)
