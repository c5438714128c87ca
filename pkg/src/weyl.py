"""
Iwahori-Weyl group combinatorics for ramified unitary groups.

Elements act on the apartment in doubled coordinates y = 2x by
y ↦ σy + t, with σ a signed permutation and t ∈ Z^m. For n = 2m the
alcove walls are y_i ± y_j ∈ Z, y_i ∈ Z (type B_m); for n = 2m + 1 they are
y_i ± y_j ∈ Z, 2y_i ∈ Z (type C_m).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from sympy import Rational


@dataclass(frozen=True)
class AffineWeylElement:
    """
    y ↦ σy + t with (σy)_i = signs[i] · y[perm[i]] (perm 0-based).

    Attributes:
    -----------
    n : int
        Rank of the hermitian space
    t : tuple of int
        Translation in doubled coordinates
    perm, signs : tuple of int
        The finite signed permutation
    """
    n: int
    t: Tuple[int, ...]
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    @property
    def m(self):
        return self.n // 2

    @property
    def omega(self):
        """Component in Ω: parity of Σt for n even, always 0 for n odd."""
        return sum(self.t) % 2 if self.n % 2 == 0 else 0

    @property
    def is_translation(self):
        return self.perm == tuple(range(self.m)) and all(s == 1 for s in self.signs)

    def finite(self, v):
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def act(self, y, scale=1):
        """Image of the point scale⁻¹·y, returned at the same scale."""
        moved = self.finite(tuple(y))
        return tuple(a + scale * b for a, b in zip(moved, self.t))

    def __mul__(self, other):
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot multiply elements for n={self.n} and n={other.n}")
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        t = tuple(a + b for a, b in zip(self.finite(other.t), self.t))
        return AffineWeylElement(self.n, t, perm, signs)

    def inverse(self):
        perm = [0] * self.m
        signs = [0] * self.m
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        inv = AffineWeylElement(self.n, (0,) * self.m, tuple(perm), tuple(signs))
        return AffineWeylElement(self.n, tuple(-c for c in inv.finite(self.t)), inv.perm, inv.signs)

    def __repr__(self):
        word, omega = reduced_word(self)
        head = '·'.join(f's{k}' for k in word) or 'e'
        return head + ('·τ' if omega.omega else '')


def identity(n):
    m = n // 2
    return AffineWeylElement(n, (0,) * m, tuple(range(m)), (1,) * m)


def translation(n, coweight):
    m = n // 2
    coweight = tuple(int(c) for c in coweight)
    if len(coweight) != m:
        raise ValueError(f"coweight {coweight} must have {m} entries")
    return AffineWeylElement(n, coweight, tuple(range(m)), (1,) * m)


@dataclass(frozen=True)
class AffineData:
    """Root data, simple reflections and alcove geometry for one n."""
    n: int
    m: int
    root_type: str
    positive_roots: np.ndarray
    positive_coroots: Tuple[Tuple[int, ...], ...]
    simple: Tuple[AffineWeylElement, ...]
    tau: Optional[AffineWeylElement]
    vertices: Tuple[Tuple[Rational, ...], ...]
    scale: int
    barycentre: Tuple[int, ...]

    @property
    def omega_order(self):
        return 2 if self.tau is not None else 1

    def in_coroot_lattice(self, coweight):
        return self.root_type == 'C' or sum(coweight) % 2 == 0


def _unit(m, i, c=1):
    v = [0] * m
    v[i] = c
    return tuple(v)


@lru_cache(maxsize=None)
def build_affine_data(n) -> AffineData:
    """
    Build the affine data for rank n.

    For n = 2m the finite root system is B_m with P∨ = Z^m, Q∨ the even-sum
    sublattice and Ω of order 2; for n = 2m + 1 it is C_m with Q∨ = Z^m and
    Ω trivial.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    m = n // 2
    even = n % 2 == 0
    ident = tuple(range(m))
    ones = (1,) * m

    roots = []
    coroots = []
    for i in range(m):
        for j in range(i + 1, m):
            for c in (-1, 1):
                v = [0] * m
                v[i], v[j] = 1, c
                roots.append(v)
                coroots.append(tuple(v))
    for i in range(m):
        roots.append(list(_unit(m, i, 1 if even else 2)))
        coroots.append(_unit(m, i, 2 if even else 1))

    def swap(i):
        perm = list(ident)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return AffineWeylElement(n, (0,) * m, tuple(perm), ones)

    def negate(i, t=None):
        signs = list(ones)
        signs[i] = -1
        return AffineWeylElement(n, t or (0,) * m, ident, tuple(signs))

    if even:
        perm = list(ident)
        perm[0], perm[1] = 1, 0
        signs = list(ones)
        signs[0] = signs[1] = -1
        t = [0] * m
        t[0] = t[1] = 1
        s0 = AffineWeylElement(n, tuple(t), tuple(perm), tuple(signs))
        tau = negate(0, _unit(m, 0))
        vertices = [tuple(Rational(0) for _ in range(m)), tuple(Rational(c) for c in _unit(m, 0))]
        vertices += [tuple(Rational(1, 2) if i < k else Rational(0) for i in range(m)) for k in range(2, m + 1)]
    else:
        s0 = negate(0, _unit(m, 0))
        tau = None
        vertices = [tuple(Rational(1, 2) if i < k else Rational(0) for i in range(m)) for k in range(m + 1)]

    simple = (s0,) + tuple(swap(i) for i in range(m - 1)) + (negate(m - 1),)
    scale = 2 * (m + 1)
    barycentre = tuple(int(2 * sum(v[i] for v in vertices)) for i in range(m))
    return AffineData(
        n=n, m=m, root_type='B' if even else 'C',
        positive_roots=np.array(roots, dtype=np.int64),
        positive_coroots=tuple(coroots),
        simple=simple, tau=tau, vertices=tuple(vertices),
        scale=scale, barycentre=barycentre,
    )


def simple_reflection(n, k):
    data = build_affine_data(n)
    if not 0 <= k <= data.m:
        raise ValueError(f"no simple reflection s{k} for n={n}")
    return data.simple[k]


@lru_cache(maxsize=None)
def length(w: AffineWeylElement) -> int:
    """Number of affine walls separating the base alcove from its image under w."""
    data = build_affine_data(w.n)
    p = np.array(data.barycentre, dtype=np.int64)
    wp = np.array(w.act(data.barycentre, data.scale), dtype=np.int64)
    before = np.floor_divide(data.positive_roots @ p, data.scale)
    after = np.floor_divide(data.positive_roots @ wp, data.scale)
    return int(np.abs(after - before).sum())


def left_descents(w):
    data = build_affine_data(w.n)
    return [k for k, s in enumerate(data.simple) if length(s * w) < length(w)]


def right_descents(w):
    data = build_affine_data(w.n)
    return [k for k, s in enumerate(data.simple) if length(w * s) < length(w)]


@lru_cache(maxsize=None)
def reduced_word(w):
    """
    Reduced word by peeling the smallest left descent.

    Returns:
    --------
    tuple
        (word, ω) with w = s_word[0] ··· s_word[-1] · ω and ℓ(ω) = 0
    """
    data = build_affine_data(w.n)
    word = []
    while length(w) > 0:
        k = left_descents(w)[0]
        word.append(k)
        w = data.simple[k] * w
    return tuple(word), w


def bruhat_leq(a: AffineWeylElement, b: AffineWeylElement) -> bool:
    """a ≤ b in the Bruhat order; elements of different Ω components are incomparable."""
    if a.n != b.n:
        raise ValueError(f"elements belong to different groups (n={a.n}, n={b.n})")
    return _bruhat(a, b)


@lru_cache(maxsize=None)
def _bruhat(a, b):
    la, lb = length(a), length(b)
    if la > lb:
        return False
    if lb == 0:
        return a == b
    s = build_affine_data(b.n).simple[left_descents(b)[0]]
    sa = s * a
    if length(sa) < la:
        return _bruhat(sa, s * b)
    return _bruhat(a, s * b)


@lru_cache(maxsize=None)
def lower_interval(w) -> FrozenSet[AffineWeylElement]:
    """All v ≤ w, from [e, w] = [e, sw] ∪ s·[e, sw] for a left descent s."""
    if length(w) == 0:
        return frozenset({w})
    s = build_affine_data(w.n).simple[left_descents(w)[0]]
    below = lower_interval(s * w)
    return below | frozenset(s * v for v in below)


def coweight_image(n, r, s) -> Tuple[int, ...]:
    """λ_s = (1^(s), 0^(m−s)), the image of μ_{r,s}."""
    if r + s != n or min(r, s) < 0:
        raise ValueError(f"signature ({r}, {s}) does not add up to n={n}")
    m = n // 2
    if s > m:
        raise ValueError(f"s={s} exceeds m={m}; order the signature so that s ≤ r")
    return (1,) * s + (0,) * (m - s)


def finite_orbit(coweight) -> List[Tuple[int, ...]]:
    """The W₀ = S_m ⋉ {±1}^m orbit, sorted."""
    orbit = set()
    for perm in permutations(coweight):
        for signs in product((1, -1), repeat=len(coweight)):
            orbit.add(tuple(s * c for s, c in zip(signs, perm)))
    return sorted(orbit)


def dominant(coweight) -> Tuple[int, ...]:
    return tuple(sorted((abs(c) for c in coweight), reverse=True))


def extreme_elements(n, r, s) -> List[AffineWeylElement]:
    return [translation(n, c) for c in finite_orbit(coweight_image(n, r, s))]


@lru_cache(maxsize=None)
def admissible_set(n, r, s) -> FrozenSet[AffineWeylElement]:
    """Adm(μ_{r,s}): everything below some translation t_{w₀(λ_s)}."""
    result = frozenset()
    for t in extreme_elements(n, r, s):
        result |= lower_interval(t)
    return result


def length_histogram(elements: Iterable[AffineWeylElement]) -> Dict[int, int]:
    counts = pd.Series([length(w) for w in elements], dtype='int64').value_counts()
    return {int(k): int(v) for k, v in counts.sort_index(ascending=False).items()}


def adm0(n, r, s) -> List[Tuple[int, ...]]:
    """
    Dominant coweights of the admissible set, in decreasing dominance order.
    For n odd the chain steps down by one unit; for n even it steps by
    e_{s−1} + e_s and ends in λ₁ or λ₀ according to the parity of s.
    """
    coweight_image(n, r, s)
    m = n // 2
    step = 1 if n % 2 else 2
    return [(1,) * k + (0,) * (m - k) for k in range(s, -1, -step)]


def dominance_closure(n, r, s) -> List[Tuple[int, ...]]:
    """
    Dominant coweights below the translation parts of the extreme elements
    in dominance order and in the same Q∨-coset, decreasing.
    """
    data = build_affine_data(n)
    tops = {dominant(t.t) for t in extreme_elements(n, r, s)}
    height = max(max(t, default=0) for t in tops)
    found = set()
    for c in product(range(height + 1), repeat=data.m):
        if c != dominant(c):
            continue
        for t in tops:
            if dominates(t, c) and data.in_coroot_lattice(tuple(a - b for a, b in zip(t, c))):
                found.add(c)
    return sorted(found, reverse=True)


def dominates(a, b) -> bool:
    """a ≥ b in dominance order (partial sums, equal totals for the even type)."""
    pa = np.cumsum(a)
    pb = np.cumsum(b)
    return bool(np.all(pa >= pb))


def dominant_coweight(w) -> Tuple[int, ...]:
    """Label of W₀·w·W₀: the dominant representative of the translation part."""
    return dominant(w.t)


def node_generators(n, nodes) -> List[AffineWeylElement]:
    """Generators of W^Y: simple reflections s_k with k not a vertex of the facet."""
    data = build_affine_data(n)
    nodes = frozenset(nodes)
    if not nodes:
        raise ValueError("a facet needs at least one vertex")
    if not nodes <= set(range(data.m + 1)):
        raise ValueError(f"nodes {sorted(nodes)} out of range for n={n}")
    return [s for k, s in enumerate(data.simple) if k not in nodes]


@lru_cache(maxsize=None)
def parabolic_subgroup(n, nodes: FrozenSet[int]) -> FrozenSet[AffineWeylElement]:
    gens = node_generators(n, nodes)
    found = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        w = frontier.pop()
        for s in gens:
            v = w * s
            if v not in found:
                found.add(v)
                frontier.append(v)
    return frozenset(found)


@lru_cache(maxsize=None)
def _minimal_rep(w, nodes):
    gens = node_generators(w.n, nodes)
    changed = True
    while changed:
        changed = False
        for s in gens:
            if length(s * w) < length(w):
                w = s * w
                changed = True
            elif length(w * s) < length(w):
                w = w * s
                changed = True
    return w


def project_double_coset(w: AffineWeylElement, nodes: Iterable[int]) -> AffineWeylElement:
    """Minimal-length representative of W^Y·w·W^Y, Y given by diagram nodes."""
    return _minimal_rep(w, frozenset(nodes))


def _parse_label(n, label):
    m = n // 2
    if isinstance(label, str):
        text = label.strip()
        if text.endswith("'") or text.endswith("′"):
            if n % 2 or int(text[:-1]) != m:
                raise ValueError(f"primed label {label!r} only exists as m' for n even (m={m})")
            return 'prime'
        label = int(text)
    if not 0 <= label <= m:
        raise ValueError(f"vertex label {label} out of range 0..{m}")
    return int(label)


def normalize_index_set(n, I) -> FrozenSet[int]:
    """Validate a normalized index set I ⊆ {0, …, m}."""
    m = n // 2
    labels = frozenset(_parse_label(n, i) for i in I)
    if not labels:
        raise ValueError("index set must be nonempty")
    if 'prime' in labels:
        raise ValueError("normalized index sets carry no primed label; use parahoric_classify")
    if n % 2 == 0 and m - 1 in labels and m not in labels:
        raise ValueError(f"for n={n}, m-1={m - 1} in I requires m={m} in I")
    return labels


@dataclass(frozen=True)
class ParahoricIndex:
    n: int
    labels: FrozenSet[int]
    conjugated: bool = False

    @property
    def note(self):
        return "conjugate by τ (swap m ↔ m')" if self.conjugated else "standard"


def parahoric_classify(n, raw) -> ParahoricIndex:
    """
    Normalize a raw index set. For n odd this is the identity. For n = 2m raw
    sets live in {0, …, m−2, m, m'}: with both m and m' present m' becomes
    m−1; with m' alone the set is replaced by its τ-conjugate (m' ↦ m).
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    m = n // 2
    labels = [_parse_label(n, j) for j in raw]
    if not labels:
        raise ValueError("index set must be nonempty")
    if n % 2:
        return ParahoricIndex(n, normalize_index_set(n, labels))
    if m - 1 in labels:
        raise ValueError(f"raw index sets for n={n} use m'={m}' instead of {m - 1}")
    plain = frozenset(j for j in labels if j != 'prime')
    if 'prime' not in labels:
        return ParahoricIndex(n, plain)
    if m in plain:
        return ParahoricIndex(n, plain | {m - 1})
    return ParahoricIndex(n, plain | {m}, conjugated=True)


def vertex_nodes(n, I) -> FrozenSet[int]:
    """
    Diagram nodes of the facet for a normalized index set. For n odd label i is
    node i. For n = 2m, m−1 stands for m'; labels j ≤ m−2 are node m−j, m is
    node 0 and m' is node 1.
    """
    labels = normalize_index_set(n, I)
    m = n // 2
    if n % 2:
        return labels
    nodes = set()
    for j in labels:
        if j == m:
            nodes.add(0)
        elif j == m - 1:
            nodes.add(1)
        else:
            nodes.add(m - j)
    return frozenset(nodes)


def valid_index_sets(n) -> List[FrozenSet[int]]:
    m = n // 2
    found = []
    for mask in range(1, 2 ** (m + 1)):
        labels = frozenset(i for i in range(m + 1) if mask >> i & 1)
        if n % 2 == 0 and m - 1 in labels and m not in labels:
            continue
        found.append(labels)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def admissible_set_for(n, r, s, I) -> FrozenSet[AffineWeylElement]:
    """Adm^I(μ): the admissible set projected to W^I\\W̃/W^I, as minimal representatives."""
    nodes = vertex_nodes(n, I)
    return frozenset(project_double_coset(a, nodes) for a in admissible_set(n, r, s))


@dataclass(frozen=True)
class VertexwiseResult:
    holds: bool
    admissible: int
    intersection: int
    counterexample: Optional[AffineWeylElement] = None

    def __bool__(self):
        return self.holds


def vertexwise_check(n, r, s, I) -> VertexwiseResult:
    """
    Compare Adm^I(μ) with the set of I-double cosets whose image at every
    single vertex of I is admissible. Every such coset lies in W^{k}·Adm·W^{k}
    for any vertex k of the facet, which bounds the enumeration.
    """
    nodes = vertex_nodes(n, I)
    adm = admissible_set(n, r, s)
    target = frozenset(project_double_coset(a, nodes) for a in adm)
    per_vertex = {k: {project_double_coset(a, {k}) for a in adm} for k in nodes}

    k0 = min(nodes, key=lambda k: (len(parabolic_subgroup(n, frozenset({k}))), k))
    group = parabolic_subgroup(n, frozenset({k0}))
    candidates = {project_double_coset(u * a * v, nodes) for a in adm for u in group for v in group}
    passing = frozenset(c for c in candidates
                        if all(project_double_coset(c, {k}) in per_vertex[k] for k in nodes))

    extra = sorted(passing - target, key=lambda w: (length(w), w.t, w.perm, w.signs))
    return VertexwiseResult(
        holds=passing == target,
        admissible=len(target),
        intersection=len(passing),
        counterexample=extra[0] if extra else None,
    )


@dataclass(frozen=True)
class AffineRootFamily:
    """Affine roots β + R_β with R_β = offset + step·Z."""
    beta: Tuple[int, ...]
    multiplicity: int
    offset: Rational
    step: Rational

    def label(self):
        terms = []
        for i, c in enumerate(self.beta):
            if c:
                coeff = {1: '+', -1: '-'}.get(c, f"{'+' if c > 0 else '-'}{abs(c)}")
                terms.append(f"{coeff}x{i + 1}")
        head = ''.join(terms).lstrip('+')
        shift = f"{self.offset}+" if self.offset else ''
        return f"{head} + {shift}{self.step}Z"


def affine_root_set(datum: Sequence[Tuple[Tuple[int, ...], int, bool]]) -> List[AffineRootFamily]:
    """
    R_β = (1/l_β)·Z when β/2 is not a root, else 1/(2l_β) + (1/l_β)·Z.

    Parameters:
    -----------
    datum : sequence of (β, l_β, half_is_root)
    """
    families = []
    for beta, l, half in datum:
        if l < 1:
            raise ValueError(f"multiplicity must be positive, got {l} for {beta}")
        step = Rational(1, l)
        offset = Rational(1, 2 * l) if half else Rational(0)
        families.append(AffineRootFamily(tuple(beta), l, offset, step))
    return families


def relative_root_datum(n):
    """Relative roots in x-coordinates with l_β and whether β/2 is a root."""
    m = n // 2
    datum = []
    for i in range(m):
        for j in range(i + 1, m):
            for a, b in product((1, -1), repeat=2):
                v = [0] * m
                v[i], v[j] = a, b
                datum.append((tuple(v), 2, False))
    for i in range(m):
        for c in (1, -1):
            if n % 2:
                datum.append((_unit(m, i, c), 2, False))
            datum.append((_unit(m, i, 2 * c), 1, n % 2 == 1))
    return datum


def kottwitz_even(n, val_c, vals_a) -> Tuple[int, int]:
    """κ(t) = (val(c), val(a_1 ··· a_m) mod 2) for a diagonal torus element of the even group."""
    if n % 2:
        raise ValueError(f"the Kottwitz formula here is for even n, got {n}")
    if len(vals_a) != n // 2:
        raise ValueError(f"expected {n // 2} valuations, got {len(vals_a)}")
    return int(val_c), int(sum(vals_a)) % 2


def coherence_rhs(n, s, k) -> int:
    """Sections of the 2k-th power of O(1) on Gr(s, n): ∏ (2k+i+j−1)/(i+j−1)."""
    if not 1 <= s <= n - 1:
        raise ValueError(f"s must lie in 1..{n - 1}, got {s}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    value = Rational(1)
    for i in range(1, s + 1):
        for j in range(1, n - s + 1):
            value *= Rational(2 * k + i + j - 1, i + j - 1)
    return int(value)


def coherence_rhs_bruteforce(n, s, k) -> int:
    """Count multichains of s-subsets of {1..n} of length 2k (standard monomials)."""
    if not 1 <= s <= n - 1:
        raise ValueError(f"s must lie in 1..{n - 1}, got {s}")
    subsets = list(combinations(range(n), s))
    counts = {c: 1 for c in subsets}
    for _ in range(2 * k - 1):
        counts = {c: sum(v for d, v in counts.items() if all(x <= y for x, y in zip(d, c)))
                  for c in subsets}
    return sum(counts.values()) if k > 0 else 1


def finite_weyl_order(n):
    m = n // 2
    return 2 ** m * factorial(m)


def orbit_size(n, s):
    m = n // 2
    return 2 ** s * comb(m, s)


def admissible_listing(n, r, s, I=None) -> pd.DataFrame:
    """Table of the (projected) admissible set sorted by decreasing length."""
    elements = admissible_set(n, r, s) if I is None else admissible_set_for(n, r, s, I)
    extremes = set(extreme_elements(n, r, s))
    rows = []
    for w in elements:
        word, omega = reduced_word(w)
        rows.append({
            'word': ' '.join(f's{k}' for k in word) or 'e',
            'length': length(w),
            'translation': w.t,
            'finite': tuple(s_ * (p + 1) for p, s_ in zip(w.perm, w.signs)),
            'omega': w.omega,
            'extreme': w in extremes,
        })
    df = pd.DataFrame(rows, columns=['word', 'length', 'translation', 'finite', 'omega', 'extreme'])
    return df.sort_values(['length', 'word'], ascending=[False, True]).reset_index(drop=True)


if __name__ == "__main__":
    print("Iwahori-Weyl Group Test")
    print("=" * 60)
    for n, r, s in [(3, 2, 1), (4, 2, 2), (4, 3, 1), (5, 3, 2)]:
        adm = admissible_set(n, r, s)
        print(f"n={n} ({r},{s}): |Adm| = {len(adm)}, histogram {length_histogram(adm)}")
    print("\n" + "=" * 60)
