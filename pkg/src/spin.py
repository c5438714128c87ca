"""
Wedge-power linear algebra behind the spin condition.

Wedge coordinates are indexed by n-element subsets S ⊂ {1, …, 2n}, listed in
lexicographic order. The split basis e_1, …, e_2n pairs e_i with e_{2n+1−i}.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from sympy.combinatorics import Permutation
from sympy.ntheory.primetest import is_square
from sympy.ntheory.residue_ntheory import is_quad_residue
from sympy.polys.matrices import DomainMatrix

from src import dvr

WedgeIndex = Tuple[int, ...]

PLUS = 'plus'
MINUS = 'minus'
SAME = 'same'
OPPOSITE = 'opposite'


@lru_cache(maxsize=None)
def wedge_indices(n, size=None) -> Tuple[WedgeIndex, ...]:
    """All `size`-subsets of {1..2n} (default n), lexicographically."""
    return tuple(combinations(range(1, 2 * n + 1), n if size is None else size))


def check_index(S, n) -> WedgeIndex:
    S = tuple(S)
    if len(S) != n or list(S) != sorted(set(S)) or not all(1 <= a <= 2 * n for a in S):
        raise ValueError(f"{S} is not an increasing {n}-subset of 1..{2 * n}")
    return S


def complement(S, n) -> WedgeIndex:
    chosen = set(S)
    return tuple(a for a in range(1, 2 * n + 1) if a not in chosen)


def partner(S, n) -> WedgeIndex:
    """(2n+1−S)^c, the index a_e sends e_S to."""
    return complement(sorted(2 * n + 1 - a for a in S), n)


def _sign(one_line):
    return Permutation([a - 1 for a in one_line]).signature()


@lru_cache(maxsize=None)
def sigma_sign(S, n) -> int:
    """
    Sign of σ_S: 1..n go to 2n+1−S in decreasing order and n+1..2n go to the
    complement of 2n+1−S in increasing order.
    """
    S = check_index(S, n)
    mirrored = [2 * n + 1 - a for a in S]
    return _sign(mirrored + list(complement(sorted(mirrored), n)))


def _concat_sign(T, n):
    """η_T with e_T ∧ e_{T^c} = η_T · e_1 ∧ … ∧ e_2n."""
    return _sign(list(T) + list(complement(T, n)))


@dataclass(frozen=True)
class WedgeVector:
    """
    Finite linear combination of the e_S.

    Attributes:
    -----------
    n : int
        Half the ambient dimension
    terms : tuple of (WedgeIndex, coefficient)
        Nonzero coefficients, sorted by index
    """
    n: int
    terms: Tuple[Tuple[WedgeIndex, object], ...]

    @classmethod
    def from_dict(cls, n, coeffs: Dict[WedgeIndex, object]):
        terms = tuple(sorted((check_index(S, n), c) for S, c in coeffs.items() if c))
        return cls(n, terms)

    @classmethod
    def basis_vector(cls, S, n, one=1):
        return cls.from_dict(n, {tuple(S): one})

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, S):
        return self.as_dict().get(tuple(S), 0)

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError(f"cannot add wedge vectors for n={self.n} and n={other.n}")
        merged = self.as_dict()
        for S, c in other.terms:
            merged[S] = merged.get(S, 0) + c
        return WedgeVector.from_dict(self.n, merged)

    def scaled(self, c):
        return WedgeVector.from_dict(self.n, {S: c * a for S, a in self.terms})

    def column(self, K) -> DomainMatrix:
        """Coordinates as a column over K, in wedge_indices order."""
        coeffs = self.as_dict()
        return DomainMatrix([[K.new(coeffs.get(S, 0))] for S in wedge_indices(self.n)],
                            (len(wedge_indices(self.n)), 1), K)

    def __repr__(self):
        body = ' + '.join(f"{c}·e{''.join(map(str, S))}" for S, c in self.terms) or '0'
        return f"WedgeVector(n={self.n}: {body})"


def apply_ae(v: WedgeVector) -> WedgeVector:
    """a_e for the split basis: e_S ↦ sign(σ_S)·e_{(2n+1−S)^c}."""
    return WedgeVector.from_dict(v.n, {partner(S, v.n): sigma_sign(S, v.n) * c for S, c in v.terms})


def ae_matrix(gram: DomainMatrix, scale=1) -> DomainMatrix:
    """
    Matrix of a_e on wedge coordinates for an arbitrary symmetric gram
    matrix, from a_e(e_S) = Σ_T det(G[S, T])·η_T·e_{T^c}. Scaling e by λ
    scales the operator by λ.
    """
    N, ncols = gram.shape
    if N != ncols or N % 2:
        raise ValueError(f"gram matrix must be square of even size, got {gram.shape}")
    n = N // 2
    K = gram.domain
    index = wedge_indices(n)
    position = {S: i for i, S in enumerate(index)}
    rows = gram.to_list()
    lam = K.new(scale)
    out = [[K.zero] * len(index) for _ in index]
    for j, S in enumerate(index):
        for T in index:
            block = [[rows[a - 1][b - 1] for b in T] for a in S]
            if not any(any(x for x in row) for row in block):
                continue
            d = DomainMatrix(block, (n, n), K).det()
            if d:
                out[position[complement(T, n)]][j] += lam * _concat_sign(T, n) * d
    return DomainMatrix(out, (len(index), len(index)), K)


def ae_square_check(gram: DomainMatrix, scale=1):
    """
    The scalar by which a_e² acts.

    Raises:
    -------
    ValueError
        If the gram matrix is singular or a_e² is not scalar
    """
    if gram.det() == gram.domain.zero:
        raise ValueError("gram matrix is singular")
    A = ae_matrix(gram, scale)
    square = A * A
    c = square.to_list()[0][0]
    if square != DomainMatrix.eye(A.shape[0], A.domain) * c:
        raise ValueError("a_e squared is not a scalar")
    return c


def plus_eigenvalue(n) -> int:
    """Raw a_e-eigenvalue on e_1 ∧ … ∧ e_n; the plus space is the one containing it."""
    return sigma_sign(tuple(range(1, n + 1)), n)


def spin_sign(s) -> str:
    return PLUS if s % 2 == 0 else MINUS


def eigen_basis(n, label) -> List[WedgeVector]:
    """
    Basis of the plus or minus eigenspace of a_e in the split basis: the
    vectors e_S + ε·sign(σ_S)·e_{S'} over pairs S < S', and the self-paired
    e_S with sign(σ_S) = ε, where ε is the eigenvalue of the label.
    """
    if label not in (PLUS, MINUS):
        raise ValueError(f"label must be {PLUS!r} or {MINUS!r}, got {label!r}")
    eps = plus_eigenvalue(n) if label == PLUS else -plus_eigenvalue(n)
    basis = []
    for S in wedge_indices(n):
        other = partner(S, n)
        sign = sigma_sign(S, n)
        if other == S:
            if sign == eps:
                basis.append(WedgeVector.basis_vector(S, n))
        elif S < other:
            basis.append(WedgeVector.from_dict(n, {S: 1, other: eps * sign}))
    return basis


def eigen_matrix(n, label, K) -> DomainMatrix:
    """eigen_basis as the columns of a matrix over K."""
    columns = [v.column(K) for v in eigen_basis(n, label)]
    return columns[0].hstack(*columns[1:])


@dataclass(frozen=True)
class DiscriminantData:
    """D = (−1)^n det(gram) and whether the discriminant algebra splits."""
    D: object
    split: bool
    label: str


def _is_square_in_field(x, k):
    if not x:
        return False
    if k.is_QQ:
        num, den = int(k.numer(x)), int(k.denom(x))
        return num > 0 and is_square(num) and is_square(den)
    if k.is_FiniteField:
        return is_quad_residue(int(k.to_sympy(x)), k.mod)
    raise ValueError(f"no square test for coefficient domain {k}")


def _is_square_poly(f, k):
    lc, factors = f.factor_list()
    return all(e % 2 == 0 for _, e in factors) and _is_square_in_field(k.convert(lc), k)


def _halve_exponents(p, ring):
    terms = {}
    for (e,), c in p.iterterms():
        if e % 2:
            raise ValueError("entry is not a function of u²")
        terms[(e // 2,)] = c
    return ring.from_dict(terms)


def discriminant(gram: DomainMatrix, over_base=False) -> DiscriminantData:
    """
    Discriminant of a symmetric form given by its gram matrix.

    Parameters:
    -----------
    gram : DomainMatrix
        Invertible symmetric 2n × 2n matrix over Q, F_p or k(u)
    over_base : bool
        For k(u) entries that are functions of u² = t, decide squareness in
        k(t) instead of k(u)

    Returns:
    --------
    DiscriminantData
        D, split flag and a short label ('split' or 'quadratic')
    """
    N, ncols = gram.shape
    if N != ncols or N % 2:
        raise ValueError(f"gram matrix must be square of even size, got {gram.shape}")
    if gram != gram.transpose():
        raise ValueError("gram matrix is not symmetric")
    det = gram.det()
    if not det:
        raise ValueError("gram matrix is singular")
    D = det if (N // 2) % 2 == 0 else -det
    k = gram.domain
    if k.is_QQ or k.is_FiniteField:
        split = _is_square_in_field(D, k)
    else:
        numer, denom = D.numer, D.denom
        if over_base:
            numer = _halve_exponents(numer, numer.ring)
            denom = _halve_exponents(denom, denom.ring)
        split = _is_square_poly(numer * denom, k.domain)
    return DiscriminantData(D, split, 'split' if split else 'quadratic')


def isotropic_parity(W: DomainMatrix, W2: DomainMatrix, gram: DomainMatrix) -> str:
    """
    'same' iff dim(W ∩ W′) ≡ n mod 2, for totally isotropic n-dimensional
    column spans W and W′ of a 2n-dimensional quadratic space.
    """
    N = gram.shape[0]
    n = N // 2
    for name, M in (('W', W), ("W'", W2)):
        if M.shape != (N, n) or M.rank() != n:
            raise ValueError(f"{name} must have {n} independent columns in dimension {N}")
        if not (M.transpose() * gram * M).is_zero_matrix:
            raise ValueError(f"{name} is not totally isotropic")
    meet = N - W.hstack(W2).rank()
    return SAME if meet % 2 == n % 2 else OPPOSITE


def coordinate_subspace(T, n, K) -> DomainMatrix:
    """Columns e_t, t ∈ T, in the split basis."""
    rows = [[K.one if a == t else K.zero for t in T] for a in range(1, 2 * n + 1)]
    return DomainMatrix(rows, (2 * n, len(T)), K)


def isotropic_coordinate_indices(n) -> List[WedgeIndex]:
    """The T with T ∩ (2n+1−T) empty: coordinate Lagrangians of the split form."""
    return [T for T in wedge_indices(n) if not set(T) & {2 * n + 1 - a for a in T}]


def split_gram(n, K) -> DomainMatrix:
    """Antidiagonal unit matrix of size 2n."""
    N = 2 * n
    return DomainMatrix([[K.one if i + j == N - 1 else K.zero for j in range(N)] for i in range(N)],
                        (N, N), K)


# Unitary model: V = F^n with basis e_1..e_n over F = F_0(π), π² = π₀ = u²,
# viewed over F_0 in the coordinates (e_1..e_n, πe_1..πe_n).

def unitary_gram(n, K) -> DomainMatrix:
    """Symmetric trace form: diag(H, −u²H)."""
    N = 2 * n
    u2 = dvr.u_power(K, 2)
    rows = [[K.zero] * N for _ in range(N)]
    for i in range(n):
        rows[i][n - 1 - i] = K.one
        rows[n + i][2 * n - 1 - i] = -u2
    return DomainMatrix(rows, (N, N), K)


def unitary_alternating_gram(n, K) -> DomainMatrix:
    """Alternating trace form [[0, −H], [H, 0]]."""
    N = 2 * n
    rows = [[K.zero] * N for _ in range(N)]
    for i in range(n):
        rows[i][2 * n - 1 - i] = -K.one
        rows[n + i][n - 1 - i] = K.one
    return DomainMatrix(rows, (N, N), K)


def pi_matrix(n, K) -> DomainMatrix:
    """Multiplication by π in (e, πe) coordinates."""
    N = 2 * n
    u2 = dvr.u_power(K, 2)
    rows = [[K.zero] * N for _ in range(N)]
    for i in range(n):
        rows[n + i][i] = K.one
        rows[i][n + i] = u2
    return DomainMatrix(rows, (N, N), K)


@dataclass(frozen=True)
class SplitBasisSpec:
    """
    Split basis of the unitary trace form in (e, πe) coordinates.

    For odd n the two middle vectors are e_{m+1} − πe_{m+1}/u and
    (e_{m+1} + πe_{m+1}/u)/2, which needs u = √π₀ in the coefficients.
    """
    n: int
    parity: str
    matrix: DomainMatrix


def _unit_column(N, i, c, K):
    col = [K.zero] * N
    col[i] = c
    return col


def unitary_split_basis(n, K) -> SplitBasisSpec:
    """
    Columns −π⁻¹e_1..−π⁻¹e_m, e_{m+1}..e_n, e_1..e_m, πe_{m+1}..πe_n, with
    the middle pair replaced when n is odd; the trace form is antidiagonal
    in this basis.
    """
    m = n // 2
    N = 2 * n
    inv_u = dvr.u_power(K, -1)
    inv_u2 = dvr.u_power(K, -2)
    cols = []
    for i in range(m):
        cols.append(_unit_column(N, n + i, -inv_u2, K))
    for i in range(m, n):
        cols.append(_unit_column(N, i, K.one, K))
    for i in range(m):
        cols.append(_unit_column(N, i, K.one, K))
    for i in range(m, n):
        cols.append(_unit_column(N, n + i, K.one, K))
    if n % 2:
        a = _unit_column(N, m, K.one, K)
        a[n + m] = -inv_u
        b = _unit_column(N, m, K.one / 2, K)
        b[n + m] = inv_u / 2
        cols[m] = a
        cols[n + m] = b
    rows = [[cols[j][i] for j in range(N)] for i in range(N)]
    return SplitBasisSpec(n, 'odd' if n % 2 else 'even', DomainMatrix(rows, (N, N), K))


def unitary_lattice_matrix(n, j, K) -> DomainMatrix:
    """
    Basis f_1..f_n, πf_1..πf_n of Λ_j in (e, πe) coordinates, with
    f_i = −π⁻¹e_i for i ≤ j and e_i otherwise; Λ_{j+n} = π⁻¹Λ_j.
    """
    q, r = divmod(j, n)
    N = 2 * n
    inv_u2 = dvr.u_power(K, -2)
    cols = []
    for i in range(n):
        cols.append(_unit_column(N, n + i, -inv_u2, K) if i < r else _unit_column(N, i, K.one, K))
    for i in range(n):
        cols.append(_unit_column(N, i, -K.one, K) if i < r else _unit_column(N, n + i, K.one, K))
    L = DomainMatrix([[cols[c][i] for c in range(N)] for i in range(N)], (N, N), K)
    if q:
        pi = pi_matrix(n, K)
        step = pi.inv() if q > 0 else pi
        for _ in range(abs(q)):
            L = step * L
    return L


def to_split(L: DomainMatrix, n) -> DomainMatrix:
    """Re-express (e, πe) columns in the split basis."""
    return unitary_split_basis(n, L.domain).matrix.inv() * L


def orthogonal_lattice_matrix(n, i, K) -> DomainMatrix:
    """
    Standard lattice Λ_i of the split orthogonal space with p = u²:
    diag(u⁻² on the first i entries) for i ≥ 0, diag(u² on the last |i|) for i < 0.
    """
    N = 2 * n
    if not -N < i < N:
        raise ValueError(f"lattice index must lie strictly between {-N} and {N}, got {i}")
    if i >= 0:
        entries = [dvr.u_power(K, -2)] * i + [K.one] * (N - i)
    else:
        entries = [K.one] * (N + i) + [dvr.u_power(K, 2)] * (-i)
    return dvr.diagonal(entries, K)


def _minor(rows, R, C, K):
    block = [[rows[a][b] for b in C] for a in R]
    if any(not any(x for x in row) for row in block):
        return K.zero
    return DomainMatrix(block, (len(R), len(C)), K).det()


def wedge_matrix(M: DomainMatrix, size=None) -> DomainMatrix:
    """Compound matrix: minors of M on row/column subsets, both lexicographic."""
    N, ncols = M.shape
    if N != ncols:
        raise ValueError(f"expected a square matrix, got {M.shape}")
    k = N // 2 if size is None else size
    K = M.domain
    subsets = list(combinations(range(N), k))
    rows = M.to_list()
    out = [[_minor(rows, R, C, K) for C in subsets] for R in subsets]
    return DomainMatrix(out, (len(subsets), len(subsets)), K)


def plucker_vector(P: DomainMatrix) -> DomainMatrix:
    """Column of maximal minors of an N × k matrix, rows in lexicographic order."""
    N, k = P.shape
    K = P.domain
    rows = P.to_list()
    cols = list(range(k))
    values = [[_minor(rows, R, cols, K)] for R in combinations(range(N), k)]
    return DomainMatrix(values, (len(values), 1), K)


def lattice_pm_basis(L: DomainMatrix, n, label) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    """
    O-basis of (∧ⁿΛ) ∩ (∧ⁿV)_± in lattice-wedge coordinates.

    Parameters:
    -----------
    L : DomainMatrix
        Basis of Λ in split coordinates, columns over k(u)
    n : int
        Half the ambient dimension
    label : str
        'plus' or 'minus'

    Returns:
    --------
    (Y, P)
        Canonical basis with Y[P, :] = I, and the pivot positions P
    """
    K = L.domain
    E = eigen_matrix(n, label, K)
    return dvr.canonical_basis(wedge_matrix(L.inv()) * E)


def in_eigenspace(P: DomainMatrix, label) -> bool:
    """Whether ∧ⁿ of the column span of P (split coordinates over a field) lies in the label space."""
    n = P.shape[1]
    return dvr.in_span(plucker_vector(P), eigen_matrix(n, label, P.domain))


if __name__ == "__main__":
    print("Spin Algebra Test")
    print("=" * 60)
    for label in (PLUS, MINUS):
        print(f"n=2 {label}: {eigen_basis(2, label)}")
    K = dvr.laurent_domain()
    Y, P = lattice_pm_basis(orthogonal_lattice_matrix(2, -1, K), 2, PLUS)
    print(f"Plus lattice of Λ₋₁ pivots: {[wedge_indices(2)[i] for i in P]}")
    print(f"Discriminant of the split form: {discriminant(split_gram(2, K)).label}")
    print("\n" + "=" * 60)
