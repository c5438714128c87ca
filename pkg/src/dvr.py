"""
Linear algebra over the DVR model O = k[u]_(u).

Matrices are sympy DomainMatrix objects over the rational-function field
k(u); an entry lies in O when its u-adic valuation is nonnegative. Lattices
are column spans over O.
"""

from functools import lru_cache
from math import inf
from typing import List, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.matrices import DomainMatrix

from src.exactalg import RATIONALS, CoefficientField

U_SYMBOL = Symbol('u')


@lru_cache(maxsize=None)
def laurent_domain(field: CoefficientField = RATIONALS):
    """The field k(u) as a sympy FractionField domain."""
    return field.domain.frac_field(U_SYMBOL)


def uniformizer(field: CoefficientField = RATIONALS):
    K = laurent_domain(field)
    return K.from_sympy(U_SYMBOL)


def u_power(K, k):
    """u^k in K, for any integer k."""
    u = K.from_sympy(U_SYMBOL)
    return u ** k if k >= 0 else K.one / u ** (-k)


def _poly_valuation(p):
    return min(m[0] for m in p.itermonoms())


def valuation(f) -> float:
    """u-adic valuation of an element of k(u); inf for zero."""
    if not f:
        return inf
    return _poly_valuation(f.numer) - _poly_valuation(f.denom)


def residue(f, K):
    """
    Image of f ∈ O in the residue field k.

    Raises:
    -------
    ValueError
        If f has a pole at u = 0
    """
    k = K.domain
    if not f:
        return k.zero
    a = _poly_valuation(f.numer)
    b = _poly_valuation(f.denom)
    if a < b:
        raise ValueError(f"{K.to_sympy(f)} is not integral at u = 0")
    if a > b:
        return k.zero
    return f.numer[(a,)] / f.denom[(b,)]


def matrix(rows: Sequence[Sequence[object]], K) -> DomainMatrix:
    """DomainMatrix over K from rows of ints, sympy expressions or K elements."""
    rows = [[K.new(x) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), K)


def diagonal(entries, K) -> DomainMatrix:
    n = len(entries)
    rows = [[entries[i] if i == j else K.zero for j in range(n)] for i in range(n)]
    return DomainMatrix(rows, (n, n), K)


def min_valuation(M: DomainMatrix) -> float:
    return min((valuation(x) for row in M.to_list() for x in row), default=inf)


def column_valuations(M: DomainMatrix) -> List[float]:
    rows = M.to_list()
    return [min((valuation(row[j]) for row in rows), default=inf) for j in range(M.shape[1])]


def is_integral(M: DomainMatrix) -> bool:
    return min_valuation(M) >= 0


def reduce_mod_u(M: DomainMatrix) -> DomainMatrix:
    """Entrywise residue of an integral matrix, over the residue field."""
    K = M.domain
    rows = [[residue(x, K) for x in row] for row in M.to_list()]
    return DomainMatrix(rows, M.shape, K.domain)


def _scale_columns(M, shifts):
    K = M.domain
    factors = [u_power(K, -c) for c in shifts]
    rows = [[x * factors[j] for j, x in enumerate(row)] for row in M.to_list()]
    return DomainMatrix(rows, M.shape, K)


def normalize_columns(M: DomainMatrix) -> DomainMatrix:
    """Divide each nonzero column by the power of u making it primitive."""
    vals = column_valuations(M)
    if any(v == inf for v in vals):
        raise ValueError("matrix has a zero column")
    return _scale_columns(M, [int(v) for v in vals])


def saturate_columns(M: DomainMatrix) -> DomainMatrix:
    """
    O-basis of span_K(M) ∩ O^N for a matrix of full column rank.

    Columns are first made primitive; then, while the reduction mod u has a
    kernel vector c, the column at the first nonzero position of c is
    replaced by M·c divided by its content.

    Parameters:
    -----------
    M : DomainMatrix
        N × k matrix over k(u) of rank k

    Returns:
    --------
    DomainMatrix
        N × k integral matrix whose reduction mod u has rank k
    """
    K = M.domain
    if M.rank() != M.shape[1]:
        raise ValueError(f"columns are dependent: rank {M.rank()} < {M.shape[1]}")
    A = normalize_columns(M)
    while True:
        kernel = reduce_mod_u(A).nullspace()
        if kernel.shape[0] == 0:
            return A
        c = kernel.to_list()[0]
        q = next(i for i, x in enumerate(c) if x)
        combo = A * DomainMatrix([[K.new(x)] for x in c], (len(c), 1), K)
        combo = normalize_columns(combo)
        rows = A.to_list()
        for i, row in enumerate(rows):
            row[q] = combo.to_list()[i][0]
        A = DomainMatrix(rows, A.shape, K)


def pivot_rows(A: DomainMatrix) -> Tuple[int, ...]:
    """Rows of a saturated matrix used as the normalising minor: the rref pivots of (A mod u)ᵀ."""
    _, pivots = reduce_mod_u(A).transpose().rref()
    return tuple(pivots)


def canonical_basis(A: DomainMatrix) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    """
    Canonical O-basis of the saturated lattice spanned by A.

    Returns:
    --------
    (B, P)
        B = A·(A[P, :])⁻¹, so that B[P, :] is the identity, and the pivot rows P
    """
    A = saturate_columns(A)
    P = pivot_rows(A)
    minor = A.extract(list(P), list(range(A.shape[1])))
    return A * minor.inv(), P


def in_lattice(v: DomainMatrix, basis: DomainMatrix, pivots: Sequence[int]) -> bool:
    """Membership of the column v in the O-span of a canonical basis."""
    coords = v.extract(list(pivots), [0])
    residual = v - basis * coords
    return residual.is_zero_matrix and is_integral(coords)


def in_span(v: DomainMatrix, basis: DomainMatrix) -> bool:
    """Membership of the column v in the K-span of the columns of basis."""
    return basis.hstack(v).rank() == basis.rank()


def elementary_divisors(M: DomainMatrix) -> List[int]:
    """
    u-adic valuations of the Smith form of an N × k matrix of rank N
    (k ≥ N), sorted increasingly; their sum is the volume of the column
    lattice. Pivots are chosen by least valuation, so each elimination step
    stays inside O.
    """
    n, ncols = M.shape
    if n > ncols:
        raise ValueError(f"expected at least as many columns as rows, got {M.shape}")
    rows = M.to_list()
    result = []
    live_rows = list(range(n))
    live_cols = list(range(ncols))
    while live_rows:
        best: Optional[Tuple[float, int, int]] = None
        for i in live_rows:
            for j in live_cols:
                v = valuation(rows[i][j])
                if best is None or v < best[0]:
                    best = (v, i, j)
        v, pi, pj = best
        if v == inf:
            raise ValueError("matrix does not have full row rank")
        result.append(int(v))
        pivot = rows[pi][pj]
        for i in live_rows:
            if i != pi and rows[i][pj]:
                factor = rows[i][pj] / pivot
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[pi])]
        live_rows.remove(pi)
        live_cols.remove(pj)
    return sorted(result)


def valuation_of_det(M: DomainMatrix) -> int:
    if M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got {M.shape}")
    return sum(elementary_divisors(M))


def lattice_basis(M: DomainMatrix) -> DomainMatrix:
    """
    O-basis of the O-span of the columns of an N × k matrix of rank N.

    Column echelon form: in each row the live column of least valuation is
    the pivot, and the other live columns are cleared against it with
    coefficients in O. The result is lower triangular.
    """
    n = M.shape[0]
    if M.rank() != n:
        raise ValueError(f"columns do not span: rank {M.rank()} < {n}")
    K = M.domain
    cols = [list(col) for col in M.transpose().to_list()]
    basis = []
    for i in range(n):
        pivot = min((c for c in cols if c[i]), key=lambda c: valuation(c[i]))
        cols.remove(pivot)
        cleared = []
        for c in cols:
            if c[i]:
                factor = c[i] / pivot[i]
                c = [a - factor * b for a, b in zip(c, pivot)]
            if any(c):
                cleared.append(c)
        cols = cleared
        basis.append(pivot)
    return DomainMatrix(basis, (n, n), K).transpose()


def same_lattice(A: DomainMatrix, B: DomainMatrix) -> bool:
    """Two square bases span one lattice iff A⁻¹B lies in GL_n(O)."""
    change = A.inv() * B
    return is_integral(change) and valuation_of_det(change) == 0


if __name__ == "__main__":
    print("DVR Linear Algebra Test")
    print("=" * 60)
    K = laurent_domain()
    u = uniformizer()
    M = matrix([[1, 0], [0, 1], [1, u ** 2]], K)
    B, P = canonical_basis(M)
    print(f"Canonical basis pivots: {P}")
    print(f"Elementary divisors of diag(u, u^-1): {elementary_divisors(diagonal([u, K.one / u], K))}")
    print("\n" + "=" * 60)
