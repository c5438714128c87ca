"""
Tests for the wedge-power algebra behind the spin condition.
"""

import sys
sys.path.append('.')

import numpy as np
import pytest
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src import dvr
from src.spin import (
    MINUS, OPPOSITE, PLUS, SAME, WedgeVector, ae_square_check, apply_ae, check_index, coordinate_subspace,
    discriminant, eigen_basis, in_eigenspace, isotropic_coordinate_indices, isotropic_parity,
    lattice_pm_basis, orthogonal_lattice_matrix, partner, plucker_vector, plus_eigenvalue, sigma_sign,
    spin_sign, split_gram, wedge_indices, wedge_matrix,
)


def _diag(values, K=QQ):
    N = len(values)
    return DomainMatrix([[K(values[i]) if i == j else K.zero for j in range(N)] for i in range(N)], (N, N), K)


def test_indices_and_signs():
    assert wedge_indices(2) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert partner((1, 4), 2) == (2, 3)
    assert partner((1, 2), 2) == (1, 2)
    assert sigma_sign((1, 4), 2) == -1
    assert plus_eigenvalue(2) == -1
    assert plus_eigenvalue(3) == 1
    assert spin_sign(0) == PLUS and spin_sign(1) == MINUS
    with pytest.raises(ValueError):
        check_index((2, 1), 2)
    with pytest.raises(ValueError):
        check_index((1, 5), 2)
    print("✓ Wedge indices and signs work")


def test_eigen_basis():
    for n in (1, 2, 3):
        half = len(wedge_indices(n)) // 2
        eps = plus_eigenvalue(n)
        plus, minus = eigen_basis(n, PLUS), eigen_basis(n, MINUS)
        assert len(plus) == len(minus) == half
        assert all(apply_ae(v) == v.scaled(eps) for v in plus)
        assert all(apply_ae(v) == v.scaled(-eps) for v in minus)
    plus2 = set(eigen_basis(2, PLUS))
    assert WedgeVector.from_dict(2, {(1, 4): 1, (2, 3): 1}) in plus2
    assert WedgeVector.basis_vector((1, 2), 2) in plus2
    with pytest.raises(ValueError):
        eigen_basis(2, 'sideways')
    print("✓ Eigenspaces have half the dimension")


def test_ae_square_is_discriminant():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3):
        for _ in range(3):
            values = [int(v) for v in rng.integers(1, 9, size=2 * n)]
            gram = _diag(values)
            assert ae_square_check(gram) == discriminant(gram).D
    assert ae_square_check(_diag([1, 1])) == QQ(-1)
    with pytest.raises(ValueError):
        ae_square_check(_diag([1, 0]))
    print("✓ a_e squared is the discriminant")


def test_discriminant():
    assert discriminant(split_gram(1, QQ)).split
    assert discriminant(split_gram(2, QQ)).split
    plain = discriminant(_diag([1, 1]))
    assert plain.D == QQ(-1) and not plain.split and plain.label == 'quadratic'
    with pytest.raises(ValueError):
        discriminant(_diag([1, 2, 3]))
    print("✓ Discriminants are classified")


def test_parity_rule_n2():
    gram = split_gram(2, QQ)
    assert isotropic_coordinate_indices(2) == [(1, 2), (1, 3), (2, 4), (3, 4)]
    W12, W13, W34 = (coordinate_subspace(T, 2, QQ) for T in [(1, 2), (1, 3), (3, 4)])
    assert in_eigenspace(W12, PLUS) and in_eigenspace(W34, PLUS)
    assert in_eigenspace(W13, MINUS) and not in_eigenspace(W13, PLUS)
    assert isotropic_parity(W12, W34, gram) == SAME
    assert isotropic_parity(W12, W13, gram) == OPPOSITE
    with pytest.raises(ValueError):
        isotropic_parity(coordinate_subspace((1, 4), 2, QQ), W12, gram)
    print("✓ Parity rule matches the eigenspaces for n=2")


def test_wedge_matrix_and_plucker():
    eye = _diag([1, 1, 1, 1])
    assert wedge_matrix(eye) == _diag([1] * 6)
    P = coordinate_subspace((1, 2), 2, QQ)
    v = plucker_vector(P).to_list()
    assert v[0][0] == QQ(1) and all(row[0] == QQ(0) for row in v[1:])
    print("✓ Compound matrices and Plücker vectors work")


def test_plus_lattice_of_lambda_minus_one():
    K = dvr.laurent_domain()
    Y, pivots = lattice_pm_basis(orthogonal_lattice_matrix(2, -1, K), 2, PLUS)
    index = wedge_indices(2)
    assert sorted(index[i] for i in pivots) == [(1, 2), (1, 4), (3, 4)]
    rows = Y.to_list()
    col = next(c for c in range(Y.shape[1]) if rows[index.index((1, 4))][c] == K.one)
    assert rows[index.index((2, 3))][col] == dvr.u_power(K, 2)
    with pytest.raises(ValueError):
        orthogonal_lattice_matrix(2, 4, K)
    print("✓ Plus lattice of Λ₋₁ has basis e12, e34, e14 + u²e23")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING SPIN ALGEBRA")
    print("=" * 80)
    tests = [
        test_indices_and_signs, test_eigen_basis, test_ae_square_is_discriminant, test_discriminant,
        test_parity_rule_n2, test_wedge_matrix_and_plucker, test_plus_lattice_of_lambda_minus_one,
    ]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError as e:
            failed += 1
            print(f"⚠️  {test.__name__} failed: {e}")
    print("=" * 80)
    print(f"✅ {len(tests) - failed}/{len(tests)} passed")
