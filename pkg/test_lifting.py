"""
Tests for lifts of generic points and relative positions of lattice chains.
"""

import sys
sys.path.append('.')

import pytest

from src import dvr
from src.lifting import (
    GLRelativePosition, LiftSubset, PrecisionExhausted, StandardLattice, dual_subset, gl_relative_position,
    lift_chain, lift_chain_matrix, lift_lattice, lift_point, relative_position, standard_lift_position, to_unitary,
    valid_lift_subsets,
)
from src.weyl import identity, orbit_size, translation

K = dvr.laurent_domain()


def test_subsets():
    assert dual_subset((1,), 3) == (3,)
    assert [s.S for s in valid_lift_subsets(3, 1)] == [(1,), (3,)]
    assert len(valid_lift_subsets(4, 2)) == orbit_size(4, 2) == 4
    with pytest.raises(ValueError):
        LiftSubset(3, (2,))
    with pytest.raises(ValueError):
        LiftSubset(4, (1, 5))
    subset = LiftSubset(5, (1,))
    assert subset.dual == (5,) and subset.rest == (2, 3, 4)
    print("✓ Lift subsets are validated")


def test_lift_point_n3():
    result = lift_point(LiftSubset(3, (1,)), 2, 1, StandardLattice(3, 0))
    assert result.valid, result.checks
    assert result.basis.shape == (6, 3)
    with pytest.raises(ValueError):
        lift_point(LiftSubset(3, (1,)), 3, 0, StandardLattice(3, 0))
    print("✓ ℱ_{1} on Λ₀ passes every check")


def test_gl_relative_position_diagonal():
    h = dvr.diagonal([dvr.u_power(K, 2), dvr.u_power(K, 1), K.one], K)
    position = gl_relative_position(h)
    assert position == GLRelativePosition((1, 2, 3), (2, 1, 0))
    assert position.translation_by_target == (2, 1, 0)
    assert to_unitary(position) == translation(3, (1,))
    print("✓ Diagonal chains decode to translations")


def test_relative_position_identity():
    eye = dvr.diagonal([K.one] * 3, K)
    assert relative_position(eye, eye) == identity(3)
    print("✓ A chain sits at the identity relative to itself")


def test_chain_matrix_and_standard_lift():
    g = lift_chain_matrix(LiftSubset(3, (1,)), K)
    assert g == dvr.diagonal([dvr.u_power(K, 2), dvr.u_power(K, 1), K.one], K)
    found, expected = standard_lift_position(3, 2, 1)
    assert found == expected
    print("✓ Standard lift sits at t_λ")


def test_lift_chain_read_off_from_lift():
    for n, s in [(4, 1), (5, 2)]:
        for subset in valid_lift_subsets(n, s):
            result = lift_point(subset, n - s, s, StandardLattice(n, 0))
            derived = lift_chain(result)
            assert derived == lift_chain_matrix(subset, K), subset.S
            assert dvr.same_lattice(lift_lattice(result), derived)
    print("✓ L_S read off from ℱ_S matches diag(u², u, 1) on S, R ∖ S, S*")


def test_lattice_basis():
    u = dvr.u_power(K, 1)
    M = dvr.matrix([[u, u ** 2, 1], [0, u, u]], K)
    B = dvr.lattice_basis(M)
    assert B.shape == (2, 2)
    assert dvr.valuation_of_det(B) == 1
    assert dvr.same_lattice(B, dvr.diagonal([K.one, u], K))
    assert not dvr.same_lattice(B, dvr.diagonal([u, K.one], K))
    assert not dvr.same_lattice(B, dvr.diagonal([K.one, K.one], K))
    print("✓ Lattice bases span the same O-module")


def test_precision_exhausted():
    eye = dvr.diagonal([K.one] * 3, K)
    g = lift_chain_matrix(LiftSubset(3, (1,)), K)
    with pytest.raises(PrecisionExhausted) as info:
        relative_position(eye, g, precision=1)
    assert info.value.needed == 2 and info.value.precision == 1
    print("✓ Precision exhaustion is reported")


def test_to_unitary_rejects_non_similitude():
    with pytest.raises(ValueError):
        to_unitary(GLRelativePosition((1, 2, 3), (1, 0, 0)))
    print("✓ Non-unitary positions are rejected")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING LIFTS AND RELATIVE POSITIONS")
    print("=" * 80)
    tests = [
        test_subsets, test_lift_point_n3, test_gl_relative_position_diagonal, test_relative_position_identity,
        test_chain_matrix_and_standard_lift, test_lift_chain_read_off_from_lift, test_lattice_basis,
        test_precision_exhausted, test_to_unitary_rejects_non_similitude,
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
