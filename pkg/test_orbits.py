"""
Tests for partitions and the nilpotent orbit closures of the symmetric pairs.
"""

import sys
sys.path.append('.')

import numpy as np
import pytest

from src.exactalg import CoefficientField, krull_dim
from src.orbits import (
    ORTHOGONAL, SYMPLECTIC, Partition, SymmetricPairTag, covered_partitions, dominance_leq,
    double_partition, orbit_closure_ideal, orbit_dim, partitions_of, random_orbit_point,
    sample_orbit_points, transpose_partition, vanishes_at,
)

ORTHO = SymmetricPairTag(ORTHOGONAL)
SYMP = SymmetricPairTag(SYMPLECTIC)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.of_type(2, 1).parts == (2, 2, 1)
    assert Partition((3, 1)).total == 4 and len(Partition((3, 1))) == 2
    print("✓ Partitions are validated")


def test_transpose_and_double():
    assert transpose_partition(Partition((2, 2, 1))) == Partition((3, 2))
    assert transpose_partition(Partition((3, 2))) == Partition((2, 2, 1))
    assert double_partition(Partition((2, 1))) == Partition((2, 2, 1, 1))
    print("✓ Transpose and doubling work")


def test_dominance():
    parts = partitions_of(4)
    assert len(parts) == 5
    assert parts[0] == Partition((4,)) and parts[-1] == Partition((1, 1, 1, 1))
    assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
    assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))
    assert covered_partitions(Partition((2, 2))) == [Partition((2, 1, 1))]
    with pytest.raises(ValueError):
        dominance_leq(Partition((2,)), Partition((2, 1)))
    print("✓ Dominance order works")


def test_orbit_dim_and_tags():
    assert orbit_dim(2, 1) == 2
    assert orbit_dim(3, 0) == 0
    with pytest.raises(ValueError):
        orbit_dim(-1, 2)
    with pytest.raises(ValueError):
        SymmetricPairTag('unitary')
    with pytest.raises(ValueError):
        SYMP.check(4, 1)
    with pytest.raises(ValueError):
        SYMP.check(3, 0)
    assert ORTHO.chart_case == 'A' and SYMP.chart_case == 'B'
    print("✓ Orbit dimensions and pair tags work")


def test_random_points_lie_on_closure():
    rng = np.random.default_rng(42)
    ortho = orbit_closure_ideal(3, 1, ORTHO, CoefficientField(5))
    symp = orbit_closure_ideal(4, 2, SYMP, CoefficientField(5))
    for _ in range(5):
        assert vanishes_at(ortho, random_orbit_point(3, 1, ORTHO, 5, rng), 5)
        assert vanishes_at(symp, random_orbit_point(4, 2, SYMP, 5, rng), 5)
    with pytest.raises(ValueError):
        random_orbit_point(3, 1, ORTHO, 2)
    print("✓ Random orbit points satisfy the closure equations")


def test_orbit_closure_dimension():
    I = orbit_closure_ideal(3, 1, ORTHO, CoefficientField(3))
    assert krull_dim(I) == orbit_dim(2, 1)
    with pytest.raises(ValueError):
        orbit_closure_ideal(3, 2, ORTHO)
    print("✓ Orbit closure for (2,1) has dimension 2")


def test_sample_orbit_points():
    assert sample_orbit_points(3, 1, ORTHO, 5) == (20, 20)
    print("✓ Sampled orbit points all vanish")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING NILPOTENT ORBITS")
    print("=" * 80)
    tests = [
        test_partition_validation, test_transpose_and_double, test_dominance, test_orbit_dim_and_tags,
        test_random_points_lie_on_closure, test_orbit_closure_dimension, test_sample_orbit_points,
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
