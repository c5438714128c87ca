"""
Tests for chart ideals: generator groups, the orthogonal examples, the
Picard chart and the even n / odd s reduction.
"""

import sys
sys.path.append('.')

import pytest

from src.charts import (
    U, ChartSpec, chart_even_sodd_reduction, chart_flatness, chart_ideal, minors, orthogonal_chart_ideal,
    picard_I1_chart, picard_I1_ideal, picard_sample_point, point_satisfies_spin, prune, rank2_flatness,
    rank2_special_points, rank4_report, scalar_matrix, spin_constraints, structured_generators,
    target_charpoly, wedge_special_fiber_dim,
)
from src.exactalg import DEFAULT_BUDGET, CoefficientField, RingSpec, contains, groebner_basis
from src.reports import check_picard_sign

F3 = CoefficientField(3)
F5 = CoefficientField(5)


def test_chart_spec_validation():
    for bad in [('A', 4, 2, 2), ('B', 3, 2, 1), ('A', 3, 1, 1), ('A', 3, 1, 2), ('X', 3, 2, 1)]:
        with pytest.raises(ValueError):
            ChartSpec(*bad)
    with pytest.raises(ValueError):
        ChartSpec('B1', 4, 2, 2, 'wedge')
    with pytest.raises(ValueError):
        ChartSpec('Orth', 2, 2, 2, 'wedge')
    with pytest.raises(ValueError):
        ChartSpec('Picard-I1', 3, 2, 1, 'wedge')
    assert ChartSpec('A', 3, 2, 1).at_level('spin').level == 'spin'
    assert ChartSpec('B1', 4, 3, 1, 'spin').level == 'spin'
    print("✓ Chart specs are validated")


def test_target_charpoly():
    spec = RingSpec(('u',))
    (u,) = spec.gens
    one = spec.ring.one
    assert target_charpoly(u, 1, 1, one) == [one, 0 * one, -u ** 2]
    assert target_charpoly(u, 1, 0, one) == [one, u]
    print("✓ Target characteristic polynomial is (T − u)^s (T + u)^r")


def test_generator_groups():
    groups = structured_generators(ChartSpec('A', 3, 2, 1))
    assert [len(groups[k]) for k in ('square', 'symmetry', 'charpoly')] == [9, 9, 3]
    assert 'wedge' not in groups
    wedge = structured_generators(ChartSpec('A', 3, 2, 1, 'wedge'))
    # 3-minors of X − uI (one) and 2-minors of X + uI (nine)
    assert len(wedge['wedge']) == 10
    print("✓ Generator groups have the expected sizes")


def test_prune_and_minors():
    spec = RingSpec(('x', 'y'))
    x, y = spec.gens
    assert prune([x, 2 * x, spec.ring.zero, y, -y]) == [x, y]
    spec3 = RingSpec(('u',))
    R = spec3.ring.to_domain()
    eye = scalar_matrix(2, R.one, R)
    assert len(minors(eye, 1)) == 4
    assert minors(eye, 3) == []
    print("✓ Pruning and minors work")


def test_trivial_signature_forces_scalar():
    I = groebner_basis(chart_ideal(ChartSpec('A', 3, 3, 0, 'wedge'), F3))
    v = I.spec.var
    assert contains(I, v('x11') + v(U))
    assert contains(I, v('x12'))
    assert contains(I, v('x33') + v(U))
    print("✓ s=0 forces X = −uI")


def test_rank2_points():
    assert len(rank2_special_points('naive', 3)) == 3
    assert len(rank2_special_points('spin', 3)) == 2
    assert len(rank2_special_points('naive', 5)) == 3
    print("✓ Rank 2 example special fibers have 3 and 2 points")


def test_rank2_flatness():
    naive, verdicts = rank2_flatness('naive', F3)
    assert not naive
    assert [chart for chart, v in verdicts.items() if not v] == [('a', 'd')]
    spin_flat, _ = rank2_flatness('spin', F3)
    assert spin_flat
    print("✓ Rank 2 example is flat only at level spin")


def test_rank4():
    I = orthogonal_chart_ideal('rank4', 'naive', F3)
    assert len(I.gens) == 5
    report = rank4_report(F3)
    assert report.spin_radical_ok and report.spin_dim == 1
    assert report.naive_dim == 1 and report.naive_components == 4 and report.naive_radical_ok
    print("✓ Rank 4 example special fibers match")


def test_picard_sample_points_lie_on_chart():
    I = picard_I1_ideal(F5)
    for x, y, u in [(0, 0, 0), (1, 2, 3), (4, 1, 1), (2, 3, 0)]:
        point = picard_sample_point(x, y, u, 1, 5)
        assert all(not g(*point) for g in I.gens)
    print("✓ Picard I={1} parametrization satisfies every equation")


def test_picard_generic_sign():
    _, report = picard_I1_chart(F3, samples=5)
    assert report.sign == 1
    assert report.eliminated_is_zero and report.lu_identity
    assert report.samples == 5 and report.smooth
    ok, found, detail = check_picard_sign(3, 5, 42, DEFAULT_BUDGET)
    assert ok and found == 'X4 = +u'
    assert '-sqrt(pi0)' in detail
    print("✓ Generic fiber of the Picard chart has X4 = +u")


def test_even_odd_reduction_shape():
    result = chart_even_sodd_reduction(4, 3, 1, 'wedge', F3)
    assert result.free_variables == ('t11', 'b21', 'b22')
    assert result.reduced.spec.names == ('t11', 'b21', 'b22', 'y11', 'y12', 'y21', 'y22', U)
    assert not result.verified
    with pytest.raises(ValueError):
        chart_even_sodd_reduction(4, 2, 2)
    print("✓ Even/odd reduction solves for the dependent blocks")


def test_f1_chart_at_spin_level():
    spec = ChartSpec('B1', 4, 3, 1, 'spin')
    constraints = spin_constraints(spec, F3)
    assert constraints
    zero = [0] * len(constraints[0].ring.symbols)
    assert all(not c(*zero) for c in constraints)
    assert point_satisfies_spin(4, 3, 1, 'f1', F3)
    assert not point_satisfies_spin(4, 3, 1, 'pi-lattice', F3)
    wedge = chart_ideal(spec.at_level('wedge'), F3)
    spin = groebner_basis(chart_ideal(spec, F3))
    assert all(contains(spin, g) for g in wedge.gens)
    assert chart_flatness(spec, F3).flat
    print("✓ ℱ₁ chart carries the spin condition and stays flat")


def test_wedge_fiber_dimension_n3():
    assert wedge_special_fiber_dim(3, 2, 1, F3) == 2
    print("✓ n=3 wedge special fiber has dimension rs = 2")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING CHART IDEALS")
    print("=" * 80)
    tests = [
        test_chart_spec_validation, test_target_charpoly, test_generator_groups, test_prune_and_minors,
        test_trivial_signature_forces_scalar, test_rank2_points, test_rank2_flatness, test_rank4,
        test_picard_sample_points_lie_on_chart, test_picard_generic_sign, test_even_odd_reduction_shape,
        test_f1_chart_at_spin_level, test_wedge_fiber_dimension_n3,
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
