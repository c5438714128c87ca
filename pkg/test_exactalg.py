"""
Tests for the exact algebra layer: fields, Gröbner bases and the decision
procedures built on them.
"""

import sys
sys.path.append('.')

import pytest

from src.exactalg import (
    EMPTY_DIMENSION, RATIONALS, Budget, BudgetExhausted, CoefficientField, Ideal, RingSpec, contains,
    count_points, eliminate, groebner_basis, hilbert_function, ideal_quotient, intersect, is_flat_over_dvr,
    is_generically_empty, jacobian_corank, krull_dim, normal_form, radical_membership, same_ideal, saturate,
    special_fiber,
)

XY = RingSpec(('x', 'y'))
TXY = RingSpec(('t', 'x', 'y'))
XU = RingSpec(('x', 'u'))


def test_field_parse_and_format():
    """Strings go in and come back in canonical form."""
    f5 = CoefficientField(5)
    assert f5.format(f5.parse('1/2')) == '3'
    assert RATIONALS.format(RATIONALS.parse('-3/6')) == '-1/2'
    assert f5.label == 'F5' and RATIONALS.label == 'Q'
    with pytest.raises(ValueError):
        CoefficientField(2)
    with pytest.raises(ValueError):
        CoefficientField(9)
    with pytest.raises(ValueError):
        f5.parse('1/5')
    print("✓ Field parsing works")


def test_groebner_and_membership():
    x, y = XY.gens
    I = groebner_basis(Ideal.of(XY, [x - 1, y - 2]))
    assert set(I.basis) == {x - 1, y - 2}
    assert contains(I, x * y - 2)
    assert not contains(I, x - 2)
    assert not normal_form(x * y - 2, I)
    assert normal_form(x ** 2 + y, I) == XY.ring(3)
    assert Ideal.of(XY, [x, x - 1]).is_unit()
    assert contains(Ideal.of(XY, [x]), x * y)
    assert not contains(Ideal.of(XY, [x]), y)
    print("✓ Gröbner bases and membership work")


def test_zero_generator_rejected():
    x, _ = XY.gens
    with pytest.raises(ValueError):
        groebner_basis(Ideal.of(XY, [x, XY.ring.zero]))
    with pytest.raises(ValueError):
        groebner_basis(Ideal.of(XY, []))
    print("✓ Zero generators are rejected")


def test_budget_exhausted():
    x, y = XY.gens
    with pytest.raises(BudgetExhausted) as info:
        groebner_basis(Ideal.of(XY, [x ** 2 - y, x * y - 1]), Budget(max_pairs=1, max_degree=1))
    assert info.value.budget.max_degree == 1
    print("✓ Budget exhaustion is reported")


def test_eliminate_twisted_cubic():
    t, x, y = TXY.gens
    J = eliminate(Ideal.of(TXY, [x - t ** 2, y - t ** 3]), ['t'])
    assert J.spec.names == ('x', 'y')
    X, Y = J.spec.gens
    assert contains(J, X ** 3 - Y ** 2)
    assert not contains(J, X)
    print("✓ Elimination recovers the cusp")


def test_eliminate_to_zero():
    t, x, _ = TXY.gens
    J = eliminate(Ideal.of(TXY, [x - t]), ['t'])
    assert J.is_zero
    assert krull_dim(J) == 2
    print("✓ Elimination can leave the zero ideal")


def test_saturate_and_intersect():
    x, y = XY.gens
    assert same_ideal(saturate(Ideal.of(XY, [x * y]), y), groebner_basis(Ideal.of(XY, [x])))
    meet = intersect(Ideal.of(XY, [x]), Ideal.of(XY, [y]))
    assert same_ideal(meet, groebner_basis(Ideal.of(XY, [x * y])))
    quotient = ideal_quotient(Ideal.of(XY, [x * y, x ** 2]), x)
    assert same_ideal(quotient, groebner_basis(Ideal.of(XY, [x, y])))
    print("✓ Saturation and intersection work")


def test_radical_membership():
    x, y = XY.gens
    I = Ideal.of(XY, [x ** 2])
    assert radical_membership(x, I)
    assert not radical_membership(y, I)
    with pytest.raises(ValueError):
        radical_membership(XY.ring.zero, I)
    print("✓ Radical membership works")


def test_krull_dim():
    x, y = XY.gens
    assert krull_dim(Ideal.of(XY, [x * y])) == 1
    assert krull_dim(Ideal.of(XY, [x, y])) == 0
    assert krull_dim(Ideal.of(XY, [x, x - 1])) == EMPTY_DIMENSION
    assert krull_dim(Ideal.zero(XY)) == 2
    print("✓ Krull dimension works")


def test_flatness():
    x, u = XU.gens
    torsion = is_flat_over_dvr(Ideal.of(XU, [x * u]), 'u')
    assert not torsion
    assert torsion.witness == x
    assert is_flat_over_dvr(Ideal.of(XU, [x - u]), 'u')
    assert is_flat_over_dvr(Ideal.of(XU, [x]), 'u')
    # empty scheme
    assert is_flat_over_dvr(Ideal.of(XU, [XU.ring.one]), 'u')
    print("✓ Flatness over the DVR works")


def test_flatness_respects_budget():
    x, u = XU.gens
    gens = [x ** 2 - u, x * u - 1, u ** 3 - 2]
    assert Ideal.of(XU, gens).is_unit()
    tiny = Budget(max_pairs=1, max_degree=1)
    with pytest.raises(BudgetExhausted):
        Ideal.of(XU, gens).is_unit(tiny)
    with pytest.raises(BudgetExhausted):
        is_flat_over_dvr(Ideal.of(XU, gens), 'u', tiny)
    print("✓ Flatness passes its budget to the unit test")


def test_generic_emptiness():
    x, u = XU.gens
    assert is_generically_empty(Ideal.of(XU, [u ** 2, x]), 'u')
    assert not is_generically_empty(Ideal.of(XU, [x * u - 1]), 'u')
    print("✓ Generic emptiness works")


def test_special_fiber():
    x, u = XU.gens
    J = special_fiber(Ideal.of(XU, [x ** 2 - u]), 'u')
    assert J.spec.names == ('x',)
    assert krull_dim(J) == 0
    print("✓ Special fiber drops u")


def test_hilbert_function():
    x, y = XY.gens
    assert hilbert_function(Ideal.of(XY, [x * y]), 3) == 2
    assert hilbert_function(Ideal.zero(XY), 3) == 4
    with pytest.raises(ValueError):
        hilbert_function(Ideal.of(XY, [x - 1]), 2)
    print("✓ Hilbert function works")


def test_count_points_and_jacobian():
    f3 = RingSpec(('x', 'y'), CoefficientField(3))
    a, b = f3.gens
    assert count_points(Ideal.of(f3, [a * b]), 3) == 5
    spec = RingSpec(('x', 'y'), CoefficientField(5))
    x, y = spec.gens
    assert jacobian_corank([x ** 2 + y ** 2 - 1], ['x', 'y'], [1, 0]) == 1
    assert jacobian_corank([], ['x', 'y'], [0, 0]) == 2
    print("✓ Point counts and Jacobian coranks work")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING EXACT ALGEBRA")
    print("=" * 80)
    tests = [
        test_field_parse_and_format, test_groebner_and_membership, test_zero_generator_rejected,
        test_budget_exhausted, test_eliminate_twisted_cubic, test_eliminate_to_zero,
        test_saturate_and_intersect, test_radical_membership, test_krull_dim, test_flatness,
        test_flatness_respects_budget,
        test_generic_emptiness, test_special_fiber, test_hilbert_function, test_count_points_and_jacobian,
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
