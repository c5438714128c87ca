"""
Tests for the JSON codecs: Iwahori-Weyl elements, wedge vectors over k(u)
and chart specs.
"""

import sys
sys.path.append('.')

import pytest

from src import dvr
from src.charts import ChartSpec
from src.interchange import (
    chart_spec_from_json, chart_spec_to_json, element_from_json, element_to_json, laurent_from_string,
    laurent_to_string, wedge_from_json, wedge_to_json,
)
from src.weyl import admissible_set, translation

K = dvr.laurent_domain()


def test_elements():
    for w in admissible_set(4, 3, 1):
        assert element_from_json(element_to_json(w)) == w
    data = element_to_json(translation(5, (1, 0)))
    assert data['perm'] == [1, 2] and data['t'] == [1, 0]
    with pytest.raises(ValueError):
        element_from_json({**data, 'perm': [1, 1]})
    with pytest.raises(ValueError):
        element_from_json({**data, 'signs': [1, 2]})
    print("✓ Elements survive JSON with 1-based permutations")


def test_laurent_strings():
    u = dvr.u_power(K, 1)
    assert laurent_to_string(K.convert(3) / u, K) == '3*u^-1'
    assert laurent_to_string(u ** 2 - 1, K) == 'u^2 - 1'
    assert laurent_from_string('3*u^-1', K) == K.convert(3) / u
    quotient = K.one / (K.one + u)
    assert laurent_from_string(laurent_to_string(quotient, K), K) == quotient
    print("✓ Laurent coefficients print as c*u^k")


def test_wedge_vectors():
    data = {'n': 2, 'terms': [[[1, 4], '3*u^-1'], [[2, 3], 'u^2']]}
    v = wedge_from_json(data, K)
    assert v.coefficient((1, 4)) == K.convert(3) / dvr.u_power(K, 1)
    assert v.coefficient((2, 3)) == dvr.u_power(K, 2)
    assert v.coefficient((1, 2)) == 0
    assert wedge_to_json(v, K) == data
    with pytest.raises(ValueError):
        wedge_from_json({'n': 2, 'terms': [[[3, 1], '1']]}, K)
    print("✓ Wedge vectors keep Laurent coefficients")


def test_chart_specs():
    specs = [ChartSpec('B1', 4, 3, 1, 'spin'), ChartSpec('A', 3, 2, 1, 'wedge'), ChartSpec('Orth', 2, 2, 2, 'spin')]
    for spec in specs:
        assert chart_spec_from_json(chart_spec_to_json(spec)) == spec
    assert chart_spec_from_json({'case': 'B', 'n': 4, 'r': 2, 's': 2}).level == 'naive'
    with pytest.raises(ValueError):
        chart_spec_from_json({'case': 'A', 'n': 3, 'r': 2})
    with pytest.raises(ValueError):
        chart_spec_from_json({'case': 'B1', 'n': 4, 'r': 2, 's': 2})
    print("✓ Chart specs survive JSON and are validated")


if __name__ == "__main__":
    print("=" * 80)
    print("TESTING JSON INTERCHANGE")
    print("=" * 80)
    tests = [test_elements, test_laurent_strings, test_wedge_vectors, test_chart_specs]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError as e:
            failed += 1
            print(f"⚠️  {test.__name__} failed: {e}")
    print("=" * 80)
    print(f"✅ {len(tests) - failed}/{len(tests)} passed")
