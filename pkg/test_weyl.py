"""
Tests for Iwahori-Weyl group combinatorics, admissible sets and alcove figures.
"""

import sys
sys.path.append('.')

import pytest

from src.alcove_figures import draw_admissible, emit_alcove_svg
from src.weyl import (
    adm0, admissible_listing, admissible_set, affine_root_set, bruhat_leq, coherence_rhs,
    coherence_rhs_bruteforce, dominance_closure, dominant_coweight, dominates, extreme_elements,
    finite_weyl_order, identity, kottwitz_even, length, length_histogram, normalize_index_set, orbit_size,
    parahoric_classify, reduced_word, relative_root_datum, simple_reflection, valid_index_sets, vertexwise_check,
)


def test_group_basics():
    for n in (3, 4, 5):
        e = identity(n)
        assert length(e) == 0
        k = 0
        while True:
            try:
                s = simple_reflection(n, k)
            except (IndexError, ValueError):
                break
            assert length(s) == 1
            assert s * s == e
            k += 1
        assert k >= 2
        w = simple_reflection(n, 0) * simple_reflection(n, 1)
        assert w * w.inverse() == e
        assert len(reduced_word(w)[0]) == length(w)
    print("✓ Simple reflections, products and inverses work")


def test_n3_admissible_set():
    adm = admissible_set(3, 2, 1)
    assert len(adm) == 5
    assert length_histogram(adm) == {2: 2, 1: 2, 0: 1}
    print("✓ n=3 admissible set has 5 elements")


def test_trivial_signature():
    for n in (3, 4, 5):
        assert admissible_set(n, n, 0) == frozenset({identity(n)})
    print("✓ s=0 gives a single element")


def test_extremes_and_bruhat():
    for n, r, s in [(3, 2, 1), (4, 2, 2), (4, 3, 1), (5, 3, 2), (6, 4, 2)]:
        extremes = extreme_elements(n, r, s)
        assert len(extremes) == orbit_size(n, s)
        for t in extremes:
            assert bruhat_leq(identity(n), t)
            assert not bruhat_leq(t, identity(n))
    assert finite_weyl_order(5) == 8
    assert orbit_size(5, 1) == 4
    print("✓ Extreme elements match the W0-orbit")


def test_adm0_closed_form():
    assert adm0(5, 3, 2) == [(1, 1), (1, 0), (0, 0)]
    assert adm0(4, 2, 2) == [(1, 1), (0, 0)]
    assert adm0(6, 3, 3) == [(1, 1, 1), (1, 0, 0)]
    assert dominates((1, 1), (1, 0))
    assert not dominates((1, 0), (1, 1))
    with pytest.raises(ValueError):
        adm0(5, 2, 3)
    print("✓ Adm0 chains follow the closed form")


def test_adm0_matches_enumeration():
    for n in (7, 8):
        for s in range(n // 2 + 1):
            found = {dominant_coweight(w) for w in admissible_set(n, n - s, s)}
            assert found == set(adm0(n, n - s, s)), (n, s)
            assert dominance_closure(n, n - s, s) == adm0(n, n - s, s), (n, s)
    assert dominance_closure(9, 5, 4) == [(1, 1, 1, 1), (1, 1, 1, 0), (1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 0)]
    assert dominance_closure(8, 5, 3) == [(1, 1, 1, 0), (1, 0, 0, 0)]
    print("✓ Adm0 for n = 7, 8 agrees with enumeration of Adm")


def test_index_sets():
    assert len(valid_index_sets(3)) == 3
    assert len(valid_index_sets(4)) == 5
    assert normalize_index_set(5, ['0', '2']) == frozenset({0, 2})
    with pytest.raises(ValueError):
        normalize_index_set(4, [1])
    with pytest.raises(ValueError):
        normalize_index_set(4, [])
    conj = parahoric_classify(4, ['0', "2'"])
    assert conj.labels == frozenset({0, 2}) and conj.conjugated
    assert parahoric_classify(4, ['2', "2'"]).labels == frozenset({1, 2})
    print("✓ Index sets are validated and normalized")


def test_vertexwise_small():
    for I in valid_index_sets(3):
        assert vertexwise_check(3, 2, 1, I).holds
    print("✓ Vertex-wise identity holds for n=3")


def test_coherence():
    assert coherence_rhs(4, 2, 0) == 1
    assert coherence_rhs(4, 2, 1) == 20
    assert coherence_rhs_bruteforce(4, 2, 1) == 20
    for n, s, k in [(3, 1, 1), (4, 2, 2), (5, 2, 1)]:
        assert coherence_rhs(n, s, k) == coherence_rhs_bruteforce(n, s, k)
    with pytest.raises(ValueError):
        coherence_rhs(4, 0, 1)
    print("✓ Coherence counts agree")


def test_kottwitz_and_roots():
    assert kottwitz_even(4, 1, (1, 0)) == (1, 1)
    assert kottwitz_even(4, 0, (1, 1)) == (0, 0)
    with pytest.raises(ValueError):
        kottwitz_even(5, 0, (0, 0))
    families = affine_root_set(relative_root_datum(3))
    assert len(families) == 4
    halves = [f for f in families if f.offset]
    assert len(halves) == 2 and all(f.step == 1 for f in halves)
    print("✓ Kottwitz map and affine roots work")


def test_listing():
    df = admissible_listing(3, 2, 1)
    assert len(df) == 5
    assert int(df['extreme'].sum()) == 2
    assert list(df['length']) == sorted(df['length'], reverse=True)
    print("✓ Admissible listing is a sorted DataFrame")


def test_alcove_svg(tmp_path):
    first = draw_admissible(3, 2, 1, path=tmp_path / 'a.svg')
    second = draw_admissible(3, 2, 1, path=tmp_path / 'b.svg')
    assert first.read_text().startswith('<?xml')
    assert first.read_bytes() == second.read_bytes()
    draw_admissible(5, 3, 2, I=[0], path=tmp_path / 'c.svg')
    svg = emit_alcove_svg(4, 2, 2)
    assert svg.startswith('<?xml') and svg == emit_alcove_svg(4, 2, 2)
    assert '<svg' in emit_alcove_svg(3, 3, 0)
    with pytest.raises(ValueError):
        emit_alcove_svg(6, 3, 3)
    with pytest.raises(ValueError):
        draw_admissible(7, 4, 3, path=tmp_path / 'd.svg')
    print("✓ SVG figures are deterministic")


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    print("=" * 80)
    print("TESTING IWAHORI-WEYL COMBINATORICS")
    print("=" * 80)
    tests = [
        test_group_basics, test_n3_admissible_set, test_trivial_signature, test_extremes_and_bruhat,
        test_adm0_closed_form, test_adm0_matches_enumeration, test_index_sets, test_vertexwise_small, test_coherence,
        test_kottwitz_and_roots, test_listing,
    ]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError as e:
            failed += 1
            print(f"⚠️  {test.__name__} failed: {e}")
    with tempfile.TemporaryDirectory() as tmp:
        test_alcove_svg(Path(tmp))
    print("=" * 80)
    print(f"✅ {len(tests) + 1 - failed}/{len(tests) + 1} passed")
