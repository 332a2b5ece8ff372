import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirzebruch.bundles import validate
from hirzebruch.conclusions import (
    COLLAPSE,
    H1_NONZERO,
    PI1_INFINITE,
    NoConclusion,
    bew_degree_set,
    cohomology_degrees,
    hurewicz_homotopy_set,
    theorem_conclusion,
)


def test_cohomology_degrees():
    assert cohomology_degrees([5, 4]) == {0, 4, 5, 9}
    assert cohomology_degrees([1, 1]) == {0, 1, 2}
    assert cohomology_degrees([3]) == {0, 3}
    with pytest.raises(ValueError):
        cohomology_degrees([0, 2])


def test_degree_set_examples():
    r = bew_degree_set(validate(7, 8, 3, 3))
    assert r.kappa_degree == 9 and r.m_set == {3, 4, 8} and not r.pi1_flag
    r = bew_degree_set(validate(3, 3, 1, 1))
    assert r.m_set == {1} and r.pi1_flag
    assert bew_degree_set(validate(21, 21, 7, 7)).m_set == {6, 13}
    assert bew_degree_set(validate(21, 21, 6, 6)).m_set == {2, 5}


def test_hurewicz_examples():
    r = hurewicz_homotopy_set({3, 4, 8})
    assert r.j_set == {2, 3, 4, 8} and r.hurewicz_threshold == 4 and not r.pi1_possible
    assert hurewicz_homotopy_set({2, 5}).j_set == {2, 5}
    assert hurewicz_homotopy_set({3}).j_set == {3}
    r = hurewicz_homotopy_set({1, 4, 6})
    assert r.pi1_possible and r.j_set == {2, 3, 4, 6}
    r = hurewicz_homotopy_set({0, 1})
    assert r.component_level and r.pi1_possible and not r.j_set


def test_hurewicz_errors():
    with pytest.raises(ValueError):
        hurewicz_homotopy_set(set())
    with pytest.raises(ValueError):
        hurewicz_homotopy_set({-1, 3})


@given(st.frozensets(st.integers(0, 60), min_size=1))
def test_hurewicz_threshold_is_minimal(degrees):
    higher = {m for m in degrees if m >= 2}
    if not higher and not degrees & {0, 1}:
        with pytest.raises(NoConclusion):
            hurewicz_homotopy_set(degrees)
        return
    r = hurewicz_homotopy_set(degrees)
    t = r.hurewicz_threshold

    def ok(s):
        return all(m <= 2 * s + 1 for m in higher if m > s)

    assert ok(t) and (t == 1 or not ok(t - 1))
    assert r.j_set == set(range(2, t + 1)) | {m for m in higher if m > t}
    assert higher <= r.j_set or not higher


def test_conclusion_dim_15():
    rep = theorem_conclusion(15)
    assert rep.params.as_tuple() == (7, 8, 3, 3)
    assert rep.kind == "homotopy" and rep.j_set == {2, 3, 4, 8}
    assert rep.alternatives[0] == PI1_INFINITE
    assert "{2,3,4,8}" in rep.alternatives[1]
    assert not rep.side_conditions


def test_conclusion_dim_6_component_or_h1():
    rep = theorem_conclusion(6)
    assert rep.kind == "component-or-H1"
    assert rep.alternatives == (COLLAPSE, H1_NONZERO)
    assert rep.side_conditions


def test_conclusion_dim_13_is_mixture():
    rep = theorem_conclusion(13)
    assert rep.kind == "mixture" and rep.alternatives[0] == COLLAPSE
    assert rep.params.base_dims == (2, 1)


def test_conclusion_dim_42_diagonal_pairs():
    rep = theorem_conclusion(42)
    assert rep.j_set == {2, 5}
    pairs = [(bp.i, sorted(m)) for bp, m in rep.diagonal_choices if bp.p == bp.q]
    assert pairs == [(6, [2, 5]), (7, [6, 13]), (8, [10, 21]), (9, [14, 29]), (10, [18, 37])]


def test_conclusion_not_applicable():
    for d in (1, 5, 7, 8, 9):
        with pytest.raises(NoConclusion):
            theorem_conclusion(d)


def test_j_range_for_large_dims():
    for d in range(10, 61):
        rep = theorem_conclusion(d)
        assert rep.j_set and 2 <= min(rep.j_set) and max(rep.j_set) <= 9


def test_extra_statements_for_degree_one_choices():
    # d = 5 mod 8 also admits a choice with a circle in the base
    rep = theorem_conclusion(21)
    kinds = {kind for kind, _, _ in rep.extra}
    assert kinds and kinds <= {"mixture", "component-or-H1"}
    for _, bp, alts in rep.extra:
        assert bp.degree_one_base and COLLAPSE in alts


def test_json_is_stable():
    a = theorem_conclusion(15).to_json()
    b = theorem_conclusion(15).to_json()
    assert a == b and a["j_set"] == [2, 3, 4, 8] and a["hurewicz_threshold"] == 4
