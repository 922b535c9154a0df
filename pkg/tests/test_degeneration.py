import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gcg.degeneration import (DegenerationError, GenusData, RationalCycle, SurvivorSet,
                              even_genus_data, find_label_isomorphism, is_compatible, limit_planes,
                              make_correspondence, odd_genus_data, reflection, standard_data,
                              tilde_data, union_config, verify_union)
from gcg.families import ab_decomposition
from gcg.planes import chain_config, double_curve


def test_make_correspondence_kind_iii_examples():
    a = make_correspondence(20, "iii", (20, 1))
    assert a.partner(1) == 20 and a.partner(10) == 11
    assert all(a.partner(j) == (21 - j - 1) % 20 + 1 for j in range(1, 21))
    b = make_correspondence(20, "iii", (3, 4))
    assert b.partner(1) == 6 and b.partner(8) == 19


def test_make_correspondence_kind_i_matches_tilde7_b():
    corr = make_correspondence(18, "i", 3)
    assert corr.fixed_components == (3, 12)
    assert corr.pairing == tilde_data(7).corr_b.pairing


def test_parity_errors():
    with pytest.raises(DegenerationError):
        make_correspondence(19, "iii", (1, 2))
    with pytest.raises(DegenerationError):
        make_correspondence(20, "ii", 1)
    with pytest.raises(DegenerationError):
        make_correspondence(20, "iii", (3, 5))


@given(st.integers(4, 60), st.integers(-100, 100), st.sampled_from([0, 1]))
@settings(max_examples=200)
def test_reflections_are_involutions_of_the_right_kind(k, c, base):
    corr = reflection(k, c, base)
    assert all(corr.partner(corr.partner(j)) == j for j in corr.cycle.components)
    assert len(corr.fixed_components) == {"i": 2, "ii": 1, "iii": 0}[corr.kind]
    if corr.kind == "ii":
        assert k % 2 == 1
    else:
        assert k % 2 == 0
    # pairs are at equal distance from the anchor
    rebuilt = make_correspondence(k, corr.kind, corr.anchor, base)
    assert rebuilt.pairing == corr.pairing


def test_odd_data_n3():
    data = odd_genus_data(3)
    assert data.cycle.k == 20
    assert data.survivors.indices == (1, 6, 8, 10, 11, 16, 18, 20)
    assert data.corr_a.kind == data.corr_b.kind == "iii"


def test_odd_data_n4():
    data = odd_genus_data(4)
    assert data.cycle.k == 28
    assert data.survivors.indices == (2, 7, 9, 11, 13, 16, 21, 23, 25, 27)


def test_g7_compatibility_end_pairs():
    data = odd_genus_data(3)
    ra = is_compatible(data.survivors, data.corr_a)
    rb = is_compatible(data.survivors, data.corr_b)
    assert ra and rb
    assert {frozenset(p) for p in ra.end_pairs} == {frozenset({1, 20}), frozenset({10, 11})}
    assert {frozenset(p) for p in rb.end_pairs} == {frozenset({1, 6}), frozenset({11, 16})}


def test_extra_survivor_breaks_condition_c():
    data = odd_genus_data(3)
    more = SurvivorSet(data.cycle, data.survivors.indices + (15,))
    report = is_compatible(more, data.corr_a)
    assert not report
    assert ("c", (6, 15)) in report.violations


def test_fixed_survivor_breaks_condition_a():
    data = tilde_data(8)
    bad = SurvivorSet(data.cycle, data.survivors.indices[:-1] + (22,))
    report = is_compatible(bad, data.corr_a)
    assert any(v[0] == "a" for v in report.violations)


def test_g7_limit_planes():
    data = odd_genus_data(3)
    lim = limit_planes(data.survivors, data.corr_a)
    spans = {r.plane: (r.first, r.second) for r in lim.spans.rows}
    assert spans["18>3"] == (("p", 1), ("l", 7))
    assert spans["10|11"] == (("l", 4), ("l", 5))
    assert spans["8>13"] == (("p", 5), ("l", 3))
    assert len(lim.config.facets) == 6


def test_limit_planes_refuses_incompatible():
    data = odd_genus_data(3)
    more = SurvivorSet(data.cycle, data.survivors.indices + (15,))
    with pytest.raises(DegenerationError, match="incompatible"):
        limit_planes(more, data.corr_a)


@pytest.mark.parametrize("n", range(4, 13))
def test_even_data_valid_range(n):
    data = even_genus_data(n)
    assert len(data.survivors.indices) == 2 * n + 3
    assert data.corr_a.fixed_components == (0,)
    assert data.corr_a.kind == data.corr_b.kind == "ii"
    assert is_compatible(data.survivors, data.corr_a)
    assert is_compatible(data.survivors, data.corr_b)


def test_even_data_n3_reports_the_printed_term():
    with pytest.raises(DegenerationError, match=r"8n\+6\[\(n-1\)/2\]-\[\(n-2\)/2\]-11 = 19"):
        even_genus_data(3)


def test_no_survivor_set_works_on_the_n3_cycle():
    # the k = 19 cycle with the printed pairings admits no survivor set at all
    k = 19
    cycle = RationalCycle(k, 0)
    a, b = reflection(k, k, 0), reflection(k, 6, 0)
    found = 0
    for subset in itertools.combinations(range(k), 9):
        s = SurvivorSet(cycle, subset)
        if is_compatible(s, a) and is_compatible(s, b):
            found += verify_union(GenusData(8, cycle, s, a, b, source="even n=3")).ok
    assert found == 0


def test_tilde_kinds():
    t7, t8 = tilde_data(7), tilde_data(8)
    assert (t7.corr_a.kind, t7.corr_b.kind) == ("iii", "i")
    assert (t8.corr_a.kind, t8.corr_b.kind) == ("ii", "ii")
    assert t8.corr_a.fixed_components == (22,)
    assert t8.corr_b.fixed_components == (15,)
    assert (2 * 15 - 7) % 23 == 0


@pytest.mark.parametrize("g", [7] + list(range(9, 21)))
def test_union_is_standard_configuration(g):
    data = standard_data(g)
    report = verify_union(data)
    assert report, report.mismatch
    assert len(report.limit_a.config.facets) == len(report.limit_b.config.facets) == g - 1
    alpha = [r for r in report.limit_a.spans.rows if r.first[0] == "l"]
    assert len(alpha) == 2


def test_g7_witness_sends_a_chain_to_a_part():
    report = verify_union(standard_data(7))
    targets = {int(v[1:]) for tag, v in report.witness.items() if tag.startswith("A:")}
    assert targets == {1, 4, 5, 6, 7, 11}


@pytest.mark.parametrize("g", [7, 11, 15])
def test_limit_intersection_is_double_curve(g):
    data = standard_data(g)
    _, la, lb = union_config(data)
    curve = double_curve(la.config, lb.config)
    assert len(curve.facets) == g + 1
    dec = ab_decomposition(g)
    graph_curve = double_curve(chain_config(dec, "A"), chain_config(dec, "B"))
    assert len(graph_curve.facets) == len(curve.facets)


@pytest.mark.parametrize("g", [7, 8])
def test_tilde_union(g):
    assert verify_union(tilde_data(g))


def test_correspondences_differ():
    for g in [7] + list(range(9, 21)):
        data = standard_data(g)
        assert data.corr_a.pairing != data.corr_b.pairing


def test_union_mismatch_is_reported():
    # tilde data against the standard graph of the same genus
    from gcg.families import standard_graph

    report = verify_union(tilde_data(7), graph=standard_graph(7))
    assert not report
    assert report.mismatch


def test_isomorphism_search_respects_colours():
    from gcg.planes import PlaneConfig

    a = PlaneConfig(3, (0, 1, 2, 3), ((0, 1, 2), (1, 2, 3)))
    b = PlaneConfig(3, (0, 1, 2, 3), ((0, 1, 3), (1, 2, 3)))
    assert find_label_isomorphism(a, b) is not None
    assert find_label_isomorphism(a, b, ["x", "y"], ["x", "y"]) is not None
    c = PlaneConfig(3, (0, 1, 2, 3), ((0, 1, 2), (0, 1, 3)))
    assert find_label_isomorphism(a, c, ["x", "y"], ["z", "z"]) is None


def test_data_json_shape():
    out = odd_genus_data(3).to_json()
    assert out["schema"] == "gcg/1"
    assert out["k"] == 20
    assert [c["kind"] for c in out["correspondences"]] == ["iii", "iii"]
    assert [1, 20] in out["correspondences"][0]["pairs"]
