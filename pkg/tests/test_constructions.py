import pytest

from bipturan.bigraph import complete, rho
from bipturan.constructions import (
    ExtremalParamsGyori,
    ExtremalParamsL,
    build_gyori_extremal,
    build_L,
    edge_count_L,
    gyori_edge_count,
    known_bounds,
    l_case,
    longest_cycle_outside_bound,
    varrho,
)
from bipturan.cycles import circumference, find_cycle_of_length, longest_cycle
from bipturan.errors import InvalidParams


def test_build_L_examples():
    assert build_L(3, 2, 2) == complete(3, 2)
    G = build_L(4, 4, 3)
    assert G.edge_count == 13
    # K_{4,3} plus one pendant Y-vertex
    assert sorted(G.degree(v) for v in G.vertices() if v.side == "Y") == [1, 4, 4, 4]
    G = build_L(ExtremalParamsL(5, 5, 2))
    assert G.edge_count == 14
    assert l_case(ExtremalParamsL(5, 5, 2)) == 4


@pytest.mark.parametrize("abc,edges", [((4, 4, 3), 13), ((5, 5, 2), 14), ((3, 2, 2), 6)])
def test_edge_count_L(abc, edges):
    assert edge_count_L(*abc) == edges == build_L(*abc).edge_count


@pytest.mark.parametrize("abc,value", [((5, 5, 2), 10), ((4, 4, 3), 4), ((4, 4, 4), 0)])
def test_varrho_examples(abc, value):
    assert varrho(*abc) == value


def test_varrho_matches_closed_forms():
    for a in range(2, 11):
        for b in range(2, a + 1):
            for c in range(2, b):
                bounds = longest_cycle_outside_bound(a, b, c)
                assert varrho(a, b, c) == max(bounds.values()) or varrho(a, b, c) in bounds.values()


def test_bound_cases_agree_at_b_equals_2c():
    for c in range(1, 6):
        for a in range(2 * c, 12):
            both = longest_cycle_outside_bound(a, 2 * c, c)
            assert set(both) == {"1", "2"} and both["1"] == both["2"]


def test_L_has_no_longer_cycle():
    for a in range(2, 8):
        for b in range(2, a + 1):
            for c in range(2, b):
                G = build_L(a, b, c)
                assert circumference(G) == 2 * c
                C = longest_cycle(G)
                outside = G.all_mask & ~G.mask_of(C.vertices)
                assert rho(G, outside) == varrho(a, b, c)


def test_invalid_L_params():
    with pytest.raises(InvalidParams):
        ExtremalParamsL(0, 2, 2)
    with pytest.raises(InvalidParams):
        varrho(2, 3, 1)


@pytest.mark.parametrize("mnk,edges,circ", [((6, 6, 1), 26, 8), ((4, 5, 1), 12, 4), ((2, 2, 0), 3, 0)])
def test_gyori_examples(mnk, edges, circ):
    G = build_gyori_extremal(*mnk)
    assert G.edge_count == edges == gyori_edge_count(*mnk)
    assert circumference(G) == circ


def test_gyori_has_no_target_cycle():
    G = build_gyori_extremal(ExtremalParamsGyori(6, 7, 1))
    assert find_cycle_of_length(G, 10) is None
    assert find_cycle_of_length(G, 8) is not None


def test_gyori_param_checks():
    with pytest.raises(InvalidParams):
        ExtremalParamsGyori(3, 3, 1)
    with pytest.raises(InvalidParams):
        ExtremalParamsGyori(5, 4, 0)


def test_known_bounds_examples():
    tab = known_bounds(4, 4, 3)
    assert tab["turan_formula"]["value"] == 10 and tab["turan_formula"]["applicable"]
    assert tab["exact_cycle_threshold"]["value"] == 10
    tab = known_bounds(5, 5, 3)
    assert tab["turan_formula"]["value"] == 13 and not tab["turan_formula"]["applicable"]


def test_naor_verstraete_parity():
    odd = known_bounds(4, 4, 3)["naor_verstraete"]["value"]
    even = known_bounds(4, 4, 2)["naor_verstraete"]["value"]
    assert odd == pytest.approx(3 * ((16) ** (4 / 6) + 8))
    assert even > 0
