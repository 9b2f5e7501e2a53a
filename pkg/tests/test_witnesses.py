import random

import pytest
from hypothesis import given, settings, strategies as st

from bipturan.bigraph import (
    BipartiteGraph,
    complete,
    from_edge_list,
    is_2connected,
    is_connected,
    min_pair_rho,
    pair_rho,
    xv,
    yv,
)
from bipturan.cycles import longest_cycle
from bipturan.errors import InvalidPath, PreconditionViolated
from bipturan.sweeps import LEMMAS, lemma_instance, run_lemma, sweep
from bipturan.witnesses import (
    PathWitness,
    detached_maximal_dpp,
    dpp_good_pair,
    extend_to_maximal,
    find_fan,
    is_maximal_path,
    long_path_between,
    maximal_path_with_terminus,
)

from conftest import cycle_graph, graphs
import oracles


def _label(v):
    return ("x" if v.side == "X" else "y", v.index)


def test_extend_to_maximal_examples(c8):
    P = extend_to_maximal(c8, [xv(0), yv(0)])
    assert P.order == 8 and is_maximal_path(c8, P)
    K = complete(2, 2)
    ham = [xv(0), yv(0), xv(1), yv(1)]
    assert list(extend_to_maximal(K, ham).vertices) == ham
    assert not is_maximal_path(complete(3, 3), [xv(0), yv(0), xv(1)])
    with pytest.raises(InvalidPath):
        is_maximal_path(c8, [xv(0), yv(2)])


def test_maximal_path_with_terminus_examples():
    W = maximal_path_with_terminus(complete(2, 2), yv(0), 2)
    assert W.order >= 4 and W.terminus.side == "X" and is_maximal_path(complete(2, 2), W)
    G = complete(3, 2)
    W = maximal_path_with_terminus(G, yv(0), 2)
    assert W.order >= 4 and W.terminus.side == "X"
    P = from_edge_list(2, 1, [(0, 0), (1, 0)])
    W = maximal_path_with_terminus(P, yv(0), 1)
    assert W.order == 2 and W.terminus.side == "X"
    with pytest.raises(PreconditionViolated):
        maximal_path_with_terminus(complete(2, 3), yv(0), 3)


def test_detached_dpp_examples():
    W = detached_maximal_dpp(complete(2, 2), xv(0), yv(0))
    assert W.order == 4 and W.detached and W.is_maximal(complete(2, 2))
    W = detached_maximal_dpp(complete(3, 3), xv(0), yv(0))
    assert W.order == 6
    edge = complete(1, 1)
    W = detached_maximal_dpp(edge, xv(0), yv(0))
    assert W.order == 2 and min_pair_rho(edge) == 1


def test_pair_rho_counts_shared_edge_once():
    K = complete(2, 2)
    assert pair_rho(K, 0, 0) == 3
    G = from_edge_list(2, 2, [(0, 0), (1, 1)])
    assert pair_rho(G, 0, 1) == 2


def squares_sharing_x_plus_pendant() -> BipartiteGraph:
    return from_edge_list(
        4, 4,
        [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (0, 3), (2, 2), (2, 3), (3, 0)],
    )


def square_with_pendant_path() -> BipartiteGraph:
    # K_{2,2} on x0,x1 / y0,y1 and the path y0 x2 y2
    return from_edge_list(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 2)])


@pytest.mark.parametrize(
    "G,a,b",
    [
        (squares_sharing_x_plus_pendant(), 1, 2),
        (square_with_pendant_path(), 0, 2),
    ],
)
def test_dpp_good_pair_examples(G, a, b):
    W = dpp_good_pair(G, xv(a), xv(b))
    assert W.order >= min_pair_rho(G) + 1
    assert oracles.best_detached_dpp(G, ("x", a), ("x", b)) >= W.order


def test_dpp_good_pair_rejects_2connected():
    with pytest.raises(PreconditionViolated):
        dpp_good_pair(complete(3, 3), xv(0), xv(1))


def test_find_fan_examples():
    G = complete(2, 3)
    C = longest_cycle(G)
    left = next(v for v in G.vertices() if v not in C.vertices)
    F = find_fan(G, left, C, 2)
    assert F.edge_count == 2 and len(F.paths) == 2

    G = complete(3, 4)
    C = longest_cycle(G)
    left = next(v for v in G.vertices() if v not in C.vertices)
    F = find_fan(G, left, C, 3)
    assert F.edge_count >= 3

    hexagon = cycle_graph(3)
    with pytest.raises(PreconditionViolated):
        find_fan(hexagon, xv(0), longest_cycle(hexagon), 2)


def test_long_path_between_examples():
    W = long_path_between(complete(2, 2), xv(0), xv(1))
    assert W.order == 3
    W = long_path_between(complete(3, 3), xv(0), xv(1))
    assert W.order >= 5
    hexagon = cycle_graph(3)
    W = long_path_between(hexagon, xv(0), xv(1))
    assert W.order >= 3
    assert oracles.longest_path_between(hexagon, ("x", 0), ("x", 1)) == 5


def test_rho_above_minimum_rejected():
    K = complete(2, 2)
    with pytest.raises(PreconditionViolated):
        detached_maximal_dpp(K, xv(0), yv(0), rho=4)


@given(graphs(max_side=4, min_side=1), st.data())
@settings(max_examples=150, deadline=None)
def test_detached_dpp_against_bruteforce(G, data):
    if not G.is_balanced or not is_connected(G):
        return
    x = data.draw(st.integers(0, G.m - 1))
    y = data.draw(st.integers(0, G.n - 1))
    W = detached_maximal_dpp(G, xv(x), yv(y))
    W.validate(G)
    assert W.is_maximal(G)
    assert W.order >= min_pair_rho(G) + 1
    assert oracles.best_detached_dpp(G, ("x", x), ("y", y)) >= W.order


@given(graphs(max_side=4, min_side=2), st.data())
@settings(max_examples=150, deadline=None)
def test_long_path_against_bruteforce(G, data):
    if not G.is_balanced or not is_2connected(G):
        return
    a, b = data.draw(st.lists(st.integers(0, G.m - 1), min_size=2, max_size=2, unique=True))
    W = long_path_between(G, xv(a), xv(b))
    assert W.origin == xv(a) and W.terminus == xv(b)
    assert W.order >= min_pair_rho(G)
    assert oracles.longest_path_between(G, ("x", a), ("x", b)) >= W.order


@pytest.mark.parametrize("lemma", LEMMAS)
def test_lemma_instances_are_reproducible(lemma):
    a = lemma_instance(lemma, random.Random("fixed"), 10)
    b = lemma_instance(lemma, random.Random("fixed"), 10)
    assert a[0] == b[0] and a[1] == b[1]
    G, anchors = a
    assert G.m + G.n <= 10
    _, size, bound = run_lemma(lemma, G, anchors)
    assert size >= bound


@pytest.mark.parametrize("lemma", LEMMAS)
def test_small_sweep(lemma):
    rep = sweep(lemma, samples=40, seed=7, max_order=10)
    assert rep.ok, rep.failures[:1]
