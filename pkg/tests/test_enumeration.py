import math
import random

import pytest

from bipturan.bigraph import complete
from bipturan.constructions import build_gyori_extremal
from bipturan.cycles import find_cycle_of_length
from bipturan.enumeration import (
    THEOREMS,
    enumerate_graphs,
    in_proven_range,
    iter_graphs,
    probe_outside_range,
    random_graph,
    turan_exact,
    turan_formula,
    verify_theorem,
)
from bipturan.errors import InvalidParams, TooLarge, UnknownTheorem

import oracles


@pytest.mark.parametrize("m,n,k,count", [(2, 2, 0, 16), (2, 2, 4, 1), (4, 4, 11, 6885)])
def test_enumerate_counts(m, n, k, count):
    assert enumerate_graphs(m, n, k) == count
    assert count == sum(math.comb(m * n, e) for e in range(k, m * n + 1))


def test_enumeration_is_labeled_and_complete():
    seen = [oracles.flat_mask(G) for G in iter_graphs(3, 3)]
    assert len(seen) == len(set(seen)) == 512


def test_shards_partition_the_space():
    whole = [G.rows for G in iter_graphs(3, 3, 4)]
    parts = []
    for idx in range(8):
        parts.extend(G.rows for G in iter_graphs(3, 3, 4, shard=(idx, 3)))
    assert sorted(whole) == sorted(parts)
    with pytest.raises(InvalidParams):
        list(iter_graphs(2, 2, shard=(4, 2)))


def test_guards():
    with pytest.raises(TooLarge):
        next(iter_graphs(6, 7))
    with pytest.raises(TooLarge):
        turan_exact(6, 7, 6)
    with pytest.raises(InvalidParams):
        turan_exact(4, 4, 5)
    with pytest.raises(InvalidParams):
        turan_exact(3, 3, 8)


def test_random_graph_edge_count():
    rng = random.Random(3)
    for e in range(0, 13):
        assert random_graph(rng, 3, 4, e).edge_count == e


@pytest.mark.parametrize("m,n,two_t,value", [(2, 3, 4, 4), (4, 4, 6, 10), (5, 5, 8, 17)])
def test_turan_examples(m, n, two_t, value):
    res = turan_exact(m, n, two_t)
    assert res.value == value == res.formula_value
    assert res.in_proven_range
    assert res.witness.edge_count == value
    assert find_cycle_of_length(res.witness, two_t) is None


@pytest.mark.parametrize(
    "m,n,two_t",
    [(m, n, 2 * t) for m in range(2, 5) for n in range(2, 5) if m * n <= 12 for t in range(2, min(m, n) + 1)],
)
def test_turan_matches_bruteforce(m, n, two_t):
    assert turan_exact(m, n, two_t).value == oracles.turan_bruteforce(m, n, two_t)


def test_turan_monotone_in_n_and_above_gyori():
    for t in (2, 3):
        values = [turan_exact(3, n, 2 * t).value for n in range(3, 7)]
        assert values == sorted(values)
    for m, n, t in [(4, 4, 3), (4, 6, 3), (5, 6, 4)]:
        k = m - t
        if n >= m >= 2 * k + 2:
            assert turan_exact(m, n, 2 * t).value >= build_gyori_extremal(m, n, k).edge_count


def test_transposed_turan_agrees():
    assert turan_exact(3, 5, 6).value == turan_exact(5, 3, 6).value


def test_probe_examples():
    rep = probe_outside_range(4, 4, 4)
    assert rep["formula_value"] == 7 and rep["value"] == 9 and rep["strict_excess"]
    rep = probe_outside_range(3, 3, 4)
    assert rep["formula_value"] == 5 and rep["value"] == oracles.turan_bruteforce(3, 3, 4)
    with pytest.raises(InvalidParams):
        probe_outside_range(4, 4, 6)


def test_formula_helpers():
    assert turan_formula(4, 4, 3) == 10
    assert in_proven_range(4, 4, 3) and not in_proven_range(5, 5, 3)


def test_theorem_registry():
    assert set(THEOREMS) == {"T1.2", "T1.4", "T1.5i", "T1.5ii", "T1.7", "ES", "L2.4", "L2.5", "L2.7", "L2.8"}
    with pytest.raises(UnknownTheorem):
        verify_theorem("T9.9", 3, 3)
    with pytest.raises(InvalidParams):
        verify_theorem("T1.2", 3, 3)


def test_verify_examples():
    assert verify_theorem("T1.2", 4, 4, t=3) == []
    assert verify_theorem("ES", 4, 4) == []


@pytest.mark.parametrize("tid", ["L2.4", "L2.5", "L2.7", "L2.8"])
def test_cited_results_hold_on_small_graphs(tid):
    assert verify_theorem(tid, range(1, 4), range(1, 4)) == []


def test_falsifier_catches_a_false_claim():
    # with one edge fewer than the threshold, C_6 can be avoided
    th = THEOREMS["T1.2"]()
    G = turan_exact(4, 4, 6).witness
    assert th.check(G, {"t": 3}) is None
    weaker = type("Weaker", (type(th),), {"min_edges": lambda self, m, n, p: 0})()
    assert weaker.check(G, {"t": 3}) is not None


def test_random_mode_is_deterministic():
    a = verify_theorem("T1.7", range(2, 6), range(2, 6), exhaustive=False, samples=300, seed=11)
    b = verify_theorem("T1.7", range(2, 6), range(2, 6), exhaustive=False, samples=300, seed=11)
    assert [v.to_json() for v in a] == [v.to_json() for v in b] == []


def test_parallel_and_sharded_runs_match_sequential():
    seq = verify_theorem("T1.4", 4, 4, k=1)
    sharded = verify_theorem("T1.4", 4, 4, k=1, shard_bits=3)
    par = verify_theorem("T1.4", 4, 4, k=1, shard_bits=2, jobs=2)
    assert seq == sharded == par == []
    assert turan_exact(4, 4, 6, jobs=2).value == 10


def test_all_longest_mode():
    assert verify_theorem("T1.7", 3, 4, all_longest=True) == []


def test_violation_json_and_file():
    th = THEOREMS["T1.2"]
    from bipturan.enumeration import Violation

    v = Violation(complete(2, 2), th.id, th.clause, {"m": 2})
    doc = v.to_json()
    assert doc["edges"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
    assert v.graph_file().splitlines()[1] == "p bip 2 2"
