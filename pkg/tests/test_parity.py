from __future__ import annotations

import itertools

import pytest

from weakodd.digraph import ContractError, Digraph, delete_vertex, is_even
from weakodd.generators import GenSpec, SplitMix64, gen
from weakodd.oracle import brute_defect
from weakodd.parity import (
    ArcColoring,
    ArcCovering,
    chromatic_index,
    coloring_from_join,
    construct_two_coloring,
    decide_two_colorable,
    defect,
    defect_coloring,
    extend_coloring_rule_c,
    s_join,
    three_coloring,
    verify_coloring,
    verify_covering,
)
from weakodd.selftest import nonisolated_peripheral_count, random_connected_graph, random_even_digraph


def _degree_parity(n, edges, chosen):
    deg = [0] * n
    for k in chosen:
        a, b = edges[k]
        deg[a] += 1
        deg[b] += 1
    return {v for v in range(n) if deg[v] % 2}


def test_verify_examples(c3, tt3):
    assert verify_coloring(c3, ArcColoring.uniform(c3)).ok
    rep = verify_coloring(tt3, ArcColoring.uniform(tt3))
    assert 0 in rep.failing
    assert verify_coloring(Digraph(3), ArcColoring(0, {})).ok


def test_verify_rejects_partial_witness(tt3):
    with pytest.raises(ValueError):
        verify_coloring(tt3, ArcColoring(2, {(0, 1): 1}))
    with pytest.raises(ValueError):
        verify_covering(tt3, ArcCovering({(0, 1): frozenset({1})}))


def test_covering_counts_each_color_of_a_doubled_arc(tt3):
    # 0 has out-arcs colored {1,2} and {2}: color 1 appears once, so 0 is served
    cov = ArcCovering({(0, 1): frozenset({1, 2}), (0, 2): frozenset({2}), (1, 2): frozenset({1})})
    assert 0 in verify_covering(tt3, cov).satisfied


def test_s_join_examples():
    edges = [(0, 1), (1, 2)]
    assert s_join(3, edges, []) == []
    assert sorted(s_join(3, edges, [0, 2])) == [0, 1]
    k4 = list(itertools.combinations(range(4), 2))
    h = s_join(4, k4, range(4))
    assert _degree_parity(4, k4, h) == {0, 1, 2, 3}
    with pytest.raises(ContractError):
        s_join(3, edges, [0])


@pytest.mark.parametrize("seed", range(100))
def test_s_join_parity_and_even_symmetric_difference(seed):
    rng = SplitMix64(seed)
    n = rng.randint(2, 12)
    edges = random_connected_graph(rng, n)
    s = [v for v in range(n) if rng.random() < 0.5]
    if len(s) % 2:
        s.pop()
    h1 = s_join(n, edges, s)
    assert _degree_parity(n, edges, h1) == set(s)
    # a second join for the same S, from the reversed edge order
    rev = edges[::-1]
    h2 = [len(edges) - 1 - k for k in s_join(n, rev, s)]
    assert _degree_parity(n, edges, set(h1) ^ set(h2)) == set()


def test_decide_and_construct(tt3, t5star, c3, digon):
    assert decide_two_colorable(tt3) and decide_two_colorable(c3)
    assert not decide_two_colorable(t5star)
    assert verify_coloring(tt3, construct_two_coloring(tt3)).ok
    for d in (c3, digon):
        c = construct_two_coloring(d)
        assert verify_coloring(d, c).ok
    with pytest.raises(ContractError):
        construct_two_coloring(t5star)


def test_defect_examples(tt3, t5star):
    assert defect(tt3) == 0 and defect(t5star) == 1
    shifted = [(u + 5, v + 5) for u, v in t5star.arcs]
    assert defect(Digraph(10, list(t5star.arcs) + shifted)) == 2
    coloring, rep = defect_coloring(t5star)
    assert len(rep.failing) == 1
    assert defect_coloring(tt3)[1].failing == frozenset()


def test_rule_c_examples(digon, tt3, t5star):
    c = extend_coloring_rule_c(digon, 1, ArcColoring(2, {}))
    assert set(c.color_of) == set(digon.arcs) and 0 in verify_coloring(digon, c).satisfied
    small, mapping = delete_vertex(tt3, 2)
    c = extend_coloring_rule_c(tt3, 2, ArcColoring(2, {(0, 1): 1}), mapping)
    assert verify_coloring(tt3, c).failing <= {2}
    small, mapping = delete_vertex(t5star, 4)
    c = extend_coloring_rule_c(t5star, 4, construct_two_coloring(small), mapping)
    assert verify_coloring(t5star, c).failing <= {4}


def test_rule_c_rejects_invalid_inner(t5star):
    small, mapping = delete_vertex(t5star, 4)
    with pytest.raises(ContractError):
        extend_coloring_rule_c(t5star, 4, ArcColoring.uniform(small), mapping)


@pytest.mark.parametrize("seed", range(60))
def test_rule_c_fails_at_most_at_v(seed):
    d = gen(GenSpec("arbitrary", 5, seed, arc_probability=0.45))
    for v in d.vertices:
        small, mapping = delete_vertex(d, v)
        if not decide_two_colorable(small):
            continue
        inner = construct_two_coloring(small)
        c = extend_coloring_rule_c(d, v, inner, mapping)
        assert verify_coloring(d, c).failing <= {v}


def test_chromatic_index_examples(c3, t5star):
    assert chromatic_index(Digraph(4))[0] == 0
    assert chromatic_index(c3)[0] == 1
    k, w = chromatic_index(t5star)
    assert k == 3 and verify_coloring(t5star, w).ok


def test_three_coloring_examples(t5star, bad_et):
    assert verify_coloring(t5star, three_coloring(t5star)).ok
    assert verify_coloring(bad_et.digraph, three_coloring(bad_et.digraph)).ok


@pytest.mark.parametrize("seed", range(150))
def test_engine_matches_oracle_on_small_digraphs(seed):
    d = gen(GenSpec("arbitrary", 2 + seed % 5, seed, arc_probability=0.4))
    if len(d.arcs) > 12:
        return
    k, w = chromatic_index(d)
    assert verify_coloring(d, w).ok and w.k <= 3
    if k == 1:
        assert verify_coloring(d, ArcColoring.uniform(d)).ok
    assert decide_two_colorable(d) == (defect(d) == 0)
    assert defect(d) == brute_defect(d)
    assert len(defect_coloring(d)[1].failing) == defect(d)


@pytest.mark.parametrize("seed", range(60))
def test_even_digraph_with_odd_peripheral_count_is_not_two_colorable(seed):
    d = random_even_digraph(SplitMix64(seed), 3 + seed % 5)
    assert is_even(d)
    if nonisolated_peripheral_count(d) % 2 == 1:
        assert not decide_two_colorable(d)
