from __future__ import annotations

import itertools

import pytest

from weakodd.digraph import Digraph
from weakodd.generators import GenSpec, SplitMix64, gen
from weakodd.matching import maximum_matching
from weakodd.oracle import brute_maximum_matching
from weakodd.split import (
    SplitVertex,
    bad_components,
    bipartite_representation,
    build_bad_component_graph,
    partial_split,
)

PETERSEN = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [
    (5 + i, 5 + (i + 2) % 5) for i in range(5)
]


def test_bipartite_representation(c3, digon, t5star):
    bg = bipartite_representation(c3)
    assert len(bg.nodes) == 6 and all(bg.degree(i) == 1 for i in range(6))
    bg = bipartite_representation(digon)
    pairs = {frozenset((bg.nodes[a], bg.nodes[b])) for a, b in bg.edges}
    assert pairs == {
        frozenset({SplitVertex(0, "+"), SplitVertex(1, "-")}),
        frozenset({SplitVertex(1, "+"), SplitVertex(0, "-")}),
    }
    assert len(bipartite_representation(t5star).edges) == 10


def test_partial_split_c3(c3):
    ps = partial_split(c3)
    assert [n.kind for n in ps.nodes] == ["m", "m", "m"]
    assert len(ps.components) == 1
    assert ps.vertices_of_class(2) == [] and ps.vertices_of_class(3) == []


def test_partial_split_tt3(tt3):
    ps = partial_split(tt3)
    assert ps.has_node(SplitVertex(1, "m")) and not ps.has_node(SplitVertex(1, "+"))
    v2 = set(ps.vertices_of_class(2))
    assert v2 == {SplitVertex(0, "+"), SplitVertex(2, "-"), SplitVertex(0, "-"), SplitVertex(2, "+")}
    (comp,) = ps.nontrivial_components()
    members = {ps.nodes[i] for i in ps.components[comp]}
    assert members == {SplitVertex(0, "+"), SplitVertex(1, "m"), SplitVertex(2, "-")}
    assert len(ps.members_of_class(comp, 2)) == 2
    assert bad_components(ps) == []


def test_partial_split_t5star(t5star):
    ps = partial_split(t5star)
    # vertices 0 and 2 have odd semi-degrees (3,1) and (1,3); 1 and 3 have (2,2) and (1+... )
    merged = {n.origin for n in ps.nodes if n.kind == "m"}
    expected = {v for v in t5star.vertices
                if t5star.out_degree(v) % 2 == 1 and t5star.in_degree(v) % 2 == 1}
    assert merged == expected
    assert len(bad_components(ps)) == 1
    g = build_bad_component_graph(t5star, ps)
    assert g.order == 1 and g.edges == () and g.matching_size == 0


def test_two_disjoint_bad_components(t5star):
    shifted = [(u + 5, v + 5) for u, v in t5star.arcs]
    d = Digraph(10, list(t5star.arcs) + shifted)
    g = build_bad_component_graph(d)
    assert g.order == 2 and g.matching_size == 0


@pytest.mark.parametrize("seed", range(40))
def test_split_invariants(seed):
    d = gen(GenSpec("arbitrary", 6, seed, arc_probability=0.35))
    ps = partial_split(d)
    bg = bipartite_representation(d)
    assert len(bg.edges) == len(ps.edges) == len(d.arcs)
    for v in d.vertices:
        if ps.has_node(SplitVertex(v, "m")):
            assert ps.degree(ps.node_index(SplitVertex(v, "m"))) == d.degree(v)
        else:
            assert ps.degree(ps.node_index(SplitVertex(v, "+"))) == d.out_degree(v)
            assert ps.degree(ps.node_index(SplitVertex(v, "-"))) == d.in_degree(v)
        assert bg.degree(bg.node_index(SplitVertex(v, "+"))) == d.out_degree(v)
    for comp in range(len(ps.components)):
        assert len(ps.members_of_class(comp, 3)) % 2 == 0
    merged = sum(1 for n in ps.nodes if n.kind == "m")
    assert merged == sum(1 for v in d.vertices if d.out_degree(v) % 2 and d.in_degree(v) % 2)


def _is_matching(edges, chosen):
    used = [v for e in chosen for v in e]
    return len(used) == len(set(used)) and all(tuple(sorted(e)) in {tuple(sorted(x)) for x in edges} for e in chosen)


@pytest.mark.parametrize(
    "n, edges, size",
    [
        (3, [(0, 1), (1, 2), (0, 2)], 1),
        (5, [(i, (i + 1) % 5) for i in range(5)], 2),
        (10, PETERSEN, 5),
    ],
)
def test_matching_examples(n, edges, size):
    m = maximum_matching(n, edges)
    assert len(m) == size and _is_matching(edges, m)
    assert brute_maximum_matching(n, edges) == size


@pytest.mark.parametrize("seed", range(150))
def test_matching_agrees_with_brute_force(seed):
    rng = SplitMix64(seed)
    n = rng.randint(1, 10)
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p in pairs if rng.random() < 0.3][:20]
    m = maximum_matching(n, edges)
    assert _is_matching(edges, m)
    assert len(m) == brute_maximum_matching(n, edges)
