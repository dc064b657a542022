from __future__ import annotations

import pytest

from weakodd import classes
from weakodd.classes import (
    SemicompleteClass,
    blow_up,
    classify_extended_tournament,
    classify_semicomplete,
    classify_tournament,
    et_defect,
    et_defect_coloring,
    is_bad_et,
    v2_count_is_even,
    remove_et_vertex,
    semicomplete_defect_coloring,
    semicomplete_two_coloring,
    tournament_covering,
)
from weakodd.digraph import ContractError, Digraph
from weakodd.generators import GenSpec, enumerate_tournaments, gen
from weakodd.oracle import brute_chromatic_index, brute_covering_exists
from weakodd.parity import chromatic_index, defect, verify_coloring, verify_covering


def test_tournament_classification(c3, tt3, t5star):
    assert classify_tournament(c3)[0] == 1
    assert classify_tournament(tt3)[0] == 2
    index, case = classify_tournament(t5star)
    assert index == 3 and "just one peripheral vertex" in case


@pytest.mark.parametrize("n", range(1, 7))
def test_tournament_classification_matches_engine_exhaustively(n):
    for t in enumerate_tournaments(n):
        assert classify_tournament(t)[0] == chromatic_index(t)[0]


def test_semicomplete_classification(digon, t5star, tt3):
    assert classify_semicomplete(digon)[:2] == (SemicompleteClass.INDEX1, 1)
    assert classify_semicomplete(t5star)[:2] == (SemicompleteClass.BAD, 3)
    with_digon = Digraph(3, list(tt3.arcs) + [(1, 0)])
    assert classify_semicomplete(with_digon)[1] == chromatic_index(with_digon)[0]
    with pytest.raises(ContractError):
        classify_semicomplete(Digraph(3, [(0, 1)]))


def test_semicomplete_two_coloring_examples(c3, tt3):
    assert semicomplete_two_coloring(c3).color_of == {a: 1 for a in c3.arcs}
    c = semicomplete_two_coloring(tt3)
    assert c.color_of == {(0, 1): 1, (1, 2): 1, (0, 2): 2}


def test_ladder_with_appended_source_and_sink(strong4):
    arcs = [(u + 1, v + 1) for u, v in strong4.arcs]
    arcs += [(0, v) for v in range(1, 6)] + [(v, 5) for v in range(1, 5)]
    d = Digraph(6, arcs)
    coloring, case = classes.ladder_coloring(d)
    assert verify_coloring(d, coloring).ok


@pytest.mark.parametrize("seed", range(150))
def test_ladder_on_random_semicomplete(seed):
    d = gen(GenSpec("semicomplete", 2 + seed % 6, seed, digon_probability=(0.2, 0.5)[seed % 2]))
    cls, index, _ = classify_semicomplete(d)
    assert index == chromatic_index(d)[0]
    if cls is SemicompleteClass.GOOD2:
        coloring, _ = classes.ladder_coloring(d)
        assert verify_coloring(d, coloring).ok
    assert defect(d) == (1 if cls is SemicompleteClass.BAD else 0)


def test_semicomplete_defect_colorings(t5star):
    _, rep = semicomplete_defect_coloring(t5star)
    assert rep.failing == {4}
    for x in t5star.vertices:
        _, rep = semicomplete_defect_coloring(t5star, x)
        assert rep.failing <= {x} and len(rep.failing) == 1
    assert semicomplete_defect_coloring(t5star, 4)[1].failing == {4}


def test_blow_up_examples(tt3):
    assert blow_up(tt3, (1, 1, 1)).digraph == tt3
    k2 = Digraph(2, [(0, 1)])
    assert blow_up(k2, (2, 1)).digraph.arcs == ((0, 2), (1, 2))
    spec = blow_up(tt3, (1, 1, 2))
    assert spec.digraph.n == 4 and len(spec.digraph.arcs) == 5
    assert spec.blocks[2] == (2, 3)
    assert set(spec.digraph.in_neighbors(2)) == {0, 1} and spec.digraph.out_degree(3) == 0
    with pytest.raises(ValueError):
        blow_up(tt3, (1, 0, 1))


def test_bad_et_examples(t4, bad_et):
    bad, w = is_bad_et(bad_et)
    assert bad and w.odd_order and w.even_index == 3 and w.dominates and w.singleton_side == "out"
    assert bad_et.q == 5
    assert brute_chromatic_index(bad_et.digraph) == 3
    assert not is_bad_et(blow_up(t4, (1, 1, 1, 1)))[0]
    # reversing v2 -> v3 keeps N+(v4) = {v1} dominating N-(v4) = {v2, v3}
    flipped = Digraph(4, [a for a in t4.arcs if a != (1, 2)] + [(2, 1)])
    spec = blow_up(flipped, (1, 1, 1, 2))
    assert is_bad_et(spec)[0] and brute_chromatic_index(spec.digraph) == 3
    # reversing v1 -> v2 breaks the domination
    flipped = Digraph(4, [a for a in t4.arcs if a != (0, 1)] + [(1, 0)])
    spec = blow_up(flipped, (1, 1, 1, 2))
    bad, w = is_bad_et(spec)
    assert not bad and not w.dominates and brute_chromatic_index(spec.digraph) == 2
    with pytest.raises(ContractError):
        is_bad_et(blow_up(Digraph(3, [(0, 1), (0, 2), (1, 2)]), (1, 1, 2)))


def test_et_classification_examples(c3, tt3, bad_et):
    assert classify_extended_tournament(blow_up(c3, (3, 1, 5)))[0] == 1
    assert classify_extended_tournament(blow_up(tt3, (1, 1, 2)))[0] == 2
    assert classify_extended_tournament(bad_et)[0] == 3


def test_mixed_parity_blow_up_can_have_index_one(tt3):
    # doubling the middle of a transitive triple leaves every semi-degree odd or zero
    spec = blow_up(tt3, (1, 2, 1))
    assert classify_extended_tournament(spec)[0] == 1
    assert brute_chromatic_index(spec.digraph) == 1


@pytest.mark.parametrize("seed", range(120))
def test_et_classification_matches_engine(seed):
    spec = gen(GenSpec("extended_tournament", 1 + seed % 5, seed, max_size=3))
    if spec.q > 10:
        return
    assert classify_extended_tournament(spec)[0] == chromatic_index(spec.digraph)[0]
    assert v2_count_is_even(spec)
    assert et_defect(spec) == defect(spec.digraph)
    if spec.ell == spec.n:
        assert chromatic_index(spec.digraph)[0] == chromatic_index(spec.base)[0]


def test_et_defect_colorings(t5star, bad_et):
    spec = blow_up(t5star, (1,) * 5)
    _, rep = et_defect_coloring(spec, 4)
    assert rep.failing <= {4} and len(rep.failing) == 1
    for x in bad_et.blocks[3]:
        assert et_defect_coloring(bad_et, x)[1].failing <= {x}
        rest = remove_et_vertex(bad_et, x)
        assert rest.ell == rest.n
    x = bad_et.blocks[0][0]
    rest = remove_et_vertex(bad_et, x)
    assert classify_extended_tournament(rest)[0] <= 2
    assert et_defect_coloring(bad_et, x)[1].failing <= {x}
    for x in bad_et.digraph.vertices:
        assert len(et_defect_coloring(bad_et, x)[1].failing) == 1


def test_v2_count_is_even_examples(tt3, t5star, bad_et):
    assert v2_count_is_even(blow_up(tt3, (1, 1, 2)))
    assert v2_count_is_even(blow_up(t5star, (1,) * 5))
    assert v2_count_is_even(bad_et)


def test_covering_examples(c3, tt3, t5star):
    assert all(s == {1} for s in tournament_covering(c3).covering.sets.values())
    cov = tournament_covering(tt3).covering
    assert not cov.doubled() and verify_covering(tt3, cov).ok
    result = tournament_covering(t5star)
    assert len(result.covering.doubled()) <= 1 and verify_covering(t5star, result.covering).ok
    exists, fewest, _ = brute_covering_exists(t5star)
    assert exists and fewest <= 1


def _degree(arcs, v, direction):
    return sum(1 for a in arcs if (a[0] if direction == "out" else a[1]) == v)


def _assert_repair_bookkeeping(t, result):
    assert result.case.startswith("three-arc repair")
    x, y, z = result.x, result.y, result.z
    base = result.base
    if base[(x, y)] != 1:
        base = classes._swap(base)
    sets = result.covering.sets
    if sets[(x, y)] != {2}:
        sets = {a: frozenset(3 - c for c in s) for a, s in sets.items()}
    old = {i: [a for a, c in base.color_of.items() if c == i] for i in (1, 2)}
    new = {i: [a for a, s in sets.items() if i in s] for i in (1, 2)}
    assert _degree(new[1], x, "out") == _degree(old[1], x, "out") - 1
    assert _degree(new[1], x, "in") == _degree(old[1], x, "in") + 1
    assert _degree(new[1], x, "out") % 2 == 1 and _degree(new[1], x, "in") % 2 == 1
    assert any(_degree(new[i], y, "in") % 2 == 1 for i in (1, 2))
    assert any(
        all(_degree(new[i], z, side) % 2 == 1 for side in ("out", "in") if _degree(t.arcs, z, side))
        for i in (1, 2)
    )


def test_three_arc_repair_bookkeeping():
    # a tournament on 9 vertices whose sink defect coloring forces the repair
    t = gen(GenSpec("tournament", 9, 3513))
    result = tournament_covering(t)
    _assert_repair_bookkeeping(t, result)
    assert verify_covering(t, result.covering).ok and len(result.covering.doubled()) == 1
    flipped = tournament_covering(t.reverse())
    assert flipped.case.endswith("(reversed)")
    assert verify_covering(t.reverse(), flipped.covering).ok


@pytest.mark.parametrize("n", range(1, 6))
def test_coverings_on_all_small_tournaments(n):
    for t in enumerate_tournaments(n):
        result = tournament_covering(t)
        doubled = result.covering.doubled()
        assert verify_covering(t, result.covering).ok
        assert len(doubled) <= (1 if classify_tournament(t)[0] == 3 else 0)
