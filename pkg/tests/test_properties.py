"""Randomized properties over hypothesis-drawn digraphs."""

from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from weakodd.classes import classify_semicomplete, semicomplete_defect_coloring, semicomplete_two_coloring
from weakodd.digraph import Digraph, is_semicomplete
from weakodd.formats import parse_document, serialize_document
from weakodd.oracle import brute_chromatic_index, brute_defect
from weakodd.parity import (
    ArcColoring,
    chromatic_index,
    construct_two_coloring,
    decide_two_colorable,
    defect,
    defect_coloring,
    verify_coloring,
)


@st.composite
def digraphs(draw, max_n: int = 6, max_arcs: int = 12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_arcs)) if pairs else []
    return Digraph(n, arcs)


@st.composite
def semicomplete_digraphs(draw, max_n: int = 6):
    n = draw(st.integers(1, max_n))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        kind = draw(st.sampled_from(("uv", "vu", "both")))
        if kind != "vu":
            arcs.append((u, v))
        if kind != "uv":
            arcs.append((v, u))
    return Digraph(n, arcs)


@settings(max_examples=200, deadline=None)
@given(digraphs())
def test_engine_agrees_with_oracle(d):
    k, witness = chromatic_index(d)
    assert verify_coloring(d, witness).ok
    assert k == brute_chromatic_index(d)
    assert defect(d) == brute_defect(d)
    assert decide_two_colorable(d) == (defect(d) == 0)
    assert len(defect_coloring(d)[1].failing) == defect(d)
    if decide_two_colorable(d):
        assert verify_coloring(d, construct_two_coloring(d)).ok


@settings(max_examples=100, deadline=None)
@given(digraphs())
def test_index_one_iff_uniform_coloring_verifies(d):
    k, _ = chromatic_index(d)
    uniform_ok = verify_coloring(d, ArcColoring.uniform(d)).ok
    assert (k <= 1) == uniform_ok


@settings(max_examples=150, deadline=None)
@given(semicomplete_digraphs())
def test_semicomplete_constructions(d):
    assert is_semicomplete(d)
    _, index, _ = classify_semicomplete(d)
    assert index == chromatic_index(d)[0]
    if index == 2:
        assert verify_coloring(d, semicomplete_two_coloring(d)).ok
    if index == 3:
        for x in d.vertices:
            failing = semicomplete_defect_coloring(d, x)[1].failing
            assert failing == {x}


@settings(max_examples=100, deadline=None)
@given(digraphs(max_n=8, max_arcs=30))
def test_document_round_trip(d):
    assert parse_document(serialize_document(d)) == d
