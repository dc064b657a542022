from __future__ import annotations

import pytest

from weakodd.classes import blow_up
from weakodd.digraph import Digraph

C3_ARCS = [(0, 1), (1, 2), (2, 0)]
TT3_ARCS = [(0, 1), (0, 2), (1, 2)]
STRONG4_ARCS = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]
T5STAR_ARCS = STRONG4_ARCS + [(i, 4) for i in range(4)]
# v1..v4 as 0..3
T4_ARCS = [(0, 1), (0, 2), (1, 2), (3, 0), (1, 3), (2, 3)]


@pytest.fixture
def c3() -> Digraph:
    return Digraph(3, C3_ARCS)


@pytest.fixture
def tt3() -> Digraph:
    return Digraph(3, TT3_ARCS)


@pytest.fixture
def digon() -> Digraph:
    return Digraph(2, [(0, 1), (1, 0)])


@pytest.fixture
def strong4() -> Digraph:
    return Digraph(4, STRONG4_ARCS)


@pytest.fixture
def t5star() -> Digraph:
    return Digraph(5, T5STAR_ARCS)


@pytest.fixture
def t4() -> Digraph:
    return Digraph(4, T4_ARCS)


@pytest.fixture
def bad_et(t4):
    return blow_up(t4, (1, 1, 1, 2))
