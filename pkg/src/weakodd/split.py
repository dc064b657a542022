"""Split graphs of a digraph and the bad-component graph.

Each vertex ``v`` of a digraph has an out-half ``v+`` and an in-half ``v-``;
every arc ``uv`` becomes the edge ``u+ v-``. In the partial split, the two
halves of every vertex whose in- and out-degree are both odd are merged
back into one node. Nodes are then classed:

* ``V1``: merged nodes;
* ``V2``: unmerged halves of even degree (including degree 0);
* ``V3``: unmerged halves of odd degree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .digraph import Digraph
from .matching import maximum_matching

Kind = Literal["+", "-", "m"]
_KIND_ORDER = {"+": 0, "-": 1, "m": 2}


class SplitVertex(NamedTuple):
    origin: int
    kind: Kind

    def __str__(self) -> str:
        return f"{self.origin}" if self.kind == "m" else f"{self.origin}{self.kind}"


@dataclass(frozen=True)
class PartialSplit:
    digraph: Digraph
    nodes: tuple[SplitVertex, ...]
    # edges[k] is the image of digraph.arcs[k], as node indices
    edges: tuple[tuple[int, int], ...]
    class_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    def node_index(self, node: SplitVertex) -> int:
        return self._index[node]

    @property
    def _index(self) -> dict[SplitVertex, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {node: i for i, node in enumerate(self.nodes)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def has_node(self, node: SplitVertex) -> bool:
        return node in self._index

    def tail_node(self, u: int) -> int:
        return self._index.get(SplitVertex(u, "m"), self._index.get(SplitVertex(u, "+")))

    def head_node(self, v: int) -> int:
        return self._index.get(SplitVertex(v, "m"), self._index.get(SplitVertex(v, "-")))

    def degree(self, i: int) -> int:
        return self._degrees[i]

    @property
    def _degrees(self) -> list[int]:
        cached = self.__dict__.get("_deg_cache")
        if cached is None:
            cached = [0] * len(self.nodes)
            for a, b in self.edges:
                cached[a] += 1
                cached[b] += 1
            object.__setattr__(self, "_deg_cache", cached)
        return cached

    def is_trivial(self, comp: int) -> bool:
        members = self.components[comp]
        return len(members) == 1 and self._degrees[members[0]] == 0

    def nontrivial_components(self) -> list[int]:
        return [c for c in range(len(self.components)) if not self.is_trivial(c)]

    def members_of_class(self, comp: int, cls: int) -> list[int]:
        return [i for i in self.components[comp] if self.class_of[i] == cls]

    def vertices_of_class(self, cls: int) -> list[SplitVertex]:
        return [node for node, c in zip(self.nodes, self.class_of) if c == cls]

    def component_edges(self, comp: int) -> list[int]:
        """Indices (into ``edges``/``digraph.arcs``) of the edges inside ``comp``."""
        return [k for k, (a, _) in enumerate(self.edges) if self.component_of[a] == comp]


def _build(d: Digraph, merge: bool) -> PartialSplit:
    merged = {
        v for v in d.vertices
        if merge and d.out_degree(v) % 2 == 1 and d.in_degree(v) % 2 == 1
    }
    nodes: list[SplitVertex] = []
    for v in d.vertices:
        if v in merged:
            nodes.append(SplitVertex(v, "m"))
        else:
            nodes.append(SplitVertex(v, "+"))
            nodes.append(SplitVertex(v, "-"))
    index = {node: i for i, node in enumerate(nodes)}

    def tail(u: int) -> int:
        return index[SplitVertex(u, "m")] if u in merged else index[SplitVertex(u, "+")]

    def head(v: int) -> int:
        return index[SplitVertex(v, "m")] if v in merged else index[SplitVertex(v, "-")]

    edges = tuple((tail(u), head(v)) for u, v in d.arcs)
    degree = [0] * len(nodes)
    adj: list[list[int]] = [[] for _ in nodes]
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    class_of = tuple(
        1 if node.kind == "m" else (2 if degree[i] % 2 == 0 else 3)
        for i, node in enumerate(nodes)
    )
    # nodes are ordered by origin, so scanning in order yields components
    # sorted by their smallest origin
    component_of = [-1] * len(nodes)
    components: list[tuple[int, ...]] = []
    for start in range(len(nodes)):
        if component_of[start] != -1:
            continue
        cid = len(components)
        component_of[start] = cid
        members = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if component_of[y] == -1:
                    component_of[y] = cid
                    members.append(y)
                    queue.append(y)
        components.append(tuple(sorted(members)))
    return PartialSplit(d, tuple(nodes), edges, class_of, tuple(components), tuple(component_of))


def bipartite_representation(d: Digraph) -> PartialSplit:
    """The full split: no halves merged, classes from split degrees."""
    return _build(d, merge=False)


def partial_split(d: Digraph) -> PartialSplit:
    return _build(d, merge=True)


def bad_components(ps: PartialSplit) -> list[int]:
    """Nontrivial components with an odd number of V2 nodes and no V3 node."""
    return [
        c for c in ps.nontrivial_components()
        if len(ps.members_of_class(c, 2)) % 2 == 1 and not ps.members_of_class(c, 3)
    ]


@dataclass(frozen=True)
class BadComponentGraph:
    components: tuple[int, ...]
    # pairs of positions into ``components``, with the lowest shared vertex
    edges: tuple[tuple[int, int], ...]
    shared_vertex: dict[tuple[int, int], int]
    matching: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return len(self.components)

    @property
    def matching_size(self) -> int:
        return len(self.matching)


def build_bad_component_graph(d: Digraph, ps: PartialSplit | None = None) -> BadComponentGraph:
    """Graph on bad components, adjacent when they hold the two halves of a vertex."""
    if ps is None:
        ps = partial_split(d)
    bad = bad_components(ps)
    position = {c: i for i, c in enumerate(bad)}
    shared: dict[tuple[int, int], int] = {}
    for v in d.vertices:
        plus, minus = SplitVertex(v, "+"), SplitVertex(v, "-")
        if not ps.has_node(plus):
            continue
        a = position.get(ps.component_of[ps.node_index(plus)])
        b = position.get(ps.component_of[ps.node_index(minus)])
        if a is None or b is None or a == b:
            continue
        key = (min(a, b), max(a, b))
        shared.setdefault(key, v)
    edges = tuple(sorted(shared))
    matching = tuple(maximum_matching(len(bad), edges))
    return BadComponentGraph(tuple(bad), edges, shared, matching)
