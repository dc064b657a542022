"""Loop-free digraphs with digons, semi-cut queries and strong components."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

Arc = tuple[int, int]
Direction = Literal["out", "in"]


class DigraphError(ValueError):
    """Raised for malformed digraphs or out-of-range vertices."""


class ContractError(ValueError):
    """Raised when an operation is called outside its precondition."""


@dataclass(frozen=True)
class Digraph:
    """Digraph on vertices ``0..n-1``.

    Arcs are stored sorted by ``(tail, head)``; loops and repeated arcs are
    rejected, opposite arcs (digons) are allowed.
    """

    n: int
    arcs: tuple[Arc, ...]
    _arc_set: frozenset[Arc] = field(repr=False, compare=False)
    _out: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise DigraphError(f"vertex count must be nonnegative, got {n}")
        arc_list = [(int(u), int(v)) for u, v in arcs]
        seen: set[Arc] = set()
        for u, v in arc_list:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if (u, v) in seen:
                raise DigraphError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        ordered = tuple(sorted(arc_list))
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            out[u].append(v)
            inn[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", ordered)
        object.__setattr__(self, "_arc_set", frozenset(ordered))
        object.__setattr__(self, "_out", tuple(tuple(x) for x in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(x)) for x in inn))

    def __contains__(self, arc: object) -> bool:
        return arc in self._arc_set

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    @property
    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DigraphError(f"vertex {v} out of range for n={self.n}")

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._in[v]

    def neighbors(self, v: int) -> list[int]:
        """Vertices joined to ``v`` by at least one arc, ascending."""
        return sorted(set(self.out_neighbors(v)) | set(self.in_neighbors(v)))

    def semi_cut(self, v: int, direction: Direction) -> list[Arc]:
        if direction == "out":
            return [(v, w) for w in self.out_neighbors(v)]
        if direction == "in":
            return [(u, v) for u in self.in_neighbors(v)]
        raise DigraphError(f"unknown direction {direction!r}")

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def reverse(self) -> Digraph:
        return Digraph(self.n, ((v, u) for u, v in self.arcs))

    def induced(self, keep: Iterable[int]) -> tuple[Digraph, list[int]]:
        """Induced subdigraph on ``keep``; returns it with new-id -> old-id."""
        old = sorted(set(keep))
        for v in old:
            self._check(v)
        index = {v: i for i, v in enumerate(old)}
        arcs = [(index[u], index[v]) for u, v in self.arcs if u in index and v in index]
        return Digraph(len(old), arcs), old


def semi_degree(d: Digraph, v: int, direction: Direction) -> int:
    return len(d.semi_cut(v, direction))


def peripheral_vertices(d: Digraph) -> dict[int, str]:
    """Map each vertex with an empty semi-cut to ``sink``, ``source`` or ``isolated``."""
    result: dict[int, str] = {}
    for v in d.vertices:
        dout, din = d.out_degree(v), d.in_degree(v)
        if dout == 0 and din == 0:
            result[v] = "isolated"
        elif dout == 0:
            result[v] = "sink"
        elif din == 0:
            result[v] = "source"
    return result


@dataclass(frozen=True)
class StrongComponents:
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.components)

    @property
    def initial(self) -> tuple[int, ...]:
        return self.components[0]

    @property
    def terminal(self) -> tuple[int, ...]:
        return self.components[-1]


def strong_components(d: Digraph) -> StrongComponents:
    """Tarjan's algorithm, iterative; components in topological order.

    Tarjan emits components in reverse topological order; the result is
    reversed. Among components with no ordering constraint the output is
    deterministic (driven by ascending vertex ids).
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    emitted: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            succ = d.out_neighbors(v)
            if i < len(succ):
                work[-1] = (v, i + 1)
                w = succ[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                emitted.append(tuple(sorted(comp)))
    components = tuple(reversed(emitted))
    component_of = [0] * n
    for ci, comp in enumerate(components):
        for v in comp:
            component_of[v] = ci
    return StrongComponents(components, tuple(component_of))


def is_strong(d: Digraph) -> bool:
    return d.n >= 1 and len(strong_components(d)) == 1


def arcs_between(d: Digraph, xs: Iterable[int], ys: Iterable[int]) -> list[Arc]:
    xset, yset = set(xs), set(ys)
    return [(u, v) for u, v in d.arcs if u in xset and v in yset]


def is_semicomplete(d: Digraph) -> bool:
    return all(
        d.has_arc(u, v) or d.has_arc(v, u)
        for u in range(d.n)
        for v in range(u + 1, d.n)
    )


def is_tournament(d: Digraph) -> bool:
    return is_semicomplete(d) and len(d.arcs) == d.n * (d.n - 1) // 2


def is_even(d: Digraph) -> bool:
    return all(d.degree(v) % 2 == 0 for v in d.vertices)


def delete_vertex(d: Digraph, v: int) -> tuple[Digraph, list[int]]:
    """Remove ``v``; returns the smaller digraph and its new-id -> old-id map."""
    d._check(v)
    return d.induced(u for u in d.vertices if u != v)
