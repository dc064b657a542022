"""Hamiltonian dipaths and dicycles in semicomplete digraphs."""

from __future__ import annotations

from typing import Sequence

from .digraph import (
    Arc,
    ContractError,
    Digraph,
    is_semicomplete,
    is_strong,
    strong_components,
)


def path_arcs(path: Sequence[int]) -> list[Arc]:
    return list(zip(path, path[1:]))


def cycle_arcs(cycle: Sequence[int]) -> list[Arc]:
    if len(cycle) < 2:
        return []
    return list(zip(cycle, list(cycle[1:]) + [cycle[0]]))


def is_dipath(d: Digraph, path: Sequence[int]) -> bool:
    return len(set(path)) == len(path) and all(d.has_arc(u, v) for u, v in path_arcs(path))


def is_dicycle(d: Digraph, cycle: Sequence[int]) -> bool:
    return (
        len(cycle) >= 2
        and len(set(cycle)) == len(cycle)
        and all(d.has_arc(u, v) for u, v in cycle_arcs(cycle))
    )


def _insertion_path(d: Digraph, vertices: Sequence[int]) -> list[int]:
    path: list[int] = []
    for v in vertices:
        if not path or d.has_arc(v, path[0]):
            path.insert(0, v)
        elif d.has_arc(path[-1], v):
            path.append(v)
        else:
            # path[0] -> v and v -> path[-1]: a switch point exists
            for i in range(len(path) - 1):
                if d.has_arc(path[i], v) and d.has_arc(v, path[i + 1]):
                    path.insert(i + 1, v)
                    break
            else:  # pragma: no cover - excluded by semicompleteness
                raise ContractError(f"vertex {v} cannot be inserted")
    return path


def hamiltonian_dipath(d: Digraph, vertices: Sequence[int] | None = None) -> list[int]:
    """Hamiltonian dipath by repeated insertion, O(n^2).

    With ``vertices`` given, the path spans the induced subdigraph on them;
    that subdigraph must be semicomplete.
    """
    if vertices is None:
        if not is_semicomplete(d):
            raise ContractError("hamiltonian_dipath needs a semicomplete digraph")
        vertices = range(d.n)
    return _insertion_path(d, sorted(vertices))


def _start_cycle(d: Digraph, vs: Sequence[int]) -> list[int]:
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if d.has_arc(u, v) and d.has_arc(v, u):
                return [u, v]
    for u in vs:
        for v in vs:
            if d.has_arc(u, v):
                for w in vs:
                    if d.has_arc(v, w) and d.has_arc(w, u):
                        return [u, v, w]
    raise ContractError("no short dicycle: digraph is not strong")


def hamiltonian_dicycle(d: Digraph, vertices: Sequence[int] | None = None) -> list[int]:
    """Hamiltonian dicycle of a strong nontrivial semicomplete (sub)digraph.

    Grows a digon or 3-dicycle. An outside vertex with both an in- and an
    out-neighbour on the cycle is inserted between a consecutive pair;
    otherwise an arc from a dominated vertex ``b`` to a dominating vertex
    ``a`` exists and ``c0 -> b -> a -> c1`` replaces ``c0 -> c1``.
    """
    if vertices is None:
        if not is_semicomplete(d):
            raise ContractError("hamiltonian_dicycle needs a semicomplete digraph")
        if d.n < 2 or not is_strong(d):
            raise ContractError("hamiltonian_dicycle needs a strong nontrivial digraph")
        vertices = range(d.n)
    vs = sorted(vertices)
    if len(vs) < 2:
        raise ContractError("hamiltonian_dicycle needs at least two vertices")
    cycle = _start_cycle(d, vs)
    outside = [v for v in vs if v not in cycle]
    while outside:
        progressed = False
        for v in outside:
            if any(d.has_arc(c, v) for c in cycle) and any(d.has_arc(v, c) for c in cycle):
                k = len(cycle)
                for i in range(k):
                    if d.has_arc(cycle[i], v) and d.has_arc(v, cycle[(i + 1) % k]):
                        cycle.insert(i + 1, v)
                        break
                outside.remove(v)
                progressed = True
                break
        if progressed:
            continue
        # every outside vertex is dominated by the cycle or dominates it
        dominated = [v for v in outside if d.has_arc(cycle[0], v)]
        dominating = [v for v in outside if d.has_arc(v, cycle[0])]
        for b in dominated:
            a = next((a for a in dominating if d.has_arc(b, a)), None)
            if a is not None:
                cycle[1:1] = [b, a]
                outside.remove(a)
                outside.remove(b)
                break
        else:
            raise ContractError("cycle cannot be extended: digraph is not strong")
    return cycle


def spanning_component_path(
    d: Digraph, skip_initial: bool = False, skip_terminal: bool = False
) -> list[int]:
    """Dipath from the initial to the terminal strong component.

    Covers every vertex of the intermediate components; a skipped end
    component contributes only its lowest vertex, otherwise its full
    Hamiltonian dipath. Links rely on full domination between components.
    """
    if not is_semicomplete(d):
        raise ContractError("spanning_component_path needs a semicomplete digraph")
    comps = strong_components(d).components
    if len(comps) < 2:
        raise ContractError("digraph is strong: no distinct initial and terminal components")
    path: list[int] = []
    last = len(comps) - 1
    for i, comp in enumerate(comps):
        if (i == 0 and skip_initial) or (i == last and skip_terminal):
            path.append(comp[0])
        else:
            path.extend(hamiltonian_dipath(d, comp))
    return path
