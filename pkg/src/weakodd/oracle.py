"""Exhaustive ground truth for small instances.

Deliberately shares no code with the parity engine: colorings are swept
depth-first in arc order while per-vertex color parities are tracked;
a vertex is judged once its last incident arc is assigned.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .digraph import Arc, Digraph

ENV_BUDGET = "WEAKODD_ORACLE_MAX_ARCS"


class OracleRefusal(RuntimeError):
    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: instance size {size} exceeds oracle budget {limit}")
        self.size = size
        self.limit = limit


def _default_limit() -> int:
    raw = os.environ.get(ENV_BUDGET)
    return int(raw) if raw else 14


@dataclass(frozen=True)
class OracleBudget:
    max_arcs_2color: int = -1
    max_arcs_3color: int = -1

    def __post_init__(self) -> None:
        if self.max_arcs_2color == -1:
            object.__setattr__(self, "max_arcs_2color", _default_limit())
        if self.max_arcs_3color == -1:
            object.__setattr__(self, "max_arcs_3color", _default_limit())
        if self.max_arcs_2color <= 0 or self.max_arcs_3color <= 0:
            raise ValueError("oracle budgets must be positive")


class _Sweep:
    """Branch and bound over per-arc choices of color subsets."""

    def __init__(self, d: Digraph, choices: Sequence[tuple[int, ...]], colors: int):
        self.d = d
        self.arcs = list(d.arcs)
        self.choices = choices
        self.colors = colors
        self.out_par = [[0] * (colors + 1) for _ in d.vertices]
        self.in_par = [[0] * (colors + 1) for _ in d.vertices]
        self.settle: list[list[int]] = [[] for _ in self.arcs]
        last = {}
        for i, (u, v) in enumerate(self.arcs):
            last[u] = i
            last[v] = i
        for v, i in last.items():
            self.settle[i].append(v)
        self.assignment: list[tuple[int, ...]] = [()] * len(self.arcs)

    def _ok(self, v: int) -> bool:
        has_out = self.d.out_degree(v) > 0
        has_in = self.d.in_degree(v) > 0
        op, ip = self.out_par[v], self.in_par[v]
        return any(
            (not has_out or op[c]) and (not has_in or ip[c]) for c in range(1, self.colors + 1)
        )

    def run(self, allow_fail: bool) -> tuple[int, int, list[tuple[int, ...]]] | None:
        """Minimize (failing, cost); cost = number of multi-color arcs.

        Without ``allow_fail`` only zero-failure assignments count. Returns
        ``(failing, cost, assignment)`` or ``None`` when nothing qualifies.
        """
        best: list = [None]
        m = len(self.arcs)

        def rec(i: int, failing: int, cost: int) -> bool:
            if best[0] is not None and (failing, cost) >= best[0][:2]:
                return False
            if i == m:
                best[0] = (failing, cost, list(self.assignment))
                return failing == 0 and cost == 0
            u, v = self.arcs[i]
            for choice in self.choices:
                for c in choice:
                    self.out_par[u][c] ^= 1
                    self.in_par[v][c] ^= 1
                self.assignment[i] = choice
                bad = sum(1 for w in self.settle[i] if not self._ok(w))
                done = False
                if allow_fail or bad == 0:
                    done = rec(i + 1, failing + bad, cost + (len(choice) > 1))
                for c in choice:
                    self.out_par[u][c] ^= 1
                    self.in_par[v][c] ^= 1
                if done:
                    return True
            return False

        rec(0, 0, 0)
        return best[0]


def _coloring_exists(d: Digraph, k: int) -> dict[Arc, int] | None:
    result = _Sweep(d, [(c,) for c in range(1, k + 1)], k).run(allow_fail=False)
    if result is None:
        return None
    return {a: choice[0] for a, choice in zip(d.arcs, result[2])}


def brute_chromatic_index(d: Digraph, budget: OracleBudget | None = None) -> int:
    """Smallest k with a weak-odd k-coloring, found by exhaustive sweeps."""
    budget = budget or OracleBudget()
    if not d.arcs:
        return 0
    m = len(d.arcs)
    if m > budget.max_arcs_2color:
        raise OracleRefusal("2-color sweep", m, budget.max_arcs_2color)
    for k in (1, 2):
        if _coloring_exists(d, k) is not None:
            return k
    if m > budget.max_arcs_3color:
        raise OracleRefusal("3-color sweep", m, budget.max_arcs_3color)
    if _coloring_exists(d, 3) is not None:
        return 3
    raise AssertionError("no weak-odd 3-coloring exists; contradicts the upper bound 3")


def brute_defect(d: Digraph, budget: OracleBudget | None = None) -> int:
    """Fewest failing vertices over all 2-colorings."""
    budget = budget or OracleBudget()
    m = len(d.arcs)
    if m > budget.max_arcs_2color:
        raise OracleRefusal("defect sweep", m, budget.max_arcs_2color)
    result = _Sweep(d, [(1,), (2,)], 2).run(allow_fail=True)
    assert result is not None
    return result[0]


def brute_covering_exists(
    d: Digraph, budget: OracleBudget | None = None
) -> tuple[bool, int | None, dict[Arc, frozenset[int]] | None]:
    """Whether a weak-odd 2-edge covering exists.

    Returns ``(exists, fewest doubly-colored arcs, witness)``.
    """
    budget = budget or OracleBudget()
    m = len(d.arcs)
    if m > budget.max_arcs_3color:
        raise OracleRefusal("covering sweep", m, budget.max_arcs_3color)
    result = _Sweep(d, [(1,), (2,), (1, 2)], 2).run(allow_fail=False)
    if result is None:
        return False, None, None
    witness = {a: frozenset(choice) for a, choice in zip(d.arcs, result[2])}
    return True, result[1], witness


def brute_maximum_matching(
    n: int, edges: Sequence[tuple[int, int]], max_edges: int = 20
) -> int:
    """Size of a maximum matching by exhaustive branching on the lowest free vertex."""
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    if len(edge_set) > max_edges:
        raise OracleRefusal("matching enumeration", len(edge_set), max_edges)
    adj = [set() for _ in range(n)]
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)

    def best(free: frozenset[int]) -> int:
        live = [v for v in sorted(free) if adj[v] & free]
        if not live:
            return 0
        u = live[0]
        rest = free - {u}
        value = best(rest)
        for w in adj[u] & rest:
            value = max(value, 1 + best(rest - {w}))
        return value

    return best(frozenset(range(n)))
