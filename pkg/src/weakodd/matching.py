"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque
from typing import Iterable


def maximum_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Return a maximum matching of the simple graph on ``0..n-1``.

    Augmenting paths are grown by BFS from each free vertex; odd cycles are
    shrunk into their base. Runs in O(n^3). Edges come back as ``(u, v)``
    with ``u < v``, sorted.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if v not in adj[u]:
            adj[u].append(v)
            adj[v].append(u)
    for row in adj:
        row.sort()

    mate = [-1] * n
    # greedy start keeps the number of phases small
    for u in range(n):
        if mate[u] == -1:
            for v in adj[u]:
                if mate[v] == -1:
                    mate[u], mate[v] = v, u
                    break

    for root in range(n):
        if mate[root] == -1:
            _augment_from(root, adj, mate)

    return sorted((u, v) for u, v in enumerate(mate) if v != -1 and u < v)


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False
