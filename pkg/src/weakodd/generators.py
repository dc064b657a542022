"""Seeded instance generators and exhaustive tournament enumeration.

Randomness comes from SplitMix64 so that a seed names the same instance in
any language:

    state += 0x9E3779B97F4A7C15              (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB (mod 2**64)
    return z ^ (z >> 31)

A uniform float is ``(next() >> 11) * 2**-53``; an integer in ``[lo, hi]``
is ``lo + next() % (hi - lo + 1)``. Vertex pairs ``u < v`` are visited in
lexicographic order; for each pair a tournament draws one float and orients
``u -> v`` iff it is below 0.5. A semicomplete pair first draws the digon
test, then (if not a digon) the orientation. An arbitrary digraph visits
ordered pairs ``(u, v)``, ``u != v``, lexicographically, keeping each with
the arc probability. Extended tournaments draw the base tournament, then
the sizes in vertex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal

from .classes import ExtendedTournamentSpec, blow_up
from .digraph import Digraph

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

GenClass = Literal["tournament", "semicomplete", "extended_tournament", "arbitrary"]


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class GenSpec:
    cls: GenClass
    n: int
    seed: int
    digon_probability: float = 0.3
    arc_probability: float = 0.3
    max_size: int = 3
    sizes: tuple[int, ...] | None = None


def _tournament(rng: SplitMix64, n: int) -> Digraph:
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def gen(spec: GenSpec) -> Digraph | ExtendedTournamentSpec:
    if spec.n < 1:
        raise ValueError("generated instances need n >= 1")
    rng = SplitMix64(spec.seed)
    n = spec.n
    if spec.cls == "tournament":
        return _tournament(rng, n)
    if spec.cls == "semicomplete":
        arcs = []
        for u, v in itertools.combinations(range(n), 2):
            if rng.random() < spec.digon_probability:
                arcs += [(u, v), (v, u)]
            else:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        return Digraph(n, arcs)
    if spec.cls == "arbitrary":
        arcs = [
            (u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < spec.arc_probability
        ]
        return Digraph(n, arcs)
    if spec.cls == "extended_tournament":
        base = _tournament(rng, n)
        if spec.sizes is not None:
            sizes = spec.sizes
        else:
            sizes = tuple(rng.randint(1, spec.max_size) for _ in range(n))
        return blow_up(base, sizes)
    raise ValueError(f"unknown instance class {spec.cls!r}")


def enumerate_tournaments(n: int) -> Iterator[Digraph]:
    """All labeled tournaments on ``n <= 6`` vertices.

    Bit ``k`` of the counter orients the ``k``-th pair (lexicographic):
    0 means ``u -> v``, 1 means ``v -> u``.
    """
    if n > 6:
        raise ValueError(f"refusing to enumerate tournaments with n={n} > 6")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Digraph(n, [
            (v, u) if mask >> k & 1 else (u, v) for k, (u, v) in enumerate(pairs)
        ])
