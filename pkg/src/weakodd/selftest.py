"""Acceptance sweep: closed forms, engine and oracle checked against each other.

Each ``check_*`` function returns a :class:`CriterionResult`; ``run_all``
runs the whole sweep. Sample streams are fixed by the seeds below, so a
run is reproducible for given parameters.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import classes, oracle, parity
from .classes import SemicompleteClass
from .digraph import (
    Digraph,
    is_even,
    is_strong,
    is_tournament,
    peripheral_vertices,
    strong_components,
)
from .generators import GenSpec, SplitMix64, enumerate_tournaments, gen
from .hamilton import (
    hamiltonian_dicycle,
    hamiltonian_dipath,
    is_dicycle,
    is_dipath,
    spanning_component_path,
)
from .matching import maximum_matching

SEED_ARBITRARY = 0x5EED_0001
SEED_SEMICOMPLETE = 0x5EED_0002
SEED_EXTENDED = 0x5EED_0003
SEED_COVERING = 0x5EED_0004
SEED_PROPERTIES = 0x5EED_0005


@dataclass
class CriterionResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = " ".join(f"{k}={v}" for k, v in self.notes.items())
        return f"[{status}] {self.name}: {self.checked} checks, {self.seconds:.1f}s {extra}".rstrip()


def _timed(fn: Callable[..., CriterionResult]) -> Callable[..., CriterionResult]:
    def wrapper(*args, **kwargs) -> CriterionResult:
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _sweep_tournaments(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_tournaments(n)


def arbitrary_samples(count: int, max_arcs: int = 12) -> list[Digraph]:
    out, i = [], 0
    while len(out) < count:
        d = gen(GenSpec("arbitrary", 2 + i % 5, SEED_ARBITRARY + i,
                        arc_probability=0.15 + 0.05 * (i % 6)))
        i += 1
        if len(d.arcs) <= max_arcs:
            out.append(d)
    return out


def semicomplete_samples(count: int, max_n: int = 6) -> list[Digraph]:
    return [
        gen(GenSpec("semicomplete", 1 + i % max_n, SEED_SEMICOMPLETE + i,
                    digon_probability=(0.2, 0.5)[i % 2]))
        for i in range(count)
    ]


def extended_samples(count: int, max_q: int = 10, max_n: int = 6) -> list[classes.ExtendedTournamentSpec]:
    """Blow-ups with q <= max_q; every third sample uses mostly unit blocks
    with one block of size 2 so that bad blow-ups are well represented."""
    out, i = [], 0
    while len(out) < count:
        n = 1 + i % max_n
        seed = SEED_EXTENDED + i
        if i % 3 == 2 and n > 3:
            rng = SplitMix64(seed ^ 0xABCDEF)
            sizes = [3 if rng.random() < 0.3 else 1 for _ in range(n)]
            sizes[rng.randint(0, n - 1)] = 2
            spec = gen(GenSpec("extended_tournament", n, seed, sizes=tuple(sizes)))
        else:
            spec = gen(GenSpec("extended_tournament", n, seed, max_size=3))
        i += 1
        if spec.q <= max_q:
            out.append(spec)
    return out


def bad_semicomplete_samples(count: int, max_n: int = 6) -> list[Digraph]:
    """Bad semicomplete digraphs found by scanning seeded samples."""
    out, i = [], 0
    while len(out) < count:
        d = gen(GenSpec("semicomplete", 3 + i % (max_n - 2), SEED_SEMICOMPLETE ^ (1 << 40) ^ i,
                        digon_probability=(0.2, 0.5)[i % 2]))
        i += 1
        if classes.is_bad_semicomplete(d):
            out.append(d)
    return out


def bad_extended_samples(count: int, max_q: int = 10) -> list[classes.ExtendedTournamentSpec]:
    """Bad blow-ups of tournaments on 4..6 vertices with unit blocks plus one even block."""
    out, i = [], 0
    while len(out) < count:
        seed = SEED_EXTENDED ^ (1 << 40) ^ i
        n = 4 + i % 3
        rng = SplitMix64(seed)
        sizes = [1] * n
        sizes[rng.randint(0, n - 1)] = 2 if rng.random() < 0.7 else 4
        spec = gen(GenSpec("extended_tournament", n, seed, sizes=tuple(sizes)))
        i += 1
        if spec.q <= max_q and classes.is_bad_et(spec)[0]:
            out.append(spec)
    return out


@_timed
def check_tournament_classification(max_n: int = 5) -> CriterionResult:
    """Closed form = engine = oracle on every labeled tournament with n <= max_n."""
    res = CriterionResult("tournament index: classifier = engine = oracle")
    for t in _sweep_tournaments(max_n):
        res.checked += 1
        closed = classes.classify_tournament(t)[0]
        engine, witness = parity.chromatic_index(t)
        brute = oracle.brute_chromatic_index(t)
        if not closed == engine == brute:
            res.fail(f"{t.arcs}: classifier {closed}, engine {engine}, oracle {brute}")
        elif not parity.verify_coloring(t, witness).ok:
            res.fail(f"{t.arcs}: engine witness does not verify")
    return res


@_timed
def check_defect_formula(max_n: int = 5, samples: int = 500) -> CriterionResult:
    """Matching-based defect = exhaustive defect on tournaments and arbitrary digraphs."""
    res = CriterionResult("defect formula = brute-force defect")
    three = 0
    instances = list(_sweep_tournaments(max_n)) + arbitrary_samples(samples)
    for d in instances:
        res.checked += 1
        value = parity.defect(d)
        brute = oracle.brute_defect(d)
        _, report = parity.defect_coloring(d)
        if value != brute or len(report.failing) != value:
            res.fail(f"{d.n} {d.arcs}: formula {value}, brute {brute}, coloring {len(report.failing)}")
        if is_tournament(d) and classes.classify_tournament(d)[0] == 3:
            three += 1
            if value != 1:
                res.fail(f"{d.arcs}: index-3 tournament with defect {value}")
    res.notes["index3_tournaments"] = three
    return res


@_timed
def check_semicomplete(samples: int = 500) -> CriterionResult:
    """Semicomplete classification, direct 2-colorings and one-vertex defect colorings."""
    res = CriterionResult("semicomplete index, colorings and prescribed defects")
    bad = 0
    for d in semicomplete_samples(samples) + bad_semicomplete_samples(max(1, samples // 5)):
        res.checked += 1
        cls, index, _ = classes.classify_semicomplete(d)
        engine, _ = parity.chromatic_index(d)
        if index != engine:
            res.fail(f"{d.arcs}: classifier {index}, engine {engine}")
            continue
        if cls in (SemicompleteClass.GOOD2, SemicompleteClass.INDEX1):
            try:
                classes.ladder_coloring(d)
            except AssertionError as exc:
                res.fail(f"{d.arcs}: {exc}")
            if parity.defect(d) != 0:
                res.fail(f"{d.arcs}: good but defect {parity.defect(d)}")
        elif cls is SemicompleteClass.BAD:
            bad += 1
            _, rep = classes.semicomplete_defect_coloring(d)
            if len(rep.failing) != 1:
                res.fail(f"{d.arcs}: unprescribed defect coloring fails at {sorted(rep.failing)}")
            for x in d.vertices:
                _, rep = classes.semicomplete_defect_coloring(d, x)
                if not rep.failing <= {x}:
                    res.fail(f"{d.arcs}: prescribed {x} but fails at {sorted(rep.failing)}")
    res.notes["bad"] = bad
    return res


@_timed
def check_extended(samples: int = 500) -> CriterionResult:
    """Blow-up classification, V2 parity, odd-block invariance, badness and defect."""
    res = CriterionResult("extended tournaments: index, V2 parity, badness, defect")
    budget = oracle.OracleBudget()
    bad = brute_checked = 0
    for spec in extended_samples(samples) + bad_extended_samples(max(1, samples // 5)):
        res.checked += 1
        d = spec.digraph
        index = classes.classify_extended_tournament(spec)[0]
        engine, witness = parity.chromatic_index(d)
        if index != engine:
            res.fail(f"{spec.base.arcs} sizes={spec.sizes}: classifier {index}, engine {engine}")
        if not parity.verify_coloring(d, witness).ok:
            res.fail(f"{spec.base.arcs} sizes={spec.sizes}: witness does not verify")
        if not classes.v2_count_is_even(spec):
            res.fail(f"{spec.base.arcs} sizes={spec.sizes}: odd number of V2 nodes")
        if spec.ell == spec.n and engine != parity.chromatic_index(spec.base)[0]:
            res.fail(f"{spec.base.arcs} sizes={spec.sizes}: odd blocks change the index")
        is_bad = spec.n > 3 and classes.is_bad_et(spec)[0]
        small = len(d.arcs) <= budget.max_arcs_2color
        if is_bad:
            bad += 1
            if small:
                brute_checked += 1
                if oracle.brute_chromatic_index(d, budget) <= 2:
                    res.fail(f"{spec.base.arcs} sizes={spec.sizes}: bad but 2-colorable")
        if small and classes.et_defect(spec) != oracle.brute_defect(d, budget):
            res.fail(f"{spec.base.arcs} sizes={spec.sizes}: closed-form defect wrong")
        if index == 3:
            for x in d.vertices:
                _, rep = classes.et_defect_coloring(spec, x)
                if not rep.failing <= {x}:
                    res.fail(f"{spec.base.arcs} sizes={spec.sizes}: prescribed {x}, fails {sorted(rep.failing)}")
    res.notes["bad"] = bad
    res.notes["bad_brute_checked"] = brute_checked
    return res


@_timed
def check_coverings(max_n: int = 5, samples: int = 50, big_n: int = 7) -> CriterionResult:
    """Tournament coverings with at most one doubled arc; oracle existence for small n."""
    res = CriterionResult("tournament coverings: verified, at most one doubled arc")
    instances = [t for t in _sweep_tournaments(max_n) if classes.classify_tournament(t)[0] == 3]
    small_count = len(instances)
    i = 0
    while len(instances) < small_count + samples:
        t = gen(GenSpec("tournament", big_n, SEED_COVERING + i))
        i += 1
        if classes.classify_tournament(t)[0] == 3:
            instances.append(t)
    for k, t in enumerate(instances):
        res.checked += 1
        try:
            cov = classes.tournament_covering(t).covering
        except AssertionError as exc:
            res.fail(f"{t.arcs}: {exc}")
            continue
        rep = parity.verify_covering(t, cov)
        if not rep.ok or len(cov.doubled()) > 1:
            res.fail(f"{t.arcs}: covering fails at {sorted(rep.failing)}")
        if k < small_count:
            exists, fewest, _ = oracle.brute_covering_exists(t)
            if not exists or fewest > 1:
                res.fail(f"{t.arcs}: oracle exists={exists}, fewest doubled={fewest}")
    res.notes["oracle_checked"] = small_count
    return res


def random_connected_graph(rng: SplitMix64, n: int) -> list[tuple[int, int]]:
    edges = {(rng.randint(0, v - 1), v) for v in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.25:
            edges.add((u, v))
    return sorted(edges)


def random_even_digraph(rng: SplitMix64, n: int) -> Digraph:
    """Orientation of a symmetric difference of random cycles."""
    edges: set[tuple[int, int]] = set()
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(3, n)
        pool = list(range(n))
        cycle = [pool.pop(rng.randint(0, len(pool) - 1)) for _ in range(k)]
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            edges ^= {(min(a, b), max(a, b))}
    return Digraph(n, [(a, b) if rng.random() < 0.5 else (b, a) for a, b in sorted(edges)])


def nonisolated_peripheral_count(d: Digraph) -> int:
    return sum(1 for kind in peripheral_vertices(d).values() if kind != "isolated")


@_timed
def check_properties(samples: int = 500, constructed: int = 200, max_ham_n: int = 9) -> CriterionResult:
    """S-joins, matchings, the even-digraph obstruction and Hamiltonian structures."""
    res = CriterionResult("properties: S-join, matching, even obstruction, Hamiltonian")
    rng = SplitMix64(SEED_PROPERTIES)
    for _ in range(samples):
        n = rng.randint(1, 12)
        edges = random_connected_graph(rng, n)
        s = [v for v in range(n) if rng.random() < 0.5]
        if len(s) % 2:
            s.pop()
        res.checked += 1
        join = parity.s_join(n, edges, s)
        deg = [0] * n
        for k in join:
            a, b = edges[k]
            deg[a] += 1
            deg[b] += 1
        if {v for v in range(n) if deg[v] % 2} != set(s):
            res.fail(f"S-join parity wrong on n={n} edges={edges} S={s}")
    for _ in range(samples):
        n = rng.randint(1, 10)
        pairs = list(itertools.combinations(range(n), 2))
        m = rng.randint(0, min(20, len(pairs)))
        edges = []
        for _ in range(m):
            edges.append(pairs.pop(rng.randint(0, len(pairs) - 1)))
        res.checked += 1
        got = maximum_matching(n, edges)
        used = [x for e in got for x in e]
        if len(used) != len(set(used)) or not set(got) <= {tuple(sorted(e)) for e in edges}:
            res.fail(f"invalid matching on n={n} edges={edges}")
        elif len(got) != oracle.brute_maximum_matching(n, edges):
            res.fail(f"matching not maximum on n={n} edges={edges}")
    made = tries = 0
    while made < constructed and tries < 100 * constructed:
        tries += 1
        d = random_even_digraph(rng, rng.randint(3, 8))
        if nonisolated_peripheral_count(d) % 2 == 0:
            continue
        made += 1
        res.checked += 1
        if not is_even(d) or parity.decide_two_colorable(d):
            res.fail(f"even obstruction violated on {d.n} {d.arcs}")
    res.notes["even_obstruction_instances"] = made
    if made < constructed:
        res.fail(f"only {made} even instances constructed")
    for i in range(constructed):
        d = gen(GenSpec("semicomplete", 1 + i % max_ham_n, SEED_PROPERTIES + i,
                        digon_probability=(0.1, 0.3, 0.5)[i % 3]))
        res.checked += 1
        path = hamiltonian_dipath(d)
        if not (is_dipath(d, path) and sorted(path) == list(d.vertices)):
            res.fail(f"bad Hamiltonian dipath on {d.arcs}")
        if d.n >= 2 and is_strong(d):
            cycle = hamiltonian_dicycle(d)
            if not (is_dicycle(d, cycle) and sorted(cycle) == list(d.vertices)):
                res.fail(f"bad Hamiltonian dicycle on {d.arcs}")
        elif d.n >= 2:
            comps = strong_components(d).components
            middle = {v for c in comps[1:-1] for v in c}
            for skip_i, skip_t in itertools.product((False, True), repeat=2):
                p = spanning_component_path(d, skip_i, skip_t)
                want = len(middle) + (1 if skip_i else len(comps[0])) + (1 if skip_t else len(comps[-1]))
                if not (is_dipath(d, p) and middle <= set(p) and len(p) == want
                        and p[0] in comps[0] and p[-1] in comps[-1]):
                    res.fail(f"bad component path on {d.arcs} skips={skip_i, skip_t}")
    return res


def run_all(max_n: int = 5, samples: int = 500) -> list[CriterionResult]:
    """Every criterion; ``samples`` replaces the 500-instance sample sizes and
    caps the smaller ones (200 constructed, 50 large tournaments)."""
    return [
        check_tournament_classification(max_n),
        check_defect_formula(max_n, samples),
        check_semicomplete(samples),
        check_extended(samples),
        check_coverings(max_n, min(samples, 50)),
        check_properties(samples, min(samples, 200)),
    ]
