"""Closed-form answers and direct constructions for special digraph classes.

Covers tournaments, semicomplete digraphs (including constructive
2-colorings along Hamiltonian structure), extended tournaments (blow-ups
of tournaments) and weak-odd 2-edge coverings of tournaments.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from .digraph import (
    Arc,
    ContractError,
    Digraph,
    DigraphError,
    delete_vertex,
    is_even,
    is_semicomplete,
    is_tournament,
    peripheral_vertices,
    strong_components,
)
from .hamilton import (
    cycle_arcs,
    hamiltonian_dicycle,
    hamiltonian_dipath,
    path_arcs,
    spanning_component_path,
)
from .parity import (
    ArcColoring,
    ArcCovering,
    SatisfactionReport,
    _component_join,
    chromatic_index,
    coloring_from_join,
    construct_two_coloring,
    extend_coloring_rule_c,
    is_one_colorable,
    verify_coloring,
    verify_covering,
)
from .split import SplitVertex, partial_split

log = logging.getLogger(__name__)

CASE_TRIVIAL = "trivial (K1)"
CASE_ODD_OR_ZERO = "nontrivial, every vertex semi-degree is odd or zero"
CASE_ONE_PERIPHERAL = "nontrivial, odd order, just one peripheral vertex"
CASE_EVEN_ONE_PERIPHERAL = "nontrivial even digraph with just one peripheral vertex"
CASE_OTHERWISE = "otherwise"


def _reverse_coloring(c: ArcColoring) -> ArcColoring:
    return ArcColoring(c.k, {(v, u): col for (u, v), col in c.color_of.items()})


def serving_colors(d: Digraph, coloring: ArcColoring, v: int) -> set[int]:
    """Colors that are odd on every nonempty semi-cut of ``v``."""
    result = set()
    for c in range(1, coloring.k + 1):
        out = sum(1 for a in d.semi_cut(v, "out") if coloring[a] == c)
        inn = sum(1 for a in d.semi_cut(v, "in") if coloring[a] == c)
        if (not d.out_degree(v) or out % 2) and (not d.in_degree(v) or inn % 2):
            result.add(c)
    return result


# -- tournaments ----------------------------------------------------------


def classify_tournament(t: Digraph) -> tuple[int, str]:
    if not is_tournament(t):
        raise ContractError("classify_tournament needs a tournament")
    if t.n <= 1:
        return 0, CASE_TRIVIAL
    if is_one_colorable(t):
        return 1, CASE_ODD_OR_ZERO
    if t.n % 2 == 1 and len(peripheral_vertices(t)) == 1:
        return 3, CASE_ONE_PERIPHERAL
    return 2, CASE_OTHERWISE


# -- semicomplete digraphs ------------------------------------------------


class SemicompleteClass(enum.Enum):
    TRIVIAL = "trivial"
    INDEX1 = "index1"
    BAD = "bad"
    GOOD2 = "good2"


_SEMICOMPLETE_INDEX = {
    SemicompleteClass.TRIVIAL: 0,
    SemicompleteClass.INDEX1: 1,
    SemicompleteClass.BAD: 3,
    SemicompleteClass.GOOD2: 2,
}


def is_bad_semicomplete(d: Digraph) -> bool:
    return d.n >= 2 and is_even(d) and len(peripheral_vertices(d)) == 1


def classify_semicomplete(d: Digraph) -> tuple[SemicompleteClass, int, str]:
    if not is_semicomplete(d):
        raise ContractError("classify_semicomplete needs a semicomplete digraph")
    if d.n <= 1:
        cls, label = SemicompleteClass.TRIVIAL, CASE_TRIVIAL
    elif is_one_colorable(d):
        cls, label = SemicompleteClass.INDEX1, CASE_ODD_OR_ZERO
    elif is_bad_semicomplete(d):
        cls, label = SemicompleteClass.BAD, CASE_EVEN_ONE_PERIPHERAL
    else:
        cls, label = SemicompleteClass.GOOD2, CASE_OTHERWISE
    return cls, _SEMICOMPLETE_INDEX[cls], label


def _hat_coloring(d: Digraph, hat: set[Arc]) -> ArcColoring:
    missing = [a for a in hat if a not in d]
    if missing:
        raise AssertionError(f"spanning subdigraph uses non-arc {missing[0]}")
    return ArcColoring(2, {a: 1 if a in hat else 2 for a in d.arcs})


def _mapped(path: list[int], mapping: list[int]) -> list[int]:
    return [mapping[u] for u in path]


def _one_trivial_terminal(d: Digraph) -> tuple[ArcColoring, str]:
    """Only the terminal component is trivial: ``{y}`` with ``y`` the sink."""
    sc = strong_components(d)
    y = sc.terminal[0]
    odd = [u for u in d.vertices if d.degree(u) % 2]
    if not odd:
        raise ContractError("even semicomplete digraph with one peripheral vertex is bad")
    v = y if d.degree(y) % 2 else odd[0]
    small, mapping = delete_vertex(d, v)

    if v == y:
        sinks = [mapping[u] for u, kind in peripheral_vertices(small).items() if kind == "sink"]
        if not sinks:
            inner, inner_case = _ladder(small)
            return extend_coloring_rule_c(d, v, inner, mapping), f"sink of odd degree, extended from D - v over [{inner_case}]"
        y2 = sinks[0]
        cycle = hamiltonian_dicycle(d, sc.initial)
        path = _mapped(spanning_component_path(small, skip_initial=True), mapping)
        x = path[0]
        hat = set(cycle_arcs(cycle)) | set(path_arcs(path)) | {(x, v), (y2, v)}
        return _hat_coloring(d, hat), "sink of odd degree, D - y has a sink"

    out_odd = d.out_degree(v) % 2 == 1
    sources = [mapping[u] for u, kind in peripheral_vertices(small).items() if kind == "source"]
    if sources:
        x = sources[0]
        path = _mapped(hamiltonian_dipath(small), mapping)
        assert path[0] == x and path[-1] == y
        hat = set(path_arcs(path)) | {(v, x)}
        if out_odd:
            w = min(u for u in d.in_neighbors(v) if u not in (y, path[-2]))
            hat |= {(w, v), (w, y), (v, y)}
        return _hat_coloring(d, hat), "odd vertex is not the sink, D - v has a source"

    small_sc = strong_components(small)
    comp = _mapped(list(small_sc.initial), mapping)
    cycle = hamiltonian_dicycle(d, comp)
    if len(comp) + 2 == d.n:
        hat = set(cycle_arcs(cycle))
        if out_odd:
            w = min(u for u in comp if d.has_arc(u, v) and d.has_arc(u, y))
            hat |= {(w, y), (w, v)}
        else:
            hat |= {(v, y)}
        return _hat_coloring(d, hat), "odd vertex is not the sink, D - v is a strong part plus the sink"

    path = _mapped(spanning_component_path(small, skip_initial=True), mapping)
    x = path[0]
    assert (x, y) not in set(path_arcs(path))
    hat = set(cycle_arcs(cycle)) | set(path_arcs(path))
    if not out_odd:
        hat |= {(v, y), (x, y)}
    elif not d.has_arc(x, v):
        w = min(u for u in d.in_neighbors(v) if u not in (x, y, path[-2]))
        hat |= {(w, y), (w, v), (x, y)}
    else:
        hat |= {(x, v)}
    return _hat_coloring(d, hat), "odd vertex is not the sink, general strong-component chain"


def _ladder(d: Digraph) -> tuple[ArcColoring, str]:
    sc = strong_components(d)
    if len(sc) == 1:
        return _hat_coloring(d, set(cycle_arcs(hamiltonian_dicycle(d)))), "strong: Hamilton dicycle"
    first_trivial, last_trivial = len(sc.initial) == 1, len(sc.terminal) == 1
    if first_trivial and last_trivial:
        path = spanning_component_path(d)
        return _hat_coloring(d, set(path_arcs(path))), "source and sink: Hamilton dipath"
    if not first_trivial and not last_trivial:
        path = spanning_component_path(d, skip_initial=True, skip_terminal=True)
        hat = set(cycle_arcs(hamiltonian_dicycle(d, sc.initial)))
        hat |= set(cycle_arcs(hamiltonian_dicycle(d, sc.terminal)))
        if len(path) > 2:
            hat |= set(path_arcs(path)) | {(path[0], path[-1])}
        return _hat_coloring(d, hat), "both peripheral components nontrivial"
    if first_trivial:
        coloring, case = _one_trivial_terminal(d.reverse())
        return _reverse_coloring(coloring), case + " (reversed)"
    return _one_trivial_terminal(d)


def ladder_coloring(d: Digraph) -> tuple[ArcColoring, str]:
    """Hamiltonian-structure 2-coloring of a good nontrivial semicomplete digraph.

    Color 1 goes on a spanning subdigraph chosen by the component structure
    and the location of an odd-degree vertex. Raises ``AssertionError`` if
    a construction step fails; returns the coloring with its case label.
    """
    cls, _, _ = classify_semicomplete(d)
    if cls in (SemicompleteClass.TRIVIAL, SemicompleteClass.BAD):
        raise ContractError(f"no 2-coloring construction for a {cls.value} semicomplete digraph")
    coloring, case = _ladder(d)
    report = verify_coloring(d, coloring)
    if not report.ok:
        raise AssertionError(f"case [{case}] fails at {sorted(report.failing)}")
    return coloring, case


def semicomplete_two_coloring(d: Digraph) -> ArcColoring:
    """Verified 2-coloring of a good semicomplete digraph.

    Uses the Hamiltonian construction; if it ever fails verification, the
    generic parity engine answers instead.
    """
    try:
        return ladder_coloring(d)[0]
    except AssertionError as exc:
        log.warning("semicomplete construction failed (%s); using parity engine", exc)
        return construct_two_coloring(d)


def _prescribed_join_coloring(d: Digraph, x: int) -> ArcColoring:
    """2-coloring failing at most at ``x``, for a split with one nontrivial component."""
    ps = partial_split(d)
    comps = ps.nontrivial_components()
    if len(comps) != 1:
        raise ContractError(f"expected one nontrivial split component, found {len(comps)}")
    comp = comps[0]
    s = set(ps.members_of_class(comp, 2))
    merged = SplitVertex(x, "m")
    if ps.has_node(merged):
        s.add(ps.node_index(merged))
    else:
        for half in (SplitVertex(x, "+"), SplitVertex(x, "-")):
            i = ps.node_index(half)
            if i in s:
                s.discard(i)
                break
    return coloring_from_join(d, _component_join(ps, comp, s))


def semicomplete_defect_coloring(
    d: Digraph, prescribed: int | None = None
) -> tuple[ArcColoring, SatisfactionReport]:
    """2-coloring of a bad semicomplete digraph failing at one vertex.

    By default the failing vertex is the peripheral one: it is deleted, the
    rest 2-colored and the coloring extended back. A ``prescribed``
    vertex takes the failure instead via a join in the single nontrivial
    split component.
    """
    if not is_semicomplete(d) or not is_bad_semicomplete(d):
        raise ContractError("semicomplete_defect_coloring needs a bad semicomplete digraph")
    if prescribed is not None and not 0 <= prescribed < d.n:
        raise DigraphError(f"prescribed vertex {prescribed} out of range")
    (p, kind), = peripheral_vertices(d).items()
    if kind == "source":
        coloring, _ = semicomplete_defect_coloring(d.reverse(), prescribed)
        coloring = _reverse_coloring(coloring)
        return coloring, verify_coloring(d, coloring)
    if prescribed is None or prescribed == p:
        small, mapping = delete_vertex(d, p)
        inner = semicomplete_two_coloring(small)
        coloring = extend_coloring_rule_c(d, p, inner, mapping)
    else:
        coloring = _prescribed_join_coloring(d, prescribed)
    return coloring, verify_coloring(d, coloring)


# -- extended tournaments -------------------------------------------------


@dataclass(frozen=True)
class ExtendedTournamentSpec:
    """Tournament ``base`` with vertex ``i`` blown up into ``sizes[i]`` copies.

    Copies of base vertex ``i`` occupy the consecutive ids ``blocks[i]``.
    """

    base: Digraph
    sizes: tuple[int, ...]
    digraph: Digraph = field(compare=False)
    blocks: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def order(self) -> list[int]:
        """Base vertices with odd sizes first (stable)."""
        return sorted(range(self.n), key=lambda i: self.sizes[i] % 2 == 0)

    @property
    def ell(self) -> int:
        return sum(1 for s in self.sizes if s % 2)

    @property
    def q(self) -> int:
        return sum(self.sizes)

    @property
    def odd_part(self) -> list[int]:
        return [v for i, b in enumerate(self.blocks) if self.sizes[i] % 2 for v in b]

    @property
    def even_part(self) -> list[int]:
        return [v for i, b in enumerate(self.blocks) if self.sizes[i] % 2 == 0 for v in b]

    @property
    def q1(self) -> int:
        return len(self.odd_part)

    @property
    def q2(self) -> int:
        return len(self.even_part)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise DigraphError(f"vertex {v} not in the blow-up")


def blow_up(t: Digraph, sizes: tuple[int, ...] | list[int]) -> ExtendedTournamentSpec:
    if not is_tournament(t):
        raise ContractError("blow_up needs a tournament base")
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) != t.n:
        raise DigraphError(f"{len(sizes)} sizes for a base of order {t.n}")
    if any(s < 1 for s in sizes):
        raise DigraphError("blow-up sizes must be at least 1")
    blocks, start = [], 0
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    arcs = [(a, b) for i, j in t.arcs for a in blocks[i] for b in blocks[j]]
    return ExtendedTournamentSpec(t, sizes, Digraph(start, arcs), tuple(blocks))


def remove_et_vertex(spec: ExtendedTournamentSpec, x: int) -> ExtendedTournamentSpec:
    """Blow-up spec of ``ET - x``, numbered as ``delete_vertex`` numbers it."""
    i = spec.block_of(x)
    sizes = list(spec.sizes)
    sizes[i] -= 1
    if sizes[i]:
        return blow_up(spec.base, sizes)
    base, _ = delete_vertex(spec.base, i)
    return blow_up(base, sizes[:i] + sizes[i + 1:])


@dataclass(frozen=True)
class BadEtWitness:
    odd_order: bool
    even_index: int | None
    dominates: bool
    singleton_side: str | None

    @property
    def bad(self) -> bool:
        return self.odd_order and self.even_index is not None and self.dominates and self.singleton_side is not None


def is_bad_et(spec: ExtendedTournamentSpec) -> tuple[bool, BadEtWitness]:
    """Bad iff odd order, exactly one even block ``v``, ``N+(v)`` dominating
    ``N-(v)`` in the base, and one of those neighbourhoods a singleton."""
    if spec.n <= 3:
        raise ContractError("badness is defined only for bases of order > 3")
    t = spec.base
    evens = [i for i, s in enumerate(spec.sizes) if s % 2 == 0]
    even_index = evens[0] if len(evens) == 1 else None
    dominates, side = False, None
    if even_index is not None:
        outs, ins = t.out_neighbors(even_index), t.in_neighbors(even_index)
        dominates = all(t.has_arc(a, b) for a in outs for b in ins)
        if len(outs) == 1:
            side = "out"
        elif len(ins) == 1:
            side = "in"
    w = BadEtWitness(spec.q % 2 == 1, even_index, dominates, side)
    return w.bad, w


def _weighted_odd_or_zero(spec: ExtendedTournamentSpec) -> bool:
    # a copy of base vertex i has out-degree sum(s_j for j in N+(i)), same for in
    t, s = spec.base, spec.sizes
    for i in range(spec.n):
        for nbrs in (t.out_neighbors(i), t.in_neighbors(i)):
            total = sum(s[j] for j in nbrs)
            if total and total % 2 == 0:
                return False
    return True


def classify_extended_tournament(spec: ExtendedTournamentSpec) -> tuple[int, str]:
    """Index of a blow-up from the base tournament and the block sizes.

    Index 1 is decided on the blow-up's semi-degrees (block-weighted sums),
    which is not implied by the base alone once block parities are mixed:
    doubling the middle vertex of a transitive triple keeps every
    semi-degree odd or zero.
    """
    if spec.n == 1:
        return 0, "base is K1"
    if _weighted_odd_or_zero(spec):
        return 1, CASE_ODD_OR_ZERO
    if spec.ell == spec.n:
        index, case = classify_tournament(spec.base)
        if index in (1, 3):
            return index, f"all blocks odd, base: {case}"
        return 2, "all blocks odd, base index 2"
    if spec.n > 3 and is_bad_et(spec)[0]:
        return 3, "bad extended tournament"
    return 2, CASE_OTHERWISE


def et_defect(spec: ExtendedTournamentSpec) -> int:
    return 1 if classify_extended_tournament(spec)[0] == 3 else 0


def et_defect_coloring(
    spec: ExtendedTournamentSpec, prescribed: int
) -> tuple[ArcColoring, SatisfactionReport]:
    """2-coloring of an index-3 extended tournament failing at most at ``prescribed``."""
    if classify_extended_tournament(spec)[0] != 3:
        raise ContractError("et_defect_coloring needs an extended tournament of index 3")
    d = spec.digraph
    if not 0 <= prescribed < d.n:
        raise DigraphError(f"prescribed vertex {prescribed} not in the blow-up")
    if spec.ell == spec.n:
        coloring = _prescribed_join_coloring(d, prescribed)
    else:
        rest = remove_et_vertex(spec, prescribed)
        if classify_extended_tournament(rest)[0] > 2:
            raise AssertionError("ET - x is not 2-colorable")
        small, mapping = delete_vertex(d, prescribed)
        index, inner = chromatic_index(small)
        coloring = extend_coloring_rule_c(d, prescribed, inner, mapping)
    return coloring, verify_coloring(d, coloring)


def v2_count_is_even(spec: ExtendedTournamentSpec) -> bool:
    """The number of V2 nodes in the partial split of a blow-up is even."""
    return len(partial_split(spec.digraph).vertices_of_class(2)) % 2 == 0


# -- coverings of tournaments ---------------------------------------------


@dataclass(frozen=True)
class CoveringResult:
    covering: ArcCovering
    case: str
    base: ArcColoring | None = None
    # the sink, and for the three-arc repair the vertices x, z used
    y: int | None = None
    x: int | None = None
    z: int | None = None


def _swap(c: ArcColoring) -> ArcColoring:
    return ArcColoring(c.k, {a: 3 - col for a, col in c.color_of.items()})


def _sink_covering(t: Digraph, y: int) -> CoveringResult:
    phi, report = semicomplete_defect_coloring(t)
    assert report.failing == {y}
    for x in t.in_neighbors(y):
        i = phi[(x, y)]
        if i in serving_colors(t, phi, x):
            sets = {a: frozenset({c}) for a, c in phi.color_of.items()}
            sets[(x, y)] = frozenset({1, 2})
            return CoveringResult(ArcCovering(sets), "doubled arc into the sink", phi, y, x)
    swapped = not any(phi[(x, y)] == 1 for x in t.in_neighbors(y))
    work = _swap(phi) if swapped else phi
    x = min(u for u in t.in_neighbors(y) if work[(u, y)] == 1)
    z = min(u for u in t.in_neighbors(x) if work[(u, x)] == 2)
    sets = {a: frozenset({c}) for a, c in work.color_of.items()}
    sets[(z, x)] = frozenset({1})
    sets[(z, y)] = frozenset({1, 2})
    sets[(x, y)] = frozenset({2})
    if swapped:
        sets = {a: frozenset(3 - c for c in s) for a, s in sets.items()}
    return CoveringResult(ArcCovering(sets), "three-arc repair at the sink", phi, y, x, z)


def tournament_covering(t: Digraph) -> CoveringResult:
    """Weak-odd 2-edge covering with at most one arc carrying both colors."""
    index, _ = classify_tournament(t)
    if index == 0:
        result = CoveringResult(ArcCovering({}), "no arcs")
    elif index == 1:
        result = CoveringResult(ArcCovering.from_coloring(ArcColoring.uniform(t)), "1-coloring")
    elif index == 2:
        c = semicomplete_two_coloring(t)
        result = CoveringResult(ArcCovering.from_coloring(c), "2-coloring", c)
    else:
        (p, kind), = peripheral_vertices(t).items()
        if kind == "sink":
            result = _sink_covering(t, p)
        else:
            rev = _sink_covering(t.reverse(), p)
            sets = {(v, u): s for (u, v), s in rev.covering.sets.items()}
            result = CoveringResult(
                ArcCovering(sets), rev.case + " (reversed)",
                _reverse_coloring(rev.base), rev.y, rev.x, rev.z,
            )
    report = verify_covering(t, result.covering)
    if not report.ok or len(result.covering.doubled()) > 1:
        raise AssertionError(f"covering construction failed at {sorted(report.failing)}")
    return result
