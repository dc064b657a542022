"""Text formats: arc lists, witnesses, reports, and Graphviz DOT.

Arc-list document::

    digraph n=3            et n=3 sizes=1,1,2
    0 1                    0 1
    1 2                    0 2
    2 0                    1 2

The ``et`` form lists the arcs of the base tournament. Witness documents
start with ``coloring k=<k>`` (lines ``u v c``) or ``covering`` (lines
``u v c[,c]``). A report is ``key: value`` lines plus witness blocks, each
closed by ``end``. Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .classes import ExtendedTournamentSpec, blow_up
from .digraph import Arc, Digraph, DigraphError
from .parity import ArcColoring, ArcCovering


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _column(raw_line: str, token: str) -> int:
    return raw_line.find(token) + 1 if token in raw_line else 1


def _parse_int(token: str, no: int, line: str) -> int:
    if not re.fullmatch(r"\d+", token):
        raise ParseError(f"expected a nonnegative integer, got {token!r}", no, _column(line, token))
    return int(token)


_HEADER_DIGRAPH = re.compile(r"digraph\s+n=(\S+)")
_HEADER_ET = re.compile(r"et\s+n=(\S+)\s+sizes=(\S*)")


def _parse_arcs(rows: list[tuple[int, str]], n: int) -> list[Arc]:
    arcs: list[Arc] = []
    seen: set[Arc] = set()
    for no, line in rows:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<u> <v>', got {line!r}", no)
        u, v = (_parse_int(p, no, line) for p in parts)
        if u >= n or v >= n:
            bad = parts[0] if u >= n else parts[1]
            raise ParseError(f"vertex {bad} out of range [0, {n})", no, _column(line, bad))
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        if (u, v) in seen:
            raise ParseError(f"duplicate arc {u} {v}", no)
        seen.add((u, v))
        arcs.append((u, v))
    return arcs


def parse_document(text: str) -> Digraph | ExtendedTournamentSpec:
    rows = _lines(text)
    if not rows:
        raise ParseError("empty document", 1)
    no, header = rows[0]
    if m := _HEADER_DIGRAPH.fullmatch(header):
        n = _parse_int(m.group(1), no, header)
        return Digraph(n, _parse_arcs(rows[1:], n))
    if m := _HEADER_ET.fullmatch(header):
        n = _parse_int(m.group(1), no, header)
        raw_sizes = m.group(2).split(",") if m.group(2) else []
        sizes = [_parse_int(s, no, header) for s in raw_sizes]
        if len(sizes) != n or any(s < 1 for s in sizes):
            raise ParseError(f"sizes must be {n} integers >= 1", no, _column(header, "sizes="))
        base = Digraph(n, _parse_arcs(rows[1:], n))
        try:
            return blow_up(base, sizes)
        except ValueError as exc:
            raise ParseError(str(exc), no) from exc
    raise ParseError(f"unknown header {header!r}", no)


def serialize_document(doc: Digraph | ExtendedTournamentSpec) -> str:
    if isinstance(doc, ExtendedTournamentSpec):
        head = f"et n={doc.n} sizes={','.join(map(str, doc.sizes))}"
        arcs = doc.base.arcs
    else:
        head = f"digraph n={doc.n}"
        arcs = doc.arcs
    return "\n".join([head, *(f"{u} {v}" for u, v in arcs)]) + "\n"


# -- witnesses ------------------------------------------------------------


def format_coloring(c: ArcColoring, name: str = "coloring") -> list[str]:
    return [f"{name} k={c.k}", *(f"{u} {v} {c.color_of[(u, v)]}" for u, v in sorted(c.color_of))]


def format_covering(c: ArcCovering, name: str = "covering") -> list[str]:
    return [name, *(
        f"{u} {v} {','.join(map(str, sorted(c.sets[(u, v)])))}" for u, v in sorted(c.sets)
    )]


def _parse_witness_rows(rows, multi: bool) -> dict[Arc, frozenset[int]]:
    result: dict[Arc, frozenset[int]] = {}
    for no, line in rows:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<u> <v> <color>', got {line!r}", no)
        u, v = (_parse_int(p, no, line) for p in parts[:2])
        tokens = parts[2].split(",")
        if not multi and len(tokens) != 1:
            raise ParseError("a coloring assigns exactly one color per arc", no, _column(line, parts[2]))
        colors = frozenset(_parse_int(t, no, line) for t in tokens)
        if (u, v) in result:
            raise ParseError(f"arc {u} {v} listed twice", no)
        result[(u, v)] = colors
    return result


@dataclass
class Report:
    fields: dict[str, str] = field(default_factory=dict)
    colorings: dict[str, ArcColoring] = field(default_factory=dict)
    coverings: dict[str, ArcCovering] = field(default_factory=dict)


_BLOCK = re.compile(r"(\w+)(?:\s+k=(\d+))?")


def parse_report(text: str) -> Report:
    """Parse a report or a bare witness document (a report with one block)."""
    report = Report()
    rows = _lines(text)
    i = 0
    while i < len(rows):
        no, line = rows[i]
        if ":" in line:
            key, value = line.split(":", 1)
            report.fields[key.strip()] = value.strip()
            i += 1
            continue
        m = _BLOCK.fullmatch(line)
        if not m:
            raise ParseError(f"unexpected line {line!r}", no)
        name, k = m.group(1), m.group(2)
        j = i + 1
        while j < len(rows) and rows[j][1] != "end" and not _BLOCK.fullmatch(rows[j][1]):
            j += 1
        body = rows[i + 1:j]
        if k is not None:
            sets = _parse_witness_rows(body, multi=False)
            report.colorings[name] = ArcColoring(int(k), {a: next(iter(s)) for a, s in sets.items()})
        else:
            report.coverings[name] = ArcCovering(_parse_witness_rows(body, multi=True))
        i = j + 1 if j < len(rows) and rows[j][1] == "end" else j
    return report


def format_report(fields: dict[str, object], colorings=(), coverings=()) -> str:
    lines = [f"{k}: {v}" for k, v in fields.items()]
    for name, c in colorings:
        lines += format_coloring(c, name) + ["end"]
    for name, c in coverings:
        lines += format_covering(c, name) + ["end"]
    return "\n".join(lines) + "\n"


# -- DOT ------------------------------------------------------------------

_STYLE = {frozenset({1}): "solid", frozenset({2}): "dashed", frozenset({3}): "dotted",
          frozenset({1, 2}): "bold"}


def export_dot(d: Digraph, witness: ArcColoring | ArcCovering | None = None) -> str:
    """Graphviz DOT text: color 1 solid, 2 dashed, 3 dotted, both colors bold."""
    if isinstance(witness, ArcColoring):
        sets = {a: frozenset({c}) for a, c in witness.color_of.items()}
    elif isinstance(witness, ArcCovering):
        sets = dict(witness.sets)
    else:
        sets = {}
    if sets and set(sets) != set(d.arcs):
        raise DigraphError("witness does not cover exactly the arcs of the digraph")
    lines = ["digraph D {"]
    lines += [f"  {v};" for v in d.vertices]
    for u, v in d.arcs:
        if (u, v) in sets:
            s = sets[(u, v)]
            label = ",".join(map(str, sorted(s)))
            lines.append(f'  {u} -> {v} [style={_STYLE.get(s, "solid")}, label="{label}"];')
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
