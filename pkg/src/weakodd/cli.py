"""Command-line interface: ``weakodd <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 infeasible request, 3 oracle
budget refusal, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import classes, parity
from .analysis import analyze, classify
from .classes import ExtendedTournamentSpec
from .digraph import ContractError, Digraph, DigraphError, is_semicomplete, is_tournament
from .formats import (
    ParseError,
    export_dot,
    format_report,
    parse_document,
    parse_report,
    serialize_document,
)
from .generators import GenSpec, gen
from .oracle import OracleBudget, OracleRefusal
from .parity import ArcColoring

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_ORACLE = 3
EXIT_SELFTEST = 4


class Infeasible(Exception):
    """A well-formed request that has no answer (exit code 2)."""


def _load(path: str) -> Digraph | ExtendedTournamentSpec:
    return parse_document(Path(path).read_text())


def _digraph(doc: Digraph | ExtendedTournamentSpec) -> Digraph:
    return doc.digraph if isinstance(doc, ExtendedTournamentSpec) else doc


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    budget = OracleBudget(args.oracle_max_arcs, args.oracle_max_arcs) if args.oracle_max_arcs else None
    report = analyze(doc, use_oracle=args.oracle, budget=budget)
    if args.dot:
        print(export_dot(report.digraph, report.witness), end="")
        return EXIT_OK
    coverings = [("covering", report.covering)] if report.covering is not None else []
    print(format_report(report.fields(),
                        [("witness", report.witness), ("defect_witness", report.defect_witness)],
                        coverings), end="")
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    d = _digraph(doc)
    index, witness = parity.chromatic_index(d)
    _, class_index, case = classify(doc)
    if class_index is not None and class_index != index:
        raise AssertionError("classifier and parity engine disagree")
    if args.k < index:
        reason = case or f"parity engine: chromatic index is {index}"
        raise Infeasible(f"no weak-odd {args.k}-coloring exists: chromatic index {index} ({reason})")
    coloring = ArcColoring(args.k, dict(witness.color_of))
    if not parity.verify_coloring(d, coloring).ok:
        raise AssertionError("constructed coloring failed verification")
    if args.dot:
        print(export_dot(d, coloring), end="")
    else:
        print(format_report({"chromatic_index": index, "case": case or "-"},
                            [("coloring", coloring)]), end="")
    return EXIT_OK


def cmd_defect(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    d = _digraph(doc)
    value = parity.defect(d)
    if args.prescribed is not None and value > 0:
        if isinstance(doc, ExtendedTournamentSpec):
            coloring, rep = classes.et_defect_coloring(doc, args.prescribed)
        elif is_semicomplete(d):
            coloring, rep = classes.semicomplete_defect_coloring(d, args.prescribed)
        else:
            raise Infeasible("a prescribed failing vertex is supported only for "
                             "semicomplete digraphs and extended tournaments")
    else:
        coloring, rep = parity.defect_coloring(d)
    if len(rep.failing) != value:
        raise AssertionError("defect coloring does not attain the defect")
    fields = {"defect": value, "failing": " ".join(map(str, sorted(rep.failing))) or "-"}
    print(format_report(fields, [("coloring", coloring)]), end="")
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    d = _digraph(doc)
    if not is_tournament(d):
        raise Infeasible("coverings are constructed for tournaments only; "
                         "whether every digraph admits such a covering is open")
    result = classes.tournament_covering(d)
    fields = {"case": result.case, "doubled_arcs": len(result.covering.doubled())}
    if args.dot:
        print(export_dot(d, result.covering), end="")
    else:
        print(format_report(fields, coverings=[("covering", result.covering)]), end="")
    return EXIT_OK


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.sizes is not None and args.cls != "extended_tournament":
        raise ValueError("--sizes applies only to --class extended_tournament")
    if args.sizes is not None and len(args.sizes) != args.n:
        raise ValueError(f"--sizes needs {args.n} entries")
    doc = gen(GenSpec(args.cls, args.n, args.seed,
                      digon_probability=args.digon_probability,
                      arc_probability=args.arc_probability,
                      max_size=args.max_size, sizes=args.sizes))
    print(serialize_document(doc), end="")
    return EXIT_OK


def _defect_witness_name(report) -> str | None:
    if "defect" not in report.fields:
        return None
    if "defect_witness" in report.colorings:
        return "defect_witness"
    return "coloring" if "coloring" in report.colorings else None


def cmd_verify(args: argparse.Namespace) -> int:
    """Every coloring and covering must be weak-odd, except a defect witness,
    which must fail exactly at the vertices listed under ``failing``."""
    d = _digraph(_load(args.file))
    report = parse_report(Path(args.witness).read_text())
    if not report.colorings and not report.coverings:
        raise ValueError("witness file contains no coloring or covering")
    defect_name = _defect_witness_name(report)
    all_ok = True
    for name, c in [*report.colorings.items(), *report.coverings.items()]:
        rep = (parity.verify_coloring(d, c) if isinstance(c, ArcColoring)
               else parity.verify_covering(d, c))
        failing = " ".join(map(str, sorted(rep.failing))) or "-"
        if name == defect_name:
            ok = failing == report.fields.get("failing", "-")
            print(f"{name}: {'ok' if ok else 'MISMATCH'} (fails at {failing})")
        else:
            ok = rep.ok
            print(f"{name}: {'ok' if ok else 'FAILS at ' + failing}")
        all_ok &= ok
    return EXIT_OK if all_ok else EXIT_INFEASIBLE


def cmd_selftest(args: argparse.Namespace) -> int:
    from .selftest import run_all

    results = run_all(max_n=args.max_n, samples=args.samples)
    for r in results:
        print(r.line())
        for f in r.failures:
            print(f"    {f}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakodd", description="Weak-odd arc colorings of digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report: class, index, defect, witnesses")
    a.add_argument("file")
    a.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    a.add_argument("--oracle-max-arcs", type=int, default=None, metavar="M")
    a.add_argument("--dot", action="store_true", help="print the witness as DOT instead")
    a.set_defaults(fn=cmd_analyze)

    c = sub.add_parser("color", help="weak-odd k-coloring or an infeasibility reason")
    c.add_argument("file")
    c.add_argument("-k", type=int, choices=(1, 2, 3), required=True)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(fn=cmd_color)

    d = sub.add_parser("defect", help="defect and a 2-coloring attaining it")
    d.add_argument("file")
    d.add_argument("--prescribed", type=int, default=None, metavar="V",
                   help="vertex that should carry the failure")
    d.set_defaults(fn=cmd_defect)

    v = sub.add_parser("cover", help="2-covering of a tournament")
    v.add_argument("file")
    v.add_argument("--dot", action="store_true")
    v.set_defaults(fn=cmd_cover)

    g = sub.add_parser("gen", help="emit a seeded instance")
    g.add_argument("--class", dest="cls", required=True,
                   choices=("tournament", "semicomplete", "extended_tournament", "arbitrary"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--sizes", type=_sizes, default=None)
    g.add_argument("--digon-probability", type=float, default=0.3)
    g.add_argument("--arc-probability", type=float, default=0.3)
    g.add_argument("--max-size", type=int, default=3)
    g.set_defaults(fn=cmd_gen)

    w = sub.add_parser("verify", help="re-verify a stored witness")
    w.add_argument("file")
    w.add_argument("witness")
    w.set_defaults(fn=cmd_verify)

    s = sub.add_parser("selftest", help="run the acceptance sweep")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--samples", type=int, default=500)
    s.set_defaults(fn=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OracleRefusal as exc:
        print(f"oracle refused: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (ParseError, DigraphError, ContractError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
