"""Full analysis of one instance: class, index, defect, witnesses, provenance."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import classes, oracle, parity
from .classes import ExtendedTournamentSpec
from .digraph import Digraph, is_semicomplete, is_tournament
from .parity import ArcColoring, ArcCovering


@dataclass
class AnalysisReport:
    instance_class: str
    digraph: Digraph
    chromatic_index: int
    case: str
    witness: ArcColoring
    defect: int
    defect_witness: ArcColoring
    failing: frozenset[int]
    covering: ArcCovering | None = None
    covering_case: str | None = None
    provenance: dict[str, str] = field(default_factory=dict)
    oracle: dict[str, int] = field(default_factory=dict)

    def fields(self) -> dict[str, object]:
        out: dict[str, object] = {
            "class": self.instance_class,
            "n": self.digraph.n,
            "arcs": len(self.digraph.arcs),
            "chromatic_index": self.chromatic_index,
            "case": self.case,
            "defect": self.defect,
            "failing": " ".join(map(str, sorted(self.failing))) or "-",
        }
        if self.covering is not None:
            out["covering_doubled_arcs"] = len(self.covering.doubled())
            out["covering_case"] = self.covering_case
        for key, value in self.provenance.items():
            out[f"provenance.{key}"] = value
        for key, value in self.oracle.items():
            out[f"oracle.{key}"] = value
        return out


def detect_class(doc: Digraph | ExtendedTournamentSpec) -> str:
    if isinstance(doc, ExtendedTournamentSpec):
        return "extended_tournament"
    if is_tournament(doc):
        return "tournament"
    if is_semicomplete(doc):
        return "semicomplete"
    return "arbitrary"


def engine_case(d: Digraph, index: int) -> str:
    return {
        0: "no arcs",
        1: classes.CASE_ODD_OR_ZERO,
        2: "every nontrivial split component has even V2 count or a V3 node",
        3: "some nontrivial split component is bad",
    }[index]


def classify(doc: Digraph | ExtendedTournamentSpec) -> tuple[str, int | None, str | None]:
    """Instance class with the closed-form index and case, if the class has one."""
    kind = detect_class(doc)
    if kind == "extended_tournament":
        index, case = classes.classify_extended_tournament(doc)
    elif kind == "tournament":
        index, case = classes.classify_tournament(doc)
    elif kind == "semicomplete":
        _, index, case = classes.classify_semicomplete(doc)
    else:
        return kind, None, None
    return kind, index, case


def class_witness(doc: Digraph | ExtendedTournamentSpec, index: int) -> ArcColoring | None:
    """Witness from a class-specific construction, where one exists."""
    d = doc.digraph if isinstance(doc, ExtendedTournamentSpec) else doc
    if index == 2 and not isinstance(doc, ExtendedTournamentSpec) and is_semicomplete(d):
        return classes.semicomplete_two_coloring(d)
    return None


def analyze(doc: Digraph | ExtendedTournamentSpec, use_oracle: bool = False,
            budget: oracle.OracleBudget | None = None) -> AnalysisReport:
    d = doc.digraph if isinstance(doc, ExtendedTournamentSpec) else doc
    kind, class_index, class_case = classify(doc)
    engine_index, engine_witness = parity.chromatic_index(d)
    provenance: dict[str, str] = {}
    if class_index is not None:
        if class_index != engine_index:
            raise AssertionError(
                f"classifier says {class_index}, parity engine says {engine_index}"
            )
        provenance["index"] = "classifier+engine"
        case = class_case
    else:
        provenance["index"] = "engine"
        case = engine_case(d, engine_index)
    witness = class_witness(doc, engine_index)
    provenance["witness"] = "classifier" if witness is not None else "engine"
    if witness is None:
        witness = engine_witness

    value = parity.defect(d)
    if kind in ("tournament", "semicomplete") and classes.is_bad_semicomplete(d):
        defect_witness, rep = classes.semicomplete_defect_coloring(d)
        provenance["defect"] = "classifier+engine"
    elif kind == "extended_tournament":
        if classes.et_defect(doc) != value:
            raise AssertionError("closed-form blow-up defect disagrees with the engine")
        if value:
            defect_witness, rep = classes.et_defect_coloring(doc, doc.blocks[doc.order[-1]][0])
        else:
            defect_witness, rep = parity.defect_coloring(d)
        provenance["defect"] = "classifier+engine"
    else:
        defect_witness, rep = parity.defect_coloring(d)
        provenance["defect"] = "engine"
    if len(rep.failing) != value:
        raise AssertionError("defect coloring does not attain the defect")

    report = AnalysisReport(kind, d, engine_index, case, witness, value,
                            defect_witness, rep.failing, provenance=provenance)
    if kind == "tournament":
        cov = classes.tournament_covering(d)
        report.covering, report.covering_case = cov.covering, cov.case
    if use_oracle:
        budget = budget or oracle.OracleBudget()
        report.oracle["chromatic_index"] = oracle.brute_chromatic_index(d, budget)
        report.oracle["defect"] = oracle.brute_defect(d, budget)
        agree = (report.oracle["chromatic_index"] == engine_index
                 and report.oracle["defect"] == value)
        provenance["oracle"] = "agrees" if agree else "DISAGREES"
    return report
