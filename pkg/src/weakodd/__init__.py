"""Weak-odd arc colorings, defects and 2-coverings of digraphs.

An arc coloring is weak-odd when every vertex sees, in each nonempty
semi-cut, some color an odd number of times. This package decides and
constructs such colorings, computes the defect of 2-colorings and builds
tournament coverings, with an independent brute-force oracle for checking.
"""

from __future__ import annotations

from .classes import (
    ExtendedTournamentSpec,
    blow_up,
    classify_extended_tournament,
    classify_semicomplete,
    classify_tournament,
    is_bad_et,
    is_bad_semicomplete,
    tournament_covering,
)
from .digraph import ContractError, Digraph, DigraphError, strong_components
from .formats import ParseError, export_dot, parse_document, serialize_document
from .generators import GenSpec, SplitMix64, enumerate_tournaments, gen
from .oracle import OracleBudget, OracleRefusal, brute_chromatic_index, brute_defect
from .parity import (
    ArcColoring,
    ArcCovering,
    chromatic_index,
    defect,
    defect_coloring,
    verify_coloring,
    verify_covering,
)
from .split import partial_split

__all__ = [
    "ArcColoring", "ArcCovering", "ContractError", "Digraph", "DigraphError",
    "ExtendedTournamentSpec", "GenSpec", "OracleBudget", "OracleRefusal", "ParseError",
    "SplitMix64", "blow_up", "brute_chromatic_index", "brute_defect", "chromatic_index",
    "classify_extended_tournament", "classify_semicomplete", "classify_tournament",
    "defect", "defect_coloring", "enumerate_tournaments", "export_dot", "gen",
    "is_bad_et", "is_bad_semicomplete", "parse_document", "partial_split",
    "serialize_document", "strong_components", "tournament_covering",
    "verify_coloring", "verify_covering",
]
