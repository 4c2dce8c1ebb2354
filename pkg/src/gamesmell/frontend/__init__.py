"""Language frontend: parsing, embedded-script extraction, scopes, LOC, chains."""

from __future__ import annotations

from gamesmell.frontend.jsast import (
    AstNode,
    EmbeddedScript,
    NodeKind,
    ParseDiagnostic,
    SourceKind,
    SourceUnit,
    Span,
    iter_nodes,
    walk,
)
from gamesmell.frontend.parse import parse_js, parse_source
from gamesmell.frontend.loc import count_loc
from gamesmell.frontend.scopes import ScopeModel, build_scopes
from gamesmell.frontend.chains import Chain, extract_chains
from gamesmell.frontend.codegen import to_source

__all__ = [
    "AstNode",
    "Chain",
    "EmbeddedScript",
    "NodeKind",
    "ParseDiagnostic",
    "ScopeModel",
    "SourceKind",
    "SourceUnit",
    "Span",
    "build_scopes",
    "count_loc",
    "extract_chains",
    "iter_nodes",
    "parse_js",
    "parse_source",
    "to_source",
    "walk",
]
