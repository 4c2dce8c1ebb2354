"""Finding records and the kind taxonomy shared by detectors and reports."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from gamesmell.frontend.jsast import Span


class SmellKind(enum.Enum):
    S1 = ("S1", "deeply-nested-code")
    S2 = ("S2", "language-mixing")
    S3 = ("S3", "empty-catch")
    S4 = ("S4", "excessive-globals")
    S5 = ("S5", "large-object")
    S6 = ("S6", "lazy-object")
    S7 = ("S7", "long-message-chain")
    S8 = ("S8", "long-method")
    S9 = ("S9", "long-parameter-list")
    S10 = ("S10", "callback-hell")
    S11 = ("S11", "refused-bequest")
    S12 = ("S12", "switch-statement")
    S13 = ("S13", "dead-code")

    def __init__(self, code: str, slug: str) -> None:
        self.code = code
        self.slug = slug


class PatternKind(enum.Enum):
    P1 = ("P1", "component")
    P2 = ("P2", "event-queue")
    P3 = ("P3", "data-locality")
    P4 = ("P4", "object-pool")

    def __init__(self, code: str, slug: str) -> None:
        self.code = code
        self.slug = slug


KIND_BY_CODE: dict[str, SmellKind | PatternKind] = {
    **{k.code: k for k in SmellKind},
    **{k.code: k for k in PatternKind},
}

SMELL_CODES = tuple(k.code for k in SmellKind)
PATTERN_CODES = tuple(k.code for k in PatternKind)


@dataclass(frozen=True)
class Finding:
    kind: SmellKind | PatternKind
    path: str
    span: Span
    message: str
    evidence: str = ""
    metric: float | int | None = None
    subkind: str | None = None
    game_id: str | None = None

    @property
    def code(self) -> str:
        return self.kind.code

    @property
    def line(self) -> int:
        return self.span.start_line

    @property
    def col(self) -> int:
        return self.span.start_col

    def with_game(self, game_id: str) -> "Finding":
        return Finding(self.kind, self.path, self.span, self.message,
                       self.evidence, self.metric, self.subkind, game_id)

    def sort_key(self) -> tuple:
        return (
            self.game_id or "",
            self.path,
            self.span.start,
            self.span.end,
            self.code,
            self.subkind or "",
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.code,
            "slug": self.kind.slug,
            "subkind": self.subkind,
            "game_id": self.game_id,
            "path": self.path,
            "span": {
                "start": self.span.start,
                "end": self.span.end,
                "start_line": self.span.start_line,
                "start_col": self.span.start_col,
                "end_line": self.span.end_line,
                "end_col": self.span.end_col,
            },
            "message": self.message,
            "evidence": self.evidence,
            "metric": self.metric,
        }


def sort_findings(findings: list[Finding]) -> list[Finding]:
    """Canonical report order: game, path, span, then kind code."""
    return sorted(findings, key=Finding.sort_key)


def evidence_from(text: str, span: Span, limit: int = 160) -> str:
    """First meaningful line of the spanned source, trimmed for reports."""
    excerpt = text[span.start : span.end]
    for line in excerpt.splitlines():
        stripped = line.strip()
        if stripped:
            if len(stripped) > limit:
                return stripped[: limit - 3] + "..."
            return stripped
    return ""
