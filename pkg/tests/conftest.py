"""Shared helpers for the test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from gamesmell.config import AnalysisConfig
from gamesmell.corpus import analyze_units
from gamesmell.findings import Finding
from gamesmell.frontend import SourceKind, SourceUnit, parse_source

FIXTURES = Path(__file__).parent / "fixtures"


def js_unit(src: str, path: str = "main.js") -> SourceUnit:
    return parse_source(path, src, SourceKind.JS)


def html_unit(src: str, path: str = "index.html") -> SourceUnit:
    return parse_source(path, src, SourceKind.HTML)


def analyze_src(
    src: str, config: AnalysisConfig | None = None, *, path: str = "main.js"
) -> list[Finding]:
    """Run every enabled detector over one in-memory JS source."""
    return analyze_units([js_unit(src, path)], config or AnalysisConfig())


def findings_of(findings: list[Finding], code: str) -> list[Finding]:
    return [f for f in findings if f.code == code]


def count_of(findings: list[Finding], code: str) -> int:
    return len(findings_of(findings, code))


@pytest.fixture
def default_config() -> AnalysisConfig:
    return AnalysisConfig()


def write_game(root: Path, files: dict[str, str]) -> Path:
    """Materialize a game directory from a {relative path: content} mapping."""
    for rel, content in files.items():
        target = root / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(content, encoding="utf-8")
    return root
