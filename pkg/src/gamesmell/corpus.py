"""Corpus ingestion and aggregation.

A corpus is described by a manifest: one JSON object per line with a
``game_id``, a ``root`` directory (resolved relative to the manifest), and
optional ``meta``. One manifest entry is one game is one directory subtree.

Per game this module collects ``.js``/``.html`` files, parses them (scripts
embedded in HTML become analysis units of their own), runs every enabled
detector, and folds the games into corpus statistics. Aggregation goes
through an associative partial so any grouping of games merges to the same
result; percentages only exist at the very end.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .config import ALL_CODES, AnalysisConfig
from .findings import KIND_BY_CODE, SMELL_CODES, Finding, sort_findings
from .frontend.jsast import SourceKind, SourceUnit
from .frontend.loc import unit_loc
from .frontend.parse import embedded_units, parse_source, source_kind_for_path
from .patterns import PATTERN_DETECTORS
from .smells import SMELL_DETECTORS, UnitView

__all__ = [
    "CorpusError",
    "CorpusResult",
    "CorpusStats",
    "GameManifest",
    "GameRecord",
    "GameReport",
    "StatsPartial",
    "aggregate_stats",
    "analyze_game",
    "analyze_path",
    "analyze_units",
    "collect_files",
    "load_manifest",
]

_SOURCE_SUFFIXES = (".js", ".html", ".htm")


class CorpusError(ValueError):
    """Unusable corpus input: missing manifest, unreadable file."""


# --- manifest -------------------------------------------------------------


@dataclass(frozen=True)
class GameRecord:
    game_id: str
    root: Path
    meta: dict = field(default_factory=dict)


@dataclass
class GameManifest:
    entries: list[GameRecord]
    diagnostics: list[str]


def load_manifest(path: str | Path) -> GameManifest:
    """Read a JSONL manifest. Malformed rows and missing roots become
    diagnostics and are skipped; a missing manifest file is fatal."""
    manifest_path = Path(path)
    try:
        text = manifest_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read manifest: {exc}") from exc

    entries: list[GameRecord] = []
    diagnostics: list[str] = []
    seen: set[str] = set()
    base = manifest_path.parent
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            diagnostics.append(f"manifest line {lineno}: invalid JSON ({exc.msg})")
            continue
        if not isinstance(row, dict):
            diagnostics.append(f"manifest line {lineno}: expected an object")
            continue
        game_id = row.get("game_id")
        root = row.get("root")
        if not isinstance(game_id, str) or not game_id:
            diagnostics.append(f"manifest line {lineno}: missing game_id")
            continue
        if not isinstance(root, str) or not root:
            diagnostics.append(f"manifest line {lineno}: missing root")
            continue
        if game_id in seen:
            diagnostics.append(f"manifest line {lineno}: duplicate game_id '{game_id}'")
            continue
        root_path = (base / root).resolve() if not Path(root).is_absolute() else Path(root)
        if not root_path.is_dir():
            diagnostics.append(
                f"manifest line {lineno}: root '{root}' is not a directory, skipping '{game_id}'"
            )
            continue
        meta = row.get("meta")
        seen.add(game_id)
        entries.append(GameRecord(game_id, root_path, meta if isinstance(meta, dict) else {}))
    return GameManifest(entries, diagnostics)


# --- per-game analysis ----------------------------------------------------


@dataclass
class GameReport:
    game_id: str
    file_count: int
    js_loc: int
    counts: dict[str, int]
    findings: list[Finding]
    diagnostics: list[str]
    unit_flags: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "game_id": self.game_id,
            "file_count": self.file_count,
            "js_loc": self.js_loc,
            "counts": {code: self.counts[code] for code in ALL_CODES},
            "findings": [f.to_dict() for f in self.findings],
            "diagnostics": list(self.diagnostics),
            "unit_flags": {k: list(v) for k, v in sorted(self.unit_flags.items())},
        }


def collect_files(root: Path, config: AnalysisConfig) -> list[Path]:
    """Source files under ``root`` in sorted relative order, skipping any
    path that passes through an ignored directory name."""
    ignored = set(config.ignore_dirs)
    found: list[Path] = []
    for path in root.rglob("*"):
        if not path.is_file() or path.suffix.lower() not in _SOURCE_SUFFIXES:
            continue
        rel = path.relative_to(root)
        if any(part in ignored for part in rel.parts[:-1]):
            continue
        found.append(path)
    return sorted(found, key=lambda p: p.relative_to(root).as_posix())


def _read_source(path: Path) -> tuple[str, bool]:
    data = path.read_bytes()
    try:
        return data.decode("utf-8"), False
    except UnicodeDecodeError:
        return data.decode("utf-8", errors="replace"), True


def analyze_units(units: Sequence[SourceUnit], config: AnalysisConfig) -> list[Finding]:
    """Run every enabled detector over the given analysis units."""
    views = [UnitView.from_unit(unit) for unit in units]
    findings: list[Finding] = []
    for code in ALL_CODES:
        if not config.is_enabled(code):
            continue
        detector = SMELL_DETECTORS.get(KIND_BY_CODE[code]) or PATTERN_DETECTORS.get(
            KIND_BY_CODE[code]
        )
        assert detector is not None
        if detector.scope == "unit":
            for view in views:
                findings.extend(detector.run(view, config))
        else:
            findings.extend(detector.run(views, config))
    return sort_findings(findings)


def _expand_units(unit: SourceUnit) -> list[SourceUnit]:
    # HTML pages stay in the unit list (the mixed-language rule reads them)
    # and contribute each extracted script as its own unit.
    if unit.kind is SourceKind.HTML:
        return [unit, *embedded_units(unit)]
    return [unit]


def _rel_name(path: Path, root: Path) -> str:
    if root in path.parents:
        return path.relative_to(root).as_posix()
    return path.name


def analyze_game_from_files(
    game_id: str, files: Iterable[Path], root: Path, config: AnalysisConfig
) -> GameReport:
    """Analyze an explicit file list as one game.

    The list is deduplicated and sorted by game-relative path first, so the
    report is identical no matter what order discovery produced.
    """
    units: list[SourceUnit] = []
    diagnostics: list[str] = []
    files = sorted(set(files), key=lambda p: _rel_name(p, root))
    for path in files:
        rel = _rel_name(path, root)
        try:
            text, lossy = _read_source(path)
        except OSError as exc:
            diagnostics.append(f"{rel}: unreadable ({exc})")
            continue
        unit = parse_source(rel, text, source_kind_for_path(rel))
        if lossy:
            unit.flags.add("lossy-decode")
        units.extend(_expand_units(unit))

    findings = [f.with_game(game_id) for f in analyze_units(units, config)]
    counts = {code: 0 for code in ALL_CODES}
    for finding in findings:
        counts[finding.code] += 1
    js_loc = sum(unit_loc(u) for u in units if u.kind is SourceKind.JS and u.parsed)
    unit_flags = {u.path: tuple(sorted(u.flags)) for u in units if u.flags}
    for u in units:
        for diag in u.diagnostics:
            diagnostics.append(f"{u.path}:{diag.line}:{diag.col}: {diag.message}")
    return GameReport(
        game_id=game_id,
        file_count=len(files),
        js_loc=js_loc,
        counts=counts,
        findings=findings,
        diagnostics=diagnostics,
        unit_flags=unit_flags,
    )


def analyze_game(game_id: str, root: Path, config: AnalysisConfig) -> GameReport:
    return analyze_game_from_files(game_id, collect_files(root, config), root, config)


def analyze_path(path: str | Path, config: AnalysisConfig) -> GameReport:
    """Analyze a single file or a game directory."""
    target = Path(path)
    if target.is_dir():
        return analyze_game(target.name, target, config)
    if not target.is_file():
        raise CorpusError(f"no such file or directory: {target}")
    return analyze_game_from_files(target.name, [target], target.parent, config)


# --- aggregation ----------------------------------------------------------


@dataclass(frozen=True)
class StatsPartial:
    """Associative building block for corpus statistics.

    Totals and presence counts are additive, so partials over any grouping
    of games merge to the same value; nothing here divides.
    """

    n_games: int
    totals: dict[str, int]
    games_containing: dict[str, int]

    @staticmethod
    def empty() -> "StatsPartial":
        return StatsPartial(0, {c: 0 for c in ALL_CODES}, {c: 0 for c in ALL_CODES})

    @staticmethod
    def of_report(report: GameReport) -> "StatsPartial":
        totals = {c: report.counts.get(c, 0) for c in ALL_CODES}
        present = {c: (1 if totals[c] > 0 else 0) for c in ALL_CODES}
        return StatsPartial(1, totals, present)

    def merge(self, other: "StatsPartial") -> "StatsPartial":
        return StatsPartial(
            self.n_games + other.n_games,
            {c: self.totals[c] + other.totals[c] for c in ALL_CODES},
            {c: self.games_containing[c] + other.games_containing[c] for c in ALL_CODES},
        )


@dataclass(frozen=True)
class CorpusStats:
    n_games: int
    total: dict[str, int]
    games_containing: dict[str, int]

    @property
    def smell_total(self) -> int:
        return sum(self.total[c] for c in SMELL_CODES)

    @property
    def avg_per_game(self) -> dict[str, float]:
        if self.n_games == 0:
            return {c: 0.0 for c in ALL_CODES}
        return {c: self.total[c] / self.n_games for c in ALL_CODES}

    @property
    def pct_of_all(self) -> dict[str, float]:
        denom = self.smell_total
        if denom == 0:
            return {c: 0.0 for c in SMELL_CODES}
        return {c: 100.0 * self.total[c] / denom for c in SMELL_CODES}

    @property
    def pct_games_containing(self) -> dict[str, float]:
        if self.n_games == 0:
            return {c: 0.0 for c in ALL_CODES}
        return {c: 100.0 * self.games_containing[c] / self.n_games for c in ALL_CODES}

    def to_dict(self) -> dict:
        return {
            "n_games": self.n_games,
            "total": {c: self.total[c] for c in ALL_CODES},
            "avg_per_game": self.avg_per_game,
            "pct_of_all": self.pct_of_all,
            "pct_games_containing": self.pct_games_containing,
        }


def aggregate_stats(reports: Iterable[GameReport]) -> CorpusStats:
    partial = StatsPartial.empty()
    for report in reports:
        partial = partial.merge(StatsPartial.of_report(report))
    return finalize_stats(partial)


def finalize_stats(partial: StatsPartial) -> CorpusStats:
    return CorpusStats(partial.n_games, dict(partial.totals), dict(partial.games_containing))


# --- whole-corpus driver --------------------------------------------------


@dataclass
class CorpusResult:
    games: list[GameReport]
    stats: CorpusStats
    diagnostics: list[str]


def analyze_corpus(manifest: GameManifest | str | Path, config: AnalysisConfig) -> CorpusResult:
    if not isinstance(manifest, GameManifest):
        manifest = load_manifest(manifest)
    reports = [
        analyze_game(record.game_id, record.root, config)
        for record in manifest.entries
    ]
    reports.sort(key=lambda r: r.game_id)
    return CorpusResult(reports, aggregate_stats(reports), list(manifest.diagnostics))
