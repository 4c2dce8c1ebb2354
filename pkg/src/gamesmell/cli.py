"""Command-line entry point.

Two modes share one flag set: ``analyze`` takes a file or a game directory,
``corpus`` takes a JSONL manifest of games. Reports go to standard output,
diagnostics to standard error.

Exit codes: 0 = ran (no finding matched --fail-on), 1 = at least one
finding of a --fail-on kind, 2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from collections.abc import Sequence

from .config import ALL_CODES, AnalysisConfig, ConfigError
from .corpus import (
    CorpusError,
    CorpusResult,
    aggregate_stats,
    analyze_corpus,
    analyze_path,
)
from .report import (
    render_figures,
    render_games_csv,
    render_json,
    render_stats_csv,
    render_text,
)

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamesmell",
        description="Detect code smells and game-pattern violations in JavaScript games.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default="text",
            help="report format written to standard output",
        )
        p.add_argument("--config", help="path to a JSON configuration file")
        p.add_argument(
            "--enable",
            action="append",
            default=[],
            metavar="KIND",
            help="run only these kinds (comma-separable, repeatable)",
        )
        p.add_argument(
            "--fail-on",
            action="append",
            default=[],
            metavar="KIND",
            help="exit 1 when findings of these kinds exist",
        )
        p.add_argument(
            "--ignore-dir",
            action="append",
            default=[],
            metavar="NAME",
            help="directory name to skip during file discovery (repeatable)",
        )
        p.add_argument("--stats-csv", metavar="PATH", help="also write the stats CSV here")
        p.add_argument(
            "--figures",
            metavar="DIR",
            help="also render corpus charts as PNG files into this directory",
        )

    analyze = sub.add_parser("analyze", help="analyze one file or one game directory")
    analyze.add_argument("path")
    add_common(analyze)

    corpus = sub.add_parser("corpus", help="analyze every game in a JSONL manifest")
    corpus.add_argument("manifest")
    add_common(corpus)
    return parser


def _parse_kinds(raw: list[str], flag: str) -> tuple[str, ...]:
    codes: list[str] = []
    for chunk in raw:
        for code in chunk.split(","):
            code = code.strip()
            if not code:
                continue
            if code not in ALL_CODES:
                raise ConfigError(f"{flag}: unknown kind '{code}'")
            codes.append(code)
    return tuple(dict.fromkeys(codes))


def _load_config(args: argparse.Namespace) -> AnalysisConfig:
    config = AnalysisConfig.from_file(args.config) if args.config else AnalysisConfig()
    enabled = _parse_kinds(args.enable, "--enable")
    if enabled:
        config = dataclasses.replace(config, enabled=enabled)
    if args.ignore_dir:
        merged = tuple(dict.fromkeys((*config.ignore_dirs, *args.ignore_dir)))
        config = dataclasses.replace(config, ignore_dirs=merged)
    return config


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _load_config(args)
        fail_on = set(_parse_kinds(args.fail_on, "--fail-on"))
        if args.mode == "analyze":
            report = analyze_path(args.path, config)
            result = CorpusResult([report], aggregate_stats([report]), [])
        else:
            result = analyze_corpus(args.manifest, config)
    except (ConfigError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for line in result.diagnostics:
        print(f"note: {line}", file=sys.stderr)
    for report in result.games:
        for line in report.diagnostics:
            print(f"note: {report.game_id}: {line}", file=sys.stderr)

    if args.format == "text":
        sys.stdout.write(render_text(result))
    elif args.format == "json":
        sys.stdout.write(render_json(result, config))
    elif args.mode == "corpus":
        sys.stdout.write(render_stats_csv(result.stats))
    else:
        sys.stdout.write(render_games_csv(result.games))

    if args.stats_csv:
        with open(args.stats_csv, "w", encoding="utf-8") as fh:
            fh.write(render_stats_csv(result.stats))
    if args.figures:
        for path in render_figures(result.stats, args.figures):
            print(f"note: wrote {path}", file=sys.stderr)

    if fail_on and any(f.code in fail_on for r in result.games for f in r.findings):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
