"""Report rendering: text for humans, JSON and CSV for machines, PNG charts.

Averages and percentages are rendered straight from the integer numerators
and denominators with half-even rounding, so printed cells never inherit
binary floating point drift. JSON is rendered with sorted keys and a fixed
layout so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .advice import advice_for
from .config import ALL_CODES, AnalysisConfig
from .findings import KIND_BY_CODE, SMELL_CODES
from .corpus import CorpusResult, CorpusStats, GameReport

__all__ = [
    "format_cell",
    "render_figures",
    "render_games_csv",
    "render_json",
    "render_stats_csv",
    "render_text",
]


def format_cell(numerator: int, denominator: int, decimals: int = 2) -> str:
    """Exact decimal string for numerator/denominator, half-even rounded.

    Works in integers end to end: scale, divide, and settle the remainder
    against half the denominator. A zero denominator renders as zero.
    """
    if denominator == 0:
        return "0." + "0" * decimals if decimals else "0"
    sign = "-" if (numerator < 0) != (denominator < 0) else ""
    num, den = abs(numerator), abs(denominator)
    scale = 10**decimals
    q, r = divmod(num * scale, den)
    double = 2 * r
    if double > den or (double == den and q % 2 == 1):
        q += 1
    if decimals == 0:
        return f"{sign}{q}"
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{decimals}d}"


# --- CSV ------------------------------------------------------------------


def render_stats_csv(stats: CorpusStats) -> str:
    """Four statistic rows by thirteen smell columns."""
    lines = ["statistic," + ",".join(SMELL_CODES)]
    lines.append("total," + ",".join(str(stats.total[c]) for c in SMELL_CODES))
    lines.append(
        "avg_per_game,"
        + ",".join(format_cell(stats.total[c], stats.n_games) for c in SMELL_CODES)
    )
    lines.append(
        "pct_of_all,"
        + ",".join(
            format_cell(100 * stats.total[c], stats.smell_total) for c in SMELL_CODES
        )
    )
    lines.append(
        "pct_games_containing,"
        + ",".join(
            format_cell(100 * stats.games_containing[c], stats.n_games)
            for c in SMELL_CODES
        )
    )
    return "\n".join(lines) + "\n"


def render_games_csv(reports: list[GameReport]) -> str:
    """One row per game: identity, size, and all seventeen counts."""
    lines = ["game_id,js_loc," + ",".join(ALL_CODES)]
    for report in reports:
        lines.append(
            f"{report.game_id},{report.js_loc},"
            + ",".join(str(report.counts[c]) for c in ALL_CODES)
        )
    return "\n".join(lines) + "\n"


# --- JSON -----------------------------------------------------------------


def render_json(result: CorpusResult, config: AnalysisConfig) -> str:
    payload = {
        "version": __version__,
        "config_echo": config.to_dict(),
        "games": [report.to_dict() for report in result.games],
        "stats": result.stats.to_dict(),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# --- text -----------------------------------------------------------------


def render_text(result: CorpusResult) -> str:
    out: list[str] = []
    for report in result.games:
        total = len(report.findings)
        out.append(
            f"game {report.game_id}: {total} finding{'s' if total != 1 else ''} "
            f"in {report.file_count} file{'s' if report.file_count != 1 else ''}, "
            f"{report.js_loc} JS lines"
        )
        for f in report.findings:
            kind = KIND_BY_CODE[f.code]
            tag = f.code if f.subkind is None else f"{f.code}/{f.subkind}"
            out.append(
                f"  [{tag}] {kind.slug} {f.path}:{f.span.start_line}:{f.span.start_col}"
                f" {f.message}"
            )
            if f.evidence:
                out.append(f"      {f.evidence}")
        for path, flags in sorted(report.unit_flags.items()):
            out.append(f"  note: {path} flagged {', '.join(flags)}")
        out.append("")

    present = [c for c in ALL_CODES if any(r.counts[c] for r in result.games)]
    if present:
        out.append("advice:")
        for code in present:
            tip = advice_for(KIND_BY_CODE[code])
            out.append(f"  {code} {tip.title}: {tip.body}")
        out.append("")

    stats = result.stats
    if stats.n_games > 1:
        out.append(f"corpus: {stats.n_games} games, {stats.smell_total} smell findings")
        header = f"{'statistic':>22}" + "".join(f"{c:>9}" for c in SMELL_CODES)
        out.append(header)
        out.append(
            f"{'total':>22}" + "".join(f"{stats.total[c]:>9}" for c in SMELL_CODES)
        )
        out.append(
            f"{'avg_per_game':>22}"
            + "".join(
                f"{format_cell(stats.total[c], stats.n_games):>9}" for c in SMELL_CODES
            )
        )
        out.append(
            f"{'pct_of_all':>22}"
            + "".join(
                f"{format_cell(100 * stats.total[c], stats.smell_total):>9}"
                for c in SMELL_CODES
            )
        )
        out.append(
            f"{'pct_games_containing':>22}"
            + "".join(
                f"{format_cell(100 * stats.games_containing[c], stats.n_games):>9}"
                for c in SMELL_CODES
            )
        )
        out.append("")
    return "\n".join(out)


# --- figures --------------------------------------------------------------


def render_figures(stats: CorpusStats, out_dir: str | Path) -> list[Path]:
    """Write distribution charts for the corpus as PNG files."""
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    share = [float(format_cell(100 * stats.total[c], stats.smell_total)) for c in SMELL_CODES]
    fig, ax = plt.subplots(figsize=(9, 4.5))
    ax.bar(SMELL_CODES, share, color="#35618f")
    ax.set_ylabel("% of all smell findings")
    ax.set_title("Smell distribution across the corpus")
    fig.tight_layout()
    path = out / "smell_share.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    presence = [
        float(format_cell(100 * stats.games_containing[c], stats.n_games))
        for c in ALL_CODES
    ]
    fig, ax = plt.subplots(figsize=(10, 4.5))
    colors = ["#35618f"] * len(SMELL_CODES) + ["#8f5635"] * (len(ALL_CODES) - len(SMELL_CODES))
    ax.bar(ALL_CODES, presence, color=colors)
    ax.set_ylabel("% of games containing")
    ax.set_ylim(0, 100)
    ax.set_title("How widely each smell and pattern violation occurs")
    fig.tight_layout()
    path = out / "smell_presence.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written
