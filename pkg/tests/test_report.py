"""Rendered outputs: the two CSV layouts, stable JSON, text, and figures."""

from __future__ import annotations

import json

from conftest import write_game

from gamesmell.config import ALL_CODES, AnalysisConfig
from gamesmell.corpus import CorpusResult, GameReport, aggregate_stats, analyze_path
from gamesmell.findings import SMELL_CODES
from gamesmell.report import (
    render_figures,
    render_games_csv,
    render_json,
    render_stats_csv,
    render_text,
)


def report_with(game_id: str, **counts: int) -> GameReport:
    full = {code: 0 for code in ALL_CODES}
    full.update(counts)
    return GameReport(
        game_id=game_id,
        file_count=1,
        js_loc=10,
        counts=full,
        findings=[],
        diagnostics=[],
    )


def two_game_result() -> CorpusResult:
    reports = [report_with("alpha", S1=3), report_with("beta")]
    return CorpusResult(reports, aggregate_stats(reports), [])


def real_result(tmp_path) -> CorpusResult:
    game = tmp_path / "game"
    write_game(
        game,
        {
            "a.js": "function f(a, b, c, d, e) { return a.b.c.d.e; }\nf(1, 2, 3, 4, 5);\n",
            "b.js": "try { go(); } catch (e) {}\n",
        },
    )
    report = analyze_path(game, AnalysisConfig())
    return CorpusResult([report], aggregate_stats([report]), [])


# --- stats CSV -------------------------------------------------------------


def test_stats_csv_layout():
    text = render_stats_csv(two_game_result().stats)
    lines = text.strip().split("\n")
    assert lines[0] == "statistic," + ",".join(SMELL_CODES)
    assert [row.split(",")[0] for row in lines[1:]] == [
        "total",
        "avg_per_game",
        "pct_of_all",
        "pct_games_containing",
    ]
    assert all(len(row.split(",")) == 1 + len(SMELL_CODES) for row in lines)


def test_stats_csv_values():
    rows = {
        row.split(",")[0]: row.split(",")[1:]
        for row in render_stats_csv(two_game_result().stats).strip().split("\n")[1:]
    }
    s1 = SMELL_CODES.index("S1")
    assert rows["total"][s1] == "3"
    assert rows["avg_per_game"][s1] == "1.50"
    assert rows["pct_of_all"][s1] == "100.00"
    assert rows["pct_games_containing"][s1] == "50.00"


# --- games CSV -------------------------------------------------------------


def test_games_csv_layout():
    text = render_games_csv(two_game_result().games)
    lines = text.strip().split("\n")
    assert lines[0] == "game_id,js_loc," + ",".join(ALL_CODES)
    assert len(lines) == 3
    alpha = lines[1].split(",")
    assert alpha[0] == "alpha"
    assert alpha[2 + ALL_CODES.index("S1")] == "3"


# --- JSON ------------------------------------------------------------------


def test_json_has_the_four_top_level_keys(tmp_path):
    payload = json.loads(render_json(real_result(tmp_path), AnalysisConfig()))
    assert set(payload) == {"version", "config_echo", "games", "stats"}


def test_json_render_is_byte_stable(tmp_path):
    result = real_result(tmp_path)
    config = AnalysisConfig()
    assert render_json(result, config) == render_json(result, config)


def test_json_round_trips_byte_identically(tmp_path):
    rendered = render_json(real_result(tmp_path), AnalysisConfig())
    again = json.dumps(json.loads(rendered), indent=2, sort_keys=True) + "\n"
    assert again == rendered


def test_json_config_echo_contains_every_threshold(tmp_path):
    config = AnalysisConfig()
    payload = json.loads(render_json(real_result(tmp_path), config))
    echo = payload["config_echo"]
    for key, value in config.to_dict().items():
        assert key in echo
        assert echo[key] == json.loads(json.dumps(value))


def test_json_findings_in_canonical_order(tmp_path):
    payload = json.loads(render_json(real_result(tmp_path), AnalysisConfig()))
    for game in payload["games"]:
        keys = [
            (
                f["game_id"] or "",
                f["path"],
                f["span"]["start"],
                f["span"]["end"],
                f["kind"],
            )
            for f in game["findings"]
        ]
        assert keys == sorted(keys)


def test_json_counts_match_findings(tmp_path):
    payload = json.loads(render_json(real_result(tmp_path), AnalysisConfig()))
    for game in payload["games"]:
        for code in ALL_CODES:
            listed = sum(1 for f in game["findings"] if f["kind"] == code)
            assert game["counts"][code] == listed


# --- text ------------------------------------------------------------------


def test_text_mentions_games_and_advice(tmp_path):
    text = render_text(real_result(tmp_path))
    assert "game game:" in text
    assert "advice:" in text
    assert "S3" in text and "S9" in text


def test_text_corpus_block_only_for_multiple_games():
    single = CorpusResult([report_with("solo", S1=1)], aggregate_stats([report_with("solo", S1=1)]), [])
    assert "corpus:" not in render_text(single)
    assert "corpus: 2 games" in render_text(two_game_result())


# --- figures ---------------------------------------------------------------


def test_figures_written(tmp_path):
    written = render_figures(two_game_result().stats, tmp_path / "figs")
    names = [p.name for p in written]
    assert names == ["smell_share.png", "smell_presence.png"]
    for path in written:
        assert path.is_file()
        assert path.stat().st_size > 0
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
