"""Command-line behaviour: exit codes, formats, filters, side outputs."""

from __future__ import annotations

import json

from conftest import write_game

from gamesmell.cli import main

SMELLY = "function f(a, b, c, d, e) { return 1; }\nf(1, 2, 3, 4, 5);\ntry { f(); } catch (e) {}\n"


def game_dir(tmp_path, name="game", src=SMELLY):
    return write_game(tmp_path / name, {"main.js": src})


# --- exit codes ------------------------------------------------------------


def test_exit_zero_on_success(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path))]) == 0
    assert "S9" in capsys.readouterr().out


def test_exit_one_when_fail_on_matches(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--fail-on", "S3"]) == 1


def test_exit_zero_when_fail_on_misses(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--fail-on", "S12"]) == 0


def test_exit_two_on_missing_path(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope")]) == 2
    assert "error:" in capsys.readouterr().err


def test_exit_two_on_unknown_kind(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--enable", "S99"]) == 2
    assert "S99" in capsys.readouterr().err


def test_exit_two_on_bad_config_file(tmp_path, capsys):
    bad = tmp_path / "config.json"
    bad.write_text('{"chain_mim": 4}', encoding="utf-8")
    assert main(["analyze", str(game_dir(tmp_path)), "--config", str(bad)]) == 2
    assert "chain_mim" in capsys.readouterr().err


def test_exit_two_on_usage_error(capsys):
    assert main([]) == 2
    assert main(["analyze"]) == 2


# --- kind filtering --------------------------------------------------------


def test_enable_runs_only_listed_kinds(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--format", "json", "--enable", "S3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    counts = payload["games"][0]["counts"]
    assert counts["S3"] == 1
    assert counts["S9"] == 0
    kinds = {f["kind"] for f in payload["games"][0]["findings"]}
    assert kinds == {"S3"}


def test_enable_accepts_comma_lists(tmp_path, capsys):
    assert main(
        ["analyze", str(game_dir(tmp_path)), "--format", "json", "--enable", "S3,S9"]
    ) == 0
    counts = json.loads(capsys.readouterr().out)["games"][0]["counts"]
    assert counts["S3"] == 1 and counts["S9"] == 1


# --- formats ---------------------------------------------------------------


def test_json_format_echoes_config(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    echo = payload["config_echo"]
    for key in (
        "closure_depth",
        "globals_max",
        "large_object_props",
        "lazy_object_props",
        "chain_min",
        "method_loc_max",
        "params_max",
        "callback_depth",
        "bequest_ratio",
        "switch_cases_min",
        "html_string_min_tags",
    ):
        assert key in echo


def test_csv_format_for_single_game_lists_games(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path)), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("game_id,js_loc,S1")
    assert "\ngame," in out


def test_csv_format_for_corpus_lists_stats(tmp_path, capsys):
    game_dir(tmp_path, "g1")
    game_dir(tmp_path, "g2", "var tiny = 1;\ntiny;\n")
    manifest = tmp_path / "games.jsonl"
    manifest.write_text(
        json.dumps({"game_id": "g1", "root": "g1"})
        + "\n"
        + json.dumps({"game_id": "g2", "root": "g2"})
        + "\n",
        encoding="utf-8",
    )
    assert main(["corpus", str(manifest), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("statistic,S1")
    assert "pct_games_containing" in out


def test_text_format_is_default(tmp_path, capsys):
    assert main(["analyze", str(game_dir(tmp_path))]) == 0
    out = capsys.readouterr().out
    assert "game game:" in out
    assert "advice:" in out


# --- side outputs ----------------------------------------------------------


def test_stats_csv_file_written(tmp_path, capsys):
    target = tmp_path / "stats.csv"
    assert main(["analyze", str(game_dir(tmp_path)), "--stats-csv", str(target)]) == 0
    assert target.read_text(encoding="utf-8").startswith("statistic,S1")


def test_figures_directory_written(tmp_path, capsys):
    figs = tmp_path / "figs"
    assert main(["analyze", str(game_dir(tmp_path)), "--figures", str(figs)]) == 0
    assert (figs / "smell_share.png").is_file()
    assert (figs / "smell_presence.png").is_file()


def test_diagnostics_go_to_stderr(tmp_path, capsys):
    game = write_game(tmp_path / "broken", {"bad.js": "function ( {\n"})
    assert main(["analyze", str(game)]) == 0
    captured = capsys.readouterr()
    assert "note:" in captured.err
    assert "bad.js" in captured.err


def test_byte_identical_output_across_runs(tmp_path, capsys):
    game = game_dir(tmp_path)
    assert main(["analyze", str(game), "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", str(game), "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
