"""Configuration loading, validation, and round-trip tests."""

from __future__ import annotations

import dataclasses
import json

import pytest

from gamesmell.config import ALL_CODES, AnalysisConfig, ConfigError


def test_defaults():
    cfg = AnalysisConfig()
    assert cfg.closure_depth == 4
    assert cfg.globals_max == 10
    assert cfg.large_object_props == 20
    assert cfg.lazy_object_props == 3
    assert cfg.chain_min == 4
    assert cfg.method_loc_max == 50
    assert cfg.params_max == 4
    assert cfg.callback_depth == 3
    assert cfg.bequest_ratio == pytest.approx(1 / 3)
    assert cfg.switch_cases_min == 3
    assert cfg.html_string_min_tags == 2


def test_all_thresholds_positive():
    cfg = AnalysisConfig()
    for name in (
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
        assert getattr(cfg, name) > 0, name


def test_nonpositive_threshold_rejected():
    with pytest.raises(ConfigError):
        AnalysisConfig(chain_min=0)
    with pytest.raises(ConfigError):
        AnalysisConfig(bequest_ratio=-0.5)


def test_round_trip_identity():
    cfg = AnalysisConfig(chain_min=6, hot_path_names=("spin", "update"))
    data = cfg.to_dict()
    again = AnalysisConfig.from_dict(data)
    assert again == cfg
    # and once more through actual JSON text
    third = AnalysisConfig.from_dict(json.loads(json.dumps(data)))
    assert third == cfg


def test_file_round_trip(tmp_path):
    cfg = AnalysisConfig(params_max=6)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_dict()), encoding="utf-8")
    assert AnalysisConfig.from_file(path) == cfg


def test_unknown_key_is_config_error(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"chain_mim": 5}), encoding="utf-8")
    with pytest.raises(ConfigError) as exc:
        AnalysisConfig.from_file(path)
    assert "chain_mim" in str(exc.value)


def test_missing_keys_take_defaults(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"globals_max": 25}), encoding="utf-8")
    cfg = AnalysisConfig.from_file(path)
    assert cfg.globals_max == 25
    assert cfg.chain_min == 4


def test_component_lexicon_tokens_lowercase():
    cfg = AnalysisConfig()
    for category, tokens in cfg.component_lexicon.items():
        assert tokens, category
        for token in tokens:
            assert token == token.lower()


def test_classify_component():
    cfg = AnalysisConfig()
    assert cfg.classify_component("audio") == ["audio"]
    assert cfg.classify_component("image") == ["graphics"]
    assert cfg.classify_component("drawHud") == ["graphics"]  # draw* wildcard
    assert cfg.classify_component("log") == []
    assert cfg.classify_component("console") == []


def test_classify_component_case_insensitive():
    cfg = AnalysisConfig()
    assert cfg.classify_component("AUDIO") == ["audio"]
    assert cfg.classify_component("LocalStorage") == ["storage"]


def test_hot_path_names():
    cfg = AnalysisConfig()
    assert cfg.is_hot_path_name("update")
    assert cfg.is_hot_path_name("queryActiveBindings")
    assert cfg.is_hot_path_name("onKeyDown")
    assert not cfg.is_hot_path_name("recycleAll")


def test_enabled_kinds_subset():
    cfg = AnalysisConfig(enabled=("S3", "P4"))
    assert cfg.is_enabled("S3")
    assert cfg.is_enabled("P4")
    assert not cfg.is_enabled("S7")
    default = AnalysisConfig()
    for code in ALL_CODES:
        assert default.is_enabled(code)


def test_config_equality_and_replace():
    cfg = AnalysisConfig()
    assert dataclasses.replace(cfg, chain_min=9) != cfg
    assert dataclasses.replace(cfg) == cfg
