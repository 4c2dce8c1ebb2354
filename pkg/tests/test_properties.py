"""Property-based checks over generated programs.

Programs come from the block generator in ``jsgen`` with construction-time
ground truth; independent text-level recomputations live in ``oracles``.
Together they pin the engines from two directions the engines cannot see.
"""

from __future__ import annotations

import dataclasses

import jsgen
import oracles
from conftest import analyze_src, js_unit
from hypothesis import given, settings
from hypothesis import strategies as st

from gamesmell.config import AnalysisConfig
from gamesmell.corpus import analyze_units
from gamesmell.frontend import build_scopes, count_loc, extract_chains, parse_source
from gamesmell.frontend.jsast import FUNCTION_KINDS, NodeKind, iter_nodes, structurally_equal
from gamesmell.frontend.loc import unit_loc

SEEDS = st.integers(min_value=0, max_value=10**9)

# Loosening any one threshold must never create findings. Each entry moves a
# knob strictly away from its default in the permissive direction.
LOOSER = {
    "closure_depth": 6,
    "globals_max": 30,
    "large_object_props": 26,
    "lazy_object_props": 1,
    "chain_min": 7,
    "method_loc_max": 80,
    "params_max": 8,
    "callback_depth": 5,
    "bequest_ratio": 0.05,
    "switch_cases_min": 6,
    "html_string_min_tags": 5,
}

# Codes whose findings concatenate: the construct lives inside one unit and
# name-disjoint snippets cannot interact.
ADDITIVE_CODES = ("S1", "S3", "S5", "S6", "S7", "S8", "S9", "S10", "S12")


def counts_by_code(findings) -> dict[str, int]:
    out: dict[str, int] = {}
    for f in findings:
        out[f.code] = out.get(f.code, 0) + 1
    return out


# --- engine measurements vs ground truth and oracles -----------------------


def engine_measurements(text: str):
    unit = js_unit(text)
    assert unit.ast is not None, "generator must emit parseable programs"
    params = sorted(
        int(n.attrs["param_count"])
        for n in iter_nodes(unit.ast)
        if n.kind in FUNCTION_KINDS
    )
    cases = sorted(
        int(n.attrs["case_count"])
        for n in iter_nodes(unit.ast)
        if n.kind == NodeKind.SWITCH_STMT
    )
    chains = sorted(c.length for c in extract_chains(unit.ast) if c.length >= 2)
    loc = unit_loc(unit)
    globals_ = set(build_scopes(unit).defined_globals())
    depth_cfg = AnalysisConfig(callback_depth=1)
    depths = sorted(
        int(f.metric)
        for f in analyze_src(text, depth_cfg)
        if f.code == "S10" and f.metric is not None
    )
    return params, cases, chains, loc, globals_, depths


@settings(max_examples=40, deadline=None)
@given(seed=SEEDS)
def test_engine_matches_ground_truth(seed):
    truth = jsgen.generate(seed)
    params, cases, chains, loc, globals_, depths = engine_measurements(truth.text)
    assert params == sorted(truth.param_counts)
    assert cases == sorted(truth.switch_cases)
    assert chains == sorted(truth.chain_lengths)
    assert loc == truth.loc
    assert globals_ == truth.global_names
    assert depths == sorted(truth.callback_leaf_depths)


@settings(max_examples=40, deadline=None)
@given(seed=SEEDS)
def test_engine_matches_text_oracles(seed):
    text = jsgen.generate(seed).text
    params, cases, chains, loc, globals_, _depths = engine_measurements(text)
    assert params == sorted(oracles.param_counts(text))
    assert cases == sorted(oracles.switch_case_counts(text))
    assert chains == sorted(oracles.chain_lengths(text))
    assert loc == oracles.count_code_lines(text)
    assert globals_ == oracles.global_names(text)


# --- threshold monotonicity ------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(seed=SEEDS, knob=st.sampled_from(sorted(LOOSER)))
def test_loosening_a_threshold_never_adds_findings(seed, knob):
    text = jsgen.generate(seed).text
    tight = counts_by_code(analyze_src(text))
    loose_cfg = dataclasses.replace(AnalysisConfig(), **{knob: LOOSER[knob]})
    loose = counts_by_code(analyze_src(text, loose_cfg))
    for code in set(tight) | set(loose):
        assert loose.get(code, 0) <= tight.get(code, 0)


# --- additivity and permutation invariance ---------------------------------


@settings(max_examples=30, deadline=None)
@given(seed_a=SEEDS, seed_b=SEEDS)
def test_disjoint_concatenation_is_additive(seed_a, seed_b):
    a = jsgen.generate(seed_a, prefix="left").text
    b = jsgen.generate(seed_b, prefix="right").text
    separate = counts_by_code(analyze_src(a))
    for code, n in counts_by_code(analyze_src(b)).items():
        separate[code] = separate.get(code, 0) + n
    joined = counts_by_code(analyze_src(a + b))
    for code in ADDITIVE_CODES:
        assert joined.get(code, 0) == separate.get(code, 0)


@settings(max_examples=20, deadline=None)
@given(seed=SEEDS, order=st.permutations([0, 1, 2]))
def test_unit_order_never_changes_findings(seed, order):
    texts = [jsgen.generate(seed + k, prefix=f"u{k}").text for k in range(3)]
    units = [js_unit(t, f"{k}.js") for k, t in enumerate(texts)]
    baseline = analyze_units(list(units), AnalysisConfig())
    shuffled = analyze_units([units[i] for i in order], AnalysisConfig())
    assert sorted(repr(f) for f in baseline) == sorted(repr(f) for f in shuffled)


# --- determinism and reparse stability -------------------------------------


@settings(max_examples=20, deadline=None)
@given(seed=SEEDS)
def test_analysis_is_deterministic(seed):
    text = jsgen.generate(seed).text
    first = [repr(f) for f in analyze_src(text)]
    second = [repr(f) for f in analyze_src(text)]
    assert first == second


@settings(max_examples=30, deadline=None)
@given(seed=SEEDS)
def test_generated_programs_reparse_stably(seed):
    from gamesmell.frontend.codegen import to_source

    text = jsgen.generate(seed).text
    unit = js_unit(text)
    assert unit.ast is not None
    rendered = to_source(unit.ast)
    again = js_unit(rendered, "rendered.js")
    assert again.ast is not None, f"render broke parseability: {rendered[:200]!r}"
    assert structurally_equal(unit.ast, again.ast)


# --- LOC spans -------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(seed=SEEDS)
def test_function_loc_never_exceeds_unit_loc(seed):
    text = jsgen.generate(seed).text
    unit = js_unit(text)
    total = unit_loc(unit)
    for node in iter_nodes(unit.ast):
        if node.kind in FUNCTION_KINDS:
            assert 0 <= count_loc(node.span, unit) <= total


# --- config round trip -----------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(
    chain_min=st.integers(min_value=1, max_value=50),
    params_max=st.integers(min_value=1, max_value=50),
    bequest_ratio=st.fractions(min_value="1/100", max_value="99/100"),
)
def test_config_round_trips_through_dict(chain_min, params_max, bequest_ratio):
    config = AnalysisConfig(
        chain_min=chain_min,
        params_max=params_max,
        bequest_ratio=float(bequest_ratio),
    )
    assert AnalysisConfig.from_dict(config.to_dict()) == config
