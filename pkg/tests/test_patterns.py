"""Pattern-violation detectors: real-world samples plus minimal cases.

The ``fixtures/patterns/verbatim`` files are unedited excerpts from shipped
web games, one per pattern; ``fixtures/patterns/refactored`` holds reworked
versions of the same code that follow the pattern and must come back clean.
"""

from __future__ import annotations

import dataclasses

from conftest import FIXTURES, analyze_src, count_of, findings_of, js_unit

from gamesmell.config import AnalysisConfig
from gamesmell.corpus import analyze_units

VERBATIM = FIXTURES / "patterns" / "verbatim"
REFACTORED = FIXTURES / "patterns" / "refactored"

PATTERN_SUBKINDS = {
    "P1": {"multi-component", "monolithic", "large-method"},
    "P2": {"async-chain", "no-queue"},
    "P3": {"hot-struct", "parallel-objects"},
    "P4": {"alloc-in-loop", "transient-container", "hot-function-alloc"},
}


def fixture_unit(folder, name):
    path = folder / name
    return js_unit(path.read_text(), name)


def analyze_fixture(folder, name, config=None):
    return analyze_units([fixture_unit(folder, name)], config or AnalysisConfig())


# --- real-world positives --------------------------------------------------


def test_preloader_mixes_components():
    found = findings_of(analyze_fixture(VERBATIM, "Preloader.js"), "P1")
    assert len(found) >= 1
    assert "multi-component" in {f.subkind for f in found}


def test_storage_chains_closures_off_a_source():
    found = findings_of(analyze_fixture(VERBATIM, "Storage.js"), "P2")
    assert len(found) >= 1
    assert "async-chain" in {f.subkind for f in found}


def test_boot_keeps_hot_scalars_in_one_object():
    found = findings_of(analyze_fixture(VERBATIM, "Boot.js"), "P3")
    assert len(found) >= 1
    assert "hot-struct" in {f.subkind for f in found}


def test_keyboard_rebuilds_a_container_per_call():
    found = findings_of(analyze_fixture(VERBATIM, "keyboard.js"), "P4")
    assert len(found) == 1
    assert found[0].subkind == "transient-container"


# --- refactored versions come back clean -----------------------------------


def test_refactored_preloader_is_clean():
    assert count_of(analyze_fixture(REFACTORED, "Preloader.js"), "P1") == 0


def test_refactored_storage_is_clean():
    assert count_of(analyze_fixture(REFACTORED, "Storage.js"), "P2") == 0


def test_refactored_boot_is_clean():
    assert count_of(analyze_fixture(REFACTORED, "Boot.js"), "P3") == 0


def test_refactored_keyboard_is_clean():
    assert count_of(analyze_fixture(REFACTORED, "keyboard.js"), "P4") == 0


def test_refactored_set_has_no_pattern_findings_at_all():
    units = [fixture_unit(REFACTORED, p.name) for p in sorted(REFACTORED.iterdir())]
    found = analyze_units(units, AnalysisConfig())
    assert [f for f in found if f.code.startswith("P")] == []


# --- P1 component ----------------------------------------------------------


def test_p1_mixed_function():
    src = "function prepare() {\n    drawSprite(atlas);\n    playMusic(track);\n}\n"
    found = findings_of(analyze_src(src), "P1")
    assert len(found) == 1
    assert found[0].subkind == "multi-component"


def test_p1_single_category_function_is_fine():
    src = "function paint() {\n    drawSprite(atlas);\n    renderHud(screen);\n}\n"
    assert count_of(analyze_src(src), "P1") == 0


def test_p1_monolithic_object():
    props = ",\n".join(f"    m{i}: {i}" for i in range(25))
    found = findings_of(analyze_src(f"var app = {{\n{props}\n}};\n"), "P1")
    assert len(found) == 1
    assert found[0].subkind == "monolithic"


def test_p1_large_method():
    body = "".join(f"    var l{i} = {i};\n" for i in range(58))
    found = findings_of(analyze_src(f"function mega() {{\n{body}}}\n"), "P1")
    assert len(found) == 1
    assert found[0].subkind == "large-method"


def test_p1_top_level_mixing():
    src = "drawSprite(atlas);\nplayMusic(track);\n"
    found = findings_of(analyze_src(src), "P1")
    assert len(found) == 1
    assert found[0].subkind == "multi-component"


def test_p1_smaller_lexicon_never_adds_findings():
    base_cfg = AnalysisConfig()
    trimmed = {k: v for k, v in base_cfg.component_lexicon.items() if k != "audio"}
    cfg = dataclasses.replace(base_cfg, component_lexicon=trimmed)
    base = count_of(analyze_fixture(VERBATIM, "Preloader.js"), "P1")
    fewer = count_of(analyze_fixture(VERBATIM, "Preloader.js", cfg), "P1")
    assert fewer <= base
    assert fewer == 0  # graphics alone is single-purpose


# --- P2 event queue --------------------------------------------------------


def test_p2_direct_input_consumption():
    src = "function onKey(keyEvent) {\n    move(keyEvent.code);\n}\n"
    found = findings_of(analyze_src(src), "P2")
    assert len(found) == 1
    assert found[0].subkind == "no-queue"


def test_p2_queue_push_is_the_fix():
    src = "function onKey(keyEvent) {\n    eventQueue.push(keyEvent);\n}\n"
    assert count_of(analyze_src(src), "P2") == 0


def test_p2_no_input_sources_no_finding():
    src = "function pure(a, b) {\n    return a + b;\n}\n"
    assert count_of(analyze_src(src), "P2") == 0


def test_p2_nested_callbacks_mark_async_chain():
    src = (
        "function listen(el) {\n"
        "    el.addEventListener('keydown', function (e) {\n"
        "        schedule(function () {\n"
        "            apply(e.code);\n"
        "        });\n"
        "    });\n"
        "}\n"
    )
    found = findings_of(analyze_src(src), "P2")
    assert len(found) == 1
    assert found[0].subkind == "async-chain"


# --- P3 data locality ------------------------------------------------------


def test_p3_struct_read_from_two_functions():
    src = (
        "var stats = { hp: 10, mp: 5, xp: 0, lvl: 1 };\n"
        "function damage(n) { return stats.hp - n; }\n"
        "function heal(n) { return stats.mp + n; }\n"
    )
    found = findings_of(analyze_src(src), "P3")
    assert len(found) == 1
    assert found[0].subkind == "hot-struct"


def test_p3_struct_read_inside_loop():
    src = (
        "var world = { w: 100, h: 50, g: 9, t: 0 };\n"
        "function step() {\n"
        "    for (var i = 0; i < world.w; i++) {\n"
        "        advance(i, world.g);\n"
        "    }\n"
        "}\n"
    )
    assert count_of(analyze_src(src), "P3") == 1


def test_p3_struct_read_once_is_fine():
    src = (
        "var conf = { a: 1, b: 2, c: 3, d: 4 };\n"
        "function setup() { return conf.a + conf.b; }\n"
    )
    assert count_of(analyze_src(src), "P3") == 0


def test_p3_small_object_is_fine():
    src = "var pos = { x: 1, y: 2 };\nfunction show() { return pos.x; }\n"
    assert count_of(analyze_src(src), "P3") == 0


def test_p3_parallel_objects_in_one_scope():
    found = findings_of(analyze_src("var a = {x: 1}, b = {x: 2}, c = {x: 3};\n"), "P3")
    assert len(found) == 1
    assert found[0].subkind == "parallel-objects"
    assert found[0].metric == 3


def test_p3_same_layout_across_scopes_is_fine():
    src = (
        "function f() { var p = {x: 1}; return p; }\n"
        "function g() { var q = {x: 2}; return q; }\n"
        "var r = {x: 3};\n"
    )
    assert count_of(analyze_src(src), "P3") == 0


# --- P4 object pool --------------------------------------------------------


def test_p4_allocation_in_loop():
    src = (
        "var list = [];\n"
        "function build(n) {\n"
        "    for (var i = 0; i < n; i++) {\n"
        "        list.push({x: i});\n"
        "    }\n"
        "}\n"
    )
    found = findings_of(analyze_src(src), "P4")
    assert len(found) == 1
    assert found[0].subkind == "alloc-in-loop"


def test_p4_new_in_loop():
    src = (
        "function spawn(n) {\n"
        "    for (var i = 0; i < n; i++) {\n"
        "        register(new Enemy(i));\n"
        "    }\n"
        "}\n"
    )
    assert count_of(analyze_src(src), "P4") == 1


def test_p4_top_level_allocation_is_fine():
    assert count_of(analyze_src("var config = {a: 1, b: 2};\n"), "P4") == 0


def test_p4_hot_function_allocation():
    src = "function update() {\n    var v = {a: 1};\n    use(v);\n}\n"
    found = findings_of(analyze_src(src), "P4")
    assert len(found) == 1
    assert found[0].subkind == "hot-function-alloc"


def test_p4_pool_functions_are_exempt():
    src = (
        "function updatePool(n) {\n"
        "    for (var i = 0; i < n; i++) {\n"
        "        items.push(new Sprite(i));\n"
        "    }\n"
        "}\n"
    )
    assert count_of(analyze_src(src), "P4") == 0


def test_p4_smaller_hot_name_list_never_adds_findings():
    src = "function update() {\n    var v = {a: 1};\n    use(v);\n}\n"
    base_cfg = AnalysisConfig()
    names = tuple(n for n in base_cfg.hot_path_names if n != "update")
    cfg = dataclasses.replace(base_cfg, hot_path_names=names)
    assert count_of(analyze_src(src, cfg), "P4") == 0


# --- shared invariants -----------------------------------------------------


def all_fixture_findings():
    units = [fixture_unit(VERBATIM, p.name) for p in sorted(VERBATIM.iterdir())]
    units += [fixture_unit(REFACTORED, p.name) for p in sorted(REFACTORED.iterdir())]
    return analyze_units(units, AnalysisConfig())


def test_every_pattern_finding_has_one_known_subkind():
    for finding in all_fixture_findings():
        if not finding.code.startswith("P"):
            continue
        assert finding.subkind in PATTERN_SUBKINDS[finding.code]


def test_no_construct_reported_twice_for_one_pattern():
    seen = {}
    for finding in all_fixture_findings():
        if not finding.code.startswith("P"):
            continue
        key = (finding.code, finding.path, finding.span.start, finding.span.end)
        seen[key] = seen.get(key, 0) + 1
    assert all(v == 1 for v in seen.values())


def test_unit_order_does_not_change_findings():
    units = [fixture_unit(VERBATIM, p.name) for p in sorted(VERBATIM.iterdir())]
    forward = analyze_units(list(units), AnalysisConfig())
    backward = analyze_units(list(reversed(units)), AnalysisConfig())
    assert sorted(repr(f) for f in forward) == sorted(repr(f) for f in backward)
