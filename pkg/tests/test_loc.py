"""Line-counting contract tests."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles
from conftest import js_unit

from gamesmell.frontend import NodeKind, Span, count_loc, iter_nodes
from gamesmell.frontend.loc import unit_loc


def loc_of(src: str) -> int:
    unit = js_unit(src)
    assert unit.parsed, src
    return unit_loc(unit)


def test_blank_line_excluded():
    src = "function f() {\n\n  return 1;\n}\n"
    assert loc_of(src) == 3  # signature, return, close


def test_comment_only_body_counts_signature():
    src = "function f() { // todo\n}\n"
    assert loc_of(src) == 2


def test_comment_only_lines_excluded():
    src = "// header\nvar a = 1;\n/* block\n   middle\n*/\nvar b = 2;\n"
    assert loc_of(src) == 2


def test_trailing_comment_still_code():
    assert loc_of("var a = 1; // note\n") == 1


def test_comment_lookalikes_inside_strings_count():
    assert loc_of('var s = "// not a comment";\n') == 1
    assert loc_of('var s = "/* still code */";\n') == 1


def test_empty_span_is_zero():
    unit = js_unit("var a = 1;\n")
    assert count_loc(Span(0, 0, 1, 1, 1, 1), unit) == 0


def test_span_counting_is_line_based():
    src = "var a = 1;\nvar b = 2;\nvar c = 3;\n"
    unit = js_unit(src)
    decls = [n for n in iter_nodes(unit.ast) if n.kind is NodeKind.VAR_DECL]
    span = Span(decls[0].span.start, decls[1].span.end, 1, 1, 2, 1)
    assert count_loc(span, unit) == 2


def test_one_line_function_is_one():
    assert loc_of("function f() { return 1; }\n") == 1


def test_agrees_with_line_classifier_oracle():
    samples = [
        "var a = 1;\n\nvar b = 2;\n",
        "/* top */\nfunction f() {\n  // inner\n  return 'x // y';\n}\n",
        "var t = `line\nsecond line`;\nvar u = 1;\n",
        "\n\n\n",
        "var s = \"a\\\"b\";\n// done\n",
    ]
    for src in samples:
        assert loc_of(src) == oracles.count_code_lines(src), src
