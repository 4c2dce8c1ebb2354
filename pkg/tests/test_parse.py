"""Parser and AST contract tests."""

from __future__ import annotations

import pytest
from conftest import js_unit

from gamesmell.frontend import NodeKind, SourceKind, iter_nodes, parse_source, to_source, walk
from gamesmell.frontend.jsast import FUNCTION_KINDS, structurally_equal


def kinds_of(unit, kind: NodeKind):
    return [n for n in iter_nodes(unit.ast) if n.kind is kind]


def test_minimal_program():
    unit = js_unit("var x = 1;")
    assert unit.parsed
    assert not unit.diagnostics
    assert unit.ast.kind is NodeKind.PROGRAM
    assert kinds_of(unit, NodeKind.VAR_DECL)


def test_syntax_error_yields_diagnostic_and_no_ast():
    unit = js_unit("function (")
    assert unit.ast is None
    assert len(unit.diagnostics) >= 1
    assert unit.diagnostics[0].line == 1


def test_exactly_one_of_ast_or_diagnostics():
    for src in ("var a = 1;", "function (", "a +", "if (x) { y(); }"):
        unit = js_unit(src)
        assert (unit.ast is not None) != bool(unit.diagnostics), src


def test_spans_inside_text():
    unit = js_unit("function f(a, b) { return a + b; }\nf(1, 2);\n")
    n = len(unit.text)
    for node in iter_nodes(unit.ast):
        assert 0 <= node.span.start <= node.span.end <= n


def test_children_nest_within_parent():
    unit = js_unit("function f(a) { if (a) { return a; } }\n")
    for node, ancestors in walk(unit.ast):
        if ancestors:
            parent = ancestors[-1]
            assert parent.span.start <= node.span.start
            assert node.span.end <= parent.span.end


def test_param_counts():
    unit = js_unit("function f() {}\nfunction g(a, b, c) {}\nvar h = (x, y) => x;\n")
    counts = sorted(n.attrs["param_count"] for n in iter_nodes(unit.ast) if n.kind in FUNCTION_KINDS)
    assert counts == [0, 2, 3]


def test_rest_and_default_params_count_one_each():
    unit = js_unit("function f(a, b = 1, ...rest) {}\n")
    fn = kinds_of(unit, NodeKind.FUNCTION_DECL)[0]
    assert fn.attrs["param_count"] == 3


def test_switch_case_count_excludes_default():
    unit = js_unit("switch (x) { case 1: break; case 2: break; default: break; }\n")
    sw = kinds_of(unit, NodeKind.SWITCH_STMT)[0]
    assert sw.attrs["case_count"] == 2
    assert sw.attrs["has_default"] is True


def test_asi_restricted_return():
    unit = js_unit("function f() {\n  return\n  1;\n}\n")
    ret = kinds_of(unit, NodeKind.RETURN)[0]
    assert not ret.children  # newline terminates the return


def test_regex_vs_division():
    unit = js_unit("var re = /ab+c/g;\nvar q = total / parts / 2;\n")
    assert unit.parsed and not unit.diagnostics


def test_template_literal():
    unit = js_unit("var s = `a ${x} b`;\n")
    assert kinds_of(unit, NodeKind.TEMPLATE_LITERAL)


def test_class_with_extends():
    unit = js_unit("class A { f() {} g() {} }\nclass B extends A { f() {} }\n")
    classes = kinds_of(unit, NodeKind.CLASS_DECL)
    assert [c.attrs["name"] for c in classes] == ["A", "B"]
    assert classes[1].attrs["has_super"] is True


def test_es2015_subset_parses():
    src = (
        "let a = 1;\nconst b = [2];\nfor (const v of b) { a += v; }\n"
        "var f = (p = 3) => p;\nclass C {}\n"
    )
    unit = js_unit(src)
    assert unit.parsed and not unit.diagnostics


def test_unsupported_syntax_is_diagnostic_not_crash():
    unit = js_unit("var x = <div/>;")
    assert unit.ast is None
    assert unit.diagnostics


def test_parse_determinism():
    src = "function f(a) { return a.b.c; }\nvar o = {x: 1};\n"
    u1, u2 = js_unit(src), js_unit(src)
    assert structurally_equal(u1.ast, u2.ast)
    assert [(d.line, d.col, d.message) for d in u1.diagnostics] == [
        (d.line, d.col, d.message) for d in u2.diagnostics
    ]


@pytest.mark.parametrize(
    "src",
    [
        "var x = 1;\n",
        "function f(a, b) { return a + b; }\n",
        "var o = {a: 1, b: [2, 3], c: function () { return null; }};\n",
        "switch (k) { case 1: f(); break; default: g(); }\n",
        "try { f(); } catch (e) { h(e); } finally { done(); }\n",
        "for (var i = 0; i < 9; i += 1) { acc.push(i); }\n",
        "class A { constructor(x) { this.x = x; } go() { return this.x; } }\n",
        "var f = (a) => a * 2;\nwhile (f(1)) { break; }\n",
        "x = cond ? a.b.c : d[e];\nlabel. y = -z;\n",
        "do { tick(); } while (more);\nfor (var k in table) { use(k); }\n",
    ],
)
def test_reparse_stability(src):
    unit = js_unit(src)
    assert unit.parsed, src
    printed = to_source(unit.ast)
    again = parse_source("again.js", printed, SourceKind.JS)
    assert again.parsed, printed
    assert structurally_equal(unit.ast, again.ast), printed


def test_minified_flag_long_line():
    src = "var a = 1;" * 700  # one line, > 5000 chars
    unit = js_unit(src)
    assert "minified" in unit.flags
    assert unit.parsed  # analyzed anyway


def test_minified_flag_avg_line_length():
    lines = [("f(%d);" % i) * 110 for i in range(4)]  # avg > 500, none > 5000
    unit = js_unit("\n".join(lines))
    assert "minified" in unit.flags


def test_normal_file_not_minified():
    unit = js_unit("var a = 1;\nvar b = 2;\n")
    assert "minified" not in unit.flags
