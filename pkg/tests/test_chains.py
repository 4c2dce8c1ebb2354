"""Member-chain extraction tests."""

from __future__ import annotations

from conftest import js_unit

from gamesmell.frontend import extract_chains


def lengths(src: str) -> list[int]:
    unit = js_unit(src)
    assert unit.parsed, src
    return sorted(c.length for c in extract_chains(unit.ast))


def test_plain_member_chain():
    assert lengths("a.b.c.d;\n") == [3]


def test_single_call_is_length_one():
    assert lengths("a();\n") == [1]


def test_maximal_chain_reported_once():
    # the full five-link chain, never its prefixes
    assert lengths("x = a.b.c.d.e();\n") == [5]


def test_call_links_count():
    assert lengths("game.world.stage.view.camera;\n") == [4]
    # three member accesses plus two call links
    assert lengths("a.b().c.d();\n") == [5]


def test_computed_members_count_as_links():
    assert lengths("a[i].b[j].c;\n") == [4]


def test_two_disjoint_chains():
    assert lengths("a.b.c.d.e;\nf.g.h.i.j;\n") == [4, 4]


def test_chain_spans_cover_text():
    src = "hud.panel.score.label.text;\n"
    unit = js_unit(src)
    chain = extract_chains(unit.ast)[0]
    assert "hud.panel.score.label.text" in src[chain.span.start : chain.span.end]
