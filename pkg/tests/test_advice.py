"""Remediation notes: complete coverage and the load-bearing phrases."""

from __future__ import annotations

from gamesmell.advice import ADVICE, advice_for, advise
from gamesmell.findings import Finding, PatternKind, SmellKind
from gamesmell.frontend import Span


def test_every_kind_has_advice():
    for kind in (*SmellKind, *PatternKind):
        tip = advice_for(kind)
        assert tip.title
        assert tip.body
    assert len(ADVICE) == len(SmellKind) + len(PatternKind)


def test_queue_advice_names_the_queue_methods():
    body = advice_for(PatternKind.P2).body
    assert "Add()" in body
    assert "PublishEvents()" in body


def test_locality_advice_mentions_array_layout():
    assert "array" in advice_for(PatternKind.P3).body.lower()


def test_pool_advice_mentions_reuse():
    body = advice_for(PatternKind.P4).body.lower()
    assert "pool" in body
    assert "reuse" in body


def test_empty_catch_advice_mentions_the_missing_response():
    body = advice_for(SmellKind.S3).body.lower()
    assert "exception" in body
    assert "response" in body


def test_advise_resolves_from_a_finding():
    finding = Finding(
        kind=SmellKind.S7,
        path="main.js",
        span=Span(0, 1, 1, 0, 1, 1),
        message="chain",
    )
    assert advise(finding) is advice_for(SmellKind.S7)
