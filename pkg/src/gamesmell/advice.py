"""One remediation note per finding kind, used by the text report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Final

from .findings import Finding, PatternKind, SmellKind


@dataclass(frozen=True)
class Advice:
    kind: SmellKind | PatternKind
    title: str
    body: str


_TITLES: Final[dict[SmellKind | PatternKind, str]] = {
    SmellKind.S1: "Flatten nested closures",
    SmellKind.S2: "Separate the languages",
    SmellKind.S3: "Handle the exception",
    SmellKind.S4: "Shrink the global surface",
    SmellKind.S5: "Split the large object",
    SmellKind.S6: "Retire the lazy object",
    SmellKind.S7: "Break the message chain",
    SmellKind.S8: "Shorten the method",
    SmellKind.S9: "Bundle the parameters",
    SmellKind.S10: "Unwind the callbacks",
    SmellKind.S11: "Compose instead of inherit",
    SmellKind.S12: "Replace the switch",
    SmellKind.S13: "Remove dead code",
    PatternKind.P1: "Decouple into components",
    PatternKind.P2: "Route events through a queue",
    PatternKind.P3: "Lay hot data out contiguously",
    PatternKind.P4: "Reuse objects from a pool",
}

_BODIES: Final[dict[SmellKind | PatternKind, str]] = {
    SmellKind.S1: (
        "Flatten the closure stack: lift inner functions to named siblings, "
        "pass state through parameters, and bind 'this' explicitly where it "
        "crosses a function boundary."
    ),
    SmellKind.S2: (
        "Keep each language in its own file: move inline script out of the "
        "markup, markup out of strings, and styling into stylesheets toggled "
        "by class name."
    ),
    SmellKind.S3: (
        "An empty catch swallows the exception and the game gives no "
        "response to the failure; log it, recover, or let it propagate."
    ),
    SmellKind.S4: (
        "Move shared state into a single namespace object or module so the "
        "global surface stays small and collisions become visible."
    ),
    SmellKind.S5: (
        "Split the object along its responsibilities; a type this wide is "
        "several types sharing one name."
    ),
    SmellKind.S6: (
        "Fold a do-nothing object into its only caller, or grow it into a "
        "real abstraction; as it stands it only adds indirection."
    ),
    SmellKind.S7: (
        "Ask the nearest object for what you need instead of walking the "
        "whole structure; each link in the chain is a coupling."
    ),
    SmellKind.S8: (
        "Extract cohesive blocks into named helpers until the method reads "
        "as a sequence of steps."
    ),
    SmellKind.S9: (
        "Bundle the parameters into an options object or a purpose-built "
        "type; long lists invite swapped arguments."
    ),
    SmellKind.S10: (
        "Name the callbacks, or restructure the flow so each step completes "
        "before the next is scheduled."
    ),
    SmellKind.S11: (
        "Prefer composition: the child uses so little of the parent that "
        "the inheritance link mostly imports surface area."
    ),
    SmellKind.S12: (
        "Replace the switch with polymorphism or a lookup table keyed on "
        "the discriminant."
    ),
    SmellKind.S13: (
        "Delete what cannot run and what nothing calls; dead code still "
        "costs reading time and hides real behaviour."
    ),
    PatternKind.P1: (
        "Split the work into per-component modules (graphics, audio, input, "
        "physics) and let an owning entity compose them."
    ),
    PatternKind.P2: (
        "Buffer events in a queue object: handlers call Add() as input "
        "arrives and the loop drains it with PublishEvents() at a controlled "
        "point in the frame."
    ),
    PatternKind.P3: (
        "Lay hot fields out as arrays (one array per field) so tight loops "
        "walk contiguous, faster memory instead of chasing object layouts."
    ),
    PatternKind.P4: (
        "Preallocate a pool and reuse instances via fetch() and recycle() "
        "instead of allocating inside loops and hot paths."
    ),
}

ADVICE: Final[dict[SmellKind | PatternKind, Advice]] = {
    kind: Advice(kind, _TITLES[kind], _BODIES[kind]) for kind in _BODIES
}


def advice_for(kind: SmellKind | PatternKind) -> Advice:
    return ADVICE[kind]


def advise(finding: Finding) -> Advice:
    return ADVICE[finding.kind]
