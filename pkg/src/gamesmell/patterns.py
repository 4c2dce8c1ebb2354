"""Detectors for violations of four game programming patterns.

All four run at game scope: whether a binding is pooled, queued, or split
into components is a property of the whole codebase, not of one file.

Each detector reports once per offending construct. Where one construct
could match several rules of the same detector, the more specific rule wins
(documented per detector below).
"""

from __future__ import annotations

import re
from typing import Final

from .config import AnalysisConfig
from .findings import Finding, PatternKind, evidence_from
from .frontend.jsast import FUNCTION_KINDS, AstNode, NodeKind, Span, walk
from .smells import (
    Detector,
    UnitView,
    contains_inline_callback,
    dotted_name,
    function_name,
    is_inline_callback,
    own_body_nodes,
    own_function_loc,
    owner_name,
)

__all__ = [
    "HOT_STRUCT_MIN_PROPS",
    "MONOLITH_MEMBER_MIN",
    "MONOLITH_LOC_MIN",
    "PARALLEL_MIN",
    "PATTERN_DETECTORS",
]

# A class or object this large is a monolith no matter how it is named.
MONOLITH_MEMBER_MIN: Final = 20
MONOLITH_LOC_MIN: Final = 500

# A struct-like object needs this many scalar fields before its layout is
# worth optimising.
HOT_STRUCT_MIN_PROPS: Final = 4

# This many declarators sharing one field layout marks a parallel-object
# family that wants to be an array.
PARALLEL_MIN: Final = 3

_POOL_NAME_RE: Final = re.compile(r"pool", re.IGNORECASE)

_ALLOC_KINDS: Final = frozenset(
    {NodeKind.OBJECT_LITERAL, NodeKind.ARRAY_LITERAL, NodeKind.NEW}
)

_ALLOC_LABELS: Final = {
    NodeKind.OBJECT_LITERAL: "object literal",
    NodeKind.ARRAY_LITERAL: "array literal",
    NodeKind.NEW: "constructor call",
}


def _finding(
    kind: PatternKind,
    view: UnitView,
    span: Span,
    message: str,
    *,
    metric: float | None = None,
    subkind: str | None = None,
) -> Finding:
    return Finding(
        kind=kind,
        path=view.unit.path,
        span=span,
        message=message,
        evidence=evidence_from(view.unit.text, span),
        metric=metric,
        subkind=subkind,
    )


def _enclosing_function_names(ancestors: tuple[AstNode, ...]) -> list[str]:
    names: list[str] = []
    for i, node in enumerate(ancestors):
        if node.kind in FUNCTION_KINDS:
            parent = ancestors[i - 1] if i > 0 else None
            name = function_name(node, parent)
            if name:
                names.append(name)
    return names


def _nearest_function(ancestors: tuple[AstNode, ...]) -> AstNode | None:
    for node in reversed(ancestors):
        if node.kind in FUNCTION_KINDS:
            return node
    return None


def _loop_inside_function(ancestors: tuple[AstNode, ...]) -> bool:
    """True when the node sits in a loop of its own function, so the code
    runs once per iteration rather than once per call."""
    for node in reversed(ancestors):
        if node.kind == NodeKind.LOOP:
            return True
        if node.kind in FUNCTION_KINDS:
            return False
    return False


# --- P1 component ---------------------------------------------------------


def _component_categories(fn: AstNode, config: AnalysisConfig) -> set[str]:
    names: set[str] = set()
    for node in own_body_nodes(fn):
        if node.kind == NodeKind.IDENTIFIER:
            name = node.attrs.get("name")
        elif node.kind == NodeKind.MEMBER and not node.attrs.get("computed"):
            name = node.attrs.get("property")
        else:
            continue
        if name:
            names.add(str(name))
    categories: set[str] = set()
    for name in names:
        categories.update(config.classify_component(name))
    return categories


def detect_component(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """P1: responsibilities that belong in separate components.

    Three rules, most specific first, one report per construct: a function
    (or a file's top-level script body) mixing two or more component
    vocabularies; a monolithic class or object; a function whose sheer size
    makes it a de facto module.
    """
    findings: list[Finding] = []
    for view in views:
        root = view.unit.ast
        if root is None:
            continue
        mixed: set[int] = set()
        top_categories = _component_categories(root, config)
        if len(top_categories) >= 2:
            listed = ", ".join(sorted(top_categories))
            findings.append(
                _finding(
                    PatternKind.P1,
                    view,
                    root.span,
                    f"top level of '{view.unit.path}' mixes {listed} work",
                    metric=len(top_categories),
                    subkind="multi-component",
                )
            )
        for node, ancestors in walk(root):
            parent = ancestors[-1] if ancestors else None
            if node.kind in FUNCTION_KINDS:
                categories = _component_categories(node, config)
                if len(categories) >= 2:
                    mixed.add(id(node))
                    name = function_name(node, parent) or "(anonymous)"
                    listed = ", ".join(sorted(categories))
                    findings.append(
                        _finding(
                            PatternKind.P1,
                            view,
                            node.span,
                            f"'{name}' mixes {listed} work in one function",
                            metric=len(categories),
                            subkind="multi-component",
                        )
                    )
            elif node.kind in (NodeKind.OBJECT_LITERAL, NodeKind.CLASS_DECL):
                members = sum(
                    1
                    for c in node.children
                    if c.kind in (NodeKind.PROPERTY, NodeKind.METHOD_DEF)
                )
                loc = 0
                if view.unit.loc_index is not None:
                    loc = view.unit.loc_index.count_lines(node.span.start, node.span.end)
                if members < MONOLITH_MEMBER_MIN and loc <= MONOLITH_LOC_MIN:
                    continue
                name = owner_name(node, parent) or "(anonymous)"
                findings.append(
                    _finding(
                        PatternKind.P1,
                        view,
                        node.span,
                        f"'{name}' concentrates {members} members over {loc} lines",
                        metric=members if members >= MONOLITH_MEMBER_MIN else loc,
                        subkind="monolithic",
                    )
                )
        for node, ancestors in walk(root):
            if node.kind not in FUNCTION_KINDS or id(node) in mixed:
                continue
            own = own_function_loc(node, view.unit)
            if own <= config.method_loc_max:
                continue
            name = function_name(node, ancestors[-1] if ancestors else None) or "(anonymous)"
            findings.append(
                _finding(
                    PatternKind.P1,
                    view,
                    node.span,
                    f"'{name}' is {own} lines of single-purpose-resistant code",
                    metric=own,
                    subkind="large-method",
                )
            )
    return findings


# --- P2 event queue -------------------------------------------------------

_SOURCE_MEMBER_CALLS: Final = frozenset({"getItem", "addEventListener"})
_ON_EVENT_RE: Final = re.compile(r"^on[a-z]+$")
_INPUT_PARAM_HINTS: Final = ("key", "mouse", "touch", "event", "pointer")


def _handles_input_directly(fn: AstNode) -> bool:
    for param in fn.children:
        if param.kind != NodeKind.PARAM:
            continue
        name = str(param.attrs.get("name") or "").lower()
        if any(hint in name for hint in _INPUT_PARAM_HINTS):
            return True
    for node in own_body_nodes(fn):
        if node.kind == NodeKind.CALL:
            callee = node.children[0]
            if (
                callee.kind == NodeKind.MEMBER
                and callee.attrs.get("property") in _SOURCE_MEMBER_CALLS
            ):
                return True
        elif node.kind == NodeKind.MEMBER and not node.attrs.get("computed"):
            prop = node.attrs.get("property")
            if prop and _ON_EVENT_RE.match(str(prop)):
                return True
    return False


def _has_nested_callback_chain(fn: AstNode) -> bool:
    """Inline callbacks two deep inside ``fn``: work chained off the event."""
    stack: list[tuple[AstNode, AstNode]] = [(c, fn) for c in fn.children]
    while stack:
        node, parent = stack.pop()
        if is_inline_callback(node, parent) and contains_inline_callback(node):
            return True
        stack.extend((c, node) for c in node.children)
    return False


def _references_queue_binding(fn: AstNode, queue_re: re.Pattern[str]) -> bool:
    """True when any binding occurrence under ``fn`` looks like a queue.

    Binding occurrences are bare identifier references plus declared names.
    Property slots do not count: ``addEventListener`` in ``el.addEventListener``
    is an event source, not a queue binding.
    """
    for node, ancestors in walk(fn):
        if node.kind == NodeKind.IDENTIFIER:
            parent = ancestors[-1] if ancestors else None
            if parent is not None and len(parent.children) >= 2:
                if (
                    parent.kind == NodeKind.MEMBER
                    and not parent.attrs.get("computed")
                    and node is parent.children[1]
                ):
                    continue
                if parent.kind == NodeKind.PROPERTY and node is parent.children[0]:
                    continue
        elif node.kind not in (NodeKind.DECLARATOR, NodeKind.PARAM) and (
            node.kind not in FUNCTION_KINDS
        ):
            continue
        name = node.attrs.get("name")
        if name and queue_re.search(str(name)):
            return True
    return False


def _returned_closure_depth(node: AstNode, ancestors: tuple[AstNode, ...]) -> int:
    """How many functions on the chain down to ``node`` (itself included) sit
    in return position, handing the event data back through closures."""
    depth = 0
    chain = (*ancestors, node)
    for prev, current in zip(chain, chain[1:]):
        if current.kind in FUNCTION_KINDS and prev.kind == NodeKind.RETURN:
            depth += 1
    return depth


def detect_event_queue(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """P2: input and event sources consumed on the spot instead of flowing
    through a queue.

    A function is exempt when a queue-like identifier is referenced or
    declared in it or in an enclosing function, matched against the
    configurable queue pattern.
    """
    queue_re = re.compile(config.queue_name_pattern, re.IGNORECASE)
    findings: list[Finding] = []
    for view in views:
        root = view.unit.ast
        if root is None:
            continue
        for node, ancestors in walk(root):
            if node.kind not in FUNCTION_KINDS:
                continue
            if not _handles_input_directly(node):
                continue
            outermost = node
            for a in ancestors:
                if a.kind in FUNCTION_KINDS:
                    outermost = a
                    break
            if _references_queue_binding(outermost, queue_re):
                continue
            name = function_name(node, ancestors[-1] if ancestors else None) or "(anonymous)"
            chained = (
                _returned_closure_depth(node, ancestors) >= 2
                or _has_nested_callback_chain(node)
            )
            subkind = "async-chain" if chained else "no-queue"
            findings.append(
                _finding(
                    PatternKind.P2,
                    view,
                    node.span,
                    f"'{name}' consumes input with no event queue in reach",
                    subkind=subkind,
                )
            )
    return findings


# --- P3 data locality -----------------------------------------------------

_PRIMITIVE_LITERALS: Final = frozenset({"number", "string", "boolean", "null"})


def _is_primitive_value(node: AstNode) -> bool:
    if node.kind == NodeKind.LITERAL:
        return node.attrs.get("literal_kind") in _PRIMITIVE_LITERALS
    if node.kind == NodeKind.UNARY and node.attrs.get("op") in ("-", "+"):
        child = node.children[0]
        return child.kind == NodeKind.LITERAL and child.attrs.get("literal_kind") == "number"
    return False


def _flat_struct_props(node: AstNode) -> list[str] | None:
    """Property names when every property is a plain scalar, else None."""
    props: list[str] = []
    for prop in node.children:
        if prop.kind != NodeKind.PROPERTY:
            return None
        if prop.attrs.get("computed") or prop.attrs.get("prop_kind") != "init":
            return None
        if not _is_primitive_value(prop.children[-1]):
            return None
        key = prop.attrs.get("key")
        if key is None:
            return None
        props.append(str(key))
    return props


def detect_data_locality(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """P3: data laid out against the access pattern.

    Reports struct-like objects whose scalar fields are read across several
    functions or inside loops (candidates for array-of-fields layout), and
    families of declarators that all share one field layout (candidates for
    a single array).
    """
    findings: list[Finding] = []

    structs: dict[str, list[tuple[UnitView, AstNode, int]]] = {}
    for view in views:
        root = view.unit.ast
        if root is None:
            continue
        for node, ancestors in walk(root):
            if node.kind != NodeKind.OBJECT_LITERAL:
                continue
            name = owner_name(node, ancestors[-1] if ancestors else None)
            if name is None or "." in name:
                continue
            props = _flat_struct_props(node)
            if props is None or len(props) < HOT_STRUCT_MIN_PROPS:
                continue
            structs.setdefault(name, []).append((view, node, len(props)))

    if structs:
        contexts: dict[str, set[tuple[int, int]]] = {name: set() for name in structs}
        looped: set[str] = set()
        for index, view in enumerate(views):
            root = view.unit.ast
            if root is None:
                continue
            for node, ancestors in walk(root):
                if node.kind != NodeKind.MEMBER or node.attrs.get("computed"):
                    continue
                base = node.children[0]
                if base.kind != NodeKind.IDENTIFIER:
                    continue
                name = base.attrs.get("name")
                if name not in structs:
                    continue
                parent = ancestors[-1] if ancestors else None
                if (
                    parent is not None
                    and parent.kind == NodeKind.ASSIGNMENT
                    and parent.attrs.get("op") == "="
                    and node is parent.children[0]
                ):
                    continue  # a pure write is not a read of the struct
                fn = _nearest_function(ancestors)
                contexts[name].add((index, id(fn)) if fn is not None else (index, 0))
                if _loop_inside_function(ancestors):
                    looped.add(name)
        for name, sites in sorted(structs.items()):
            if len(contexts[name]) < 2 and name not in looped:
                continue
            for view, node, width in sites:
                findings.append(
                    _finding(
                        PatternKind.P3,
                        view,
                        node.span,
                        f"'{name}' groups {width} scalar fields read across the game",
                        metric=width,
                        subkind="hot-struct",
                    )
                )

    for view in views:
        root = view.unit.ast
        if root is None:
            continue
        families: dict[tuple[int, frozenset[str]], list[AstNode]] = {}
        for node, ancestors in walk(root):
            if node.kind != NodeKind.DECLARATOR or not node.attrs.get("has_init"):
                continue
            init = node.children[0]
            if init.kind != NodeKind.OBJECT_LITERAL:
                continue
            props = _flat_struct_props(init)
            if props is None:
                props = [
                    str(p.attrs["key"])
                    for p in init.children
                    if p.kind == NodeKind.PROPERTY and p.attrs.get("key") is not None
                ]
            if not props:
                continue
            fn = _nearest_function(ancestors)
            key = (id(fn) if fn is not None else 0, frozenset(props))
            families.setdefault(key, []).append(node)
        for (_fn_id, layout), members in families.items():
            if len(members) < PARALLEL_MIN:
                continue
            first = min(members, key=lambda d: d.span.sort_key())
            fields = ", ".join(sorted(layout))
            findings.append(
                _finding(
                    PatternKind.P3,
                    view,
                    first.span,
                    f"{len(members)} objects declared with identical fields ({fields})",
                    metric=len(members),
                    subkind="parallel-objects",
                )
            )
    return findings


# --- P4 object pool -------------------------------------------------------


def _pool_exempt(ancestors: tuple[AstNode, ...]) -> bool:
    return any(_POOL_NAME_RE.search(name) for name in _enclosing_function_names(ancestors))


def detect_object_pool(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """P4: allocation where a pool should be.

    Three rules, most specific first, one report per construct: allocation
    inside a loop; a local container rebuilt and grown on every call; any
    allocation inside a hot-path function. Code inside a pool-named function
    is exempt, since that is where allocation belongs.
    """
    findings: list[Finding] = []
    for view in views:
        root = view.unit.ast
        if root is None:
            continue

        loop_allocs: set[int] = set()
        transient_inits: set[int] = set()
        declarators: dict[tuple[int, str], tuple[AstNode, tuple[AstNode, ...]]] = {}
        grown: set[tuple[int, str]] = set()

        for node, ancestors in walk(root):
            if node.kind == NodeKind.DECLARATOR and node.attrs.get("has_init"):
                init = node.children[0] if node.children else None
                if init is not None and init.kind in _ALLOC_KINDS:
                    fn = _nearest_function(ancestors)
                    name = node.attrs.get("name")
                    if name and not _loop_inside_function(ancestors):
                        declarators[(id(fn) if fn else 0, str(name))] = (node, ancestors)
            elif node.kind == NodeKind.CALL:
                callee = node.children[0]
                if (
                    callee.kind == NodeKind.MEMBER
                    and callee.attrs.get("property") == "push"
                    and callee.children[0].kind == NodeKind.IDENTIFIER
                    and _loop_inside_function(ancestors)
                ):
                    fn = _nearest_function(ancestors)
                    grown.add((id(fn) if fn else 0, str(callee.children[0].attrs["name"])))
            elif node.kind == NodeKind.ASSIGNMENT and len(node.children) == 2:
                target = node.children[0]
                if (
                    target.kind == NodeKind.MEMBER
                    and target.attrs.get("computed")
                    and target.children[0].kind == NodeKind.IDENTIFIER
                    and _loop_inside_function(ancestors)
                ):
                    fn = _nearest_function(ancestors)
                    grown.add((id(fn) if fn else 0, str(target.children[0].attrs["name"])))

        for node, ancestors in walk(root):
            if node.kind not in _ALLOC_KINDS:
                continue
            if not _loop_inside_function(ancestors):
                continue
            if _pool_exempt(ancestors):
                continue
            loop_allocs.add(id(node))
            label = _ALLOC_LABELS[node.kind]
            findings.append(
                _finding(
                    PatternKind.P4,
                    view,
                    node.span,
                    f"{label} allocated on every loop iteration",
                    subkind="alloc-in-loop",
                )
            )

        for key, (decl, decl_ancestry) in declarators.items():
            if key not in grown:
                continue
            if _pool_exempt(decl_ancestry):
                continue
            transient_inits.add(id(decl.children[0]))
            name = decl.attrs.get("name")
            findings.append(
                _finding(
                    PatternKind.P4,
                    view,
                    decl.span,
                    f"'{name}' is rebuilt and filled on every call, then thrown away",
                    subkind="transient-container",
                )
            )

        for node, ancestors in walk(root):
            if node.kind not in _ALLOC_KINDS:
                continue
            if id(node) in loop_allocs or id(node) in transient_inits:
                continue
            names = _enclosing_function_names(ancestors)
            if not any(config.is_hot_path_name(name) for name in names):
                continue
            if _pool_exempt(ancestors):
                continue
            label = _ALLOC_LABELS[node.kind]
            findings.append(
                _finding(
                    PatternKind.P4,
                    view,
                    node.span,
                    f"{label} allocated inside a hot-path function",
                    subkind="hot-function-alloc",
                )
            )
    return findings


# --- registry -------------------------------------------------------------

PATTERN_DETECTORS: Final[dict[PatternKind, Detector]] = {
    PatternKind.P1: Detector(PatternKind.P1, "game", detect_component),
    PatternKind.P2: Detector(PatternKind.P2, "game", detect_event_queue),
    PatternKind.P3: Detector(PatternKind.P3, "game", detect_data_locality),
    PatternKind.P4: Detector(PatternKind.P4, "game", detect_object_pool),
}
