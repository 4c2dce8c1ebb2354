"""Detectors for the thirteen code smells.

Every detector is registered in ``SMELL_DETECTORS`` together with its scope:

* ``unit`` detectors see one source unit at a time,
* ``game`` detectors see every unit of a game at once, including scripts
  extracted from HTML pages.

Game scope exists because some rules only make sense over the merged view:
globals are a per-game budget, inheritance edges routinely cross files, and
a function is only dead when no file (and no inline handler in the markup)
ever calls it.

Detectors never mutate the AST and never raise on partial input; a unit that
failed to parse simply contributes nothing.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Final

from .config import AnalysisConfig
from .findings import Finding, SmellKind, evidence_from
from .frontend.chains import extract_chains
from .frontend.jsast import (
    FUNCTION_KINDS,
    AstNode,
    EmbeddedKind,
    NodeKind,
    SourceKind,
    SourceUnit,
    Span,
    iter_nodes,
    walk,
)
from .frontend.scopes import Declaration, Reference, Scope, ScopeModel, build_scopes, resolve_edges

__all__ = [
    "BEQUEST_MIN_INHERITED",
    "Detector",
    "SMELL_DETECTORS",
    "UnitView",
    "function_name",
    "owner_name",
    "own_function_loc",
]

# An edge with fewer inherited members than this cannot refuse its bequest;
# tiny hierarchies are noise, not design problems.
BEQUEST_MIN_INHERITED: Final = 3


# --- shared analysis view -------------------------------------------------


@dataclass
class UnitView:
    """A source unit paired with its scope model, built once per analysis."""

    unit: SourceUnit
    model: ScopeModel

    @classmethod
    def from_unit(cls, unit: SourceUnit) -> "UnitView":
        if unit.ast is None:
            # A unit that failed to parse still flows through analysis (its
            # diagnostics surface in the report); it just has nothing in scope.
            empty = AstNode(NodeKind.PROGRAM, Span(0, 0, 1, 0, 1, 0), [], {})
            root = Scope(kind="program", node=empty, parent=None)
            return cls(unit, ScopeModel(unit, root, [], {}, [], {}))
        return cls(unit, build_scopes(unit))


UnitDetector = Callable[[UnitView, AnalysisConfig], list[Finding]]
GameDetector = Callable[[list[UnitView], AnalysisConfig], list[Finding]]


@dataclass(frozen=True)
class Detector:
    kind: object  # SmellKind | PatternKind
    scope: str  # "unit" | "game"
    run: Callable[..., list[Finding]]


# --- helpers shared with the pattern detectors ----------------------------


def dotted_name(node: AstNode) -> str | None:
    """Render ``a.b.c`` / ``this.x`` targets back to a readable name."""
    if node.kind == NodeKind.IDENTIFIER:
        return node.attrs.get("name")
    if node.kind == NodeKind.THIS:
        return "this"
    if node.kind == NodeKind.MEMBER and not node.attrs.get("computed"):
        base = dotted_name(node.children[0])
        prop = node.attrs.get("property")
        if base and prop:
            return f"{base}.{prop}"
    return None


def function_name(node: AstNode, parent: AstNode | None) -> str | None:
    """Best available name for a function: its own, or the slot it fills."""
    name = node.attrs.get("name")
    if name:
        return str(name)
    if parent is None:
        return None
    if parent.kind in (NodeKind.METHOD_DEF, NodeKind.PROPERTY):
        key = parent.attrs.get("key")
        return str(key) if key is not None else None
    if parent.kind == NodeKind.DECLARATOR:
        return parent.attrs.get("name")
    if parent.kind == NodeKind.ASSIGNMENT and len(parent.children) == 2 and node is parent.children[1]:
        return dotted_name(parent.children[0])
    return None


def owner_name(node: AstNode, parent: AstNode | None) -> str | None:
    """Name an object/class literal gets from the slot it is stored in.

    Only declarator initialisers and assignment right-hand sides count;
    literals passed straight into a call are anonymous configuration data.
    """
    own = node.attrs.get("name")
    if own:
        return str(own)
    if parent is None:
        return None
    if parent.kind == NodeKind.DECLARATOR and parent.children and node is parent.children[0]:
        return parent.attrs.get("name")
    if parent.kind == NodeKind.ASSIGNMENT and len(parent.children) == 2 and node is parent.children[1]:
        return dotted_name(parent.children[0])
    return None


def direct_nested_functions(fn: AstNode) -> list[AstNode]:
    """Functions nested immediately inside ``fn`` (not inside deeper ones)."""
    out: list[AstNode] = []
    stack = list(fn.children)
    while stack:
        node = stack.pop()
        if node.kind in FUNCTION_KINDS:
            out.append(node)
            continue
        stack.extend(node.children)
    return out


def own_body_nodes(fn: AstNode, *, through_arrows: bool = False) -> Iterable[AstNode]:
    """Nodes belonging to ``fn`` itself, with nested functions cut out.

    With ``through_arrows`` the walk descends into arrow functions, which is
    the right boundary for anything keyed on ``this``.
    """
    stack = list(fn.children)
    while stack:
        node = stack.pop()
        if node.kind in FUNCTION_KINDS:
            if not (through_arrows and node.kind == NodeKind.ARROW_FUNCTION):
                continue
        yield node
        stack.extend(node.children)


def own_function_loc(fn: AstNode, unit: SourceUnit) -> int:
    """Lines of code in ``fn`` minus the lines of every nested function.

    A line shared between parent code and a nested function header counts
    toward the nested function, so totals never double-count.
    """
    if unit.loc_index is None:
        return 0
    lines = set(unit.loc_index.code_lines(fn.span.start, fn.span.end))
    for nested in direct_nested_functions(fn):
        lines -= unit.loc_index.code_lines(nested.span.start, nested.span.end)
    return len(lines)


def is_inline_callback(node: AstNode, parent: AstNode | None) -> bool:
    """A function literal passed directly as a call argument."""
    return (
        node.kind in (NodeKind.FUNCTION_EXPR, NodeKind.ARROW_FUNCTION)
        and parent is not None
        and parent.kind == NodeKind.CALL
        and len(parent.children) > 1
        and node is not parent.children[0]
    )


def contains_inline_callback(fn: AstNode) -> bool:
    stack: list[tuple[AstNode, AstNode]] = [(c, fn) for c in fn.children]
    while stack:
        node, parent = stack.pop()
        if is_inline_callback(node, parent):
            return True
        stack.extend((c, node) for c in node.children)
    return False


def _finding(
    kind: SmellKind,
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


# --- S1 deeply nested code ------------------------------------------------


def _reads_this_directly(fn: AstNode) -> bool:
    return any(n.kind == NodeKind.THIS for n in own_body_nodes(fn, through_arrows=True))


def _iter_scopes(root: Scope) -> Iterable[Scope]:
    stack = [root]
    while stack:
        scope = stack.pop()
        yield scope
        stack.extend(scope.children)


def detect_deep_nesting(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S1: closures stacked too deep, plus the bugs that ride along with them
    (shadowed outer names and ``this`` lost inside a nested function)."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings

    for node, ancestors in walk(root):
        if node.kind not in FUNCTION_KINDS:
            continue
        depth = 1 + sum(1 for a in ancestors if a.kind in FUNCTION_KINDS)
        if depth < config.closure_depth:
            continue
        if any(inner is not node and inner.kind in FUNCTION_KINDS for inner in iter_nodes(node)):
            continue  # anchor on the innermost function of the stack
        findings.append(
            _finding(
                SmellKind.S1,
                view,
                node.span,
                f"function nested {depth} levels deep",
                metric=depth,
                subkind="depth",
            )
        )

    for scope in _iter_scopes(view.model.root):
        if scope.parent is None:
            continue
        for name, decl in scope.declarations.items():
            if decl.kind == "function-self":
                continue
            outer = scope.parent.lookup(name)
            if outer is None:
                continue
            outer_scope, _outer_decl = outer
            if outer_scope.enclosing_function() is scope.enclosing_function():
                continue  # plain block scoping inside one function is fine
            site = min(decl.sites, key=Span.sort_key)
            findings.append(
                _finding(
                    SmellKind.S1,
                    view,
                    site,
                    f"'{name}' shadows a declaration from an enclosing function",
                    subkind="shadowing",
                )
            )

    for node, ancestors in walk(root):
        if node.kind not in (NodeKind.FUNCTION_DECL, NodeKind.FUNCTION_EXPR):
            continue
        if not any(a.kind in FUNCTION_KINDS for a in ancestors):
            continue
        parent = ancestors[-1]
        if parent.kind in (NodeKind.METHOD_DEF, NodeKind.PROPERTY):
            continue  # a method's `this` is the receiver, as intended
        if (
            parent.kind == NodeKind.ASSIGNMENT
            and len(parent.children) == 2
            and node is parent.children[1]
            and parent.children[0].kind == NodeKind.MEMBER
        ):
            continue  # assigned onto an object: called as a method
        if _reads_this_directly(node):
            name = function_name(node, parent) or "(anonymous)"
            findings.append(
                _finding(
                    SmellKind.S1,
                    view,
                    node.span,
                    f"nested function '{name}' uses 'this', which no longer points at the enclosing object",
                    subkind="this-confusion",
                )
            )
    return findings


# --- S2 mixed languages ---------------------------------------------------

_TAG_RE: Final = re.compile(r"</?[a-zA-Z][a-zA-Z0-9-]*(?:\s[^<>]*)?/?>")

# A stylesheet rule written out in a string: some selector text, then a braced
# block containing at least one `prop: value` declaration. The selector part
# excludes characters that would make the text JSON or code instead.
_CSS_RULE_RE: Final = re.compile(
    r"[^{}<>:;=]+\{[^{}]*[-a-zA-Z][-a-zA-Z0-9]*\s*:\s*[^;:{}<>]+;?[^{}]*\}"
)

_EMBEDDED_LABELS: Final = {
    EmbeddedKind.SCRIPT_TAG: "script block embedded in the page",
    EmbeddedKind.EVENT_ATTRIBUTE: "handler code embedded in an event attribute",
}


def _string_value(node: AstNode) -> str | None:
    if node.kind == NodeKind.LITERAL and node.attrs.get("literal_kind") == "string":
        value = node.attrs.get("value")
        return value if isinstance(value, str) else None
    if node.kind == NodeKind.TEMPLATE_LITERAL:
        cooked = node.attrs.get("cooked") or ()
        return "".join(part for part in cooked if part is not None)
    return None


def _is_style_target(node: AstNode) -> bool:
    if node.kind != NodeKind.MEMBER:
        return False
    if node.attrs.get("property") == "style":
        return True
    base = node.children[0]
    return base.kind == NodeKind.MEMBER and base.attrs.get("property") == "style"


def detect_language_mixing(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S2: JavaScript living in markup, or markup/styling living in strings."""
    findings: list[Finding] = []
    unit = view.unit

    if unit.kind is SourceKind.HTML:
        for emb in unit.embedded:
            label = _EMBEDDED_LABELS.get(emb.kind)
            if label is None:
                continue  # javascript: URLs are analysed but not counted here
            message = label if emb.attribute is None else f"{label} ({emb.attribute})"
            findings.append(_finding(SmellKind.S2, view, emb.span, message, subkind="js-in-html"))
        return findings

    root = unit.ast
    if root is None:
        return findings

    styled_values: set[int] = set()
    for node, _ancestors in walk(root):
        if node.kind != NodeKind.ASSIGNMENT or len(node.children) != 2:
            continue
        if _is_style_target(node.children[0]):
            target = dotted_name(node.children[0]) or "style property"
            findings.append(
                _finding(
                    SmellKind.S2,
                    view,
                    node.span,
                    f"styling written from script: {target}",
                    subkind="css-in-js",
                )
            )
            styled_values.add(id(node.children[1]))

    for node, _ancestors in walk(root):
        text = _string_value(node)
        if text is None:
            continue
        tags = len(_TAG_RE.findall(text))
        if tags >= config.html_string_min_tags:
            findings.append(
                _finding(
                    SmellKind.S2,
                    view,
                    node.span,
                    f"string builds markup ({tags} tags)",
                    metric=tags,
                    subkind="html-in-js",
                )
            )
            continue
        if id(node) in styled_values:
            continue  # already reported via the .style assignment
        rules = len(_CSS_RULE_RE.findall(text))
        if rules >= 1:
            findings.append(
                _finding(
                    SmellKind.S2,
                    view,
                    node.span,
                    f"string holds a stylesheet ({rules} rules)",
                    metric=rules,
                    subkind="css-in-js",
                )
            )
    return findings


# --- S3 empty catch -------------------------------------------------------


def detect_empty_catch(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S3: a catch block with no statements swallows the failure."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, _ancestors in walk(root):
        if node.kind != NodeKind.CATCH_CLAUSE:
            continue
        body = node.children[0]
        if body.children:
            continue
        param = node.attrs.get("param")
        findings.append(
            _finding(
                SmellKind.S3,
                view,
                node.span,
                f"empty catch block discards '{param}'",
                metric=0,
            )
        )
    return findings


# --- S4 excessive globals (game scope) ------------------------------------


def detect_excessive_globals(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """S4: the game's shared namespace is over budget.

    Only definition-bearing globals count; reads of browser builtins do not
    inflate the tally. When the budget is exceeded, every global is reported
    at its first definition site so the full inventory is visible.
    """
    sites: dict[str, list[tuple[UnitView, Span]]] = {}
    for view in views:
        for name in view.model.defined_globals():
            for span in view.model.globals[name].definition_sites:
                sites.setdefault(name, []).append((view, span))
    total = len(sites)
    if total <= config.globals_max:
        return []
    findings = []
    for name, places in sites.items():
        view, span = min(places, key=lambda vs: (vs[0].unit.path, vs[1].sort_key()))
        findings.append(
            _finding(
                SmellKind.S4,
                view,
                span,
                f"'{name}' is one of {total} globals (budget {config.globals_max})",
                metric=total,
            )
        )
    return findings


# --- S5 large object ------------------------------------------------------


def _member_count(node: AstNode) -> tuple[int, str]:
    if node.kind == NodeKind.OBJECT_LITERAL:
        return sum(1 for c in node.children if c.kind == NodeKind.PROPERTY), "object"
    return sum(1 for c in node.children if c.kind == NodeKind.METHOD_DEF), "class"


def detect_large_object(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S5: one object or class holding an outsized share of the program."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, ancestors in walk(root):
        if node.kind not in (NodeKind.OBJECT_LITERAL, NodeKind.CLASS_DECL):
            continue
        count, shape = _member_count(node)
        if count < config.large_object_props:
            continue
        name = owner_name(node, ancestors[-1] if ancestors else None)
        label = f"'{name}'" if name else f"anonymous {shape}"
        noun = "properties" if shape == "object" else "methods"
        findings.append(
            _finding(
                SmellKind.S5,
                view,
                node.span,
                f"{label} declares {count} {noun}",
                metric=count,
                subkind=shape,
            )
        )
    return findings


# --- S6 lazy object -------------------------------------------------------


def detect_lazy_object(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S6: a named object or class too small to justify its existence."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, ancestors in walk(root):
        if node.kind not in (NodeKind.OBJECT_LITERAL, NodeKind.CLASS_DECL):
            continue
        name = owner_name(node, ancestors[-1] if ancestors else None)
        if name is None:
            continue
        count, shape = _member_count(node)
        if count >= config.lazy_object_props:
            continue
        noun = "properties" if shape == "object" else "methods"
        findings.append(
            _finding(
                SmellKind.S6,
                view,
                node.span,
                f"'{name}' declares only {count} {noun}",
                metric=count,
                subkind="static-lazy",
            )
        )
    return findings


# --- S7 long message chain ------------------------------------------------


def detect_message_chain(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S7: expressions that reach through too many objects in one breath."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for chain in extract_chains(root):
        if chain.length < config.chain_min:
            continue
        findings.append(
            _finding(
                SmellKind.S7,
                view,
                chain.span,
                f"message chain of {chain.length} links",
                metric=chain.length,
            )
        )
    return findings


# --- S8 long method -------------------------------------------------------


def detect_long_method(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S8: a function body longer than the budget, nested functions excluded."""
    findings: list[Finding] = []
    unit = view.unit
    if unit.ast is None or unit.loc_index is None:
        return findings
    for node, ancestors in walk(unit.ast):
        if node.kind not in FUNCTION_KINDS:
            continue
        own = own_function_loc(node, unit)
        if own <= config.method_loc_max:
            continue
        name = function_name(node, ancestors[-1] if ancestors else None) or "(anonymous)"
        findings.append(
            _finding(
                SmellKind.S8,
                view,
                node.span,
                f"'{name}' runs {own} lines of code",
                metric=own,
            )
        )
    return findings


# --- S9 long parameter list -----------------------------------------------


def detect_long_parameter_list(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, ancestors in walk(root):
        if node.kind not in FUNCTION_KINDS:
            continue
        count = int(node.attrs.get("param_count", 0))
        if count <= config.params_max:
            continue
        name = function_name(node, ancestors[-1] if ancestors else None) or "(anonymous)"
        findings.append(
            _finding(
                SmellKind.S9,
                view,
                node.span,
                f"'{name}' takes {count} parameters",
                metric=count,
            )
        )
    return findings


# --- S10 callback hell ----------------------------------------------------


def detect_callback_hell(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    """S10: inline callbacks nested inside inline callbacks, anchored at the
    innermost one so each pyramid is reported once."""
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, ancestors in walk(root):
        parent = ancestors[-1] if ancestors else None
        if not is_inline_callback(node, parent):
            continue
        depth = 1
        for i, a in enumerate(ancestors):
            a_parent = ancestors[i - 1] if i > 0 else None
            if is_inline_callback(a, a_parent):
                depth += 1
        if depth < config.callback_depth:
            continue
        if contains_inline_callback(node):
            continue
        findings.append(
            _finding(
                SmellKind.S10,
                view,
                node.span,
                f"callbacks nested {depth} deep",
                metric=depth,
            )
        )
    return findings


# --- S11 refused bequest (game scope) -------------------------------------


def detect_refused_bequest(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """S11: a child type that inherits a wide interface and touches almost
    none of it. Member tables merge across units before edges resolve, since
    parent and child rarely share a file."""
    merged: dict[str, set[str]] = {}
    for view in views:
        for cls, members in view.model.member_table.items():
            merged.setdefault(cls, set()).update(members)

    pairs = [(view, edge) for view in views for edge in view.model.edges]
    resolve_edges([edge for _view, edge in pairs], merged)

    findings: list[Finding] = []
    for view, edge in pairs:
        if edge.inherited is None or len(edge.inherited) < BEQUEST_MIN_INHERITED:
            continue
        overridden = edge.overridden or set()
        used = overridden | (edge.used_members & edge.inherited)
        ratio = len(used) / len(edge.inherited)
        if ratio >= config.bequest_ratio:
            continue
        findings.append(
            _finding(
                SmellKind.S11,
                view,
                edge.span,
                f"'{edge.child}' inherits {len(edge.inherited)} members from "
                f"'{edge.parent}' but touches {len(used)}",
                metric=ratio,
            )
        )
    return findings


# --- S12 switch statement -------------------------------------------------


def detect_switch_statement(view: UnitView, config: AnalysisConfig) -> list[Finding]:
    findings: list[Finding] = []
    root = view.unit.ast
    if root is None:
        return findings
    for node, _ancestors in walk(root):
        if node.kind != NodeKind.SWITCH_STMT:
            continue
        cases = int(node.attrs.get("case_count", 0))
        if cases < config.switch_cases_min:
            continue
        findings.append(
            _finding(
                SmellKind.S12,
                view,
                node.span,
                f"switch over {cases} cases",
                metric=cases,
            )
        )
    return findings


# --- S13 dead code (game scope) -------------------------------------------

_TERMINATORS: Final = frozenset(
    {NodeKind.RETURN, NodeKind.THROW, NodeKind.BREAK, NodeKind.CONTINUE}
)

_IDENT_RE: Final = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


def _statement_list(node: AstNode) -> list[AstNode] | None:
    if node.kind in (NodeKind.PROGRAM, NodeKind.BLOCK):
        return node.children
    if node.kind == NodeKind.SWITCH_CASE:
        return node.children if node.attrs.get("is_default") else node.children[1:]
    return None


def _first_unreachable(stmts: list[AstNode]) -> AstNode | None:
    terminated = False
    for stmt in stmts:
        if not terminated:
            if stmt.kind in _TERMINATORS:
                terminated = True
            continue
        if stmt.kind == NodeKind.FUNCTION_DECL:
            continue  # hoisted above the terminator, still callable
        return stmt
    return None


def detect_dead_code(views: list[UnitView], config: AnalysisConfig) -> list[Finding]:
    """S13: statements that can never run, and top-level globals nothing uses.

    Any identifier that appears in script text embedded in the markup is
    assumed reachable from the page, so inline handlers keep their targets
    alive even when the handler itself failed to parse.
    """
    findings: list[Finding] = []

    for view in views:
        root = view.unit.ast
        if root is None:
            continue
        for node, _ancestors in walk(root):
            stmts = _statement_list(node)
            if not stmts:
                continue
            dead = _first_unreachable(stmts)
            if dead is None:
                continue
            findings.append(
                _finding(
                    SmellKind.S13,
                    view,
                    dead.span,
                    "statement can never execute",
                    subkind="unreachable",
                )
            )

    markup_names: set[str] = set()
    for view in views:
        for emb in view.unit.embedded:
            markup_names.update(_IDENT_RE.findall(emb.code))

    decls: dict[str, list[tuple[UnitView, Declaration]]] = {}
    for view in views:
        for name, decl in view.model.root.declarations.items():
            if decl.kind == "function-self":
                continue
            decls.setdefault(name, []).append((view, decl))

    uses: dict[str, list[tuple[UnitView, Reference]]] = {}
    for view in views:
        root_decls = view.model.root.declarations
        for ref in view.model.references:
            if ref.declaration is None or ref.declaration is root_decls.get(ref.name):
                uses.setdefault(ref.name, []).append((view, ref))
        for gvar in view.model.globals.values():
            # window.X accesses are tracked only on the globals table
            for ref in gvar.reference_sites:
                uses.setdefault(gvar.name, []).append((view, ref))

    for name, declared in sorted(decls.items()):
        if name in markup_names:
            continue
        own_spans = {
            id(view): [node.span for node in decl.nodes] for view, decl in declared
        }
        alive = False
        for use_view, ref in uses.get(name, ()):
            spans = own_spans.get(id(use_view))
            if spans is not None and any(s.contains(ref.span) for s in spans):
                continue  # a reference inside its own declaration is not a use
            alive = True
            break
        if alive:
            continue
        view, decl = min(
            declared,
            key=lambda vd: (vd[0].unit.path, min(s.sort_key() for s in vd[1].sites)),
        )
        site = min(decl.sites, key=Span.sort_key)
        findings.append(
            _finding(
                SmellKind.S13,
                view,
                site,
                f"global '{name}' is defined but never used",
                subkind="unused-global",
            )
        )
    return findings


# --- registry -------------------------------------------------------------

SMELL_DETECTORS: Final[dict[SmellKind, Detector]] = {
    SmellKind.S1: Detector(SmellKind.S1, "unit", detect_deep_nesting),
    SmellKind.S2: Detector(SmellKind.S2, "unit", detect_language_mixing),
    SmellKind.S3: Detector(SmellKind.S3, "unit", detect_empty_catch),
    SmellKind.S4: Detector(SmellKind.S4, "game", detect_excessive_globals),
    SmellKind.S5: Detector(SmellKind.S5, "unit", detect_large_object),
    SmellKind.S6: Detector(SmellKind.S6, "unit", detect_lazy_object),
    SmellKind.S7: Detector(SmellKind.S7, "unit", detect_message_chain),
    SmellKind.S8: Detector(SmellKind.S8, "unit", detect_long_method),
    SmellKind.S9: Detector(SmellKind.S9, "unit", detect_long_parameter_list),
    SmellKind.S10: Detector(SmellKind.S10, "unit", detect_callback_hell),
    SmellKind.S11: Detector(SmellKind.S11, "game", detect_refused_bequest),
    SmellKind.S12: Detector(SmellKind.S12, "unit", detect_switch_statement),
    SmellKind.S13: Detector(SmellKind.S13, "game", detect_dead_code),
}
