"""Scope and binding analysis for one source unit.

Builds the lexical scope tree (program, function, block, catch, loop,
switch), hoists declarations to the right scope, resolves every identifier
reference, and derives the unit's globals: top-level var and function
declarations, assignments to names that resolve nowhere, and property
creations on the global object (window / globalThis). Reads of undeclared
names also surface as globals with reference sites only and no definition
site, so callers can tell a defined global from an assumed external.

The same walk collects inheritance edges (class extends, the prototype
idioms) and per-constructor member tables, which the bequest analysis joins
across a whole game.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gamesmell.frontend.jsast import (
    AstNode,
    FUNCTION_KINDS,
    NodeKind as K,
    SourceUnit,
    Span,
)

_VAR_TARGET_KINDS = ("program", "function")


@dataclass
class Declaration:
    name: str
    kind: str  # var | let | const | function | class | param | catch | function-self
    sites: list[Span] = field(default_factory=list)
    nodes: list[AstNode] = field(default_factory=list)


@dataclass
class Scope:
    kind: str  # program | function | block | catch | loop | switch
    node: AstNode
    parent: "Scope | None"
    declarations: dict[str, Declaration] = field(default_factory=dict)
    children: list["Scope"] = field(default_factory=list)

    def declare(self, name: str, kind: str, span: Span, node: AstNode) -> Declaration:
        decl = self.declarations.get(name)
        if decl is None:
            decl = Declaration(name, kind)
            self.declarations[name] = decl
        decl.sites.append(span)
        decl.nodes.append(node)
        return decl

    def lookup(self, name: str) -> "tuple[Scope, Declaration] | None":
        scope: Scope | None = self
        while scope is not None:
            decl = scope.declarations.get(name)
            if decl is not None:
                return scope, decl
            scope = scope.parent
        return None

    def enclosing_function(self) -> "Scope":
        scope: Scope = self
        while scope.kind not in _VAR_TARGET_KINDS:
            assert scope.parent is not None
            scope = scope.parent
        return scope


@dataclass
class Reference:
    name: str
    span: Span
    access: str  # read | write | readwrite
    scope: Scope
    declaration: Declaration | None = None


@dataclass
class GlobalVar:
    name: str
    definition_sites: list[Span] = field(default_factory=list)
    reference_sites: list[Reference] = field(default_factory=list)

    @property
    def defined(self) -> bool:
        return bool(self.definition_sites)

    def first_definition(self) -> Span:
        return min(self.definition_sites, key=Span.sort_key)


@dataclass
class InheritanceEdge:
    child: str
    parent: str
    span: Span
    child_members: set[str] = field(default_factory=set)
    used_members: set[str] = field(default_factory=set)
    inherited: set[str] | None = None
    overridden: set[str] | None = None

    @property
    def resolved(self) -> bool:
        return self.inherited is not None


@dataclass
class ScopeModel:
    unit: SourceUnit
    root: Scope
    references: list[Reference]
    globals: dict[str, GlobalVar]
    edges: list[InheritanceEdge]
    member_table: dict[str, set[str]]

    def defined_globals(self) -> dict[str, GlobalVar]:
        return {name: g for name, g in self.globals.items() if g.defined}


def build_scopes(unit: SourceUnit) -> ScopeModel:
    assert unit.ast is not None, "scope analysis requires a parsed unit"
    builder = _Builder()
    builder.declare_pass(unit.ast)
    for name, decl in builder.root.declarations.items():
        if decl.kind in ("var", "function"):
            g = builder.globals.setdefault(name, GlobalVar(name))
            g.definition_sites.extend(decl.sites)
    builder.resolve_pass(unit.ast)
    collector = _InheritanceCollector(unit.ast)
    edges, members = collector.collect()
    resolve_edges(edges, members)
    return ScopeModel(
        unit=unit,
        root=builder.root,
        references=builder.references,
        globals=builder.globals,
        edges=edges,
        member_table=members,
    )


def resolve_edges(edges: list[InheritanceEdge], member_table: dict[str, set[str]]) -> None:
    """Fill inherited/overridden for edges whose parent is locally known."""
    for edge in edges:
        parent_members = member_table.get(edge.parent)
        if parent_members is None:
            edge.inherited = None
            edge.overridden = None
        else:
            edge.inherited = set(parent_members)
            edge.overridden = edge.child_members & edge.inherited


# --- scope construction ---


class _Builder:
    def __init__(self) -> None:
        self.root: Scope = None  # type: ignore[assignment]
        self.references: list[Reference] = []
        self.globals: dict[str, GlobalVar] = {}

    # Pass 1: create scopes and declarations. The scope tree is rebuilt
    # identically in pass 2 by walking in the same order, so scopes are
    # stored on the nodes via id() maps.

    def declare_pass(self, program: AstNode) -> None:
        self.root = Scope("program", program, None)
        self._scope_of: dict[int, Scope] = {id(program): self.root}
        self._declare_stmts(program.children, self.root)

    def _child_scope(self, kind: str, node: AstNode, parent: Scope) -> Scope:
        scope = Scope(kind, node, parent)
        parent.children.append(scope)
        self._scope_of[id(node)] = scope
        return scope

    def _declare_stmts(self, stmts: list[AstNode], scope: Scope) -> None:
        for stmt in stmts:
            self._declare_node(stmt, scope)

    def _declare_node(self, node: AstNode, scope: Scope) -> None:
        kind = node.kind
        if kind in FUNCTION_KINDS:
            self._declare_function(node, scope)
            return
        if kind == K.VAR_DECL:
            decl_kind = str(node.attrs["decl_kind"])
            target = scope.enclosing_function() if decl_kind == "var" else scope
            for declarator in node.children:
                target.declare(str(declarator.attrs["name"]), decl_kind,
                               declarator.span, declarator)
                for child in declarator.children:
                    self._declare_node(child, scope)
            return
        if kind == K.CLASS_DECL:
            name = node.attrs.get("name")
            if name and not node.attrs.get("is_expression"):
                scope.declare(str(name), "class", node.span, node)
            for child in node.children:
                self._declare_node(child, scope)
            return
        if kind == K.METHOD_DEF:
            if node.attrs.get("computed"):
                self._declare_node(node.children[0], scope)
            self._declare_function(node.children[1], scope)
            return
        if kind == K.BLOCK:
            inner = self._child_scope("block", node, scope)
            self._declare_stmts(node.children, inner)
            return
        if kind == K.CATCH_CLAUSE:
            inner = self._child_scope("catch", node, scope)
            inner.declare(str(node.attrs["param"]), "catch", node.span, node)
            # the handler body shares the catch scope
            self._declare_stmts(node.children[0].children, inner)
            self._scope_of[id(node.children[0])] = inner
            return
        if kind == K.LOOP:
            inner = self._child_scope("loop", node, scope)
            for child in node.children:
                self._declare_node(child, inner)
            return
        if kind == K.SWITCH_STMT:
            self._declare_node(node.children[0], scope)
            inner = self._child_scope("switch", node, scope)
            for case in node.children[1:]:
                for child in case.children:
                    self._declare_node(child, inner)
            return
        for child in node.children:
            self._declare_node(child, scope)

    def _declare_function(self, node: AstNode, scope: Scope) -> None:
        name = node.attrs.get("name")
        if node.kind == K.FUNCTION_DECL and name:
            scope.enclosing_function().declare(str(name), "function", node.span, node)
        fscope = self._child_scope("function", node, scope)
        if node.kind == K.FUNCTION_EXPR and name:
            fscope.declare(str(name), "function-self", node.span, node)
        for param in node.children[:-1]:
            fscope.declare(str(param.attrs["name"]), "param", param.span, param)
            for default in param.children:
                self._declare_node(default, fscope)
        body = node.children[-1]
        if body.kind == K.BLOCK:
            # a function body block is the function scope itself
            self._scope_of[id(body)] = fscope
            self._declare_stmts(body.children, fscope)
        else:
            self._declare_node(body, fscope)

    # Pass 2: resolve references using the scopes recorded in pass 1.

    def resolve_pass(self, program: AstNode) -> None:
        self._resolve_node(program, self.root)

    def _scope_for(self, node: AstNode, current: Scope) -> Scope:
        return self._scope_of.get(id(node), current)

    def _resolve_node(self, node: AstNode, scope: Scope) -> None:
        kind = node.kind

        if kind == K.IDENTIFIER:
            self._reference(str(node.attrs["name"]), node.span, "read", scope)
            return
        if kind == K.MEMBER:
            self._resolve_node(node.children[0], scope)
            if node.attrs.get("computed"):
                self._resolve_node(node.children[1], scope)
            else:
                self._note_global_object_member(node, "read", scope)
            return
        if kind == K.ASSIGNMENT:
            target = node.children[0]
            if target.kind == K.IDENTIFIER:
                access = "write" if node.attrs.get("op") == "=" else "readwrite"
                self._reference(str(target.attrs["name"]), target.span, access,
                                scope, is_definition=True, site=node.span)
            else:
                self._resolve_node(target, scope)
                if target.kind == K.MEMBER and not target.attrs.get("computed"):
                    self._note_global_object_member(target, "write", scope, node.span)
            self._resolve_node(node.children[1], scope)
            return
        if kind == K.UPDATE:
            target = node.children[0]
            if target.kind == K.IDENTIFIER:
                self._reference(str(target.attrs["name"]), target.span, "readwrite",
                                scope, is_definition=True, site=node.span)
            else:
                self._resolve_node(target, scope)
            return
        if kind == K.PROPERTY:
            if node.attrs.get("computed"):
                self._resolve_node(node.children[0], scope)
            self._resolve_node(node.children[1], scope)
            return
        if kind == K.METHOD_DEF:
            if node.attrs.get("computed"):
                self._resolve_node(node.children[0], scope)
            self._resolve_node(node.children[1], scope)
            return
        if kind == K.DECLARATOR:
            for child in node.children:
                self._resolve_node(child, scope)
            return
        if kind in FUNCTION_KINDS:
            fscope = self._scope_for(node, scope)
            for param in node.children[:-1]:
                for default in param.children:
                    self._resolve_node(default, fscope)
            body = node.children[-1]
            if body.kind == K.BLOCK:
                for stmt in body.children:
                    self._resolve_node(stmt, self._scope_for(body, fscope))
            else:
                self._resolve_node(body, fscope)
            return
        if kind == K.LOOP and node.attrs.get("loop_kind") in ("for-in", "for-of"):
            inner = self._scope_for(node, scope)
            left, right, body = node.children
            if left.kind == K.IDENTIFIER:
                self._reference(str(left.attrs["name"]), left.span, "write",
                                inner, is_definition=True, site=left.span)
            else:
                self._resolve_node(left, inner)
            self._resolve_node(right, inner)
            self._resolve_node(body, inner)
            return

        inner = self._scope_for(node, scope)
        for child in node.children:
            self._resolve_node(child, inner)

    def _reference(self, name: str, span: Span, access: str, scope: Scope,
                   is_definition: bool = False, site: Span | None = None) -> None:
        found = scope.lookup(name)
        ref = Reference(name, span, access, scope,
                        found[1] if found else None)
        self.references.append(ref)
        if found is None:
            g = self.globals.setdefault(name, GlobalVar(name))
            g.reference_sites.append(ref)
            if is_definition:
                g.definition_sites.append(site or span)
        elif found[0].kind == "program" and found[1].kind in ("var", "function"):
            g = self.globals.setdefault(name, GlobalVar(name))
            g.reference_sites.append(ref)

    def _note_global_object_member(self, member: AstNode, access: str,
                                   scope: Scope, site: Span | None = None) -> None:
        obj = member.children[0]
        if obj.kind != K.IDENTIFIER:
            return
        base = str(obj.attrs["name"])
        if base not in ("window", "globalThis"):
            return
        if scope.lookup(base) is not None:
            return  # a local shadows the global object
        prop = member.attrs.get("property")
        if not prop:
            return
        g = self.globals.setdefault(str(prop), GlobalVar(str(prop)))
        ref = Reference(str(prop), member.span, access, scope, None)
        g.reference_sites.append(ref)
        if access == "write":
            g.definition_sites.append(site or member.span)


# --- inheritance edges and member tables ---


class _InheritanceCollector:
    def __init__(self, program: AstNode) -> None:
        self.program = program
        self.edges: list[InheritanceEdge] = []
        self.members: dict[str, set[str]] = {}
        self.used: dict[str, set[str]] = {}
        self._proto_method_fns: dict[str, list[AstNode]] = {}

    def collect(self) -> tuple[list[InheritanceEdge], dict[str, set[str]]]:
        self._walk(self.program)
        for edge in self.edges:
            edge.child_members |= self.members.get(edge.child, set())
            edge.used_members |= self.used.get(edge.child, set())
        return self.edges, self.members

    def _walk(self, node: AstNode) -> None:
        kind = node.kind
        if kind == K.CLASS_DECL:
            self._class_decl(node)
        elif kind == K.ASSIGNMENT:
            self._assignment(node)
        elif kind == K.DECLARATOR:
            self._declarator(node)
        elif kind == K.FUNCTION_DECL and node.attrs.get("name"):
            self._constructor_function(str(node.attrs["name"]), node)
        for child in node.children:
            self._walk(child)

    def _class_decl(self, node: AstNode) -> None:
        name = node.attrs.get("name")
        methods = [c for c in node.children if c.kind == K.METHOD_DEF]
        member_names: set[str] = set()
        used: set[str] = set()
        for method in methods:
            key = method.attrs.get("key")
            if method.attrs.get("method_kind") != "constructor" and key:
                member_names.add(str(key))
            fn = method.children[1]
            used |= _this_member_reads(fn)
            if method.attrs.get("method_kind") == "constructor":
                member_names |= _this_member_writes(fn)
        if name:
            self.members.setdefault(str(name), set()).update(member_names)
            self.used.setdefault(str(name), set()).update(used)
        if node.attrs.get("has_super"):
            parent = _dotted_name(node.children[0])
            if name and parent:
                self.edges.append(InheritanceEdge(str(name), parent, node.span))

    def _assignment(self, node: AstNode) -> None:
        target, value = node.children
        if target.kind != K.MEMBER or target.attrs.get("computed"):
            return
        prop = str(target.attrs.get("property") or "")
        obj = target.children[0]
        # X.prototype = <expr>
        if prop == "prototype" and obj.kind == K.IDENTIFIER:
            owner = str(obj.attrs["name"])
            parent = _prototype_parent(value)
            if parent:
                self.edges.append(InheritanceEdge(owner, parent, node.span))
            elif value.kind == K.OBJECT_LITERAL:
                for p in value.children:
                    key = p.attrs.get("key")
                    if key:
                        self.members.setdefault(owner, set()).add(str(key))
                    if p.children[1].kind in FUNCTION_KINDS:
                        self._note_method_body(owner, p.children[1])
            return
        # X.prototype.m = <expr>
        if (obj.kind == K.MEMBER and not obj.attrs.get("computed")
                and obj.attrs.get("property") == "prototype"
                and obj.children[0].kind == K.IDENTIFIER):
            owner = str(obj.children[0].attrs["name"])
            self.members.setdefault(owner, set()).add(prop)
            if value.kind in FUNCTION_KINDS:
                self._note_method_body(owner, value)
            return
        # X = function () {...} keeps constructor-style member collection
        if target.kind == K.IDENTIFIER and value.kind in FUNCTION_KINDS:
            self._constructor_function(str(target.attrs["name"]), value)

    def _declarator(self, node: AstNode) -> None:
        if not node.children:
            return
        init = node.children[0]
        name = str(node.attrs["name"])
        if init.kind in FUNCTION_KINDS:
            self._constructor_function(name, init)
            return
        if init.kind == K.OBJECT_LITERAL:
            self._object_members(name, init)
            return
        parent = _object_create_parent(init)
        if parent:
            self.edges.append(InheritanceEdge(name, parent, node.span))

    def _object_members(self, owner: str, literal: AstNode) -> None:
        for prop in literal.children:
            if prop.kind != K.PROPERTY:
                continue
            key = prop.attrs.get("key")
            if key:
                self.members.setdefault(owner, set()).add(str(key))
            if prop.children and prop.children[-1].kind in FUNCTION_KINDS:
                self._note_method_body(owner, prop.children[-1])

    def _constructor_function(self, name: str, fn: AstNode) -> None:
        self.members.setdefault(name, set()).update(_this_member_writes(fn))
        self.used.setdefault(name, set()).update(_this_member_reads(fn))

    def _note_method_body(self, owner: str, fn: AstNode) -> None:
        self.used.setdefault(owner, set()).update(_this_member_reads(fn))
        self.members.setdefault(owner, set()).update(_this_member_writes(fn))


def _dotted_name(node: AstNode) -> str | None:
    if node.kind == K.IDENTIFIER:
        return str(node.attrs["name"])
    if node.kind == K.MEMBER and not node.attrs.get("computed"):
        base = _dotted_name(node.children[0])
        if base:
            return f"{base}.{node.attrs['property']}"
    return None


def _prototype_parent(value: AstNode) -> str | None:
    """Parent name for X.prototype = Object.create(Y) / new Y() / Y.prototype."""
    if value.kind == K.CALL:
        callee = value.children[0]
        if (_dotted_name(callee) == "Object.create") and len(value.children) > 1:
            return _strip_prototype(value.children[1])
    if value.kind == K.NEW:
        return _dotted_name(value.children[0])
    if value.kind == K.MEMBER and value.attrs.get("property") == "prototype":
        return _dotted_name(value.children[0])
    return None


def _object_create_parent(init: AstNode) -> str | None:
    if init.kind == K.CALL:
        callee = init.children[0]
        if _dotted_name(callee) == "Object.create" and len(init.children) > 1:
            return _strip_prototype(init.children[1])
    return None


def _strip_prototype(node: AstNode) -> str | None:
    if node.kind == K.MEMBER and node.attrs.get("property") == "prototype":
        return _dotted_name(node.children[0])
    return _dotted_name(node)


def _walk_this_scope(fn: AstNode):
    """Nodes in fn's body that share fn's `this`: skips nested non-arrow
    functions, includes arrow bodies."""
    stack = list(fn.children)
    while stack:
        node = stack.pop()
        if node.kind in (K.FUNCTION_DECL, K.FUNCTION_EXPR):
            continue
        yield node
        stack.extend(node.children)


def _this_member_writes(fn: AstNode) -> set[str]:
    names: set[str] = set()
    for node in _walk_this_scope(fn):
        if node.kind == K.ASSIGNMENT:
            target = node.children[0]
            if (target.kind == K.MEMBER and not target.attrs.get("computed")
                    and target.children[0].kind == K.THIS):
                names.add(str(target.attrs["property"]))
    return names


def _this_member_reads(fn: AstNode) -> set[str]:
    names: set[str] = set()
    for node in _walk_this_scope(fn):
        if (node.kind == K.MEMBER and not node.attrs.get("computed")
                and node.children[0].kind in (K.THIS, K.SUPER)):
            names.add(str(node.attrs["property"]))
    return names
