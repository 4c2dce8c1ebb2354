"""Normalized syntax tree shared by every analysis pass.

Every construct is an AstNode with a kind tag, a source span, an attribute
dict, and an ordered child list. Child layout is fixed per kind:

    Program        statements
    FunctionDecl   params..., body            name, param_count
    FunctionExpr   params..., body            name (may be None), param_count
    ArrowFunction  params..., body            param_count, expression_body
    Param          default?                   name, rest
    VarDecl        declarators...             decl_kind: var | let | const
    Declarator     init?                      name, has_init
    ObjectLiteral  properties...
    Property       key, value                 key (None if computed), computed,
                                              prop_kind: init | get | set | method,
                                              shorthand
    ArrayLiteral   elements (Hole for elisions)
    Spread         argument
    Call           callee, args...            arg_count
    New            callee, args...            arg_count
    Member         object, property           computed, property (name or None)
    Identifier     (leaf)                     name
    Literal        (leaf)                     literal_kind, value, raw
    TemplateLiteral substitutions...          quasis (raw strings, n+1 of them)
    TaggedTemplate tag, template
    TryStmt        block, handler?, finalizer?  has_catch, has_finally
    CatchClause    body                       param
    SwitchStmt     discriminant, cases...     case_count (default excluded)
    SwitchCase     test?, consequent...       is_default
    Loop           (by loop_kind)             loop_kind, has_init/test/update
        for        init?, test?, update?, body
        while      test, body
        do         body, test
        for-in     left, right, body
        for-of     left, right, body
    If             test, consequent, alternate?   has_else
    Return         argument?                  has_arg
    Throw          argument
    Break          (leaf)                     label
    Continue       (leaf)                     label
    Assignment     target, value              op
    Block          statements
    ClassDecl      super?, methods...         name, has_super, is_expression
    MethodDef      key, function              key (None if computed), computed,
                                              method_kind, static
    ExpressionStmt expression
    Binary         left, right                op, logical
    Unary          argument                   op
    Update         argument                   op, prefix
    Conditional    test, consequent, alternate
    Sequence       expressions...
    This, Super, Empty, Debugger, Hole        (leaves)
    Labeled        statement                  label
    With           object, body

Spans nest: a child's span lies within its parent's. Offsets are 0-based
character positions, end exclusive; lines are 1-based, columns 0-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator


class NodeKind:
    """Kind tags; plain strings so nodes serialize and compare cheaply."""

    PROGRAM = "Program"
    FUNCTION_DECL = "FunctionDecl"
    FUNCTION_EXPR = "FunctionExpr"
    ARROW_FUNCTION = "ArrowFunction"
    PARAM = "Param"
    VAR_DECL = "VarDecl"
    DECLARATOR = "Declarator"
    OBJECT_LITERAL = "ObjectLiteral"
    PROPERTY = "Property"
    ARRAY_LITERAL = "ArrayLiteral"
    SPREAD = "Spread"
    CALL = "Call"
    NEW = "New"
    MEMBER = "Member"
    IDENTIFIER = "Identifier"
    LITERAL = "Literal"
    TEMPLATE_LITERAL = "TemplateLiteral"
    TAGGED_TEMPLATE = "TaggedTemplate"
    TRY_STMT = "TryStmt"
    CATCH_CLAUSE = "CatchClause"
    SWITCH_STMT = "SwitchStmt"
    SWITCH_CASE = "SwitchCase"
    LOOP = "Loop"
    IF = "If"
    RETURN = "Return"
    THROW = "Throw"
    BREAK = "Break"
    CONTINUE = "Continue"
    ASSIGNMENT = "Assignment"
    BLOCK = "Block"
    CLASS_DECL = "ClassDecl"
    METHOD_DEF = "MethodDef"
    EXPRESSION_STMT = "ExpressionStmt"
    BINARY = "Binary"
    UNARY = "Unary"
    UPDATE = "Update"
    CONDITIONAL = "Conditional"
    SEQUENCE = "Sequence"
    THIS = "This"
    SUPER = "Super"
    EMPTY = "Empty"
    DEBUGGER = "Debugger"
    HOLE = "Hole"
    LABELED = "Labeled"
    WITH = "With"


FUNCTION_KINDS: frozenset[str] = frozenset(
    {NodeKind.FUNCTION_DECL, NodeKind.FUNCTION_EXPR, NodeKind.ARROW_FUNCTION}
)


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open character range with line/column endpoints."""

    start: int
    end: int
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, start: int, end: int) -> bool:
        return self.start < end and start < self.end

    def sort_key(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(slots=True)
class AstNode:
    kind: str
    span: Span
    children: list[AstNode] = field(default_factory=list)
    attrs: dict[str, object] = field(default_factory=dict)

    def attr(self, name: str, default: object = None) -> object:
        return self.attrs.get(name, default)

    @property
    def name(self) -> str | None:
        value = self.attrs.get("name")
        return value if isinstance(value, str) else None

    def find_all(self, kind: str) -> list[AstNode]:
        return [node for node in iter_nodes(self) if node.kind == kind]

    def __repr__(self) -> str:  # keeps pytest diffs readable
        bits = [self.kind]
        if "name" in self.attrs:
            bits.append(repr(self.attrs["name"]))
        if "op" in self.attrs:
            bits.append(str(self.attrs["op"]))
        return f"<{' '.join(bits)} @{self.span.start_line}:{self.span.start_col}>"


def iter_nodes(root: AstNode) -> Iterator[AstNode]:
    """Pre-order traversal; deterministic because child order is source order."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def walk(root: AstNode) -> Iterator[tuple[AstNode, tuple[AstNode, ...]]]:
    """Pre-order traversal yielding each node with its ancestor tuple."""
    stack: list[tuple[AstNode, tuple[AstNode, ...]]] = [(root, ())]
    while stack:
        node, ancestors = stack.pop()
        yield node, ancestors
        child_ancestors = ancestors + (node,)
        stack.extend((child, child_ancestors) for child in reversed(node.children))


def structurally_equal(a: AstNode, b: AstNode) -> bool:
    """Kind, attrs, and child structure match; spans are ignored."""
    if a.kind != b.kind or a.attrs != b.attrs or len(a.children) != len(b.children):
        return False
    return all(structurally_equal(x, y) for x, y in zip(a.children, b.children))


# --- source units ---


class SourceKind(enum.Enum):
    JS = "js"
    HTML = "html"


@dataclass(frozen=True, slots=True)
class ParseDiagnostic:
    message: str
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class EmbeddedKind(enum.Enum):
    SCRIPT_TAG = "script-tag"
    EVENT_ATTRIBUTE = "event-attribute"
    JAVASCRIPT_HREF = "javascript-href"


@dataclass(slots=True)
class EmbeddedScript:
    """A fragment of JavaScript lifted out of an HTML document."""

    kind: EmbeddedKind
    code: str
    span: Span  # location of the fragment within the host document
    attribute: str | None = None  # onclick, href, ... for attribute fragments
    unit: "SourceUnit | None" = None  # parsed fragment


@dataclass(slots=True)
class SourceUnit:
    """One analyzed file plus everything derived from it.

    Exactly one of (ast is not None) and (diagnostics non-empty) holds.
    Flags carry non-fatal observations such as "minified" or "lossy-decode".
    """

    path: str
    kind: SourceKind
    text: str
    ast: AstNode | None = None
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)
    embedded: list[EmbeddedScript] = field(default_factory=list)
    flags: set[str] = field(default_factory=set)
    loc_index: "object | None" = None  # LocIndex, attached by the parser

    @property
    def parsed(self) -> bool:
        return self.ast is not None

    def slice(self, span: Span) -> str:
        return self.text[span.start : span.end]
