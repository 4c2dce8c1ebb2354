"""Recursive-descent ECMAScript parser producing the normalized tree.

Coverage: the ES5 grammar plus let/const, arrow functions, classes, template
literals, default and rest parameters, shorthand and computed properties,
spread arguments, and for-of. Anything outside that (destructuring,
generators, async, optional chaining, modules) raises a parse error that the
entry points turn into a diagnostic; a file either yields a tree or at least
one diagnostic, never both, never neither.

Automatic semicolon insertion follows the usual rules: a statement may end at
`}`, at end of input, or before a token on a new line; return, throw, break,
continue, and postfix ++/-- are newline-restricted.
"""

from __future__ import annotations

import re
import sys
from typing import NoReturn

from gamesmell.frontend.jsast import (
    AstNode,
    EmbeddedScript,
    NodeKind as K,
    ParseDiagnostic,
    SourceKind,
    SourceUnit,
    Span,
)
from gamesmell.frontend.loc import LocIndex
from gamesmell.frontend.scanner import (
    ScanError,
    Scanner,
    Token,
    regex_allowed_after,
)

# Single physical line this long, or this mean line length, marks a unit as
# generated/minified output; it is analyzed anyway.
MINIFIED_LINE_LENGTH = 5000
MINIFIED_AVG_LINE_LENGTH = 500

_ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^="}
)

_BINARY_PRECEDENCE = {
    "||": 4,
    "&&": 5,
    "|": 6,
    "^": 7,
    "&": 8,
    "==": 9, "!=": 9, "===": 9, "!==": 9,
    "<": 10, ">": 10, "<=": 10, ">=": 10, "instanceof": 10, "in": 10,
    "<<": 11, ">>": 11, ">>>": 11,
    "+": 12, "-": 12,
    "*": 13, "/": 13, "%": 13,
}

_UNARY_OPS = frozenset({"!", "~", "+", "-", "typeof", "void", "delete"})


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class TokenStream:
    """Buffered token source with rescanning for the two context-sensitive
    spots in the lexical grammar: regex literals and template continuations."""

    def __init__(self, text: str) -> None:
        self.scanner = Scanner(text)
        self.buf: list[Token] = []
        self.last: Token | None = None
        self.intervals: list[tuple[int, int]] = []

    def peek(self, i: int = 0) -> Token:
        while len(self.buf) <= i:
            prev = self.buf[-1] if self.buf else self.last
            self.buf.append(self.scanner.next_token(regex_allowed_after(prev)))
        return self.buf[i]

    def peek_regex(self) -> Token:
        """Peek at an expression-start position: `/` means a regex here."""
        tok = self.peek(0)
        if tok.is_punct("/", "/="):
            self.scanner.restore_to(tok)
            self.buf = [self.scanner.next_token(True)]
            tok = self.buf[0]
        return tok

    def advance(self) -> Token:
        tok = self.peek(0)
        del self.buf[0]
        self.last = tok
        if tok.kind != "eof":
            self.intervals.append((tok.start, tok.end))
        return tok

    def template_continuation(self) -> Token:
        tok = self.peek(0)
        if not tok.is_punct("}"):
            raise ParseError("unterminated template literal", tok.line, tok.col)
        self.scanner.restore_to(tok)
        self.buf = []
        part = self.scanner.next_template_continuation()
        self.last = part
        self.intervals.append((part.start, part.end))
        return part


class Parser:
    def __init__(self, text: str) -> None:
        self.ts = TokenStream(text)

    # --- token plumbing ---

    def _cur(self) -> Token:
        return self.ts.peek(0)

    def _next(self) -> Token:
        return self.ts.advance()

    def _eat(self, value: str) -> bool:
        if self.ts.peek(0).is_punct(value):
            self.ts.advance()
            return True
        return False

    def _expect(self, value: str) -> Token:
        tok = self.ts.peek(0)
        if not tok.is_punct(value):
            self._fail(f"expected '{value}'", tok)
        return self.ts.advance()

    def _expect_keyword(self, value: str) -> Token:
        tok = self.ts.peek(0)
        if not tok.is_keyword(value):
            self._fail(f"expected '{value}'", tok)
        return self.ts.advance()

    def _expect_ident(self, what: str = "identifier") -> Token:
        tok = self.ts.peek(0)
        if tok.kind != "ident":
            self._fail(f"expected {what}", tok)
        return self.ts.advance()

    def _fail(self, message: str, tok: Token) -> NoReturn:
        found = tok.value if tok.kind != "eof" else "end of input"
        raise ParseError(f"{message} but found {found!r}", tok.line, tok.col)

    def _unsupported(self, what: str, tok: Token) -> NoReturn:
        raise ParseError(f"unsupported syntax: {what}", tok.line, tok.col)

    # --- span helpers ---

    def _span(self, start_tok: Token) -> Span:
        last = self.ts.last
        assert last is not None
        return Span(
            start_tok.start, last.end,
            start_tok.line, start_tok.col, last.end_line, last.end_col,
        )

    def _span_from(self, span: Span) -> Span:
        last = self.ts.last
        assert last is not None
        return Span(
            span.start, last.end,
            span.start_line, span.start_col, last.end_line, last.end_col,
        )

    def _node(self, kind: str, start_tok: Token, children: list[AstNode], **attrs) -> AstNode:
        return AstNode(kind, self._span(start_tok), children, attrs)

    def _node_from(self, kind: str, first: AstNode, children: list[AstNode], **attrs) -> AstNode:
        return AstNode(kind, self._span_from(first.span), children, attrs)

    # --- semicolons ---

    def _semicolon(self) -> None:
        tok = self.ts.peek(0)
        if tok.is_punct(";"):
            self.ts.advance()
            return
        if tok.kind == "eof" or tok.is_punct("}") or tok.nl_before:
            return
        self._fail("expected ';'", tok)

    # --- program and statements ---

    def parse_program(self) -> AstNode:
        stmts: list[AstNode] = []
        while self.ts.peek(0).kind != "eof":
            stmts.append(self.parse_statement())
        eof = self.ts.advance()
        if stmts:
            span = Span(0, stmts[-1].span.end, 1, 0,
                        stmts[-1].span.end_line, stmts[-1].span.end_col)
        else:
            span = Span(0, eof.end, 1, 0, eof.end_line, eof.end_col)
        return AstNode(K.PROGRAM, span, stmts, {})

    def parse_statement(self) -> AstNode:
        tok = self.ts.peek(0)
        if tok.is_punct("{"):
            return self._parse_block()
        if tok.is_punct(";"):
            self.ts.advance()
            return self._node(K.EMPTY, tok, [])
        if tok.kind == "keyword":
            v = tok.value
            if v in ("var", "let", "const"):
                return self._parse_var_statement()
            if v == "function":
                return self._parse_function(is_declaration=True)
            if v == "class":
                return self._parse_class(is_expression=False)
            if v == "if":
                return self._parse_if()
            if v == "for":
                return self._parse_for()
            if v == "while":
                return self._parse_while()
            if v == "do":
                return self._parse_do()
            if v == "switch":
                return self._parse_switch()
            if v == "try":
                return self._parse_try()
            if v == "return":
                return self._parse_return()
            if v == "throw":
                return self._parse_throw()
            if v in ("break", "continue"):
                return self._parse_break_continue()
            if v == "with":
                return self._parse_with()
            if v == "debugger":
                self.ts.advance()
                self._semicolon()
                return self._node(K.DEBUGGER, tok, [])
            if v in ("import", "export"):
                self._unsupported(f"'{v}' declaration", tok)
            if v == "enum":
                self._unsupported("'enum'", tok)
        if tok.kind == "ident" and self.ts.peek(1).is_punct(":"):
            return self._parse_labeled()
        expr = self.parse_expression(no_in=False)
        self._semicolon()
        return self._node_from(K.EXPRESSION_STMT, expr, [expr])

    def _parse_block(self) -> AstNode:
        start = self._expect("{")
        stmts: list[AstNode] = []
        while not self.ts.peek(0).is_punct("}"):
            if self.ts.peek(0).kind == "eof":
                self._fail("expected '}'", self.ts.peek(0))
            stmts.append(self.parse_statement())
        self._expect("}")
        return self._node(K.BLOCK, start, stmts)

    def _parse_var_statement(self) -> AstNode:
        decl = self._parse_var_decl(no_in=False)
        self._semicolon()
        return decl

    def _parse_var_decl(self, no_in: bool) -> AstNode:
        kw = self.ts.advance()
        declarators = [self._parse_declarator(no_in)]
        while self._eat(","):
            declarators.append(self._parse_declarator(no_in))
        return self._node(K.VAR_DECL, kw, declarators, decl_kind=kw.value)

    def _parse_declarator(self, no_in: bool) -> AstNode:
        tok = self.ts.peek(0)
        if tok.is_punct("[", "{"):
            self._unsupported("destructuring declaration", tok)
        name = self._expect_ident("binding name")
        children: list[AstNode] = []
        has_init = False
        if self._eat("="):
            children.append(self.parse_assignment(no_in))
            has_init = True
        return self._node(K.DECLARATOR, name, children,
                          name=name.value, has_init=has_init)

    def _parse_if(self) -> AstNode:
        start = self._expect_keyword("if")
        self._expect("(")
        test = self.parse_expression(no_in=False)
        self._expect(")")
        consequent = self.parse_statement()
        children = [test, consequent]
        has_else = False
        if self.ts.peek(0).is_keyword("else"):
            self.ts.advance()
            children.append(self.parse_statement())
            has_else = True
        return self._node(K.IF, start, children, has_else=has_else)

    def _parse_for(self) -> AstNode:
        start = self._expect_keyword("for")
        self._expect("(")
        tok = self.ts.peek(0)
        init: AstNode | None = None
        if tok.is_punct(";"):
            pass
        elif tok.is_keyword("var", "let", "const"):
            kw = self.ts.advance()
            first = self._parse_declarator(no_in=True)
            nxt = self.ts.peek(0)
            is_in = nxt.is_keyword("in")
            is_of = nxt.kind == "ident" and nxt.value == "of"
            if (is_in or is_of) and not first.attrs["has_init"]:
                left = self._node(K.VAR_DECL, kw, [first], decl_kind=kw.value)
                return self._parse_for_in_of(start, left, "for-of" if is_of else "for-in")
            declarators = [first]
            while self._eat(","):
                declarators.append(self._parse_declarator(no_in=True))
            init = self._node(K.VAR_DECL, kw, declarators, decl_kind=kw.value)
        else:
            init = self.parse_expression(no_in=True)
            nxt = self.ts.peek(0)
            if nxt.is_keyword("in"):
                self._require_target(init, nxt)
                return self._parse_for_in_of(start, init, "for-in")
            if nxt.kind == "ident" and nxt.value == "of":
                self._require_target(init, nxt)
                return self._parse_for_in_of(start, init, "for-of")
        self._expect(";")
        children: list[AstNode] = []
        has_init = init is not None
        if init is not None:
            children.append(init)
        has_test = not self.ts.peek(0).is_punct(";")
        if has_test:
            children.append(self.parse_expression(no_in=False))
        self._expect(";")
        has_update = not self.ts.peek(0).is_punct(")")
        if has_update:
            children.append(self.parse_expression(no_in=False))
        self._expect(")")
        children.append(self.parse_statement())
        return self._node(K.LOOP, start, children, loop_kind="for",
                          has_init=has_init, has_test=has_test, has_update=has_update)

    def _parse_for_in_of(self, start: Token, left: AstNode, loop_kind: str) -> AstNode:
        self.ts.advance()  # 'in' or 'of'
        if loop_kind == "for-of":
            right = self.parse_assignment(no_in=False)
        else:
            right = self.parse_expression(no_in=False)
        self._expect(")")
        body = self.parse_statement()
        return self._node(K.LOOP, start, [left, right, body], loop_kind=loop_kind)

    def _require_target(self, node: AstNode, tok: Token) -> None:
        if node.kind not in (K.IDENTIFIER, K.MEMBER):
            self._fail("invalid loop target", tok)

    def _parse_while(self) -> AstNode:
        start = self._expect_keyword("while")
        self._expect("(")
        test = self.parse_expression(no_in=False)
        self._expect(")")
        body = self.parse_statement()
        return self._node(K.LOOP, start, [test, body], loop_kind="while")

    def _parse_do(self) -> AstNode:
        start = self._expect_keyword("do")
        body = self.parse_statement()
        self._expect_keyword("while")
        self._expect("(")
        test = self.parse_expression(no_in=False)
        self._expect(")")
        self._eat(";")  # the grammar forgives a missing terminator here
        return self._node(K.LOOP, start, [body, test], loop_kind="do")

    def _parse_switch(self) -> AstNode:
        start = self._expect_keyword("switch")
        self._expect("(")
        discriminant = self.parse_expression(no_in=False)
        self._expect(")")
        self._expect("{")
        cases: list[AstNode] = []
        case_count = 0
        has_default = False
        while not self.ts.peek(0).is_punct("}"):
            tok = self.ts.peek(0)
            if tok.is_keyword("case"):
                self.ts.advance()
                test = self.parse_expression(no_in=False)
                self._expect(":")
                body = self._parse_case_body()
                cases.append(self._node(K.SWITCH_CASE, tok, [test] + body, is_default=False))
                case_count += 1
            elif tok.is_keyword("default"):
                self.ts.advance()
                self._expect(":")
                body = self._parse_case_body()
                cases.append(self._node(K.SWITCH_CASE, tok, body, is_default=True))
                has_default = True
            else:
                self._fail("expected 'case' or 'default'", tok)
        self._expect("}")
        return self._node(K.SWITCH_STMT, start, [discriminant] + cases,
                          case_count=case_count, has_default=has_default)

    def _parse_case_body(self) -> list[AstNode]:
        stmts: list[AstNode] = []
        while True:
            tok = self.ts.peek(0)
            if tok.is_punct("}") or tok.is_keyword("case") or tok.is_keyword("default"):
                return stmts
            if tok.kind == "eof":
                self._fail("expected '}'", tok)
            stmts.append(self.parse_statement())

    def _parse_try(self) -> AstNode:
        start = self._expect_keyword("try")
        block = self._parse_block()
        children = [block]
        has_catch = False
        has_finally = False
        tok = self.ts.peek(0)
        if tok.is_keyword("catch"):
            catch_tok = self.ts.advance()
            self._expect("(")
            param_tok = self.ts.peek(0)
            if param_tok.is_punct("[", "{"):
                self._unsupported("destructuring catch binding", param_tok)
            param = self._expect_ident("catch binding")
            self._expect(")")
            body = self._parse_block()
            children.append(self._node(K.CATCH_CLAUSE, catch_tok, [body], param=param.value))
            has_catch = True
            tok = self.ts.peek(0)
        if tok.is_keyword("finally"):
            self.ts.advance()
            children.append(self._parse_block())
            has_finally = True
        if not has_catch and not has_finally:
            self._fail("expected 'catch' or 'finally'", tok)
        return self._node(K.TRY_STMT, start, children,
                          has_catch=has_catch, has_finally=has_finally)

    def _parse_return(self) -> AstNode:
        start = self._expect_keyword("return")
        tok = self.ts.peek(0)
        children: list[AstNode] = []
        has_arg = False
        if not (tok.nl_before or tok.is_punct(";") or tok.is_punct("}") or tok.kind == "eof"):
            children.append(self.parse_expression(no_in=False))
            has_arg = True
        self._semicolon()
        return self._node(K.RETURN, start, children, has_arg=has_arg)

    def _parse_throw(self) -> AstNode:
        start = self._expect_keyword("throw")
        tok = self.ts.peek(0)
        if tok.nl_before:
            raise ParseError("newline not allowed after 'throw'", tok.line, tok.col)
        arg = self.parse_expression(no_in=False)
        self._semicolon()
        return self._node(K.THROW, start, [arg])

    def _parse_break_continue(self) -> AstNode:
        start = self.ts.advance()
        kind = K.BREAK if start.value == "break" else K.CONTINUE
        label: str | None = None
        tok = self.ts.peek(0)
        if tok.kind == "ident" and not tok.nl_before:
            label = self.ts.advance().value
        self._semicolon()
        return self._node(kind, start, [], label=label)

    def _parse_with(self) -> AstNode:
        start = self._expect_keyword("with")
        self._expect("(")
        obj = self.parse_expression(no_in=False)
        self._expect(")")
        body = self.parse_statement()
        return self._node(K.WITH, start, [obj, body])

    def _parse_labeled(self) -> AstNode:
        label = self.ts.advance()
        self._expect(":")
        stmt = self.parse_statement()
        return self._node(K.LABELED, label, [stmt], label=label.value)

    # --- functions and classes ---

    def _parse_function(self, is_declaration: bool, name_optional: bool = False) -> AstNode:
        start = self._expect_keyword("function")
        if self.ts.peek(0).is_punct("*"):
            self._unsupported("generator function", self.ts.peek(0))
        name: str | None = None
        if self.ts.peek(0).kind == "ident":
            name = self.ts.advance().value
        elif is_declaration and not name_optional:
            self._fail("expected function name", self.ts.peek(0))
        params = self._parse_params()
        body = self._parse_block()
        kind = K.FUNCTION_DECL if is_declaration else K.FUNCTION_EXPR
        return self._node(kind, start, params + [body],
                          name=name, param_count=len(params))

    def _parse_params(self) -> list[AstNode]:
        self._expect("(")
        params: list[AstNode] = []
        seen_rest = False
        while not self.ts.peek(0).is_punct(")"):
            tok = self.ts.peek(0)
            if seen_rest:
                self._fail("rest parameter must be last", tok)
            if tok.is_punct("[", "{"):
                self._unsupported("destructuring parameter", tok)
            rest = False
            start = tok
            if tok.is_punct("..."):
                self.ts.advance()
                rest = True
                seen_rest = True
            name = self._expect_ident("parameter name")
            children: list[AstNode] = []
            if not rest and self._eat("="):
                children.append(self.parse_assignment(no_in=False))
            params.append(self._node(K.PARAM, start, children, name=name.value, rest=rest))
            if not self._eat(","):
                break
        self._expect(")")
        return params

    def _parse_class(self, is_expression: bool) -> AstNode:
        start = self._expect_keyword("class")
        name: str | None = None
        if self.ts.peek(0).kind == "ident":
            name = self.ts.advance().value
        elif not is_expression:
            self._fail("expected class name", self.ts.peek(0))
        children: list[AstNode] = []
        has_super = False
        if self.ts.peek(0).is_keyword("extends"):
            self.ts.advance()
            children.append(self._parse_lhs_expression())
            has_super = True
        self._expect("{")
        while not self.ts.peek(0).is_punct("}"):
            if self._eat(";"):
                continue
            children.append(self._parse_method_def())
        self._expect("}")
        return self._node(K.CLASS_DECL, start, children, name=name,
                          has_super=has_super, is_expression=is_expression)

    def _parse_method_def(self) -> AstNode:
        start = self.ts.peek(0)
        static = False
        if start.kind == "ident" and start.value == "static" and not self.ts.peek(1).is_punct("("):
            self.ts.advance()
            static = True
        tok = self.ts.peek(0)
        accessor: str | None = None
        if tok.kind == "ident" and tok.value in ("get", "set") and not self.ts.peek(1).is_punct("(", "=", ";", "}"):
            self.ts.advance()
            accessor = tok.value
            tok = self.ts.peek(0)
        if tok.is_punct("*"):
            self._unsupported("generator method", tok)
        key, key_node, computed = self._parse_property_key()
        if not self.ts.peek(0).is_punct("("):
            self._unsupported("class field", self.ts.peek(0))
        fn_start = self.ts.peek(0)
        params = self._parse_params()
        body = self._parse_block()
        fn = AstNode(
            K.FUNCTION_EXPR,
            Span(fn_start.start, body.span.end, fn_start.line, fn_start.col,
                 body.span.end_line, body.span.end_col),
            params + [body],
            {"name": None, "param_count": len(params)},
        )
        if accessor:
            method_kind = accessor
        elif not static and not computed and key == "constructor":
            method_kind = "constructor"
        else:
            method_kind = "method"
        return self._node(K.METHOD_DEF, start, [key_node, fn], key=key,
                          computed=computed, method_kind=method_kind, static=static)

    def _parse_property_key(self) -> tuple[str | None, AstNode, bool]:
        tok = self.ts.peek(0)
        if tok.is_punct("["):
            self.ts.advance()
            expr = self.parse_assignment(no_in=False)
            self._expect("]")
            return None, expr, True
        if tok.kind in ("ident", "keyword"):
            self.ts.advance()
            node = self._node(K.IDENTIFIER, tok, [], name=tok.value)
            return tok.value, node, False
        if tok.kind == "str":
            self.ts.advance()
            node = self._node(K.LITERAL, tok, [], literal_kind="string",
                              value=tok.payload, raw=tok.value)
            return str(tok.payload), node, False
        if tok.kind == "num":
            self.ts.advance()
            node = self._node(K.LITERAL, tok, [], literal_kind="number",
                              value=tok.payload, raw=tok.value)
            return tok.value, node, False
        self._fail("expected property name", tok)

    # --- expressions ---

    def parse_expression(self, no_in: bool) -> AstNode:
        expr = self.parse_assignment(no_in)
        if not self.ts.peek(0).is_punct(","):
            return expr
        exprs = [expr]
        while self._eat(","):
            exprs.append(self.parse_assignment(no_in))
        return self._node_from(K.SEQUENCE, expr, exprs)

    def parse_assignment(self, no_in: bool) -> AstNode:
        tok = self.ts.peek(0)
        if tok.is_punct("(") and self._arrow_ahead():
            return self._parse_arrow(no_in)
        if tok.kind == "ident":
            nxt = self.ts.peek(1)
            if nxt.is_punct("=>") and not nxt.nl_before:
                return self._parse_arrow(no_in, single_param=True)
        left = self._parse_conditional(no_in)
        op_tok = self.ts.peek(0)
        if op_tok.kind == "punct" and op_tok.value in _ASSIGN_OPS:
            if left.kind not in (K.IDENTIFIER, K.MEMBER):
                self._fail("invalid assignment target", op_tok)
            self.ts.advance()
            right = self.parse_assignment(no_in)
            return self._node_from(K.ASSIGNMENT, left, [left, right], op=op_tok.value)
        return left

    def _arrow_ahead(self) -> bool:
        depth = 0
        i = 0
        while True:
            tok = self.ts.peek(i)
            if tok.kind == "eof":
                return False
            if tok.is_punct("(", "[", "{"):
                depth += 1
            elif tok.is_punct(")", "]", "}"):
                depth -= 1
                if depth == 0:
                    nxt = self.ts.peek(i + 1)
                    return nxt.is_punct("=>") and not nxt.nl_before
            i += 1

    def _parse_arrow(self, no_in: bool, single_param: bool = False) -> AstNode:
        start = self.ts.peek(0)
        if single_param:
            name = self.ts.advance()
            params = [self._node(K.PARAM, name, [], name=name.value, rest=False)]
        else:
            params = self._parse_params()
        self._expect("=>")
        if self.ts.peek(0).is_punct("{"):
            body = self._parse_block()
            expression_body = False
        else:
            body = self.parse_assignment(no_in)
            expression_body = True
        return self._node(K.ARROW_FUNCTION, start, params + [body],
                          param_count=len(params), expression_body=expression_body)

    def _parse_conditional(self, no_in: bool) -> AstNode:
        test = self._parse_binary(0, no_in)
        if not self.ts.peek(0).is_punct("?"):
            return test
        self.ts.advance()
        consequent = self.parse_assignment(no_in=False)
        self._expect(":")
        alternate = self.parse_assignment(no_in)
        return self._node_from(K.CONDITIONAL, test, [test, consequent, alternate])

    def _parse_binary(self, min_prec: int, no_in: bool) -> AstNode:
        left = self._parse_unary()
        while True:
            tok = self.ts.peek(0)
            op: str | None = None
            if tok.kind == "punct" and tok.value in _BINARY_PRECEDENCE:
                op = tok.value
            elif tok.is_keyword("instanceof"):
                op = "instanceof"
            elif tok.is_keyword("in") and not no_in:
                op = "in"
            if op is None:
                return left
            prec = _BINARY_PRECEDENCE[op]
            if prec < min_prec:
                return left
            self.ts.advance()
            right = self._parse_binary(prec + 1, no_in)
            left = self._node_from(K.BINARY, left, [left, right],
                                   op=op, logical=op in ("&&", "||"))

    def _parse_unary(self) -> AstNode:
        tok = self.ts.peek(0)
        if (tok.kind == "punct" and tok.value in ("!", "~", "+", "-")) or \
                tok.is_keyword("typeof") or tok.is_keyword("void") or tok.is_keyword("delete"):
            self.ts.advance()
            arg = self._parse_unary()
            return self._node(K.UNARY, tok, [arg], op=tok.value)
        if tok.is_punct("++", "--"):
            self.ts.advance()
            arg = self._parse_unary()
            if arg.kind not in (K.IDENTIFIER, K.MEMBER):
                self._fail("invalid increment target", tok)
            return self._node(K.UPDATE, tok, [arg], op=tok.value, prefix=True)
        return self._parse_postfix()

    def _parse_postfix(self) -> AstNode:
        expr = self._parse_lhs_expression()
        tok = self.ts.peek(0)
        if tok.is_punct("++", "--") and not tok.nl_before:
            if expr.kind not in (K.IDENTIFIER, K.MEMBER):
                self._fail("invalid increment target", tok)
            self.ts.advance()
            return self._node_from(K.UPDATE, expr, [expr], op=tok.value, prefix=False)
        return expr

    def _parse_lhs_expression(self) -> AstNode:
        tok = self.ts.peek(0)
        if tok.is_keyword("new"):
            expr = self._parse_new()
        else:
            expr = self._parse_primary()
        return self._parse_call_tail(expr, allow_call=True)

    def _parse_new(self) -> AstNode:
        new_tok = self._expect_keyword("new")
        if self.ts.peek(0).is_punct("."):
            self._unsupported("new.target", self.ts.peek(0))
        if self.ts.peek(0).is_keyword("new"):
            callee = self._parse_new()
        else:
            callee = self._parse_primary()
        callee = self._parse_call_tail(callee, allow_call=False)
        args: list[AstNode] = []
        if self.ts.peek(0).is_punct("("):
            args = self._parse_arguments()
        return self._node(K.NEW, new_tok, [callee] + args, arg_count=len(args))

    def _parse_call_tail(self, expr: AstNode, allow_call: bool) -> AstNode:
        while True:
            tok = self.ts.peek(0)
            if tok.is_punct("."):
                self.ts.advance()
                prop = self.ts.peek(0)
                if prop.kind not in ("ident", "keyword"):
                    self._fail("expected property name", prop)
                self.ts.advance()
                prop_node = self._node(K.IDENTIFIER, prop, [], name=prop.value)
                expr = self._node_from(K.MEMBER, expr, [expr, prop_node],
                                       computed=False, property=prop.value)
            elif tok.is_punct("["):
                self.ts.advance()
                index = self.parse_expression(no_in=False)
                self._expect("]")
                expr = self._node_from(K.MEMBER, expr, [expr, index],
                                       computed=True, property=None)
            elif tok.is_punct("(") and allow_call:
                args = self._parse_arguments()
                expr = self._node_from(K.CALL, expr, [expr] + args, arg_count=len(args))
            elif tok.kind == "template" and allow_call:
                template = self._parse_template()
                expr = self._node_from(K.TAGGED_TEMPLATE, expr, [expr, template])
            else:
                return expr

    def _parse_arguments(self) -> list[AstNode]:
        self._expect("(")
        args: list[AstNode] = []
        while not self.ts.peek(0).is_punct(")"):
            tok = self.ts.peek(0)
            if tok.is_punct("..."):
                self.ts.advance()
                arg = self.parse_assignment(no_in=False)
                args.append(self._node(K.SPREAD, tok, [arg]))
            else:
                args.append(self.parse_assignment(no_in=False))
            if not self._eat(","):
                break
        self._expect(")")
        return args

    def _parse_primary(self) -> AstNode:
        tok = self.ts.peek_regex()
        if tok.is_punct("("):
            self.ts.advance()
            expr = self.parse_expression(no_in=False)
            self._expect(")")
            return expr
        if tok.kind == "ident":
            self.ts.advance()
            return self._node(K.IDENTIFIER, tok, [], name=tok.value)
        if tok.kind == "num":
            self.ts.advance()
            return self._node(K.LITERAL, tok, [], literal_kind="number",
                              value=tok.payload, raw=tok.value)
        if tok.kind == "str":
            self.ts.advance()
            return self._node(K.LITERAL, tok, [], literal_kind="string",
                              value=tok.payload, raw=tok.value)
        if tok.kind == "regex":
            self.ts.advance()
            return self._node(K.LITERAL, tok, [], literal_kind="regex",
                              value=tok.value, raw=tok.value)
        if tok.kind == "template":
            return self._parse_template()
        if tok.is_punct("["):
            return self._parse_array()
        if tok.is_punct("{"):
            return self._parse_object()
        if tok.kind == "keyword":
            v = tok.value
            if v == "this":
                self.ts.advance()
                return self._node(K.THIS, tok, [])
            if v == "super":
                self.ts.advance()
                return self._node(K.SUPER, tok, [])
            if v in ("true", "false"):
                self.ts.advance()
                return self._node(K.LITERAL, tok, [], literal_kind="boolean",
                                  value=(v == "true"), raw=v)
            if v == "null":
                self.ts.advance()
                return self._node(K.LITERAL, tok, [], literal_kind="null",
                                  value=None, raw=v)
            if v == "function":
                return self._parse_function(is_declaration=False)
            if v == "class":
                return self._parse_class(is_expression=True)
            if v == "new":
                return self._parse_new()
        self._fail("unexpected token", tok)

    def _parse_template(self) -> AstNode:
        head = self.ts.advance()
        raw_inner, cooked, closed = head.payload  # type: ignore[misc]
        quasis = [raw_inner]
        cooked_parts = [cooked]
        exprs: list[AstNode] = []
        while closed == "${":
            exprs.append(self.parse_expression(no_in=False))
            part = self.ts.template_continuation()
            raw_inner, cooked, closed = part.payload  # type: ignore[misc]
            quasis.append(raw_inner)
            cooked_parts.append(cooked)
        return self._node(K.TEMPLATE_LITERAL, head, exprs,
                          quasis=tuple(quasis), cooked=tuple(cooked_parts))

    def _parse_array(self) -> AstNode:
        start = self._expect("[")
        elements: list[AstNode] = []
        while not self.ts.peek(0).is_punct("]"):
            tok = self.ts.peek(0)
            if tok.is_punct(","):
                self.ts.advance()
                elements.append(self._node(K.HOLE, tok, []))
                continue
            if tok.is_punct("..."):
                self.ts.advance()
                arg = self.parse_assignment(no_in=False)
                elements.append(self._node(K.SPREAD, tok, [arg]))
            else:
                elements.append(self.parse_assignment(no_in=False))
            if not self._eat(","):
                break
        self._expect("]")
        return self._node(K.ARRAY_LITERAL, start, elements)

    def _parse_object(self) -> AstNode:
        start = self._expect("{")
        properties: list[AstNode] = []
        while not self.ts.peek(0).is_punct("}"):
            properties.append(self._parse_property())
            if not self._eat(","):
                break
        self._expect("}")
        return self._node(K.OBJECT_LITERAL, start, properties)

    def _parse_property(self) -> AstNode:
        tok = self.ts.peek(0)
        if tok.is_punct("..."):
            self._unsupported("object spread", tok)
        if tok.kind == "ident" and tok.value in ("get", "set") and \
                not self.ts.peek(1).is_punct(":", ",", "}", "("):
            self.ts.advance()
            key, key_node, computed = self._parse_property_key()
            paren = self.ts.peek(0)
            params = self._parse_params()
            body = self._parse_block()
            fn = AstNode(
                K.FUNCTION_EXPR,
                Span(paren.start, body.span.end, paren.line, paren.col,
                     body.span.end_line, body.span.end_col),
                params + [body],
                {"name": None, "param_count": len(params)},
            )
            return self._node(K.PROPERTY, tok, [key_node, fn], key=key,
                              computed=computed, prop_kind=tok.value, shorthand=False)
        key, key_node, computed = self._parse_property_key()
        nxt = self.ts.peek(0)
        if nxt.is_punct(":"):
            self.ts.advance()
            value = self.parse_assignment(no_in=False)
            return self._node(K.PROPERTY, tok, [key_node, value], key=key,
                              computed=computed, prop_kind="init", shorthand=False)
        if nxt.is_punct("("):
            params = self._parse_params()
            body = self._parse_block()
            fn = AstNode(
                K.FUNCTION_EXPR,
                Span(nxt.start, body.span.end, nxt.line, nxt.col,
                     body.span.end_line, body.span.end_col),
                params + [body],
                {"name": None, "param_count": len(params)},
            )
            return self._node(K.PROPERTY, tok, [key_node, fn], key=key,
                              computed=computed, prop_kind="method", shorthand=False)
        if not computed and key_node.kind == K.IDENTIFIER and \
                (nxt.is_punct(",") or nxt.is_punct("}")):
            value = AstNode(K.IDENTIFIER, key_node.span, [], {"name": key})
            return self._node(K.PROPERTY, tok, [key_node, value], key=key,
                              computed=computed, prop_kind="init", shorthand=True)
        if nxt.is_punct("="):
            self._unsupported("destructuring default", nxt)
        self._fail("expected ':' in property", nxt)


# --- entry points ---


def parse_js(text: str) -> tuple[AstNode | None, list[ParseDiagnostic], LocIndex | None]:
    parser = Parser(text)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 20000))
    try:
        ast = parser.parse_program()
    except (ScanError, ParseError) as exc:
        return None, [ParseDiagnostic(exc.message, exc.line, exc.col)], None
    except RecursionError:
        return None, [ParseDiagnostic("nesting too deep to parse", 1, 0)], None
    finally:
        sys.setrecursionlimit(old_limit)
    return ast, [], LocIndex(text, parser.ts.intervals)


def is_minified(text: str) -> bool:
    lines = text.splitlines() or [""]
    longest = max(len(line) for line in lines)
    average = len(text) / len(lines)
    return longest > MINIFIED_LINE_LENGTH or average > MINIFIED_AVG_LINE_LENGTH


_HTML_SUFFIX = re.compile(r"\.html?$", re.IGNORECASE)


def source_kind_for_path(path: str) -> SourceKind:
    return SourceKind.HTML if _HTML_SUFFIX.search(path) else SourceKind.JS


def parse_source(path: str, text: str, kind: SourceKind) -> SourceUnit:
    """Parse one file into a unit; HTML gets its scripts extracted and each
    fragment parsed as its own nested unit."""
    unit = SourceUnit(path=path, kind=kind, text=text)
    if is_minified(text):
        unit.flags.add("minified")
    if kind is SourceKind.JS:
        unit.ast, unit.diagnostics, unit.loc_index = parse_js(text)
        return unit
    from gamesmell.frontend.htmlscan import extract_embedded_scripts

    unit.embedded = extract_embedded_scripts(text)
    for index, embedded in enumerate(unit.embedded, start=1):
        embedded.unit = parse_source(f"{path}#{index}", embedded.code, SourceKind.JS)
    # The document itself carries no statements; an empty program keeps the
    # parsed-or-diagnosed invariant uniform across unit kinds.
    last_line = text.count("\n") + 1
    unit.ast = AstNode(
        K.PROGRAM,
        Span(0, len(text), 1, 0, last_line, len(text) - text.rfind("\n") - 1),
        [],
        {},
    )
    return unit


def embedded_units(unit: SourceUnit) -> list[SourceUnit]:
    """The unit's analyzable fragments: itself when it is JS, plus every
    parsed embedded script when it is HTML."""
    if unit.kind is SourceKind.JS:
        return [unit]
    return [e.unit for e in unit.embedded if e.unit is not None]
