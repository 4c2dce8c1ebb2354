"""Source rendering for normalized trees.

Emits valid JavaScript with explicit semicolons and precedence-driven
parentheses. Formatting and comments are not preserved; the guarantee is
structural: parsing the emitted text yields a tree structurally equal to the
one emitted (same kinds, attributes, and child shape).
"""

from __future__ import annotations

from gamesmell.frontend.jsast import AstNode, NodeKind as K

_PREC_SEQUENCE = 1
_PREC_ASSIGN = 2
_PREC_CONDITIONAL = 3
_PREC_UNARY = 15
_PREC_POSTFIX = 16
_PREC_CALL = 18
_PREC_PRIMARY = 20

_BINARY_PREC = {
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

_WORD_OPS = frozenset({"typeof", "void", "delete", "instanceof", "in"})


def to_source(node: AstNode) -> str:
    return _Emitter().statement(node) if _is_statement(node) else _Emitter().expr(node, 0, False)


def _is_statement(node: AstNode) -> bool:
    return node.kind in (
        K.PROGRAM, K.BLOCK, K.VAR_DECL, K.EMPTY, K.EXPRESSION_STMT, K.IF,
        K.LOOP, K.SWITCH_STMT, K.TRY_STMT, K.RETURN, K.THROW, K.BREAK,
        K.CONTINUE, K.FUNCTION_DECL, K.CLASS_DECL, K.LABELED, K.WITH,
        K.DEBUGGER,
    ) and not (node.kind == K.CLASS_DECL and node.attrs.get("is_expression"))


class _Emitter:
    # --- statements ---

    def statement(self, node: AstNode) -> str:
        kind = node.kind
        if kind == K.PROGRAM:
            return "\n".join(self.statement(s) for s in node.children)
        if kind == K.BLOCK:
            inner = "\n".join(self.statement(s) for s in node.children)
            return "{\n" + inner + "\n}" if inner else "{\n}"
        if kind == K.EMPTY:
            return ";"
        if kind == K.DEBUGGER:
            return "debugger;"
        if kind == K.EXPRESSION_STMT:
            expr = node.children[0]
            text = self.expr(expr, _PREC_SEQUENCE, False)
            if _leads_with_brace_or_function(expr):
                return "(" + text + ");"
            return text + ";"
        if kind == K.VAR_DECL:
            return self._var_decl(node, no_in=False) + ";"
        if kind == K.IF:
            out = "if (" + self.expr(node.children[0], 0, False) + ") "
            out += self.statement(node.children[1])
            if node.attrs.get("has_else"):
                out += " else " + self.statement(node.children[2])
            return out
        if kind == K.LOOP:
            return self._loop(node)
        if kind == K.SWITCH_STMT:
            out = "switch (" + self.expr(node.children[0], 0, False) + ") {\n"
            for case in node.children[1:]:
                if case.attrs.get("is_default"):
                    out += "default:\n"
                    body = case.children
                else:
                    out += "case " + self.expr(case.children[0], 0, False) + ":\n"
                    body = case.children[1:]
                for stmt in body:
                    out += self.statement(stmt) + "\n"
            return out + "}"
        if kind == K.TRY_STMT:
            out = "try " + self.statement(node.children[0])
            rest = node.children[1:]
            if node.attrs.get("has_catch"):
                handler = rest[0]
                rest = rest[1:]
                out += " catch (" + str(handler.attrs["param"]) + ") "
                out += self.statement(handler.children[0])
            if node.attrs.get("has_finally"):
                out += " finally " + self.statement(rest[0])
            return out
        if kind == K.RETURN:
            if node.attrs.get("has_arg"):
                return "return " + self.expr(node.children[0], _PREC_SEQUENCE, False) + ";"
            return "return;"
        if kind == K.THROW:
            return "throw " + self.expr(node.children[0], _PREC_SEQUENCE, False) + ";"
        if kind == K.BREAK:
            label = node.attrs.get("label")
            return f"break {label};" if label else "break;"
        if kind == K.CONTINUE:
            label = node.attrs.get("label")
            return f"continue {label};" if label else "continue;"
        if kind == K.FUNCTION_DECL:
            return self._function(node, "function")
        if kind == K.CLASS_DECL:
            return self._class(node)
        if kind == K.LABELED:
            return str(node.attrs["label"]) + ": " + self.statement(node.children[0])
        if kind == K.WITH:
            return ("with (" + self.expr(node.children[0], 0, False) + ") "
                    + self.statement(node.children[1]))
        raise ValueError(f"not a statement kind: {kind}")

    def _var_decl(self, node: AstNode, no_in: bool) -> str:
        parts = []
        for decl in node.children:
            text = str(decl.attrs["name"])
            if decl.attrs.get("has_init"):
                text += " = " + self.expr(decl.children[0], _PREC_ASSIGN, no_in)
            parts.append(text)
        return str(node.attrs["decl_kind"]) + " " + ", ".join(parts)

    def _loop(self, node: AstNode) -> str:
        lk = node.attrs["loop_kind"]
        ch = node.children
        if lk == "while":
            return "while (" + self.expr(ch[0], 0, False) + ") " + self.statement(ch[1])
        if lk == "do":
            return "do " + self.statement(ch[0]) + " while (" + self.expr(ch[1], 0, False) + ");"
        if lk in ("for-in", "for-of"):
            left, right, body = ch
            if left.kind == K.VAR_DECL:
                left_text = self._var_decl(left, no_in=True)
            else:
                left_text = self.expr(left, _PREC_POSTFIX, True)
            word = "in" if lk == "for-in" else "of"
            return (f"for ({left_text} {word} " + self.expr(right, _PREC_SEQUENCE, False)
                    + ") " + self.statement(body))
        index = 0
        init_text = ""
        if node.attrs.get("has_init"):
            init = ch[index]
            index += 1
            if init.kind == K.VAR_DECL:
                init_text = self._var_decl(init, no_in=True)
            else:
                init_text = self.expr(init, 0, True)
        test_text = ""
        if node.attrs.get("has_test"):
            test_text = self.expr(ch[index], 0, False)
            index += 1
        update_text = ""
        if node.attrs.get("has_update"):
            update_text = self.expr(ch[index], 0, False)
            index += 1
        return (f"for ({init_text}; {test_text}; {update_text}) "
                + self.statement(ch[index]))

    def _function(self, node: AstNode, keyword: str) -> str:
        name = node.attrs.get("name")
        head = keyword + (" " + str(name) if name else "")
        params = self._params(node.children[:-1])
        return head + params + " " + self.statement(node.children[-1])

    def _params(self, params: list[AstNode]) -> str:
        parts = []
        for param in params:
            text = str(param.attrs["name"])
            if param.attrs.get("rest"):
                text = "..." + text
            elif param.children:
                text += " = " + self.expr(param.children[0], _PREC_ASSIGN, False)
            parts.append(text)
        return "(" + ", ".join(parts) + ")"

    def _class(self, node: AstNode) -> str:
        name = node.attrs.get("name")
        out = "class" + (" " + str(name) if name else "")
        methods = node.children
        if node.attrs.get("has_super"):
            out += " extends " + self.expr(node.children[0], _PREC_CALL, False)
            methods = node.children[1:]
        out += " {\n"
        for method in methods:
            out += self._method(method) + "\n"
        return out + "}"

    def _method(self, node: AstNode) -> str:
        out = "static " if node.attrs.get("static") else ""
        mk = node.attrs.get("method_kind")
        if mk in ("get", "set"):
            out += str(mk) + " "
        out += self._property_key(node)
        fn = node.children[1]
        return out + self._params(fn.children[:-1]) + " " + self.statement(fn.children[-1])

    def _property_key(self, node: AstNode) -> str:
        if node.attrs.get("computed"):
            return "[" + self.expr(node.children[0], _PREC_ASSIGN, False) + "]"
        key_node = node.children[0]
        if key_node.kind == K.LITERAL:
            return str(key_node.attrs["raw"])
        return str(key_node.attrs["name"])

    # --- expressions ---

    def expr(self, node: AstNode, min_prec: int, no_in: bool) -> str:
        prec, text = self._expr_inner(node, no_in)
        if prec < min_prec:
            return "(" + text + ")"
        return text

    def _expr_inner(self, node: AstNode, no_in: bool) -> tuple[int, str]:
        kind = node.kind
        if kind == K.IDENTIFIER:
            return _PREC_PRIMARY, str(node.attrs["name"])
        if kind == K.LITERAL:
            return _PREC_PRIMARY, str(node.attrs["raw"])
        if kind == K.THIS:
            return _PREC_PRIMARY, "this"
        if kind == K.SUPER:
            return _PREC_PRIMARY, "super"
        if kind == K.TEMPLATE_LITERAL:
            return _PREC_PRIMARY, self._template(node)
        if kind == K.TAGGED_TEMPLATE:
            tag = self.expr(node.children[0], _PREC_CALL, False)
            return _PREC_CALL, tag + self._template(node.children[1])
        if kind == K.ARRAY_LITERAL:
            parts = []
            for element in node.children:
                if element.kind == K.HOLE:
                    parts.append("")
                else:
                    parts.append(self.expr(element, _PREC_ASSIGN, False))
            text = "[" + ", ".join(parts) + "]"
            if node.children and node.children[-1].kind == K.HOLE:
                text = text[:-1] + ",]"
            return _PREC_PRIMARY, text
        if kind == K.SPREAD:
            return _PREC_ASSIGN, "..." + self.expr(node.children[0], _PREC_ASSIGN, False)
        if kind == K.OBJECT_LITERAL:
            parts = [self._property(p) for p in node.children]
            return _PREC_PRIMARY, "{" + ", ".join(parts) + "}"
        if kind == K.FUNCTION_EXPR:
            return _PREC_PRIMARY, self._function(node, "function")
        if kind == K.CLASS_DECL:
            return _PREC_PRIMARY, self._class(node)
        if kind == K.ARROW_FUNCTION:
            params = self._params(node.children[:-1])
            body = node.children[-1]
            if node.attrs.get("expression_body"):
                body_text = self.expr(body, _PREC_ASSIGN, False)
                if _leads_with_brace_or_function(body) or body.kind == K.SEQUENCE:
                    body_text = "(" + body_text + ")"
                return _PREC_ASSIGN, params + " => " + body_text
            return _PREC_ASSIGN, params + " => " + self.statement(body)
        if kind == K.MEMBER:
            obj = node.children[0]
            obj_text = self.expr(obj, _PREC_CALL, False)
            if obj.kind == K.LITERAL and obj.attrs.get("literal_kind") == "number":
                obj_text = "(" + obj_text + ")"
            if node.attrs.get("computed"):
                return _PREC_CALL, obj_text + "[" + self.expr(node.children[1], 0, False) + "]"
            return _PREC_CALL, obj_text + "." + str(node.attrs["property"])
        if kind == K.CALL:
            callee = self.expr(node.children[0], _PREC_CALL, False)
            args = ", ".join(self.expr(a, _PREC_ASSIGN, False) for a in node.children[1:])
            return _PREC_CALL, callee + "(" + args + ")"
        if kind == K.NEW:
            callee = node.children[0]
            callee_text = self.expr(callee, _PREC_CALL, False)
            if _spine_has_call(callee):
                callee_text = "(" + callee_text + ")"
            args = ", ".join(self.expr(a, _PREC_ASSIGN, False) for a in node.children[1:])
            return _PREC_CALL, "new " + callee_text + "(" + args + ")"
        if kind == K.UNARY:
            op = str(node.attrs["op"])
            arg = self.expr(node.children[0], _PREC_UNARY, False)
            if op in _WORD_OPS:
                return _PREC_UNARY, op + " " + arg
            if arg and arg[0] == op:
                return _PREC_UNARY, op + " " + arg
            return _PREC_UNARY, op + arg
        if kind == K.UPDATE:
            op = str(node.attrs["op"])
            if node.attrs.get("prefix"):
                return _PREC_UNARY, op + self.expr(node.children[0], _PREC_UNARY, False)
            return _PREC_POSTFIX, self.expr(node.children[0], _PREC_POSTFIX, False) + op
        if kind == K.BINARY:
            op = str(node.attrs["op"])
            if op == "in" and no_in:
                inner = self._expr_inner(node, False)[1]
                return _PREC_PRIMARY, "(" + inner + ")"
            prec = _BINARY_PREC[op]
            left = self.expr(node.children[0], prec, no_in)
            right = self.expr(node.children[1], prec + 1, no_in)
            return prec, f"{left} {op} {right}"
        if kind == K.CONDITIONAL:
            test = self.expr(node.children[0], _PREC_CONDITIONAL + 1, no_in)
            cons = self.expr(node.children[1], _PREC_ASSIGN, False)
            alt = self.expr(node.children[2], _PREC_ASSIGN, no_in)
            return _PREC_CONDITIONAL, f"{test} ? {cons} : {alt}"
        if kind == K.ASSIGNMENT:
            target = self.expr(node.children[0], _PREC_POSTFIX, False)
            value = self.expr(node.children[1], _PREC_ASSIGN, no_in)
            return _PREC_ASSIGN, f"{target} {node.attrs['op']} {value}"
        if kind == K.SEQUENCE:
            parts = [self.expr(c, _PREC_ASSIGN, no_in) for c in node.children]
            return _PREC_SEQUENCE, ", ".join(parts)
        raise ValueError(f"not an expression kind: {kind}")

    def _property(self, node: AstNode) -> str:
        pk = node.attrs.get("prop_kind")
        if node.attrs.get("shorthand"):
            return str(node.attrs["key"])
        if pk in ("get", "set"):
            fn = node.children[1]
            return (str(pk) + " " + self._property_key(node)
                    + self._params(fn.children[:-1]) + " " + self.statement(fn.children[-1]))
        if pk == "method":
            fn = node.children[1]
            return (self._property_key(node)
                    + self._params(fn.children[:-1]) + " " + self.statement(fn.children[-1]))
        return self._property_key(node) + ": " + self.expr(node.children[1], _PREC_ASSIGN, False)

    def _template(self, node: AstNode) -> str:
        quasis = list(node.attrs["quasis"])  # type: ignore[arg-type]
        out = "`" + quasis[0]
        for expr, quasi in zip(node.children, quasis[1:]):
            out += "${" + self.expr(expr, 0, False) + "}" + quasi
        return out + "`"


def _leads_with_brace_or_function(node: AstNode) -> bool:
    """Would this expression's first token be `{`, `function`, or `class`?"""
    while True:
        kind = node.kind
        if kind in (K.OBJECT_LITERAL, K.FUNCTION_EXPR):
            return True
        if kind == K.CLASS_DECL and node.attrs.get("is_expression"):
            return True
        if kind in (K.BINARY, K.ASSIGNMENT, K.CONDITIONAL):
            node = node.children[0]
        elif kind in (K.CALL, K.MEMBER, K.TAGGED_TEMPLATE):
            node = node.children[0]
        elif kind == K.SEQUENCE:
            node = node.children[0]
        elif kind == K.UPDATE and not node.attrs.get("prefix"):
            node = node.children[0]
        else:
            return False


def _spine_has_call(node: AstNode) -> bool:
    while True:
        if node.kind in (K.CALL, K.NEW):
            return True
        if node.kind in (K.MEMBER, K.TAGGED_TEMPLATE):
            node = node.children[0]
        else:
            return False
