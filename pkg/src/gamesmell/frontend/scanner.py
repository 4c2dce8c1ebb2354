"""ECMAScript tokenizer.

Produces one token at a time with exact offsets, line/column endpoints, and a
newline-before flag for semicolon insertion. The `/` character is ambiguous in
the grammar (division versus regex start), so the scanner takes a regex_ok
hint per call and supports restoring to a token's start so the parser can
rescan under the other interpretation. Template literals are scanned in parts:
head (backtick to `${` or closing backtick) and continuations (`}` to the next
boundary), because arbitrary expressions nest inside substitutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Final

LINE_TERMINATORS: Final = "\n\r  "

KEYWORDS: Final = frozenset(
    {
        "break", "case", "catch", "class", "const", "continue", "debugger",
        "default", "delete", "do", "else", "enum", "export", "extends",
        "false", "finally", "for", "function", "if", "import", "in",
        "instanceof", "let", "new", "null", "return", "super", "switch",
        "this", "throw", "true", "try", "typeof", "var", "void", "while",
        "with",
    }
)

# Longest match first per leading character.
_PUNCTUATORS: Final = (
    ">>>=",
    "===", "!==", ">>>", "<<=", ">>=", "...",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=", "<<", ">>", "=>",
    "{", "}", "(", ")", "[", "]", ";", ",", "<", ">", "+", "-", "*", "/",
    "%", "&", "|", "^", "!", "~", "?", ":", "=", ".",
)
_PUNCT_BY_CHAR: Final[dict[str, tuple[str, ...]]] = {}
for _p in _PUNCTUATORS:
    _PUNCT_BY_CHAR.setdefault(_p[0], ())
for _p in _PUNCTUATORS:
    _PUNCT_BY_CHAR[_p[0]] = _PUNCT_BY_CHAR[_p[0]] + (_p,)

_ESCAPE_MAP: Final = {
    "n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f", "v": "\v",
}


class ScanError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # ident | keyword | num | str | template | regex | punct | eof
    value: str
    start: int
    end: int
    line: int
    col: int
    end_line: int
    end_col: int
    nl_before: bool
    payload: object = None

    def is_punct(self, *values: str) -> bool:
        return self.kind == "punct" and self.value in values

    def is_keyword(self, *values: str) -> bool:
        return self.kind == "keyword" and self.value in values


def regex_allowed_after(prev: Token | None) -> bool:
    """Heuristic used when scanning ahead of the parser's own context."""
    if prev is None:
        return True
    if prev.kind in ("num", "str", "regex", "ident"):
        return False
    if prev.kind == "template":
        return prev.payload[2] == "${"  # type: ignore[index]
    if prev.kind == "keyword":
        return prev.value not in ("this", "super", "true", "false", "null")
    if prev.kind == "punct":
        return prev.value not in (")", "]", "}", "++", "--")
    return True


def _is_ident_start(ch: str) -> bool:
    return ch == "_" or ch == "$" or ch.isalpha() or (
        ord(ch) > 127 and ("a" + ch).isidentifier()
    )


def _is_ident_part(ch: str) -> bool:
    return (
        ch == "_"
        or ch == "$"
        or ch.isalnum()
        or ch in "‌‍"
        or (ord(ch) > 127 and ("a" + ch).isidentifier())
    )


class Scanner:
    __slots__ = ("text", "n", "pos", "line", "line_start", "nl_pending")

    def __init__(self, text: str) -> None:
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.nl_pending = False

    # --- public interface ---

    def next_token(self, regex_ok: bool) -> Token:
        self._skip_blanks()
        nl = self.nl_pending
        start = self.pos
        line = self.line
        col = start - self.line_start
        if start >= self.n:
            self.nl_pending = False
            return Token("eof", "", start, start, line, col, line, col, nl)
        kind, value, payload = self._scan_raw(regex_ok, line, col)
        end = self.pos
        self._track_lines(start, end)
        tok = Token(
            kind, value, start, end, line, col,
            self.line, end - self.line_start, nl, payload,
        )
        self.nl_pending = False
        return tok

    def next_template_continuation(self) -> Token:
        """Scan the template part that resumes at a substitution's `}`."""
        nl = self.nl_pending
        start = self.pos
        line = self.line
        col = start - self.line_start
        if start >= self.n or self.text[start] != "}":
            raise ScanError("unterminated template literal", line, col)
        kind, value, payload = self._scan_template_part(line, col)
        end = self.pos
        self._track_lines(start, end)
        tok = Token(
            kind, value, start, end, line, col,
            self.line, end - self.line_start, nl, payload,
        )
        self.nl_pending = False
        return tok

    def restore_to(self, tok: Token) -> None:
        self.pos = tok.start
        self.line = tok.line
        self.line_start = tok.start - tok.col
        self.nl_pending = tok.nl_before

    # --- scanning helpers ---

    def _skip_blanks(self) -> None:
        text, n = self.text, self.n
        while self.pos < n:
            ch = text[self.pos]
            if ch in LINE_TERMINATORS:
                self.nl_pending = True
                if ch == "\r" and self.pos + 1 < n and text[self.pos + 1] == "\n":
                    self.pos += 1
                self.pos += 1
                self.line += 1
                self.line_start = self.pos
            elif ch.isspace() or ch == "﻿":
                self.pos += 1
            elif ch == "/" and self.pos + 1 < n and text[self.pos + 1] == "/":
                self.pos += 2
                while self.pos < n and text[self.pos] not in LINE_TERMINATORS:
                    self.pos += 1
            elif ch == "/" and self.pos + 1 < n and text[self.pos + 1] == "*":
                close = text.find("*/", self.pos + 2)
                if close < 0:
                    raise ScanError(
                        "unterminated block comment",
                        self.line, self.pos - self.line_start,
                    )
                self._track_lines(self.pos, close)
                self.pos = close + 2
            else:
                break

    def _track_lines(self, start: int, end: int) -> None:
        text = self.text
        i = start
        while i < end:
            ch = text[i]
            if ch in LINE_TERMINATORS:
                self.nl_pending = True
                if ch == "\r" and i + 1 < end and text[i + 1] == "\n":
                    i += 1
                self.line += 1
                i += 1
                self.line_start = i
            else:
                i += 1

    def _scan_raw(self, regex_ok: bool, line: int, col: int) -> tuple[str, str, object]:
        text = self.text
        ch = text[self.pos]
        if _is_ident_start(ch) or ch == "\\":
            return self._scan_identifier(line, col)
        if ch.isdigit() or (ch == "." and self.pos + 1 < self.n and text[self.pos + 1].isdigit()):
            return self._scan_number(line, col)
        if ch in "'\"":
            return self._scan_string(line, col)
        if ch == "`":
            return self._scan_template_part(line, col)
        if ch == "/" and regex_ok:
            return self._scan_regex(line, col)
        for punct in _PUNCT_BY_CHAR.get(ch, ()):
            if text.startswith(punct, self.pos):
                self.pos += len(punct)
                return "punct", punct, None
        raise ScanError(f"unexpected character {ch!r}", line, col)

    def _scan_identifier(self, line: int, col: int) -> tuple[str, str, object]:
        text, n = self.text, self.n
        i = self.pos
        chars: list[str] = []
        escaped = False
        while i < n:
            ch = text[i]
            if ch == "\\":
                if i + 1 >= n or text[i + 1] != "u":
                    raise ScanError("invalid identifier escape", line, col)
                code, i = self._scan_unicode_escape(i + 2, line, col)
                chars.append(chr(code))
                escaped = True
            elif (chars and _is_ident_part(ch)) or (not chars and _is_ident_start(ch)):
                chars.append(ch)
                i += 1
            else:
                break
        if not chars:
            raise ScanError("invalid identifier", line, col)
        self.pos = i
        name = "".join(chars)
        kind = "keyword" if not escaped and name in KEYWORDS else "ident"
        return kind, name, None

    def _scan_unicode_escape(self, i: int, line: int, col: int) -> tuple[int, int]:
        text, n = self.text, self.n
        if i < n and text[i] == "{":
            j = text.find("}", i + 1)
            if j < 0 or j == i + 1 or j - i - 1 > 6:
                raise ScanError("invalid unicode escape", line, col)
            digits = text[i + 1 : j]
            end = j + 1
        else:
            digits = text[i : i + 4]
            end = i + 4
        try:
            code = int(digits, 16)
        except ValueError:
            raise ScanError("invalid unicode escape", line, col) from None
        if len(digits) < 4 and not text[i : i + 1] == "{":
            raise ScanError("invalid unicode escape", line, col)
        if code > 0x10FFFF:
            raise ScanError("invalid unicode escape", line, col)
        return code, end

    def _scan_number(self, line: int, col: int) -> tuple[str, str, object]:
        text, n = self.text, self.n
        start = self.pos
        i = start
        value: float
        if text[i] == "0" and i + 1 < n and text[i + 1] in "xX":
            i += 2
            j = i
            while i < n and text[i] in "0123456789abcdefABCDEF":
                i += 1
            if i == j:
                raise ScanError("invalid number", line, col)
            value = float(int(text[j:i], 16))
        elif text[i] == "0" and i + 1 < n and text[i + 1] in "oO":
            i += 2
            j = i
            while i < n and text[i] in "01234567":
                i += 1
            if i == j:
                raise ScanError("invalid number", line, col)
            value = float(int(text[j:i], 8))
        elif text[i] == "0" and i + 1 < n and text[i + 1] in "bB":
            i += 2
            j = i
            while i < n and text[i] in "01":
                i += 1
            if i == j:
                raise ScanError("invalid number", line, col)
            value = float(int(text[j:i], 2))
        elif text[i] == "0" and i + 1 < n and text[i + 1].isdigit():
            # Legacy octal; falls back to decimal when 8 or 9 appears.
            i += 1
            while i < n and text[i].isdigit():
                i += 1
            raw = text[start:i]
            value = float(int(raw, 8)) if all(c in "01234567" for c in raw) else float(raw)
        else:
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
            if i < n and text[i] in "eE":
                j = i + 1
                if j < n and text[j] in "+-":
                    j += 1
                if j >= n or not text[j].isdigit():
                    raise ScanError("invalid number", line, col)
                i = j
                while i < n and text[i].isdigit():
                    i += 1
            value = float(text[start:i])
        if i < n and (_is_ident_start(text[i]) or text[i].isdigit()):
            raise ScanError("invalid number", line, col)
        self.pos = i
        return "num", text[start:i], value

    def _scan_string(self, line: int, col: int) -> tuple[str, str, object]:
        text, n = self.text, self.n
        start = self.pos
        quote = text[start]
        i = start + 1
        cooked: list[str] = []
        while True:
            if i >= n:
                raise ScanError("unterminated string literal", line, col)
            ch = text[i]
            if ch == quote:
                i += 1
                break
            if ch in "\n\r":
                raise ScanError("unterminated string literal", line, col)
            if ch == "\\":
                part, i = self._decode_escape(i + 1, line, col)
                cooked.append(part)
            else:
                cooked.append(ch)
                i += 1
        self.pos = i
        return "str", text[start:i], "".join(cooked)

    def _decode_escape(self, i: int, line: int, col: int) -> tuple[str, int]:
        text, n = self.text, self.n
        if i >= n:
            raise ScanError("unterminated string literal", line, col)
        ch = text[i]
        if ch in LINE_TERMINATORS:
            if ch == "\r" and i + 1 < n and text[i + 1] == "\n":
                i += 1
            return "", i + 1
        if ch in _ESCAPE_MAP:
            return _ESCAPE_MAP[ch], i + 1
        if ch == "x":
            digits = text[i + 1 : i + 3]
            if len(digits) != 2:
                raise ScanError("invalid hex escape", line, col)
            try:
                return chr(int(digits, 16)), i + 3
            except ValueError:
                raise ScanError("invalid hex escape", line, col) from None
        if ch == "u":
            code, end = self._scan_unicode_escape(i + 1, line, col)
            return chr(code), end
        if ch in "01234567":
            j = i
            while j < i + 3 and j < n and text[j] in "01234567" and int(text[i : j + 1], 8) < 256:
                j += 1
            return chr(int(text[i:j], 8)), j
        return ch, i + 1

    def _scan_regex(self, line: int, col: int) -> tuple[str, str, object]:
        text, n = self.text, self.n
        start = self.pos
        i = start + 1
        in_class = False
        while True:
            if i >= n:
                raise ScanError("unterminated regular expression", line, col)
            ch = text[i]
            if ch in LINE_TERMINATORS:
                raise ScanError("unterminated regular expression", line, col)
            if ch == "\\":
                i += 2
                continue
            if in_class:
                if ch == "]":
                    in_class = False
            elif ch == "[":
                in_class = True
            elif ch == "/":
                i += 1
                break
            i += 1
        while i < n and _is_ident_part(text[i]):
            i += 1
        self.pos = i
        return "regex", text[start:i], None

    def _scan_template_part(self, line: int, col: int) -> tuple[str, str, object]:
        text, n = self.text, self.n
        start = self.pos
        i = start + 1  # skip the opening backtick or the closing brace
        inner_start = i
        cooked: list[str] = []
        while True:
            if i >= n:
                raise ScanError("unterminated template literal", line, col)
            ch = text[i]
            if ch == "`":
                inner_end = i
                i += 1
                closed = "`"
                break
            if ch == "$" and i + 1 < n and text[i + 1] == "{":
                inner_end = i
                i += 2
                closed = "${"
                break
            if ch == "\\":
                part, i = self._decode_escape(i + 1, line, col)
                cooked.append(part)
            else:
                cooked.append(ch)
                i += 1
        self.pos = i
        raw_inner = text[inner_start:inner_end]
        return "template", text[start:i], (raw_inner, "".join(cooked), closed)
