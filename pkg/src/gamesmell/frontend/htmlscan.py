"""Embedded-script extraction from HTML documents.

Three sources of JavaScript inside a page: bodies of script elements that
have no src attribute (and a JavaScript-ish or absent type), on* event
handler attributes, and javascript: URLs in href attributes. The scan is
tolerant: malformed markup never raises, it just yields what was
recognizable. Attribute fragments are located by their owning tag since the
underlying parser does not report value positions.
"""

from __future__ import annotations

import re
from html.parser import HTMLParser

from gamesmell.frontend.jsast import EmbeddedKind, EmbeddedScript, Span
from gamesmell.frontend.loc import line_start_offsets

_EVENT_ATTR = re.compile(r"^on[a-z]+$")
_JS_TYPES = frozenset(
    {"", "text/javascript", "application/javascript", "application/ecmascript",
     "text/ecmascript", "module"}
)


def _is_js_type(value: str | None) -> bool:
    if value is None:
        return True
    return value.strip().lower() in _JS_TYPES


class _Extractor(HTMLParser):
    def __init__(self, text: str) -> None:
        super().__init__(convert_charrefs=True)
        self.text = text
        self.line_starts = line_start_offsets(text)
        self.scripts: list[EmbeddedScript] = []
        self._in_script = False
        self._script_chunks: list[tuple[str, int]] = []  # (data, offset)

    # --- position helpers ---

    def _offset(self) -> int:
        line, col = self.getpos()
        return self.line_starts[line - 1] + col

    def _span(self, start: int, end: int) -> Span:
        s_line = self._line_of(start)
        e_line = self._line_of(max(end - 1, start))
        return Span(
            start, end,
            s_line, start - self.line_starts[s_line - 1],
            e_line, end - self.line_starts[e_line - 1],
        )

    def _line_of(self, offset: int) -> int:
        lo, hi = 0, len(self.line_starts)
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if self.line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid
        return lo + 1

    # --- tag handling ---

    def handle_starttag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        tag_start = self._offset()
        raw = self.get_starttag_text() or ""
        tag_span = self._span(tag_start, tag_start + len(raw))
        attr_map = dict(attrs)
        for name, value in attrs:
            if value is None or not value.strip():
                continue
            if _EVENT_ATTR.match(name):
                self.scripts.append(EmbeddedScript(
                    EmbeddedKind.EVENT_ATTRIBUTE, value, tag_span, attribute=name,
                ))
            elif name == "href" and value.strip().lower().startswith("javascript:"):
                code = value.strip()[len("javascript:"):]
                if code.strip():
                    self.scripts.append(EmbeddedScript(
                        EmbeddedKind.JAVASCRIPT_HREF, code, tag_span, attribute=name,
                    ))
        if tag == "script":
            if "src" not in attr_map and _is_js_type(attr_map.get("type")):
                self._in_script = True
                self._script_chunks = []
            else:
                self._in_script = False

    def handle_endtag(self, tag: str) -> None:
        if tag != "script" or not self._in_script:
            return
        self._in_script = False
        if not self._script_chunks:
            return
        code = "".join(chunk for chunk, _ in self._script_chunks)
        if not code.strip():
            return
        start = self._script_chunks[0][1]
        end = self._script_chunks[-1][1] + len(self._script_chunks[-1][0])
        self.scripts.append(EmbeddedScript(
            EmbeddedKind.SCRIPT_TAG, code, self._span(start, end),
        ))

    def handle_data(self, data: str) -> None:
        if self._in_script and data:
            self._script_chunks.append((data, self._offset()))

    def error(self, message: str) -> None:  # pragma: no cover
        pass


def extract_embedded_scripts(text: str) -> list[EmbeddedScript]:
    parser = _Extractor(text)
    try:
        parser.feed(text)
        parser.close()
    except Exception:
        # Tolerate malformed markup; keep whatever was extracted so far.
        pass
    return parser.scripts
