"""Line-of-code counting.

A line counts as code when at least one source token (never a comment, never
whitespace) overlaps it. The index is built from the token intervals the
parser consumed, so comments and blank space are excluded by construction.
Multi-line tokens (template literals) mark every line they cross.
"""

from __future__ import annotations

from bisect import bisect_right

from gamesmell.frontend.jsast import Span


def line_start_offsets(text: str) -> list[int]:
    """Offsets where each line begins; index 0 is line 1."""
    starts = [0]
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in "\n\r  ":
            if ch == "\r" and i + 1 < n and text[i + 1] == "\n":
                i += 1
            starts.append(i + 1)
        i += 1
    return starts


class LocIndex:
    """Maps character ranges to the set of code lines they touch."""

    __slots__ = ("_line_starts", "_starts", "_ends")

    def __init__(self, text: str, token_intervals: list[tuple[int, int]]) -> None:
        self._line_starts = line_start_offsets(text)
        self._starts = [s for s, _ in token_intervals]
        self._ends = [e for _, e in token_intervals]

    def line_of(self, offset: int) -> int:
        return bisect_right(self._line_starts, offset)

    def count_lines(self, start: int, end: int) -> int:
        if end <= start:
            return 0
        count = 0
        prev_line = 0
        i = bisect_right(self._ends, start)
        while i < len(self._starts) and self._starts[i] < end:
            cs = max(self._starts[i], start)
            ce = min(self._ends[i], end)
            if cs < ce:
                l1 = self.line_of(cs)
                l2 = self.line_of(ce - 1)
                if l2 > prev_line:
                    count += l2 - max(l1 - 1, prev_line)
                    prev_line = l2
            i += 1
        return count

    def code_lines(self, start: int, end: int) -> set[int]:
        """Distinct line numbers with code inside [start, end)."""
        lines: set[int] = set()
        if end <= start:
            return lines
        i = bisect_right(self._ends, start)
        while i < len(self._starts) and self._starts[i] < end:
            cs = max(self._starts[i], start)
            ce = min(self._ends[i], end)
            if cs < ce:
                lines.update(range(self.line_of(cs), self.line_of(ce - 1) + 1))
            i += 1
        return lines


def count_loc(span: Span, unit) -> int:
    """Code lines the span touches; 0 when the unit never parsed."""
    index = getattr(unit, "loc_index", None)
    if index is None:
        return 0
    return index.count_lines(span.start, span.end)


def unit_loc(unit) -> int:
    index = getattr(unit, "loc_index", None)
    if index is None:
        return 0
    return index.count_lines(0, len(unit.text))
