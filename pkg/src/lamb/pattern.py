r"""Regular-expression subset with anchored longest-match queries.

Supported syntax: literal characters; the escapes \. \/ \\ \+ \- \* \? \( \)
\[ \] \| \& \n \t; character classes ``[...]`` with ranges and leading ``^``
negation; grouping ``(...)``; alternation ``|``; the repetitions ``*`` ``+``
``?``; and ``.`` for any character except newline.  No anchors, no
backreferences, no counted repetition.

Patterns compile to a small Thompson-style NFA that is simulated breadth
first, so a match query costs time linear in the remaining input regardless
of the pattern.  Matching is anchored at the query position, every
alternation branch competes, and the longest hit wins.  Zero-length matches
are never reported.
"""

from __future__ import annotations

__all__ = ["Pattern", "PatternError", "compile"]

_ESCAPES = {
    ".": ".", "/": "/", "\\": "\\", "+": "+", "-": "-", "*": "*", "?": "?",
    "(": "(", ")": ")", "[": "[", "]": "]", "|": "|", "&": "&",
    "n": "\n", "t": "\t",
}


class PatternError(ValueError):
    """Raised when a pattern source does not conform to the supported subset."""

    def __init__(self, message: str, source: str, position: int):
        super().__init__(f"{message} in pattern {source!r} at position {position}")
        self.source = source
        self.position = position


def _label_matches(label: tuple, ch: str) -> bool:
    kind = label[0]
    if kind == "ch":
        return ch == label[1]
    if kind == "any":
        return ch != "\n"
    # ("set", ranges, negated)
    hit = any(lo <= ch <= hi for lo, hi in label[1])
    return hit != label[2]


class Pattern:
    """Compiled recognizer for one pattern; immutable, safe to share."""

    __slots__ = ("source", "_edges", "_closures", "_start_closure", "_accept")

    def __init__(self, source, edges, closures, start, accept):
        self.source = source
        self._edges = edges
        self._closures = closures
        self._start_closure = closures[start]
        self._accept = accept

    def __repr__(self) -> str:
        return f"Pattern({self.source!r})"

    def match_longest_at(self, text: str, pos: int) -> int | None:
        """Length of the longest match anchored exactly at ``pos``, or None.

        Returns None when nothing (or only the empty string) matches; a
        reported length is always >= 1.
        """
        if not 0 <= pos <= len(text):
            raise ValueError(f"position {pos} outside input of length {len(text)}")
        edges = self._edges
        closures = self._closures
        accept = self._accept
        current = self._start_closure
        best = None
        i = pos
        n = len(text)
        while current and i < n:
            ch = text[i]
            moved = set()
            for state in current:
                for label, target in edges[state]:
                    if _label_matches(label, ch):
                        moved.add(target)
            if not moved:
                break
            nxt: set[int] = set()
            for state in moved:
                nxt |= closures[state]
            current = nxt
            i += 1
            if accept in current:
                best = i - pos
        return best


def _epsilon_closures(eps: list[list[int]]) -> list[frozenset[int]]:
    closures = []
    for s in range(len(eps)):
        seen = {s}
        stack = [s]
        while stack:
            for t in eps[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        closures.append(frozenset(seen))
    return closures


class _Compiler:
    """Recursive-descent compiler emitting NFA fragments (start, accept)."""

    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.edges: list[list[tuple]] = []
        self.eps: list[list[int]] = []

    def fail(self, message: str, position: int | None = None):
        raise PatternError(message, self.source, self.pos if position is None else position)

    def peek(self) -> str | None:
        return self.source[self.pos] if self.pos < len(self.source) else None

    def take(self) -> str:
        ch = self.source[self.pos]
        self.pos += 1
        return ch

    def new_state(self) -> int:
        self.edges.append([])
        self.eps.append([])
        return len(self.edges) - 1

    def link(self, a: int, b: int) -> None:
        self.eps[a].append(b)

    def edge(self, label: tuple) -> tuple[int, int]:
        s, a = self.new_state(), self.new_state()
        self.edges[s].append((label, a))
        return s, a

    def compile(self) -> Pattern:
        if not self.source:
            self.fail("empty pattern", 0)
        start, accept = self.alternation()
        if self.pos != len(self.source):
            # alternation only stops early on an unexpected ')'
            self.fail("unmatched ')'")
        closures = _epsilon_closures(self.eps)
        edges = [tuple(e) for e in self.edges]
        return Pattern(self.source, edges, closures, start, accept)

    def alternation(self) -> tuple[int, int]:
        frags = [self.sequence()]
        while self.peek() == "|":
            self.take()
            frags.append(self.sequence())
        if len(frags) == 1:
            return frags[0]
        s, a = self.new_state(), self.new_state()
        for fs, fa in frags:
            self.link(s, fs)
            self.link(fa, a)
        return s, a

    def sequence(self) -> tuple[int, int]:
        frags = []
        while (ch := self.peek()) is not None and ch not in ")|":
            frags.append(self.repetition())
        if not frags:
            s = self.new_state()
            return s, s
        for (_, left_end), (right_start, _) in zip(frags, frags[1:]):
            self.link(left_end, right_start)
        return frags[0][0], frags[-1][1]

    def repetition(self) -> tuple[int, int]:
        frag = self.atom()
        ch = self.peek()
        if ch in ("*", "+", "?"):
            self.take()
            frag = self._repeat(frag, ch)
            if self.peek() in ("*", "+", "?"):
                self.fail("multiple repeat")
        return frag

    def _repeat(self, frag: tuple[int, int], op: str) -> tuple[int, int]:
        fs, fa = frag
        s, a = self.new_state(), self.new_state()
        self.link(s, fs)
        self.link(fa, a)
        if op in "*?":
            self.link(s, a)
        if op in "*+":
            self.link(fa, fs)
        return s, a

    def atom(self) -> tuple[int, int]:
        ch = self.peek()
        if ch == "(":
            opened = self.pos
            self.take()
            frag = self.alternation()
            if self.peek() != ")":
                self.fail("unbalanced group", opened)
            self.take()
            return frag
        if ch == "[":
            return self.char_class()
        if ch in ("*", "+", "?"):
            self.fail("nothing to repeat")
        if ch == ".":
            self.take()
            return self.edge(("any",))
        if ch == "\\":
            return self.edge(("ch", self.escape()))
        self.take()
        return self.edge(("ch", ch))

    def escape(self) -> str:
        at = self.pos
        self.take()  # backslash
        ch = self.peek()
        if ch is None:
            self.fail("incomplete escape", at)
        if ch not in _ESCAPES:
            self.fail(f"unsupported escape '\\{ch}'", at)
        self.take()
        return _ESCAPES[ch]

    def char_class(self) -> tuple[int, int]:
        opened = self.pos
        self.take()  # [
        negated = False
        if self.peek() == "^":
            self.take()
            negated = True
        ranges: list[tuple[str, str]] = []
        while True:
            ch = self.peek()
            if ch is None:
                self.fail("unterminated character class", opened)
            if ch == "]":
                if not ranges:
                    self.fail("empty character class", opened)
                self.take()
                break
            lo = self.class_char()
            if (
                self.peek() == "-"
                and self.pos + 1 < len(self.source)
                and self.source[self.pos + 1] != "]"
            ):
                dash = self.pos
                self.take()
                hi = self.class_char()
                if lo > hi:
                    self.fail(f"bad character range {lo!r}-{hi!r}", dash)
                ranges.append((lo, hi))
            else:
                ranges.append((lo, lo))
        return self.edge(("set", tuple(ranges), negated))

    def class_char(self) -> str:
        if self.peek() == "\\":
            return self.escape()
        return self.take()


def compile(source: str) -> Pattern:
    """Compile ``source``; raises PatternError with a position on bad syntax."""
    return _Compiler(source).compile()
