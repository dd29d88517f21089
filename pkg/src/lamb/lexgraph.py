"""The lexical analysis graph: immediate-successor structure over tokens.

Token ``b`` follows token ``a`` exactly when ``b`` starts after ``a`` ends and
no token lies strictly between them (i.e. starts after ``a`` ends and ends
before ``b`` starts).  Gaps of ignored text do not block adjacency, only
tokens do.  Tokens with no predecessor form the start set; every maximal path
through the following-relation is one possible tokenization of the input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scanner import ScanResult, Token

__all__ = [
    "LexGraph",
    "build_graph",
    "enumerate_sequences",
    "graph_from_json",
    "to_dot",
    "to_json",
]


@dataclass(frozen=True)
class LexGraph:
    tokens: tuple[Token, ...]
    input_length: int
    following: tuple[tuple[int, ...], ...]  # indexed by token id, ids ascending
    preceding: tuple[tuple[int, ...], ...]
    start_set: tuple[int, ...]


def build_graph(result: ScanResult) -> LexGraph:
    """Compute following/preceding sets with a single reverse pass.

    Tokens are visited in reverse list order, so for any given successor its
    candidate predecessors arrive in descending start order.  The first one to
    link necessarily carries the largest start among all tokens ending before
    the successor; a later candidate is adjacent exactly when it ends at or
    after that offset (otherwise the first-linked token sits strictly between
    the two).  ``block_start`` caches that offset per successor.
    """
    toks = result.tokens
    n = len(toks)
    if any(toks[k].start > toks[k + 1].start for k in range(n - 1)):
        raise ValueError("tokens must be ordered by ascending start offset")
    following: list[list[int]] = [[] for _ in range(n)]
    preceding: list[list[int]] = [[] for _ in range(n)]
    block_start: list[int | None] = [None] * n
    for i in range(n - 1, -1, -1):
        t = toks[i]
        nearest_end: int | None = None  # min end among candidates that start after t
        for j in range(i + 1, n):
            tc = toks[j]
            if tc.start <= t.end:
                continue
            if nearest_end is not None and tc.start > nearest_end:
                break  # some already-seen token fits between t and everything from here on
            blocked = block_start[j]
            if blocked is None or blocked <= t.end:
                following[i].append(j)
                preceding[j].append(i)
                if blocked is None:
                    block_start[j] = t.start
            nearest_end = tc.end if nearest_end is None else min(nearest_end, tc.end)
    for p in preceding:
        p.sort()
    return LexGraph(
        tokens=toks,
        input_length=result.input_length,
        following=tuple(tuple(f) for f in following),
        preceding=tuple(tuple(p) for p in preceding),
        start_set=tuple(i for i in range(n) if not preceding[i]),
    )


def _iter_paths(g: LexGraph):
    """All maximal paths (start-set token to sink), lexicographic by token id."""
    for s in g.start_set:
        if not g.following[s]:
            yield [s]
            continue
        path = [s]
        iters = [iter(g.following[s])]
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                iters.pop()
                path.pop()
                continue
            path.append(nxt)
            successors = g.following[nxt]
            if successors:
                iters.append(iter(successors))
            else:
                yield path.copy()
                path.pop()


def enumerate_sequences(g: LexGraph, limit: int) -> tuple[list[list[int]], bool]:
    """Up to ``limit`` token-id paths plus a flag saying whether more exist."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    paths: list[list[int]] = []
    for path in _iter_paths(g):
        if len(paths) == limit:
            return paths, True
        paths.append(path)
    return paths, False


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def to_dot(g: LexGraph) -> str:
    """Render the graph as a DOT digraph; start-set tokens are double-circled."""
    lines = ["digraph lexgraph {", "  rankdir=LR;"]
    starts = set(g.start_set)
    for t in g.tokens:
        label = _dot_escape(f'{t.type_name}\n"{t.text}"@{t.start}-{t.end}')
        shape = ", shape=doublecircle" if t.id in starts else ""
        lines.append(f'  n{t.id} [label="{label}"{shape}];')
    for t in g.tokens:
        for b in g.following[t.id]:
            lines.append(f"  n{t.id} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: LexGraph) -> str:
    payload = {
        "input_length": g.input_length,
        "tokens": [
            {
                "id": t.id,
                "type": t.type_name,
                "text": t.text,
                "start": t.start,
                "end": t.end,
                "preceding": list(g.preceding[t.id]),
                "following": list(g.following[t.id]),
            }
            for t in g.tokens
        ],
        "start": list(g.start_set),
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def graph_from_json(text: str) -> LexGraph:
    data = json.loads(text)
    tokens = tuple(
        Token(rec["id"], rec["type"], rec["text"], rec["start"], rec["end"])
        for rec in data["tokens"]
    )
    return LexGraph(
        tokens=tokens,
        input_length=data["input_length"],
        following=tuple(tuple(rec["following"]) for rec in data["tokens"]),
        preceding=tuple(tuple(rec["preceding"]) for rec in data["tokens"]),
        start_set=tuple(data["start"]),
    )
