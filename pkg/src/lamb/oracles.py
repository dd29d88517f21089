"""Independent reference implementations for differential checking.

These restate the scanning semantics and the adjacency definition in the most
literal way possible, sharing no logic with `scanner.scan` or
`lexgraph.build_graph`.  They exist to be compared against the production
paths (the CLI's ``--oracle-check`` does exactly that), so keep them naive.
"""

from __future__ import annotations

from . import pattern
from .lexgraph import LexGraph
from .scanner import ScanResult, Token
from .spec_io import LexSpec

__all__ = ["build_graph_oracle", "scan_oracle"]


def scan_oracle(spec: LexSpec, text: str) -> ScanResult:
    """Same contract as `scanner.scan`, written from scratch.

    Watermarks live in a dict keyed by matcher index, the visiting order is
    recomputed per position, and the post-match watermark target is found by
    iterative lowering instead of a one-shot minimum.
    """
    entries: list[tuple[int, int, str | None, pattern.Pattern]] = []
    for d in spec.ignore_defs:
        entries.append((0, d.ordinal, None, pattern.compile(d.pattern_source)))
    for d in spec.token_defs:
        entries.append((d.priority, d.ordinal, d.name, pattern.compile(d.pattern_source)))
    watermark = {k: -1 for k in range(len(entries))}
    tokens: list[Token] = []
    ignored: list[tuple[int, int]] = []
    for i in range(len(text)):
        last_priority = -1  # -1 = nothing matched here yet
        order = sorted(range(len(entries)), key=lambda k: (entries[k][0], entries[k][1]))
        for k in order:
            priority, _, name, prog = entries[k]
            if watermark[k] >= i:
                continue
            if last_priority == 0:
                break
            if last_priority != -1 and priority > last_priority:
                break
            length = prog.match_longest_at(text, i)
            if length is None:
                continue
            last_priority = priority
            end = i + length - 1
            if priority == 0:
                ignored.append((i, end))
            else:
                tokens.append(Token(len(tokens), name, text[i:end + 1], i, end))
            target = end
            for other in watermark:
                if i <= watermark[other] <= target:
                    target = watermark[other]
            watermark[k] = target
            for other in range(len(entries)):
                if entries[other][0] > priority:
                    watermark[other] = target
    return ScanResult(tuple(tokens), len(text), tuple(ignored))


def build_graph_oracle(result: ScanResult) -> LexGraph:
    """Adjacency straight from the definition, one triple loop, no shortcuts."""
    toks = result.tokens
    following: dict[int, list[int]] = {t.id: [] for t in toks}
    preceding: dict[int, list[int]] = {t.id: [] for t in toks}
    for a in toks:
        for b in toks:
            if a.end < b.start and not any(
                c.start > a.end and c.end < b.start for c in toks
            ):
                following[a.id].append(b.id)
                preceding[b.id].append(a.id)
    return LexGraph(
        tokens=toks,
        input_length=result.input_length,
        following=tuple(tuple(sorted(following[t.id])) for t in toks),
        preceding=tuple(tuple(sorted(preceding[t.id])) for t in toks),
        start_set=tuple(t.id for t in toks if not preceding[t.id]),
    )
