"""Fixpoint parsing over a lexical analysis graph.

Grammar rules are applied exhaustively to the growing pool of symbol
instances (terminals first, then derived nonterminals) until a full pass adds
nothing new.  Two instances may be adjacent in a rule body when the second
starts after the first ends and no *terminal* token lies strictly between
them; on terminals this is exactly the graph's following-relation.  A parse
is accepted when a start-symbol instance spans the whole tokenized input: no
terminal ends before it starts or starts after it ends.

This parser is deliberately simple and exhaustive rather than efficient; it
keeps every distinct derivation as its own instance, so ambiguous inputs
yield one accepted instance per reading.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .lexgraph import LexGraph
from .spec_io import Grammar, GrammarRule

__all__ = [
    "ParseForest",
    "SymbolInstance",
    "extended_follows",
    "forest_to_dot",
    "forest_to_json",
    "match_rule_from",
    "parse",
    "render_trees",
]


@dataclass(frozen=True)
class SymbolInstance:
    id: int
    type_name: str
    start: int
    end: int
    children: tuple[int, ...]        # empty for terminals
    rule: GrammarRule | None         # None for terminals
    text: str | None = None          # lexeme, terminals only


@dataclass(frozen=True)
class ParseForest:
    instances: tuple[SymbolInstance, ...]  # instances[i].id == i
    accepted: tuple[int, ...]


def extended_follows(a: SymbolInstance, b: SymbolInstance, g: LexGraph) -> bool:
    """True when ``b`` may directly continue ``a``: it starts after ``a`` ends
    and no terminal token sits strictly between the two."""
    if b.start <= a.end:
        return False
    return not any(c.start > a.end and c.end < b.start for c in g.tokens)


def match_rule_from(
    rule: GrammarRule,
    first: SymbolInstance,
    store: list[SymbolInstance] | tuple[SymbolInstance, ...],
    g: LexGraph,
) -> list[tuple[int, ...]]:
    """Every way to satisfy ``rule`` starting at ``first``, as child-id tuples.

    Tuples come out in depth-first order with candidates tried by ascending
    instance id, so the result is deterministic for a given store.
    """
    if first.type_name != rule.rhs[0]:
        return []
    out: list[tuple[int, ...]] = []

    def extend(children: tuple[int, ...], k: int) -> None:
        if k == len(rule.rhs):
            out.append(children)
            return
        prev = store[children[-1]]
        for inst in store:
            if inst.type_name == rule.rhs[k] and extended_follows(prev, inst, g):
                extend(children + (inst.id,), k + 1)

    extend((first.id,), 1)
    return out


def _spans_whole_input(inst: SymbolInstance, g: LexGraph) -> bool:
    return not any(t.end < inst.start or t.start > inst.end for t in g.tokens)


def parse(g: LexGraph, grammar: Grammar) -> ParseForest:
    """Apply the grammar to a fixpoint and collect whole-input start instances.

    Requires a validated grammar (no empty productions, no single-symbol rule
    cycles); under those conditions the instance pool is finite and the loop
    terminates.  Distinct derivations stay distinct: an instance is deduped
    only on (rule lhs, exact child ids).
    """
    instances: list[SymbolInstance] = [
        SymbolInstance(t.id, t.type_name, t.start, t.end, (), None, t.text)
        for t in g.tokens
    ]
    seen: dict[tuple[str, tuple[int, ...]], int] = {}
    changed = True
    while changed:
        changed = False
        for rule in grammar.rules:
            idx = 0
            while idx < len(instances):
                first = instances[idx]
                idx += 1
                if first.type_name != rule.rhs[0]:
                    continue
                for children in match_rule_from(rule, first, instances, g):
                    key = (rule.lhs, children)
                    if key in seen:
                        continue
                    new_id = len(instances)
                    seen[key] = new_id
                    last = instances[children[-1]]
                    instances.append(
                        SymbolInstance(new_id, rule.lhs, first.start, last.end, children, rule)
                    )
                    changed = True
    accepted = tuple(
        inst.id
        for inst in instances
        if inst.type_name == grammar.start_symbol and _spans_whole_input(inst, g)
    )
    return ParseForest(tuple(instances), accepted)


def _render_instance(instances, iid: int, depth: int, lines: list[str]) -> None:
    inst = instances[iid]
    pad = "  " * depth
    if inst.children:
        lines.append(f"{pad}{inst.type_name} [{inst.start}-{inst.end}]")
        for child in inst.children:
            _render_instance(instances, child, depth + 1, lines)
    else:
        lines.append(f'{pad}{inst.type_name} "{inst.text}" [{inst.start}-{inst.end}]')


def render_trees(f: ParseForest) -> str:
    """Each accepted instance as an indented tree, in id order; '' when none."""
    blocks = []
    for root in f.accepted:
        lines: list[str] = []
        _render_instance(f.instances, root, 0, lines)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def forest_to_json(f: ParseForest) -> str:
    payload = {
        "instances": [
            {
                "id": inst.id,
                "type": inst.type_name,
                "text": inst.text,
                "start": inst.start,
                "end": inst.end,
                "children": list(inst.children),
                "rule": str(inst.rule) if inst.rule is not None else None,
            }
            for inst in f.instances
        ],
        "accepted": list(f.accepted),
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def forest_to_dot(f: ParseForest) -> str:
    """Accepted trees as a DOT digraph (parent to child, reachable nodes only)."""
    reachable: set[int] = set()
    stack = list(f.accepted)
    while stack:
        iid = stack.pop()
        if iid in reachable:
            continue
        reachable.add(iid)
        stack.extend(f.instances[iid].children)
    lines = ["digraph forest {"]
    for iid in sorted(reachable):
        inst = f.instances[iid]
        if inst.children:
            label = f"{inst.type_name}@{inst.start}-{inst.end}"
        else:
            label = f'{inst.type_name}\n"{inst.text}"@{inst.start}-{inst.end}'
        label = label.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        lines.append(f'  i{iid} [label="{label}"];')
    for iid in sorted(reachable):
        for child in f.instances[iid].children:
            lines.append(f"  i{iid} -> i{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
