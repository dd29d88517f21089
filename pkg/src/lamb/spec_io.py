"""Parsing and validation of lexical-spec files and grammar files.

Lexical spec (UTF-8, line based)::

    token <NAME> <PRIORITY> /<REGEX>/
    ignore /<REGEX>/

PRIORITY is a decimal integer >= 1 (lower value wins at a shared start
position; ignored patterns act at priority 0).  The regex is delimited by
unescaped slashes, so ``\\/`` stands for a slash inside.  ``#`` starts a
comment, blank lines are skipped.

Grammar (UTF-8, line based)::

    start <NAME>              # optional, at most once
    <LHS> ::= <SYM> <SYM> ... # `|` separates alternatives on one line
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import pattern

__all__ = [
    "Diagnostic",
    "Grammar",
    "GrammarRule",
    "IgnoreDef",
    "LexSpec",
    "SpecError",
    "TokenDef",
    "parse_grammar",
    "parse_lex_spec",
    "render_lex_spec",
    "validate",
]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SpecError(ValueError):
    """A spec or grammar file problem, pinned to a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str


@dataclass(frozen=True)
class TokenDef:
    name: str
    priority: int
    pattern_source: str
    ordinal: int
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IgnoreDef:
    pattern_source: str
    ordinal: int
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LexSpec:
    token_defs: tuple[TokenDef, ...]
    ignore_defs: tuple[IgnoreDef, ...]


@dataclass(frozen=True)
class GrammarRule:
    lhs: str
    rhs: tuple[str, ...]
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{self.lhs} ::= {' '.join(self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    rules: tuple[GrammarRule, ...]
    start_symbol: str


def _take_regex(rest: str, lineno: int) -> str:
    """Extract the pattern between unescaped slashes; the tail may only hold a comment."""
    if not rest.startswith("/"):
        raise SpecError(lineno, "expected /REGEX/")
    i = 1
    while i < len(rest):
        if rest[i] == "\\":
            i += 2
            continue
        if rest[i] == "/":
            break
        i += 1
    if i >= len(rest) or rest[i] != "/":
        raise SpecError(lineno, "unterminated /REGEX/")
    source = rest[1:i]
    if not source:
        raise SpecError(lineno, "empty pattern")
    trailer = rest[i + 1:].strip()
    if trailer and not trailer.startswith("#"):
        raise SpecError(lineno, f"unexpected text after pattern: {trailer!r}")
    return source


def _compile_checked(source: str, lineno: int) -> None:
    try:
        pattern.compile(source)
    except pattern.PatternError as exc:
        raise SpecError(lineno, f"bad pattern: {exc}") from exc


def parse_lex_spec(text: str) -> LexSpec:
    """Parse a lexical spec file into a LexSpec; raises SpecError on the first problem."""
    token_defs: list[TokenDef] = []
    ignore_defs: list[IgnoreDef] = []
    seen_names: dict[str, int] = {}
    ordinal = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword = line.split(None, 1)[0]
        if keyword == "token":
            parts = line.split(None, 3)
            if len(parts) != 4:
                raise SpecError(lineno, "expected 'token NAME PRIORITY /REGEX/'")
            _, name, prio_text, rest = parts
            if not _NAME.match(name):
                raise SpecError(lineno, f"bad token name {name!r}")
            try:
                priority = int(prio_text)
            except ValueError:
                raise SpecError(lineno, f"priority must be an integer, got {prio_text!r}")
            if priority < 1:
                raise SpecError(lineno, f"priority must be >= 1, got {priority}")
            if name in seen_names:
                raise SpecError(lineno, f"duplicate token name {name!r} (first defined on line {seen_names[name]})")
            source = _take_regex(rest, lineno)
            _compile_checked(source, lineno)
            seen_names[name] = lineno
            token_defs.append(TokenDef(name, priority, source, ordinal, lineno))
        elif keyword == "ignore":
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise SpecError(lineno, "expected 'ignore /REGEX/'")
            source = _take_regex(parts[1], lineno)
            _compile_checked(source, lineno)
            ignore_defs.append(IgnoreDef(source, ordinal, lineno))
        else:
            raise SpecError(lineno, f"unrecognized directive {keyword!r}")
        ordinal += 1
    if not token_defs:
        raise SpecError(1, "no token definitions")
    return LexSpec(tuple(token_defs), tuple(ignore_defs))


def _escape_slashes(source: str) -> str:
    out = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "\\" and i + 1 < len(source):
            out.append(source[i:i + 2])
            i += 2
            continue
        out.append("\\/" if ch == "/" else ch)
        i += 1
    return "".join(out)


def render_lex_spec(spec: LexSpec) -> str:
    """Canonical text for a LexSpec; re-parsing it yields an equal model."""
    defs = sorted([*spec.token_defs, *spec.ignore_defs], key=lambda d: d.ordinal)
    lines = []
    for d in defs:
        if isinstance(d, TokenDef):
            lines.append(f"token {d.name} {d.priority} /{_escape_slashes(d.pattern_source)}/")
        else:
            lines.append(f"ignore /{_escape_slashes(d.pattern_source)}/")
    return "\n".join(lines) + "\n"


def parse_grammar(text: str, spec: LexSpec) -> Grammar:
    """Parse a grammar file against ``spec``; raises SpecError on the first problem."""
    rules: list[GrammarRule] = []
    start: str | None = None
    start_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "::=" not in line:
            parts = line.split()
            if parts[0] == "start":
                if len(parts) != 2 or not _NAME.match(parts[1]):
                    raise SpecError(lineno, "expected 'start NAME'")
                if start is not None:
                    raise SpecError(lineno, f"duplicate start directive (first on line {start_line})")
                start, start_line = parts[1], lineno
                continue
            raise SpecError(lineno, "expected 'LHS ::= SYM SYM ...'")
        lhs_text, rhs_text = line.split("::=", 1)
        lhs = lhs_text.strip()
        if not _NAME.match(lhs):
            raise SpecError(lineno, f"bad rule name {lhs!r}")
        for alternative in rhs_text.split("|"):
            symbols = alternative.split()
            if not symbols:
                raise SpecError(lineno, f"empty rhs in rule for {lhs!r}")
            for sym in symbols:
                if not _NAME.match(sym):
                    raise SpecError(lineno, f"bad symbol {sym!r}")
            rules.append(GrammarRule(lhs, tuple(symbols), lineno))
    if not rules:
        raise SpecError(1, "no grammar rules")
    grammar = Grammar(tuple(rules), start if start is not None else rules[0].lhs)
    problems = _grammar_diagnostics(grammar, spec)
    if problems:
        first = problems[0]
        raise SpecError(first.line, first.message)
    return grammar


def _spec_diagnostics(spec: LexSpec) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    if not spec.token_defs:
        out.append(Diagnostic(1, "no token definitions"))
    seen: dict[str, TokenDef] = {}
    for d in spec.token_defs:
        if not _NAME.match(d.name):
            out.append(Diagnostic(d.line, f"bad token name {d.name!r}"))
        if d.priority < 1:
            out.append(Diagnostic(d.line, f"priority must be >= 1, got {d.priority}"))
        if d.name in seen:
            out.append(Diagnostic(d.line, f"duplicate token name {d.name!r}"))
        seen[d.name] = d
    for d in (*spec.token_defs, *spec.ignore_defs):
        try:
            pattern.compile(d.pattern_source)
        except pattern.PatternError as exc:
            out.append(Diagnostic(d.line, f"bad pattern: {exc}"))
    return out


def _unit_cycle(rules: tuple[GrammarRule, ...], nonterminals: set[str]) -> list[str] | None:
    """Find a cycle among single-symbol productions over nonterminals, if any."""
    successors: dict[str, list[str]] = {}
    for r in rules:
        if len(r.rhs) == 1 and r.rhs[0] in nonterminals:
            successors.setdefault(r.lhs, []).append(r.rhs[0])
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(node: str, trail: list[str]) -> list[str] | None:
        state[node] = 1
        trail.append(node)
        for nxt in successors.get(node, ()):
            if state.get(nxt) == 1:
                return trail[trail.index(nxt):] + [nxt]
            if state.get(nxt, 0) == 0:
                cycle = visit(nxt, trail)
                if cycle:
                    return cycle
        trail.pop()
        state[node] = 2
        return None

    for node in successors:
        if state.get(node, 0) == 0:
            cycle = visit(node, [])
            if cycle:
                return cycle
    return None


def _grammar_diagnostics(grammar: Grammar, spec: LexSpec) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    token_names = {d.name for d in spec.token_defs}
    lhs_names = {r.lhs for r in grammar.rules}
    for r in grammar.rules:
        if r.lhs in token_names:
            out.append(Diagnostic(r.line, f"rule name {r.lhs!r} collides with a token name"))
        if not r.rhs:
            out.append(Diagnostic(r.line, f"empty rhs in rule for {r.lhs!r}"))
        for sym in r.rhs:
            if sym not in token_names and sym not in lhs_names:
                out.append(Diagnostic(r.line, f"undefined symbol {sym!r}"))
    if grammar.start_symbol not in lhs_names:
        out.append(Diagnostic(1, f"start symbol {grammar.start_symbol!r} has no rule"))
    cycle = _unit_cycle(grammar.rules, lhs_names - token_names)
    if cycle:
        line = next((r.line for r in grammar.rules if r.lhs == cycle[0]), 1)
        out.append(Diagnostic(line, "unit-production cycle: " + " -> ".join(cycle)))
    return out


def validate(spec: LexSpec, grammar: Grammar | None = None) -> list[Diagnostic]:
    """Return every invariant violation at once; an empty list means ok."""
    out = _spec_diagnostics(spec)
    if grammar is not None:
        out.extend(_grammar_diagnostics(grammar, spec))
    return out
