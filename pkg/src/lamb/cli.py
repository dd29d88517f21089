"""Command-line front end: spec -> scan -> graph -> sequences or parse.

Exit codes: 0 on success (for ``parse``, at least one accepted tree), 2 when
``parse`` finds no valid sentence, 1 for spec/grammar/IO/usage errors and for
``--oracle-check`` divergences.  Diagnostics go to stderr, payload to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lexgraph, oracles, parser, scanner, spec_io

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for the parse contract
        raise _UsageError(message)


def _build_cli() -> _ArgumentParser:
    top = _ArgumentParser(prog="lamb", description="Ambiguity-aware lexical analysis")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--spec", required=True, help="lexical spec file")
        p.add_argument("--input", required=True, help="input file, or - for stdin")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument(
            "--oracle-check",
            action="store_true",
            help="cross-check scan and graph against the reference implementations",
        )

    common(sub.add_parser("scan", help="list all tokens / emit the token graph"),
           ("text", "json", "dot"))
    seq = sub.add_parser("sequences", help="enumerate the possible token sequences")
    common(seq, ("text", "json"))
    seq.add_argument("--limit", type=int, default=1000, help="sequence cap (default 1000)")
    par = sub.add_parser("parse", help="parse the token graph against a grammar")
    common(par, ("text", "json", "dot"))
    par.add_argument("--grammar", required=True, help="grammar file")
    return top


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _warn(message: str) -> None:
    print(f"lamb: warning: {message}", file=sys.stderr)


def run(argv: list[str]) -> int:
    cli = _build_cli()
    try:
        args = cli.parse_args(argv)
    except _UsageError as exc:
        print(f"lamb: error: {exc}", file=sys.stderr)
        return 1

    try:
        spec = spec_io.parse_lex_spec(_read(args.spec))
        grammar = None
        if args.command == "parse":
            grammar = spec_io.parse_grammar(_read(args.grammar), spec)
        text = _read(args.input)
    except OSError as exc:
        print(f"lamb: error: {exc}", file=sys.stderr)
        return 1
    except spec_io.SpecError as exc:
        print(f"lamb: error: {exc}", file=sys.stderr)
        return 1

    result = scanner.scan(spec, text)
    gaps = scanner.uncovered_spans(result)
    if gaps:
        where = ", ".join(f"{a}-{b}" for a, b in gaps)
        _warn(f"unconsumed input at {where}")
    graph = lexgraph.build_graph(result)

    status = 0
    if args.command == "scan":
        if args.format == "text":
            sys.stdout.write(scanner.render_tokens_text(result))
        elif args.format == "json":
            print(lexgraph.to_json(graph))
        else:
            sys.stdout.write(lexgraph.to_dot(graph))
    elif args.command == "sequences":
        if args.limit < 1:
            print("lamb: error: --limit must be >= 1", file=sys.stderr)
            return 1
        paths, truncated = lexgraph.enumerate_sequences(graph, args.limit)
        if truncated:
            _warn(f"sequence list truncated at {args.limit}")
        if args.format == "text":
            for path in paths:
                print(" ".join(graph.tokens[i].type_name for i in path))
        else:
            payload = {
                "sequences": [
                    {"ids": path, "types": [graph.tokens[i].type_name for i in path]}
                    for path in paths
                ],
                "truncated": truncated,
            }
            print(json.dumps(payload, ensure_ascii=False, separators=(",", ":")))
    else:  # parse
        forest = parser.parse(graph, grammar)
        if args.format == "text":
            sys.stdout.write(parser.render_trees(forest))
        elif args.format == "json":
            print(parser.forest_to_json(forest))
        else:
            sys.stdout.write(parser.forest_to_dot(forest))
        if not forest.accepted:
            print("lamb: no valid sentence", file=sys.stderr)
            status = 2

    if args.oracle_check:
        problems = []
        if oracles.scan_oracle(spec, text) != result:
            problems.append("scan disagrees with scan_oracle")
        if oracles.build_graph_oracle(result) != graph:
            problems.append("build_graph disagrees with build_graph_oracle")
        if problems:
            for p in problems:
                print(f"lamb: oracle divergence: {p}", file=sys.stderr)
            return 1
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
