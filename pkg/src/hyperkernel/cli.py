"""Command-line interface.

Exit codes: 0 success (or property holds), 1 property does not hold,
2 usage or parse error, 3 capacity (size guard or node bound) exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import CapacityError, DomainError, Hypergraph, HypergraphError
from .formats import ParseError, parse, serialize, to_dot
from .harness import (
    GeneratorParams,
    chain_hypergraph,
    check_confluence,
    check_diamond,
    check_hs_preservation,
    check_rule_lifting,
    random_hypergraph,
)
from .hitting import min_hitting_set
from .iso import is_isomorphic, canonical_form
from .rewrite import (
    LEX_EDGE_FIRST,
    LEX_NODE_FIRST,
    Strategy,
    is_minimal,
    random_strategy,
    reduce,
)

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

VERIFY_CHECKS = ("diamond", "confluence", "lifting", "hitting-set")


def _load(path: str) -> Hypergraph:
    try:
        return parse(Path(path).read_bytes())
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _emit(document: str, out: str | None) -> None:
    if out:
        Path(out).write_text(document)
    else:
        sys.stdout.write(document)


def _strategy(args: argparse.Namespace) -> Strategy:
    if args.strategy == "lex-node-first":
        return LEX_NODE_FIRST
    if args.strategy == "lex-edge-first":
        return LEX_EDGE_FIRST
    return random_strategy(args.seed)


def _hypergraph_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-o", "--output", metavar="FILE", help="write result here instead of stdout")
    sub.add_argument("--dot", action="store_true", help="emit the incidence graph in DOT form")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperkernel",
        description="Shrink hypergraphs with domination rules and check the "
        "rewrite system's guarantees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="rewrite to a minimal hypergraph")
    p.add_argument("file")
    p.add_argument(
        "--strategy",
        choices=["lex-node-first", "lex-edge-first", "random"],
        default="lex-node-first",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for --strategy random")
    p.add_argument("--trace", action="store_true", help="print one line per rewrite step")
    p.add_argument("--format", choices=["text", "json"], default="text")
    _hypergraph_output_flags(p)

    p = sub.add_parser("minimal", help="exit 0 iff no rewrite rule applies")
    p.add_argument("file")

    p = sub.add_parser("iso", help="exit 0 iff two hypergraphs are isomorphic")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", action="store_true", help="print the certifying bijections")

    p = sub.add_parser("canon", help="print the canonical form")
    p.add_argument("file")

    p = sub.add_parser("hs", help="exact minimum hitting set")
    p.add_argument("file")
    p.add_argument("--max-nodes", type=int, default=None, help="node bound for the search")

    p = sub.add_parser("gen", help="generate a seeded random hypergraph")
    p.add_argument("--max-nodes", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--plant", type=int, default=0, help="planted dominations")
    _hypergraph_output_flags(p)

    p = sub.add_parser("chain", help="generate an alternating-chain instance")
    p.add_argument("--length", type=int, required=True, help="odd, at least 7")
    _hypergraph_output_flags(p)

    p = sub.add_parser("verify", help="run a guarantee check over random instances")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-nodes", type=int, default=8)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--density", type=float, default=0.35)
    p.add_argument("--plant", type=int, default=2)
    p.add_argument(
        "--artifact-dir",
        default=".",
        help="where failing instances are written for reproduction",
    )
    return parser


def _cmd_reduce(args: argparse.Namespace) -> int:
    h = _load(args.file)
    result, trace = reduce(h, _strategy(args))
    if args.format == "json" and not args.dot:
        doc: dict = {"hypergraph": json.loads(serialize(result, "json"))}
        if args.trace:
            doc["trace"] = [
                {"kind": s.kind.value, "removed": s.removed, "witness": s.witness}
                for s in trace
            ]
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return EXIT_OK
    if args.trace:
        sys.stdout.write(trace.to_text())
    _emit(to_dot(result) if args.dot else serialize(result), args.output)
    return EXIT_OK


def _cmd_minimal(args: argparse.Namespace) -> int:
    if is_minimal(_load(args.file)):
        print("minimal")
        return EXIT_OK
    print("not minimal")
    return EXIT_PROPERTY_FALSE


def _cmd_iso(args: argparse.Namespace) -> int:
    witness = is_isomorphic(_load(args.a), _load(args.b))
    if witness is None:
        print("not isomorphic")
        return EXIT_PROPERTY_FALSE
    if args.witness:
        for src, dst in sorted(witness.node_map.items()):
            print(f"node {src} -> {dst}")
        for src, dst in sorted(witness.edge_map.items()):
            print(f"edge {src} -> {dst}")
    print("isomorphic")
    return EXIT_OK


def _cmd_canon(args: argparse.Namespace) -> int:
    print(canonical_form(_load(args.file)).render())
    return EXIT_OK


def _cmd_hs(args: argparse.Namespace) -> int:
    result = min_hitting_set(_load(args.file), args.max_nodes)
    if not result.feasible:
        print("infeasible")
    else:
        print(f"size={result.size}")
        print("witness=" + " ".join(sorted(result.witness)))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    h = random_hypergraph(
        GeneratorParams(args.max_nodes, args.max_edges, args.density, args.plant, args.seed)
    )
    _emit(to_dot(h) if args.dot else serialize(h), args.output)
    return EXIT_OK


def _cmd_chain(args: argparse.Namespace) -> int:
    h = chain_hypergraph(args.length)
    _emit(to_dot(h) if args.dot else serialize(h), args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for i in range(args.count):
        seed = args.seed + i
        params = GeneratorParams(
            args.max_nodes, args.max_edges, args.density, args.plant, seed
        )
        h = random_hypergraph(params)
        if args.check == "diamond":
            ok = check_diamond(h).ok
        elif args.check == "confluence":
            strategies = [LEX_NODE_FIRST, LEX_EDGE_FIRST] + [
                random_strategy(seed * 1000003 + k) for k in range(8)
            ]
            ok = check_confluence(h, strategies)
        elif args.check == "lifting":
            ok = check_rule_lifting(h, relabel_seed=seed + 10**9)
        else:
            ok = check_hs_preservation(h, max_nodes=max(args.max_nodes, 1))
        if ok:
            print(f"PASS {args.check} seed={seed}")
        else:
            failures += 1
            artifact = Path(args.artifact_dir) / f"fail-{args.check}-seed{seed}.hg"
            artifact.parent.mkdir(parents=True, exist_ok=True)
            artifact.write_text(serialize(h))
            print(f"FAIL {args.check} seed={seed} instance={artifact}")
    return EXIT_PROPERTY_FALSE if failures else EXIT_OK


_COMMANDS = {
    "reduce": _cmd_reduce,
    "minimal": _cmd_minimal,
    "iso": _cmd_iso,
    "canon": _cmd_canon,
    "hs": _cmd_hs,
    "gen": _cmd_gen,
    "chain": _cmd_chain,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, ValueError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except HypergraphError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main(sys.argv[1:]))
