"""Command-line front end.

Exit codes: 0 ok, 1 internal error, 2 parse error, 3 verification mismatch,
4 search node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .braid import (
    BraidSyntaxError,
    BraidWord,
    SearchLimitExceeded,
    StrandBoundError,
    parse,
    random_markov_orbit,
    search_markov_path,
)
from .invariants import (
    alexander_polynomial,
    check_wada_conjecture,
    leading_invariant,
    twovar_invariant,
    wada_polynomial,
)
from .matrixring import bivariate_gcd_chain
from .representations import RepresentationKind, braid_matrix
from .ring import LaurentPoly, evaluate, unit_equal_bivariate

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3, 4

# name, braid, Wada constant, Alexander polynomial (normalized)
TABLE = [
    ("unknot", "1", 1, "1"),
    ("Hopf link", "1^2", 2, "t - 1"),
    ("trefoil", "1^3", 3, "t^2 - t + 1"),
    ("torus (2,2)", "1^2", 2, "t - 1"),
    ("torus (2,3)", "1^3", 3, "t^2 - t + 1"),
    ("torus (2,4)", "1^4", 4, "t^3 - t^2 + t - 1"),
    ("torus (2,5)", "1^5", 5, "t^4 - t^3 + t^2 - t + 1"),
    ("torus (2,6)", "1^6", 6, "t^5 - t^4 + t^3 - t^2 + t - 1"),
    ("figure eight", "1 -2 1 -2", 5, "t^2 - 3*t + 1"),
    ("square knot", "1^3 2^3", 9, "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"),
    ("granny knot", "1^3 2^-3", 9, "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"),
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read_braid(args) -> BraidWord:
    return parse(args.braid, args.strands)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _invariant_payload(kind: RepresentationKind, beta: BraidWord, show_matrix: bool) -> dict:
    payload: dict = {"braid": str(beta), "strands": beta.strands, "kind": kind.value}
    matrix = braid_matrix(kind, beta).sub_identity()
    if show_matrix:
        payload["matrix"] = matrix.to_lists()
    if kind is RepresentationKind.TWOVAR:
        inv = twovar_invariant(beta)
        payload["chain"] = [str(g) for g in bivariate_gcd_chain(matrix)]
        payload["invariant"] = str(inv.gcd)
        payload["generators"] = [str(g) for g in inv.generators]
        payload["principal_hint"] = inv.principal_hint
    else:
        lead = leading_invariant(kind, beta)
        payload["chain"] = [str(g) for g in lead.chain.generators]
        payload["invariant"] = str(lead.value)
        payload["raw"] = str(lead.raw)
        if kind is RepresentationKind.WADA:
            report = check_wada_conjecture(beta)
            payload["alexander_at_minus1"] = str(report.alexander_at_minus_1)
            payload["conjecture_consistent"] = report.consistent
    return payload


def cmd_invariant(args) -> int:
    kind = RepresentationKind.coerce(args.kind)
    beta = _read_braid(args)
    payload = _invariant_payload(kind, beta, args.show_matrix)
    lines = []
    if args.show_matrix:
        lines.append(str(braid_matrix(kind, beta).sub_identity()))
    if args.show_chain:
        lines.append("chain: " + ", ".join(payload["chain"]))
    lines.append(payload["invariant"])
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _invariant_of(kind: RepresentationKind, beta: BraidWord):
    if kind is RepresentationKind.TWOVAR:
        return twovar_invariant(beta).gcd
    return leading_invariant(kind, beta).value


def _same(kind: RepresentationKind, a, b) -> bool:
    if kind is RepresentationKind.TWOVAR:
        return unit_equal_bivariate(a, b)
    return a == b


def cmd_verify(args) -> int:
    kind = RepresentationKind.coerce(args.kind)
    beta = _read_braid(args)
    if args.depth < 0:
        print("depth must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    rng = random.Random(args.seed)
    max_strands = args.max_strands if args.max_strands is not None else beta.strands + 2
    orbit = random_markov_orbit(beta, args.depth, rng, max_strands)
    reference = _invariant_of(kind, beta)
    nodes = [{"move": None, "braid": beta.describe(), "invariant": str(reference), "ok": True}]
    passed = True
    for move, b in orbit:
        value = _invariant_of(kind, b)
        ok = _same(kind, value, reference)
        passed &= ok
        nodes.append({"move": str(move), "braid": b.describe(), "invariant": str(value), "ok": ok})
    verdict = "PASS" if passed else "FAIL"
    lines = [f"start {nodes[0]['braid']}: {nodes[0]['invariant']}"]
    for node in nodes[1:]:
        mark = "" if node["ok"] else "  <-- MISMATCH"
        lines.append(f"{node['move']:<14} -> {node['braid']}: {node['invariant']}{mark}")
    lines.append(f"{verdict}: {kind.value} invariant {reference} along {len(orbit)} moves")
    payload = {
        "braid": str(beta),
        "strands": beta.strands,
        "kind": kind.value,
        "seed": args.seed,
        "moves": [n["move"] for n in nodes[1:]],
        "orbit": nodes,
        "invariant": str(reference),
        "result": verdict,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_MISMATCH


def table_rows() -> list[dict]:
    rows = []
    for name, text, wada_expected, alex_expected in TABLE:
        beta = parse(text)
        wada = wada_polynomial(beta)
        alex = alexander_polynomial(beta)
        report = check_wada_conjecture(beta)
        match = wada == wada_expected and alex == LaurentPoly.parse(alex_expected) and report.consistent is True
        rows.append({
            "name": name,
            "braid": text,
            "wada": str(wada),
            "alexander": str(alex),
            "alexander_at_minus1": str(evaluate(alex, -1)),
            "conjecture_consistent": report.consistent,
            "matches_expected": match,
        })
    return rows


def cmd_table(args) -> int:
    rows = table_rows()
    ok = all(r["matches_expected"] for r in rows)
    if args.format == "json":
        print(json.dumps({"rows": rows, "all_match": ok}, indent=2))
    else:
        header = f"{'link':<14} {'braid':<11} {'wada':>5}  {'alexander':<30} {'D(-1)':>6}  conjecture  expected"
        print(header)
        print("-" * len(header))
        for r in rows:
            print(
                f"{r['name']:<14} {r['braid']:<11} {r['wada']:>5}  {r['alexander']:<30} "
                f"{r['alexander_at_minus1']:>6}  {str(r['conjecture_consistent']):<10}  "
                f"{'ok' if r['matches_expected'] else 'MISMATCH'}"
            )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_search(args) -> int:
    start = parse(args.from_braid, args.from_strands)
    goal = parse(args.to_braid, args.to_strands)
    conjugators = None
    if args.conjugators:
        conjugators = [int(x) for x in args.conjugators.split()]
    try:
        path = search_markov_path(
            start, goal, args.max_strands, args.max_length, args.max_depth,
            conjugators=conjugators, max_nodes=args.max_nodes,
        )
    except SearchLimitExceeded as exc:
        print(f"LIMIT EXCEEDED: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    bounds = {"max_strands": args.max_strands, "max_length": args.max_length, "max_depth": args.max_depth}
    payload = {
        "from": str(start), "to": str(goal), "bounds": bounds,
        "found": path is not None, "path": [str(m) for m in path] if path is not None else None,
    }
    if path is None:
        text = "NOT FOUND within bounds"
    elif not path:
        text = "empty path (start equals goal)"
    else:
        text = "\n".join(str(m) for m in path)
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidinv", description="Knot and link invariants from braid words.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, braid=True):
        if braid:
            p.add_argument("--braid", required=True, help='braid word, e.g. "1 -2 1 -2" or "1^3"')
            p.add_argument("--strands", type=int, default=None)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("invariant", help="compute the invariant of a braid closure")
    common(p)
    p.add_argument("--kind", choices=("burau", "wada", "twovar"), default="wada")
    p.add_argument("--show-matrix", action="store_true")
    p.add_argument("--show-chain", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", help="check invariance along a random Markov orbit")
    common(p)
    p.add_argument("--kind", choices=("burau", "wada", "twovar"), default="wada")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-strands", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce the example table")
    common(p, braid=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="bounded search for a Markov-move path")
    common(p, braid=False)
    p.add_argument("--from", dest="from_braid", required=True)
    p.add_argument("--to", dest="to_braid", required=True)
    p.add_argument("--from-strands", type=int, default=None)
    p.add_argument("--to-strands", type=int, default=None)
    p.add_argument("--max-strands", type=int, default=4)
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--max-nodes", type=int, default=200_000)
    p.add_argument("--conjugators", default=None, help='letters to conjugate by, e.g. "1 -1 2 -2"')
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BraidSyntaxError, StrandBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # contract violation inside the library
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
