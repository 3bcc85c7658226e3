"""Command-line front end.

Exit codes: 0 affirmative, 1 mathematically negative verdict, 2 usage or
internal error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import golden
from .arith import U64_MAX
from .residues import Kind, residue_set
from .reproduce import reproduce
from .scanner import Status, closure_list, compare_with_reference, scan_moduli, seeds_from_scan
from .theorem import (
    ConstructionError,
    brute_force_represent,
    construct_representation,
    mod8_witness_check,
    verify_range,
)

SCHEMA_VERSION = "1"
DEFAULT_N_MAX = 10_000

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def envelope(command: str, parameters: dict, result, status: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "parameters": parameters, "result": result, "status": status}


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    if value > U64_MAX:
        raise argparse.ArgumentTypeError(f"exceeds the 64-bit range: {value}")
    return value


def _modulus(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("modulus must be at least 1")
    return value


def _int_list(text: str) -> List[int]:
    return [_modulus(t) for t in text.split(",") if t.strip()]


def _braces(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


# each command returns (text lines, json result, status)

def cmd_residues(args):
    rs = residue_set(args.a, args.kind)
    return [rs.to_text()], rs.to_dict(), "ok"


def _verdict_lines(v) -> List[str]:
    a = v.modulus
    if v.passed:
        lines = [f"a = {a}: pass"]
        for k, r in sorted(v.witness.entries.items()):
            lines.append(f"  k = {k} (mod 8) -> r = {r}: {a}k + {r} = {(a * k + r) % 8} (mod 8)")
        return lines
    if v.blocking_class is None:
        return [f"a = {a}: fail, R_{a} is empty"]
    return [f"a = {a}: fail, blocking class {v.blocking_class} (mod 8)"]


def cmd_check(args):
    v = mod8_witness_check(args.a)
    return _verdict_lines(v), v.to_dict(), "ok" if v.passed else "fail"


def cmd_represent(args):
    a, n = args.a, args.n
    rep = construct_representation(a, n)
    result = {"representation": rep.to_dict() if rep else None}
    if rep is None:
        lines = [f"a = {a}, N = {n}: no admissible r in R_{a}"]
    else:
        A, B, C = rep.triple
        terms = rep.floor_terms
        lines = [
            f"a = {a}, N = {n}, r = {rep.r}",
            f"triple = ({A}, {B}, {C})",
            f"{a}*{n} + {rep.r} = {a * n + rep.r} = {A}^2 + {B}^2 + {C}^2",
            "N = " + " + ".join(f"floor({x * x}/{a})" for x in rep.triple)
            + f" = {terms[0]} + {terms[1]} + {terms[2]} = {sum(terms)}",
        ]
    if args.oracle:
        hit = brute_force_represent(a, n)
        result["oracle"] = list(hit) if hit else None
        if hit is None:
            lines.append("oracle: no triple found")
        else:
            parts = [x * x // a for x in hit]
            lines.append(f"oracle: ({hit[0]}, {hit[1]}, {hit[2]}) -> "
                         f"{parts[0]} + {parts[1]} + {parts[2]} = {sum(parts)}")
    return lines, result, "ok" if rep else "fail"


def cmd_scan(args):
    report = scan_moduli(args.a_min, args.a_max)
    lines = [f"{e.a:>6}  {e.describe():<32}  R_{e.a} = {_braces(e.r_set)}" for e in report.entries]
    result = {"scan": report.to_dict()}
    diff = compare_with_reference(report, golden.CERTIFIED)
    result["reference_comparison"] = diff
    if diff["beyond_reference"]:
        lines.append(f"NOTE: mod-8 check also passes for {_braces(diff['beyond_reference'])}, "
                     f"beyond the reference list {_braces(golden.CERTIFIED)}")
    if diff["missing_from_scan"]:
        lines.append(f"NOTE: reference moduli failing the check: {_braces(diff['missing_from_scan'])}")
    if args.closure_bound is not None:
        assumed = args.assume or []
        bad = [a for a in assumed if a > args.closure_bound]
        if bad:
            raise UsageError(f"assumed seeds exceed closure bound: {bad}")
        seeds = [(a, s) for a, s in seeds_from_scan(report, assumed) if a <= args.closure_bound]
        closure = closure_list(seeds, args.closure_bound)
        result["closure"] = closure.to_dict()
        lines.append(f"closure up to {args.closure_bound} ({len(closure.entries)} moduli): "
                     f"{_braces(closure.moduli)}")
        lines += [f"{e.a:>6}  {e.describe()}" for e in closure.entries]
    passed = bool(report.with_status(Status.METHOD_PASS))
    return lines, result, "ok" if passed else "fail"


def cmd_verify(args):
    n_max = DEFAULT_N_MAX if args.n_max is None else args.n_max
    args.n_max = n_max
    report = verify_range(args.a, n_max)
    lines = [f"a = {args.a}: {report.verified}/{report.total} verified"]
    if report.failures:
        lines.append(f"failures ({len(report.failures)}): {', '.join(map(str, report.failures))}")
    return lines, report.to_dict(), "ok" if report.ok else "fail"


def cmd_reproduce(args):
    rep = reproduce()
    lines = ["a    R_a"]
    lines += [f"{a:<4} {_braces(v)}" for a, v in sorted(rep.r_table.items())]
    lines.append("")
    for v in rep.witnesses:
        lines += _verdict_lines(v)
    lines.append("")
    lines.append(f"closure up to {golden.CLOSURE_BOUND}: {_braces(rep.closure.moduli)}")
    lines += [f"{e.a:>6}  {e.describe()}" for e in rep.closure.entries]
    for m in rep.mismatches:
        print(f"MISMATCH {m}", file=sys.stderr)
    lines.append("reproduction: " + ("all rows match" if rep.ok else f"{len(rep.mismatches)} mismatch(es)"))
    return lines, rep.to_dict(), "ok" if rep.ok else "fail"


def _add_globals(p, suppress: bool):
    default = argparse.SUPPRESS if suppress else False
    p.add_argument("--json", action="store_true", default=default, help="emit a JSON envelope")
    p.add_argument("--quiet", action="store_true", default=default, help="print nothing; exit code only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floorsq", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("residues", help="print Q_a, A_a or R_a")
    p.add_argument("a", type=_modulus)
    p.add_argument("--kind", choices=["q", "a", "r"], default="r")
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("check", help="mod-8 hypothesis check for one modulus")
    p.add_argument("a", type=_modulus)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("represent", help="write N as three floor-squares over a")
    p.add_argument("a", type=_modulus)
    p.add_argument("n", type=_natural)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("scan", help="classify a range of moduli")
    p.add_argument("a_min", type=_modulus)
    p.add_argument("a_max", type=_modulus)
    p.add_argument("--assume", type=_int_list, default=None, metavar="LIST",
                   help="comma-separated moduli accepted on external authority")
    p.add_argument("--closure-bound", type=_natural, default=None, metavar="B")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="construct every N in [0, n_max]")
    p.add_argument("a", type=_modulus)
    p.add_argument("n_max", type=_natural, nargs="?", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="recompute the published tables")
    p.set_defaults(func=cmd_reproduce)

    for sp in sub.choices.values():
        _add_globals(sp, suppress=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR

    if args.command == "scan" and args.a_min > args.a_max:
        print(f"error: a_min {args.a_min} > a_max {args.a_max}", file=sys.stderr)
        return EXIT_ERROR

    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "json", "quiet")}
    try:
        lines, result, status = args.func(args)
        params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "json", "quiet")}
    except (UsageError, ValueError, OverflowError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.json and not args.quiet:
            print(canonical_json(envelope(args.command, params, {"message": str(exc)}, "error")))
        return EXIT_ERROR

    if not args.quiet:
        if args.json:
            print(canonical_json(envelope(args.command, params, result, status)))
        else:
            print("\n".join(lines))
    return EXIT_OK if status == "ok" else EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
