"""Command-line surface for the counting pipeline.

Subcommands: synthesize, count, gcd-porc, table, verify.  Exit codes:
0 success, 1 parse error, 2 scale cap exceeded, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConsistencyError, ScaleCapError
from .ffield import brute_force_count, exponent_space_count, split_prime_power
from .jsonio import (
    counting_function_to_dict,
    gcd_function_to_dict,
    table_to_dict,
)
from .parser import DslSyntaxError, parse_system
from .polynomial import parse_poly
from .porc import porc_to_residue_table, synthesize_gcd_function
from .system import count_at, counting_eval, synthesize_counting_function

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SCALE = 2
EXIT_MISMATCH = 3


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 by default; 2 is reserved for scale caps here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _add_input_args(sub):
    sub.add_argument("source", nargs="?", help="input file, or '-' for stdin")
    sub.add_argument("--text", help="inline input text instead of a file")


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--max-neq", type=int, default=20,
                     help="inclusion-exclusion cap on inequations")
    sub.add_argument("--max-enum", type=int, default=10**6,
                     help="cap on enumerated oracle tuples")


def build_parser() -> argparse.ArgumentParser:
    root = _ArgumentParser(prog="porcfield")
    subs = root.add_subparsers(dest="command", required=True)

    s = subs.add_parser("synthesize", parents=[], help="closed-form counting function")
    _add_input_args(s)
    _add_common(s)
    s.set_defaults(func=_cmd_synthesize)

    s = subs.add_parser("count", help="solution count at one q")
    _add_input_args(s)
    _add_common(s)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=_cmd_count)

    s = subs.add_parser("gcd-porc", help="closed form of a gcd of polynomial values")
    _add_input_args(s)
    _add_common(s)
    s.set_defaults(func=_cmd_gcd_porc)

    s = subs.add_parser("table", help="residue-class polynomial table")
    _add_input_args(s)
    _add_common(s)
    s.set_defaults(func=_cmd_table)

    s = subs.add_parser("verify", help="cross-check counts against the oracles")
    _add_input_args(s)
    _add_common(s)
    s.add_argument("--q-range", default="2:9", help="inclusive lo:hi range of q values")
    s.set_defaults(func=_cmd_verify)
    return root


def _read_source(args) -> str:
    if args.text is not None:
        return args.text
    if args.source is None:
        raise DslSyntaxError("no input given (pass a file or --text)", 1, 1)
    if args.source == "-":
        return sys.stdin.read()
    try:
        with open(args.source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE) from exc


def _cmd_synthesize(args) -> int:
    system = parse_system(_read_source(args))
    cf = synthesize_counting_function(system, max_inequations=args.max_neq)
    if args.format == "json":
        print(json.dumps(counting_function_to_dict(cf)))
    else:
        print(cf.render())
    return EXIT_OK


def _cmd_count(args) -> int:
    system = parse_system(_read_source(args))
    value = count_at(system, args.q, max_inequations=args.max_neq)
    if args.format == "json":
        print(json.dumps({"q": args.q, "count": value}))
    else:
        print(value)
    return EXIT_OK


def _cmd_gcd_porc(args) -> int:
    lines = [
        ln.strip()
        for ln in _read_source(args).splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        print("error: no polynomials given", file=sys.stderr)
        return EXIT_PARSE
    polys = [parse_poly(ln) for ln in lines]
    g = synthesize_gcd_function(polys)
    if args.format == "json":
        print(json.dumps(gcd_function_to_dict(g)))
    else:
        print(g.render("x"))
    return EXIT_OK


def _cmd_table(args) -> int:
    system = parse_system(_read_source(args))
    cf = synthesize_counting_function(system, max_inequations=args.max_neq)
    modulus, polys = porc_to_residue_table(cf)
    if args.format == "json":
        print(json.dumps(table_to_dict(modulus, polys)))
    else:
        print(f"modulus {modulus}")
        for r, poly in enumerate(polys):
            print(f"{r}: {poly.render()}")
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise DslSyntaxError(f"bad q-range {text!r}, expected lo:hi", 1, 1) from exc
    if lo < 2 or hi < lo:
        raise DslSyntaxError(f"bad q-range {text!r}", 1, 1)
    return lo, hi


def _cmd_verify(args) -> int:
    system = parse_system(_read_source(args))
    lo, hi = _parse_range(args.q_range)
    cf = synthesize_counting_function(system, max_inequations=args.max_neq)
    mismatches = 0
    for q0 in range(lo, hi + 1):
        expected = count_at(system, q0, max_inequations=args.max_neq)
        readings = {"closed-form": counting_eval(cf, q0)}
        try:
            readings["exponent-oracle"] = exponent_space_count(
                system, q0, max_tuples=args.max_enum
            )
        except ScaleCapError:
            pass
        try:
            split_prime_power(q0)
        except ValueError:
            pass
        else:
            try:
                readings["field-oracle"] = brute_force_count(
                    system, q0, max_tuples=args.max_enum
                )
            except ScaleCapError:
                pass
        bad = {name: v for name, v in readings.items() if v != expected}
        if bad:
            mismatches += 1
            detail = ", ".join(f"{name}={v}" for name, v in bad.items())
            print(f"q={q0} count={expected} MISMATCH ({detail})")
        else:
            print(f"q={q0} count={expected} ok ({len(readings)} checks)")
    if mismatches:
        print(f"{mismatches} mismatching q values", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DslSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ScaleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
