"""Command-line front end.

Three subcommands over a session fixed by --ring/--order/--vars:

    gb      print the interreduced Groebner basis, one polynomial per line
    nf      print the normal form of a query against the completed ideal
    member  print YES plus a combination certificate, or NO plus the
            normal form; exit 1 on NO

Output is deterministic: identical inputs produce byte-identical bytes.
Input problems exit 2 with a message on standard error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .completion import complete, ideal_membership, interreduce
from .parser import PolynomialSyntaxError, parse_polynomial
from .poly import PolyRing, format_polynomial
from .reduction import SeededRandomStrategy, StepLimitExceeded, normal_form
from .rings import CoefficientRing, RingError, ring_from_string
from .terms import TermOrder


class InputError(Exception):
    """User-input problem that maps to exit code 2."""


@dataclass
class SessionConfig:
    ring: CoefficientRing
    variables: tuple
    order: str
    command: str
    generators: list = field(default_factory=list)
    query: str | None = None
    seed: int | None = None
    trace: bool = False


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringgb",
        description="Groebner bases over gf(p), qq, and zz.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--ring", required=True, help="gf(p), qq, or zz")
        p.add_argument("--order", choices=["lex", "deglex"], default="lex")
        p.add_argument("--vars", required=True, help="comma-separated variable names, highest first")
        p.add_argument("--input", help="file with one polynomial per line (# comments, blank lines ignored)")
        p.add_argument("--seed", type=int, help="use a seeded randomized reduction strategy")
        p.add_argument("--trace", action="store_true", help="print completion statistics to stderr")

    gb = sub.add_parser("gb", help="compute the interreduced Groebner basis")
    common(gb)
    gb.add_argument("polynomials", nargs="*", help="ideal generators")

    nf = sub.add_parser("nf", help="normal form of a query modulo the ideal")
    common(nf)
    nf.add_argument("query", help="polynomial to reduce")
    nf.add_argument("polynomials", nargs="*", help="ideal generators")

    member = sub.add_parser("member", help="ideal membership with certificate")
    common(member)
    member.add_argument("query", help="polynomial to test")
    member.add_argument("polynomials", nargs="*", help="ideal generators")

    return parser


def read_polynomial_file(path: str) -> list:
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    out = []
    for line in lines:
        text = line.strip()
        if text and not text.startswith("#"):
            out.append(text)
    return out


def config_from_args(args: argparse.Namespace) -> SessionConfig:
    ring = ring_from_string(args.ring)
    variables = tuple(name.strip() for name in args.vars.split(","))
    generators = []
    if args.input:
        generators.extend(read_polynomial_file(args.input))
    generators.extend(args.polynomials)
    return SessionConfig(
        ring=ring,
        variables=variables,
        order=args.order,
        command=args.command,
        generators=generators,
        query=getattr(args, "query", None),
        seed=args.seed,
        trace=args.trace,
    )


def _emit_trace(trace, stream):
    print(f"pairs processed: {trace.pairs_processed}", file=stream)
    print(f"pair polynomials examined: {trace.iterations}", file=stream)
    print(f"polynomials added: {len(trace.added)}", file=stream)
    print(f"reduction steps: {trace.reduction_steps}", file=stream)
    print(f"basis size: {len(trace.basis)}", file=stream)


def run(config: SessionConfig, out=None, err=None) -> int:
    """Execute one command; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    poly_ring = PolyRing(config.ring, config.variables, TermOrder(config.order))
    generators = [parse_polynomial(text, poly_ring) for text in config.generators]
    strategy = SeededRandomStrategy(config.seed) if config.seed is not None else None

    trace = complete(generators, strategy=strategy)
    if config.trace:
        _emit_trace(trace, err)

    if config.command == "gb":
        for p in interreduce(trace.basis):
            print(format_polynomial(p), file=out)
        return 0

    query = parse_polynomial(config.query, poly_ring)
    if config.command == "nf":
        result = normal_form(query, trace.basis, strategy)
        print(format_polynomial(result), file=out)
        return 0

    outcome = ideal_membership(query, generators, strategy=strategy, trace=trace)
    if outcome.is_member:
        print("YES", file=out)
        for cofactor in outcome.certificate:
            print(format_polynomial(cofactor), file=out)
        return 0
    print("NO", file=out)
    print(format_polynomial(outcome.remainder), file=out)
    return 1


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except (InputError, RingError, PolynomialSyntaxError, StepLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
