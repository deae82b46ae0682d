"""Command-line front end.

Single operations (hilbert, cocycle, mul, inv, sigma, witness) evaluate one
expression in a fixed context given by --p and --n.  The verify subcommand
replays the seeded suites over the default contexts (or the one requested)
and exits 0 only when everything passed.  Matrices are written 'a,b;c,d'
with rational tokens; cover elements may carry a ':k' suffix for the mu_n
exponent.  With --json all output is canonical JSON; wall times are zeroed
there so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import sys

from .errors import MetaplecticError, RegimeError, UnknownSuite, VerificationFailed
from .group import inv as group_inv
from .group import mul as group_mul
from .hilbert import hilbert
from .cocycle import cocycle
from .involutions import sigma, sigma_alpha
from .padic import PadicContext
from .sampling import SampleConfig
from .serialize import (
    dumps,
    format_meta,
    meta_to_json,
    parse_gl2,
    parse_meta,
    parse_rational,
)
from .suites import FAILED, SUITE_NAMES, run_suite
from .witness import witness, witness_alpha

DEFAULT_SEED = 42
DEFAULT_TRIALS = 200


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    # registered on the subparsers too, with SUPPRESS defaults so that a
    # flag placed before the subcommand is not clobbered afterwards
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--p", type=int, default=default, help="base prime")
    parser.add_argument("--n", type=int, default=default, help="cover degree")
    parser.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="emit canonical JSON",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metaplectic",
        description="Exact arithmetic on the n-fold metaplectic cover of GL(2, Q_p).",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command")

    sp = sub.add_parser("hilbert", help="Hilbert symbol <a, b>")
    sp.add_argument("a")
    sp.add_argument("b")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("cocycle", help="Kubota cocycle c(g1, g2)")
    sp.add_argument("g1")
    sp.add_argument("g2")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("mul", help="product of two cover elements")
    sp.add_argument("h1")
    sp.add_argument("h2")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("inv", help="inverse of a cover element")
    sp.add_argument("h")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("sigma", help="lift of the standard involution")
    sp.add_argument("h")
    sp.add_argument("--alpha", help="twist parameter (defaults to the untwisted lift)")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("witness", help="conjugacy witness for sigma (or sigma_alpha)")
    sp.add_argument("h")
    sp.add_argument("--alpha", help="twist parameter")
    _add_global_flags(sp, suppress=True)

    sp = sub.add_parser("verify", help="run the seeded verification suites")
    sp.add_argument("suite", nargs="?", default="all", help=f"one of {', '.join(SUITE_NAMES)} or all")
    sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_global_flags(sp, suppress=True)
    return parser


def _emit(args, payload: dict, text: str):
    if args.json:
        sys.stdout.write(dumps(payload))
    else:
        print(text)


def _run_verify(args, ctx: PadicContext | None) -> int:
    ctx_list = (ctx,) if ctx is not None else ()
    cfg = SampleConfig(seed=args.seed, trials=args.trials, ctx_list=ctx_list)
    reports = run_suite(args.suite, cfg)
    if args.json:
        sys.stdout.write(dumps([r.to_dict(timing=False) for r in reports]))
    else:
        for r in reports:
            print(
                f"{r.suite:<14} p={r.ctx.p:<3} n={r.ctx.n:<2} "
                f"trials={r.trials:<6} failures={len(r.failures):<3} "
                f"status={r.status}  ({r.ms} ms)"
            )
    return 1 if any(r.status == FAILED for r in reports) else 0


def _run_single(args, ctx: PadicContext) -> int:
    cmd = args.command
    if cmd == "hilbert":
        result = hilbert(parse_rational(args.a), parse_rational(args.b), ctx)
        _emit(
            args,
            {"op": "hilbert", "ctx": {"p": ctx.p, "n": ctx.n}, "result": result.exp},
            str(result.exp),
        )
        return 0
    if cmd == "cocycle":
        result = cocycle(parse_gl2(args.g1), parse_gl2(args.g2), ctx)
        _emit(
            args,
            {"op": "cocycle", "ctx": {"p": ctx.p, "n": ctx.n}, "result": result.exp},
            str(result.exp),
        )
        return 0
    if cmd == "mul":
        result = group_mul(parse_meta(args.h1, ctx), parse_meta(args.h2, ctx), ctx)
    elif cmd == "inv":
        result = group_inv(parse_meta(args.h, ctx), ctx)
    elif cmd == "sigma":
        h = parse_meta(args.h, ctx)
        if args.alpha is None:
            result = sigma(h, ctx)
        else:
            result = sigma_alpha(h, parse_rational(args.alpha), ctx)
    else:  # witness
        h = parse_meta(args.h, ctx)
        if args.alpha is None:
            report = witness(h, ctx)
        else:
            report = witness_alpha(h, parse_rational(args.alpha), ctx)
        payload = {
            "op": "witness",
            "ctx": {"p": ctx.p, "n": ctx.n},
            "z": meta_to_json(report.z),
            "lhs": meta_to_json(report.lhs),
            "rhs": meta_to_json(report.rhs),
            "verified": report.verified,
        }
        _emit(args, payload, f"z = {format_meta(report.z)}\nverified: {str(report.verified).lower()}")
        return 0 if report.verified else 1
    _emit(
        args,
        {"op": cmd, "ctx": {"p": ctx.p, "n": ctx.n}, "result": meta_to_json(result)},
        format_meta(result),
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    ctx = None
    if args.p is not None or args.n is not None:
        if args.p is None or args.n is None:
            parser.error("--p and --n must be given together")
        try:
            ctx = PadicContext(args.p, args.n)
        except RegimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    try:
        if args.command == "verify":
            return _run_verify(args, ctx)
        if ctx is None:
            print("error: --p and --n are required for this command", file=sys.stderr)
            return 2
        return _run_single(args, ctx)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except UnknownSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MetaplecticError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
