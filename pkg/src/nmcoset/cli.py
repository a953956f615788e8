"""Command-line front end.

Exit status: 0 on success, 2 for bad input, 3 when an enumeration cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analysis, verifier
from .codes import builtin_code, load_alist, load_dense
from .coset import decode, encode
from .distributions import format_fraction, statistical_distance
from .errors import DEFAULT_CAP, CodingError, TooLargeError
from .gf2 import BitVector
from .tamper import parse_tamper

EXIT_INPUT = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _load_code(args):
    if args.builtin:
        name, _, params = args.builtin.partition(":")
        if not params:
            raise UsageError(f"--builtin expects NAME:PARAMS, got {args.builtin!r}")
        if name == "random" and args.seed is None:
            raise UsageError("random codes require --seed")
        return builtin_code(name, params, seed=args.seed)
    if args.dense:
        return load_dense(args.dense)
    return load_alist(args.alist)


def _bits(text: str, expected: int, what: str) -> BitVector:
    v = BitVector.from_str(text)
    if v.length != expected:
        raise UsageError(f"{what} has length {v.length}, expected {expected}")
    return v


def _positions(text: str, n: int) -> list[int]:
    if not text.strip():
        return []
    try:
        pos = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"--positions must be comma-separated integers, got {text!r}") from None
    bad = [p for p in pos if not 1 <= p <= n]
    if bad:
        raise UsageError(f"positions {bad} outside 1..{n}")
    if len(set(pos)) != len(pos):
        raise UsageError("duplicate positions")
    return sorted(pos)


def _require_seed(args):
    if args.seed is None:
        raise UsageError("this command requires --seed")


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_profile(args):
    code = _load_code(args)
    return analysis.profile(code, args.cap).to_dict()


def cmd_encode(args):
    _require_seed(args)
    code = _load_code(args)
    m = _bits(args.message, code.r, "message")
    return f"{encode(code, m, np.random.default_rng(args.seed))}\n"


def cmd_decode(args):
    code = _load_code(args)
    return f"{decode(code, _bits(args.word, code.n, 'word'))}\n"


def cmd_verify(args):
    code = _load_code(args)
    f = parse_tamper(args.tamper)
    if f.n != code.n:
        raise UsageError(f"tamper string has length {f.n}, code has n = {code.n}")
    return verifier.verify_theorem(code, f, args.cap).to_dict()


def cmd_sweep(args):
    code = _load_code(args)
    if not 0 <= args.min_fixed <= code.n:
        raise UsageError(f"--min-fixed must be in 0..{code.n}")
    return verifier.sweep(code, args.min_fixed, args.cap).to_dict()


def cmd_wiretap(args):
    code = _load_code(args)
    pos = _positions(args.positions, code.n)
    return {
        "code": code.name,
        "positions": pos,
        "observed": len(pos),
        "d_dual": analysis.dual_distance(code, args.cap),
        "leakage_bits": verifier.wiretap_leakage(code, [p - 1 for p in pos], args.cap),
    }


def cmd_sample(args):
    _require_seed(args)
    code = _load_code(args)
    f = parse_tamper(args.tamper)
    if f.n != code.n:
        raise UsageError(f"tamper string has length {f.n}, code has n = {code.n}")
    m = _bits(args.message, code.r, "message")
    sampled = verifier.tamper_sampled(code, f, m, args.seed, args.trials)
    exact = verifier.tamper_exact(code, f, m, args.cap)
    return {
        "code": code.name,
        "tamper": args.tamper,
        "message": args.message,
        "seed": args.seed,
        "trials": args.trials,
        "sampled": sampled.to_dict(),
        "exact": exact.to_dict(),
        "sd": format_fraction(statistical_distance(sampled, exact)),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmcoset", description="Coset coding as a non-malleable code.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME:PARAMS", help="hamming:3, repetition:5, parity:4, random:8x3")
    src.add_argument("--dense", metavar="PATH")
    src.add_argument("--alist", metavar="PATH")
    common.add_argument("--seed", type=int)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--out", metavar="PATH")

    commands = {
        "profile": (cmd_profile, "code parameters"),
        "encode": (cmd_encode, "encode a message to a random coset element"),
        "decode": (cmd_decode, "syndrome of a word"),
        "verify": (cmd_verify, "exact non-malleability report for one function"),
        "sweep": (cmd_sweep, "verify every function with enough constant actions"),
        "wiretap": (cmd_wiretap, "leakage from observing chosen coordinates"),
        "sample": (cmd_sample, "Monte-Carlo tampering experiment"),
    }
    for name, (func, help_text) in commands.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        if name in ("encode", "sample"):
            p.add_argument("--message", required=True, metavar="BITS")
        if name == "decode":
            p.add_argument("--word", required=True, metavar="BITS")
        if name in ("verify", "sample"):
            p.add_argument("--tamper", required=True, metavar="STR")
        if name == "sweep":
            p.add_argument("--min-fixed", type=int, required=True)
        if name == "wiretap":
            p.add_argument("--positions", required=True, metavar="CSV")
        if name == "sample":
            p.add_argument("--trials", type=int, default=100_000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _emit(args, args.func(args))
    except TooLargeError as exc:
        print(f"nmcoset: too-large: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CodingError as exc:
        print(f"nmcoset: {exc.kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, ValueError, OSError) as exc:
        print(f"nmcoset: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
