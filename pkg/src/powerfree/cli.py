"""Command-line front end.

Exit codes: 0 success (or the checked property holds), 1 verification
failure (or the property fails), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, repetitions, streams
from .errors import PowerfreeError
from .repetitions import ExponentThreshold, Mode
from .verify import SUITES, run_suite
from .words import Word

STREAMS = {
    "tm": streams.thue_morse,
    "w": constructions.w_stream,
    "gw": constructions.gw_stream,
    "y": constructions.y_stream,
    "fy": constructions.fy_stream,
}

PROPERTIES = ("square", "cubefree", "squarefree", "overlapfree", "powerfree")


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print a prefix of an infinite word")
    p.add_argument("--word", required=True, choices=sorted(STREAMS))
    p.add_argument("--length", required=True, type=_nonneg)

    p = sub.add_parser("square", help="print a cubefree binary square of length 2*HALF")
    p.add_argument("--half", required=True, type=_positive)

    p = sub.add_parser("check", help="test a repetition property of words")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--exponent", help="threshold p/q, required for powerfree")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="ge")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file", help="one word per line")
    src.add_argument("word", nargs="?", help="digit word; standard input when omitted")

    p = sub.add_parser("census", help="count cubefree binary squares by length")
    p.add_argument("--max", required=True, type=_nonneg, dest="max_length")
    p.add_argument("--exhaustive-cap", type=_nonneg, default=24)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a theorem verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--limit", type=_positive)
    p.add_argument("--oracle", action="store_true", help="use the naive detectors throughout")
    return parser


def cmd_generate(args, out) -> int:
    print(STREAMS[args.word]().prefix(args.length), file=out)
    return 0


def cmd_square(args, out) -> int:
    print(constructions.cubefree_square(args.half), file=out)
    return 0


def _checker(args):
    prop = args.property
    if prop == "square":
        return lambda w: (repetitions.is_square(w), None)
    if prop == "powerfree":
        if not args.exponent:
            raise UsageError("--exponent is required for --property powerfree")
        t = ExponentThreshold.parse(args.exponent, args.mode)
    else:
        t = {
            "cubefree": repetitions.CUBE,
            "squarefree": repetitions.SQUARE,
            "overlapfree": repetitions.OVERLAP,
        }[prop]

    def run(w):
        occ = repetitions.find_power(w, t)
        return occ is None, occ

    return run


def _read_words(args):
    if args.file:
        with open(args.file) as fh:
            lines = fh.read().splitlines()
    elif args.word is not None:
        lines = [args.word]
    else:
        lines = sys.stdin.read().splitlines()
    words = [line.strip() for line in lines if line.strip()]
    if not words:
        raise UsageError("no input word")
    return [Word(w) for w in words]


def cmd_check(args, out) -> int:
    run = _checker(args)
    words = _read_words(args)
    status = 0
    for w in words:
        holds, occ = run(w)
        if holds:
            print("true", file=out)
        else:
            status = 1
            print("false" if occ is None else f"false {occ}", file=out)
    return status


def cmd_census(args, out) -> int:
    if args.max_length % 2:
        raise UsageError("--max must be even")
    records = constructions.census(args.max_length, args.exhaustive_cap)
    if args.json:
        for r in records:
            print(json.dumps(r.to_json()), file=out)
        return 0
    print(f"{'length':>6} {'exact_count':>11} {'family_lower_bound':>18}  witness", file=out)
    for r in records:
        exact = "-" if r.exact_count is None else r.exact_count
        bound = "-" if r.family_lower_bound is None else r.family_lower_bound
        print(f"{r.length:>6} {exact:>11} {bound:>18}  {r.witnesses[0]}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        report = run_suite(name, args.limit, oracle=args.oracle)
        for line in report.lines():
            print(line, file=out)
        # Timing goes to stderr so stdout stays byte-identical across runs.
        print(f"suite {name}: elapsed {report.elapsed:.3f}s", file=sys.stderr)
        failed |= not report.ok
    return 1 if failed else 0


COMMANDS = {
    "generate": cmd_generate,
    "square": cmd_square,
    "check": cmd_check,
    "census": cmd_census,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except (UsageError, PowerfreeError, OSError) as exc:
        print(f"powerfree {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
