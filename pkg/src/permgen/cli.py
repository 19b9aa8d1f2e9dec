"""Command-line front end: gen, count, verify, and bench subcommands.

Exit codes: 0 success, 1 constraint conflict or position out of bounds
(also a verify mismatch), 2 constraint syntax error, 3 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import generator, oracle
from .constraints import (
    InvalidConstraintsError,
    Kind,
    PermittedMatrix,
    alphabet_of,
    normalize,
    validate,
)
from .dsl import ParseError, parse_constraints

EXIT_OK = 0
EXIT_CONSTRAINTS = 1
EXIT_PARSE = 2
EXIT_USAGE = 3


class _Failure(Exception):
    """Carries an exit code alongside the message."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is reserved for constraint syntax
    # errors here, so route usage problems to 3 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(value: str) -> int:
    try:
        parsed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if parsed < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return parsed


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="permgen",
        description=(
            "Enumerate the permutations of a string that satisfy per-position "
            "allow/forbid constraints, in lexicographic order without duplicates."
        ),
    )
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--string",
        required=True,
        help="input string whose permutations are enumerated",
    )
    common.add_argument(
        "-c",
        "--constraint",
        action="append",
        default=[],
        metavar="CLAUSE",
        help="constraint clause, e.g. 'pos 1 in {a,b}' (repeatable)",
    )
    common.add_argument(
        "--constraints-file",
        metavar="PATH",
        help="file with one constraint clause per line",
    )

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    gen = sub.add_parser("gen", parents=[common], help="stream the permutations, one per line")
    gen.add_argument("--limit", type=_positive_int, metavar="K",
                     help="stop after the first K permutations")
    gen.add_argument("--no-sort", action="store_true",
                     help="skip the input sort; output is no longer lexicographic")
    gen.add_argument("--stats", action="store_true",
                     help="print node counters to standard error afterwards")
    gen.set_defaults(handler=_cmd_gen)

    cnt = sub.add_parser("count", parents=[common],
                         help="print how many permutations satisfy the constraints")
    cnt.add_argument("--stats", action="store_true",
                     help="print node counters to standard error afterwards")
    cnt.set_defaults(handler=_cmd_count)

    ver = sub.add_parser("verify", parents=[common],
                         help="compare generator output against the brute-force oracle")
    ver.set_defaults(handler=_cmd_verify)

    ben = sub.add_parser("bench", parents=[common],
                         help="time generator and oracle on one instance")
    ben.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported; normalize to int
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: constraint syntax: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidConstraintsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINTS
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        # reader went away (e.g. piped into head); suppress the shutdown flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


def cli() -> None:
    raise SystemExit(main())


def _load_matrix(args: argparse.Namespace) -> PermittedMatrix:
    """Gather clause text, parse, validate, warn, and normalize."""
    s = args.string
    text = "\n".join(args.constraint)
    if args.constraints_file:
        try:
            with open(args.constraints_file, encoding="utf-8") as fh:
                file_text = fh.read()
        except OSError as exc:
            raise _Failure(EXIT_USAGE, f"cannot read constraints file: {exc}")
        text = f"{text}\n{file_text}" if text else file_text

    cs = parse_constraints(text, len(s))
    validate(cs)
    alphabet = alphabet_of(s)
    alpha = set(alphabet)
    for c in cs.constraints:
        if c.kind is Kind.ALLOWED:
            missing = sorted(c.symbols - alpha)
            if missing:
                shown = ", ".join(repr(ch) for ch in missing)
                print(
                    f"warning: position {c.position} allows {shown}, "
                    "which never occurs in the input",
                    file=sys.stderr,
                )
    return normalize(cs, alphabet)


def _print_stats(stream: generator.PermutationStream) -> None:
    st = stream.stats()
    suffix = " (partial)" if st.partial else ""
    print(f"calls={st.calls} dead_ends={st.dead_ends} emitted={st.emitted}{suffix}",
          file=sys.stderr)


def _cmd_gen(args: argparse.Namespace) -> int:
    permitted = _load_matrix(args)
    stream = generator.generate(args.string, permitted, sort_input=not args.no_sort)
    written = 0
    for perm in stream:
        sys.stdout.write(perm + "\n")
        written += 1
        if args.limit is not None and written >= args.limit:
            break
    sys.stdout.flush()
    if args.stats:
        _print_stats(stream)
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    permitted = _load_matrix(args)
    stream = generator.generate(args.string, permitted)
    total = 0
    for _ in stream:
        total += 1
    print(total)
    if args.stats:
        _print_stats(stream)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    permitted = _load_matrix(args)
    got = list(generator.generate(args.string, permitted))
    want = list(oracle.filter_permutations(
        oracle.distinct_permutations(args.string), permitted).outputs)
    if got == want:
        print(f"OK {len(got)}")
        return EXIT_OK
    k = min(len(got), len(want))
    for i in range(k):
        if got[i] != want[i]:
            k = i
            break
    g = got[k] if k < len(got) else "<end of stream>"
    w = want[k] if k < len(want) else "<end of stream>"
    print(f"MISMATCH at index {k}: generator={g} oracle={w}")
    return EXIT_CONSTRAINTS


def _cmd_bench(args: argparse.Namespace) -> int:
    permitted = _load_matrix(args)
    s = args.string

    t0 = time.perf_counter()
    stream = generator.generate(s, permitted)
    for _ in stream:
        pass
    gen_ms = (time.perf_counter() - t0) * 1000.0
    st = stream.stats()

    t0 = time.perf_counter()
    ref = oracle.filter_permutations(oracle.distinct_permutations(s), permitted)
    oracle_ms = (time.perf_counter() - t0) * 1000.0

    print(
        f"n={len(s)} emitted={st.emitted} calls={st.calls} dead_ends={st.dead_ends} "
        f"oracle_total={ref.total_distinct} gen_ms={gen_ms:.3f} oracle_ms={oracle_ms:.3f}"
    )
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
