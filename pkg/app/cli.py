"""
Command-line surface: analyze, export and reproduce.
"""
import argparse
import asyncio
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from codes.analysis import distinct_codewords
from codes.construction import build_defining_sets, generator_matrix
from codes.errors import CodeError, VerificationError
from codes.poset import OrderIdealSpec, validate_spec
from codes.ring_core import gray_map_rows
from orchestrator.reproduce import run_cases, tally
from orchestrator.supervisor import AnalysisOptions, PipelineError, Supervisor
from utils.config import settings
from utils.logger import setup_logging

logger = setup_logging()

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3

EXPORTS = ["defining-D", "defining-L", "codewords", "gray", "generators"]


class UsageError(Exception):
    """Flags parsed but do not describe a valid request."""


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _union_pair(value: str) -> List[int]:
    try:
        i, j = (int(part) for part in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--union expects I,J, got {value!r}")
    return [i, j]


def build_parser() -> argparse.ArgumentParser:
    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--n", type=int, required=True, help="size of the poset")
    ideal.add_argument("--m", type=int, required=True, help="length of the first chain")
    shape = ideal.add_mutually_exclusive_group(required=True)
    shape.add_argument("--chain-one", type=int, metavar="I", help="ideal {1..I} on the first chain")
    shape.add_argument("--chain-two", type=int, metavar="J", help="ideal {m+1..J} on the second chain")
    shape.add_argument("--union", type=_union_pair, metavar="I,J", help="union of both prefixes")
    ideal.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    parser = argparse.ArgumentParser(
        prog="z4-poset-codes",
        description="Quaternary codes from order ideals of a two-chain poset",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[ideal], help="compute distributions and parameters")
    analyze.add_argument("--gray", action="store_true", help="decide linearity of the Gray image")
    analyze.add_argument("--verify", action="store_true", help=f"force brute force (n <= {settings.BRUTE_FORCE_MAX_N})")
    analyze.add_argument("--format", choices=["text", "json"], default="text")
    analyze.add_argument("--jobs", type=_positive_int, default=settings.CONCURRENT_TASKS)

    export = commands.add_parser("export", parents=[ideal], help="write a listing of the code")
    export.add_argument("--what", choices=EXPORTS, required=True)

    reproduce = commands.add_parser("reproduce", help="recompute every pinned case")
    reproduce.add_argument("--jobs", type=_positive_int, default=settings.CONCURRENT_TASKS)

    return parser


def spec_from_args(args: argparse.Namespace) -> OrderIdealSpec:
    """
    Build and validate the OrderIdealSpec selected by the ideal flags.

    Args:
        args (argparse.Namespace): Parsed flags

    Returns:
        OrderIdealSpec: Validated spec
    """
    if args.chain_one is not None:
        spec = OrderIdealSpec.chain_one(args.n, args.m, args.chain_one)
    elif args.chain_two is not None:
        spec = OrderIdealSpec.chain_two(args.n, args.m, args.chain_two)
    else:
        spec = OrderIdealSpec.union(args.n, args.m, *args.union)
    return validate_spec(spec)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {out}: {e.strerror}")
    logger.info(f"Wrote {out}")


def _symbol_lines(rows: Sequence[Sequence[int]]) -> List[str]:
    return [" ".join(str(int(x)) for x in row) for row in rows]


def _sorted_rows(rows: np.ndarray) -> List[tuple]:
    return sorted(tuple(int(x) for x in row) for row in rows)


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    options = AnalysisOptions(gray=args.gray, verify=args.verify, jobs=args.jobs)
    report = asyncio.run(Supervisor(jobs=args.jobs).run(spec, options))

    _emit(report.to_json() + "\n" if args.format == "json" else report.to_text(), args.out)
    if not report.provenance.agreed:
        logger.error(f"Methods disagree with the closed form: {report.provenance.disagreeing}")
        return EXIT_VERIFICATION
    logger.info(f"{spec.describe()}: {report.summary()}")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    sets = build_defining_sets(spec)

    listings: Dict[str, Callable[[], List[Sequence[int]]]] = {
        "defining-D": lambda: sets.d_rows.tolist(),
        "defining-L": lambda: sets.l_rows.tolist(),
        "codewords": lambda: _sorted_rows(np.array(distinct_codewords(sets))),
        "gray": lambda: _sorted_rows(gray_map_rows(np.array(distinct_codewords(sets)))),
        "generators": lambda: generator_matrix(sets).tolist(),
    }
    lines = [f"# {spec.describe()} length={sets.length}"] + _symbol_lines(listings[args.what]())
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    results = asyncio.run(run_cases(jobs=args.jobs))
    counts = tally(results)
    lines = [result.line() for result in results]
    lines.append(f"{counts[True]} passed, {counts[False]} failed")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_VERIFICATION if counts[False] else EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "export": cmd_export,
    "reproduce": cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse flags, run one command and map failures onto exit codes."""
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except PipelineError as e:
        logger.error(str(e))
        return EXIT_VERIFICATION if issubclass(e.cause, VerificationError) else EXIT_USAGE
    except VerificationError as e:
        logger.error(str(e))
        return EXIT_VERIFICATION
    except (CodeError, UsageError) as e:
        logger.error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
