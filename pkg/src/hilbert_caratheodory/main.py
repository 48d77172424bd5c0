#!/usr/bin/env python
import argparse
import sys
from typing import List, Optional

from .commands import dispatch
from .config.settings import settings
from .utils.error_handling import HilbertCaratheodoryError, PreconditionError, StuckError, error_handler
from .utils.logger import configure_logging, setup_logger
from .utils.validators import STRATEGIES

logger = setup_logger(__name__)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser with one sub-command per operation.
    """
    parser = argparse.ArgumentParser(
        prog="hilbert-cr",
        description="Hilbert bases and integer Carathéodory decompositions of rational pointed cones.",
    )
    parser.add_argument("--log-level", default=None, help="Override HILBERT_CR_LOG_LEVEL for this run")
    parser.add_argument("--output", default=None, help="Write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_threads(p: argparse.ArgumentParser) -> None:
        p.add_argument("--threads", type=_positive, default=settings.threads, help="Worker threads for box sweeps")

    p = sub.add_parser("delta", help="Largest absolute maximal minor of the cone matrix")
    p.add_argument("cone", help="Cone file")

    p = sub.add_parser("hilbert", help="Hilbert basis of the cone as a basis file")
    p.add_argument("cone", help="Cone file")

    p = sub.add_parser("decompose", help="Decompose a cone point into Hilbert basis elements")
    p.add_argument("cone", help="Cone file")
    p.add_argument("point", nargs="+", help="Integer coordinates of the point")
    p.add_argument("--strategy", choices=STRATEGIES, default="oracle")
    p.add_argument("--cap", type=_positive, default=None, help="Largest subset size the oracle tries")
    p.add_argument("--strict", action="store_true", help="Fail instead of closing a stuck descent")
    p.add_argument("--exact-membership", action="store_true", help="Also run the exact D-membership test")

    p = sub.add_parser("cr", help="Largest representation length over a box")
    p.add_argument("cone", help="Cone file")
    p.add_argument("--box", type=int, required=True, help="Box radius")
    p.add_argument("--cap", type=_positive, default=None)
    with_threads(p)

    p = sub.add_parser("density", help="Fraction of box points with representation length at most k")
    p.add_argument("cone", help="Cone file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--box", type=int, nargs="+", required=True, help="Box radii")
    with_threads(p)

    p = sub.add_parser("d-density", help="Fraction of box points in the certified set D")
    p.add_argument("cone", help="Cone file")
    p.add_argument("--box", type=int, nargs="+", required=True, help="Box radii")

    p = sub.add_parser("verify", help="Certify a Hilbert basis file over a box")
    p.add_argument("cone", help="Cone file")
    p.add_argument("basis", help="Basis file")
    p.add_argument("--box", type=int, required=True, help="Box radius")

    p = sub.add_parser("pigeonhole", help="Pigeonhole point of a square cone matrix")
    p.add_argument("cone", help="Cone file")

    p = sub.add_parser("random-suite", help="Run a seeded acceptance suite")
    p.add_argument("--kind", default="thm3", help="thm3, thm4, thm1, icp, lemma3, lemma2, algebra or hilbert")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=None, help="Number of instances (suite default when omitted)")
    p.add_argument("--n", type=int, default=None, help="Fix the dimension of every instance")
    p.add_argument("--delta-max", type=int, default=None, help="Largest modularity drawn")
    p.add_argument("--box", type=int, default=None, help="Box radius of box-based suites")
    p.add_argument("--points", type=_positive, default=10, help="Points per descent instance")
    with_threads(p)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse the command line, run one command and exit with its code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        configure_logging(args.log_level, settings.log_json)
    if not hasattr(args, "threads"):
        args.threads = 1
    logger.info("command started", command=args.command)

    try:
        code = dispatch(args)
    except StuckError as e:
        code = error_handler.handle_error(e, args.command)
        if e.trace is not None:
            sys.stderr.write(f"stuck after {len(e.trace.steps)} descent steps\n")
    except HilbertCaratheodoryError as e:
        code = error_handler.handle_error(e, args.command)
        sys.stderr.write(f"error: {e}\n")
    except ValueError as e:
        code = error_handler.handle_error(PreconditionError(str(e)), args.command)
        sys.stderr.write(f"error: {e}\n")

    logger.info("command finished", command=args.command, exit_code=code)
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    run()
