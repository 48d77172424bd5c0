"""
Command bodies behind the ``hilbert-cr`` entry point.

Each ``cmd_*`` function takes the parsed argparse namespace, writes its
output to stdout (or ``--output``) and returns the process exit code. Library
errors propagate to ``main.run`` which maps them through the error handler.
"""

import sys
from argparse import Namespace
from typing import Optional

from .caratheodory import (
    cr_box,
    d_density,
    decompose_face_descent,
    decompose_lp_rounding,
    density,
    sigma,
)
from .core.models import RunConfig
from .experiments import SuiteOptions, format_summary, run_suite
from .hilbert import hilbert_basis, pigeonhole_point, verify_hilbert_basis
from .io import (
    format_basis,
    format_decomposition,
    format_density,
    format_vector,
    parse_vector,
    read_basis,
    read_cone,
    write_text,
)
from .utils.error_handling import ParseError, PreconditionError
from .utils.logger import setup_logger
from .utils.validators import validate_box_radius, validate_cap, validate_strategy

logger = setup_logger(__name__)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        write_text(output, text)
    else:
        sys.stdout.write(text)


def _header(config: RunConfig) -> str:
    return "".join(line + "\n" for line in config.header_lines())


def _require_box(delta: int) -> int:
    if not validate_box_radius(delta):
        raise PreconditionError(f"box radius must be a positive integer, got {delta}")
    return delta


def cmd_delta(args: Namespace) -> int:
    """Print Δ(A) of a cone file."""
    C = read_cone(args.cone)
    _emit(f"{C.delta}\n", args.output)
    return 0


def cmd_hilbert(args: Namespace) -> int:
    """Write the Hilbert basis of a cone file as a basis file."""
    C = read_cone(args.cone)
    HB = hilbert_basis(C)
    logger.info("hilbert basis", elements=len(HB), dimension=HB.dimension)
    _emit(format_basis(HB), args.output)
    return 0


def cmd_decompose(args: Namespace) -> int:
    """Decompose one point with the oracle, LP rounding or face descent."""
    if not validate_strategy(args.strategy):
        raise PreconditionError(f"unknown strategy {args.strategy!r}")
    if not validate_cap(args.cap):
        raise PreconditionError(f"cap must be a positive integer, got {args.cap}")
    C = read_cone(args.cone)
    z = parse_vector(" ".join(args.point))
    config = RunConfig(
        command="decompose",
        inputs=[args.cone],
        point=list(z),
        strategy=args.strategy,
        cap=args.cap,
        strict=args.strict,
        exact_membership=args.exact_membership,
    )
    eligibility = None
    if args.strategy == "oracle":
        _, decomposition = sigma(z, hilbert_basis(C), args.cap)
    elif args.strategy == "lp":
        decomposition, eligibility = decompose_lp_rounding(z, hilbert_basis(C), args.exact_membership)
    else:
        decomposition, _ = decompose_face_descent(C.A, z, strict=args.strict)
    _emit(format_decomposition(decomposition, config, eligibility), args.output)
    return 0


def cmd_cr(args: Namespace) -> int:
    """Largest σ over the box ``[-δ, δ]^n`` (a lower bound on CR(C))."""
    delta = _require_box(args.box)
    C = read_cone(args.cone)
    config = RunConfig(command="cr", inputs=[args.cone], box=delta, cap=args.cap, threads=args.threads)
    result = cr_box(C, hilbert_basis(C), delta, args.cap, args.threads)
    text = _header(config) + f"cr_box {result.value}\npoint {format_vector(result.point)}\npoints {result.points}\n"
    _emit(text, args.output)
    return 0


def cmd_density(args: Namespace) -> int:
    """Exact fraction of box points with σ <= k, one CSV row per box radius."""
    boxes = [_require_box(b) for b in args.box]
    if args.k < 0:
        raise PreconditionError(f"k must be non-negative, got {args.k}")
    C = read_cone(args.cone)
    config = RunConfig(command="density", inputs=[args.cone], k=args.k, boxes=boxes, threads=args.threads)
    rows = density(C, hilbert_basis(C), args.k, boxes, args.threads)
    _emit(format_density(rows, config), args.output)
    return 0


def cmd_d_density(args: Namespace) -> int:
    """Exact fraction of box points lying in D, one CSV row per box radius."""
    boxes = [_require_box(b) for b in args.box]
    C = read_cone(args.cone)
    config = RunConfig(command="d-density", inputs=[args.cone], boxes=boxes)
    rows = d_density(C, hilbert_basis(C), boxes)
    _emit(format_density(rows, config), args.output)
    return 0


def cmd_verify(args: Namespace) -> int:
    """Certify a basis file over a box; exit code 1 when it fails."""
    delta = _require_box(args.box)
    C = read_cone(args.cone)
    HB = read_basis(args.basis, C)
    config = RunConfig(command="verify", inputs=[args.cone, args.basis], box=delta)
    report = verify_hilbert_basis(HB, delta)
    lines = [
        f"elements {report.elements}",
        f"checked_points {report.checked_points}",
        f"passed {str(report.passed).lower()}",
    ]
    lines.extend(f"not_irreducible {format_vector(h)}" for h in report.irreducibility_failures)
    lines.extend(f"not_generated {format_vector(x)}" for x in report.generation_failures)
    _emit(_header(config) + "\n".join(lines) + "\n", args.output)
    return 0 if report.passed else 1


def cmd_pigeonhole(args: Namespace) -> int:
    """Print the pigeonhole point of a square cone matrix."""
    C = read_cone(args.cone)
    h = pigeonhole_point(C.A)
    _emit(format_vector(h) + "\n", args.output)
    return 0


def cmd_random_suite(args: Namespace) -> int:
    """Run a seeded acceptance suite; exit code 1 when any instance fails."""
    if args.box is not None:
        _require_box(args.box)
    for name in ("count", "n", "delta_max"):
        value = getattr(args, name)
        if value is not None and value < 1:
            raise PreconditionError(f"--{name.replace('_', '-')} must be positive, got {value}")
    config = RunConfig(
        command="random-suite",
        kind=args.kind,
        seed=args.seed,
        count=args.count,
        n=args.n,
        delta_max=args.delta_max,
        box=args.box,
        threads=args.threads,
    )
    options = SuiteOptions(n=args.n, delta_max=args.delta_max, points=args.points, box=args.box)
    summary = run_suite(args.kind, args.seed, args.count, options, args.threads)
    _emit(_header(config) + format_summary(summary), args.output)
    return 0 if summary.passed else 1


COMMANDS = {
    "delta": cmd_delta,
    "hilbert": cmd_hilbert,
    "decompose": cmd_decompose,
    "cr": cmd_cr,
    "density": cmd_density,
    "d-density": cmd_d_density,
    "verify": cmd_verify,
    "pigeonhole": cmd_pigeonhole,
    "random-suite": cmd_random_suite,
}


def dispatch(args: Namespace) -> int:
    if args.command not in COMMANDS:
        raise ParseError(f"unknown command {args.command!r}")
    return COMMANDS[args.command](args)
