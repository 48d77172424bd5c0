"""
Plain-text formats for matrices, cones, polytopes, Hilbert bases and reports.

Every file starts with a header line ``<kind> <a> <b>`` followed by rows of
whitespace-separated decimal integers. Lines starting with ``#`` and blank
lines are ignored; so is anything after a ``#`` inside a line.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from ..core.models import Decomposition, DescentTrace, EligibilityReport, RunConfig
from ..exactlin import IntMatrix, IntVector
from ..geometry import ConeH, Polytope
from ..hilbert import HilbertBasis, basis_from_elements
from ..utils.error_handling import ParseError
from ..utils.helpers import ensure_directory_exists, format_fraction
from ..utils.logger import setup_logger
from ..utils.validators import validate_integer_row, validate_matrix_rows

logger = setup_logger(__name__)

KINDS = ("matrix", "cone", "polytope", "hilbert")


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _to_ints(tokens: Sequence[str], where: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"{where}: expected decimal integers, got {' '.join(tokens)!r}")


def parse_block(text: str, kind: str) -> Tuple[Tuple[int, int], List[List[int]]]:
    """
    Parse ``<kind> <a> <b>`` and its rows; returns the header sizes and the rows.

    The row count and width follow the kind: ``matrix rows cols``,
    ``cone n m`` (m rows of n), ``polytope n m`` (m rows of n + 1),
    ``hilbert n t`` (t rows of n).
    """
    if kind not in KINDS:
        raise ParseError(f"unknown file kind {kind!r}")
    lines = _content_lines(text)
    if not lines:
        raise ParseError(f"empty {kind} file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != kind:
        raise ParseError(f"expected header '{kind} <a> <b>', got {lines[0]!r}")
    a, b = _to_ints(header[1:], "header")
    if a < 0 or b < 0:
        raise ParseError(f"negative sizes in header {lines[0]!r}")

    if kind == "matrix":
        count, width = a, b
    elif kind == "polytope":
        count, width = b, a + 1
    else:
        count, width = b, a

    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"{kind} header announces {count} rows, found {len(body)}")
    rows = [_to_ints(line.split(), f"row {i + 1}") for i, line in enumerate(body)]
    if any(len(r) != width for r in rows):
        raise ParseError(f"every {kind} row must hold {width} integers")
    if rows and not validate_matrix_rows(rows, allow_empty_cols=True):
        raise ParseError(f"malformed {kind} rows")
    return (a, b), rows


def parse_vector(text: str) -> IntVector:
    """One line of decimal integers (commas are accepted as separators)."""
    lines = _content_lines(text.replace(",", " "))
    if len(lines) != 1:
        raise ParseError(f"expected one line of integers, got {len(lines)} lines")
    values = _to_ints(lines[0].split(), "vector")
    if not validate_integer_row(values):
        raise ParseError(f"malformed vector {text!r}")
    return tuple(values)


def _read(path) -> str:
    p = Path(path)
    if not p.is_file():
        raise ParseError(f"input file {p} does not exist")
    return p.read_text()


def parse_matrix(text: str) -> IntMatrix:
    _, rows = parse_block(text, "matrix")
    if not rows:
        raise ParseError("a matrix needs at least one row")
    return IntMatrix(tuple(tuple(r) for r in rows))


def parse_cone(text: str) -> ConeH:
    (n, m), rows = parse_block(text, "cone")
    if m == 0 or n == 0:
        raise ParseError("a cone needs at least one row and one column")
    return ConeH(IntMatrix(tuple(tuple(r) for r in rows)))


def parse_polytope(text: str) -> Polytope:
    (n, m), rows = parse_block(text, "polytope")
    if m == 0 or n == 0:
        raise ParseError("a polytope needs at least one row and one column")
    A = IntMatrix(tuple(tuple(r[:n]) for r in rows))
    return Polytope(A, tuple(r[n] for r in rows))


def parse_basis(text: str, C: ConeH) -> HilbertBasis:
    (n, _), rows = parse_block(text, "hilbert")
    if n != C.n:
        raise ParseError(f"basis in dimension {n} for a cone in dimension {C.n}")
    return basis_from_elements(C, rows)


def read_matrix(path) -> IntMatrix:
    return parse_matrix(_read(path))


def read_cone(path) -> ConeH:
    C = parse_cone(_read(path))
    logger.debug("cone read", path=str(path), shape=C.A.shape)
    return C


def read_polytope(path) -> Polytope:
    return parse_polytope(_read(path))


def read_basis(path, C: ConeH) -> HilbertBasis:
    return parse_basis(_read(path), C)


def format_vector(v: Iterable) -> str:
    return " ".join(str(x) for x in v)


def format_matrix(M: IntMatrix) -> str:
    return M.to_text()


def format_cone(C: ConeH) -> str:
    return C.A.to_text(header=f"cone {C.n} {C.m}")


def format_polytope(P: Polytope) -> str:
    rows = "\n".join(format_vector(tuple(r) + (beta,)) for r, beta in zip(P.A.rows, P.b))
    return f"polytope {P.A.ncols} {P.A.nrows}\n{rows}\n"


def format_basis(HB: HilbertBasis) -> str:
    """``hilbert n t`` followed by the sorted elements, one per row."""
    lines = [f"hilbert {HB.n} {len(HB)}"]
    lines.extend(format_vector(h) for h in HB.elements)
    return "\n".join(lines) + "\n"


def format_trace(trace: DescentTrace) -> List[str]:
    lines = [f"trace {len(trace.steps)}"]
    for step in trace.steps:
        parts = [f"step {step.action}", f"point {format_vector(step.point)}"]
        if step.element is not None:
            parts.append(f"element {format_vector(step.element)}")
        if step.multiplicity is not None:
            parts.append(f"multiplicity {step.multiplicity}")
        if step.rows is not None:
            parts.append(f"rows {format_vector(step.rows)}")
        parts.append(f"dimension {step.dimension}")
        lines.append(" | ".join(parts))
    return lines


def format_eligibility(report: EligibilityReport) -> List[str]:
    in_D = "unknown" if report.in_D is None else str(report.in_D).lower()
    return [
        f"delta_H {report.delta_H}",
        f"vertex_basis {format_vector(report.vertex_basis)}",
        f"vertex_multipliers {' '.join(report.multipliers)}",
        f"vertex_multipliers_ok {str(report.vertex_multipliers_ok).lower()}",
        f"in_D {in_D}",
    ]


def format_decomposition(
    d: Decomposition,
    config: Optional[RunConfig] = None,
    eligibility: Optional[EligibilityReport] = None,
) -> str:
    """
    Line-oriented decomposition report: the run header, then point, strategy,
    length, certified bound, one ``term <multiplicity> : <element>`` line per
    term and the optional descent trace.
    """
    lines = config.header_lines() if config is not None else []
    lines.append(f"point {format_vector(d.point)}")
    lines.append(f"strategy {d.strategy.value}")
    lines.append(f"length {d.length}")
    lines.append(f"certified_bound {'none' if d.certified_bound is None else d.certified_bound}")
    for term in d.terms:
        lines.append(f"term {term.multiplicity} : {format_vector(term.element)}")
    if eligibility is not None:
        lines.extend(format_eligibility(eligibility))
    if d.trace is not None:
        lines.extend(format_trace(d.trace))
    return "\n".join(lines) + "\n"


def format_density(rows, config: Optional[RunConfig] = None) -> str:
    """CSV table ``delta,count,total,fraction`` with exact fractions."""
    frame = pd.DataFrame(
        {
            "delta": [r.delta for r in rows],
            "count": [r.count for r in rows],
            "total": [r.total for r in rows],
            "fraction": [format_fraction(r.fraction) for r in rows],
        }
    )
    header = "".join(line + "\n" for line in config.header_lines()) if config is not None else ""
    return header + frame.to_csv(index=False, lineterminator="\n")


def write_text(path, text: str) -> Path:
    p = Path(path)
    if p.parent != Path("."):
        ensure_directory_exists(str(p.parent))
    p.write_text(text)
    logger.debug("output written", path=str(p), bytes=len(text))
    return p
