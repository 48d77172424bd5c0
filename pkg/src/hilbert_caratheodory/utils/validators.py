from typing import Any, Sequence

STRATEGIES = ("oracle", "lp", "descent")


def validate_integer_row(row: Sequence[Any]) -> bool:
    """
    Validate that a row holds only Python integers (bool excluded).
    """
    if not isinstance(row, (list, tuple)):
        return False
    return all(isinstance(v, int) and not isinstance(v, bool) for v in row)


def validate_matrix_rows(rows: Sequence[Sequence[Any]], allow_empty_cols: bool = False) -> bool:
    """
    Validate a rectangular, non-empty integer matrix given as rows.
    """
    if not rows:
        return False

    width = len(rows[0])
    if width == 0 and not allow_empty_cols:
        return False

    for row in rows:
        if len(row) != width:
            return False
        if not validate_integer_row(row):
            return False

    return True


def validate_box_radius(delta: Any) -> bool:
    """
    Validate a box radius: a positive integer.
    """
    return isinstance(delta, int) and not isinstance(delta, bool) and delta >= 1


def validate_cap(cap: Any) -> bool:
    """
    Validate a subset-size cap (positive integer) or ``None``.
    """
    if cap is None:
        return True
    return isinstance(cap, int) and not isinstance(cap, bool) and cap >= 1


def validate_strategy(strategy: str) -> bool:
    """
    Validate a decomposition strategy name.
    """
    return strategy in STRATEGIES
