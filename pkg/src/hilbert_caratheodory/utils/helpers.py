from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Callable, List, Sequence, Tuple


def ensure_directory_exists(directory_path: str) -> None:
    """
    Ensure a directory exists, create it if it doesn't.
    """
    Path(directory_path).mkdir(parents=True, exist_ok=True)


def primitive(vector: Sequence[int]) -> Tuple[int, ...]:
    """
    Divide an integer vector by the gcd of its entries (zero stays zero).
    """
    g = 0
    for v in vector:
        g = gcd(g, v)
    if g <= 1:
        return tuple(vector)
    return tuple(v // g for v in vector)


def dot(u: Sequence, v: Sequence):
    """Exact inner product."""
    return sum(a * b for a, b in zip(u, v))


def support(vector: Sequence) -> Tuple[int, ...]:
    """Indices of the non-zero entries."""
    return tuple(i for i, v in enumerate(vector) if v != 0)


def format_fraction(value) -> str:
    """Exact ``a/b`` rendering; integers keep the ``/1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def map_ordered(fn: Callable, items: List, threads: int = 1) -> List:
    """``[fn(x) for x in items]``, spread over a thread pool when threads > 1."""
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
