"""Exact closed-form counts for parking sequences.

All results are plain Python ints, which are unbounded: for 20 cars of
size 5 the linear count already exceeds 10^38, so fixed-width arithmetic
would silently overflow.
"""

from __future__ import annotations

from .core import SizeVector


def count_linear(sizes: SizeVector) -> int:
    """Number of linear parking sequences for the given car sizes.

    Product over cars 2..n of (y_1 + ... + y_{i-1} + n + 2 - i);
    the empty product (a single car) is 1.
    """
    n = sizes.n
    result = 1
    prefix = 0
    for i in range(2, n + 1):
        prefix += sizes.sizes[i - 2]
        result *= prefix + n + 2 - i
    return result


def count_circular(sizes: SizeVector) -> int:
    """Number of circular parking sequences on M = T + 1 spots.

    Equals M times the linear count.
    """
    return sizes.circle_size * count_linear(sizes)


def count_classical(n: int) -> int:
    """Number of classical parking functions on n unit cars: (n+1)^(n-1)."""
    if n < 1:
        raise ValueError("need at least one car")
    return (n + 1) ** (n - 1)


def option_count(sizes: SizeVector, i: int) -> int:
    """Number of choices car i has in the circular divider construction.

    Car 1 picks any of the M spots; car i >= 2 has
    y_1 + ... + y_{i-1} cruise targets plus n + 2 - i open intervals.
    """
    if not 1 <= i <= sizes.n:
        raise ValueError(f"car index {i} outside [1, {sizes.n}]")
    if i == 1:
        return sizes.circle_size
    return sum(sizes.sizes[: i - 1]) + sizes.n + 2 - i
