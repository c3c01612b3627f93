"""Precomputed binomial coefficients and Stirling numbers of the second kind.

Both tables are built by their standard recurrences with exact integers.
``build_tables(limit)`` makes every index up to ``limit + 1`` valid, which
is exactly the range the layer-map construction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

_MPZ0 = mpz(0)
_MPZ1 = mpz(1)


@dataclass(frozen=True)
class CombinTables:
    """Square tables of binomials and Stirling-2 numbers, rows = first index."""

    binom: tuple
    stirling2: tuple
    limit: int


def build_tables(limit):
    """Build both tables, valid for all indices 0 .. limit + 1."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    size = limit + 2

    binom = []
    prev = None
    for m in range(size):
        row = [_MPZ0] * size
        row[0] = _MPZ1
        for j in range(1, m + 1):
            row[j] = prev[j - 1] + prev[j]
        binom.append(tuple(row))
        prev = row

    # Convention forced by the empty-partition boundary: S(0, 0) = 1,
    # S(m, 0) = 0 for m > 0.
    stirling2 = []
    prev = None
    for m in range(size):
        row = [_MPZ0] * size
        if m == 0:
            row[0] = _MPZ1
        else:
            for r in range(1, m + 1):
                row[r] = r * prev[r] + prev[r - 1]
        stirling2.append(tuple(row))
        prev = row

    return CombinTables(binom=tuple(binom), stirling2=tuple(stirling2), limit=limit)
