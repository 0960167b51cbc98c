"""GF(2) linear algebra on rows packed into Python ints.

Bit i of a row mask is column i.  Packed rows keep the exhaustive
distance/rank loops cheap without pulling in a dense matrix library.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def rank(rows: Iterable[int]) -> int:
    """Rank of the span of the given row masks."""
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def row_reduce(rows: Iterable[int]) -> list[int]:
    """Reduced basis of the row space (each pivot bit unique to its row)."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    # Back-substitute so every basis row is the unique one holding its pivot.
    basis.sort(reverse=True)
    for i, b in enumerate(basis):
        pivot = 1 << (b.bit_length() - 1)
        for j in range(i):
            if basis[j] & pivot:
                basis[j] ^= b
    return basis


def reduce_vector(v: int, basis: Sequence[int]) -> int:
    """Residue of v modulo the span of a reduced basis."""
    for b in basis:
        v = min(v, v ^ b)
    return v


def in_rowspace(v: int, basis: Sequence[int]) -> bool:
    return reduce_vector(v, basis) == 0


def parity(a: int, b: int) -> int:
    """Inner product of two row masks over GF(2)."""
    return (a & b).bit_count() & 1
