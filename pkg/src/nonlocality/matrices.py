"""Sparse binary matrices and the alist interchange format.

Matrices are stored as per-row sorted column supports.  The alist
format is the usual one for LDPC parity checks: dimensions, max
weights, per-column and per-row weights, then 1-based index lists
(zero padding tolerated beyond the declared weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable

import numpy as np

from .errors import AlistFormatError, NonlocalityError


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    row_support: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise NonlocalityError("matrix dimensions must be nonnegative")
        if len(self.row_support) != self.rows:
            raise NonlocalityError("row_support length does not match rows")
        for r, support in enumerate(self.row_support):
            prev = -1
            for c in support:
                if c < 0 or c >= self.cols:
                    raise NonlocalityError(f"entry ({r},{c}) out of range")
                if c <= prev:
                    raise NonlocalityError(f"row {r} support not sorted/unique")
                prev = c

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        per_row: list[set[int]] = [set() for _ in range(rows)]
        for r, c in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise NonlocalityError(f"entry ({r},{c}) out of range")
            if c in per_row[r]:
                raise NonlocalityError(f"duplicate entry ({r},{c})")
            per_row[r].add(c)
        return cls(rows, cols, tuple(tuple(sorted(s)) for s in per_row))

    @classmethod
    def from_dense(cls, arr: np.ndarray) -> "BinaryMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise NonlocalityError("dense input must be 2-d")
        rows, cols = arr.shape
        support = tuple(tuple(int(c) for c in np.flatnonzero(arr[r] % 2)) for r in range(rows))
        return cls(rows, cols, support)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, support in enumerate(self.row_support):
            for c in support:
                out[r, c] = 1
        return out

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Rows packed into ints, bit i = column i."""
        masks = []
        for support in self.row_support:
            m = 0
            for c in support:
                m |= 1 << c
            masks.append(m)
        return tuple(masks)

    @cached_property
    def col_support(self) -> tuple[tuple[int, ...], ...]:
        cols: list[list[int]] = [[] for _ in range(self.cols)]
        for r, support in enumerate(self.row_support):
            for c in support:
                cols[c].append(r)
        return tuple(tuple(c) for c in cols)

    @property
    def row_weights(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.row_support)

    @property
    def col_weights(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.col_support)

    @property
    def nnz(self) -> int:
        return sum(len(s) for s in self.row_support)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.cols, self.rows, self.col_support)


def _int_fields(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise AlistFormatError("non-integer token", lineno) from None


def parse_alist(text: str) -> BinaryMatrix:
    """Parse alist text into a BinaryMatrix.

    The column and row sections are cross-checked against each other
    and against the declared weights; indices are 1-based, and zeros
    are accepted only as padding past a line's declared weight.
    """
    stripped = [ln.strip() for ln in text.splitlines()]
    idx = [i for i, ln in enumerate(stripped) if ln]
    cursor = 0

    def fields(kind: str) -> tuple[list[int], int]:
        nonlocal cursor
        if cursor >= len(idx):
            raise AlistFormatError(f"unexpected end of input, wanted {kind}", len(stripped))
        lineno = idx[cursor] + 1
        cursor += 1
        return _int_fields(stripped[lineno - 1], lineno), lineno

    head, lineno = fields("header")
    if len(head) != 2:
        raise AlistFormatError("header must be 'cols rows'", lineno)
    ncols, nrows = head
    if ncols < 0 or nrows < 0:
        raise AlistFormatError("negative dimension", lineno)
    maxes, lineno = fields("max weights")
    if len(maxes) != 2:
        raise AlistFormatError("expected 'max_col_weight max_row_weight'", lineno)

    def weight_line(count: int, what: str) -> list[int]:
        if count == 0:
            return []
        vals, here = fields(f"{what} weights")
        if len(vals) != count:
            raise AlistFormatError(f"expected {count} {what} weights", here)
        if any(v < 0 for v in vals):
            raise AlistFormatError(f"negative {what} weight", here)
        return vals

    col_w = weight_line(ncols, "column")
    row_w = weight_line(nrows, "row")

    def index_list(declared: int, limit: int, what: str) -> list[int]:
        vals, lineno = fields(f"{what} indices")
        entries = []
        for j, v in enumerate(vals):
            if j < declared:
                if v < 1 or v > limit:
                    raise AlistFormatError(f"{what} index {v} out of range (1-based)", lineno)
                entries.append(v - 1)
            elif v != 0:
                raise AlistFormatError(f"expected zero padding, found {v}", lineno)
        if len(entries) != declared:
            raise AlistFormatError(f"expected {declared} {what} indices", lineno)
        if len(set(entries)) != len(entries):
            raise AlistFormatError(f"duplicate {what} index", lineno)
        return entries

    col_lists = [index_list(col_w[c], nrows, "row") for c in range(ncols)]
    row_lists = [index_list(row_w[r], ncols, "column") for r in range(nrows)]
    if cursor != len(idx):
        raise AlistFormatError("trailing content after alist block", idx[cursor] + 1)

    from_cols = {(r, c) for c, rows_ in enumerate(col_lists) for r in rows_}
    from_rows = {(r, c) for r, cols_ in enumerate(row_lists) for c in cols_}
    if from_cols != from_rows:
        raise AlistFormatError("column lists and row lists disagree", idx[-1] + 1)

    support = tuple(tuple(sorted(cols_)) for cols_ in row_lists)
    mat = BinaryMatrix(nrows, ncols, support)
    if maxes[0] < max(mat.col_weights, default=0) or maxes[1] < max(mat.row_weights, default=0):
        raise AlistFormatError("declared max weights below actual", idx[1] + 1)
    return mat


def write_alist(mat: BinaryMatrix) -> str:
    """Serialise to alist text (no zero padding)."""
    col_w = mat.col_weights
    row_w = mat.row_weights
    lines = [
        f"{mat.cols} {mat.rows}",
        f"{max(col_w, default=0)} {max(row_w, default=0)}",
        " ".join(str(w) for w in col_w),
        " ".join(str(w) for w in row_w),
    ]
    # A lone 0 keeps weight-zero lines nonempty, matching the padding rule.
    for c in range(mat.cols):
        lines.append(" ".join(str(r + 1) for r in mat.col_support[c]) or "0")
    for r in range(mat.rows):
        lines.append(" ".join(str(c + 1) for c in mat.row_support[r]) or "0")
    return "\n".join(lines) + "\n"
