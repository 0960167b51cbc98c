"""CSS stabilizer codes: constructions, parameters, connectivity graphs.

A code is a pair of binary check matrices (hx, hz) over the same n
qubits with hx @ hz.T = 0 over GF(2).  Distances are found by plain
weight-ordered search, exact up to a configurable budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import gf2
from .errors import CommutationError, NonlocalityError
from .graphs.core import ConnGraph
from .matrices import BinaryMatrix


@dataclass(frozen=True)
class StabilizerCode:
    """CSS code as X-type and Z-type check matrices over n qubits."""

    hx: BinaryMatrix
    hz: BinaryMatrix

    def __post_init__(self):
        if self.hx.cols != self.hz.cols:
            raise NonlocalityError("hx and hz must act on the same number of qubits")
        for i, xm in enumerate(self.hx.row_masks):
            for j, zm in enumerate(self.hz.row_masks):
                if gf2.parity(xm, zm):
                    raise CommutationError(i, j)

    @property
    def n(self) -> int:
        return self.hx.cols

    @cached_property
    def row_weight_max(self) -> int:
        """Largest stabilizer support (over both check types)."""
        return max(
            max(self.hx.row_weights, default=0),
            max(self.hz.row_weights, default=0),
        )

    @cached_property
    def col_weight_max(self) -> int:
        """Largest number of stabilizers any single qubit participates in."""
        if self.n == 0:
            return 0
        xw = self.hx.col_weights
        zw = self.hz.col_weights
        return max(x + z for x, z in zip(xw, zw))


def css_from_checks(hx: BinaryMatrix, hz: BinaryMatrix) -> StabilizerCode:
    """Validated CSS code; raises CommutationError naming the first bad row pair."""
    return StabilizerCode(hx=hx, hz=hz)


def surface_code(distance: int, periodic: bool = False) -> StabilizerCode:
    """Surface code of the given distance.

    periodic=True gives the toric layout (qubits on the edges of an
    L x L torus, n = 2L^2, k = 2).  periodic=False gives the rotated
    planar patch: an L x L data grid whose checks live on 2x2 cells in
    a checkerboard, n = L^2, k = 1.  In both cases d = L.
    """
    L = distance
    if L < 2:
        raise NonlocalityError("surface code needs distance >= 2")
    if periodic:
        n = 2 * L * L

        def h_edge(r: int, c: int) -> int:
            return (r % L) * L + (c % L)

        def v_edge(r: int, c: int) -> int:
            return L * L + (r % L) * L + (c % L)

        hx_rows = []
        hz_rows = []
        for r in range(L):
            for c in range(L):
                hx_rows.append(sorted({h_edge(r, c), h_edge(r, c - 1), v_edge(r, c), v_edge(r - 1, c)}))
                hz_rows.append(sorted({h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)}))
        hx = BinaryMatrix(len(hx_rows), n, tuple(tuple(row) for row in hx_rows))
        hz = BinaryMatrix(len(hz_rows), n, tuple(tuple(row) for row in hz_rows))
        return css_from_checks(hx, hz)

    # Rotated patch. Cell (i, j) covers the data qubits in rows {i-1, i}
    # and columns {j-1, j}; X cells sit on even i+j, Z cells on odd.
    # Weight-2 cells survive only on the X boundary (top/bottom) or the
    # Z boundary (left/right); corner cells are dropped.
    n = L * L
    hx_rows = []
    hz_rows = []
    for i in range(L + 1):
        for j in range(L + 1):
            support = sorted(
                r * L + c
                for r in (i - 1, i)
                for c in (j - 1, j)
                if 0 <= r < L and 0 <= c < L
            )
            if len(support) < 2:
                continue
            is_x = (i + j) % 2 == 0
            if len(support) == 2:
                on_row_boundary = i in (0, L)
                if on_row_boundary != is_x:
                    continue
            (hx_rows if is_x else hz_rows).append(tuple(support))
    hx = BinaryMatrix(len(hx_rows), n, tuple(hx_rows))
    hz = BinaryMatrix(len(hz_rows), n, tuple(hz_rows))
    return css_from_checks(hx, hz)


def hypergraph_product(h1: BinaryMatrix, h2: BinaryMatrix) -> StabilizerCode:
    """CSS code from the product of two classical parity-check matrices.

    With h1 of shape m1 x n1 and h2 of shape m2 x n2, the code has
    n1*n2 + m1*m2 qubits,
        hx = [h1 (x) I_n2 | I_m1 (x) h2^T]
        hz = [I_n1 (x) h2  | h1^T (x) I_m2]
    (столбцы split between the n1*n2 "primal" and m1*m2 "dual" blocks).
    """
    a1 = h1.to_dense()
    a2 = h2.to_dense()
    m1, n1 = a1.shape
    m2, n2 = a2.shape
    hx = np.hstack([np.kron(a1, np.eye(n2, dtype=np.uint8)), np.kron(np.eye(m1, dtype=np.uint8), a2.T)])
    hz = np.hstack([np.kron(np.eye(n1, dtype=np.uint8), a2), np.kron(a1.T, np.eye(m2, dtype=np.uint8))])
    return css_from_checks(BinaryMatrix.from_dense(hx % 2), BinaryMatrix.from_dense(hz % 2))


def random_regular_ldpc(n: int, dv: int, dc: int, seed: int, max_tries: int = 1000) -> BinaryMatrix:
    """(dv, dc)-regular classical parity-check matrix by the configuration model.

    Column stubs are matched to check stubs through one seeded
    permutation; a repeated (row, column) pair voids the draw entirely
    and a fresh permutation is taken.
    """
    if n <= 0 or dv <= 0 or dc <= 0:
        raise NonlocalityError("n, dv, dc must be positive")
    if (n * dv) % dc != 0:
        raise NonlocalityError(f"dc={dc} must divide n*dv={n * dv} (divisibility)")
    m = n * dv // dc
    rng = np.random.default_rng(seed)
    col_stubs = np.repeat(np.arange(n), dv)
    row_stubs = np.repeat(np.arange(m), dc)
    for _ in range(max_tries):
        perm = rng.permutation(len(col_stubs))
        pairs = set()
        ok = True
        for s, t in zip(col_stubs, row_stubs[perm]):
            key = (int(t), int(s))
            if key in pairs:
                ok = False
                break
            pairs.add(key)
        if ok:
            return BinaryMatrix.from_entries(m, n, sorted(pairs))
    raise NonlocalityError(f"no multi-edge-free matching found in {max_tries} tries")


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    d_certainty: str  # "exact" | "lower-bound"

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "d_certainty": self.d_certainty}


def _min_logical_weight(
    commute_masks: tuple[int, ...], trivial_basis: list[int], n: int, budget: int
) -> int | None:
    """Smallest weight of v with commute_masks @ v = 0 and v outside the基 span."""
    for w in range(1, budget + 1):
        for support in combinations(range(n), w):
            v = 0
            for q in support:
                v |= 1 << q
            if any((m & v).bit_count() & 1 for m in commute_masks):
                continue
            if not gf2.in_rowspace(v, trivial_basis):
                return w
    return None


def code_params(code: StabilizerCode, distance_budget: int = 6) -> CodeParams:
    """n, k and the distance (exact up to the budget, else a lower bound).

    The distance search enumerates supports in increasing weight on
    each side (X-type then Z-type logicals), so a hit at weight w is
    exact.  If neither side has a logical within the budget, d is
    reported as budget+1 with a lower-bound marker.
    """
    if distance_budget < 1:
        raise NonlocalityError("distance budget must be >= 1")
    n = code.n
    rx = gf2.rank(code.hx.row_masks)
    rz = gf2.rank(code.hz.row_masks)
    k = n - rx - rz
    x_basis = gf2.row_reduce(code.hx.row_masks)
    z_basis = gf2.row_reduce(code.hz.row_masks)
    dx = _min_logical_weight(code.hz.row_masks, x_basis, n, distance_budget)
    dz = _min_logical_weight(code.hx.row_masks, z_basis, n, distance_budget)
    found = [w for w in (dx, dz) if w is not None]
    if found:
        return CodeParams(n=n, k=k, d=min(found), d_certainty="exact")
    return CodeParams(n=n, k=k, d=distance_budget + 1, d_certainty="lower-bound")


def connectivity_graph(code: StabilizerCode) -> ConnGraph:
    """One vertex per qubit; an edge wherever two qubits share a check."""
    edges = set()
    for mat in (code.hx, code.hz):
        for support in mat.row_support:
            for a, b in combinations(support, 2):
                edges.add((a, b))
    return ConnGraph.from_edges(code.n, sorted(edges))
