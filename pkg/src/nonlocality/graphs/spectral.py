"""Deterministic Laplacian eigensolver and vertex-expansion estimates.

The solver is a deflated power iteration on c*I - L with a seeded start
vector, so repeated runs give bit-identical results on the same
platform.  Library eigensolvers are deliberately avoided here: their
degenerate-eigenvector choices vary between builds, which would leak
into separator sweeps and layouts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import NonlocalityError
from .core import ConnGraph

SPECTRAL_TOL = 1e-8
SPECTRAL_MAX_ITER = 100_000

# Exponential-search ceiling shared by the exact searches in this package.
EXACT_SEARCH_CAP = 20


def laplacian_low_eigs(
    g: ConnGraph,
    count: int,
    seed: int = 0,
    tol: float = SPECTRAL_TOL,
    max_iter: int = SPECTRAL_MAX_ITER,
) -> tuple[np.ndarray, np.ndarray]:
    """Lowest `count` nontrivial Laplacian eigenpairs (ascending-ish).

    Returns (values, vectors) with vectors in columns, all orthogonal to
    the constant vector.  Values are clipped at zero.  Convergence is
    declared when the eigen-residual drops below tol*(1+|mu|); a hard
    iteration cap keeps near-degenerate spectra from spinning forever.
    """
    n = g.vertex_count
    if n < 2:
        raise NonlocalityError("need at least two vertices for a nontrivial spectrum")
    if count < 1 or count > n - 1:
        raise NonlocalityError("eigenpair count out of range")

    deg = g.degrees.astype(np.float64)
    src, dst = g._arc_arrays
    shift = 2.0 * max(1, g.max_degree) + 1.0

    def b_matvec(v: np.ndarray) -> np.ndarray:
        # (shift*I - L) v, with L = D - A.
        av = np.bincount(src, weights=v[dst], minlength=n) if len(src) else np.zeros(n)
        return (shift - deg) * v + av

    rng = np.random.default_rng(seed)
    basis = [np.full(n, 1.0 / math.sqrt(n))]
    values = []
    vectors = []
    for _ in range(count):
        v = rng.standard_normal(n)
        for b in basis:
            v -= (v @ b) * b
        nv = np.linalg.norm(v)
        if nv < 1e-12:  # absurdly unlucky draw; fall back to a unit vector
            v = np.zeros(n)
            v[len(basis) % n] = 1.0
            for b in basis:
                v -= (v @ b) * b
            nv = np.linalg.norm(v)
        v /= nv
        mu = 0.0
        for _ in range(max_iter):
            w = b_matvec(v)
            for b in basis:
                w -= (w @ b) * b
            mu = float(v @ w)
            resid = w - mu * v
            if float(np.linalg.norm(resid)) <= tol * (1.0 + abs(mu)):
                break
            nw = float(np.linalg.norm(w))
            if nw < 1e-300:
                break
            v = w / nw
        values.append(max(0.0, shift - mu))
        vectors.append(v.copy())
        basis.append(v)
    return np.array(values), np.stack(vectors, axis=1)


def lambda2(g: ConnGraph, seed: int = 0) -> float:
    """Second-smallest Laplacian eigenvalue (algebraic connectivity)."""
    vals, _ = laplacian_low_eigs(g, 1, seed=seed)
    return float(vals[0])


@dataclass(frozen=True)
class ExpansionReport:
    n: int
    eps_exact: float | None  # exact vertex expansion, only at small n
    lambda2: float
    eps_upper: float  # Cheeger-style upper bound sqrt(2*lambda2)
    max_degree: int
    connected: bool


def _expansion_bruteforce(g: ConnGraph) -> float:
    """min |boundary(A)| / |A| over nonempty A with |A| <= n/2."""
    n = g.vertex_count
    adj = [0] * n
    for v in range(n):
        for u in g.adjacency[v]:
            adj[v] |= 1 << u
    half = n // 2
    best = float("inf")
    # Depth-first enumeration keeps the running neighbourhood mask cheap.
    stack = [(v, 1 << v, adj[v], 1) for v in range(n - 1, -1, -1)]
    while stack:
        first_free, mask, nbr, size = stack.pop()
        boundary = (nbr & ~mask).bit_count()
        ratio = boundary / size
        if ratio < best:
            best = ratio
        if size < half:
            for v in range(first_free + 1, n):
                stack.append((v, mask | (1 << v), nbr | adj[v], size + 1))
    return best


def vertex_expansion(g: ConnGraph, seed: int = 0, exact_cap: int = EXACT_SEARCH_CAP) -> ExpansionReport:
    """Vertex expansion report: exact value below the cap, spectral bounds always.

    Disconnected graphs legitimately report eps_exact = 0 and lambda2
    near zero; the `connected` field flags that situation.
    """
    n = g.vertex_count
    if n < 2:
        raise NonlocalityError("vertex expansion needs at least two vertices")
    lam = lambda2(g, seed=seed)
    eps_up = math.sqrt(2.0 * max(0.0, lam))
    eps_exact = _expansion_bruteforce(g) if n <= exact_cap else None
    return ExpansionReport(
        n=n,
        eps_exact=eps_exact,
        lambda2=lam,
        eps_upper=eps_up,
        max_degree=g.max_degree,
        connected=g.is_connected(),
    )
