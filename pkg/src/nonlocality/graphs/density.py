"""Dense-subgraph machinery: expander extraction, robustness, peeling.

"Density" of a vertex set here means a certified floor t on the
separator size of some subgraph it contains; a set whose every
subgraph separates easily is thin and never blocks an embedding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from ..errors import NonlocalityError
from .core import ConnGraph
from .separators import separator_exact, separator_heuristic
from .spectral import EXACT_SEARCH_CAP, ExpansionReport, vertex_expansion

if TYPE_CHECKING:  # pragma: no cover
    from ..embeddings import Embedding


@dataclass(frozen=True)
class ExtractResult:
    found: bool
    vertices: tuple[int, ...]  # original labels of the surviving subgraph
    expansion: ExpansionReport | None
    separator_sizes: tuple[int, ...]  # sizes found while recursing
    target: int


def extract_expander_subgraph(g: ConnGraph, t: int, seed: int = 0) -> ExtractResult:
    """Search for a subgraph that resists separators below size t.

    Recursively splits along heuristic separators: while a separator
    smaller than t turns up, descend into the larger side.  Success
    returns the surviving subgraph (at least t/2 vertices) with its
    expansion report; failure returns the chain of small separators
    that exhausted the graph.
    """
    if t < 1:
        raise NonlocalityError("density target t must be >= 1")
    current = list(range(g.vertex_count))
    chain: list[int] = []
    min_size = max(1, math.ceil(t / 2))
    while True:
        if len(current) < min_size:
            return ExtractResult(False, tuple(current), None, tuple(chain), t)
        sub = g.subgraph(current)
        sep = separator_heuristic(sub, seed=seed)
        if sep.size >= t:
            expansion = vertex_expansion(sub, seed=seed) if len(current) >= 2 else None
            return ExtractResult(True, tuple(current), expansion, tuple(chain), t)
        chain.append(sep.size)
        side = sep.part_a if len(sep.part_a) >= len(sep.part_b) else sep.part_b
        current = [current[i] for i in side]


@dataclass(frozen=True)
class RemovalReport:
    removed_edges: tuple[tuple[int, int], ...]
    removed_count: int
    kept: ConnGraph
    target_t: int
    target_expansion: float
    extract: ExtractResult
    survivor_found: bool
    survivor_expansion: float | None


def remove_longest_edges_experiment(
    g: ConnGraph, emb: "Embedding", eps: float, seed: int = 0
) -> RemovalReport:
    """Drop the ceil(n*eps/24) longest edges, then hunt for a surviving expander.

    The survivor criterion asks for at least n/2 vertices whose
    expansion estimate (exact at small sizes, spectral above) reaches
    eps/18.  Ties in edge length break on the vertex pair, so the
    removal set is deterministic.
    """
    if eps < 0:
        raise NonlocalityError("expansion parameter must be nonnegative")
    n = g.vertex_count
    if emb.n != n:
        raise NonlocalityError("embedding size does not match the graph")
    m_rm = math.ceil(n * eps / 24.0) if eps > 0 else 0
    edges = list(g.edge_list)
    lengths = {
        (u, v): float(np.linalg.norm(emb.coords[u] - emb.coords[v])) for u, v in edges
    }
    edges.sort(key=lambda e: (-lengths[e], e))
    removed = tuple(edges[:m_rm])
    kept = ConnGraph.from_edges(n, edges[m_rm:])
    t = max(1, math.ceil(n * eps / 12.0))
    ext = extract_expander_subgraph(kept, t, seed=seed)
    target_eps = eps / 18.0
    est: float | None = None
    if ext.found and ext.expansion is not None:
        rep = ext.expansion
        est = rep.eps_exact if rep.eps_exact is not None else rep.eps_upper
    survivor = (
        ext.found
        and est is not None
        and 2 * len(ext.vertices) >= n
        and est >= target_eps
    )
    return RemovalReport(
        removed_edges=removed,
        removed_count=m_rm,
        kept=kept,
        target_t=t,
        target_expansion=target_eps,
        extract=ext,
        survivor_found=survivor,
        survivor_expansion=est,
    )


@dataclass(frozen=True)
class PeelBlock:
    vertices: tuple[int, ...]
    density_bound: int  # certified separator floor from a witness inside the block
    expansion: ExpansionReport | None


@dataclass(frozen=True)
class PeelResult:
    blocks: tuple[PeelBlock, ...]
    d_used: int
    k_used: int
    alpha: float
    budget: float  # alpha * k
    total_size: int


def _block_density(g: ConnGraph, vertices: tuple[int, ...], seed: int) -> int:
    """Certified separator floor: exact separator of a witness within the cap."""
    sub = g.subgraph(vertices)
    if sub.vertex_count <= EXACT_SEARCH_CAP:
        return separator_exact(sub).size
    rng = np.random.default_rng(seed)
    centres = {0, int(np.argmax(sub.degrees))}
    while len(centres) < 3:
        centres.add(int(rng.integers(0, sub.vertex_count)))
    best = 0
    for c in sorted(centres):
        ball = sub.bfs_order(c)[:EXACT_SEARCH_CAP]
        if len(ball) < 2:
            continue
        best = max(best, separator_exact(sub.subgraph(ball)).size)
    return best


def peel_dense_subgraphs(
    g: ConnGraph, d: int, k: int, alpha: float = 0.5, seed: int = 0
) -> PeelResult:
    """Repeatedly strip the densest component of size >= d until alpha*k is used.

    Blocks are whole components of the current (partially peeled) graph,
    ranked by certified density then size.  Peeling records nothing when
    even one block would overshoot the alpha*k budget; otherwise blocks
    accumulate while the running total stays below it, so every block
    except possibly the last fits under the budget.
    """
    if d < 1:
        raise NonlocalityError("block size floor d must be >= 1")
    if k < 0:
        raise NonlocalityError("k must be nonnegative")
    if not (0 < alpha <= 1):
        raise NonlocalityError("alpha must be in (0, 1]")
    budget = alpha * k
    blocks: list[PeelBlock] = []
    if budget < d:
        return PeelResult((), d, k, alpha, budget, 0)
    remaining = sorted(range(g.vertex_count))
    total = 0
    while total < budget and remaining:
        sub = g.subgraph(remaining)
        comps = [c for c in sub.components() if len(c) >= d]
        scored = []
        for comp in comps:
            verts = tuple(remaining[i] for i in comp)
            dens = _block_density(g, verts, seed)
            if dens >= 1:
                scored.append((dens, len(verts), verts))
        if not scored:
            break
        scored.sort(key=lambda s: (-s[0], -s[1], s[2]))
        dens, _, verts = scored[0]
        blk = g.subgraph(verts)
        expansion = vertex_expansion(blk, seed=seed) if blk.vertex_count >= 2 else None
        blocks.append(PeelBlock(vertices=verts, density_bound=dens, expansion=expansion))
        total += len(verts)
        keep = set(remaining) - set(verts)
        remaining = sorted(keep)
    return PeelResult(tuple(blocks), d, k, alpha, budget, total)
