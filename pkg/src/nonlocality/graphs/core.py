"""Connectivity-graph container and basic traversals.

Graphs here are simple and undirected: one vertex per qubit (or per
abstract node), an edge whenever two vertices must interact.  Vertices
are labelled 0..n-1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable, Sequence

import numpy as np

from ..errors import DisconnectedGraphError, NonlocalityError


@dataclass(frozen=True)
class ConnGraph:
    """Immutable adjacency-list graph.

    adjacency[v] holds the sorted neighbours of v; symmetry and the
    absence of self-loops are enforced at construction.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    max_degree: int

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise NonlocalityError("vertex_count must be nonnegative")
        if len(self.adjacency) != n:
            raise NonlocalityError("adjacency length does not match vertex_count")
        seen_max = 0
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if u < 0 or u >= n:
                    raise NonlocalityError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise NonlocalityError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise NonlocalityError(f"adjacency of {v} not sorted/unique")
                if v not in self.adjacency[u]:
                    raise NonlocalityError(f"edge ({v},{u}) missing its reverse")
                prev = u
            seen_max = max(seen_max, len(nbrs))
        if seen_max != self.max_degree:
            raise NonlocalityError("max_degree does not match adjacency")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ConnGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise NonlocalityError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise NonlocalityError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        max_deg = max((len(s) for s in nbrs), default=0)
        return cls(n, adjacency, max_deg)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        return tuple(
            (u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v
        )

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)

    @cached_property
    def _arc_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        # Both directions of every edge, for vectorised matvecs.
        src = []
        dst = []
        for u in range(self.vertex_count):
            for v in self.adjacency[u]:
                src.append(u)
                dst.append(v)
        return (np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64))

    @property
    def edge_count(self) -> int:
        return len(self.edge_list)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def subgraph(self, vertices: Sequence[int]) -> "ConnGraph":
        """Induced subgraph on the given vertices, relabelled by position."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise NonlocalityError("duplicate vertices in subgraph request")
        edges = []
        for v in vertices:
            for u in self.adjacency[v]:
                if u in index and v < u:
                    edges.append((index[v], index[u]))
        return ConnGraph.from_edges(len(vertices), edges)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.vertex_count
        out = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            comp = []
            queue = deque([start])
            seen[start] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def bfs_distances(self, start: int) -> list[int]:
        """Hop distances from start; -1 marks unreachable vertices."""
        dist = [-1] * self.vertex_count
        dist[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def bfs_order(self, start: int) -> list[int]:
        """Vertices of start's component in BFS order (ties by index)."""
        dist = [-1] * self.vertex_count
        dist[start] = 0
        order = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    order.append(u)
                    queue.append(u)
        return order


def diameter(g: ConnGraph) -> int:
    """Max hop distance over all vertex pairs; errors on disconnected input."""
    if g.vertex_count == 0:
        raise NonlocalityError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.vertex_count):
        dist = g.bfs_distances(v)
        far = max(dist)
        if min(dist) < 0:
            raise DisconnectedGraphError("diameter requires a connected graph")
        best = max(best, far)
    return best


def path_graph(n: int) -> ConnGraph:
    return ConnGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> ConnGraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return ConnGraph.from_edges(n, edges)


def complete_graph(n: int) -> ConnGraph:
    return ConnGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid_graph(rows: int, cols: int) -> ConnGraph:
    """rows x cols lattice; vertex (r, c) has index r*cols + c."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return ConnGraph.from_edges(rows * cols, edges)


def disjoint_union(parts: Sequence[ConnGraph]) -> ConnGraph:
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edge_list)
        offset += g.vertex_count
    return ConnGraph.from_edges(offset, edges)


def random_regular_graph(n: int, degree: int, seed: int, max_tries: int = 1000) -> ConnGraph:
    """Seeded d-regular simple graph via the configuration model.

    Stubs are matched through one permutation draw; any self-loop or
    repeated pair voids the whole draw and a fresh permutation is taken.
    """
    if n * degree % 2 != 0:
        raise NonlocalityError("n * degree must be even for a regular graph")
    if degree >= n:
        raise NonlocalityError("degree must be below the vertex count")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), degree)
    for _ in range(max_tries):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        ok = True
        seen = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            return ConnGraph.from_edges(n, [tuple(sorted((int(u), int(v)))) for u, v in pairs])
    raise NonlocalityError(f"no simple {degree}-regular matching found in {max_tries} tries")
