"""Separation profiles and the exponents/ratios derived from them.

The separation profile s(r) asks for the largest balanced-separator
size over all subgraphs on at most r vertices.  We cannot enumerate
subgraphs, so each sample carries a certified lower bound (exact
separator of an explicit witness subgraph) and a heuristic upper
estimate (largest heuristic separator seen among sampled subgraphs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import NonlocalityError
from .core import ConnGraph
from .separators import separator_exact, separator_heuristic
from .spectral import EXACT_SEARCH_CAP


@dataclass(frozen=True)
class ProfileSample:
    r: int
    lower: int  # certified: exact separator of some witness subgraph with <= r vertices
    upper: int  # heuristic: best separator estimate among sampled subgraphs
    witness_lower: str
    witness_upper: str


@dataclass(frozen=True)
class SeparationProfile:
    n: int
    samples: tuple[ProfileSample, ...]

    def lower_at(self, r: int) -> int:
        for s in self.samples:
            if s.r == r:
                return s.lower
        raise KeyError(f"no profile sample at r={r}")

    def upper_at(self, r: int) -> int:
        for s in self.samples:
            if s.r == r:
                return s.upper
        raise KeyError(f"no profile sample at r={r}")


def default_r_grid(n: int) -> tuple[int, ...]:
    """Geometric grid 2, 4, 8, ... capped and closed at n."""
    rs = []
    r = 2
    while r < n:
        rs.append(r)
        r *= 2
    if n >= 2:
        rs.append(n)
    return tuple(rs)


def separation_profile(
    g: ConnGraph,
    r_grid: tuple[int, ...] | None = None,
    seed: int = 0,
    exact_cap: int = EXACT_SEARCH_CAP,
) -> SeparationProfile:
    """Sampled separation profile with certified lower / heuristic upper bounds.

    Witness subgraphs: connected components, BFS balls grown from a few
    deterministic plus seeded centres, and the graph itself.  Witnesses
    within the exact-search cap get exact separators (these certify the
    lower bounds); larger ones only contribute heuristic estimates.
    """
    n = g.vertex_count
    if n < 2:
        raise NonlocalityError("separation profile needs at least two vertices")
    grid = tuple(sorted(set(r_grid if r_grid is not None else default_r_grid(n))))
    if not grid:
        raise NonlocalityError("empty r grid")
    if grid[0] < 2 or grid[-1] > n:
        raise NonlocalityError("r grid values must lie in [2, n]")

    pool: dict[frozenset[int], str] = {}

    def add(vertices, label: str) -> None:
        key = frozenset(vertices)
        if len(key) >= 1 and key not in pool:
            pool[key] = label

    for ci, comp in enumerate(g.components()):
        add(comp, f"component:{ci}")
    add(range(n), "graph")

    rng = np.random.default_rng(seed)
    centres = {0, int(np.argmax(g.degrees))}
    while len(centres) < min(6, n):
        centres.add(int(rng.integers(0, n)))
    ball_sizes = sorted({min(r, exact_cap) for r in grid} | {min(n, exact_cap)})
    for c in sorted(centres):
        order = g.bfs_order(c)
        for s in ball_sizes:
            if s <= len(order):
                add(order[:s], f"ball:{c}:{s}")

    certified: list[tuple[int, int, str]] = []  # (size, sep, label)
    estimates: list[tuple[int, int, str]] = []
    for key, label in sorted(pool.items(), key=lambda kv: (len(kv[0]), kv[1])):
        verts = sorted(key)
        sub = g.subgraph(verts)
        if len(verts) <= exact_cap:
            sep = separator_exact(sub).size
            certified.append((len(verts), sep, label))
            estimates.append((len(verts), sep, label))
        else:
            sep = separator_heuristic(sub, seed=seed).size
            estimates.append((len(verts), sep, label))

    samples = []
    for r in grid:
        lo, lo_w = 0, "none"
        for size, sep, label in certified:
            if size <= r and sep > lo:
                lo, lo_w = sep, label
        up, up_w = lo, lo_w
        for size, sep, label in estimates:
            if size <= r and sep > up:
                up, up_w = sep, label
        samples.append(ProfileSample(r=r, lower=lo, upper=up, witness_lower=lo_w, witness_upper=up_w))
    return SeparationProfile(n=n, samples=tuple(samples))


@dataclass(frozen=True)
class CmaxReport:
    c_max: float
    r0: int  # smallest r attaining c_max
    d_used: int
    samples_used: tuple[tuple[int, int], ...]  # (r, lower) pairs entering the max


_TIE_TOL = 1e-12


def cmax_report(profile: SeparationProfile, d: int) -> CmaxReport:
    """Max of log_r(lower(r)) over samples with r >= d; ties resolve to smaller r.

    Raises when no sample is in range, when a lower bound is trivial
    (zero), or when a lower bound is incompatible with balanced
    separators (which would imply an exponent >= 1).
    """
    if d < 1:
        raise NonlocalityError("distance must be positive")
    in_range = [s for s in profile.samples if s.r >= max(d, 2)]
    if not in_range:
        raise NonlocalityError("no profile samples at or above the distance")
    if any(s.lower < 1 for s in in_range):
        raise NonlocalityError("nontrivial separation profile required (zero lower bound)")
    best_c = -math.inf
    best_r = None
    used = []
    for s in in_range:
        c = math.log(s.lower) / math.log(s.r)
        if c >= 1.0 - _TIE_TOL:
            raise NonlocalityError(
                f"lower bound {s.lower} at r={s.r} is impossible for balanced separators"
            )
        used.append((s.r, s.lower))
        if c > best_c + _TIE_TOL:
            best_c = c
            best_r = s.r
    assert best_r is not None
    return CmaxReport(c_max=best_c, r0=best_r, d_used=d, samples_used=tuple(used))


@dataclass(frozen=True)
class GeneralizedBoundReport:
    n: int
    k: int
    d: int
    c_max: float
    r0: int
    s_upper_n: int
    rho_d: float | None  # d / s_upper(n)
    rho_k: float | None  # k / (d^{2(c_max-1)} * n * ln(n)^2)


def check_generalized_bounds(
    n: int, k: int, d: int, profile: SeparationProfile
) -> GeneralizedBoundReport:
    """Numeric ratios against the profile-driven ceilings on d and k.

    Reported ratios are diagnostics, not pass/fail verdicts: the hidden
    constants in the ceilings are unknown, so only the scaling of the
    ratios across a family is meaningful.
    """
    if n < 2:
        raise NonlocalityError("need n >= 2")
    if profile.n != n:
        raise NonlocalityError("profile was computed for a different graph size")
    try:
        s_up = profile.upper_at(n)
    except KeyError:
        raise NonlocalityError("profile must include a sample at r = n") from None
    cm = cmax_report(profile, d)
    rho_d = d / s_up if s_up > 0 else None
    ceiling = d ** (2.0 * (cm.c_max - 1.0)) * n * math.log(n) ** 2
    rho_k = k / ceiling if ceiling > 0 else None
    return GeneralizedBoundReport(
        n=n,
        k=k,
        d=d,
        c_max=cm.c_max,
        r0=cm.r0,
        s_upper_n=s_up,
        rho_d=rho_d,
        rho_k=rho_k,
    )
