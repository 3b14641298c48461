"""Search for homogeneous low-degree structures: many far-apart balls with
identical outside boundaries.

``find_homogeneous`` is a best-effort search: a returned triple satisfies
all conditions (re-verified), while ``None`` only means this strategy
failed, never that no triple exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graphs import Graph


@dataclass(frozen=True)
class HomogeneousTriple:
    x_set: frozenset[int]
    z_set: frozenset[int]
    w_set: frozenset[int]


def _x_ball(g: Graph, x_set: frozenset[int], center: int, radius: int) -> frozenset[int]:
    """Ball inside the induced subgraph on x_set."""
    dist = {center: 0}
    frontier = [center]
    d = 0
    while frontier and d < radius:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if v in x_set and v not in dist:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return frozenset(dist)


def boundary(g: Graph, region: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in region:
        out |= g.adj[v]
    return frozenset(out - region)


def check_homogeneous(
    g: Graph,
    triple: HomogeneousTriple,
    t: int,
    length: int,
    d: int,
    r: int,
    full_boundary: bool = False,
) -> Optional[str]:
    """Verify the four conditions; returns a failure description or None.

    With ``full_boundary`` the entire ball boundary must equal W (the
    deletion-step hypothesis); otherwise only its part outside X must.
    Distances between distinct components of g[X] count as infinite.
    """
    x_set, z_set, w_set = triple.x_set, triple.z_set, triple.w_set
    if len(z_set) != t:
        return f"need exactly {t} ball centers, got {len(z_set)}"
    if not z_set <= x_set:
        return "ball centers must lie inside X"
    if w_set & x_set:
        return "W must avoid X"
    if len(w_set) > r - 1:
        return f"|W| = {len(w_set)} exceeds r - 1 = {r - 1}"
    for v in x_set:
        if g.degree(v) > d:
            return f"vertex {v} in X has degree {g.degree(v)} > {d}"
    for z in sorted(z_set):
        reach = _x_ball(g, x_set, z, 2 * length - 2)
        if any(other != z and other in reach for other in z_set):
            return f"ball centers within distance {2 * length - 2} of {z} in g[X]"
        b = _x_ball(g, x_set, z, length - 1)
        nb = boundary(g, b)
        got = nb if full_boundary else nb - x_set
        if got != w_set:
            return f"ball of {z} has boundary {sorted(got)} != W {sorted(w_set)}"
    return None


def find_homogeneous(
    g: Graph, t: int, length: int, d: int, r: int
) -> Optional[HomogeneousTriple]:
    """Exhaustive boundary grouping over the full low-degree set.

    X is the set of all vertices of degree at most d; centers are grouped
    by their ball boundary outside X and packed greedily at pairwise
    distance >= 2 * length - 1 in g[X].  Deterministic: groups are tried
    by least center, centers ascending.
    """
    if min(t, length, d, r) < 1:
        raise ValueError("parameters must be positive")
    x_set = frozenset(v for v in range(g.n) if g.degree(v) <= d)
    if not x_set:
        return None
    groups: dict[frozenset[int], list[int]] = {}
    for z in sorted(x_set):
        b = _x_ball(g, x_set, z, length - 1)
        w = boundary(g, b) - x_set
        if len(w) <= r - 1:
            groups.setdefault(w, []).append(z)
    for w in sorted(groups, key=lambda w: min(groups[w])):
        centers = groups[w]
        if len(centers) < t:
            continue
        chosen: list[int] = []
        blocked: set[int] = set()
        for z in centers:
            if z in blocked:
                continue
            chosen.append(z)
            if len(chosen) == t:
                break
            blocked |= _x_ball(g, x_set, z, 2 * length - 2)
        if len(chosen) == t:
            triple = HomogeneousTriple(x_set, frozenset(chosen), w)
            problem = check_homogeneous(g, triple, t, length, d, r)
            if problem is not None:
                raise AssertionError(f"internal: search violated its contract: {problem}")
            return triple
    return None
