"""Shared strategies and independent brute-force oracles.

The oracles here deliberately avoid the algorithms they check: plain
enumeration over labeled rooted trees, raw assignment enumeration for
minors, and exhaustive coloring enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from hypothesis import strategies as st

from defcolor.graphs import Graph, canonical_key


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def graphs_st(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.integers(0, 2 ** len(pairs) - 1)) if pairs else 0
    edges = [p for b, p in enumerate(pairs) if (mask >> b) & 1]
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs_st(draw, min_n=1, max_n=8):
    g = draw(graphs_st(min_n=min_n, max_n=max_n))
    if g.n <= 1:
        return g
    # force connectivity with a random spanning tree over the drawn edges
    extra = []
    for v in range(1, g.n):
        parent = draw(st.integers(0, v - 1))
        extra.append((parent, v))
    return Graph.from_edges(g.n, list(g.edges()) + extra)


# ---------------------------------------------------------------------------
# small-graph utilities


def bfs_dist_oracle(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    while queue:
        nxt = []
        for u in queue:
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        queue = nxt
    return dist


def max_clique_oracle(g: Graph) -> int:
    """Bron-Kerbosch with pivoting on bitmasks."""
    adj = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            adj[v] |= 1 << u
    best = 0

    def expand(r_size: int, p: int, x: int):
        nonlocal best
        if p == 0 and x == 0:
            best = max(best, r_size)
            return
        if r_size + bin(p).count("1") <= best:
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best_cover = -1
        m = pivot_pool
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            cover = bin(p & adj[v]).count("1")
            if cover > best_cover:
                best_cover = cover
                pivot = v
        cand = p & ~adj[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(r_size + 1, p & adj[v], x & adj[v])
            p ^= b
            x |= b
    expand(0, (1 << g.n) - 1, 0)
    return best


def all_graphs(n: int, connected_only=False) -> list[Graph]:
    """All graphs on exactly n vertices up to isomorphism.

    Grown incrementally: every n-vertex graph extends an (n-1)-vertex one
    by a new vertex with some neighborhood, so extending a complete list of
    smaller graphs and deduplicating canonically is complete.
    """
    from defcolor.graphs import induced_components

    graphs = _all_graphs_exact(n)
    if connected_only:
        return [
            g
            for g in graphs
            if g.n > 0 and len(induced_components(g, range(g.n))) == 1
        ]
    return graphs


@lru_cache(maxsize=None)
def _all_graphs_exact(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.from_edges(0, []),)
    seen = set()
    out = []
    for smaller in _all_graphs_exact(n - 1):
        base = smaller.edges()
        for mask in range(1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if (mask >> u) & 1]
            g = Graph.from_edges(n, base + extra)
            key = canonical_key(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


# ---------------------------------------------------------------------------
# tree-depth oracle: enumerate labeled rooted trees once per order


@lru_cache(maxsize=None)
def _rooted_trees(n: int) -> list[tuple[int, int]]:
    """(height, comparable-pair bitmask) for every labeled rooted tree on n
    vertices; pair (u, v), u < v, is bit u * n + v."""
    out = []
    for root in range(n):
        others = [v for v in range(n) if v != root]
        for parents in product(range(n), repeat=len(others)):
            parent = {v: p for v, p in zip(others, parents)}
            depth = {root: 0}
            ok = True
            for v in others:
                seen = {v}
                u = v
                hops = 0
                while u != root:
                    u = parent.get(u)
                    if u is None or u in seen or hops > n:
                        ok = False
                        break
                    seen.add(u)
                    hops += 1
                if not ok:
                    break
            if not ok:
                continue
            # depths and ancestor closure
            anc_mask = 0
            height = 1
            for v in others:
                chain = []
                u = v
                while u != root:
                    u = parent[u]
                    chain.append(u)
                height = max(height, len(chain) + 1)
                for a in chain:
                    lo, hi = min(a, v), max(a, v)
                    anc_mask |= 1 << (lo * n + hi)
            out.append((height, anc_mask))
    return out


def ctd_oracle(g: Graph) -> int:
    """Least height of a rooted tree on exactly V(g) whose closure contains
    g; extra tree vertices never help, so this is exact."""
    if g.n == 0:
        return 0
    edge_mask = 0
    for u, v in g.edges():
        edge_mask |= 1 << (u * g.n + v)
    best = g.n + 1
    for height, anc in _rooted_trees(g.n):
        if height < best and edge_mask & ~anc == 0:
            best = height
    return best


# ---------------------------------------------------------------------------
# minor oracle: raw partition enumeration (numpy-vectorized)


def minor_oracle(host: Graph, pattern: Graph) -> bool:
    import numpy as np

    p, n = pattern.n, host.n
    if p == 0:
        return True
    if p > n:
        return False
    conn = np.zeros(1 << n, dtype=bool)
    adj_bits = [0] * n
    for v in range(n):
        for u in host.adj[v]:
            adj_bits[v] |= 1 << u
    for mask in range(1, 1 << n):
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj_bits[b.bit_length() - 1]
            frontier = nxt & mask & ~reach
            reach |= frontier
        conn[mask] = reach == mask
    adj_union = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1, 1 << n):
        low = mask & -mask
        adj_union[mask] = adj_union[mask ^ low] | adj_bits[low.bit_length() - 1]

    total = (p + 1) ** n
    codes = np.arange(total, dtype=np.int64)
    masks = np.zeros((p, total), dtype=np.int64)
    rest = codes
    for i in range(n):
        rest, digit = np.divmod(rest, p + 1)
        for j in range(p):
            masks[j] |= (digit == j).astype(np.int64) << i
    valid = np.ones(total, dtype=bool)
    for j in range(p):
        valid &= conn[masks[j]]
    for a, b in pattern.edges():
        valid &= (adj_union[masks[a]] & masks[b]) != 0
    return bool(valid.any())


# ---------------------------------------------------------------------------
# coloring oracle: full enumeration


def decide_defective_oracle(g: Graph, k: int, d: int) -> bool:
    for colors in product(range(1, k + 1), repeat=g.n):
        ok = True
        for v in range(g.n):
            same = sum(1 for u in g.adj[v] if colors[u] == colors[v])
            if same > d:
                ok = False
                break
        if ok:
            return True
    return False
