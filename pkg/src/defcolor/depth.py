"""Exact tree-depth and connected tree-depth with verifying witnesses,
plus the parameter translations used for excluded-minor coloring bounds.

Connected tree-depth ctd(G) is the least height of a single rooted tree
whose closure contains G as a subgraph; tree-depth is the maximum of ctd
over components.  For a possibly-disconnected graph the single-tree value
follows the packing rule: the maximum component ctd, plus one unless the
maximum is attained by exactly one component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import SizeLimitError
from .graphs import (
    Graph,
    RootedTree,
    bfs_distances,
    canonical_key,
    induced_components,
)

DEFAULT_EXACT_LIMIT = 20

# canonical-form memo lookups pay off only once subgraphs are big enough to
# recur under many labelings
_CANON_MIN_SIZE = 6


@dataclass(frozen=True)
class DepthReport:
    """Exact depth values plus a verifying witness tree.

    ``witness`` is a rooted tree on exactly the input's vertices (identity
    embedding) whose closure contains the input as a subgraph and whose
    height equals ``ctd``.  ``ctd - 1 <= td <= ctd`` always holds.
    """

    td: int
    ctd: int
    witness: RootedTree
    embedding: tuple[int, ...]


@dataclass(frozen=True)
class ClusteredBounds:
    """Coloring-number bounds for the class excluding the given pattern.

    ``conditional_planar`` applies only when the excluded pattern is planar;
    planarity is not decided here, the field is informational.
    """

    lower: int
    general: int
    conditional_planar: int


class _DepthSolver:
    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[frozenset[int], int] = {}
        self.canon_memo: dict[tuple, int] = {}

    # -- bounds ----------------------------------------------------------

    def _greedy_clique(self, vs: frozenset[int]) -> int:
        g = self.g
        best = 1
        for start in vs:
            clique = {start}
            common = g.adj[start] & vs
            while common:
                v = max(common, key=lambda u: (len(g.adj[u] & common), -u))
                clique.add(v)
                common &= g.adj[v]
            best = max(best, len(clique))
        return best

    def _path_bound(self, vs: frozenset[int]) -> int:
        # td of a path on m vertices is floor(log2 m) + 1 = m.bit_length();
        # a shortest path is induced, and td is subgraph-monotone
        sub, _ = self.g.subgraph(vs)
        far = 0
        for _ in range(2):
            dist = bfs_distances(sub, [far])
            far = max(range(sub.n), key=lambda v: (dist[v], -v))
        m = max(bfs_distances(sub, [far])) + 1
        return m.bit_length()

    def _greedy_upper(self, vs: frozenset[int]) -> int:
        if not vs:
            return 0
        comps = induced_components(self.g, vs)
        return max(self._greedy_upper_connected(c) for c in comps)

    def _greedy_upper_connected(self, vs: frozenset[int]) -> int:
        if len(vs) == 1:
            return 1
        v = max(vs, key=lambda u: (len(self.g.adj[u] & vs), -u))
        return 1 + self._greedy_upper(vs - {v})

    # -- exact values ------------------------------------------------------

    def td_value(self, vs: frozenset[int]) -> int:
        """Least rooted-forest height containing g[vs]: max component ctd."""
        if not vs:
            return 0
        comps = induced_components(self.g, vs)
        return max(self.ctd_connected(c) for c in comps)

    def packed_value(self, vs: frozenset[int]) -> int:
        """Least single-tree height containing g[vs] (vs may be disconnected).

        At most one maximum-ctd component can embed through the tree's root;
        any second one pays one extra level.
        """
        if not vs:
            return 0
        comps = induced_components(self.g, vs)
        vals = sorted((self.ctd_connected(c) for c in comps), reverse=True)
        if len(vals) >= 2 and vals[1] == vals[0]:
            return vals[0] + 1
        return vals[0]

    def ctd_connected(self, vs: frozenset[int]) -> int:
        # For connected g a minimum-height witness roots at a graph vertex v
        # and hangs a forest containing g - v below it.
        n = len(vs)
        if n == 1:
            return 1
        if n == 2:
            return 2
        got = self.memo.get(vs)
        if got is not None:
            return got
        ckey = None
        if n >= _CANON_MIN_SIZE:
            sub, _ = self.g.subgraph(vs)
            ckey = canonical_key(sub)
            got = self.canon_memo.get(ckey)
            if got is not None:
                self.memo[vs] = got
                return got
        lb = max(self._greedy_clique(vs), self._path_bound(vs))
        best = self._greedy_upper_connected(vs)
        if best > lb:
            order = sorted(vs, key=lambda u: (-len(self.g.adj[u] & vs), u))
            for v in order:
                val = 1 + self.td_value(vs - {v})
                if val < best:
                    best = val
                if best == lb:
                    break
        self.memo[vs] = best
        if ckey is not None:
            self.canon_memo[ckey] = best
        return best

    # -- witness extraction -------------------------------------------------

    def packed_tree(self, vs: frozenset[int], parent: list) -> Optional[int]:
        """Fill parent links for a packed single tree on vs; returns its root.

        Components besides the deepest hang off the top tree's root, which
        realizes exactly the packed value.
        """
        if not vs:
            return None
        comps = induced_components(self.g, vs)
        comps.sort(key=lambda c: (-self.ctd_connected(c), min(c)))
        top = self.connected_tree(comps[0], parent)
        for comp in comps[1:]:
            sub_root = self.connected_tree(comp, parent)
            parent[sub_root] = top
        return top

    def forest_trees(self, vs: frozenset[int], parent: list) -> list[int]:
        return [
            self.connected_tree(c, parent) for c in induced_components(self.g, vs)
        ]

    def connected_tree(self, vs: frozenset[int], parent: list) -> int:
        value = self.ctd_connected(vs)
        if len(vs) == 1:
            return next(iter(vs))
        for v in sorted(vs):
            if 1 + self.td_value(vs - {v}) == value:
                for sub_root in self.forest_trees(vs - {v}, parent):
                    parent[sub_root] = v
                return v
        raise AssertionError("internal: no root attains the memoized value")


def connected_tree_depth(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> DepthReport:
    """Exact ctd, td, and a verifying height-ctd witness tree.

    ``ctd`` is the single-tree value of the whole input (packing rule when
    disconnected); ``td`` is the maximum over components.
    """
    if g.n > limit:
        raise SizeLimitError(f"exact mode limited to {limit} vertices (got {g.n})")
    if g.n == 0:
        return DepthReport(0, 0, RootedTree((), None, 0), ())
    solver = _DepthSolver(g)
    comps = induced_components(g, range(g.n))
    comp_vals = [solver.ctd_connected(c) for c in comps]
    td = max(comp_vals)
    ctd = solver.packed_value(frozenset(range(g.n)))
    parent: list[Optional[int]] = [None] * g.n
    solver.packed_tree(frozenset(range(g.n)), parent)
    witness = RootedTree.from_parents(parent)
    if witness.height != ctd:
        raise AssertionError("internal: witness height disagrees with ctd")
    return DepthReport(td, ctd, witness, tuple(range(g.n)))


def verify_depth_witness(g: Graph, report: DepthReport) -> bool:
    """Every input edge must map to an ancestor pair of the witness tree."""
    tree = report.witness
    if tree.n != g.n or report.embedding != tuple(range(g.n)):
        return False
    depth = tree.depths()
    anc = [set(tree.ancestors(v)) for v in range(tree.n)]
    for u, v in g.edges():
        lo, hi = (u, v) if depth[u] <= depth[v] else (v, u)
        if lo not in anc[hi]:
            return False
    return tree.height == report.ctd


def tree_depth(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    return connected_tree_depth(g, limit=limit).td


def omega_delta_excluded(h_pattern: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    """ctd(H) - 1: the defective chromatic number of the H-minor-free class."""
    if h_pattern.n == 0:
        raise ValueError("pattern must be nonempty")
    return connected_tree_depth(h_pattern, limit=limit).ctd - 1


def clustered_bounds(
    h_pattern: Graph, limit: int = DEFAULT_EXACT_LIMIT
) -> ClusteredBounds:
    """Clustered-coloring bounds for the class excluding ``h_pattern``."""
    td = connected_tree_depth(h_pattern, limit=limit).ctd
    return ClusteredBounds(lower=td - 1, general=3 * td - 3, conditional_planar=2 * td - 2)
