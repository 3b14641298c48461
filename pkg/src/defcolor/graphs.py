"""Core graph representation, rooted trees and their closures, and metric
primitives (balls, geodesics, contraction) used by every other module.

Graphs are immutable values: simple, undirected, vertex ids dense in
``range(n)``.  All operations return new graphs and are safe to share
across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BudgetExceededError, InputFormatError, NotConnectedError

DEFAULT_VERTEX_BUDGET = 10**6


class Graph:
    """Simple undirected graph with dense vertex ids 0..n-1.

    ``labels`` is an optional per-vertex opaque tag used to trace rewrites;
    it does not participate in equality.
    """

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, adj: Sequence[frozenset[int]], labels=None):
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._hash = None
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match n")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, [frozenset(s) for s in adj], labels)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``; returns (graph, old-id list).

        New ids follow ascending old ids, so the mapping is reproducible.
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = [frozenset(index[u] for u in self.adj[v] if u in index) for v in vs]
        labels = [self.labels[v] for v in vs] if self.labels is not None else None
        return Graph(len(vs), adj, labels), vs


def validate_graph(g: Graph) -> None:
    """Check the Graph invariants: no loops, symmetric adjacency, ids in range."""
    for v in range(g.n):
        if v in g.adj[v]:
            raise ValueError(f"self-loop at {v}")
        for u in g.adj[v]:
            if not 0 <= u < g.n:
                raise ValueError(f"neighbor {u} of {v} out of range")
            if v not in g.adj[u]:
                raise ValueError(f"asymmetric adjacency between {v} and {u}")


# ---------------------------------------------------------------------------
# Named small graphs


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# Rooted trees and closures


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree given by a parent array; ``parent[root] is None``.

    ``height`` counts the vertices on a longest root-to-leaf path, so the
    single-vertex tree has height 1 and the empty tree height 0.
    """

    parent: tuple[Optional[int], ...]
    root: Optional[int]
    height: int

    @staticmethod
    def from_parents(parent: Sequence[Optional[int]]) -> "RootedTree":
        n = len(parent)
        roots = [v for v in range(n) if parent[v] is None]
        if n == 0:
            return RootedTree((), None, 0)
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        root = roots[0]
        depth = [0] * n
        for v in range(n):
            seen = set()
            u, d = v, 0
            while parent[u] is not None:
                if u in seen:
                    raise ValueError("parent links contain a cycle")
                seen.add(u)
                u = parent[u]
                d += 1
                if d > n:
                    raise ValueError("parent links contain a cycle")
            depth[v] = d
        height = max(depth) + 1
        return RootedTree(tuple(parent), root, height)

    @property
    def n(self) -> int:
        return len(self.parent)

    def depth(self, v: int) -> int:
        """Number of edges from v up to the root."""
        d = 0
        while self.parent[v] is not None:
            v = self.parent[v]
            d += 1
        return d

    def depths(self) -> list[int]:
        out = [0] * self.n
        for v in range(self.n):
            out[v] = self.depth(v)
        return out

    def ancestors(self, v: int) -> Iterator[int]:
        """Proper ancestors of v, nearest first."""
        while self.parent[v] is not None:
            v = self.parent[v]
            yield v


def balanced_tree(height: int, arity: int) -> RootedTree:
    """Balanced ``arity``-ary tree of the given height, ids in BFS order."""
    if height < 1 or arity < 1:
        raise ValueError("height and arity must be positive")
    parent: list[Optional[int]] = [None]
    level = [0]
    for _ in range(height - 1):
        nxt = []
        for p in level:
            for _ in range(arity):
                parent.append(p)
                nxt.append(len(parent) - 1)
        level = nxt
    return RootedTree.from_parents(parent)


def closure(tree: RootedTree) -> Graph:
    """Ancestor-descendant comparability graph on the tree's vertices."""
    edges = []
    for v in range(tree.n):
        for a in tree.ancestors(v):
            edges.append((a, v))
    return Graph.from_edges(tree.n, edges)


def ct_order(height: int, arity: int) -> int:
    """Vertex count of ct(height, arity), exact in arbitrary precision."""
    if arity == 1:
        return height
    return (arity**height - 1) // (arity - 1)


def ct(height: int, arity: int, budget: int | None = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Closure of the balanced ``arity``-ary tree of the given height."""
    if height < 1 or arity < 1:
        raise ValueError("height and arity must be positive")
    size = ct_order(height, arity)
    if budget is not None and size > budget:
        raise BudgetExceededError(
            f"ct({height},{arity}) would have {size} vertices, budget {budget}",
            size=size,
        )
    return closure(balanced_tree(height, arity))


def join(g: Graph, h: Graph, budget: int | None = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Disjoint union of g and h plus all edges between the two sides.

    Vertices of g keep their ids; vertices of h are shifted by g.n.
    """
    n = g.n + h.n
    if budget is not None and n > budget:
        raise BudgetExceededError(f"join would have {n} vertices", size=n)
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(n, edges)


def disjoint_copies(
    count: int, g: Graph, budget: int | None = DEFAULT_VERTEX_BUDGET
) -> Graph:
    """Union of ``count`` disjoint copies of g, copies relabeled contiguously."""
    if count < 1:
        raise ValueError("count must be positive")
    n = count * g.n
    if budget is not None and n > budget:
        raise BudgetExceededError(f"{count} copies would have {n} vertices", size=n)
    edges = []
    for c in range(count):
        off = c * g.n
        edges += [(u + off, v + off) for u, v in g.edges()]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Metric primitives


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """BFS distance from the source set; -1 for unreachable vertices."""
    dist = [-1] * g.n
    frontier = []
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            frontier.append(s)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def ball(g: Graph, s: Iterable[int], radius: int) -> frozenset[int]:
    """Vertices within distance ``radius`` of the set s (s itself included)."""
    src = set(s)
    for v in src:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    dist = bfs_distances(g, src)
    return frozenset(v for v in range(g.n) if 0 <= dist[v] <= radius)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, each sorted internally, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_components(g: Graph, vs: Iterable[int]) -> list[frozenset[int]]:
    """Components of g[vs] expressed in g's vertex ids."""
    vset = set(vs)
    seen = set()
    out = []
    for s in sorted(vset):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w in vset and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def geodesic_from(g: Graph, v: int, length: int) -> Optional[list[int]]:
    """Geodesic of exactly ``length`` edges starting at v, or None.

    Among all such geodesics, returns the lexicographically least vertex
    sequence.  A path whose every step increases BFS depth from v is a
    geodesic, and conversely.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if length < 0:
        raise ValueError("length must be nonnegative")
    dist = bfs_distances(g, [v])
    if length == 0:
        return [v]
    # can_reach[u] = True if some strictly depth-increasing path from u hits
    # depth ``length``.
    by_depth: dict[int, list[int]] = {}
    for u in range(g.n):
        if dist[u] >= 0:
            by_depth.setdefault(dist[u], []).append(u)
    if length not in by_depth:
        return None
    can_reach = set(by_depth[length])
    for d in range(length - 1, -1, -1):
        for u in by_depth.get(d, []):
            if any(w in can_reach for w in g.adj[u] if dist[w] == d + 1):
                can_reach.add(u)
    if v not in can_reach:
        return None
    path = [v]
    cur = v
    for d in range(1, length + 1):
        nxt = min(
            w for w in g.adj[cur] if dist[w] == d and w in can_reach
        )
        path.append(nxt)
        cur = nxt
    return path


def contract_set(g: Graph, s: Iterable[int]) -> tuple[Graph, int]:
    """Contract the connected set s into one new vertex; returns (graph, id).

    Survivors keep their relative order with ids 0..m-1; the new vertex is
    last.  The new vertex's label is the tuple of old labels (or old ids when
    the input is unlabeled), which traces the contraction.
    """
    sset = sorted(set(s))
    if not sset:
        raise ValueError("cannot contract an empty set")
    for v in sset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    comps = induced_components(g, sset)
    if len(comps) > 1:
        raise NotConnectedError(min(comps[0]), min(comps[1]))
    inside = set(sset)
    survivors = [v for v in range(g.n) if v not in inside]
    index = {v: i for i, v in enumerate(survivors)}
    new_id = len(survivors)
    edges = set()
    for u, v in g.edges():
        iu = index.get(u, new_id)
        iv = index.get(v, new_id)
        if iu != iv:
            edges.add((min(iu, iv), max(iu, iv)))
    old_label = (lambda v: g.labels[v]) if g.labels is not None else (lambda v: v)
    labels = [old_label(v) for v in survivors] + [tuple(old_label(v) for v in sset)]
    return Graph.from_edges(new_id + 1, sorted(edges), labels), new_id


# ---------------------------------------------------------------------------
# Canonical forms (exact, for small graphs)


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """1-dimensional color refinement until stable."""
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[sig[v]] for v in range(g.n)]
        if new == colors:
            return colors
        colors = new


def _adjacency_code(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in g.adj[v]:
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def canonical_key(g: Graph) -> tuple:
    """Exact canonical form; two graphs are isomorphic iff keys are equal.

    Color refinement plus individualization backtracking with prefix
    pruning.  Exponential worst case; intended for the small graphs this
    toolkit manipulates (tens of vertices).
    """
    n = g.n
    if n == 0:
        return (0, ())
    m = g.edge_count()
    if m == 0 or m == n * (n - 1) // 2:
        # edgeless and complete graphs are canonical under any ordering
        return (n, _adjacency_code(g, list(range(n))))
    best: list[Optional[tuple[int, ...]]] = [None]

    def cells_of(colors: list[int]) -> list[list[int]]:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        return [cells[c] for c in sorted(cells)]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        cells = cells_of(colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [v for cell in cells for v in cell]
            code = _adjacency_code(g, order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        # branch on the first non-singleton cell; cell boundaries are
        # isomorphism-invariant so the minimum code is canonical
        for v in target:
            nxt = list(colors)
            nxt[v] = -1  # individualize below every existing color
            search(nxt)

    search([0] * n)
    return (n, best[0])


def _peeling_code(g: Graph, vs: frozenset[int]) -> Optional[tuple]:
    """Canonical code for closures of rooted forests (trivially perfect
    graphs): peel universal vertices, recurse on components.  None when the
    graph is outside the class."""
    if not vs:
        return ()
    comps = induced_components(g, vs)
    if len(comps) > 1:
        codes = [_peeling_code(g, c) for c in sorted(comps, key=min)]
        if any(c is None for c in codes):
            return None
        return ("forest", tuple(sorted(codes)))
    comp = comps[0]
    universal = frozenset(v for v in comp if comp - {v} <= g.adj[v])
    if not universal:
        return None
    rest = _peeling_code(g, comp - universal)
    if rest is None:
        return None
    return ("chain", len(universal), rest)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    code_a = _peeling_code(a, frozenset(range(a.n)))
    if code_a is not None:
        code_b = _peeling_code(b, frozenset(range(b.n)))
        if code_b is not None:
            return code_a == code_b
        return False
    return canonical_key(a) == canonical_key(b)


# ---------------------------------------------------------------------------
# graph6 and edge-list JSON interchange

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (no header, no trailing newline)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    elif n <= 68719476735:
        prefix = "~~" + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    else:
        raise BudgetExceededError("graph6 supports at most 2^36-1 vertices", size=n)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return prefix + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line; raises InputFormatError with a byte offset."""
    s = text.strip()
    offset = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
        offset = len(_G6_HEADER)
    if not s:
        raise InputFormatError("empty graph6 string", offset)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise InputFormatError(f"invalid graph6 byte {ch!r}", offset + i)
    if s.startswith("~~"):
        if len(s) < 8:
            raise InputFormatError("truncated graph6 size field", offset)
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        body, body_off = s[8:], offset + 8
    elif s.startswith("~"):
        if len(s) < 4:
            raise InputFormatError("truncated graph6 size field", offset)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body, body_off = s[4:], offset + 4
    else:
        n = ord(s[0]) - 63
        body, body_off = s[1:], offset + 1
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise InputFormatError(
            f"graph6 body has {len(body)} chars, expected {expected} for n={n}",
            body_off + min(len(body), expected),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise InputFormatError("nonzero padding bits", body_off + len(body) - 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def to_edge_json(g: Graph) -> str:
    """Byte-stable edge-list JSON document (sorted edges, newline-terminated)."""
    doc = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse_edge_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise InputFormatError('edge-list JSON needs keys "n" and "edges"')
    n = doc["n"]
    edges = doc["edges"]
    if not isinstance(n, int) or n < 0:
        raise InputFormatError('"n" must be a nonnegative integer')
    if not isinstance(edges, list):
        raise InputFormatError('"edges" must be a list of [u,v] pairs')
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) for x in item)
        ):
            raise InputFormatError(f"bad edge entry {item!r}")
        pairs.append((item[0], item[1]))
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    """Parse either format: JSON object or graph6 line (auto-detected)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_edge_json(stripped)
    return parse_graph6(stripped)
