"""Minor containment with explicit branch-set certificates.

``has_minor`` is complete in exhaustive mode within documented size limits;
heuristic mode is sound for presence and never reports a false absence
(``None`` means unknown there).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError, SizeLimitError
from .graphs import Graph, ct, induced_components

EXHAUSTIVE_HOST_LIMIT = 14
EXHAUSTIVE_PATTERN_LIMIT = 8
DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class MinorModel:
    """Map pattern vertex -> disjoint connected branch set in the host."""

    branch_sets: dict[int, frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "branch_sets", dict(sorted(self.branch_sets.items()))
        )

    def __eq__(self, other):
        return isinstance(other, MinorModel) and self.branch_sets == other.branch_sets

    def __hash__(self):
        return hash(tuple(sorted((k, v) for k, v in self.branch_sets.items())))


@dataclass(frozen=True)
class Violation:
    """First violated model clause plus witness vertices."""

    clause: str
    witness: tuple


def verify_model(
    host: Graph, pattern: Graph, model: MinorModel
) -> tuple[bool, Optional[Violation]]:
    """Check all MinorModel invariants; on failure return the first violation.

    Clause order: missing-branch-set, disjointness, connectivity,
    edge-coverage.  Ids out of range raise ValueError.
    """
    bs = model.branch_sets
    for pv, s in bs.items():
        if not 0 <= pv < pattern.n:
            raise ValueError(f"pattern vertex {pv} out of range")
        for v in s:
            if not 0 <= v < host.n:
                raise ValueError(f"host vertex {v} out of range")
    for pv in range(pattern.n):
        if pv not in bs or not bs[pv]:
            return False, Violation("missing-branch-set", (pv,))
    for pu in range(pattern.n):
        for pv in range(pu + 1, pattern.n):
            shared = bs[pu] & bs[pv]
            if shared:
                return False, Violation("disjointness", (pu, pv, min(shared)))
    for pv in range(pattern.n):
        comps = induced_components(host, bs[pv])
        if len(comps) > 1:
            return False, Violation("connectivity", (pv, min(comps[0]), min(comps[1])))
    for pu, pv in pattern.edges():
        if not any(host.adj[v] & bs[pv] for v in bs[pu]):
            return False, Violation("edge-coverage", (pu, pv))
    return True, None


def _connected_masks(g: Graph) -> list[int]:
    """All nonempty vertex masks inducing a connected subgraph, small first."""
    adj = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            adj[v] |= 1 << u
    out = []
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~reach
            reach |= frontier
        if reach == mask:
            out.append(mask)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return frozenset(out)


def has_minor(
    host: Graph,
    pattern: Graph,
    mode: str = "exhaustive",
    seed: int = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[MinorModel]:
    """Search for a branch-set model of ``pattern`` in ``host``.

    Exhaustive mode is complete: ``None`` means the pattern is not a minor.
    Inputs beyond the documented limits raise SizeLimitError there; callers
    must opt into ``mode="heuristic"`` (sound, incomplete) for larger inputs.
    """
    if pattern.n == 0:
        return MinorModel({})
    if pattern.edge_count() == 0:
        # minors of edgeless patterns only need enough vertices
        if host.n >= pattern.n:
            return MinorModel({pv: frozenset([pv]) for pv in range(pattern.n)})
        return None
    if host == pattern:
        return MinorModel({v: frozenset([v]) for v in range(pattern.n)})
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return None
    if mode == "heuristic":
        return _heuristic_search(host, pattern, seed)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if host.n > EXHAUSTIVE_HOST_LIMIT or pattern.n > EXHAUSTIVE_PATTERN_LIMIT:
        raise SizeLimitError(
            f"exhaustive mode supports host<={EXHAUSTIVE_HOST_LIMIT}, "
            f"pattern<={EXHAUSTIVE_PATTERN_LIMIT} vertices "
            f"(got {host.n}, {pattern.n}); use heuristic mode"
        )
    return _exhaustive_search(host, pattern, node_budget)


def _exhaustive_search(
    host: Graph, pattern: Graph, node_budget: int
) -> Optional[MinorModel]:
    p = pattern.n
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    # pattern neighbors already placed when a vertex comes up
    placed_nbrs = [
        [u for u in pattern.adj[order[i]] if pos[u] < i] for i in range(p)
    ]
    candidates = _connected_masks(host)
    host_adj = [0] * host.n
    for v in range(host.n):
        for u in host.adj[v]:
            host_adj[v] |= 1 << u
    full = (1 << host.n) - 1

    branch = [0] * p  # mask per order position
    branch_adj = [0] * p  # union of host adjacency over the branch
    nodes = 0

    def adj_union(mask: int) -> int:
        out = 0
        while mask:
            b = mask & -mask
            mask ^= b
            out |= host_adj[b.bit_length() - 1]
        return out

    def place(i: int, used: int) -> Optional[dict[int, frozenset[int]]]:
        nonlocal nodes
        if i == p:
            return {order[j]: _mask_to_set(branch[j]) for j in range(p)}
        free_needed = p - i - 1
        for mask in candidates:
            if mask & used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    f"minor search exceeded {node_budget} nodes", size=nodes
                )
            ok = True
            for u in placed_nbrs[i]:
                if not branch_adj[pos[u]] & mask:
                    ok = False
                    break
            if not ok:
                continue
            rest = full & ~(used | mask)
            if bin(rest).count("1") < free_needed:
                continue
            branch[i] = mask
            branch_adj[i] = adj_union(mask)
            got = place(i + 1, used | mask)
            if got is not None:
                return got
        return None

    found = place(0, 0)
    if found is None:
        return None
    model = MinorModel(found)
    ok, violation = verify_model(host, pattern, model)
    if not ok:
        raise AssertionError(f"internal: search produced invalid model: {violation}")
    return model


def _heuristic_search(host: Graph, pattern: Graph, seed: int) -> Optional[MinorModel]:
    """Greedy BFS-grown branch sets with randomized restarts; sound only."""
    rng = random.Random(seed)
    attempts = 64
    for _ in range(attempts):
        verts = list(range(host.n))
        rng.shuffle(verts)
        seeds = verts[: pattern.n]
        owner = {v: pv for pv, v in enumerate(seeds)}
        branch = [{seeds[pv]} for pv in range(pattern.n)]
        ok = True
        for pu, pv in sorted(pattern.edges(), key=lambda e: rng.random()):
            if any(host.adj[v] & branch[pv] for v in branch[pu]):
                continue
            # absorb a connecting path into pu's branch set
            path = _connect(host, branch[pu], branch[pv], owner)
            if path is None:
                ok = False
                break
            for v in path:
                owner[v] = pu
                branch[pu].add(v)
        if not ok:
            continue
        model = MinorModel({pv: frozenset(branch[pv]) for pv in range(pattern.n)})
        valid, _ = verify_model(host, pattern, model)
        if valid:
            return model
    return None


def _connect(host: Graph, src: set[int], dst: set[int], owner: dict[int, int]):
    """Interior of a shortest path from src to dst through unowned vertices."""
    prev: dict[int, Optional[int]] = {v: None for v in src}
    frontier = list(src)
    while frontier:
        nxt = []
        for u in frontier:
            for w in host.adj[u]:
                if w in prev:
                    continue
                if w in dst:
                    path = []
                    cur = u
                    while cur is not None and cur not in src:
                        path.append(cur)
                        cur = prev[cur]
                    return path
                if w not in owner:
                    prev[w] = u
                    nxt.append(w)
        frontier = nxt
    return None


def has_ct_minor(
    host: Graph,
    height: int,
    arity: int,
    mode: str = "exhaustive",
    seed: int = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[MinorModel]:
    """Test for a ct(height, arity) minor; delegates to has_minor."""
    pattern = ct(height, arity)
    return has_minor(host, pattern, mode=mode, seed=seed, node_budget=node_budget)
