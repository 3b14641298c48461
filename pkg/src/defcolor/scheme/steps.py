"""The two entry-extension steps.

Both consume a homogeneous triple (X, Z, W): far-apart low-degree balls
with identical outside boundaries.

``del_step`` applies when every ball's full neighborhood is W: it buckets
ball centers by type vectors, contracts one ball of a uniform bucket of
size k + h and deletes the rest.

``contract_step`` applies when some ball reaches further into X: it types
the ball's vertices, splits a geodesic from the center into uniformly
typed chunks, and contracts a neighborhood O of the split path, cutting
the new vertex off from X.

Each step rebuilds arcs, hyperedges (the surviving, re-rooted and
label-upgraded families) and their witness structures exactly as the
construction prescribes; certification is the caller's job.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from ..constants import split_path_budget
from ..errors import (
    BranchMismatchError,
    BucketTooSmallError,
    GeodesicTooShortError,
    HypothesisViolationError,
)
from ..graphs import Graph, geodesic_from
from .entry import (
    Hyperedge,
    SchemeEntry,
    StepMeta,
    WitnessNode,
    flatten_groups,
    sort_hyperedges,
)
from .homogeneous import HomogeneousTriple, boundary, check_homogeneous
from .params import SchemeParams
from .split import geodesic_split


def _x_ball_multi(
    g: Graph, x_set: frozenset[int], sources, radius: int
) -> frozenset[int]:
    dist = {s: 0 for s in sources}
    frontier = list(dist)
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


def _subsets(items: list[int]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _common_checks(
    entry: SchemeEntry,
    x: frozenset[int],
    z: frozenset[int],
    w: frozenset[int],
    params: SchemeParams,
    full_boundary: bool,
) -> dict[int, int]:
    """Validate the step hypotheses; returns W as {entry vertex: original}."""
    if entry.graph.n <= params.n_freeze:
        raise HypothesisViolationError(
            f"entry has {entry.graph.n} <= N = {params.n_freeze} vertices; frozen"
        )
    problem = check_homogeneous(
        entry.graph,
        HomogeneousTriple(x, z, w),
        params.t,
        params.l0,
        params.d,
        params.r,
        full_boundary=full_boundary,
    )
    if problem is not None:
        raise HypothesisViolationError(problem)
    heads = entry.heads()
    sinks = entry.sinks()
    w_orig = {}
    for wv in sorted(w):
        o = entry.orig_of(wv)
        if o is None:
            raise HypothesisViolationError(
                f"boundary vertex {wv} has a multi-vertex model"
            )
        if wv in heads or wv in sinks:
            raise HypothesisViolationError(
                f"boundary vertex {wv} is an arc head or a hyperedge sink"
            )
        w_orig[wv] = o
    return w_orig


def _member_orig(entry: SchemeEntry, v: int) -> int:
    o = entry.orig_of(v)
    if o is None:
        raise HypothesisViolationError(
            f"hyperedge member {v} has a multi-vertex model"
        )
    return o


def _edge_type(
    entry: SchemeEntry,
    edge: Hyperedge,
    w_vertices: frozenset[int],
    original: Graph,
    use_original: bool,
) -> tuple:
    """Type of a hyperedge relative to W: label, size, W-part, mask counts.

    ``use_original`` selects whether member neighborhoods are read in the
    original graph (deletion branch) or the entry graph (contraction
    branch).
    """
    w_part = frozenset(edge.members & w_vertices)
    counts: dict[frozenset[int], int] = {}
    for v in edge.members - {edge.sink}:
        mask = _w_mask(entry, v, w_vertices, original, use_original)
        counts[mask] = counts.get(mask, 0) + 1
    canon = tuple(sorted((tuple(sorted(m)), c) for m, c in counts.items()))
    return (edge.label, len(edge.members), tuple(sorted(w_part)), canon)


def _w_mask(
    entry: SchemeEntry,
    v: int,
    w_vertices: frozenset[int],
    original: Graph,
    use_original: bool,
) -> frozenset[int]:
    """Neighborhood of a vertex inside W, as entry vertex ids."""
    if not use_original:
        return frozenset(entry.graph.adj[v] & w_vertices)
    o = _member_orig(entry, v)
    w_orig_to_vertex = {_member_orig(entry, wv): wv for wv in w_vertices}
    return frozenset(
        w_orig_to_vertex[u] for u in original.adj[o] if u in w_orig_to_vertex
    )


def _matching(
    entry: SchemeEntry, t_origs: tuple[int, ...], cands: list[int]
) -> Optional[dict[int, int]]:
    """Match each original in t_origs to a distinct candidate entry vertex
    adjacent to it in the entry graph (Kuhn's augmenting paths)."""
    originals = entry.originals()
    adj = {}
    for u in t_origs:
        uv = originals.get(u)
        if uv is None:
            return None
        adj[u] = [c for c in cands if entry.graph.has_edge(uv, c)]
    match_of: dict[int, int] = {}

    def augment(u, seen):
        for c in adj[u]:
            if c in seen:
                continue
            seen.add(c)
            if c not in match_of or augment(match_of[c], seen):
                match_of[c] = u
                return True
        return False

    for u in t_origs:
        if not augment(u, set()):
            return None
    return {u: c for c, u in match_of.items()}


def _require_link(entry: SchemeEntry, edge_index: int, member_orig: int):
    link = entry.link_for(edge_index, member_orig)
    if link is None:
        raise HypothesisViolationError(
            f"hyperedge {edge_index} has no witness link containing {member_orig}"
        )
    return link


def _find_same_type(
    entry: SchemeEntry,
    region: frozenset[int],
    wanted_type: tuple,
    w_vertices: frozenset[int],
    original: Graph,
    use_original: bool,
) -> Optional[int]:
    """Index of a hyperedge of the wanted type whose sink lies in region."""
    for ei, edge in enumerate(entry.hyperedges):
        if edge.sink not in region:
            continue
        if _edge_type(entry, edge, w_vertices, original, use_original) == wanted_type:
            return ei
    return None


def _mask_bijection(
    entry: SchemeEntry,
    source: list[int],
    target: list[int],
    w_vertices: frozenset[int],
    original: Graph,
    use_original: bool,
) -> dict[int, int]:
    """Bijection source -> target matching W-neighborhood masks groupwise."""
    groups_s: dict[frozenset[int], list[int]] = {}
    groups_t: dict[frozenset[int], list[int]] = {}
    for v in sorted(source):
        groups_s.setdefault(
            _w_mask(entry, v, w_vertices, original, use_original), []
        ).append(v)
    for v in sorted(target):
        groups_t.setdefault(
            _w_mask(entry, v, w_vertices, original, use_original), []
        ).append(v)
    if {m: len(g) for m, g in groups_s.items()} != {
        m: len(g) for m, g in groups_t.items()
    }:
        raise HypothesisViolationError(
            "type-equal hyperedges disagree on W-neighborhood mask counts"
        )
    out = {}
    for mask, vs in groups_s.items():
        for a, b in zip(vs, groups_t[mask]):
            out[a] = b
    return out


class _Rebuild:
    """Shared mechanics of producing the next entry from a chosen region."""

    def __init__(
        self,
        entry: SchemeEntry,
        params: SchemeParams,
        original: Graph,
        contracted: frozenset[int],
        deleted: frozenset[int],
        cut_x_edges: Optional[frozenset[int]],
    ):
        self.entry = entry
        self.params = params
        self.original = original
        self.contracted = contracted
        self.deleted = deleted
        g = entry.graph
        removed = contracted | deleted
        self.survivors = [v for v in range(g.n) if v not in removed]
        self.idx = {v: i for i, v in enumerate(self.survivors)}
        self.v_new = len(self.survivors)
        edges = set()
        for u, v in g.edges():
            iu, iv = self.idx.get(u), self.idx.get(v)
            if iu is not None and iv is not None:
                edges.add((min(iu, iv), max(iu, iv)))
            elif iu is not None and v in contracted:
                if cut_x_edges is None or u not in cut_x_edges:
                    edges.add((min(iu, self.v_new), max(iu, self.v_new)))
            elif iv is not None and u in contracted:
                if cut_x_edges is None or v not in cut_x_edges:
                    edges.add((min(iv, self.v_new), max(iv, self.v_new)))
        self.graph = Graph.from_edges(self.v_new + 1, sorted(edges))
        model = {self.idx[v]: entry.model[v] for v in self.survivors}
        merged: set[int] = set()
        for v in contracted:
            merged |= entry.model[v]
        model[self.v_new] = frozenset(merged)
        self.model = model

    def map_members(self, vertices) -> frozenset[int]:
        return frozenset(self.idx[v] for v in vertices)

    def arcs_and_meta(self, w_orig: dict[int, int], d: int):
        entry = self.entry
        arcs = {
            (self.idx[a], self.idx[b])
            for a, b in entry.arcs
            if a in self.idx and b in self.idx
        }
        arcs |= {(self.idx[wv], self.v_new) for wv in w_orig}
        u_plus = frozenset(w_orig.values())
        u_set = frozenset(
            o
            for wv, o in w_orig.items()
            if self.graph.degree(self.idx[wv]) > d
        )
        meta = StepMeta(q=self.v_new, u_set=u_set, u_plus=u_plus)
        return frozenset(arcs), meta


def _derived_edges(
    entry: SchemeEntry,
    rb: _Rebuild,
    region: frozenset[int],
    w_orig: dict[int, int],
    u_set: frozenset[int],
    params: SchemeParams,
    original: Graph,
    use_original: bool,
    upgrade_witness,
):
    """Hyperedges E1/E2/E3 of the next entry, plus their witness builders.

    ``region`` is the contracted vertex set (one ball or O).  Returns a
    dict hyperedge -> (flat witnesses, links) in first-wins order.
    """
    collected: dict[Hyperedge, tuple] = {}
    originals = entry.originals()
    w_vertices = frozenset(w_orig)

    # E3: the new vertex plus its high-degree boundary
    e3_members = frozenset({rb.v_new}) | frozenset(
        rb.idx[originals[u]] for u in u_set
    )
    e3 = Hyperedge(e3_members, 1, rb.v_new)
    collected[e3] = upgrade_witness("e3", None, None, None, None)

    for ei, edge in enumerate(entry.hyperedges):
        if edge.sink not in region:
            continue
        base_w = sorted(edge.members & w_vertices)
        base_w_origs = frozenset(w_orig[v] for v in base_w)
        cands_all = sorted((edge.members - {edge.sink}) & region)
        t_pool = sorted(u_set - base_w_origs)
        for t_sub in _subsets(t_pool):
            m = _matching(entry, t_sub, cands_all)
            if m is None:
                continue
            members = (
                frozenset({rb.v_new})
                | rb.map_members(base_w)
                | frozenset(rb.idx[originals[u]] for u in t_sub)
            )
            he = Hyperedge(members, edge.label, rb.v_new)
            if he not in collected:
                collected[he] = upgrade_witness("e1", ei, t_sub, m, None)
        for u_mid in cands_all:
            cands = [c for c in cands_all if c != u_mid]
            for t_sub in _subsets(t_pool):
                if not base_w and not t_sub:
                    continue
                m = _matching(entry, t_sub, cands)
                if m is None:
                    continue
                members = (
                    frozenset({rb.v_new})
                    | rb.map_members(base_w)
                    | frozenset(rb.idx[originals[u]] for u in t_sub)
                )
                he = Hyperedge(members, edge.label + 1, rb.v_new)
                if he not in collected:
                    collected[he] = upgrade_witness("e2", ei, t_sub, m, u_mid)
    return collected


def _surviving_edges(entry: SchemeEntry, rb: _Rebuild) -> dict[Hyperedge, tuple]:
    out: dict[Hyperedge, tuple] = {}
    for ei, edge in enumerate(entry.hyperedges):
        if all(v in rb.idx for v in edge.members):
            he = Hyperedge(
                rb.map_members(edge.members), edge.label, rb.idx[edge.sink]
            )
            out[he] = (
                entry.witnesses.get(ei, ()),
                entry.witness_links.get(ei, ()),
            )
    return out


def _assemble(
    rb: _Rebuild,
    surviving: dict[Hyperedge, tuple],
    derived: dict[Hyperedge, tuple],
    arcs: frozenset,
    meta: StepMeta,
) -> SchemeEntry:
    merged = dict(surviving)
    for he, data in derived.items():
        merged.setdefault(he, data)
    hyperedges, witnesses, links = sort_hyperedges(merged)
    return SchemeEntry(
        graph=rb.graph,
        model=rb.model,
        arcs=arcs,
        hyperedges=hyperedges,
        witnesses=witnesses,
        witness_links=links,
        step_meta=meta,
    )


# ---------------------------------------------------------------------------
# deletion branch


def del_step(
    entry: SchemeEntry,
    x: frozenset[int],
    z: frozenset[int],
    w: frozenset[int],
    params: SchemeParams,
    original: Graph,
) -> SchemeEntry:
    """Contract one ball of a uniform type bucket; delete the bucket's rest.

    Requires the full-neighborhood form of the hypothesis: every ball's
    entire boundary is exactly W.
    """
    w_orig = _common_checks(entry, x, z, w, params, full_boundary=True)
    g = entry.graph
    balls = {zi: _x_ball_multi(g, x, [zi], params.l0 - 1) for zi in z}

    sig: dict[int, tuple] = {}
    for zi in z:
        edge_sig = frozenset(
            _edge_type(entry, e, frozenset(w), original, use_original=True)
            for e in entry.hyperedges
            if e.sink in balls[zi]
        )
        vertex_sig = frozenset(
            _w_mask(entry, v, frozenset(w), original, use_original=True)
            for v in balls[zi]
            if entry.orig_of(v) is not None
        )
        sig[zi] = (edge_sig, vertex_sig)
    buckets: dict[tuple, list[int]] = {}
    for zi in sorted(z):
        buckets.setdefault(sig[zi], []).append(zi)
    need = params.k + params.h
    eligible = [b for b in buckets.values() if len(b) >= need]
    if not eligible:
        raise BucketTooSmallError(max(len(b) for b in buckets.values()), need)
    group = min(eligible, key=lambda b: b[0])
    z_chosen = group[:need]
    z_star = z_chosen[0]
    region = balls[z_star]
    deleted: set[int] = set()
    for zi in z_chosen[1:]:
        deleted |= balls[zi]

    rb = _Rebuild(
        entry,
        params,
        original,
        contracted=region,
        deleted=frozenset(deleted),
        cut_x_edges=None,
    )
    arcs, meta = rb.arcs_and_meta(w_orig, params.d)

    def union_model(vertices) -> frozenset[int]:
        out: set[int] = set()
        for v in vertices:
            out |= entry.model[v]
        return frozenset(out)

    def witness(kind, ei, t_sub, m, u_mid):
        if kind == "e3":
            groups = tuple(
                WitnessNode(union_model(balls[zi])) for zi in z_chosen[1:]
            )
            links = tuple(frozenset([u]) for u in sorted(meta.u_set))
            return flatten_groups(groups), links
        edge = entry.hyperedges[ei]
        if kind == "e1":
            flat = entry.witnesses.get(ei, ())
            links = []
            for v in sorted(edge.members & w):
                links.append(_require_link(entry, ei, w_orig[v]))
            for u in t_sub:
                partner = m[u]
                base = _require_link(entry, ei, _member_orig(entry, partner))
                links.append(base | {u})
            return tuple(flat), tuple(links)
        # e2: label upgrade through the other chosen balls
        label = edge.label
        z_pool = z_chosen[1:][: params.k + params.h - label - 1]
        ty = _edge_type(entry, edge, frozenset(w), original, use_original=True)
        src = sorted((edge.members - {edge.sink}) & region)
        groups_out = []
        per_z = []
        for zi in z_pool:
            ej = _find_same_type(
                entry, balls[zi], ty, frozenset(w), original, use_original=True
            )
            if ej is None:
                raise HypothesisViolationError(
                    f"no type-equal hyperedge with sink in the ball of {zi}"
                )
            other = entry.hyperedges[ej]
            tgt = sorted((other.members - {other.sink}) & balls[zi])
            iota = _mask_bijection(
                entry, src, tgt, frozenset(w), original, use_original=True
            )
            per_z.append((ej, iota))
            sub_groups = entry.groups_for(ej, params)
            if sub_groups is None or len(sub_groups) < params.k + 1:
                raise HypothesisViolationError(
                    f"witness groups of hyperedge {ej} unusable for an upgrade"
                )
            glued = _require_link(entry, ej, _member_orig(entry, iota[u_mid]))
            for s in sub_groups[0].sets():
                glued = glued | s
            groups_out.append(
                WitnessNode(glued, tuple(sub_groups[1 : params.k + 1]))
            )
        links = []
        for v in sorted(edge.members & w):
            merged: frozenset[int] = frozenset()
            for ej, _ in per_z:
                merged = merged | _require_link(entry, ej, w_orig[v])
            links.append(merged)
        for u in t_sub:
            partner = m[u]
            merged = frozenset([u])
            for ej, iota in per_z:
                merged = merged | _require_link(
                    entry, ej, _member_orig(entry, iota[partner])
                )
            links.append(merged)
        return flatten_groups(tuple(groups_out)), tuple(links)

    derived = _derived_edges(
        entry, rb, region, w_orig, meta.u_set, params, original, True, witness
    )
    surviving = _surviving_edges(entry, rb)
    return _assemble(rb, surviving, derived, arcs, meta)


# ---------------------------------------------------------------------------
# contraction branch


def contract_step(
    entry: SchemeEntry,
    x: frozenset[int],
    z: frozenset[int],
    w: frozenset[int],
    params: SchemeParams,
    original: Graph,
) -> SchemeEntry:
    """Contract a typed neighborhood of a split geodesic; cut it from X.

    Requires some ball to reach X beyond W (otherwise the deletion branch
    applies and BranchMismatchError is raised).
    """
    w_orig = _common_checks(entry, x, z, w, params, full_boundary=False)
    g = entry.graph
    balls = {zi: _x_ball_multi(g, x, [zi], params.l0 - 1) for zi in z}
    violating = [zi for zi in sorted(z) if boundary(g, balls[zi]) - w]
    if not violating:
        raise BranchMismatchError(
            "every ball has its full neighborhood inside W; use del_step"
        )
    z_star = violating[0]
    region0 = balls[z_star]

    # type every ball vertex by its W-neighborhood and hyperedge roles
    w_vertices = frozenset(w)
    types = sorted(
        {
            _edge_type(entry, e, w_vertices, original, use_original=False)
            for e in entry.hyperedges
        }
    )
    by_type: dict[tuple, list[Hyperedge]] = {}
    for e in entry.hyperedges:
        by_type.setdefault(
            _edge_type(entry, e, w_vertices, original, use_original=False), []
        ).append(e)

    def phi(v: int) -> tuple:
        flags = []
        for ty in types:
            a = 0
            for e in by_type[ty]:
                if v == e.sink:
                    a = 1
                    break
                if v in e.members:
                    a = 2
            flags.append(a)
        return (tuple(sorted(g.adj[v] & w_vertices)), tuple(flags))

    phi_of = {v: phi(v) for v in region0}
    palette = sorted(set(phi_of.values()))
    t1 = len(palette)
    color_index = {ty: i + 1 for i, ty in enumerate(palette)}
    # chunk spacing keeps the radius-3(|Y|-1) anchor balls disjoint for any
    # live type set Y (|Y| <= t1); h+k-1 anchors are consumed downstream
    spacing = 6 * (t1 - 1) + 1
    n_anchors = params.h + params.k - 1
    k0 = 1 + (n_anchors - 1) * spacing
    needed = split_path_budget(t1, k0, 3)
    if params.l0 != needed + 1:
        raise HypothesisViolationError(
            f"l0 must equal n(t1,k0,3)+1 = {needed + 1} for the realized type "
            f"count t1={t1} (k0={k0}); got l0={params.l0}"
        )

    sub, ids = g.subgraph(region0)
    fwd = {v: i for i, v in enumerate(ids)}
    f_colors = [color_index[phi_of[ids[i]]] for i in range(sub.n)]
    path = geodesic_from(sub, fwd[z_star], needed - 3 * t1 - 1)
    if path is None:
        raise GeodesicTooShortError(
            f"no geodesic on {needed - 3 * t1} vertices from the ball center"
        )
    split = geodesic_split(sub, fwd[z_star], f_colors, path, t1, k0, 3)
    live_types = frozenset(palette[c - 1] for c in split.color_set)
    ny = len(split.color_set)
    q_path = [ids[v] for v in split.subpath]

    region_core = _x_ball_multi(g, x, q_path, 3 * (ny - 1) + 1)
    extra = frozenset(
        v
        for v in boundary(g, region_core)
        if v in x and (len(entry.model[v]) >= 2 or v in entry.sinks())
    )
    region = frozenset(region_core | extra)

    anchor = {
        alpha: _x_ball_multi(
            g,
            x,
            [ids[v] for v in split.chunks[(alpha - 1) * spacing]],
            3 * (ny - 1),
        )
        for alpha in range(1, n_anchors + 1)
    }

    u_plus_vertices = frozenset(boundary(g, region) - x)
    if not u_plus_vertices <= w_vertices:
        raise HypothesisViolationError(
            "contraction boundary escapes W outside X"
        )
    w_orig_used = {wv: w_orig[wv] for wv in u_plus_vertices}

    rb = _Rebuild(
        entry,
        params,
        original,
        contracted=region,
        deleted=frozenset(),
        cut_x_edges=x,
    )
    arcs, meta = rb.arcs_and_meta(w_orig_used, params.d)

    def union_model(vertices) -> frozenset[int]:
        out: set[int] = set()
        for v in vertices:
            out |= entry.model[v]
        return frozenset(out)

    def claim2(edge: Hyperedge, ei: int, alpha: int):
        ty = _edge_type(entry, edge, w_vertices, original, use_original=False)
        ej = _find_same_type(
            entry, anchor[alpha], ty, w_vertices, original, use_original=False
        )
        if ej is None:
            raise HypothesisViolationError(
                f"no type-equal hyperedge with sink in anchor ball {alpha}"
            )
        other = entry.hyperedges[ej]
        src = sorted(edge.members - {edge.sink} - u_plus_vertices)
        tgt = sorted(other.members - {other.sink} - u_plus_vertices)
        iota = _mask_bijection(
            entry, src, tgt, w_vertices, original, use_original=False
        )
        for a, b in iota.items():
            if frozenset(g.adj[a] & u_plus_vertices) != frozenset(
                g.adj[b] & u_plus_vertices
            ):
                raise HypothesisViolationError(
                    "bijection does not preserve boundary neighborhoods"
                )
        return ej, iota

    def witness(kind, ei, t_sub, m, u_mid):
        if kind == "e3":
            groups = tuple(
                WitnessNode(union_model(anchor[alpha]))
                for alpha in range(1, n_anchors + 1)
            )
            links = tuple(frozenset([u]) for u in sorted(meta.u_set))
            return flatten_groups(groups), links
        edge = entry.hyperedges[ei]
        if kind == "e1":
            ej, iota = claim2(edge, ei, 1)
            other = entry.hyperedges[ej]
            flat = entry.witnesses.get(ej, ())
            links = []
            for v in sorted(edge.members & u_plus_vertices):
                links.append(_require_link(entry, ej, w_orig[v]))
            for u in t_sub:
                partner = iota[m[u]]
                base = _require_link(entry, ej, _member_orig(entry, partner))
                links.append(base | {u})
            return tuple(flat), tuple(links)
        label = edge.label
        count = params.k + params.h - label - 1
        groups_out = []
        per_alpha = []
        for alpha in range(1, count + 1):
            ej, iota = claim2(edge, ei, alpha)
            per_alpha.append((ej, iota))
            sub_groups = entry.groups_for(ej, params)
            if sub_groups is None or len(sub_groups) < params.k + 1:
                raise HypothesisViolationError(
                    f"witness groups of hyperedge {ej} unusable for an upgrade"
                )
            glued = _require_link(entry, ej, _member_orig(entry, iota[u_mid]))
            for s in sub_groups[0].sets():
                glued = glued | s
            groups_out.append(
                WitnessNode(glued, tuple(sub_groups[1 : params.k + 1]))
            )
        links = []
        for v in sorted(edge.members & u_plus_vertices):
            merged: frozenset[int] = frozenset()
            for ej, _ in per_alpha:
                merged = merged | _require_link(entry, ej, w_orig[v])
            links.append(merged)
        for u in t_sub:
            merged = frozenset([u])
            for ej, iota in per_alpha:
                merged = merged | _require_link(
                    entry, ej, _member_orig(entry, iota[m[u]])
                )
            links.append(merged)
        return flatten_groups(tuple(groups_out)), tuple(links)

    derived = _derived_edges(
        entry,
        rb,
        region,
        w_orig_used,
        meta.u_set,
        params,
        original,
        False,
        witness,
    )
    surviving = _surviving_edges(entry, rb)
    return _assemble(rb, surviving, derived, arcs, meta)
