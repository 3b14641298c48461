from __future__ import annotations

import pytest

from defcolor.graphs import Graph, complete_graph, ct
from defcolor.scheme import (
    Hyperedge,
    SchemeParams,
    build_scheme,
    certify_entry,
    certify_scheme,
    initial_entry,
)
from defcolor.scheme.corpus import caterpillar, star_of_balls
from defcolor.scheme.entry import SchemeEntry


def swap(entry: SchemeEntry, **changes) -> SchemeEntry:
    fields = {
        "graph": entry.graph,
        "model": entry.model,
        "arcs": entry.arcs,
        "hyperedges": entry.hyperedges,
        "witnesses": entry.witnesses,
        "witness_links": entry.witness_links,
        "step_meta": entry.step_meta,
    }
    fields.update(changes)
    return SchemeEntry(**fields)


@pytest.fixture(scope="module")
def cat():
    inst = caterpillar(1, 14)
    scheme = build_scheme(inst.graph, inst.params)
    return inst, scheme


class TestPairwiseConditions:
    def test_clean_baseline(self, cat):
        inst, scheme = cat
        report = certify_entry(scheme[0], scheme[1], inst.params, inst.graph)
        assert report.clean(ignore_skipped=False)

    def test_directed_two_path_fails_d4(self, cat):
        inst, scheme = cat
        e2 = scheme[1]
        # chain two arcs along surviving spine edges: u -> v -> w
        spine = sorted(
            v for v in range(e2.graph.n) if not e2.is_special(v)
        )
        path3 = None
        for u in spine:
            for v in e2.graph.adj[u]:
                for w in e2.graph.adj[v]:
                    if w != u and v in spine and w in spine:
                        path3 = (u, v, w)
                        break
                if path3:
                    break
            if path3:
                break
        assert path3 is not None
        u, v, w = path3
        mutated = swap(e2, arcs=e2.arcs | {(u, v), (v, w)})
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D4" in report.failures()
        assert report.verdicts["D4"].witness["clause"] == "directed-two-path"

    def test_oversized_hyperedge_fails_d5(self, cat):
        inst, scheme = cat
        e2 = scheme[1]
        target = next(e for e in e2.hyperedges if e.sink == e2.step_meta.q)
        # pad S beyond r+1 with plain spine vertices
        pool = [
            v
            for v in range(e2.graph.n)
            if v not in target.members and not e2.is_special(v)
        ]
        need = inst.params.r + 2 - len(target.members)
        grown = Hyperedge(
            target.members | frozenset(pool[:need]), target.label, target.sink
        )
        edges = tuple(
            grown if e == target else e for e in e2.hyperedges
        )
        mutated = swap(e2, hyperedges=edges)
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D5" in report.failures()

    def test_dropped_required_edge_fails_d8f(self, cat):
        inst, scheme = cat
        e2 = scheme[1]
        keep = tuple(
            e for e in e2.hyperedges if not (e.label == 1 and e.sink == e2.step_meta.q)
        )
        witnesses = {i: () for i in range(len(keep))}
        mutated = swap(
            e2, hyperedges=keep, witnesses=witnesses, witness_links=witnesses
        )
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D8f" in report.failures()

    def test_missing_step_meta_fails_d8(self, cat):
        inst, scheme = cat
        mutated = swap(scheme[1], step_meta=None)
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D8a" in report.failures() and "D8i" in report.failures()

    def test_dropped_link_fails_d10(self, cat):
        inst, scheme = cat
        e2 = scheme[1]
        idx = next(
            i for i, e in enumerate(e2.hyperedges) if len(e.members) >= 2
        )
        links = dict(e2.witness_links)
        links[idx] = links[idx][:-1]
        mutated = swap(e2, witness_links=links)
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D10" in report.failures()
        assert report.verdicts["D10"].witness["clause"] == "link-count"

    def test_unfrozen_identical_pair_fails_d3(self, cat):
        inst, scheme = cat
        report = certify_entry(scheme[0], scheme[0], inst.params, inst.graph)
        assert "D3" in report.failures()

    def test_graph_edit_fails_d2(self, cat):
        inst, scheme = cat
        e2 = scheme[1]
        # connect two far-apart spine survivors (the apex is low on the
        # special list but high degree; exclude it)
        spine = sorted(
            v
            for v in range(e2.graph.n)
            if not e2.is_special(v) and e2.graph.degree(v) <= inst.params.d
        )
        u, w = spine[0], spine[-1]
        assert not e2.graph.has_edge(u, w)
        edited = Graph.from_edges(e2.graph.n, e2.graph.edges() + [(u, w)])
        mutated = swap(e2, graph=edited)
        report = certify_entry(scheme[0], mutated, inst.params, inst.graph)
        assert "D2" in report.failures()


class TestWitnessOverlapAcrossSinks:
    def test_shared_families_fail_d11(self):
        # two sink edges whose witness families are the same leftover sets
        apex = 0
        edges = []
        pairs = []
        n = 1
        for _ in range(2):
            s, m = n, n + 1
            n += 2
            pairs.append((s, m))
            edges += [(s, m), (apex, s), (apex, m)]
        shared = []
        for _ in range(4):
            x = n
            n += 1
            shared.append(x)
            edges.append((apex, x))
            for _, m in pairs:
                edges.append((m, x))
        g = Graph.from_edges(n, edges)
        covered = [apex] + [v for p in pairs for v in p]
        remap = {v: i for i, v in enumerate(sorted(covered))}
        entry_graph = Graph.from_edges(
            len(covered),
            [
                (remap[u], remap[v])
                for u, v in g.edges()
                if u in remap and v in remap
            ],
        )
        arcs = set()
        hyperedges = []
        witnesses = {}
        links = {}
        for i, (s, m) in enumerate(pairs):
            arcs |= {(remap[m], remap[s]), (remap[apex], remap[s])}
            hyperedges.append(
                Hyperedge(frozenset({remap[s], remap[m], remap[apex]}), 1, remap[s])
            )
            witnesses[i] = tuple(frozenset({x}) for x in shared)
            links[i] = (frozenset({m}), frozenset({apex}))
        entry = SchemeEntry(
            graph=entry_graph,
            model={remap[v]: frozenset({v}) for v in covered},
            arcs=frozenset(arcs),
            hyperedges=tuple(hyperedges),
            witnesses=witnesses,
            witness_links=links,
            step_meta=None,
        )
        params = SchemeParams(h=4, k=1, r=3, d=3, n_freeze=entry_graph.n, l0=1, t=1)
        report = certify_entry(entry, entry, params, g)
        assert "D11" in report.failures()
        assert report.verdicts["D11"].witness["clause"] == "witness-overlap"
        assert "D10" not in report.failures()


class TestSchemeLevel:
    def test_nonstandard_first_entry(self):
        g = complete_graph(3)
        params = SchemeParams(h=3, k=2, r=2, d=2, n_freeze=5, l0=1, t=1)
        entry = initial_entry(g)
        tampered = swap(entry, arcs=frozenset({(0, 1)}))
        report = certify_scheme([tampered], params, g)
        assert not report.clean()
        assert report.start.status == "fail"

    def test_clean_two_entry_scheme(self):
        inst = star_of_balls(1, 6, 2)
        scheme = build_scheme(inst.graph, inst.params)
        report = certify_scheme(scheme, inst.params, inst.graph)
        assert report.clean(ignore_skipped=False)
        assert len(report.pair_reports) == len(scheme)

    def test_empty_scheme(self):
        params = SchemeParams(h=3, k=2, r=2, d=2, n_freeze=5, l0=1, t=1)
        report = certify_scheme([], params, ct(2, 2))
        assert not report.clean()
