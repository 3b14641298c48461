from __future__ import annotations

import pytest
from hypothesis import given, settings

from defcolor.errors import SizeLimitError
from defcolor.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    ct,
    empty_graph,
    path_graph,
    star_graph,
)
from defcolor.minors import MinorModel, has_ct_minor, has_minor, verify_model
from helpers import all_graphs, graphs_st, minor_oracle


class TestVerifyModel:
    def test_cycle_contracts_to_triangle(self):
        from defcolor.graphs import cycle_graph

        host = cycle_graph(4)
        model = MinorModel({0: frozenset({0, 1}), 1: frozenset({2}), 2: frozenset({3})})
        ok, violation = verify_model(host, complete_graph(3), model)
        assert ok and violation is None

    def test_overlap_reports_disjointness(self):
        host = complete_graph(4)
        model = MinorModel({0: frozenset({0, 1}), 1: frozenset({1}), 2: frozenset({2})})
        ok, violation = verify_model(host, complete_graph(3), model)
        assert not ok and violation.clause == "disjointness"

    def test_disconnected_branch_set(self):
        host = path_graph(5)
        model = MinorModel({0: frozenset({0, 4}), 1: frozenset({1})})
        ok, violation = verify_model(host, complete_graph(2), model)
        assert not ok and violation.clause == "connectivity"

    def test_missing_edge_coverage(self):
        host = empty_graph(2)
        model = MinorModel({0: frozenset({0}), 1: frozenset({1})})
        ok, violation = verify_model(host, complete_graph(2), model)
        assert not ok and violation.clause == "edge-coverage"

    def test_id_out_of_range(self):
        with pytest.raises(ValueError):
            verify_model(
                complete_graph(2),
                complete_graph(1),
                MinorModel({0: frozenset({7})}),
            )

    @given(graphs_st(min_n=1, max_n=7), graphs_st(min_n=1, max_n=4))
    @settings(max_examples=60)
    def test_found_models_verify(self, host, pattern):
        model = has_minor(host, pattern)
        if model is not None:
            ok, violation = verify_model(host, pattern, model)
            assert ok, violation


class TestHasMinor:
    def test_bipartite_contains_clique(self):
        for t in (2, 3):
            model = has_minor(complete_bipartite(t, t), complete_graph(t + 1))
            assert model is not None

    def test_trees_have_no_triangle(self):
        assert has_minor(path_graph(7), complete_graph(3)) is None

    def test_identity(self):
        g = ct(3, 2)
        model = has_minor(g, g)
        assert model is not None
        assert all(model.branch_sets[v] == frozenset({v}) for v in range(g.n))

    def test_empty_pattern(self):
        assert has_minor(path_graph(3), empty_graph(0)) == MinorModel({})

    def test_edgeless_pattern_count(self):
        assert has_minor(path_graph(3), empty_graph(3)) is not None
        assert has_minor(path_graph(3), empty_graph(4)) is None

    def test_star_in_clique(self):
        assert has_minor(complete_graph(5), star_graph(4)) is not None

    def test_size_limit(self):
        from defcolor.graphs import cycle_graph

        with pytest.raises(SizeLimitError):
            has_minor(cycle_graph(20), complete_graph(3))

    def test_heuristic_mode_positive(self):
        host = complete_bipartite(4, 4)
        model = has_minor(host, complete_graph(5), mode="heuristic", seed=0)
        if model is not None:
            ok, _ = verify_model(host, complete_graph(5), model)
            assert ok

    def test_reflexivity_small(self):
        for g in all_graphs(4):
            assert has_minor(g, g) is not None

    @given(graphs_st(min_n=1, max_n=7))
    @settings(max_examples=40)
    def test_subgraph_monotone(self, host):
        edges = host.edges()
        if not edges:
            return
        sub = Graph.from_edges(host.n, edges[: max(1, len(edges) // 2)])
        assert has_minor(host, sub) is not None


class TestCtMinor:
    def test_self(self):
        assert has_ct_minor(ct(3, 2), 3, 2) is not None

    def test_path_has_no_deep_closure(self):
        assert has_ct_minor(path_graph(10), 3, 2) is None

    def test_k5_contains_star(self):
        assert has_ct_minor(complete_graph(5), 2, 4) is not None


class TestOracleAgreement:
    @given(graphs_st(min_n=1, max_n=6), graphs_st(min_n=1, max_n=4))
    @settings(max_examples=60, deadline=None)
    def test_matches_partition_enumeration(self, host, pattern):
        got = has_minor(host, pattern)
        assert (got is not None) == minor_oracle(host, pattern)

    def test_transitivity_samples(self):
        chains = [
            (complete_graph(3), ct(2, 2), complete_bipartite(2, 3)),
            (path_graph(3), path_graph(5), ct(3, 2)),
        ]
        for a, b, c in chains:
            ab = has_minor(b, a)
            bc = has_minor(c, b)
            if ab is not None and bc is not None:
                assert has_minor(c, a) is not None

    @given(
        graphs_st(min_n=1, max_n=3),
        graphs_st(min_n=1, max_n=5),
        graphs_st(min_n=1, max_n=7),
    )
    @settings(max_examples=60, deadline=None)
    def test_transitivity_random_triples(self, a, b, c):
        if has_minor(b, a) is not None and has_minor(c, b) is not None:
            assert has_minor(c, a) is not None
