import io
from fractions import Fraction as F
from itertools import combinations
from math import comb

import pytest
from hypothesis import given

from cliqueph import generators as gen
from cliqueph.cliqueness import WeightedGraph, cliqueness_map, distance_weighted
from cliqueph.complex import (ASCENDING, DESCENDING, FilteredComplex, build_filtered_complex, distance_functions,
                              enumerate_cliques, filtration_value, order_simplices)
from cliqueph.graph import GraphError, UnweightedGraph
from cliqueph.stability import shared_support
from oracles import brute_cliques, dense_jaccard, oracle_complex
from strategies import graph_pairs, graphs


def weighted(n, weights):
    verts = sorted({v for e in weights for v in e})
    return WeightedGraph(n, tuple(verts), {e: F(c) for e, c in weights.items()})


class TestEnumerateCliques:
    def test_k4(self):
        cl = list(enumerate_cliques(gen.single_clique(4), 4))
        assert len(cl) == 15
        assert [sum(1 for s in cl if len(s) == k) for k in (1, 2, 3, 4)] == [4, 6, 4, 1]

    def test_c5_has_no_triangles(self):
        cl = list(enumerate_cliques(gen.cycle(5), 3))
        assert sorted(map(len, cl)) == [1] * 5 + [2] * 5

    def test_empty_graph(self):
        assert list(enumerate_cliques(UnweightedGraph.empty(3), 3)) == [(0,), (1,), (2,)]

    def test_size_cap(self):
        assert max(map(len, enumerate_cliques(gen.single_clique(6), 3))) == 3

    def test_rejects_zero_size(self):
        with pytest.raises(GraphError):
            list(enumerate_cliques(gen.cycle(4), 0))

    @given(graphs(max_n=12))
    def test_matches_subset_oracle(self, g):
        got = list(enumerate_cliques(g, 4))
        assert len(got) == len(set(got))
        assert sorted(got) == sorted(brute_cliques(g.n, g.edges(), 4))

    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_complete_graph_binomials(self, k):
        cl = list(enumerate_cliques(gen.single_clique(k), k))
        assert len(cl) == sum(comb(k, i) for i in range(1, k + 1))


class TestFiltrationValue:
    def test_triangle_takes_min(self):
        w = weighted(3, {(0, 1): F(1, 2), (0, 2): F(1, 2), (1, 2): F(1, 5)})
        assert filtration_value((0, 1, 2), w.weight) == F(1, 5)

    def test_vertex_takes_max(self):
        w = weighted(3, {(0, 1): F(5, 6), (0, 2): 1})
        assert filtration_value((0,), w.weight, {0: [1, 2]}) == 1

    def test_vertex_without_edges(self):
        assert filtration_value((0,), lambda u, v: F(1), {0: []}) == 0

    def test_disjoint_cliques_all_one(self):
        fc = build_filtered_complex(cliqueness_map(gen.two_cliques(5)), 3)
        assert set(fc.values) == {1}
        assert len(fc) == 2 * (5 + 10 + 10 + 5 + 1)


class TestBuild:
    def test_single_edge_order(self):
        fc = build_filtered_complex(cliqueness_map(gen.path(2)), 1)
        assert fc.simplices == [(0,), (1,), (0, 1)]
        assert fc.values == [1, 1, 1]

    def test_intra_clique_simplices_precede_bridge(self):
        fc = build_filtered_complex(cliqueness_map(gen.bridged_cliques(5)), 1)
        bridge = fc.order_index[(4, 5)]
        assert fc.values[bridge] == F(1, 5)
        intra = [s for s in fc.simplices if max(s) < 5 or min(s) >= 5]
        assert {fc.value_of(s) for s in intra} == {1, F(5, 6)}
        assert all(fc.order_index[s] < bridge for s in intra)
        # distance-2 pairs through the bridge enter after it
        assert fc.values[bridge + 1:] and all(v == F(1, 10) for v in fc.values[bridge + 1:])

    def test_triangle_enters_at_smallest_edge(self):
        w = weighted(3, {(0, 1): F(9, 10), (0, 2): F(8, 10), (1, 2): F(7, 10)})
        fc = build_filtered_complex(w, 1)
        assert fc.simplices[-2:] == [(1, 2), (0, 1, 2)]
        assert fc.value_of((0, 1, 2)) == F(7, 10)

    def test_dimension_cap(self):
        fc = build_filtered_complex(cliqueness_map(gen.single_clique(6)), 1)
        assert fc.max_dim == 2

    def test_dump(self):
        buf = io.StringIO()
        build_filtered_complex(cliqueness_map(gen.path(2)), 0).dump(buf)
        assert buf.getvalue() == "1\t0\t0\n1\t0\t1\n1\t1\t0,1\n"

    @given(graphs(max_n=12))
    def test_closure_order_and_monotone(self, g):
        fc = build_filtered_complex(cliqueness_map(g), 2)
        fc.check()
        for s in fc.simplices:
            for face in combinations(s, len(s) - 1):
                if face:
                    assert fc.value_of(face) >= fc.value_of(s)

    @given(graphs(max_n=10))
    def test_matches_oracle_complex(self, g):
        fc = build_filtered_complex(cliqueness_map(g), 1)
        expected, direction = oracle_complex(g.n, g.edges(), "cliqueness", 1)
        assert direction == fc.direction == DESCENDING
        assert dict(zip(fc.simplices, fc.values)) == dict(expected)

    @given(graphs(max_n=10))
    def test_deterministic(self, g):
        a = build_filtered_complex(cliqueness_map(g), 1)
        b = build_filtered_complex(cliqueness_map(g), 1)
        assert a.simplices == b.simplices and a.values == b.values


class TestOrder:
    def test_value_then_dimension_then_lex(self):
        fc = order_simplices([(0, 1), (1,), (0,), (2,)], [F(1), F(1), F(1), F(1, 2)], DESCENDING)
        assert fc.simplices == [(0,), (1,), (0, 1), (2,)]

    def test_ascending(self):
        fc = order_simplices([(0, 1), (0,), (1,)], [1, 0, 0], ASCENDING)
        assert fc.simplices == [(0,), (1,), (0, 1)]


class TestDistanceFunctions:
    def test_identity(self):
        fc = build_filtered_complex(cliqueness_map(gen.bridged_cliques(5)), 1)
        assert distance_functions(fc, fc) == 0

    def test_single_vertex_difference(self):
        a = FilteredComplex([(0,), (1,), (0, 1)], [F(1), F(5, 6), F(5, 6)], DESCENDING)
        b = FilteredComplex([(0,), (1,), (0, 1)], [F(5, 6), F(5, 6), F(5, 6)], DESCENDING)
        assert distance_functions(a, b) == F(1, 6)

    def test_different_complexes_rejected(self):
        a = build_filtered_complex(cliqueness_map(gen.path(2)), 1)
        b = build_filtered_complex(cliqueness_map(gen.path(3)), 1)
        with pytest.raises(GraphError):
            distance_functions(a, b)

    def test_bridged_vs_disjoint_on_shared_support(self):
        g1, g2 = gen.bridged_cliques(5), gen.two_cliques(5)
        w1, w2 = cliqueness_map(g1), cliqueness_map(g2)
        sup = shared_support(w1, w2)
        f1, f2 = build_filtered_complex(w1, 1, sup), build_filtered_complex(w2, 1, sup)
        j1, j2 = dense_jaccard(10, g1.edges()), dense_jaccard(10, g2.edges())

        def brute(j, s, edges):
            if len(s) > 1:
                return min(j[e] for e in combinations(s, 2))
            return max(j[tuple(sorted((s[0], u)))] for u in range(10) if (min(s[0], u), max(s[0], u)) in edges)

        edges = set(sup.weights)
        expected = max(abs(brute(j1, s, edges) - brute(j2, s, edges)) for s in f1.simplices)
        assert distance_functions(f1, f2) == expected == F(1, 5)

    @given(graph_pairs(max_n=10))
    def test_bounded_by_weight_distance(self, pair):
        w1, w2 = (cliqueness_map(g) for g in pair)
        sup = shared_support(w1, w2)
        f1, f2 = build_filtered_complex(w1, 1, sup), build_filtered_complex(w2, 1, sup)
        assert distance_functions(f1, f2) <= distance_weighted(w1, w2)
