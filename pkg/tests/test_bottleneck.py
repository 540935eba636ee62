from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cliqueph import generators as gen
from cliqueph.bottleneck import DiagramMismatch, bottleneck_distance, bottleneck_matching
from cliqueph.cliqueness import WeightedGraph, cliqueness_map
from cliqueph.complex import ASCENDING, DESCENDING, build_filtered_complex, distance_functions
from cliqueph.persistence import CLIQUE, CLIQUENESS, INF, PersistenceDiagram, diagrams_for
from cliqueph.pipelines import diagrams
from oracles import exhaustive_bottleneck
from strategies import graphs

values = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def points(draw, max_size=4):
    out = []
    for _ in range(draw(st.integers(0, max_size))):
        a, b = draw(values), draw(values)
        out.append((max(a, b), min(a, b)))
    return out


def diag(pts, dim=0, direction=DESCENDING, kind=CLIQUENESS):
    return PersistenceDiagram(dim, list(pts), kind, direction)


class TestExamples:
    def test_self_distance(self):
        d = diag([(F(1), F(1, 5)), (F(1), INF), (F(1, 2), F(1, 3))])
        assert bottleneck_distance(d, d) == 0

    def test_point_against_empty(self):
        assert bottleneck_distance(diag([(F(1), F(0))]), diag([])) == F(1, 2)

    def test_direct_match_beats_diagonal(self):
        assert bottleneck_distance(diag([(F(1), F(1, 5))]), diag([(F(1), F(0))])) == F(1, 5)

    def test_essential_count_mismatch(self):
        a = diag([(1, INF)] * 3, 1, ASCENDING, CLIQUE)
        b = diag([(1, 2)] * 4, 1, ASCENDING, CLIQUE)
        assert bottleneck_distance(a, b) == INF

    def test_essential_birth_shift(self):
        a = diag([(F(1), INF), (F(1, 2), F(1, 4))])
        b = diag([(F(3, 4), INF), (F(1, 2), F(1, 4))])
        assert bottleneck_distance(a, b) == F(1, 4)

    def test_empty_diagrams(self):
        assert bottleneck_distance(diag([]), diag([])) == 0

    def test_convention_mismatch(self):
        with pytest.raises(DiagramMismatch):
            bottleneck_distance(diag([], direction=DESCENDING), diag([], direction=ASCENDING))

    def test_dimension_mismatch(self):
        with pytest.raises(DiagramMismatch):
            bottleneck_distance(diag([], 0), diag([], 1))

    def test_matching_is_returned(self):
        dist, matching = bottleneck_matching(diag([(F(1), F(1, 5)), (F(1), INF)]), diag([(F(1), F(0)), (F(1), INF)]))
        assert dist == F(1, 5)
        assert ((F(1), INF), (F(1), INF)) in matching
        assert ((F(1), F(1, 5)), (F(1), F(0))) in matching

    def test_small_point_goes_to_diagonal(self):
        dist, matching = bottleneck_matching(diag([(F(1), F(0)), (F(1, 2), F(2, 5))]), diag([(F(1), F(0))]))
        assert dist == F(1, 20)
        assert ((F(1, 2), F(2, 5)), None) in matching


class TestProperties:
    @given(points(), points())
    def test_symmetric(self, xs, ys):
        assert bottleneck_distance(diag(xs), diag(ys)) == bottleneck_distance(diag(ys), diag(xs))

    @given(points(), points(), points())
    def test_triangle_inequality(self, xs, ys, zs):
        a, b, c = diag(xs), diag(ys), diag(zs)
        assert bottleneck_distance(a, c) <= bottleneck_distance(a, b) + bottleneck_distance(b, c)

    @given(points())
    def test_zero_self_distance(self, xs):
        assert bottleneck_distance(diag(xs), diag(xs)) == 0

    @given(points(max_size=3), points(max_size=3))
    def test_matches_exhaustive_search(self, xs, ys):
        assert bottleneck_distance(diag(xs), diag(ys)) == exhaustive_bottleneck(xs, ys)

    @given(points(max_size=6), points(max_size=6))
    def test_matching_realizes_distance(self, xs, ys):
        dist, matching = bottleneck_matching(diag(xs), diag(ys))
        cost = F(0)
        for x, y in matching:
            if x is None or y is None:
                p = x or y
                cost = max(cost, F(abs(p[0] - p[1])) / 2)
            else:
                cost = max(cost, abs(x[0] - y[0]), abs(x[1] - y[1]))
        assert cost == dist
        assert sorted(x for x, _ in matching if x is not None) == sorted(xs)
        assert sorted(y for _, y in matching if y is not None) == sorted(ys)


@pytest.mark.parametrize("n,m", [(6, 0), (5, 1), (4, 2), (3, 3)])
def test_exhaustive_up_to_six_points(n, m):
    # point sets at the size limit of the brute-force search
    rng = np.random.Generator(np.random.PCG64(n * 10 + m))

    def pts(k):
        out = []
        for _ in range(k):
            a, b = (F(int(v), 10) for v in rng.integers(0, 11, size=2))
            out.append((max(a, b), min(a, b)))
        return out

    xs, ys = pts(n), pts(m)
    assert bottleneck_distance(diag(xs), diag(ys)) == exhaustive_bottleneck(xs, ys)


@st.composite
def reweighted_pairs(draw):
    """Two weightings with the same positive support as a random graph's cliqueness map."""
    g = draw(graphs(max_n=9))
    w = cliqueness_map(g)
    pairs = w.pairs()
    a = {e: draw(st.fractions(min_value=F(1, 20), max_value=1, max_denominator=20)) for e in pairs}
    b = {e: draw(st.fractions(min_value=F(1, 20), max_value=1, max_denominator=20)) for e in pairs}
    return WeightedGraph(w.n, w.vertices, a), WeightedGraph(w.n, w.vertices, b)


@given(reweighted_pairs())
def test_bounded_by_function_distance(pair):
    w1, w2 = pair
    f1, f2 = build_filtered_complex(w1, 1), build_filtered_complex(w2, 1, w1)
    bound = distance_functions(f1, f2)
    for a, b in zip(diagrams_for(f1, 1, CLIQUENESS, True), diagrams_for(f2, 1, CLIQUENESS, True)):
        assert bottleneck_distance(a, b) <= bound


def test_fixture_pair_bridged_vs_disjoint():
    a = diagrams(gen.bridged_cliques(5), CLIQUENESS, 0)[0]
    b = diagrams(gen.two_cliques(5), CLIQUENESS, 0)[0]
    assert bottleneck_distance(a, b) == F(1, 5)
