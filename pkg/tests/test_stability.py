from fractions import Fraction as F

import numpy as np
from hypothesis import given

from cliqueph import experiments as ex
from cliqueph import generators as gen
from cliqueph.cliqueness import cliqueness_map
from cliqueph.graph import distance_unweighted
from cliqueph.persistence import CLIQUENESS, INF, KINDS, PersistenceDiagram
from cliqueph.stability import shared_support, stability_chain
from strategies import graph_pairs


def test_chain_on_bridge_edit():
    chain = stability_chain(gen.two_cliques(5), gen.bridged_cliques(5))
    assert (chain.d_graph, chain.d_weights, chain.d_functions) == (1, F(1, 5), F(1, 5))
    assert chain.b_pipeline == [F(1, 5), 0]
    assert chain.violations() == []


def test_chain_identical_graphs():
    g = gen.dense_cycle(12, 2)
    chain = stability_chain(g, g)
    assert chain.d_graph == chain.d_weights == chain.d_functions == 0
    assert chain.b_shared == chain.b_pipeline == [0, 0]


def test_shared_support_is_union():
    w1, w2 = cliqueness_map(gen.two_cliques(5)), cliqueness_map(gen.bridged_cliques(5))
    sup = shared_support(w1, w2)
    assert sup.weights.keys() == w1.weights.keys() | w2.weights.keys()


@given(graph_pairs(max_n=12))
def test_distance_chain_holds(pair):
    assert stability_chain(*pair).violations() == []


def test_violations_are_reported():
    chain = stability_chain(gen.two_cliques(5), gen.bridged_cliques(5))
    chain.b_shared = [F(1, 2)]
    assert chain.violations() == ["H0: B=1/2 > D^K=1/5"]


class TestExperimentHelpers:
    def test_random_trial_pair_differs_by_one_pair(self):
        rng = np.random.Generator(np.random.PCG64(1))
        for _ in range(10):
            g1, g2 = ex.random_trial_pair(rng, 15)
            assert distance_unweighted(g1, g2) == 1
            assert 4 <= g1.n <= 15

    def test_significant_counts_essential_points(self):
        d = PersistenceDiagram(0, [(F(1), INF), (F(1), F(1, 2)), (F(1), F(9, 10))])
        assert ex.significant(d, F(3, 10)) == [(1, INF), (1, F(1, 2))]

    def test_small_stability_run(self, tmp_path):
        out = ex.stability_trials(seed=7, trials=6, n_max=12, outdir=tmp_path)
        assert out["violations"] == []
        assert all(w <= 1 for w in out["worst"][CLIQUENESS])
        assert set(out["inf_trials"]) == set(KINDS)
        assert (tmp_path / "summary.txt").read_text().startswith("kind")

    def test_sbm_significance_on_one_seed(self):
        g = gen.sample_sbm(gen.SbmSpec(seed=0))
        assert ex.sbm_significant_count(g) == 3

    def test_figure3_suite_writes_diagrams(self, tmp_path):
        ex.figure3_suite(outdir=tmp_path)
        assert (tmp_path / "dense_cycle_cliqueness.csv").exists()
        assert (tmp_path / "dense_cycle_with_chord_power.csv").exists()
