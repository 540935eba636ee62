"""The chain of distances bounding cliqueness diagram changes under graph edits."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bottleneck import bottleneck_distance
from .cliqueness import WeightedGraph, cliqueness_map, distance_weighted
from .complex import build_filtered_complex, distance_functions
from .graph import UnweightedGraph, distance_unweighted
from .persistence import CLIQUENESS, diagrams_for
from .pipelines import diagrams


@dataclass
class StabilityChain:
    d_graph: int
    d_weights: Fraction
    d_functions: Fraction
    # bottleneck on the shared complex, and between the pipeline outputs
    b_shared: list = field(default_factory=list)
    b_pipeline: list = field(default_factory=list)

    def violations(self) -> list[str]:
        out = []
        if not self.d_weights <= self.d_graph:
            out.append(f"D^W={self.d_weights} > D^U={self.d_graph}")
        if not self.d_functions <= self.d_weights:
            out.append(f"D^K={self.d_functions} > D^W={self.d_weights}")
        for p, b in enumerate(self.b_shared):
            if not b <= self.d_functions:
                out.append(f"H{p}: B={b} > D^K={self.d_functions}")
        for p, b in enumerate(self.b_pipeline):
            if not b <= self.d_graph:
                out.append(f"H{p}: pipeline B={b} > D^U={self.d_graph}")
        return out


def shared_support(w1: WeightedGraph, w2: WeightedGraph) -> WeightedGraph:
    """Union of the positive pairs of two weightings (weights are the larger one)."""
    weights = dict(w1.weights)
    for e, c in w2.weights.items():
        weights[e] = max(c, weights.get(e, 0))
    return WeightedGraph(w1.n, tuple(sorted(set(w1.vertices) | set(w2.vertices))), weights)


def stability_chain(g1: UnweightedGraph, g2: UnweightedGraph, max_dim: int = 1) -> StabilityChain:
    d_u = distance_unweighted(g1, g2)
    w1, w2 = cliqueness_map(g1), cliqueness_map(g2)
    d_w = distance_weighted(w1, w2)
    support = shared_support(w1, w2)
    f1 = build_filtered_complex(w1, max_dim, support)
    f2 = build_filtered_complex(w2, max_dim, support)
    d_k = distance_functions(f1, f2)
    s1 = diagrams_for(f1, max_dim, CLIQUENESS, drop_zero=True)
    s2 = diagrams_for(f2, max_dim, CLIQUENESS, drop_zero=True)
    p1 = diagrams(g1, CLIQUENESS, max_dim)
    p2 = diagrams(g2, CLIQUENESS, max_dim)
    return StabilityChain(
        d_u, d_w, d_k,
        [bottleneck_distance(a, b) for a, b in zip(s1, s2)],
        [bottleneck_distance(a, b) for a, b in zip(p1, p2)],
    )
