"""Seeded random graphs and the canonical small fixtures."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import GraphError, UnweightedGraph


def _streams(seed: int, n: int) -> list[np.random.Generator]:
    # independent PCG64 streams per purpose, reproducible across platforms
    return [np.random.Generator(np.random.PCG64(s)) for s in np.random.SeedSequence(seed).spawn(n)]


@dataclass(frozen=True)
class SbmSpec:
    block_sizes: tuple[int, ...] = (75, 75, 75, 75)
    p_in: float = 0.3
    p_out: float = 0.005
    seed: int = 0

    def __post_init__(self):
        if not self.block_sizes or any(b < 1 for b in self.block_sizes):
            raise ValueError("SBM needs at least one block of positive size")
        for p in (self.p_in, self.p_out):
            if not 0 <= p <= 1:
                raise ValueError(f"edge probability {p} outside [0, 1]")


@dataclass(frozen=True)
class CircleRggSpec:
    n: int = 200
    radius: float = 0.25
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.radius <= 0:
            raise ValueError("radius must be positive")


def sbm_blocks(spec: SbmSpec) -> np.ndarray:
    return np.repeat(np.arange(len(spec.block_sizes)), spec.block_sizes)


def sample_sbm(spec: SbmSpec) -> UnweightedGraph:
    """Stochastic block model; each pair flips its own coin."""
    (coins,) = _streams(spec.seed, 1)
    block = sbm_blocks(spec)
    n = len(block)
    iu, ju = np.triu_indices(n, k=1)
    prob = np.where(block[iu] == block[ju], spec.p_in, spec.p_out)
    keep = coins.random(len(iu)) < prob
    return UnweightedGraph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def sample_circle_rgg(spec: CircleRggSpec) -> tuple[UnweightedGraph, np.ndarray]:
    """Uniform points on the unit circle joined when their chord is <= radius."""
    (placement,) = _streams(spec.seed, 1)
    theta = placement.uniform(0.0, 2 * math.pi, spec.n)
    xy = np.column_stack([np.cos(theta), np.sin(theta)])
    diff = xy[:, None, :] - xy[None, :, :]
    dist = np.sqrt((diff ** 2).sum(-1))
    iu, ju = np.triu_indices(spec.n, k=1)
    keep = dist[iu, ju] <= spec.radius
    return UnweightedGraph.from_edges(spec.n, zip(iu[keep].tolist(), ju[keep].tolist())), xy


def sample_gnp(n: int, p: float, seed: int) -> UnweightedGraph:
    (coins,) = _streams(seed, 1)
    iu, ju = np.triu_indices(n, k=1)
    keep = coins.random(len(iu)) < p
    return UnweightedGraph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def add_random_edge(g: UnweightedGraph, seed: int) -> UnweightedGraph:
    """Add one uniformly chosen absent edge."""
    absent = [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
    if not absent:
        raise GraphError("graph is complete; no edge to add")
    (rng,) = _streams(seed, 1)
    u, v = absent[int(rng.integers(len(absent)))]
    return UnweightedGraph.from_edges(g.n, g.edges() + [(u, v)], g.labels)


# --- fixtures -------------------------------------------------------------

def complete_graph(k: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + a, offset + b) for a, b in combinations(range(k), 2)]


def single_clique(k: int = 5) -> UnweightedGraph:
    return UnweightedGraph.from_edges(k, complete_graph(k))


def two_cliques(k: int = 5) -> UnweightedGraph:
    return UnweightedGraph.from_edges(2 * k, complete_graph(k) + complete_graph(k, k))


def bridged_cliques(k: int = 5) -> UnweightedGraph:
    """Two k-cliques joined by the single edge ``(k-1, k)``."""
    return UnweightedGraph.from_edges(2 * k, complete_graph(k) + complete_graph(k, k) + [(k - 1, k)])


def cycle(n: int) -> UnweightedGraph:
    return UnweightedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> UnweightedGraph:
    return UnweightedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def dense_cycle(n: int = 20, chord_span: int = 3) -> UnweightedGraph:
    """Cycle where vertex i is joined to i±1, ..., i±chord_span."""
    if not 1 <= chord_span < n / 2:
        raise GraphError("chord_span must be in [1, n/2)")
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in range(1, chord_span + 1)}
    return UnweightedGraph.from_edges(n, edges)


def dense_cycle_with_chord(n: int = 20, chord_span: int = 3) -> UnweightedGraph:
    """:func:`dense_cycle` plus one edge between antipodal vertices 0 and n//2."""
    g = dense_cycle(n, chord_span)
    return UnweightedGraph.from_edges(n, g.edges() + [(0, n // 2)])


def fig4_a() -> UnweightedGraph:
    """Four length-2 paths between a top vertex 0 and a bottom vertex 1 (K_{2,4})."""
    return UnweightedGraph.from_edges(6, [(t, m) for m in range(2, 6) for t in (0, 1)])


def fig4_b() -> UnweightedGraph:
    """:func:`fig4_a` plus the edge joining the top and bottom vertices."""
    return UnweightedGraph.from_edges(6, fig4_a().edges() + [(0, 1)])


def fig6_a() -> UnweightedGraph:
    """Two disjoint triangles."""
    return UnweightedGraph.from_edges(6, complete_graph(3) + complete_graph(3, 3))


def fig6_b() -> UnweightedGraph:
    """:func:`fig6_a` with one edge joining the triangles."""
    return UnweightedGraph.from_edges(6, fig6_a().edges() + [(2, 3)])


FIXTURES = {
    "single_clique": single_clique,
    "two_cliques": two_cliques,
    "bridged_cliques": bridged_cliques,
    "cycle": cycle,
    "path": path,
    "dense_cycle": dense_cycle,
    "dense_cycle_with_chord": dense_cycle_with_chord,
    "fig4_a": fig4_a,
    "fig4_b": fig4_b,
    "fig6_a": fig6_a,
    "fig6_b": fig6_b,
}


def fixture(name: str, *args: int) -> UnweightedGraph:
    try:
        make = FIXTURES[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return make(*args)
