"""End-to-end persistence for the cliqueness, clique and power filtrations."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cliqueness import cliqueness_map
from .complex import (ASCENDING, DESCENDING, FilteredComplex, build_filtered_complex, enumerate_cliques,
                      order_simplices)
from .graph import UnweightedGraph, bfs_distances, remove_isolated_vertices
from .persistence import (CLIQUE, CLIQUENESS, INF, KINDS, POWER, PersistenceDiagram,
                          diagrams_for, reduce_and_pair)

logger = logging.getLogger(__name__)


@dataclass
class AnalysisRequest:
    graph: UnweightedGraph
    kind: str = CLIQUENESS
    max_dim: int = 1
    drop_zero: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown filtration kind {self.kind!r}; expected one of {KINDS}")
        if self.max_dim < 0:
            raise ValueError(f"max_dim must be >= 0, got {self.max_dim}")


@dataclass
class RunReport:
    kind: str
    n_vertices: int
    n_edges: int
    simplex_counts: list[int] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    dropped_points: list[int] = field(default_factory=list)
    removed_isolated: int = 0

    def lines(self) -> list[str]:
        out = [f"kind={self.kind} vertices={self.n_vertices} edges={self.n_edges}"]
        if self.removed_isolated:
            out.append(f"isolated vertices removed: {self.removed_isolated}")
        out.append("simplices by dim: " + ", ".join(f"{d}:{c}" for d, c in enumerate(self.simplex_counts)))
        out.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in self.timings.items()))
        if any(self.dropped_points):
            out.append("zero-persistence points dropped: " + ", ".join(
                f"H{d}:{c}" for d, c in enumerate(self.dropped_points)))
        return out


class _Timer:
    def __init__(self, report: RunReport):
        self.report = report

    def __call__(self, stage):
        self.stage = stage
        return self

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.report.timings[self.stage] = time.perf_counter() - self.t0


def _all_zero_stand_in() -> FilteredComplex:
    # An edgeless graph weights every pair 0: its complete complex is one
    # component entering at 0. A single vertex has the same nonzero diagram.
    return FilteredComplex([(0,)], [Fraction(0)], DESCENDING)


def cliqueness_complex(g: UnweightedGraph, max_dim: int) -> FilteredComplex:
    h, _ = remove_isolated_vertices(g)
    if h.n == 0 and g.n > 0:
        return _all_zero_stand_in()
    return build_filtered_complex(cliqueness_map(h), max_dim)


def clique_complex_filtration(g: UnweightedGraph, max_dim: int) -> FilteredComplex:
    """Skeleton filtration: a p-simplex enters at stage p."""
    simplices = list(enumerate_cliques(g, max_dim + 2))
    return order_simplices(simplices, [len(s) - 1 for s in simplices], ASCENDING)


def power_complex_filtration(g: UnweightedGraph, max_dim: int) -> FilteredComplex:
    """Rips filtration of the hop metric; vertices enter at 0.

    Vertices in different components are never joined.
    """
    dist = {v: bfs_distances(g, v) for v in g.vertices}
    reach = {v: set(d) - {v} for v, d in dist.items()}
    simplices = list(enumerate_cliques(reach, max_dim + 2))
    values = []
    for s in simplices:
        values.append(max((dist[a][b] for i, a in enumerate(s) for b in s[i + 1:]), default=0))
    return order_simplices(simplices, values, ASCENDING)


_BUILDERS = {
    CLIQUENESS: cliqueness_complex,
    CLIQUE: clique_complex_filtration,
    POWER: power_complex_filtration,
}


def build_complex(g: UnweightedGraph, kind: str, max_dim: int) -> FilteredComplex:
    """The filtered complex a pipeline of ``kind`` reduces (simplices up to ``max_dim + 1``)."""
    if kind not in _BUILDERS:
        raise ValueError(f"unknown filtration kind {kind!r}; expected one of {KINDS}")
    return _BUILDERS[kind](g, max_dim)


def run(req: AnalysisRequest) -> tuple[list[PersistenceDiagram], RunReport]:
    """Diagrams for dimensions ``0..req.max_dim`` plus a run report."""
    g = req.graph
    report = RunReport(req.kind, g.n, g.num_edges)
    timer = _Timer(report)
    if req.kind == CLIQUENESS:
        with timer("remove_isolated"):
            h, _ = remove_isolated_vertices(g)
        report.removed_isolated = g.n - h.n
        with timer("weights"):
            w = cliqueness_map(h)
        with timer("complex"):
            if h.n == 0 and g.n > 0:
                fc = _all_zero_stand_in()
            else:
                fc = build_filtered_complex(w, req.max_dim)
    else:
        with timer("complex"):
            fc = _BUILDERS[req.kind](g, req.max_dim)
    report.simplex_counts = fc.counts_by_dim()
    with timer("reduction"):
        pairing = reduce_and_pair(fc)
    with timer("diagrams"):
        full = diagrams_for(fc, req.max_dim, req.kind, drop_zero=False, pairing=pairing)
        if req.drop_zero:
            diagrams = diagrams_for(fc, req.max_dim, req.kind, drop_zero=True, pairing=pairing)
        else:
            diagrams = full
    report.dropped_points = [len(a) - len(b) for a, b in zip(full, diagrams)]
    for line in report.lines():
        logger.debug(line)
    return diagrams, report


def _pipeline(kind):
    def pipeline(req: AnalysisRequest) -> list[PersistenceDiagram]:
        if req.kind != kind:
            raise ValueError(f"expected a {kind} request, got {req.kind}")
        return run(req)[0]
    pipeline.__name__ = f"{kind}_pipeline"
    pipeline.__doc__ = f"Persistence diagrams of the {kind} filtration, one per dimension."
    return pipeline


cliqueness_pipeline = _pipeline(CLIQUENESS)
clique_pipeline = _pipeline(CLIQUE)
power_pipeline = _pipeline(POWER)


def diagrams(g: UnweightedGraph, kind: str = CLIQUENESS, max_dim: int = 1,
             drop_zero: bool = True) -> list[PersistenceDiagram]:
    """Shorthand for ``run(AnalysisRequest(...))[0]``."""
    return run(AnalysisRequest(g, kind, max_dim, drop_zero))[0]


def essential_count(d: PersistenceDiagram) -> int:
    return sum(1 for _, death in d.points if death == INF)
