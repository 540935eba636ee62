"""Undirected simple graphs: construction, edge-list ingestion, BFS utilities."""
from __future__ import annotations

import io
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, TextIO

logger = logging.getLogger(__name__)

#: Returned by :func:`diameter` for graphs with more than one component.
UNBOUNDED = float("inf")


class GraphError(ValueError):
    """Invalid graph operation (unknown vertex, mismatched vertex sets, ...)."""


class EdgeListParseError(ValueError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: expected two vertex tokens, got {line!r}")
        self.lineno = lineno


@dataclass(frozen=True)
class UnweightedGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Build instances
    with :meth:`from_edges` rather than the constructor.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    # ingestion statistics; not part of equality
    dropped_self_loops: int = field(default=0, compare=False)
    dropped_duplicates: int = field(default=0, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None,
                   dropped_self_loops: int = 0, dropped_duplicates: int = 0) -> "UnweightedGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(tuple(sorted(s)) for s in nbrs),
                tuple(labels) if labels is not None else None,
                dropped_self_loops, dropped_duplicates)
        g._check()
        return g

    @classmethod
    def empty(cls, n: int = 0) -> "UnweightedGraph":
        return cls.from_edges(n, ())

    def _check(self) -> None:
        assert len(self.adjacency) == self.n
        for v, nb in enumerate(self.adjacency):
            assert v not in nb, "self-loop"
            assert all(a < b for a, b in zip(nb, nb[1:])), "unsorted adjacency"
            for u in nb:
                assert v in self.adjacency[u], "asymmetric adjacency"
        assert self.num_edges <= self.n * (self.n - 1) // 2
        if self.labels is not None:
            assert len(self.labels) == self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def _require(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"unknown vertex {v!r}")

    def relabel(self, perm) -> "UnweightedGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return UnweightedGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def with_edge_toggled(self, u: int, v: int) -> "UnweightedGraph":
        e = (min(u, v), max(u, v))
        es = set(self.edges())
        es.symmetric_difference_update({e})
        return UnweightedGraph.from_edges(self.n, es, self.labels)

    def __repr__(self) -> str:
        return f"UnweightedGraph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class VertexNeighborhood:
    vertex: int
    members: frozenset[int]


def load_edge_list(source: str | bytes | TextIO, comment: str = "#") -> UnweightedGraph:
    """Parse a whitespace-separated edge list.

    Tokens are treated as opaque labels and numbered in first-seen order.
    Self-loops and repeated edges are dropped and counted on the result.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        source = io.StringIO(source)

    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    loops = dups = 0
    for lineno, raw in enumerate(source, 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise EdgeListParseError(lineno, line)
        a, b = (ids.setdefault(t, len(ids)) for t in toks)
        if a == b:
            loops += 1
            continue
        e = (min(a, b), max(a, b))
        if e in edges:
            dups += 1
            continue
        edges.add(e)
    if loops:
        logger.warning("dropped %d self-loop(s)", loops)
    if dups:
        logger.info("dropped %d duplicate edge(s)", dups)
    return UnweightedGraph.from_edges(len(ids), edges, labels=list(ids),
                                      dropped_self_loops=loops, dropped_duplicates=dups)


def read_edge_list(path) -> UnweightedGraph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh)


def write_edge_list(g: UnweightedGraph, fh: TextIO, header: str | None = None) -> None:
    if header:
        for line in header.splitlines():
            fh.write(f"# {line}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


def closed_neighborhood(g: UnweightedGraph, v: int) -> VertexNeighborhood:
    g._require(v)
    return VertexNeighborhood(v, frozenset(g.adjacency[v]) | {v})


def remove_isolated_vertices(g: UnweightedGraph) -> tuple[UnweightedGraph, list[int]]:
    """Drop degree-0 vertices.

    Returns the re-densified graph and ``kept``, where ``kept[new_id]`` is the
    vertex id in ``g``.
    """
    kept = [v for v in g.vertices if g.adjacency[v]]
    new_id = {v: i for i, v in enumerate(kept)}
    labels = [g.labels[v] for v in kept] if g.labels is not None else None
    h = UnweightedGraph.from_edges(len(kept), [(new_id[u], new_id[v]) for u, v in g.edges()], labels)
    return h, kept


def bfs_distances(g: UnweightedGraph, source: int, cutoff: int | None = None) -> dict[int, int]:
    """Hop distances from ``source`` to every vertex reachable within ``cutoff``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if cutoff is not None and du >= cutoff:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def connected_components(g: UnweightedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in g.vertices:
        if seen[s]:
            continue
        comp = sorted(bfs_distances(g, s))
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def largest_component(g: UnweightedGraph) -> UnweightedGraph:
    """Induced subgraph on the largest connected component, re-densified."""
    if g.n == 0:
        return g
    comp = max(connected_components(g), key=len)
    new_id = {v: i for i, v in enumerate(comp)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges() if u in new_id]
    labels = [g.labels[v] for v in comp] if g.labels is not None else None
    return UnweightedGraph.from_edges(len(comp), edges, labels)


def graph_power(g: UnweightedGraph, k: int) -> UnweightedGraph:
    if k < 1:
        raise GraphError(f"graph power needs k >= 1, got {k}")
    edges = []
    for u in g.vertices:
        for v, d in bfs_distances(g, u, cutoff=k).items():
            if u < v:
                edges.append((u, v))
    return UnweightedGraph.from_edges(g.n, edges, g.labels)


def component_diameters(g: UnweightedGraph) -> list[int]:
    """Diameter of each connected component (0 for singletons)."""
    out = []
    for comp in connected_components(g):
        out.append(max(max(bfs_distances(g, v).values()) for v in comp))
    return out


def diameter(g: UnweightedGraph) -> float | int:
    """Largest shortest-path distance, or :data:`UNBOUNDED` if ``g`` is disconnected."""
    diams = component_diameters(g)
    if len(diams) > 1:
        return UNBOUNDED
    return diams[0] if diams else 0


def distance_unweighted(g1: UnweightedGraph, g2: UnweightedGraph) -> int:
    """0 if the edge sets agree, 1 otherwise."""
    if g1.n != g2.n:
        raise GraphError(f"vertex sets differ ({g1.n} vs {g2.n} vertices)")
    return int(g1.adjacency != g2.adjacency)
