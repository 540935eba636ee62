"""Jaccard cliqueness weighting of vertex pairs and the weighted-graph distance."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, TextIO

from .graph import GraphError, UnweightedGraph


@dataclass(frozen=True)
class WeightedGraph:
    """Sparse view of the complete weighted graph on ``n`` vertices.

    Only pairs with positive weight are stored; every other pair of the
    complete graph has weight 0. ``vertices`` lists the vertices that carry at
    least one positive pair (isolated input vertices are left out).
    """

    n: int
    vertices: tuple[int, ...]
    weights: dict[tuple[int, int], Fraction]

    def weight(self, u: int, v: int) -> Fraction:
        if u > v:
            u, v = v, u
        return self.weights.get((u, v), Fraction(0))

    def float_weight(self, u: int, v: int) -> float:
        return float(self.weight(u, v))

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.weights)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.weights:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __len__(self) -> int:
        return len(self.weights)


def _closed(g: UnweightedGraph, v: int) -> frozenset[int]:
    return frozenset(g.adjacency[v]) | {v}


def cliqueness_weight(g: UnweightedGraph, u: int, v: int) -> Fraction:
    """Jaccard index of the closed neighbourhoods of ``u`` and ``v``."""
    g._require(u)
    g._require(v)
    if u == v:
        raise GraphError("cliqueness weight is defined for distinct vertices only")
    nu, nv = _closed(g, u), _closed(g, v)
    return Fraction(len(nu & nv), len(nu | nv))


def _jaccard_sorted(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int]:
    # merge-intersect two sorted sequences
    i = j = common = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            common += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return common, len(a) + len(b) - common


def _candidate_pairs(g: UnweightedGraph) -> Iterator[tuple[int, int]]:
    # pairs at hop distance 1 or 2; all others have disjoint closed neighbourhoods
    for u in g.vertices:
        seen = set()
        for w in g.adjacency[u]:
            if w > u:
                seen.add(w)
            for x in g.adjacency[w]:
                if x > u:
                    seen.add(x)
        for v in sorted(seen):
            yield u, v


def cliqueness_map(g: UnweightedGraph) -> WeightedGraph:
    """Weighted graph holding every vertex pair with positive cliqueness."""
    closed = [tuple(sorted(g.adjacency[v] + (v,))) for v in g.vertices]
    weights = {}
    for u, v in _candidate_pairs(g):
        common, union = _jaccard_sorted(closed[u], closed[v])
        if common:
            weights[(u, v)] = Fraction(common, union)
    active = tuple(v for v in g.vertices if g.adjacency[v])
    return WeightedGraph(g.n, active, weights)


def distance_weighted(w1: WeightedGraph, w2: WeightedGraph) -> Fraction:
    """Max absolute weight difference over all pairs of the complete graph."""
    if w1.n != w2.n:
        raise GraphError(f"vertex sets differ ({w1.n} vs {w2.n} vertices)")
    best = Fraction(0)
    for e in w1.weights.keys() | w2.weights.keys():
        best = max(best, abs(w1.weights.get(e, 0) - w2.weights.get(e, 0)))
    return best


def write_weighted_csv(w: WeightedGraph, fh: TextIO, labels=None) -> None:
    name = (lambda v: labels[v]) if labels is not None else str
    fh.write("u,v,numerator,denominator,weight\n")
    for (u, v) in w.pairs():
        c = w.weights[(u, v)]
        fh.write(f"{name(u)},{name(v)},{c.numerator},{c.denominator},{float(c):.6g}\n")
