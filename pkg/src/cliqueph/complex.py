"""Clique enumeration, filtration values and totally ordered filtered complexes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Mapping, Sequence, TextIO

from .cliqueness import WeightedGraph
from .graph import GraphError, UnweightedGraph

Simplex = tuple[int, ...]

DESCENDING = "descending"
ASCENDING = "ascending"


def _adjacency_sets(g) -> dict[int, set[int]]:
    if isinstance(g, WeightedGraph):
        return g.adjacency()
    if isinstance(g, UnweightedGraph):
        return {v: set(g.adjacency[v]) for v in g.vertices}
    # plain mapping vertex -> neighbours
    return {v: set(nb) for v, nb in g.items()}


def enumerate_cliques(g, max_size: int) -> Iterator[Simplex]:
    """Yield every clique with 1..max_size vertices once, as a sorted tuple.

    Cliques are grown by appending common neighbours larger than the current
    maximum vertex, so each one is produced from its sorted prefix only.
    """
    if max_size < 1:
        raise GraphError(f"max_size must be >= 1, got {max_size}")
    adj = _adjacency_sets(g)
    higher = {v: sorted(u for u in nb if u > v) for v, nb in adj.items()}

    def grow(clique: Simplex, cand: list[int]):
        yield clique
        if len(clique) == max_size:
            return
        for i, v in enumerate(cand):
            nb = adj[v]
            yield from grow(clique + (v,), [u for u in cand[i + 1:] if u in nb])

    for v in sorted(adj):
        yield from grow((v,), higher[v])


def filtration_value(simplex: Simplex, weight: Callable[[int, int], Fraction],
                     incident: Mapping[int, Sequence[int]] | None = None) -> Fraction:
    """Cliqueness filtration value of a simplex.

    Edges and higher simplices take the minimum weight over their edges.
    A vertex takes the maximum weight over the edges incident to it in the
    complex (``incident[v]`` lists its neighbours there), or 0 if it has none.
    """
    if len(simplex) == 1:
        v = simplex[0]
        nbrs = incident.get(v, ()) if incident is not None else ()
        return max((weight(v, u) for u in nbrs), default=Fraction(0))
    return min(weight(a, b) for a, b in combinations(simplex, 2))


@dataclass
class FilteredComplex:
    """Simplices in filtration order with their filtration values.

    ``direction`` is :data:`DESCENDING` for the cliqueness filtration (simplices
    enter from value 1 down to 0) and :data:`ASCENDING` for the index-valued
    clique and power filtrations.
    """

    simplices: list[Simplex]
    values: list
    direction: str
    order_index: dict[Simplex, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.order_index:
            self.order_index = {s: i for i, s in enumerate(self.simplices)}

    def __len__(self) -> int:
        return len(self.simplices)

    @property
    def dims(self) -> list[int]:
        return [len(s) - 1 for s in self.simplices]

    @property
    def max_dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def value_of(self, s: Simplex):
        return self.values[self.order_index[s]]

    def counts_by_dim(self) -> list[int]:
        counts = [0] * (self.max_dim + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def check(self) -> None:
        """Assert closure, face-before-coface and value monotonicity."""
        idx = self.order_index
        sign = -1 if self.direction == DESCENDING else 1
        prev = None
        for i, (s, val) in enumerate(zip(self.simplices, self.values)):
            assert list(s) == sorted(set(s)), f"non-canonical simplex {s}"
            if prev is not None:
                assert sign * (val - prev) >= 0, f"values not monotone at {i}"
            prev = val
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    assert face in idx, f"missing face {face} of {s}"
                    assert idx[face] < i, f"face {face} after coface {s}"

    def dump(self, fh: TextIO) -> None:
        for s, val in zip(self.simplices, self.values):
            fh.write(f"{val}\t{len(s) - 1}\t{','.join(map(str, s))}\n")


def _value_ranks(values) -> dict:
    return {v: r for r, v in enumerate(sorted(set(values)))}


def order_simplices(simplices: list[Simplex], values: list, direction: str) -> FilteredComplex:
    """Sort by value (in ``direction``), then dimension, then vertex ids."""
    # rank exact values once; comparing Fractions inside the sort is slow
    rank = _value_ranks(values)
    sign = -1 if direction == DESCENDING else 1
    keyed = sorted(range(len(simplices)),
                   key=lambda i: (sign * rank[values[i]], len(simplices[i]), simplices[i]))
    return FilteredComplex([simplices[i] for i in keyed], [values[i] for i in keyed], direction)


def build_filtered_complex(w: WeightedGraph, max_dim: int,
                           support: WeightedGraph | None = None) -> FilteredComplex:
    """Cliqueness filtration of the clique complex, truncated at ``max_dim + 1``.

    Cliques are enumerated on ``support`` (default: ``w`` itself); values come
    from the weights of ``w``, with pairs missing from ``w`` reading as 0. Using
    a shared support gives two functions on one complex.
    """
    if max_dim < 0:
        raise GraphError(f"max_dim must be >= 0, got {max_dim}")
    support = w if support is None else support
    incident = {v: sorted(nb) for v, nb in support.adjacency().items()}
    simplices = list(enumerate_cliques(support, max_dim + 2))
    values = [filtration_value(s, w.weight, incident) for s in simplices]
    return order_simplices(simplices, values, DESCENDING)


def distance_functions(f1: FilteredComplex, f2: FilteredComplex) -> Fraction:
    """Max absolute difference of two filtration functions on the same complex."""
    if f1.order_index.keys() != f2.order_index.keys():
        raise GraphError("filtration functions are defined on different complexes")
    best = Fraction(0)
    for s, i in f1.order_index.items():
        best = max(best, abs(Fraction(f1.values[i]) - Fraction(f2.value_of(s))))
    return best
