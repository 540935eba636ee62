"""Boundary-matrix reduction over GF(2) and persistence diagrams."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations

from .complex import ASCENDING, DESCENDING, FilteredComplex

INF = math.inf

CLIQUENESS = "cliqueness"
CLIQUE = "clique"
POWER = "power"
KINDS = (CLIQUENESS, CLIQUE, POWER)


def boundary_columns(fc: FilteredComplex) -> list[list[int]]:
    """Sorted order-indices of the codimension-1 faces of each simplex."""
    idx = fc.order_index
    cols = []
    for j, s in enumerate(fc.simplices):
        if len(s) == 1:
            cols.append([])
            continue
        col = sorted(idx[f] for f in combinations(s, len(s) - 1))
        assert len(col) == len(s) and col[-1] < j
        cols.append(col)
    return cols


@dataclass
class Pairing:
    """Birth/death index pairs and unpaired (essential) births, by dimension."""

    pairs: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    essential: dict[int, list[int]] = field(default_factory=dict)

    def add_pair(self, dim: int, birth: int, death: int) -> None:
        self.pairs.setdefault(dim, []).append((birth, death))

    def add_essential(self, dim: int, birth: int) -> None:
        self.essential.setdefault(dim, []).append(birth)


def reduce_and_pair(fc: FilteredComplex) -> Pairing:
    """Standard left-to-right column reduction with clearing.

    Dimensions are processed from the top down so that a column known to be
    the birth of a later-killed class is skipped (it would reduce to zero).
    """
    cols = boundary_columns(fc)
    dims = fc.dims
    top = fc.max_dim
    by_dim: list[list[int]] = [[] for _ in range(top + 1)]
    for j, d in enumerate(dims):
        by_dim[d].append(j)

    pivot_of_low: dict[int, int] = {}
    reduced: dict[int, set[int]] = {}
    cleared: set[int] = set()
    death_of: dict[int, int] = {}

    for d in range(top, 0, -1):
        for j in by_dim[d]:
            if j in cleared:
                continue
            col = set(cols[j])
            while col:
                low = max(col)
                k = pivot_of_low.get(low)
                if k is None:
                    break
                col ^= reduced[k]
            if col:
                low = max(col)
                pivot_of_low[low] = j
                reduced[j] = col
                cleared.add(low)
                death_of[low] = j

    out = Pairing()
    for d in range(top + 1):
        out.pairs.setdefault(d, [])
        out.essential.setdefault(d, [])
        for j in by_dim[d]:
            if j in death_of:
                out.add_pair(d, j, death_of[j])
            elif j not in reduced:
                out.add_essential(d, j)
    for d in out.pairs:
        out.pairs[d].sort()
    return out


@dataclass
class PersistenceDiagram:
    """Multiset of ``(birth, death)`` points for one homology dimension.

    ``death`` is :data:`INF` for a class that never dies. Under the descending
    convention births are >= deaths; under the ascending one births <= deaths.
    ``birth_indices`` (if known) gives the filtration position of each point's
    birth simplex.
    """

    dimension: int
    points: list[tuple]
    kind: str = CLIQUENESS
    direction: str = DESCENDING
    birth_indices: list[int] | None = None

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> list[tuple]:
        return sorted(self.points, key=lambda p: (p[0], p[1]))

    def finite(self) -> list[tuple]:
        return [p for p in self.points if p[1] != INF]

    def infinite(self) -> list[tuple]:
        return [p for p in self.points if p[1] == INF]

    def persistences(self) -> list:
        """Birth/death gaps of the finite points (non-negative in both conventions)."""
        return [abs(b - d) for b, d in self.finite()]

    def same_points(self, other: "PersistenceDiagram") -> bool:
        return self.sorted_points() == other.sorted_points()

    def __eq__(self, other):
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return (self.dimension, self.kind, self.direction) == (
            other.dimension, other.kind, other.direction) and self.same_points(other)


def diagram_from_pairing(fc: FilteredComplex, pairing: Pairing, p: int,
                         kind: str = CLIQUENESS) -> PersistenceDiagram:
    """Map index pairs of dimension ``p`` to filtration values."""
    vals = fc.values
    items = [(b, (vals[b], vals[d])) for b, d in pairing.pairs.get(p, [])]
    items += [(b, (vals[b], INF)) for b in pairing.essential.get(p, [])]
    items.sort(key=lambda t: t[0])
    return PersistenceDiagram(p, [pt for _, pt in items], kind, fc.direction,
                              [b for b, _ in items])


def finalize_diagram(d: PersistenceDiagram, kind: str | None = None,
                     drop_zero: bool = False) -> PersistenceDiagram:
    """Death-value post-processing of cliqueness diagrams.

    For the cliqueness kind, never-dying classes get death 0, except in
    dimension 0 the one with the largest birth (ties: earliest birth simplex).
    Other kinds keep their infinite points. ``drop_zero`` removes points with
    equal birth and death.
    """
    kind = d.kind if kind is None else kind
    idx = d.birth_indices if d.birth_indices is not None else list(range(len(d.points)))
    keep_inf = None
    if kind == CLIQUENESS and d.dimension == 0:
        inf_pos = [i for i, (b, dth) in enumerate(d.points) if dth == INF]
        if inf_pos:
            keep_inf = min(inf_pos, key=lambda i: (-d.points[i][0], idx[i]))

    points, births = [], []
    for i, (b, dth) in enumerate(d.points):
        if kind == CLIQUENESS and dth == INF and i != keep_inf:
            dth = Fraction(0)
        if drop_zero and b == dth:
            continue
        points.append((b, dth))
        births.append(idx[i])
    return replace(d, points=points, kind=kind, birth_indices=births)


def betti_numbers(fc: FilteredComplex, up_to: int, pairing: Pairing | None = None) -> list[int]:
    """Betti numbers of the whole complex in dimensions ``0..up_to``."""
    pairing = reduce_and_pair(fc) if pairing is None else pairing
    return [len(pairing.essential.get(p, [])) for p in range(up_to + 1)]


def diagrams_for(fc: FilteredComplex, max_dim: int, kind: str, drop_zero: bool = False,
                 pairing: Pairing | None = None) -> list[PersistenceDiagram]:
    pairing = reduce_and_pair(fc) if pairing is None else pairing
    return [finalize_diagram(diagram_from_pairing(fc, pairing, p, kind), kind, drop_zero)
            for p in range(max_dim + 1)]


__all__ = [
    "ASCENDING", "DESCENDING", "INF", "CLIQUENESS", "CLIQUE", "POWER", "KINDS",
    "Pairing", "PersistenceDiagram", "boundary_columns", "reduce_and_pair",
    "diagram_from_pairing", "finalize_diagram", "betti_numbers", "diagrams_for",
]
