"""Bottleneck distance between persistence diagrams."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .persistence import INF, PersistenceDiagram

Point = tuple


class DiagramMismatch(ValueError):
    pass


def _linf(p: Point, q: Point):
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _diag_cost(p: Point):
    return Fraction(abs(p[0] - p[1])) / 2


def _hopcroft_karp(adj: list[list[int]], n_right: int) -> tuple[int, list[int]]:
    """Maximum bipartite matching; returns (size, match_of_left)."""
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    size = 0
    while True:
        # BFS layering from free left vertices
        dist = [-1] * n_left
        queue = [u for u in range(n_left) if match_l[u] < 0]
        for u in queue:
            dist[u] = 0
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            return size, match_l

        def augment(u):
            stack = [(u, iter(adj[u]))]
            path = []
            while stack:
                x, it = stack[-1]
                for v in it:
                    w = match_r[v]
                    if w < 0:
                        path.append((x, v))
                        for a, b in path:
                            match_l[a] = b
                            match_r[b] = a
                        return True
                    if dist[w] == dist[x] + 1:
                        path.append((x, v))
                        stack.append((w, iter(adj[w])))
                        break
                else:
                    dist[x] = -1
                    stack.pop()
                    if path:
                        path.pop()
            return False

        for u in range(n_left):
            if match_l[u] < 0 and augment(u):
                size += 1


class _FiniteMatcher:
    """Perfect-matching feasibility on the diagonal-augmented bipartite graph.

    Left side: points of X, then one diagonal slot per point of Y.
    Right side: points of Y, then one diagonal slot per point of X.
    Diagonal-to-diagonal edges always cost 0.
    """

    def __init__(self, xs: Sequence[Point], ys: Sequence[Point]):
        self.xs, self.ys = list(xs), list(ys)
        n, m = len(xs), len(ys)
        self.n, self.m = n, m
        self.cross = [[_linf(x, y) for y in ys] for x in xs]
        self.dx = [_diag_cost(x) for x in xs]
        self.dy = [_diag_cost(y) for y in ys]

    def candidates(self) -> list:
        vals = {Fraction(0)}
        for row in self.cross:
            vals.update(row)
        vals.update(self.dx)
        vals.update(self.dy)
        return sorted(vals)

    def graph(self, t) -> list[list[int]]:
        n, m = self.n, self.m
        adj = []
        for i in range(n):
            row = [j for j in range(m) if self.cross[i][j] <= t]
            if self.dx[i] <= t:
                row.append(m + i)
            adj.append(row)
        for j in range(m):
            # diagonal slot of y_j: to y_j itself, or to any diagonal slot of X
            row = [j] if self.dy[j] <= t else []
            row.extend(m + i for i in range(n))
            adj.append(row)
        return adj

    def feasible(self, t) -> tuple[bool, list[int]]:
        size, match = _hopcroft_karp(self.graph(t), self.n + self.m)
        return size == self.n + self.m, match


def _finite_bottleneck(xs, ys):
    if not xs and not ys:
        return Fraction(0), []
    fm = _FiniteMatcher(xs, ys)
    cands = fm.candidates()
    lo, hi = 0, len(cands) - 1
    ok, best_match = fm.feasible(cands[hi])
    assert ok, "largest candidate must admit a perfect matching"
    while lo < hi:
        mid = (lo + hi) // 2
        ok, match = fm.feasible(cands[mid])
        if ok:
            hi, best_match = mid, match
        else:
            lo = mid + 1
    t = cands[lo]
    assert lo == 0 or not fm.feasible(cands[lo - 1])[0], "feasibility not monotone"
    matching = []
    for i in range(fm.n):
        j = best_match[i]
        matching.append((xs[i], ys[j] if j < fm.m else None))
    for j in range(fm.m):
        partner = best_match[fm.n + j]
        if partner == j:
            matching.append((None, ys[j]))
    return t, matching


def _check_compatible(d1: PersistenceDiagram, d2: PersistenceDiagram) -> None:
    if d1.direction != d2.direction:
        raise DiagramMismatch(f"filtration conventions differ: {d1.direction} vs {d2.direction}")
    if d1.dimension != d2.dimension:
        raise DiagramMismatch(f"diagram dimensions differ: {d1.dimension} vs {d2.dimension}")


def bottleneck_matching(d1: PersistenceDiagram, d2: PersistenceDiagram):
    """Bottleneck distance and one optimal matching.

    The matching is a list of ``(x, y)`` with ``None`` standing for the diagonal.
    Never-dying points are matched among themselves in birth order; unequal
    counts make the distance infinite.
    """
    _check_compatible(d1, d2)
    inf1 = sorted(b for b, d in d1.points if d == INF)
    inf2 = sorted(b for b, d in d2.points if d == INF)
    if len(inf1) != len(inf2):
        return INF, []
    ess = max((abs(a - b) for a, b in zip(inf1, inf2)), default=Fraction(0))
    fin, matching = _finite_bottleneck(d1.finite(), d2.finite())
    matching = [((a, INF), (b, INF)) for a, b in zip(inf1, inf2)] + matching
    return max(ess, fin), matching


def bottleneck_distance(d1: PersistenceDiagram, d2: PersistenceDiagram):
    return bottleneck_matching(d1, d2)[0]
