"""Finite metric spaces with exact rational distances, circle samples and Čech complexes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, closed_neighborhood_complex, complex_equal, from_masks, maximal_masks
from .graphs import Graph


class MetricError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteMetricSpace:
    n: int
    dist: tuple  # n x n tuple of Fractions

    def __post_init__(self):
        d = tuple(tuple(Fraction(x) for x in row) for row in self.dist)
        if len(d) != self.n or any(len(row) != self.n for row in d):
            raise MetricError("distance matrix must be n x n")
        for i in range(self.n):
            if d[i][i] != 0:
                raise MetricError("diagonal must be zero")
            for j in range(self.n):
                if d[i][j] != d[j][i]:
                    raise MetricError(f"asymmetric distance at ({i}, {j})")
                if i != j and d[i][j] <= 0:
                    raise MetricError(f"distinct points {i}, {j} at distance {d[i][j]}")
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    if d[i][k] > d[i][j] + d[j][k]:
                        raise MetricError(f"triangle inequality fails for ({i}, {j}, {k})")
        object.__setattr__(self, "dist", d)

    def diameter(self) -> Fraction:
        return max((x for row in self.dist for x in row), default=Fraction(0))

    def to_json(self) -> dict:
        return {"n": self.n, "dist": [[str(x) for x in row] for row in self.dist]}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteMetricSpace":
        return cls(int(data["n"]), tuple(tuple(Fraction(x) for x in row) for row in data["dist"]))


@dataclass(frozen=True)
class CircleSample:
    """Points of R/Z given as rationals in [0, 1)."""

    angles: tuple

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.angles)
        if any(not 0 <= x < 1 for x in a):
            raise MetricError("angles must lie in [0, 1)")
        if list(a) != sorted(set(a)):
            raise MetricError("angles must be distinct and sorted")
        object.__setattr__(self, "angles", a)

    @property
    def n(self) -> int:
        return len(self.angles)


def circle_sample(n: int) -> CircleSample:
    if n < 1:
        raise MetricError("need at least one point")
    return CircleSample(tuple(Fraction(i, n) for i in range(n)))


def circle_distance(x: Fraction, y: Fraction) -> Fraction:
    t = abs(x - y)
    return min(t, 1 - t)


def circle_metric(c: CircleSample) -> FiniteMetricSpace:
    return FiniteMetricSpace(c.n, tuple(tuple(circle_distance(x, y) for y in c.angles) for x in c.angles))


def random_metric(n: int, seed: int, max_den: int = 6) -> FiniteMetricSpace:
    """Shortest-path metric of a random complete weighted graph with rational weights."""
    rng = random.Random(seed)
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = Fraction(rng.randint(1, 3 * max_den), rng.randint(1, max_den))
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return FiniteMetricSpace(n, tuple(tuple(r) for r in d))


def _within(d: Fraction, r: Fraction, closed: bool) -> bool:
    return d <= r if closed else d < r


def neighborhood_graph(x: FiniteMetricSpace, r, closed: bool) -> Graph:
    """Edges between distinct points at distance ``< r`` (open) or ``<= r`` (closed)."""
    r = Fraction(r)
    if r < 0:
        raise MetricError("radius must be non-negative")
    edges = [
        (i, j)
        for i in range(x.n)
        for j in range(i + 1, x.n)
        if _within(x.dist[i][j], r, closed)
    ]
    return Graph.from_edges(x.n, edges)


def cech_complex_direct(x: FiniteMetricSpace, r, closed: bool) -> SimplicialComplex:
    """Sets inside a single ball centred at a sample point."""
    r = Fraction(r)
    balls = [
        sum(1 << j for j in range(x.n) if _within(x.dist[i][j], r, closed)) for i in range(x.n)
    ]
    return from_masks(tuple(range(x.n)), maximal_masks([b for b in balls if b]))


def cech_complex(x: FiniteMetricSpace, r, closed: bool) -> SimplicialComplex:
    """Čech complex computed from balls and as a closed neighborhood complex; both must agree.

    An open ball of radius 0 is empty, so the open complex at ``r = 0`` is
    rejected: it is void, while the neighborhood route gives isolated points.
    """
    r = Fraction(r)
    if r < 0:
        raise MetricError("radius must be non-negative")
    if not closed and r == 0 and x.n:
        raise MetricError("open Čech complex at radius 0 is void; use r > 0")
    direct = cech_complex_direct(x, r, closed)
    via_graph = closed_neighborhood_complex(neighborhood_graph(x, r, closed), 1)
    if not complex_equal(direct, via_graph):
        raise AssertionError("Čech complex routes disagree")
    return direct


def borsuk_graph(c: CircleSample, a, closed: bool) -> Graph:
    """Pairs at circle distance ``> a`` (open) or ``>= a`` (closed)."""
    a = Fraction(a)
    if not 0 < a <= Fraction(1, 2):
        raise MetricError("need 0 < a <= 1/2")
    edges = []
    for i, x in enumerate(c.angles):
        for j in range(i + 1, c.n):
            d = circle_distance(x, c.angles[j])
            if d >= a if closed else d > a:
                edges.append((i, j))
    return Graph.from_edges(c.n, edges)
