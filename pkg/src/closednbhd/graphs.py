"""Finite graphs and digraphs on dense vertex ids ``0..n-1``.

Edges of a :class:`Graph` are stored as sorted pairs, arcs of a
:class:`Digraph` as ordered pairs.  Adjacency is also exposed as bitmasks,
which is what the complex constructions use internally.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph data or parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple:
        """Open neighborhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbors(self) -> tuple:
        return tuple(tuple(sorted(_bits(m))) for m in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_nbhd_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        canon = set()
        for a in self.arcs:
            u, v = a
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc {a} out of range for n={self.n}")
            canon.add((u, v))
        object.__setattr__(self, "arcs", frozenset(canon))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable) -> "Digraph":
        return cls(n, frozenset(tuple(a) for a in arcs))

    @classmethod
    def from_graph(cls, g: Graph) -> "Digraph":
        return cls(g.n, frozenset(g.edges | {(v, u) for u, v in g.edges}))

    @cached_property
    def out_adj(self) -> tuple:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_adj(self) -> tuple:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def is_symmetric(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)


@dataclass(frozen=True)
class VertexMap:
    """A total function ``V(G) -> V(H)`` given by its image list."""

    domain: int
    codomain: int
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.domain:
            raise GraphError("image length must equal domain size")
        if any(not 0 <= y < self.codomain for y in self.image):
            raise GraphError("image vertex out of range")

    def __call__(self, v: int) -> int:
        return self.image[v]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list:
    return list(_bits(mask))


def complement(g: Graph) -> Graph:
    edges = frozenset(
        e for e in combinations(range(g.n), 2) if e not in g.edges
    )
    return Graph(g.n, edges)


def categorical_product(g: Graph, h: Graph) -> Graph:
    """Categorical (tensor) product; ``(i, j)`` is encoded as ``i * h.n + j``."""
    m = h.n
    edges = set()
    for a, b in g.edges:
        for c, d in h.edges:
            edges.add((a * m + c, b * m + d))
            edges.add((a * m + d, b * m + c))
    return Graph(g.n * m, frozenset(edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = set()
    for i in range(g.n):
        for c, d in h.edges:
            edges.add((i * m + c, i * m + d))
    for a, b in g.edges:
        for j in range(m):
            edges.add((a * m + j, b * m + j))
    return Graph(g.n * m, frozenset(edges))


def double_cover(g: Graph) -> Graph:
    return categorical_product(complete_graph(2), g)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = {(u + g.n, v + g.n) for u, v in h.edges}
    return Graph(g.n + h.n, frozenset(g.edges | shifted))


def distances_from(g: Graph, v: int) -> list:
    """Breadth-first distances from ``v``; unreachable vertices get ``None``."""
    dist = [None] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def closed_k_neighborhood_mask(g: Graph, v: int, k: int) -> int:
    """Iterated closed neighborhood ``N^k[v]`` as a bitmask."""
    reach = 1 << v
    for _ in range(k):
        grown = reach
        for u in _bits(reach):
            grown |= g.adj[u]
        if grown == reach:
            break
        reach = grown
    return reach


def closed_k_neighborhood(g: Graph, v: int, k: int) -> frozenset:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if k < 1:
        raise GraphError("k must be positive")
    return frozenset(_bits(closed_k_neighborhood_mask(g, v, k)))


def is_dominating(g: Graph, mask: int) -> bool:
    covered = mask
    for v in _bits(mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def domination_number(g: Graph) -> int:
    """Exact domination number by branch and bound.

    Branches on the lowest undominated vertex: some member of its closed
    neighborhood must be chosen.
    """
    full = (1 << g.n) - 1
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    best = g.n

    def search(covered: int, size: int):
        nonlocal best
        if covered == full:
            best = min(best, size)
            return
        if size + 1 >= best:
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        # largest gain first so good bounds arrive early
        options = sorted(_bits(closed[v]), key=lambda u: -(closed[u] & free).bit_count())
        for u in options:
            search(covered | closed[u], size + 1)

    search(0, 0)
    return best


def is_bipartite(g: Graph):
    """Return a 2-coloring ``(side0, side1)`` or ``None`` for odd cycles."""
    color = [None] * g.n
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] is None:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    assert all((u in side0) != (v in side0) for u, v in g.edges)
    return side0, side1


def is_graph_map(f: VertexMap, g: Graph, h: Graph) -> bool:
    if f.domain != g.n or f.codomain != h.n:
        raise GraphError("vertex map sizes do not match the graphs")
    for x, y in g.edges:
        a, b = f.image[x], f.image[y]
        if a != b and not h.has_edge(a, b):
            return False
    return True


def components(g: Graph) -> list:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.n - len(components(g))


def induced_subgraph(g: Graph, keep: Iterable[int]):
    """Induced subgraph on ``keep``, relabeled densely in ascending order.

    Returns the subgraph and the list mapping new ids to old ids.
    """
    old = sorted(set(keep))
    new = {v: i for i, v in enumerate(old)}
    edges = frozenset((new[u], new[v]) for u, v in g.edges if u in new and v in new)
    return Graph(len(old), edges), old


def relabel(g: Graph, perm) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


def isomorphic_brute_force(g: Graph, h: Graph) -> bool:
    """Isomorphism test by permutation search; intended for ``n <= 8``."""
    from itertools import permutations

    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    for perm in permutations(range(g.n)):
        if relabel(g, perm).edges == h.edges:
            return True
    return False


# ---------------------------------------------------------------------------
# families


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices ``0 - 1 - ... - n-1``."""
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph(n, frozenset((v, v ^ (1 << i)) for v in range(n) for i in range(d)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)`` with a private seeded generator."""
    rng = random.Random(seed)
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if rng.random() < p))


def random_forest(n: int, seed: int, attach: float = 0.8) -> Graph:
    """Random labeled forest: each vertex joins an earlier one with probability ``attach``."""
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        if rng.random() < attach:
            j = rng.randrange(i)
            edges.add((perm[i], perm[j]))
    return Graph(n, frozenset(edges))


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, frozenset(arcs))


def digraph_x1() -> Digraph:
    """Two arcs pointing into the middle vertex: ``0 -> 1 <- 2``."""
    return Digraph(3, frozenset({(0, 1), (2, 1)}))


def digraph_x2() -> Digraph:
    """Left (0) and right (2) vertices each point to top (1) and bottom (3)."""
    return Digraph(4, frozenset({(0, 1), (0, 3), (2, 1), (2, 3)}))


def digraph_x2_window(m: int) -> Digraph:
    """Window ``-2m..2m`` of the integer line with arcs ``2i -> 2i +- 1``.

    Vertex ``j`` of the window is stored as index ``j + 2m``.
    """
    if m < 0:
        raise GraphError("window size must be non-negative")
    lo, hi = -2 * m, 2 * m
    arcs = set()
    for j in range(lo, hi + 1):
        if j % 2 == 0:
            for t in (j - 1, j + 1):
                if lo <= t <= hi:
                    arcs.add((j - lo, t - lo))
    return Digraph(hi - lo + 1, frozenset(arcs))


FAMILIES = {
    "complete": (complete_graph, ("n",)),
    "empty": (empty_graph, ("n",)),
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "hypercube": (hypercube_graph, ("d",)),
    "gnp": (random_graph, ("n", "p", "seed")),
    "forest": (random_forest, ("n", "seed")),
    "random-digraph": (random_digraph, ("n", "p", "seed")),
    "x1": (digraph_x1, ()),
    "x2": (digraph_x2, ()),
    "x2-window": (digraph_x2_window, ("m",)),
}


def generate(family: str, *params, seed: int | None = None):
    """Build a member of a named family.

    Positional ``params`` follow the family's parameter list; random
    families also accept the seed as a keyword.
    """
    try:
        builder, names = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    params = list(params)
    if "seed" in names and seed is not None and len(params) == len(names) - 1:
        params.append(seed)
    if len(params) != len(names):
        raise GraphError(f"family {family!r} takes parameters {names}, got {len(params)}")
    converted = []
    for name, value in zip(names, params):
        if name == "p":
            value = float(value)
            if not 0.0 <= value <= 1.0:
                raise GraphError("edge probability must lie in [0, 1]")
        else:
            value = int(value)
            if value < 0:
                raise GraphError(f"parameter {name} must be non-negative")
        converted.append(value)
    return builder(*converted)


def all_graphs(n: int):
    """Every labeled graph on ``n`` vertices, in edge-subset bit order."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))
