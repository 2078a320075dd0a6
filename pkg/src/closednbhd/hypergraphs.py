"""Hypergraphs built from graph neighborhoods and their independence complexes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, complex_equal, from_masks, minimal_transversals
from .graphs import Graph, GraphError, _bits, domination_number, is_dominating, is_forest

CONTRACTIBLE = "contractible"


@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        canon = set()
        for e in self.hyperedges:
            e = tuple(sorted(set(e)))
            if any(not 0 <= v < self.n for v in e):
                raise GraphError(f"hyperedge {e} out of range for n={self.n}")
            canon.add(e)
        object.__setattr__(self, "hyperedges", frozenset(canon))

    @property
    def masks(self) -> list:
        return [sum(1 << v for v in e) for e in self.hyperedges]

    def sorted_hyperedges(self) -> list:
        return sorted(self.hyperedges, key=lambda e: (len(e), e))


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """Distinct open neighborhoods as hyperedges."""
    return Hypergraph(g.n, frozenset(tuple(_bits(m)) for m in g.adj))


def dominance_hypergraph(g: Graph) -> Hypergraph:
    """Distinct closed neighborhoods as hyperedges."""
    return Hypergraph(g.n, frozenset(tuple(_bits(g.closed_nbhd_mask(v))) for v in range(g.n)))


def independence_complex_hyper(h: Hypergraph) -> SimplicialComplex:
    """Sets containing no hyperedge.

    Facets are the complements of the minimal transversals.  An empty
    hyperedge is contained in every set, so the result is then void.
    """
    full = (1 << h.n) - 1
    transversals = minimal_transversals(h.masks)
    return from_masks(tuple(range(h.n)), [full & ~t for t in transversals])


def dominance_complex_direct(g: Graph) -> SimplicialComplex:
    """Complements of dominating sets, by scanning every vertex subset."""
    full = (1 << g.n) - 1
    dominating = [m for m in range(1 << g.n) if is_dominating(g, m)]
    return from_masks(tuple(range(g.n)), [full & ~m for m in dominating])


def dominance_complex(g: Graph) -> SimplicialComplex:
    """Dominance complex, computed two ways that must agree."""
    via_hyper = independence_complex_hyper(dominance_hypergraph(g))
    direct = dominance_complex_direct(g)
    if not complex_equal(via_hyper, direct):
        raise AssertionError(f"dominance complex routes disagree for {sorted(g.edges)}")
    return via_hyper


@dataclass
class ForestReduction:
    dimension: int | str
    deleted: list
    terminal_edges: list


def forest_reduction(f: Graph) -> ForestReduction:
    """Replay the leaf/suspension reduction on a forest.

    While some component has at least three vertices, take the smallest leaf
    ``v`` in such a component, let ``w`` be the smallest vertex at distance two
    from it (so ``N(v)`` lies in ``N(w)``), delete ``w`` and count one
    suspension.  The terminal forest consists of edges and isolated vertices.
    """
    if not is_forest(f):
        raise GraphError("input is not a forest")
    nbrs = {v: set(f.neighbors[v]) for v in range(f.n)}
    deleted = []
    while True:
        big = set()
        for comp in _components(nbrs):
            if len(comp) >= 3:
                big.update(comp)
        if not big:
            break
        v = min(u for u in big if len(nbrs[u]) == 1)
        (u,) = nbrs[v]
        w = min(x for x in nbrs[u] if x != v)
        for x in nbrs.pop(w):
            nbrs[x].discard(w)
        deleted.append(w)
    if any(not s for s in nbrs.values()):
        return ForestReduction(CONTRACTIBLE, deleted, [])
    terminal = sorted({tuple(sorted((a, b))) for a, s in nbrs.items() for b in s})
    return ForestReduction(len(deleted) - 1, deleted, terminal)


def _components(nbrs: dict) -> list:
    seen = set()
    out = []
    for s in sorted(nbrs):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(comp)
    return out


def forest_sphere_dimension(f: Graph) -> int | str:
    """Sphere dimension of the neighborhood-hypergraph independence complex.

    Returns :data:`CONTRACTIBLE` when the reduction ends at an isolated
    vertex.  A spherical answer is checked against ``ν - 2γ - 1``.
    """
    result = forest_reduction(f)
    if result.dimension != CONTRACTIBLE:
        expected = f.n - 2 * domination_number(f) - 1
        if result.dimension != expected:
            raise AssertionError(
                f"reduction gives S^{result.dimension} but ν - 2γ - 1 = {expected}"
            )
    return result.dimension

