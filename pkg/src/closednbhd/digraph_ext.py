"""Right and left closed k-neighborhood complexes of digraphs."""

from __future__ import annotations

from .complexes import ComplexError, SimplicialComplex, from_masks
from .graphs import Digraph, _bits


def _reach_mask(step: tuple, v: int, k: int) -> int:
    if k < 1:
        raise ComplexError("k must be positive")
    reach = 1 << v
    for _ in range(k):
        new = reach
        for w in _bits(reach):
            new |= step[w]
        if new == reach:
            break
        reach = new
    return reach


def right_closed_k_neighborhood(x: Digraph, v: int, k: int) -> frozenset:
    """Vertices reachable from ``v`` along at most ``k`` arcs, including ``v``."""
    return frozenset(_bits(_reach_mask(x.out_adj, v, k)))


def left_closed_k_neighborhood(x: Digraph, v: int, k: int) -> frozenset:
    """Vertices reaching ``v`` along at most ``k`` arcs, including ``v``."""
    return frozenset(_bits(_reach_mask(x.in_adj, v, k)))


def right_closed_nbhd_complex(x: Digraph, k: int = 1) -> SimplicialComplex:
    if x.n == 0:
        return SimplicialComplex.void_complex(())
    return from_masks(tuple(range(x.n)), [_reach_mask(x.out_adj, v, k) for v in range(x.n)])


def left_closed_nbhd_complex(x: Digraph, k: int = 1) -> SimplicialComplex:
    if x.n == 0:
        return SimplicialComplex.void_complex(())
    return from_masks(tuple(range(x.n)), [_reach_mask(x.in_adj, v, k) for v in range(x.n)])
