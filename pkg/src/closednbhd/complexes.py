"""Simplicial complexes stored as facet antichains over an explicit ground set.

A complex either contains the empty simplex (every ordinary complex, and
``{∅}`` itself) or is *void* and has no simplices at all.  The void value
exists so that the Alexander dual of a full simplex is representable.

Internally facets are handled as bitmasks over ground positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .graphs import Graph, _bits, closed_k_neighborhood_mask, complement


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    ground: tuple
    facets: tuple
    void: bool = False

    def __post_init__(self):
        ground = tuple(sorted(set(self.ground)))
        if len(ground) != len(self.ground):
            raise ComplexError("ground elements must be distinct")
        object.__setattr__(self, "ground", ground)
        if self.void:
            if self.facets:
                raise ComplexError("a void complex has no facets")
            return
        if not self.facets:
            raise ComplexError("non-void complex needs at least one facet (use [()] for {∅})")
        members = set(ground)
        canon = sorted({tuple(sorted(f)) for f in self.facets})
        for f in canon:
            if not members.issuperset(f):
                raise ComplexError(f"facet {f} leaves the ground set")
        sets = [frozenset(f) for f in canon]
        for a in sets:
            for b in sets:
                if a < b:
                    raise ComplexError(f"facets not an antichain: {sorted(a)} < {sorted(b)}")
        object.__setattr__(self, "facets", tuple(canon))

    @classmethod
    def _trusted(cls, ground: tuple, facets: tuple) -> "SimplicialComplex":
        # skips validation; callers pass a sorted ground and a canonical antichain
        obj = object.__new__(cls)
        object.__setattr__(obj, "ground", ground)
        object.__setattr__(obj, "facets", facets)
        object.__setattr__(obj, "void", False)
        return obj

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_simplices(cls, ground: Iterable, simplices: Iterable) -> "SimplicialComplex":
        """Complex generated by ``simplices``; keeps the maximal ones."""
        ground = tuple(sorted(set(ground)))
        index = {x: i for i, x in enumerate(ground)}
        masks = []
        for s in simplices:
            m = 0
            for x in s:
                try:
                    m |= 1 << index[x]
                except KeyError:
                    raise ComplexError(f"element {x!r} not in ground") from None
            masks.append(m)
        return from_masks(ground, masks)

    @classmethod
    def void_complex(cls, ground: Iterable = ()) -> "SimplicialComplex":
        return cls(tuple(ground), (), void=True)

    @classmethod
    def empty_complex(cls, ground: Iterable = ()) -> "SimplicialComplex":
        """The complex ``{∅}``, i.e. the (-1)-sphere."""
        return cls(tuple(ground), ((),))

    @classmethod
    def full_simplex(cls, ground: Iterable) -> "SimplicialComplex":
        ground = tuple(ground)
        return cls(ground, (tuple(ground),))

    # -- derived data ---------------------------------------------------------

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.ground)}

    @cached_property
    def masks(self) -> tuple:
        idx = self.index
        out = []
        for f in self.facets:
            m = 0
            for x in f:
                m |= 1 << idx[x]
            out.append(m)
        return tuple(out)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.masks:
            m |= f
        return m

    @property
    def vertices(self) -> tuple:
        return tuple(self.ground[i] for i in _bits(self.vertex_mask))

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and ``-2`` for the void complex."""
        if self.void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def to_set(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in _bits(mask))

    def to_mask(self, simplex: Iterable) -> int:
        m = 0
        for x in simplex:
            m |= 1 << self.index[x]
        return m

    def __contains__(self, simplex) -> bool:
        if self.void:
            return False
        try:
            m = self.to_mask(simplex)
        except KeyError:
            return False
        return any(m & f == m for f in self.masks)

    def __repr__(self):
        if self.void:
            return f"SimplicialComplex(void, ground={list(self.ground)})"
        return f"SimplicialComplex(ground={list(self.ground)}, facets={[list(f) for f in self.facets]})"


def maximal_masks(masks: Iterable[int]) -> list:
    """Inclusion-maximal members of a family of bitmasks (deduplicated)."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def from_masks(ground: tuple, masks: Iterable[int]) -> SimplicialComplex:
    masks = list(masks)
    if not masks:
        return SimplicialComplex.void_complex(ground)
    ground = tuple(ground)
    kept = maximal_masks(masks)
    facets = tuple(sorted(tuple(ground[i] for i in _bits(m)) for m in kept))
    return SimplicialComplex._trusted(ground, facets)


def _check(k: SimplicialComplex) -> SimplicialComplex:
    # the dataclass validates the antichain; this keeps the contract visible at call sites
    assert k.void or len(set(k.masks)) == len(k.masks)
    return k


# ---------------------------------------------------------------------------
# simplex enumeration


def faces_by_dim(k: SimplicialComplex, max_dim: int | None = None) -> dict:
    """All simplices as bitmasks, keyed by dimension (``-1`` holds ∅).

    Each dimension's list is sorted in canonical order (lexicographic on the
    sorted index tuple), which fixes the basis of the chain groups.
    """
    if k.void:
        return {}
    found: dict = {}
    for f in k.masks:
        verts = list(_bits(f))
        top = len(verts) - 1 if max_dim is None else min(len(verts) - 1, max_dim)
        for d in range(-1, top + 1):
            bucket = found.setdefault(d, set())
            for combo in combinations(verts, d + 1):
                m = 0
                for v in combo:
                    m |= 1 << v
                bucket.add(m)
    return {d: sorted(s, key=lambda m: list(_bits(m))) for d, s in sorted(found.items())}


def f_vector(k: SimplicialComplex) -> list:
    """Simplex counts ``[f_0, f_1, ...]`` (the empty simplex is not counted)."""
    faces = faces_by_dim(k)
    return [len(faces[d]) for d in sorted(faces) if d >= 0]


def euler_characteristic(k: SimplicialComplex, reduced: bool = True) -> int:
    if k.void:
        return 0
    chi = sum((-1) ** d * n for d, n in enumerate(f_vector(k)))
    return chi - 1 if reduced else chi


def simplex_count(k: SimplicialComplex) -> int:
    """Number of nonempty simplices, by inclusion-exclusion-free enumeration."""
    return sum(f_vector(k))


def simplex_count_bound(k: SimplicialComplex) -> int:
    """Cheap upper bound on the number of simplices (including ∅)."""
    return sum(1 << f.bit_count() for f in k.masks)


# ---------------------------------------------------------------------------
# minimal non-faces and duality


def minimal_transversals(edges: Iterable[int]) -> list:
    """Minimal hitting sets of a family of bitmasks (Berge's algorithm).

    An empty member cannot be hit, giving no transversals at all.
    """
    edges = sorted(set(edges), key=lambda m: m.bit_count())
    current = [0]
    for e in edges:
        if e == 0:
            return []
        hit = [t for t in current if t & e]
        miss = [t for t in current if not t & e]
        if not miss:
            continue
        cand = set(hit)
        for t in miss:
            for v in _bits(e):
                cand.add(t | (1 << v))
        # keep only minimal candidates; hits from the previous round stay minimal
        ordered = sorted(cand, key=lambda m: m.bit_count())
        kept = []
        for m in ordered:
            if not any(s & m == s for s in kept):
                kept.append(m)
        current = kept
    return current


def minimal_nonfaces_masks(k: SimplicialComplex) -> list:
    full = (1 << len(k.ground)) - 1
    if k.void:
        return [0]
    # σ is a non-face iff it meets the complement of every facet
    return minimal_transversals(full & ~f for f in k.masks)


def minimal_nonfaces(k: SimplicialComplex) -> list:
    out = [k.to_set(m) for m in minimal_nonfaces_masks(k)]
    return sorted(out, key=lambda s: (len(s), s))


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual over the same ground set."""
    full = (1 << len(k.ground)) - 1
    nonfaces = minimal_nonfaces_masks(k)
    return _check(from_masks(k.ground, [full & ~m for m in nonfaces]))


# ---------------------------------------------------------------------------
# structural operations


def complex_equal(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    return a.ground == b.ground and a.void == b.void and a.facets == b.facets


def is_subcomplex(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Every simplex of ``a`` is a simplex of ``b`` (grounds may differ)."""
    if a.void:
        return True
    return all(f in b for f in a.facets)


def is_cone(k: SimplicialComplex) -> bool:
    """Some vertex lies in every facet."""
    if k.void:
        return False
    common = k.masks[0]
    for f in k.masks[1:]:
        common &= f
    return common != 0


def relabeled(k: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    ground = tuple(sorted(mapping[x] for x in k.ground))
    if len(set(ground)) != len(ground):
        raise ComplexError("relabeling must be injective")
    if k.void:
        return SimplicialComplex.void_complex(ground)
    facets = tuple(sorted(tuple(sorted(mapping[x] for x in f)) for f in k.facets))
    return SimplicialComplex._trusted(ground, facets)


def shift(k: SimplicialComplex, offset: int) -> SimplicialComplex:
    return relabeled(k, {x: x + offset for x in k.ground})


def join(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """Join; ``l`` is shifted past ``k``'s ground when the grounds overlap.

    The void complex is a unit for the join here, so ``join(void, L) = L``.
    """
    if set(k.ground) & set(l.ground):
        l = shift(l, max(k.ground) + 1 - min(l.ground))
    ground = tuple(sorted(set(k.ground) | set(l.ground)))
    if k.void and l.void:
        return SimplicialComplex.void_complex(ground)
    if k.void:
        return SimplicialComplex._trusted(ground, l.facets)
    if l.void:
        return SimplicialComplex._trusted(ground, k.facets)
    # products of facets over disjoint grounds already form an antichain
    facets = tuple(sorted(tuple(sorted(a + b)) for a in k.facets for b in l.facets))
    return _check(SimplicialComplex._trusted(ground, facets))


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    """Join with two fresh points (``S^0``)."""
    top = max(k.ground) + 1 if k.ground else 0
    sphere0 = SimplicialComplex((top, top + 1), ((top,), (top + 1,)))
    return join(k, sphere0)


def deletion(k: SimplicialComplex, v) -> SimplicialComplex:
    if v not in k.vertices:
        raise ComplexError(f"{v!r} is not a vertex")
    ground = tuple(x for x in k.ground if x != v)
    return SimplicialComplex.from_simplices(ground, [tuple(x for x in f if x != v) for f in k.facets])


def link(k: SimplicialComplex, v) -> SimplicialComplex:
    if v not in k.vertices:
        raise ComplexError(f"{v!r} is not a vertex")
    ground = tuple(x for x in k.ground if x != v)
    return SimplicialComplex.from_simplices(
        ground, [tuple(x for x in f if x != v) for f in k.facets if v in f]
    )


def restriction(k: SimplicialComplex, subset: Iterable) -> SimplicialComplex:
    """Induced subcomplex on ``subset`` (which becomes the ground set)."""
    keep = tuple(sorted(set(subset)))
    if k.void:
        return SimplicialComplex.void_complex(keep)
    sub = k.to_mask(keep)
    return SimplicialComplex.from_simplices(keep, [k.to_set(f & sub) for f in k.masks])


def one_skeleton_components(k: SimplicialComplex) -> list:
    """Vertex sets of the connected components, as sorted tuples."""
    verts = list(k.vertices)
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in k.facets:
        for a, b in zip(f, f[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


# ---------------------------------------------------------------------------
# graph complexes


def maximal_cliques_masks(adj: tuple) -> list:
    """Maximal cliques of a graph given by neighbor bitmasks (Bron-Kerbosch with pivot)."""
    n = len(adj)
    out = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def _ground(g: Graph) -> tuple:
    return tuple(range(g.n))


def closed_neighborhood_complex(g: Graph, k: int = 1) -> SimplicialComplex:
    """Sets contained in some closed ``k``-neighborhood; ``k = 1`` is the usual one."""
    if k < 1:
        raise ComplexError("k must be positive")
    if g.n == 0:
        return SimplicialComplex.void_complex(())
    masks = [closed_k_neighborhood_mask(g, v, k) for v in range(g.n)]
    return _check(from_masks(_ground(g), masks))


def open_neighborhood_complex(g: Graph) -> SimplicialComplex:
    """Sets contained in some open neighborhood.

    With no vertices there are no neighborhoods and the result is void; an
    edgeless graph with vertices gives ``{∅}`` since ∅ lies in every ``N(v)``.
    """
    if g.n == 0:
        return SimplicialComplex.void_complex(())
    return _check(from_masks(_ground(g), list(g.adj)))


def clique_complex(g: Graph) -> SimplicialComplex:
    return _check(from_masks(_ground(g), maximal_cliques_masks(g.adj)))


def independence_complex(g: Graph) -> SimplicialComplex:
    full = (1 << g.n) - 1
    co_adj = tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n))
    return _check(from_masks(_ground(g), maximal_cliques_masks(co_adj)))


def nagel_reiner_pair(ground_x: Iterable, ground_y: Iterable, phi: dict):
    """The complex generated by the sets ``phi(y)`` and the non-incidence graph.

    ``X`` elements become graph vertices ``0..|X|-1`` in sorted order and
    ``Y`` elements follow.  With ``Y`` empty the complex is void and its
    suspension is ``S^0``, but the graph is edgeless on ``X`` so its
    independence complex is a simplex; the homotopy equivalence needs both
    sides nonempty.

    Returns ``(K, H, labels)`` where ``labels[i]`` names graph vertex ``i``.
    """
    xs = sorted(set(ground_x))
    ys = sorted(set(ground_y))
    if set(phi) != set(ys):
        raise ComplexError("phi must be defined exactly on ground_y")
    K = SimplicialComplex.from_simplices(xs, [tuple(phi[y]) for y in ys])
    xi = {x: i for i, x in enumerate(xs)}
    edges = set()
    for j, y in enumerate(ys):
        image = set(phi[y])
        if not image <= set(xs):
            raise ComplexError(f"phi({y!r}) leaves ground_x")
        for x in xs:
            if x not in image:
                edges.add((xi[x], len(xs) + j))
    H = Graph(len(xs) + len(ys), frozenset(edges))
    labels = [("x", x) for x in xs] + [("y", y) for y in ys]
    return K, H, labels


def complement_nbhd_pair(g: Graph):
    """The pair built from ``phi(y) = N[y]`` in the complement of ``g``."""
    gbar = complement(g)
    phi = {v: tuple(_bits(gbar.closed_nbhd_mask(v))) for v in range(g.n)}
    K, H, _ = nagel_reiner_pair(range(g.n), range(g.n), phi)
    return K, H
