"""Reduced simplicial homology over Z, Q and GF(p).

Chain groups run from dimension -1 (the empty simplex) upward, with
``∂_0`` the augmentation.  Reduced Betti numbers therefore come out of the
same rank formula in every dimension, and ``{∅}`` has ``H̃_{-1} = Z``.

Two exact shortcuts keep large complexes tractable: a cone has zero reduced
homology, and a join splits into factors whose homology is recombined by
the Künneth formula for joins.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .complexes import (
    SimplicialComplex,
    faces_by_dim,
    is_cone,
    minimal_nonfaces_masks,
    restriction,
    simplex_count_bound,
)
from .graphs import _bits
from .linalg import (
    SparseIntMatrix,
    normalize_factors,
    rank_gf2_dense,
    rank_mod_p,
    rank_rational,
    smith_normal_form,
)

# complexes with more potential simplices than this are checked for a join splitting
JOIN_SPLIT_THRESHOLD = 4000


class HomologyError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HomologyResult:
    """Reduced homology; ``groups`` lists only the nonzero dimensions."""

    groups: tuple  # ((dim, betti, torsion), ...) sorted by dim
    top: int = -1

    @classmethod
    def build(cls, table: dict, top: int = -1) -> "HomologyResult":
        groups = []
        for d in sorted(table):
            betti, torsion = table[d]
            torsion = tuple(t for t in normalize_factors(torsion) if t > 1)
            if betti or torsion:
                groups.append((d, betti, torsion))
        top = max([top] + [g[0] for g in groups])
        return cls(tuple(groups), top)

    @classmethod
    def zero(cls, top: int = -1) -> "HomologyResult":
        return cls((), top)

    def betti(self, d: int) -> int:
        for dim, b, _ in self.groups:
            if dim == d:
                return b
        return 0

    def torsion(self, d: int) -> tuple:
        for dim, _, t in self.groups:
            if dim == d:
                return t
        return ()

    def is_zero(self) -> bool:
        return not self.groups

    def shift(self, s: int) -> "HomologyResult":
        return HomologyResult(tuple((d + s, b, t) for d, b, t in self.groups), self.top + s)

    def betti_list(self) -> list:
        """Betti numbers for dimensions ``-1 .. top`` (index 0 is dimension -1)."""
        return [self.betti(d) for d in range(-1, self.top + 1)]

    def __eq__(self, other):
        if not isinstance(other, HomologyResult):
            return NotImplemented
        return self.groups == other.groups

    def __hash__(self):
        return hash(self.groups)

    def __repr__(self):
        if not self.groups:
            return "HomologyResult(0)"
        parts = []
        for d, b, t in self.groups:
            pieces = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{x}" for x in t]
            parts.append(f"H{d}=" + "+".join(pieces))
        return "HomologyResult(" + ", ".join(parts) + ")"

    def to_json(self) -> dict:
        dims = {}
        for d in range(-1, self.top + 1):
            dims[str(d)] = {"betti": self.betti(d), "torsion": list(self.torsion(d))}
        return {"dims": dims}

    @classmethod
    def from_json(cls, data: dict) -> "HomologyResult":
        table = {int(d): (v["betti"], tuple(v["torsion"])) for d, v in data["dims"].items()}
        top = max(table) if table else -1
        return cls.build(table, top)

    def table(self) -> str:
        lines = ["dim  betti  torsion"]
        for d in range(-1, self.top + 1):
            tors = ",".join(str(t) for t in self.torsion(d)) or "-"
            lines.append(f"{d:>3}  {self.betti(d):>5}  {tors}")
        return "\n".join(lines)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise HomologyError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().upper()
        if text in ("Q", "QQ", "RATIONALS"):
            return cls(None)
        return cls(int(text.removeprefix("F").removeprefix("GF")))

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


QQ = FieldSpec(None)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


# ---------------------------------------------------------------------------
# boundary operators


def _boundaries(faces: dict) -> dict:
    """``∂_d`` for each ``d >= 0`` as SparseIntMatrix, from canonical face lists."""
    out = {}
    for d in sorted(faces):
        if d < 0:
            continue
        lower = {m: i for i, m in enumerate(faces[d - 1])}
        entries = []
        for j, m in enumerate(faces[d]):
            for i, v in enumerate(_bits(m)):
                entries.append((lower[m ^ (1 << v)], j, -1 if i & 1 else 1))
        out[d] = SparseIntMatrix._trusted(len(faces[d - 1]), len(faces[d]), entries)
    return out


def boundary_matrices(k: SimplicialComplex, max_dim: int | None = None, check: bool = True) -> list:
    """Boundary operators ``[∂_0, ∂_1, ...]``; ``∂_0`` is the all-ones augmentation.

    The void complex has no chains and yields an empty list.
    """
    if k.void:
        return []
    faces = faces_by_dim(k, None if max_dim is None else max_dim)
    bd = _boundaries(faces)
    mats = [bd[d] for d in sorted(bd)]
    if check:
        for lo, hi in zip(mats, mats[1:]):
            if not lo.matmul(hi).is_zero():
                raise AssertionError("boundary of boundary is nonzero")
    return mats


# ---------------------------------------------------------------------------
# join splitting and Künneth


def join_factors(k: SimplicialComplex) -> list:
    """Vertex blocks of the finest join decomposition of ``k``.

    The minimal non-faces of a join are the union of those of its factors,
    so the blocks are the connected pieces of the minimal non-faces over the
    vertex set.
    """
    verts = k.vertex_mask
    parent = {v: v for v in _bits(verts)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in minimal_nonfaces_masks(k):
        if m & ~verts:
            continue  # contains a non-vertex; irrelevant to the simplices
        members = list(_bits(m))
        for a in members[1:]:
            ra, rb = find(members[0]), find(a)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict = {}
    for v in parent:
        blocks.setdefault(find(v), []).append(v)
    return [tuple(k.ground[i] for i in b) for b in sorted(blocks.values())]


def _tensor(a: tuple, b: tuple) -> tuple:
    (fa, ta), (fb, tb) = a, b
    torsion = list(ta) * fb + list(tb) * fa
    torsion += [gcd(s, t) for s in ta for t in tb]
    return fa * fb, torsion


def _tor(a: tuple, b: tuple) -> list:
    return [gcd(s, t) for s in a[1] for t in b[1]]


def join_homology(h1: HomologyResult, h2: HomologyResult) -> HomologyResult:
    """Künneth formula for joins: ``H̃_{n+1}(K*L) = ⊕ H̃_i⊗H̃_j ⊕ ⊕ Tor(H̃_i, H̃_j)``."""
    table: dict = {}
    for d1, b1, t1 in h1.groups:
        for d2, b2, t2 in h2.groups:
            free, tors = _tensor((b1, t1), (b2, t2))
            slot = table.setdefault(d1 + d2 + 1, [0, []])
            slot[0] += free
            slot[1] += tors
            tor = _tor((b1, t1), (b2, t2))
            if tor:
                slot = table.setdefault(d1 + d2 + 2, [0, []])
                slot[1] += tor
    return HomologyResult.build({d: (v[0], tuple(v[1])) for d, v in table.items()}, h1.top + h2.top + 1)


def _join_betti(b1: dict, b2: dict) -> dict:
    out: dict = {}
    for d1, x in b1.items():
        for d2, y in b2.items():
            if x and y:
                out[d1 + d2 + 1] = out.get(d1 + d2 + 1, 0) + x * y
    return out


def _split(k: SimplicialComplex, shortcuts: bool):
    """Return ``"zero"``, a list of join factors, or ``None`` for direct computation."""
    if not shortcuts:
        return None
    if k.void or is_cone(k):
        return "zero"
    if simplex_count_bound(k) > JOIN_SPLIT_THRESHOLD:
        blocks = join_factors(k)
        if len(blocks) > 1:
            return [restriction(k, b) for b in blocks]
    return None


# ---------------------------------------------------------------------------
# homology


def reduced_homology_z(k: SimplicialComplex, shortcuts: bool = True) -> HomologyResult:
    """Reduced integral homology with torsion, dimensions ``-1 .. dim k``."""
    top = max(k.dim, -1)
    split = _split(k, shortcuts)
    if split == "zero":
        return HomologyResult.zero(top)
    if split is not None:
        result = reduced_homology_z(split[0], shortcuts)
        for factor in split[1:]:
            result = join_homology(result, reduced_homology_z(factor, shortcuts))
        return HomologyResult(result.groups, max(result.top, top))
    faces = faces_by_dim(k)
    bd = _boundaries(faces)
    factors = {d: smith_normal_form(m) for d, m in bd.items()}
    table = {}
    for d in faces:
        rank_out = len(factors.get(d, ()))
        rank_in = len(factors.get(d + 1, ()))
        betti = len(faces[d]) - rank_out - rank_in
        torsion = tuple(t for t in factors.get(d + 1, ()) if t > 1)
        table[d] = (betti, torsion)
    return HomologyResult.build(table, top)


def _rank(m: SparseIntMatrix, field: FieldSpec) -> int:
    if field.p is None:
        return rank_rational(m)
    return rank_mod_p(m, field.p)


def _betti_field(k: SimplicialComplex, field: FieldSpec, shortcuts: bool) -> dict:
    split = _split(k, shortcuts)
    if split == "zero":
        return {}
    if split is not None:
        acc = _betti_field(split[0], field, shortcuts)
        for factor in split[1:]:
            acc = _join_betti(acc, _betti_field(factor, field, shortcuts))
        return acc
    faces = faces_by_dim(k)
    bd = _boundaries(faces)
    ranks = {d: _rank(m, field) for d, m in bd.items()}
    return {d: len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in faces}


def betti_over_field(k: SimplicialComplex, field: FieldSpec = QQ, shortcuts: bool = True) -> list:
    """Reduced Betti numbers over a field for dimensions ``-1 .. dim k``.

    Index ``i`` of the returned list is dimension ``i - 1``.
    """
    top = max(k.dim, -1)
    betti = _betti_field(k, field, shortcuts)
    top = max([top] + [d for d, b in betti.items() if b])
    return [betti.get(d, 0) for d in range(-1, top + 1)]


def brute_force_homology_gf2(k: SimplicialComplex, bound: int = 2000) -> list:
    """GF(2) reduced Betti numbers by dense elimination, independent of the sparse engine.

    Simplices are re-enumerated from the facets as sorted tuples, and each
    boundary column is a Python int bitset.  Index ``i`` is dimension ``i - 1``.
    """
    if k.void:
        return [0]
    simplices: dict = {}
    for facet in k.facets:
        for size in range(len(facet) + 1):
            for s in combinations(facet, size):
                simplices.setdefault(size - 1, set()).add(s)
    total = sum(len(v) for v in simplices.values())
    if total > bound:
        raise HomologyError(f"{total} simplices exceed the oracle bound {bound}")
    top = max(simplices)
    ordered = {d: sorted(simplices[d]) for d in simplices}
    position = {d: {s: i for i, s in enumerate(ordered[d])} for d in ordered}
    ranks = {}
    for d in range(0, top + 1):
        cols = []
        for s in ordered[d]:
            v = 0
            for i in range(len(s)):
                v ^= 1 << position[d - 1][s[:i] + s[i + 1:]]
            cols.append(v)
        ranks[d] = rank_gf2_dense(cols)
    return [
        len(ordered[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(-1, top + 1)
    ]
