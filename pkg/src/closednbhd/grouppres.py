"""Edge-path group presentations of simplicial complexes.

Generators are numbered from 1; a word is a list of nonzero ints where
``-i`` is the inverse of generator ``i``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass

from .complexes import SimplicialComplex, faces_by_dim
from .graphs import _bits
from .linalg import SparseIntMatrix, smith_normal_form

TRIVIAL = "trivial"
INCONCLUSIVE = "inconclusive"


class PresentationError(ValueError):
    pass


def free_reduce(word) -> list:
    out: list = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word) -> list:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def invert(word) -> list:
    return [-x for x in reversed(word)]


@dataclass(frozen=True)
class GroupPresentation:
    generators: int
    relators: tuple  # tuple of tuples

    def __post_init__(self):
        rels = []
        for r in self.relators:
            r = tuple(r)
            for x in r:
                if x == 0 or abs(x) > self.generators:
                    raise PresentationError(f"relator {r} references a missing generator")
            if list(r) != free_reduce(r):
                raise PresentationError(f"relator {r} is not freely reduced")
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def build(cls, generators: int, relators) -> "GroupPresentation":
        """Freely reduce the relators and drop empty ones."""
        rels = [tuple(free_reduce(r)) for r in relators]
        return cls(generators, tuple(r for r in rels if r))

    def to_json(self) -> dict:
        return {"generators": self.generators, "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data: dict) -> "GroupPresentation":
        return cls(int(data["generators"]), tuple(tuple(r) for r in data["relators"]))

    def describe(self) -> str:
        names = [f"g{i}" for i in range(1, self.generators + 1)]

        def word(r):
            return "".join(f"g{abs(x)}" + ("^-1" if x < 0 else "") for x in r)

        return "< " + ", ".join(names) + " | " + ", ".join(word(r) for r in self.relators) + " >"


def _component(vertices: list, edges: list, base: int) -> set:
    nbrs: dict = {v: [] for v in vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {base}
    stack = [base]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def edge_path_presentation(k: SimplicialComplex, base) -> GroupPresentation:
    """Presentation of the edge-path group of ``k`` at ``base``.

    A breadth-first spanning tree (ascending neighbours) of the 1-skeleton of
    the base component is contracted; each remaining edge ``u < v`` is a
    generator and each triangle contributes the product of its edges.
    """
    if k.void or base not in k.index or not (k.vertex_mask >> k.index[base]) & 1:
        raise PresentationError(f"{base!r} is not a vertex")
    faces = faces_by_dim(k, 2)
    edges = [tuple(_bits(m)) for m in faces.get(1, [])]
    vertices = list(_bits(k.vertex_mask))
    b = k.index[base]
    comp = _component(vertices, edges, b)
    if len(comp) < len(vertices):
        warnings.warn(
            f"ignoring {len(vertices) - len(comp)} vertices outside the component of {base!r}",
            stacklevel=2,
        )
    edges = [e for e in edges if e[0] in comp]
    nbrs: dict = {v: [] for v in comp}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    tree = set()
    seen = {b}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for y in sorted(nbrs[x]):
            if y not in seen:
                seen.add(y)
                tree.add((min(x, y), max(x, y)))
                queue.append(y)
    gens = {e: i + 1 for i, e in enumerate(sorted(e for e in edges if e not in tree))}

    def step(a, c):
        if a < c:
            g = gens.get((a, c))
            return [g] if g else []
        g = gens.get((c, a))
        return [-g] if g else []

    relators = []
    for m in faces.get(2, []):
        a, bb, c = _bits(m)
        if a not in comp:
            continue
        relators.append(step(a, bb) + step(bb, c) + step(c, a))
    return GroupPresentation.build(len(gens), relators)


def abelianization_invariants(p: GroupPresentation) -> tuple:
    """``(free rank, torsion factors)`` of the abelianized group."""
    entries: dict = {}
    for i, r in enumerate(p.relators):
        for x in r:
            key = (i, abs(x) - 1)
            entries[key] = entries.get(key, 0) + (1 if x > 0 else -1)
    m = SparseIntMatrix._trusted(
        len(p.relators), p.generators, [(r, c, v) for (r, c), v in entries.items() if v]
    )
    factors = smith_normal_form(m)
    return p.generators - len(factors), tuple(f for f in factors if f > 1)


def _substitute(word, g: int, value: list) -> list:
    out = []
    inv = invert(value)
    for x in word:
        if x == g:
            out.extend(value)
        elif x == -g:
            out.extend(inv)
        else:
            out.append(x)
    return cyclic_reduce(out)


def tietze_simplify(p: GroupPresentation, budget: int = 10**5) -> tuple:
    """Simplify ``p`` by generator elimination; returns ``(presentation, certificate)``.

    A generator ``g`` occurring exactly once in a relator ``g·w`` (after
    rotation) is replaced by ``w^{-1}`` everywhere.  Substitutions that would
    produce a relator longer than four times the longest original relator
    are skipped.  The certificate is ``"trivial"`` only when no generator
    remains; otherwise it is ``"inconclusive"``.
    """
    if budget < 0:
        raise PresentationError("budget must be non-negative")
    cap = 4 * max([len(r) for r in p.relators] + [1])
    alive = set(range(1, p.generators + 1))
    rels = {tuple(cyclic_reduce(r)) for r in p.relators}
    rels.discard(())
    steps = 0
    while alive and steps < budget:
        done = False
        for r in sorted(rels, key=lambda r: (len(r), r)):
            counts: dict = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g in sorted(a for a, c in counts.items() if c == 1):
                i = next(j for j, x in enumerate(r) if abs(x) == g)
                rot = list(r[i:] + r[:i])
                # rot = g^e · w, so g^e = w^{-1}
                value = invert(rot[1:]) if rot[0] == g else rot[1:]
                new = set()
                ok = True
                for other in rels:
                    if other == r:
                        continue
                    s = _substitute(other, g, value)
                    if len(s) > cap:
                        ok = False
                        break
                    if s:
                        new.add(tuple(s))
                steps += 1
                if ok:
                    rels = new
                    alive.discard(g)
                    done = True
                    break
                if steps >= budget:
                    break
            if done or steps >= budget:
                break
        if not done:
            break
    order = {g: i + 1 for i, g in enumerate(sorted(alive))}
    renamed = [[order[abs(x)] * (1 if x > 0 else -1) for x in r] for r in sorted(rels)]
    result = GroupPresentation.build(len(alive), renamed)
    return result, TRIVIAL if not alive else INCONCLUSIVE
