"""Closed k-homotopy of graph paths and the Γ_k move calculus on digraphs.

Graph paths are tuples of vertex ids where consecutive entries are equal or
adjacent.  Two relations generate ``≃_k`` on paths with fixed endpoints:

* (A): insert or delete one stationary repeat;
* (B)_k: rewrite the at most ``k - 1`` positions strictly between ``i0`` and
  ``i0 + k`` (clipped at the end of the path).

Equivalence is only ever claimed with a replayed witness.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import count

from .graphs import Digraph, Graph, closed_k_neighborhood_mask, distances_from

EQUIVALENT = "equivalent"
INCONCLUSIVE = "inconclusive"


class PathError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graph paths


def is_graph_path(g: Graph, p) -> bool:
    if not p:
        return False
    if any(not 0 <= v < g.n for v in p):
        return False
    return all(a == b or g.has_edge(a, b) for a, b in zip(p, p[1:]))


def _check_path(g: Graph, p) -> tuple:
    p = tuple(p)
    if not is_graph_path(g, p):
        raise PathError(f"{p} is not a path in the graph")
    return p


def _segments(g: Graph, start: int, end: int, length: int) -> list:
    """All walks with stationary steps of exactly ``length`` steps from start to end."""
    if length == 0:
        return [(start,)] if start == end else []
    dist = distances_from(g, end)
    out = []

    def extend(prefix):
        x = prefix[-1]
        left = length - (len(prefix) - 1)
        if left == 0:
            if x == end:
                out.append(tuple(prefix))
            return
        for y in (x,) + g.neighbors[x]:
            d = dist[y]
            if d is not None and d <= left - 1:
                prefix.append(y)
                extend(prefix)
                prefix.pop()

    if dist[start] is not None and dist[start] <= length:
        extend([start])
    return out


def moves_graph(g: Graph, p, k: int) -> list:
    """All paths one (A) or (B)_k move away from ``p``; endpoints never change."""
    if k < 2:
        raise PathError("k must be at least 2")
    p = _check_path(g, p)
    n = len(p) - 1
    out = set()
    for x in range(n + 1):
        out.add(p[:x + 1] + p[x:])
    for x in range(n):
        if p[x] == p[x + 1]:
            out.add(p[:x] + p[x + 1:])
    for i0 in range(n - 1):
        j = min(i0 + k, n)
        for seg in _segments(g, p[i0], p[j], j - i0):
            out.add(p[:i0] + seg + p[j + 1:])
    out.discard(p)
    return sorted(out, key=lambda q: (len(q), q))


def check_relation(p, q, k: int):
    """Which generating relation links ``p`` and ``q`` directly: "A", "B" or None.

    Only the literal index conditions are checked; the caller checks that both
    are paths in the graph.
    """
    p, q = tuple(p), tuple(q)
    if len(q) == len(p) + 1 or len(p) == len(q) + 1:
        short, long_ = (p, q) if len(p) < len(q) else (q, p)
        for x in range(len(short)):
            if short[:x + 1] == long_[:x + 1] and short[x:] == long_[x + 1:]:
                return "A"
        return None
    if len(p) == len(q) and p[0] == q[0] and p[-1] == q[-1]:
        diff = [i for i in range(len(p)) if p[i] != q[i]]
        if not diff:
            return None
        # positions strictly inside (i0, i0 + k)
        if diff[-1] - diff[0] <= k - 2:
            return "B"
    return None


def validate_witness(g: Graph, chain: list, k: int) -> bool:
    return all(is_graph_path(g, p) for p in chain) and all(
        check_relation(a, b, k) is not None for a, b in zip(chain, chain[1:])
    )


@dataclass
class SearchResult:
    status: str
    witness: list | None = None  # chain of paths from a to b
    states: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == EQUIVALENT

    def moves(self, k: int) -> list:
        if not self.witness:
            return []
        return [
            {"relation": check_relation(a, b, k), "path": list(b)}
            for a, b in zip(self.witness, self.witness[1:])
        ]


def _mismatch(s: tuple, t: tuple) -> int:
    m = min(len(s), len(t))
    front = sum(1 for i in range(m) if s[i] != t[i])
    back = sum(1 for i in range(1, m + 1) if s[-i] != t[-i])
    return abs(len(s) - len(t)) + min(front, back)


def bounded_equivalence_graph(
    g: Graph, a, b, k: int, max_len: int = 12, max_states: int = 20000
) -> SearchResult:
    """Bounded search for a chain of (A)/(B)_k moves from ``a`` to ``b``.

    Both ends are expanded alternately; each side pops the state that looks
    closest to the opposite root (position mismatch), ties by depth.  Only
    paths of at most ``max_len`` steps are visited and at most ``max_states``
    states in total.  A found chain is replayed before it is returned.
    """
    a, b = _check_path(g, a), _check_path(g, b)
    if a[0] != b[0] or a[-1] != b[-1]:
        raise PathError("paths must share endpoints")
    if a == b:
        return SearchResult(EQUIVALENT, [a], 1)
    roots = (a, b)
    parents = ({a: None}, {b: None})
    tie = count()
    heaps = ([(_mismatch(a, b), 0, next(tie), a)], [(_mismatch(b, a), 0, next(tie), b)])
    states = 2
    meet = None
    while (heaps[0] or heaps[1]) and meet is None and states < max_states:
        side = 0 if heaps[0] and (not heaps[1] or len(heaps[0]) <= len(heaps[1])) else 1
        _, depth, _, s = heapq.heappop(heaps[side])
        for t in moves_graph(g, s, k):
            if len(t) - 1 > max_len or t in parents[side]:
                continue
            parents[side][t] = s
            states += 1
            if t in parents[1 - side]:
                meet = t
                break
            heapq.heappush(heaps[side], (_mismatch(t, roots[1 - side]), depth + 1, next(tie), t))
    if meet is None:
        return SearchResult(INCONCLUSIVE, None, states)
    left = []
    x = meet
    while x is not None:
        left.append(x)
        x = parents[0][x]
    left.reverse()
    x = parents[1][meet]
    while x is not None:
        left.append(x)
        x = parents[1][x]
    if left[0] != a or left[-1] != b or not validate_witness(g, left, k):
        raise AssertionError("search produced an invalid witness")
    return SearchResult(EQUIVALENT, left, states)


# ---------------------------------------------------------------------------
# the maps between edge-paths of N^k[G] and graph paths


def _bfs_path(g: Graph, s: int, t: int) -> list:
    parent = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in g.neighbors[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if t not in parent:
        raise PathError(f"no path from {s} to {t}")
    out = []
    x = t
    while x is not None:
        out.append(x)
        x = parent[x]
    return out[::-1]


def nbhd_witnesses(g: Graph, u: int, v: int, k: int) -> list:
    """Vertices ``w`` with ``u, v`` in ``N^k[w]``."""
    return [w for w in range(g.n) if (closed_k_neighborhood_mask(g, w, k) >> u) & 1
            and (closed_k_neighborhood_mask(g, w, k) >> v) & 1]


def phi_map(g: Graph, edge_path, k: int, policy: str = "min") -> tuple:
    """Send an edge-path of ``N^k[G]`` to a graph path of length ``2k`` per step.

    For each step the witness ``w`` is the smallest (``policy="min"``) or
    largest (``"max"``) vertex whose ``k``-neighbourhood holds both ends;
    both halves are shortest paths padded with stationary steps at ``w``.
    """
    e = tuple(edge_path)
    if not e:
        raise PathError("empty edge-path")
    out = [e[0]]
    for u, v in zip(e, e[1:]):
        ws = nbhd_witnesses(g, u, v, k)
        if not ws:
            raise PathError(f"{{{u}, {v}}} is not a simplex of the closed {k}-neighborhood complex")
        w = ws[0] if policy == "min" else ws[-1]
        alpha = _bfs_path(g, u, w)
        alpha += [w] * (k + 1 - len(alpha))
        beta = _bfs_path(g, w, v)
        beta = [w] * (k + 1 - len(beta)) + beta
        out += alpha[1:] + beta[1:]
    return tuple(out)


def psi_map(g: Graph, loop, k: int) -> tuple:
    """Sample a loop every ``2k`` steps after padding it with the basepoint."""
    p = _check_path(g, loop)
    v = p[0]
    if p[-1] != v:
        raise PathError("psi_map needs a loop")
    n = len(p) - 1
    blocks = -(-n // (2 * k))
    padded = p + (v,) * (2 * k * blocks - n)
    samples = padded[:: 2 * k]
    for i in range(blocks):
        mid = padded[2 * k * i + k]
        nb = closed_k_neighborhood_mask(g, mid, k)
        if not ((nb >> samples[i]) & 1 and (nb >> samples[i + 1]) & 1):
            raise AssertionError("midpoint is not a witness")
    return tuple(samples)


def is_edge_path(g: Graph, e, k: int) -> bool:
    return bool(e) and all(nbhd_witnesses(g, u, v, k) for u, v in zip(e, e[1:]))


# ---------------------------------------------------------------------------
# digraph paths and Γ_k moves


@dataclass(frozen=True)
class DigraphPath:
    vertices: tuple
    forward: tuple  # one flag per step

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "forward", tuple(bool(f) for f in self.forward))
        if not self.vertices or len(self.forward) != len(self.vertices) - 1:
            raise PathError("a digraph path needs one orientation flag per step")

    @property
    def length(self) -> int:
        return len(self.forward)

    def is_valid(self, x: Digraph) -> bool:
        vs = self.vertices
        if any(not 0 <= v < x.n for v in vs):
            return False
        for i, f in enumerate(self.forward):
            a, b = vs[i], vs[i + 1]
            if a != b and not (x.has_arc(a, b) if f else x.has_arc(b, a)):
                return False
        return True

    def insert(self, anchor: int, loop: "DigraphPath") -> "DigraphPath":
        return DigraphPath(
            self.vertices[:anchor] + loop.vertices + self.vertices[anchor + 1:],
            self.forward[:anchor] + loop.forward + self.forward[anchor:],
        )

    def delete(self, anchor: int, length: int) -> "DigraphPath":
        return DigraphPath(
            self.vertices[:anchor + 1] + self.vertices[anchor + length + 1:],
            self.forward[:anchor] + self.forward[anchor + length:],
        )

    def segment(self, anchor: int, length: int) -> "DigraphPath":
        return DigraphPath(
            self.vertices[anchor:anchor + length + 1], self.forward[anchor:anchor + length]
        )

    @classmethod
    def from_graph_path(cls, p) -> "DigraphPath":
        return cls(tuple(p), (True,) * (len(p) - 1))


@dataclass(frozen=True)
class GammaShape:
    """The digraph Γ_k: two directed paths of length k with shared ends."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PathError("Γ_k needs k >= 1")

    @property
    def vertices(self) -> tuple:
        k = self.k
        return tuple(("u", i) for i in range(k + 1)) + tuple(("v", i) for i in range(1, k))

    def _name(self, side: str, i: int):
        return ("u", i) if i in (0, self.k) else (side, i)

    @property
    def arcs(self) -> frozenset:
        k = self.k
        return frozenset(
            (self._name(s, i), self._name(s, i + 1)) for s in ("u", "v") for i in range(k)
        )

    def cycle(self) -> tuple:
        """Clockwise cycle from u_0: along the u side, back along the v side."""
        k = self.k
        verts = [("u", i) for i in range(k + 1)] + [self._name("v", i) for i in range(k - 1, 0, -1)]
        flags = [True] * k + [False] * k
        return verts, flags

    def rho(self, x) -> DigraphPath:
        verts, flags = self.cycle()
        i = verts.index(x)
        rv = verts[i:] + verts[:i]
        rf = flags[i:] + flags[:i]
        return DigraphPath(tuple(rv) + (x,), tuple(rf))


def _loop_patterns(k: int) -> list:
    _, flags = GammaShape(k).cycle()
    return sorted({tuple(flags[i:] + flags[:i]) for i in range(2 * k)})


MAX_GAMMA_VERTICES = 8
MAX_GAMMA_K = 3


def gamma_loops(x: Digraph, k: int, base: int) -> list:
    """All loops ``h∘ρ_x`` at ``base`` for digraph maps ``h: Γ_k → X``.

    Backtracking assigns images along the ρ_x cycle, so every loop is built
    from a map with ``h(x) = base``.
    """
    if x.n > MAX_GAMMA_VERTICES or k > MAX_GAMMA_K:
        raise PathError(
            f"Γ_k enumeration is limited to {MAX_GAMMA_VERTICES} vertices and k <= {MAX_GAMMA_K}"
        )
    out = set()
    for pattern in _loop_patterns(k):
        def extend(vs):
            i = len(vs) - 1
            if i == len(pattern):
                if vs[-1] == base:
                    out.add(DigraphPath(tuple(vs), pattern))
                return
            a = vs[-1]
            succ = x.out_adj[a] if pattern[i] else x.in_adj[a]
            for b in (a,) + tuple(_bits_of(succ)):
                vs.append(b)
                extend(vs)
                vs.pop()

        extend([base])
    return sorted(out, key=lambda p: (p.vertices, p.forward))


def _bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_gamma_loop(seg: DigraphPath, x: Digraph, k: int) -> bool:
    """Does ``seg`` factor as ``h∘ρ_x`` through Γ_0 or Γ_k?"""
    if seg.vertices[0] != seg.vertices[-1] or not seg.is_valid(x):
        return False
    if seg.length == 1:
        return True  # Γ_0: a stationary step with either orientation
    return seg.length == 2 * k and seg.forward in _loop_patterns(k)


def gamma_moves_digraph(p: DigraphPath, x: Digraph, k: int, anchor: int) -> list:
    """Γ-move neighbours of ``p`` at ``anchor``: insertions of loops, and deletions."""
    if not 0 <= anchor <= p.length:
        raise PathError("anchor out of range")
    base = p.vertices[anchor]
    out = set()
    for f in (True, False):
        out.add(p.insert(anchor, DigraphPath((base, base), (f,))))
    for loop in gamma_loops(x, k, base):
        out.add(p.insert(anchor, loop))
    for length in {1, 2 * k}:
        if anchor + length <= p.length and _is_gamma_loop(p.segment(anchor, length), x, k):
            out.add(p.delete(anchor, length))
    out.discard(p)
    return sorted(out, key=lambda q: (q.length, q.vertices, q.forward))


def is_gamma_move(f: DigraphPath, g: DigraphPath, x: Digraph, k: int) -> bool:
    """True when one of ``f``, ``g`` is the other with a Γ_0 or Γ_k loop inserted."""
    if not (f.is_valid(x) and g.is_valid(x)):
        return False
    short, long_ = (f, g) if f.length < g.length else (g, f)
    d = long_.length - short.length
    if d not in (1, 2 * k):
        return False
    for a in range(short.length + 1):
        if long_.delete(a, d) == short and _is_gamma_loop(long_.segment(a, d), x, k):
            return True
    return False


def _local_certificate(stationary: bool, forward: bool) -> list:
    """Chain of Γ_2 moves flipping one step on the two-vertex symmetric digraph."""
    if stationary:
        local, end = Digraph.from_arcs(1, []), 0
    else:
        local, end = Digraph.from_arcs(2, [(0, 1), (1, 0)]), 1
    start = DigraphPath((0, end), (forward,))
    goal = DigraphPath((0, end), (not forward,))
    parent = {start: None}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if s == goal:
            break
        if s.length > 7:
            continue
        for a in range(s.length + 1):
            for t in gamma_moves_digraph(s, local, 2, a):
                if t not in parent:
                    parent[t] = s
                    queue.append(t)
    chain = []
    s = goal
    while s is not None:
        chain.append(s)
        s = parent[s]
    return chain[::-1]


_CERT_CACHE: dict = {}


def reversal_equivalence_certificate(p: DigraphPath, target_forward, x: Digraph) -> list:
    """Chain of Γ_2 moves from ``p`` to the same vertices with ``target_forward`` flags.

    Each flipped step is handled by a fixed local chain on the two-vertex
    symmetric digraph, moved into place; since Γ moves only touch the
    inserted or deleted loop, the transplanted chain stays valid.  Returns
    the list of intermediate paths (excluding ``p``), replay-validated.
    """
    if not x.is_symmetric():
        raise PathError("reversal certificates need a symmetric digraph")
    if not p.is_valid(x):
        raise PathError("path is not valid in the digraph")
    target = DigraphPath(p.vertices, tuple(target_forward))
    if not target.is_valid(x):
        raise PathError("target orientation is not valid in the digraph")
    chain = []
    cur = p
    for i in range(p.length):
        if cur.forward[i] == target.forward[i]:
            continue
        a, b = cur.vertices[i], cur.vertices[i + 1]
        key = (a == b, cur.forward[i])
        if key not in _CERT_CACHE:
            _CERT_CACHE[key] = _local_certificate(*key)
        relabel = {0: a, 1: b}
        pre_v, pre_f = cur.vertices[:i], cur.forward[:i]
        suf_v, suf_f = cur.vertices[i + 2:], cur.forward[i + 1:]
        for step in _CERT_CACHE[key][1:]:
            cur = DigraphPath(
                pre_v + tuple(relabel[v] for v in step.vertices) + suf_v,
                pre_f + step.forward + suf_f,
            )
            chain.append(cur)
        # the local chain ends on a single step, so positions after i are unchanged
    prev = p
    for q in chain:
        if not is_gamma_move(prev, q, x, 2):
            raise AssertionError("reversal certificate failed replay")
        prev = q
    if prev != target:
        raise AssertionError("reversal certificate does not reach the target")
    return chain
