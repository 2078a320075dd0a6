"""Exact sparse integer linear algebra.

Matrices are dictionaries of rows mapping column -> nonzero int.  Python ints
give unbounded precision, so no entry ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class SparseIntMatrix:
    rows: int
    cols: int
    entries: tuple  # (row, col, value), sorted, no zeros, no duplicates

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if v == 0:
                raise ValueError("zero entries must not be stored")
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if (r, c) in seen:
                raise ValueError(f"duplicate coordinate ({r}, {c})")
            seen.add((r, c))
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_dense(cls, rows: list) -> "SparseIntMatrix":
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        entries = tuple((i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row) if v)
        return cls(nr, nc, entries)

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: list) -> "SparseIntMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "entries", tuple(sorted(entries)))
        return obj

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def row_dicts(self) -> dict:
        rows: dict = {}
        for r, c, v in self.entries:
            rows.setdefault(r, {})[c] = v
        return rows

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        right = other.row_dicts()
        acc: dict = {}
        for r, k, v in self.entries:
            for c, w in right.get(k, {}).items():
                acc[r, c] = acc.get((r, c), 0) + v * w
        return SparseIntMatrix._trusted(
            self.rows, other.cols, [(r, c, v) for (r, c), v in acc.items() if v]
        )

    def is_zero(self) -> bool:
        return not self.entries


def normalize_factors(diagonal: Iterable[int]) -> tuple:
    """Turn any diagonal form into invariant factors ``d1 | d2 | ...``.

    Repeatedly replacing a pair by ``(gcd, lcm)`` preserves the module and
    ends in divisibility order.  Zeros are dropped.
    """
    d = sorted(abs(x) for x in diagonal if x)
    ones = sum(1 for x in d if x == 1)  # units already sit at the front
    d = d[ones:]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            g = gcd(a, b)
            d[i], d[j] = g, a // g * b
    assert all(d[i + 1] % d[i] == 0 for i in range(n - 1))
    return (1,) * ones + tuple(d)


class _Work:
    """Mutable row/column incidence used by the eliminations below."""

    def __init__(self, m: SparseIntMatrix, mod: int | None = None):
        self.rows: dict = {}
        self.cols: dict = {}
        for r, c, v in m.entries:
            if mod is not None:
                v %= mod
                if not v:
                    continue
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, set()).add(r)

    def drop(self, r: int, c: int):
        for c2 in self.rows.pop(r):
            s = self.cols[c2]
            s.discard(r)
            if not s:
                del self.cols[c2]
        for r2 in self.cols.pop(c, ()):
            self.rows[r2].pop(c, None)

    def axpy(self, target: int, source: int, factor: int, mod: int | None = None):
        """row[target] += factor * row[source]"""
        trow = self.rows[target]
        for c, v in self.rows[source].items():
            nv = trow.get(c, 0) + factor * v
            if mod is not None:
                nv %= mod
            if nv:
                if c not in trow:
                    self.cols.setdefault(c, set()).add(target)
                trow[c] = nv
            elif c in trow:
                del trow[c]
                s = self.cols[c]
                s.discard(target)
                if not s:
                    del self.cols[c]
        if not trow:
            del self.rows[target]

    def clear_column(self, r: int, c: int, pivot: int, mod: int | None = None):
        """Clear column ``c`` below/above the pivot using an invertible pivot."""
        for r2 in sorted(self.cols[c] - {r}):
            a = self.rows[r2][c]
            if mod is None:
                factor = -a * pivot  # pivot is ±1
            else:
                factor = (-a * pow(pivot, -1, mod)) % mod
            self.axpy(r2, r, factor, mod)


def _unit_pass(w: _Work, mod: int | None) -> int:
    """Eliminate invertible pivots column by column; returns how many were used.

    Within a column the shortest pivot row is taken (ties by row index) to
    limit fill-in.
    """
    used = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(w.cols):
            rs = w.cols.get(c)
            if not rs:
                continue
            best = None
            for r in rs:
                v = w.rows[r][c]
                if mod is None and abs(v) != 1:
                    continue
                key = (len(w.rows[r]), r)
                if best is None or key < best[0]:
                    best = (key, r, v)
            if best is None:
                continue
            _, r, v = best
            w.clear_column(r, c, v, mod)
            w.drop(r, c)
            used += 1
            progress = True
    return used


def smith_normal_form(m: SparseIntMatrix) -> tuple:
    """Nonzero invariant factors of ``m`` over the integers.

    Unit pivots are eliminated first; what remains is diagonalized with the
    smallest-magnitude pivot (ties by coordinate) and the diagonal is then
    normalized to divisibility order.
    """
    w = _Work(m)
    diagonal = [1] * _unit_pass(w, None)
    while w.rows:
        r, c, p = min(
            ((r, c, v) for r, row in w.rows.items() for c, v in row.items()),
            key=lambda t: (abs(t[2]), t[0], t[1]),
        )
        dirty = False
        for r2 in sorted(w.cols[c] - {r}):
            q = w.rows[r2][c] // p
            w.axpy(r2, r, -q)
            if c in w.rows.get(r2, ()):
                dirty = True
        if dirty:
            continue
        # column c now holds only the pivot, so column operations touch row r alone
        prow = w.rows[r]
        for c2 in sorted(set(prow) - {c}):
            q = prow[c2] // p
            nv = prow[c2] - q * p
            if nv:
                prow[c2] = nv
                dirty = True
            else:
                del prow[c2]
                s = w.cols[c2]
                s.discard(r)
                if not s:
                    del w.cols[c2]
        if dirty:
            continue
        diagonal.append(p)
        w.drop(r, c)
    return normalize_factors(diagonal)


def rank_mod_p(m: SparseIntMatrix, p: int) -> int:
    w = _Work(m, mod=p)
    rank = _unit_pass(w, p)
    assert not w.rows or all(not row for row in w.rows.values())
    return rank


def rank_rational(m: SparseIntMatrix) -> int:
    """Rank over the rationals by fraction-free (integer-preserving) elimination.

    Rows are combined as ``p * row - a * pivot_row`` and divided by their
    content afterwards, which keeps entries integral and small.
    """
    rows = {r: dict(row) for r, row in m.row_dicts().items()}
    rank = 0
    while rows:
        # pivot: smallest magnitude, ties by coordinate
        r, c, p = min(
            ((r, c, v) for r, row in rows.items() for c, v in row.items()),
            key=lambda t: (abs(t[2]), len(rows[t[0]]), t[0], t[1]),
        )
        prow = rows.pop(r)
        rank += 1
        for r2 in list(rows):
            row = rows[r2]
            a = row.get(c)
            if a is None:
                continue
            new = {}
            for k in set(row) | set(prow):
                v = p * row.get(k, 0) - a * prow.get(k, 0)
                if v:
                    new[k] = v
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                rows[r2] = {k: v // g for k, v in new.items()}
            else:
                del rows[r2]
        rows = {k: v for k, v in rows.items() if v}
    return rank


def rank_gf2_dense(columns: list) -> int:
    """Rank over GF(2) of vectors given as Python int bitsets."""
    basis: dict = {}
    rank = 0
    for v in columns:
        while v:
            lead = v.bit_length() - 1
            if lead in basis:
                v ^= basis[lead]
            else:
                basis[lead] = v
                rank += 1
                break
    return rank
