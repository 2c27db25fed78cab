"""Bicoloured graphs: bipartite graphs with an ordered (top, bottom) bipartition.

A graph with ``p`` top and ``q`` bottom vertices is stored as ``rows``: one
bitmask per top vertex giving its bottom neighbours.  Read as a poset, top
vertex ``a`` lies above bottom vertex ``b`` iff they are adjacent.

Isomorphism classes are taken under colour-preserving relabelling.  The
canonical key sorts the masks of the larger side and minimizes over all
permutations of the smaller side; generation is orderly, since every prefix of
a canonical sorted row tuple is itself canonical.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SizeError
from .poset import Poset, bits

__all__ = [
    "BicolouredGraph",
    "canonical_bicoloured",
    "enumerate_bicoloured",
    "enumerate_tangles",
    "is_tangle",
    "colour_aut_order",
    "MAX_TANGLE_SIZE",
]

MAX_TANGLE_SIZE = 12


@dataclass(frozen=True)
class BicolouredGraph:
    p: int
    q: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.p:
            raise ValueError(f"expected {self.p} rows, got {len(self.rows)}")
        if any(r >> self.q for r in self.rows):
            raise ValueError("row mask references a bottom vertex out of range")

    @classmethod
    def from_matrix(cls, adj: Sequence[Sequence[bool]], q: int | None = None) -> "BicolouredGraph":
        if q is None:
            q = len(adj[0]) if adj else 0
        rows = tuple(sum(1 << b for b, x in enumerate(row) if x) for row in adj)
        return cls(len(adj), q, rows)

    @classmethod
    def from_edges(cls, p: int, q: int, edges: Iterable[tuple[int, int]]) -> "BicolouredGraph":
        rows = [0] * p
        for a, b in edges:
            rows[a] |= 1 << b
        return cls(p, q, tuple(rows))

    @property
    def adj(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(r >> b & 1) for b in range(self.q)) for r in self.rows)

    @property
    def columns(self) -> tuple[int, ...]:
        cols = [0] * self.q
        for a, r in enumerate(self.rows):
            for b in bits(r):
                cols[b] |= 1 << a
        return tuple(cols)

    @property
    def size(self) -> int:
        return self.p + self.q

    def transpose(self) -> "BicolouredGraph":
        return BicolouredGraph(self.q, self.p, self.columns)

    def to_poset(self) -> Poset:
        """Bottom vertices are ``0..q-1``, top vertices ``q..q+p-1``."""
        return Poset(self.p + self.q, [0] * self.q + list(self.rows), check=False)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, r in enumerate(self.rows) for b in bits(r)]


@lru_cache(maxsize=None)
def _perm_tables(k: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of ``range(k)``, the induced map on k-bit masks."""
    tables = []
    for perm in itertools.permutations(range(k)):
        table = []
        for m in range(1 << k):
            out = 0
            for i in bits(m):
                out |= 1 << perm[i]
            table.append(out)
        tables.append(tuple(table))
    return tuple(tables)


def _is_canonical(rows: list[int], k: int) -> bool:
    for table in _perm_tables(k):
        if sorted(table[r] for r in rows) < rows:
            return False
    return True


def _canonical_rows(rows: Sequence[int], k: int) -> tuple[int, ...]:
    return min(tuple(sorted(table[r] for r in rows)) for table in _perm_tables(k))


def canonical_bicoloured(G: BicolouredGraph) -> BicolouredGraph:
    """Canonical representative of G's colour-preserving isomorphism class."""
    if G.q <= G.p:
        return BicolouredGraph(G.p, G.q, _canonical_rows(G.rows, G.q))
    T = G.transpose()
    return BicolouredGraph(T.p, T.q, _canonical_rows(T.rows, T.q)).transpose()


def _orderly(p: int, k: int, allowed: Sequence[int]) -> list[tuple[int, ...]]:
    """Canonical sorted tuples of ``p`` masks drawn from ``allowed`` (k-bit)."""
    out = []
    rows: list[int] = []

    def grow(start: int) -> None:
        if len(rows) == p:
            out.append(tuple(rows))
            return
        for idx in range(start, len(allowed)):
            rows.append(allowed[idx])
            if _is_canonical(rows, k):
                grow(idx)
            rows.pop()

    grow(0)
    return out


def _max_size() -> int:
    return max(MAX_TANGLE_SIZE, int(os.environ.get("TANGLECOUNT_MAX_N", 0)))


@lru_cache(maxsize=None)
def enumerate_bicoloured(p: int, q: int) -> tuple[BicolouredGraph, ...]:
    """All bicoloured graphs with p top and q bottom vertices, one per class."""
    if p + q > _max_size():
        raise SizeError(f"bicoloured enumeration is limited to p+q <= {_max_size()}")
    if q > p:
        return tuple(sorted((G.transpose() for G in enumerate_bicoloured(q, p)), key=_order_key))
    found = _orderly(p, q, list(range(1 << q)))
    return tuple(sorted((BicolouredGraph(p, q, r) for r in found), key=_order_key))


def _order_key(G: BicolouredGraph):
    return (G.p, G.q, G.rows)


def _connected(masks: Sequence[int]) -> bool:
    """Connectivity of the 'neighbourhoods incomparable under inclusion' graph."""
    k = len(masks)
    if k == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(k):
            if j in seen:
                continue
            mi, mj = masks[i], masks[j]
            if mi & ~mj and mj & ~mi:
                seen.add(j)
                stack.append(j)
    return len(seen) == k


def is_tangle(G: BicolouredGraph) -> bool:
    if G.p < 2 or G.q < 2:
        return False
    return _connected(G.rows) and _connected(G.columns)


@lru_cache(maxsize=None)
def enumerate_tangles(p: int, q: int) -> tuple[BicolouredGraph, ...]:
    """Isomorphism classes of tangles with p top and q bottom vertices."""
    if p + q > _max_size():
        raise SizeError(f"tangle enumeration is limited to p+q <= {_max_size()}")
    if p < 2 or q < 2:
        return ()
    if q > p:
        return tuple(sorted((G.transpose() for G in enumerate_tangles(q, p)), key=_order_key))
    # a tangle vertex never has an empty or a full neighbourhood
    allowed = list(range(1, (1 << q) - 1))
    found = (BicolouredGraph(p, q, r) for r in _orderly(p, q, allowed))
    return tuple(sorted((G for G in found if is_tangle(G)), key=_order_key))


def colour_aut_order(G: BicolouredGraph) -> int:
    """Number of colour-preserving automorphisms of G.

    Identical rows (and identical columns) can be permuted freely; what remains
    is a graph with distinct rows and distinct columns, where a row permutation
    determines the column permutation if one exists.
    """
    row_mult: dict[int, int] = {}
    for r in G.rows:
        row_mult[r] = row_mult.get(r, 0) + 1
    col_mult: dict[int, int] = {}
    for col in G.columns:
        col_mult[col] = col_mult.get(col, 0) + 1
    kernel = math.prod(math.factorial(m) for m in row_mult.values())
    kernel *= math.prod(math.factorial(m) for m in col_mult.values())

    reduced_rows = sorted(row_mult)
    reduced_cols = sorted(col_mult)
    # each reduced column as a mask over reduced rows, via one top vertex per row class
    row_rep = [G.rows.index(r) for r in reduced_rows]
    col_sets = []
    for col in reduced_cols:
        m = 0
        for i, v in enumerate(row_rep):
            if col >> v & 1:
                m |= 1 << i
        col_sets.append((m, col_mult[col]))
    target = set(col_sets)

    # classes of reduced rows that may be swapped: same multiplicity and degree
    classes: dict[tuple[int, int], list[int]] = {}
    for i, r in enumerate(reduced_rows):
        classes.setdefault((row_mult[r], r.bit_count()), []).append(i)
    groups = list(classes.values())

    count = 0
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        sigma = [0] * len(reduced_rows)
        for g, img in zip(groups, choice):
            for src, dst in zip(g, img):
                sigma[src] = dst
        ok = True
        for m, mult in col_sets:
            image = 0
            for i in bits(m):
                image |= 1 << sigma[i]
            if (image, mult) not in target:
                ok = False
                break
        count += ok
    return kernel * count
