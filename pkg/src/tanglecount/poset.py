"""Finite strict partial orders on dense vertex indices.

Relations are stored transitively closed as one bitmask per vertex: bit ``a``
of ``down[b]`` is set iff ``a < b``.  Vertex sets returned to callers are
frozensets; bitmasks are used internally wherever speed matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CycleError

__all__ = [
    "Poset",
    "PatternWitness",
    "from_relations",
    "from_matrix",
    "chain",
    "antichain",
    "downset",
    "upset",
    "find_3plus1",
    "find_2plus2",
    "is_31_free",
    "levels",
    "level_of",
    "bits",
    "mask_of",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Poset:
    """Immutable strict partial order on ``range(n)``."""

    __slots__ = ("n", "down", "up")

    def __init__(self, n: int, down: Sequence[int], check: bool = True):
        if len(down) != n:
            raise ValueError(f"expected {n} downset masks, got {len(down)}")
        self.n = n
        self.down = tuple(down)
        up = [0] * n
        for b, m in enumerate(self.down):
            for a in bits(m):
                up[a] |= 1 << b
        self.up = tuple(up)
        if check:
            self._check()

    def _check(self) -> None:
        full = (1 << self.n) - 1
        for b, m in enumerate(self.down):
            if m & ~full:
                raise IndexError(f"downset of {b} references a vertex outside range({self.n})")
            if m >> b & 1:
                raise CycleError(f"vertex {b} lies below itself")
            for a in bits(m):
                if self.down[a] & ~m:
                    raise ValueError(f"relation is not transitively closed at {a} < {b}")

    @property
    def lt(self) -> tuple[tuple[bool, ...], ...]:
        """Relation matrix: ``lt[a][b]`` is true iff ``a < b``."""
        return tuple(
            tuple(bool(self.down[b] >> a & 1) for b in range(self.n)) for a in range(self.n)
        )

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def less(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def comparable_mask(self, a: int) -> int:
        """Vertices comparable to ``a``, including ``a`` itself."""
        return self.down[a] | self.up[a] | (1 << a)

    def incomparable(self, a: int, b: int) -> bool:
        return a != b and not (self.comparable_mask(a) >> b & 1)

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for b in range(self.n) for a in bits(self.down[b])]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for b in range(self.n):
            below = self.down[b]
            inner = 0
            for c in bits(below):
                inner |= self.down[c]
            out.extend((a, b) for a in bits(below & ~inner))
        return out

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Return the isomorphic poset in which vertex ``v`` becomes ``perm[v]``."""
        new = [0] * self.n
        for b in range(self.n):
            m = 0
            for a in bits(self.down[b]):
                m |= 1 << perm[a]
            new[perm[b]] = m
        return Poset(self.n, new, check=False)

    def induced(self, vertices: Sequence[int]) -> "Poset":
        """Induced subposet on ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        down = []
        for v in vertices:
            down.append(mask_of(index[a] for a in bits(self.down[v]) if a in index))
        return Poset(len(vertices), down, check=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.n, self.down))

    def __repr__(self) -> str:
        return f"Poset({self.n}, covers={self.covers()})"


def from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Build the poset generated by ``pairs`` (each ``(a, b)`` meaning ``a < b``)."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    down = [0] * n
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"relation ({a}, {b}) out of range for {n} vertices")
        down[b] |= 1 << a
    # Warshall closure on bitmasks
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for b in range(n):
            if down[b] & bit:
                down[b] |= dk
    for b in range(n):
        if down[b] >> b & 1:
            raise CycleError(f"relations force {b} < {b}")
    return Poset(n, down, check=False)


def from_matrix(lt: Sequence[Sequence[bool]]) -> Poset:
    n = len(lt)
    return from_relations(n, [(a, b) for a in range(n) for b in range(n) if lt[a][b]])


def chain(n: int) -> Poset:
    return Poset(n, [(1 << b) - 1 for b in range(n)], check=False)


def antichain(n: int) -> Poset:
    return Poset(n, [0] * n, check=False)


def _vertex(P: Poset, a: int) -> int:
    if not 0 <= a < P.n:
        raise IndexError(f"vertex {a} out of range for {P.n} vertices")
    return a


def downset(P: Poset, a: int) -> frozenset[int]:
    return frozenset(bits(P.down[_vertex(P, a)]))


def upset(P: Poset, a: int) -> frozenset[int]:
    return frozenset(bits(P.up[_vertex(P, a)]))


@dataclass(frozen=True)
class PatternWitness:
    """An induced (3+1) or (2+2) found in a host poset.

    For ``kind == "3+1"``: ``chain`` is ``(a, b, c)`` with ``a < b < c`` and
    ``isolated`` is incomparable to all three.  For ``kind == "2+2"``:
    ``pairs`` is ``((a, b), (c, d))`` with ``a < b``, ``c < d`` and no other
    relations among the four.
    """

    kind: str
    chain: tuple[int, int, int] | None = None
    isolated: int | None = None
    pairs: tuple[tuple[int, int], tuple[int, int]] | None = None

    def as_dict(self) -> dict:
        if self.kind == "3+1":
            return {"kind": self.kind, "chain": list(self.chain), "isolated": self.isolated}
        return {"kind": self.kind, "pairs": [list(p) for p in self.pairs]}


def find_3plus1(P: Poset) -> PatternWitness | None:
    comp = [P.comparable_mask(v) for v in range(P.n)]
    full = P.full
    for b in range(P.n):
        if not P.down[b] or not P.up[b]:
            continue
        for a in bits(P.down[b]):
            ab = comp[a] | comp[b]
            for c in bits(P.up[b]):
                rest = full & ~(ab | comp[c])
                if rest:
                    d = (rest & -rest).bit_length() - 1
                    return PatternWitness("3+1", chain=(a, b, c), isolated=d)
    return None


def find_2plus2(P: Poset) -> PatternWitness | None:
    comp = [P.comparable_mask(v) for v in range(P.n)]
    full = P.full
    for b in range(P.n):
        for a in bits(P.down[b]):
            free = full & ~(comp[a] | comp[b])
            for d in bits(free):
                c_choices = P.down[d] & free
                if c_choices:
                    c = (c_choices & -c_choices).bit_length() - 1
                    return PatternWitness("2+2", pairs=((a, b), (c, d)))
    return None


def is_31_free(P: Poset) -> bool:
    return find_3plus1(P) is None


def level_of(P: Poset) -> tuple[int, ...]:
    """1-based level of each vertex (strata of iterated minimal elements)."""
    lev = [0] * P.n
    placed = 0
    k = 0
    while placed != P.full:
        k += 1
        layer = 0
        for v in range(P.n):
            if not placed >> v & 1 and P.down[v] & ~placed == 0:
                layer |= 1 << v
        for v in bits(layer):
            lev[v] = k
        placed |= layer
    return tuple(lev)


def levels(P: Poset) -> list[frozenset[int]]:
    lev = level_of(P)
    height = max(lev, default=0)
    out = [set() for _ in range(height)]
    for v, k in enumerate(lev):
        out[k - 1].add(v)
    return [frozenset(s) for s in out]
