"""Views, clone sets and tangles of (3+1)-free posets.

The view of a vertex ``a`` is the pair (D_a, P minus U_a).  Views are ordered
componentwise by inclusion, and the co-connected components of the view
poset form a chain; their preimages are exactly the clone sets, the tops of
tangles and the bottoms of tangles.  Tops and bottoms pair up through induced
(2+2) subposets, and the resulting parts admit a compatible listing that
determines every relation between different parts from levels alone.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Union

from .bicoloured import BicolouredGraph, colour_aut_order
from .errors import Not31FreeError
from .poset import Poset, bits, find_3plus1, level_of
from .skeleton import Letter, SkeletonWord, c, normalize_listing, t

__all__ = [
    "View",
    "CloneSet",
    "Tangle",
    "Part",
    "Decomposition",
    "view",
    "is_clone",
    "rel_ttop",
    "rel_tbot",
    "altitude",
    "ordered_view_components",
    "decompose",
    "skeleton_of",
    "normal_listing",
    "aut_order",
    "tangle_graph",
    "check_listing",
]


@dataclass(frozen=True)
class View:
    down: frozenset[int]
    codown: frozenset[int]


@dataclass(frozen=True)
class CloneSet:
    vertices: frozenset[int]
    level: int

    @property
    def letter(self) -> Letter:
        return c(self.level)

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Tangle:
    top: frozenset[int]
    bottom: frozenset[int]
    levels: tuple[int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return self.top | self.bottom

    @property
    def letter(self) -> Letter:
        return t(self.levels[0])

    @property
    def size(self) -> int:
        return len(self.top) + len(self.bottom)


Part = Union[CloneSet, Tangle]


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Part, ...]
    level_of: tuple[int, ...]

    @property
    def word(self) -> list[Letter]:
        return [x.letter for x in self.parts]

    @property
    def clone_sets(self) -> list[CloneSet]:
        return [x for x in self.parts if isinstance(x, CloneSet)]

    @property
    def tangles(self) -> list[Tangle]:
        return [x for x in self.parts if isinstance(x, Tangle)]


def _vertex(P: Poset, a: int) -> int:
    if not 0 <= a < P.n:
        raise IndexError(f"vertex {a} out of range for {P.n} vertices")
    return a


def _require_31_free(P: Poset) -> None:
    w = find_3plus1(P)
    if w is not None:
        raise Not31FreeError(w)


def view(P: Poset, a: int, check: bool = False) -> View:
    _vertex(P, a)
    if check:
        _require_31_free(P)
    return View(frozenset(bits(P.down[a])), frozenset(bits(P.full & ~P.up[a])))


def _incomparable_masks(x: int, y: int) -> bool:
    return bool(x & ~y) and bool(y & ~x)


def is_clone(P: Poset, a: int, b: int) -> bool:
    _vertex(P, a), _vertex(P, b)
    return P.down[a] == P.down[b] and P.up[a] == P.up[b]


def rel_ttop(P: Poset, a: int, b: int) -> bool:
    """Downsets of a and b are incomparable (a, b sit on top of an induced 2+2)."""
    _vertex(P, a), _vertex(P, b)
    return _incomparable_masks(P.down[a], P.down[b])


def rel_tbot(P: Poset, a: int, b: int) -> bool:
    """Upsets of a and b are incomparable (a, b sit at the bottom of an induced 2+2)."""
    _vertex(P, a), _vertex(P, b)
    return _incomparable_masks(P.up[a], P.up[b])


def altitude(P: Poset, a: int) -> int:
    _vertex(P, a)
    return P.down[a].bit_count() - P.up[a].bit_count()


def _view_leq(P: Poset, a: int, b: int) -> bool:
    da, db = P.down[a], P.down[b]
    ua, ub = P.up[a], P.up[b]
    return da & ~db == 0 and ub & ~ua == 0


def _components(P: Poset) -> list[list[int]]:
    """Vertex preimages of the co-connected components of v(P), bottom first."""
    n = P.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(a + 1, n):
            ab = _view_leq(P, a, b)
            ba = _view_leq(P, b, a)
            # equal views or incomparable views share a component
            if ab == ba:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)

    def cmp(g: list[int], h: list[int]) -> int:
        return -1 if _view_leq(P, g[0], h[0]) else 1

    return sorted(groups.values(), key=cmp_to_key(cmp))


def ordered_view_components(P: Poset, check: bool = True) -> list[frozenset[View]]:
    """Co-connected components of the view poset, each entirely below the next."""
    if check:
        _require_31_free(P)
    out = []
    for g in _components(P):
        out.append(frozenset(view(P, a) for a in g))
    return out


def _kahn(nparts: int, edges: set[tuple[int, int]], key: list[int]) -> list[int]:
    indeg = [0] * nparts
    succ: list[list[int]] = [[] for _ in range(nparts)]
    for i, j in edges:
        succ[i].append(j)
        indeg[j] += 1
    heap = [(key[i], i) for i in range(nparts) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (key[j], j))
    if len(order) != nparts:
        raise AssertionError("precedence between parts is cyclic; no compatible listing")
    return order


def check_listing(P: Poset, parts, lev) -> None:
    """Raise AssertionError unless ``parts`` is a compatible listing of P."""
    owner = [-1] * P.n
    for i, part in enumerate(parts):
        for v in part.vertices:
            if owner[v] != -1:
                raise AssertionError(f"vertex {v} belongs to two parts")
            owner[v] = i
    if -1 in owner:
        raise AssertionError("parts do not cover the vertex set")
    for a in range(P.n):
        for b in range(P.n):
            i, j = owner[a], owner[b]
            if i == j:
                continue
            expect = lev[a] <= lev[b] - 2 or (lev[a] == lev[b] - 1 and i < j)
            if P.less(a, b) != expect:
                raise AssertionError(f"listing predicts {a}<{b} is {expect}, poset disagrees")


def decompose(P: Poset, check: bool = True) -> Decomposition:
    """Tangle decomposition of a (3+1)-free poset, as a compatible listing.

    Parts are ordered by a topological sort of the precedences forced by
    adjacent-level pairs; among parts that are free to go next, the one with
    the smallest vertex index goes first.
    """
    if check:
        _require_31_free(P)
    lev = level_of(P)
    if P.n == 0:
        return Decomposition((), lev)
    comps = _components(P)
    comp_of = [0] * P.n
    for k, g in enumerate(comps):
        for v in g:
            comp_of[v] = k

    kinds = []
    for g in comps:
        if len({(P.down[v], P.up[v]) for v in g}) == 1:
            kinds.append("clone")
        elif len({P.up[v] for v in g}) == 1:
            kinds.append("top")
        elif len({P.down[v] for v in g}) == 1:
            kinds.append("bottom")
        else:
            raise AssertionError(f"component {g} is neither a clone set nor a tangle side")

    match: dict[int, int] = {}
    for k, g in enumerate(comps):
        if kinds[k] != "top":
            continue
        a1 = g[0]
        a2 = next(a for a in g if _incomparable_masks(P.down[a1], P.down[a]))
        witness = next(bits(P.down[a1] & ~P.down[a2]))
        partner = comp_of[witness]
        if kinds[partner] != "bottom" or partner in match.values():
            raise AssertionError("tops and bottoms of tangles are not perfectly matched")
        match[k] = partner
    if len(match) != kinds.count("bottom"):
        raise AssertionError("tops and bottoms of tangles are not perfectly matched")

    parts: list[Part] = []
    for k, g in enumerate(comps):
        if kinds[k] == "clone":
            lv = {lev[v] for v in g}
            if len(lv) != 1:
                raise AssertionError(f"clone set {g} spans several levels")
            parts.append(CloneSet(frozenset(g), lv.pop()))
        elif kinds[k] == "top":
            bottom = comps[match[k]]
            lt_, lb_ = {lev[v] for v in g}, {lev[v] for v in bottom}
            if len(lt_) != 1 or len(lb_) != 1 or lt_.pop() != (i := lb_.pop()) + 1:
                raise AssertionError("tangle does not occupy two adjacent levels")
            parts.append(Tangle(frozenset(g), frozenset(bottom), (i, i + 1)))

    owner = [0] * P.n
    for i, part in enumerate(parts):
        for v in part.vertices:
            owner[v] = i
    edges: set[tuple[int, int]] = set()
    for b in range(P.n):
        for a in range(P.n):
            if lev[a] == lev[b] - 1 and owner[a] != owner[b]:
                if P.down[b] >> a & 1:
                    edges.add((owner[a], owner[b]))
                else:
                    edges.add((owner[b], owner[a]))
    order = _kahn(len(parts), edges, [min(x.vertices) for x in parts])
    listing = tuple(parts[i] for i in order)
    check_listing(P, listing, lev)
    return Decomposition(listing, lev)


def normal_listing(P: Poset, check: bool = True) -> tuple[SkeletonWord, list[Part]]:
    """Skeleton of P together with its parts in the order of the lex-max word."""
    d = decompose(P, check=check)
    return normalize_listing(d.word, d.parts)


def skeleton_of(P: Poset, check: bool = True) -> SkeletonWord:
    return normal_listing(P, check=check)[0]


def tangle_graph(P: Poset, T: Tangle) -> BicolouredGraph:
    """The tangle as a bicoloured graph, vertices in increasing index order."""
    top = sorted(T.top)
    bottom = sorted(T.bottom)
    pos = {v: i for i, v in enumerate(bottom)}
    rows = []
    for a in top:
        m = 0
        for b in bits(P.down[a] & sum(1 << v for v in bottom)):
            m |= 1 << pos[b]
        rows.append(m)
    return BicolouredGraph(len(top), len(bottom), tuple(rows))


def aut_order(P: Poset, check: bool = True) -> int:
    """|Aut(P)| as the product of the automorphism counts of the parts."""
    d = decompose(P, check=check)
    total = 1
    for part in d.parts:
        if isinstance(part, CloneSet):
            total *= math.factorial(part.size)
        else:
            total *= colour_aut_order(tangle_graph(P, part))
    return total
