"""Canonical forms and automorphism counting for small posets.

Both routines start from the same iso-invariant vertex colouring
(level, |D_a|, |U_a|), refined by the colour multisets of downsets and
upsets until stable.  ``canonical_form`` then individualizes vertices of the
first non-singleton cell and keeps the lexicographically largest leaf
encoding.  Vertices with identical downsets and upsets are interchangeable,
so only one of them is tried per cell.
"""

from __future__ import annotations

import os

from .errors import SizeError
from .poset import Poset, bits, level_of

__all__ = ["canonical_form", "canonical_poset", "aut_order_bruteforce", "stable_colouring", "MAX_ISO_N"]

MAX_ISO_N = 12


def _max_n() -> int:
    return max(MAX_ISO_N, int(os.environ.get("TANGLECOUNT_MAX_N", 0)))


def _refine(P: Poset, colours: list[int]) -> list[int]:
    down, up = P.down, P.up
    ncls = len(set(colours))
    while True:
        sigs = [
            (
                colours[v],
                tuple(sorted(colours[u] for u in bits(down[v]))),
                tuple(sorted(colours[u] for u in bits(up[v]))),
            )
            for v in range(P.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [rank[s] for s in sigs]
        if len(rank) == ncls:
            return colours
        ncls = len(rank)


def stable_colouring(P: Poset) -> list[int]:
    lev = level_of(P)
    init = [(lev[v], P.down[v].bit_count(), P.up[v].bit_count()) for v in range(P.n)]
    rank = {s: i for i, s in enumerate(sorted(set(init)))}
    return _refine(P, [rank[s] for s in init])


def _encode(P: Poset, colours: list[int]) -> tuple[int, ...]:
    new = [0] * P.n
    for b in range(P.n):
        m = 0
        for a in bits(P.down[b]):
            m |= 1 << colours[a]
        new[colours[b]] = m
    return tuple(new)


def _search(P: Poset, colours: list[int]):
    """Return (best encoding, vertex labelling achieving it)."""
    if len(set(colours)) == P.n:
        return _encode(P, colours), colours
    counts: dict[int, int] = {}
    for c in colours:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    seen = set()
    best = None
    for v in range(P.n):
        if colours[v] != target:
            continue
        twin_key = (P.down[v], P.up[v])
        if twin_key in seen:
            continue
        seen.add(twin_key)
        split = [2 * c + 1 for c in colours]
        split[v] = 2 * target
        result = _search(P, _refine(P, split))
        if best is None or result[0] > best[0]:
            best = result
    return best


def canonical_form(P: Poset) -> tuple[int, tuple[int, ...]]:
    """Hashable encoding that is equal for two posets iff they are isomorphic."""
    if P.n == 0:
        return (0, ())
    enc, _ = _search(P, stable_colouring(P))
    return (P.n, enc)


def canonical_poset(P: Poset) -> Poset:
    """The representative of P's isomorphism class carried by its canonical form."""
    n, enc = canonical_form(P)
    return Poset(n, enc, check=False)


def aut_order_bruteforce(P: Poset) -> int:
    """Count order automorphisms by backtracking within stable colour classes."""
    if P.n > _max_n():
        raise SizeError(f"aut_order_bruteforce is limited to n <= {_max_n()} (got {P.n})")
    n = P.n
    if n == 0:
        return 1
    colours = stable_colouring(P)
    image = [-1] * n
    used = [False] * n
    down, up = P.down, P.up

    def consistent(v: int, w: int) -> bool:
        for u in range(v):
            iu = image[u]
            if (down[v] >> u & 1) != (down[w] >> iu & 1):
                return False
            if (up[v] >> u & 1) != (up[w] >> iu & 1):
                return False
        return True

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for w in range(n):
            if used[w] or colours[w] != colours[v] or not consistent(v, w):
                continue
            image[v] = w
            used[w] = True
            total += extend(v + 1)
            used[w] = False
        image[v] = -1
        return total

    return extend(0)
