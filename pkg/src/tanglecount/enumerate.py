"""Isomorph-free generation of (3+1)-free posets.

The constructive generator walks skeleta, clone sizes and tangle classes and
plugs the parts into each skeleton.  A poset is determined up to isomorphism
by that data, so the stream needs no deduplication.  ``enumerate_posets_oracle``
is an independent brute-force route used to cross-check it.
"""

from __future__ import annotations

import math
import os
from typing import Callable, Iterator, Sequence, Union

from .bicoloured import BicolouredGraph, canonical_bicoloured, enumerate_tangles, is_tangle
from .errors import SizeError, SpecMismatchError
from .iso import canonical_form
from .poset import Poset, bits, find_3plus1
from .skeleton import SkeletonWord, enumerate_skeleta, is_normal, is_valid_skeleton
from .tangles import CloneSet, Tangle, aut_order, normal_listing, tangle_graph

__all__ = [
    "PartSpec",
    "enumerate_posets_oracle",
    "assemble",
    "generate_31free",
    "count_labelled_via_burnside",
    "tangles_up_to",
    "MAX_GENERATE_N",
    "MAX_ORACLE_N",
    "MAX_BURNSIDE_N",
]

# One entry per skeleton letter: a clone-set size for c-letters, a tangle
# (as a bicoloured graph) for t-letters.
PartSpec = Sequence[Union[int, BicolouredGraph]]

MAX_GENERATE_N = 12
MAX_ORACLE_N = 7
MAX_BURNSIDE_N = 9


def _cap(default: int) -> int:
    return max(default, int(os.environ.get("TANGLECOUNT_MAX_N", 0)))


def _order_ideals(P: Poset) -> Iterator[int]:
    for m in range(1 << P.n):
        if all(P.down[v] & ~m == 0 for v in bits(m)):
            yield m


def enumerate_posets_oracle(
    n: int, allow_8: bool = False, predicate: Callable[[Poset], bool] | None = None
) -> list[Poset]:
    """All posets on n unlabelled vertices, by brute force.

    Posets on k vertices are grown from those on k-1 vertices by adding a new
    maximal vertex over every order ideal (so relations stay upper-triangular
    and transitively closed), and duplicates are removed by canonical form
    after each step.  ``predicate`` filters the final list.
    """
    limit = 8 if allow_8 else MAX_ORACLE_N
    if n > _cap(limit):
        raise SizeError(f"oracle enumeration is limited to n <= {limit}")
    layer = {canonical_form(Poset(0, ())): Poset(0, ())}
    for k in range(n):
        nxt: dict = {}
        for P in layer.values():
            for ideal in _order_ideals(P):
                Q = Poset(k + 1, P.down + (ideal,), check=False)
                key = canonical_form(Q)
                if key not in nxt:
                    nxt[key] = Q
        layer = nxt
    out = [Poset(key[0], key[1], check=False) for key in sorted(layer)]
    if predicate is not None:
        out = [P for P in out if predicate(P)]
    return out


def _build(word: SkeletonWord, spec: PartSpec) -> tuple[Poset, list[list[int]]]:
    """Vertices per part and the poset the compatible-listing rule produces."""
    levels: list[int] = []
    owner: list[int] = []
    part_vertices: list[list[int]] = []
    for j, (x, item) in enumerate(zip(word.letters, spec)):
        if x.kind == "c":
            vs = list(range(len(levels), len(levels) + item))
            levels.extend([x.index] * item)
            owner.extend([j] * item)
        else:
            vs = list(range(len(levels), len(levels) + item.q + item.p))
            levels.extend([x.index] * item.q + [x.index + 1] * item.p)
            owner.extend([j] * (item.q + item.p))
        part_vertices.append(vs)

    n = len(levels)
    height = max(levels, default=0)
    at_level = [0] * (height + 2)
    for v, lv in enumerate(levels):
        at_level[lv] |= 1 << v
    below = [0] * (height + 2)  # below[L] = all vertices on levels < L
    for lv in range(1, height + 2):
        below[lv] = below[lv - 1] | at_level[lv - 1]

    down = [0] * n
    seen = [0] * (height + 2)  # vertices of earlier parts, per level
    for j, (x, item) in enumerate(zip(word.letters, spec)):
        vs = part_vertices[j]
        if x.kind == "c":
            i = x.index
            m = below[i - 1] | seen[i - 1]
            for v in vs:
                down[v] = m
            for v in vs:
                seen[i] |= 1 << v
        else:
            i = x.index
            bottom, top = vs[: item.q], vs[item.q :]
            mb = below[i - 1] | seen[i - 1]
            for v in bottom:
                down[v] = mb
            mt = below[i] | seen[i]
            for a, v in enumerate(top):
                own = 0
                for b in bits(item.rows[a]):
                    own |= 1 << bottom[b]
                down[v] = mt | own
            for v in bottom:
                seen[i] |= 1 << v
            for v in top:
                seen[i + 1] |= 1 << v
    return Poset(n, down, check=False), part_vertices


def assemble(word: SkeletonWord, spec: PartSpec, verify: bool = True) -> Poset:
    """Plug parts into a skeleton.

    Vertices are numbered part by part in word order (a tangle's bottom before
    its top).  With ``verify`` the result is checked to be a transitively
    closed (3+1)-free poset whose decomposition and skeleton are exactly the
    ones supplied.
    """
    if len(spec) != len(word.letters):
        raise SpecMismatchError(f"skeleton has {len(word.letters)} letters but {len(spec)} parts were given")
    if not is_normal(word.letters) or not is_valid_skeleton(word):
        raise SpecMismatchError(f"{word} is not a valid skeleton in lex-max form")
    for x, item in zip(word.letters, spec):
        if x.kind == "c":
            if not isinstance(item, int) or isinstance(item, bool) or item < 1:
                raise SpecMismatchError(f"letter {x} needs a positive clone-set size, got {item!r}")
        elif not isinstance(item, BicolouredGraph) or not is_tangle(item):
            raise SpecMismatchError(f"letter {x} needs a tangle, got {item!r}")
    P, part_vertices = _build(word, spec)
    if not verify:
        return P
    P = Poset(P.n, P.down)  # re-validates transitivity
    assert find_3plus1(P) is None, "assembled poset contains a (3+1)"
    got_word, parts = normal_listing(P)
    assert got_word == word, f"assembled poset has skeleton {got_word}, expected {word}"
    for part, vs, item in zip(parts, part_vertices, spec):
        if isinstance(item, int):
            assert isinstance(part, CloneSet) and part.vertices == frozenset(vs)
        else:
            assert isinstance(part, Tangle) and part.vertices == frozenset(vs)
            assert canonical_bicoloured(tangle_graph(P, part)) == canonical_bicoloured(item)
    return P


_TANGLE_CACHE: dict[int, list[BicolouredGraph]] = {}


def tangles_up_to(size: int) -> list[BicolouredGraph]:
    """Every tangle class with at most ``size`` vertices, by (size, p, rows)."""
    if size not in _TANGLE_CACHE:
        out = []
        for total in range(4, size + 1):
            for p in range(2, total - 1):
                out.extend(enumerate_tangles(p, total - p))
        _TANGLE_CACHE[size] = out
    return _TANGLE_CACHE[size]


def _skeleta_for(n: int) -> list[SkeletonWord]:
    words = []
    for s in range(n // 4 + 1):
        for r in range(n - 4 * s + 1):
            if r + s == 0 and n > 0:
                continue
            words.extend(enumerate_skeleta(r, s))
    words.sort(key=lambda w: (len(w), [x.rank for x in w.letters]))
    return words


def _fillings(word: SkeletonWord, n: int, tangles: list[BicolouredGraph]) -> Iterator[list]:
    letters = word.letters
    k = len(letters)
    # minimum vertices still needed by letters i.. (1 per clone set, 4 per tangle)
    need = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        need[i] = need[i + 1] + (1 if letters[i].kind == "c" else 4)
    spec: list = []

    def fill(i: int, budget: int) -> Iterator[list]:
        if i == k:
            if budget == 0:
                yield list(spec)
            return
        room = budget - need[i + 1]
        if letters[i].kind == "c":
            sizes = [budget] if i == k - 1 else range(1, room + 1)
            for size in sizes:
                if size < 1:
                    continue
                spec.append(size)
                yield from fill(i + 1, budget - size)
                spec.pop()
        else:
            for T in tangles:
                if T.size > room:
                    break
                if i == k - 1 and T.size != budget:
                    continue
                spec.append(T)
                yield from fill(i + 1, budget - T.size)
                spec.pop()

    yield from fill(0, n)


def generate_31free(n: int, check_duplicates: bool = False) -> Iterator[Poset]:
    """Stream one poset per isomorphism class of (3+1)-free posets on n vertices.

    Order: skeleta by length then letter rank, then clone sizes and tangle
    choices lexicographically (tangles by size, then canonical rows).  With
    ``check_duplicates`` every emitted poset's canonical form is checked to be
    new, which is slow and meant for debugging.
    """
    if n > _cap(MAX_GENERATE_N):
        raise SizeError(f"generation is limited to n <= {MAX_GENERATE_N}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Poset(0, ())
        return
    tangles = tangles_up_to(n)
    seen = set()
    for word in _skeleta_for(n):
        for spec in _fillings(word, n, tangles):
            P, _ = _build(word, spec)
            if check_duplicates:
                key = canonical_form(P)
                if key in seen:
                    raise AssertionError(f"duplicate poset from skeleton {word}")
                seen.add(key)
            yield P


def count_labelled_via_burnside(n: int) -> int:
    """Labelled (3+1)-free posets as the sum of n!/|Aut(P)| over iso classes."""
    if n > _cap(MAX_BURNSIDE_N):
        raise SizeError(f"labelled counting via generation is limited to n <= {MAX_BURNSIDE_N}")
    total = 0
    fact = math.factorial(n)
    for P in generate_31free(n):
        a = aut_order(P, check=False)
        q, r = divmod(fact, a)
        assert r == 0, "automorphism count does not divide n!"
        total += q
    return total
