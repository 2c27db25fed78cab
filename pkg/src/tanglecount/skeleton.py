"""Skeleton words in the partially commuting monoid on clone and tangle letters.

Letters are ``c_i`` (a clone set on level i) and ``t_{i,i+1}`` (a tangle on
levels i and i+1), totally ordered by c1 < t12 < c2 < t23 < ...  A word is
kept in its lexicographically maximal representative: no adjacent pair of
letters both commutes and increases.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import MalformedPathError, ParseError

__all__ = [
    "Letter",
    "SkeletonWord",
    "Step",
    "c",
    "t",
    "commutes",
    "normalize",
    "normalize_listing",
    "is_normal",
    "is_valid_skeleton",
    "to_dyck",
    "from_dyck",
    "enumerate_skeleta",
    "bicoloured_skeleton_count",
    "parse_word",
]


@dataclass(frozen=True)
class Letter:
    kind: str  # "c" or "t"
    index: int

    def __post_init__(self):
        if self.kind not in ("c", "t"):
            raise ValueError(f"letter kind must be 'c' or 't', not {self.kind!r}")
        if self.index < 1:
            raise ValueError("letter index must be >= 1")

    @property
    def rank(self) -> int:
        """Position in the order c1 < t12 < c2 < t23 < ..."""
        return 2 * self.index - 1 if self.kind == "c" else 2 * self.index

    @property
    def is_clone(self) -> bool:
        return self.kind == "c"

    @property
    def top_level(self) -> int:
        return self.index if self.kind == "c" else self.index + 1

    def __str__(self) -> str:
        if self.kind == "c":
            return f"c{self.index}"
        return f"t{self.index}{self.index + 1}"

    def __repr__(self) -> str:
        return str(self)


def c(i: int) -> Letter:
    return Letter("c", i)


def t(i: int) -> Letter:
    return Letter("t", i)


def commutes(x: Letter, y: Letter) -> bool:
    if x.kind == "c" and y.kind == "c":
        return abs(x.index - y.index) >= 2
    if x.kind == "t" and y.kind == "t":
        return abs(x.index - y.index) >= 3
    ci, tj = (x.index, y.index) if x.kind == "c" else (y.index, x.index)
    return ci <= tj - 2 or ci >= tj + 3


def _forbidden_pair(x: Letter, y: Letter) -> bool:
    return x.rank < y.rank and commutes(x, y)


@dataclass(frozen=True)
class SkeletonWord:
    """A monoid element held as its lex-max representative."""

    letters: tuple[Letter, ...] = ()

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def clone_count(self) -> int:
        return sum(1 for x in self.letters if x.kind == "c")

    @property
    def tangle_count(self) -> int:
        return sum(1 for x in self.letters if x.kind == "t")

    @classmethod
    def parse(cls, text: str) -> "SkeletonWord":
        return normalize(parse_word(text))


_TOKEN = re.compile(r"^([ct])(\d+)$")


def _parse_letter(token: str) -> Letter:
    m = _TOKEN.match(token)
    if not m:
        raise ParseError(f"bad skeleton letter {token!r}")
    kind, digits = m.groups()
    if kind == "c":
        return c(int(digits))
    # t<i><i+1>: find the split where the second half is the successor
    for cut in range(1, len(digits)):
        head, tail = digits[:cut], digits[cut:]
        if head[0] != "0" and int(head) >= 1 and tail == str(int(head) + 1):
            return t(int(head))
    raise ParseError(f"bad tangle letter {token!r}; expected t<i><i+1> such as t12")


def parse_word(text: str) -> list[Letter]:
    return [_parse_letter(tok) for tok in text.split()]


def normalize_listing(letters: Sequence[Letter], items: Sequence | None = None):
    """Bring ``letters`` to lex-max form, permuting ``items`` alongside.

    Only adjacent commuting increasing pairs are swapped, so equal letters
    keep their relative order.  Returns ``(SkeletonWord, list_of_items)``.
    """
    w = list(letters)
    payload = list(items) if items is not None else [None] * len(w)
    if len(payload) != len(w):
        raise ValueError("items must align with letters")
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if _forbidden_pair(w[i], w[i + 1]):
                w[i], w[i + 1] = w[i + 1], w[i]
                payload[i], payload[i + 1] = payload[i + 1], payload[i]
                changed = True
    return SkeletonWord(tuple(w)), payload


def normalize(letters: Iterable[Letter] | SkeletonWord) -> SkeletonWord:
    word, _ = normalize_listing(list(letters))
    return word


def is_normal(letters: Sequence[Letter]) -> bool:
    return not any(_forbidden_pair(x, y) for x, y in zip(letters, letters[1:]))


def is_valid_skeleton(w0: SkeletonWord) -> bool:
    """Skeleton of some (3+1)-free poset; checkable on the lex-max word alone."""
    letters = w0.letters
    if not letters:
        return True
    first = letters[0]
    if first.index != 1:
        return False
    return not any(x == y and x.kind == "c" for x, y in zip(letters, letters[1:]))


class Step(enum.Enum):
    UP = "U"
    DOWN = "D"
    DOUBLE_UP = "UU"

    def __repr__(self) -> str:
        return self.value


def to_dyck(w0: SkeletonWord) -> list[Step]:
    if not is_valid_skeleton(w0):
        raise ValueError(f"{w0} is not a valid skeleton")
    path: list[Step] = []
    height = 0
    for x in w0.letters:
        end = x.top_level
        start = end - (1 if x.kind == "c" else 2)
        if start > height:
            raise ValueError(f"{w0} is not in lex-max form")
        path.extend([Step.DOWN] * (height - start))
        path.append(Step.UP if x.kind == "c" else Step.DOUBLE_UP)
        height = end
    path.extend([Step.DOWN] * height)
    return path


def from_dyck(path: Sequence[Step]) -> SkeletonWord:
    height = 0
    letters = []
    for k, step in enumerate(path):
        if step is Step.UP:
            height += 1
            letters.append(c(height))
        elif step is Step.DOUBLE_UP:
            height += 2
            letters.append(t(height - 1))
        elif step is Step.DOWN:
            height -= 1
            if height < 0:
                raise MalformedPathError(f"path goes below the axis at step {k}")
        else:
            raise MalformedPathError(f"unknown step {step!r}")
        if k >= 2 and (path[k - 2], path[k - 1], step) == (Step.UP, Step.DOWN, Step.UP):
            raise MalformedPathError(f"undecorated up-down-up at step {k - 2}")
    if height != 0:
        raise MalformedPathError(f"path ends at height {height}, not 0")
    word = SkeletonWord(tuple(letters))
    assert is_normal(word.letters)
    return word


def _successors(prev: Letter | None, allow_t: bool, allow_c: bool) -> list[Letter]:
    if prev is None:
        cands = [c(1), t(1)]
    else:
        top = prev.top_level
        cands = [c(j) for j in range(1, top + 2)] + [t(j) for j in range(1, top + 2)]
    out = []
    for y in cands:
        if (y.kind == "c" and not allow_c) or (y.kind == "t" and not allow_t):
            continue
        if prev is not None and (_forbidden_pair(prev, y) or (prev == y and y.kind == "c")):
            continue
        out.append(y)
    return out


@lru_cache(maxsize=None)
def enumerate_skeleta(r: int, s: int) -> tuple[SkeletonWord, ...]:
    """All valid skeleta with ``r`` clone letters and ``s`` tangle letters.

    Words are built left to right from the local characterization of lex-max
    representatives, so each monoid element appears exactly once.  The result
    is sorted by letter rank sequence.
    """
    out: list[SkeletonWord] = []
    word: list[Letter] = []

    def grow(rr: int, ss: int) -> None:
        if rr == 0 and ss == 0:
            out.append(SkeletonWord(tuple(word)))
            return
        prev = word[-1] if word else None
        for y in _successors(prev, ss > 0, rr > 0):
            word.append(y)
            grow(rr - (y.kind == "c"), ss - (y.kind == "t"))
            word.pop()

    if r < 0 or s < 0:
        return ()
    grow(r, s)
    out.sort(key=lambda w: [x.rank for x in w.letters])
    return tuple(out)


@lru_cache(maxsize=None)
def bicoloured_skeleton_count(r1: int, r2: int, s: int) -> int:
    """Strings over {c1, c2, t12} with the given letter counts and no c1c1 or c2c2."""

    @lru_cache(maxsize=None)
    def count(a: int, b: int, k: int, last: str) -> int:
        if a == b == k == 0:
            return 1
        total = 0
        if a and last != "c1":
            total += count(a - 1, b, k, "c1")
        if b and last != "c2":
            total += count(a, b - 1, k, "c2")
        if k:
            total += count(a, b, k - 1, "t")
        return total

    if min(r1, r2, s) < 0:
        return 0
    return count(r1, r2, s, "")
