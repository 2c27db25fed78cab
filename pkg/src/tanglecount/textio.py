"""Plain-text poset files and generation streams.

A record looks like::

    poset 4
    a b c d
    a < b < c
    # comments and blank lines are ignored

The header gives the vertex count.  A line of bare names declares vertices;
a line ``u < v`` (chains allowed) adds relations.  Names are alphanumeric and
take indices in order of first appearance.  A stream is a sequence of records,
each starting at its ``poset`` header; the writer separates them with blank
lines.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, ParseError
from .poset import Poset, from_relations

__all__ = ["parse_poset", "format_poset", "parse_stream", "format_stream", "write_stream"]

_NAME = re.compile(r"^[A-Za-z0-9_]+$")
_HEADER = re.compile(r"^poset\s+(\d+)\s*$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_record(lines: Sequence[tuple[int, str]]) -> tuple[Poset, list[str]]:
    lineno, header = lines[0]
    m = _HEADER.match(header)
    if not m:
        raise ParseError("expected header 'poset <n>'", lineno)
    n = int(m.group(1))
    index: dict[str, int] = {}
    pairs = []

    def name_index(tok: str, at: int) -> int:
        if not _NAME.match(tok):
            raise ParseError(f"bad vertex name {tok!r}", at)
        if tok not in index:
            if len(index) == n:
                raise ParseError(f"more than {n} vertex names", at)
            index[tok] = len(index)
        return index[tok]

    for at, line in lines[1:]:
        if "<" in line:
            toks = [tok.strip() for tok in line.split("<")]
            if any(not tok or " " in tok for tok in toks):
                raise ParseError(f"malformed relation {line!r}", at)
            ids = [name_index(tok, at) for tok in toks]
            pairs.extend(zip(ids, ids[1:]))
        else:
            for tok in line.split():
                name_index(tok, at)
    names = sorted(index, key=index.get)
    taken = set(names)
    k = 0
    while len(names) < n:
        auto = f"v{k}"
        k += 1
        if auto not in taken:
            names.append(auto)
            taken.add(auto)
    try:
        P = from_relations(n, pairs)
    except CycleError as e:
        raise ParseError(f"relations are not a strict partial order: {e}", lineno) from None
    return P, names


def _records(text: str) -> Iterator[list[tuple[int, str]]]:
    current: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("poset"):
            if current:
                yield current
            current = [(lineno, line)]
        elif not current:
            raise ParseError("content before the first 'poset' header", lineno)
        else:
            current.append((lineno, line))
    if current:
        yield current


def parse_poset(text: str) -> tuple[Poset, list[str]]:
    """Parse a single record; returns the poset and its vertex names by index."""
    records = list(_records(text))
    if len(records) != 1:
        raise ParseError(f"expected exactly one poset record, found {len(records)}")
    return _parse_record(records[0])


def parse_stream(text: str) -> list[tuple[Poset, list[str]]]:
    return [_parse_record(r) for r in _records(text)]


def format_poset(P: Poset, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [str(v) for v in range(P.n)]
    lines = [f"poset {P.n}"]
    if P.n:
        lines.append(" ".join(names))
    lines.extend(f"{names[a]} < {names[b]}" for a, b in P.covers())
    return "\n".join(lines) + "\n"


def format_stream(posets: Iterable[Poset]) -> Iterator[str]:
    """Yield stream records, each followed by a separating blank line."""
    for P in posets:
        yield format_poset(P) + "\n"


def write_stream(posets: Iterable[Poset], fh) -> int:
    count = 0
    for rec in format_stream(posets):
        fh.write(rec)
        count += 1
    return count
