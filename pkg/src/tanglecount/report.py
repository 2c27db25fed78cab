"""Structural analysis report for a single poset."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .poset import Poset, find_2plus2, find_3plus1, levels as poset_levels
from .tangles import CloneSet, aut_order, altitude, decompose, view
from .skeleton import normalize

__all__ = ["AnalysisReport", "analyze"]


@dataclass
class AnalysisReport:
    n: int
    vertices: list[str]
    is_31_free: bool
    is_22_free: bool
    levels: list[list[str]]
    altitudes: dict[str, int]
    witness_31: dict | None = None
    views: list[dict] | None = None
    parts: list[dict] | None = None
    skeleton: str | None = None
    aut_order: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"vertices: {self.n}", f"(3+1)-free: {self.is_31_free}", f"(2+2)-free: {self.is_22_free}"]
        lines.append("levels: " + " | ".join(" ".join(L) for L in self.levels))
        if self.witness_31 is not None:
            w = self.witness_31
            lines.append(f"(3+1) witness: {' < '.join(w['chain'])} with {w['isolated']} isolated")
        if self.parts is not None:
            lines.append(f"skeleton: {self.skeleton}")
            lines.append(f"|Aut|: {self.aut_order}")
            lines.append("compatible listing:")
            for part in self.parts:
                if part["kind"] == "clone":
                    lines.append(f"  c{part['level']}  {{{' '.join(part['vertices'])}}}")
                else:
                    i, j = part["levels"]
                    lines.append(
                        f"  t{i}{j}  top {{{' '.join(part['top'])}}} bottom {{{' '.join(part['bottom'])}}}"
                    )
        lines.append("altitudes: " + " ".join(f"{v}={a}" for v, a in self.altitudes.items()))
        return "\n".join(lines) + "\n"


def analyze(P: Poset, names: Sequence[str] | None = None) -> AnalysisReport:
    if names is None:
        names = [str(v) for v in range(P.n)]
    names = list(names)

    def named(vs) -> list[str]:
        return [names[v] for v in sorted(vs)]

    w31 = find_3plus1(P)
    report = AnalysisReport(
        n=P.n,
        vertices=names,
        is_31_free=w31 is None,
        is_22_free=find_2plus2(P) is None,
        levels=[named(L) for L in poset_levels(P)],
        altitudes={names[v]: altitude(P, v) for v in range(P.n)},
    )
    if w31 is not None:
        report.witness_31 = {"chain": [names[v] for v in w31.chain], "isolated": names[w31.isolated]}
        report.notes.append("not (3+1)-free: tangle decomposition skipped")
        return report

    report.views = [
        {"vertex": names[v], "down": named(vw.down), "codown": named(vw.codown)}
        for v in range(P.n)
        for vw in [view(P, v)]
    ]
    d = decompose(P, check=False)
    parts = []
    for part in d.parts:
        if isinstance(part, CloneSet):
            parts.append({"kind": "clone", "level": part.level, "vertices": named(part.vertices)})
        else:
            parts.append(
                {"kind": "tangle", "levels": list(part.levels), "top": named(part.top), "bottom": named(part.bottom)}
            )
    report.parts = parts
    report.skeleton = str(normalize(d.word))
    report.aut_order = aut_order(P, check=False)
    return report
