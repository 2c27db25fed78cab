"""Structural property checks shared by the unit and acceptance suites.

Each checker returns a list of failure strings (empty when the property holds)
so callers can report which clause broke on which poset.
"""

from tanglecount import CloneSet, Tangle, decompose, level_of
from tanglecount.poset import bits


def _incomp(x, y):
    return bool(x & ~y) and bool(y & ~x)


def _view_leq(P, a, b):
    return P.down[a] & ~P.down[b] == 0 and P.up[b] & ~P.up[a] == 0


def relation_clause_failures(P):
    """The seven clauses relating clones, the top relation and the bottom relation."""
    n, D, U = P.n, P.down, P.up
    clone = [[D[a] == D[b] and U[a] == U[b] for b in range(n)] for a in range(n)]
    ttop = [[_incomp(D[a], D[b]) for b in range(n)] for a in range(n)]
    tbot = [[_incomp(U[a], U[b]) for b in range(n)] for a in range(n)]
    bad = []
    classes = {}
    for a in range(n):
        classes.setdefault((D[a], U[a]), []).append(a)
    # (i) clones form an equivalence relation: every class is a clique and nothing links two classes
    for a in range(n):
        for b in range(n):
            if clone[a][b] != ((D[a], U[a]) == (D[b], U[b])):
                bad.append(f"(i) {a},{b}")
    for group in classes.values():
        rep = group[0]
        for a in group[1:]:
            for b in range(n):
                # (ii) and (iii): replacing a vertex by a clone keeps both relations
                if ttop[a][b] != ttop[rep][b]:
                    bad.append(f"(ii) {rep}~{a} vs {b}")
                if tbot[a][b] != tbot[rep][b]:
                    bad.append(f"(iii) {rep}~{a} vs {b}")
    for a in range(n):
        for b in range(n):
            if ttop[a][b] and U[a] != U[b]:
                bad.append(f"(iv) {a},{b}")
            if tbot[a][b] and D[a] != D[b]:
                bad.append(f"(v) {a},{b}")
            views_incomp = a != b and not _view_leq(P, a, b) and not _view_leq(P, b, a)
            if views_incomp != (ttop[a][b] or tbot[a][b]):
                bad.append(f"(vi) {a},{b}")
    for b in range(n):
        if any(ttop[a][b] for a in range(n)) and any(tbot[b][c] for c in range(n)):
            bad.append(f"(vii) at {b}")
    return bad


def listing_failures(P, parts=None):
    """Partition, level placement, listing rule, and tangle matching."""
    lev = level_of(P)
    if parts is None:
        parts = decompose(P).parts
    bad = []
    owner = {}
    for i, part in enumerate(parts):
        for v in part.vertices:
            if v in owner:
                bad.append(f"vertex {v} in two parts")
            owner[v] = i
        if isinstance(part, CloneSet):
            if {lev[v] for v in part.vertices} != {part.level}:
                bad.append(f"clone set {sorted(part.vertices)} not on level {part.level}")
            if len({(P.down[v], P.up[v]) for v in part.vertices}) != 1:
                bad.append(f"clone set {sorted(part.vertices)} has unequal views")
        else:
            i = part.levels[0]
            if {lev[v] for v in part.bottom} != {i} or {lev[v] for v in part.top} != {i + 1}:
                bad.append(f"tangle at {part.levels} straddles wrong levels")
            if len(part.top) < 2 or len(part.bottom) < 2:
                bad.append("tangle side smaller than 2")
            if not _connected(part.top, lambda a, b: _incomp(P.down[a], P.down[b])):
                bad.append("tangle top not connected")
            if not _connected(part.bottom, lambda a, b: _incomp(P.up[a], P.up[b])):
                bad.append("tangle bottom not connected")
            if not _has_matching_2plus2(P, part):
                bad.append("tangle sides not linked by a 2+2")
    if len(owner) != P.n:
        bad.append("parts do not cover the vertices")
        return bad
    for a in range(P.n):
        for b in range(P.n):
            i, j = owner[a], owner[b]
            if i != j:
                expect = lev[a] <= lev[b] - 2 or (lev[a] == lev[b] - 1 and i < j)
                if P.less(a, b) != expect:
                    bad.append(f"listing rule fails for {a}<{b}")
    return bad


def _connected(vertices, rel):
    vertices = list(vertices)
    if not vertices:
        return False
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        a = stack.pop()
        for b in vertices:
            if b not in seen and rel(a, b):
                seen.add(b)
                stack.append(b)
    return len(seen) == len(vertices)


def _has_matching_2plus2(P, T):
    for a in T.top:
        for a2 in T.top:
            for b in T.bottom:
                for b2 in T.bottom:
                    if (
                        P.less(b, a) and P.less(b2, a2)
                        and not P.less(b, a2) and not P.less(b2, a)
                    ):
                        return True
    return False


def level_prop_failures(P):
    """Two levels apart forces a relation; same-level pairs have nested downsets or upsets."""
    lev = level_of(P)
    bad = []
    for a in range(P.n):
        for b in range(P.n):
            if lev[a] <= lev[b] - 2 and not P.less(a, b):
                bad.append(f"two-levels fails for {a},{b}")
            if lev[a] == lev[b] and a < b:
                Ua, Ub, Da, Db = P.up[a], P.up[b], P.down[a], P.down[b]
                if not (Ua & ~Ub == 0 or Da & ~Db == 0) or not (Ub & ~Ua == 0 or Db & ~Da == 0):
                    bad.append(f"partial converse fails for {a},{b}")
    return bad


def tangle_sides(parts):
    tops = [p.top for p in parts if isinstance(p, Tangle)]
    bottoms = [p.bottom for p in parts if isinstance(p, Tangle)]
    return tops, bottoms


__all__ = ["relation_clause_failures", "listing_failures", "level_prop_failures", "tangle_sides", "bits"]
