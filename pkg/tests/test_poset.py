import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tanglecount import (
    CycleError,
    Poset,
    antichain,
    chain,
    downset,
    find_2plus2,
    find_3plus1,
    from_matrix,
    from_relations,
    is_31_free,
    levels,
    upset,
)
from tanglecount.poset import level_of

from conftest import v, vs


def naive_3plus1(P):
    for a, b, c, d in itertools.permutations(range(P.n), 4):
        if P.less(a, b) and P.less(b, c) and all(P.incomparable(d, x) for x in (a, b, c)):
            return True
    return False


def naive_2plus2(P):
    for a, b, c, d in itertools.permutations(range(P.n), 4):
        if P.less(a, b) and P.less(c, d) and all(P.incomparable(x, y) for x in (a, b) for y in (c, d)):
            return True
    return False


@st.composite
def posets(draw, max_n=7):
    # random upper-triangular relation, closed, then randomly relabelled
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if draw(st.booleans())]
    P = from_relations(n, pairs)
    perm = draw(st.permutations(range(n)))
    return P.relabel(perm)


def test_from_relations_examples():
    A = from_relations(3, [])
    assert A == antichain(3)
    assert not any(any(row) for row in A.lt)
    C = from_relations(3, [(0, 1), (1, 2)])
    assert C.lt[0][2]
    assert C == chain(3)
    with pytest.raises(CycleError):
        from_relations(2, [(0, 1), (1, 0)])
    with pytest.raises(CycleError):
        from_relations(1, [(0, 0)])
    with pytest.raises(IndexError):
        from_relations(2, [(0, 2)])


def test_constructor_rejects_unclosed_relation():
    with pytest.raises(ValueError):
        Poset(3, [0, 0b001, 0b010])  # 0<1<2 without 0<2


def test_from_matrix_round_trip():
    P = chain(4)
    assert from_matrix(P.lt) == P


def test_ten_vertex_down_and_up(ten):
    assert downset(ten, v("d")) == vs("a")
    assert upset(ten, v("f")) == vs("ij")
    assert downset(ten, v("a")) == frozenset()
    assert downset(ten, v("j")) == vs("abcdefgh")
    with pytest.raises(IndexError):
        downset(ten, 10)


def test_patterns_on_small_examples(ten):
    assert find_3plus1(chain(4)) is None
    P = from_relations(4, [(0, 1), (1, 2)])
    w = find_3plus1(P)
    assert w.chain == (0, 1, 2) and w.isolated == 3
    assert find_3plus1(ten) is None
    assert find_2plus2(ten) is not None
    w = find_2plus2(from_relations(4, [(0, 1), (2, 3)]))
    assert w.kind == "2+2"
    assert sorted(w.pairs) == [(0, 1), (2, 3)]


def test_empty_poset_is_legal():
    E = Poset(0, ())
    assert is_31_free(E)
    assert levels(E) == []
    assert E.covers() == []


def test_pattern_finders_match_naive_oracle(all_upto_6):
    for P in all_upto_6:
        assert (find_3plus1(P) is not None) == naive_3plus1(P)
        assert (find_2plus2(P) is not None) == naive_2plus2(P)


@given(posets())
def test_witnesses_are_genuine(P):
    w = find_3plus1(P)
    if w is not None:
        a, b, c = w.chain
        assert P.less(a, b) and P.less(b, c)
        assert all(P.incomparable(w.isolated, x) for x in w.chain)
    w = find_2plus2(P)
    if w is not None:
        (a, b), (c, d) = w.pairs
        assert P.less(a, b) and P.less(c, d)
        assert all(P.incomparable(x, y) for x in (a, b) for y in (c, d))


@given(posets())
def test_relation_invariants(P):
    lt = P.lt
    for a in range(P.n):
        assert not lt[a][a]
        for b in range(P.n):
            assert not (lt[a][b] and lt[b][a])
            for c in range(P.n):
                if lt[a][b] and lt[b][c]:
                    assert lt[a][c]


@given(posets())
def test_covers_generate_the_order(P):
    assert from_relations(P.n, P.covers()) == P


def test_levels_examples(ten):
    assert levels(antichain(3)) == [frozenset({0, 1, 2})]
    assert levels(chain(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert levels(ten) == [vs("abc"), vs("defg"), vs("hi"), vs("j")]


@given(posets())
def test_levels_partition_and_cover(P):
    L = levels(P)
    seen = set()
    for k, layer in enumerate(L):
        assert layer and not (layer & seen)
        for b in layer:
            # every vertex above level 1 has something strictly below it one level down
            if k:
                assert any(P.less(a, b) for a in L[k - 1])
            assert all(not P.less(a, b) for a in layer)
        seen |= layer
    assert seen == set(range(P.n))
    lev = level_of(P)
    for a, b in P.relations():
        assert lev[a] < lev[b]


def test_relabel_moves_vertices():
    P = from_relations(3, [(0, 1)])
    Q = P.relabel([1, 2, 0])
    assert Q.less(1, 2)
    assert Q.relations() == [(1, 2)]


def test_induced_subposet(ten):
    Q = ten.induced([v("b"), v("c"), v("f"), v("g")])
    assert sorted(Q.relations()) == [(0, 2), (1, 3)]


def test_random_posets_closed_under_relabel():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 8)
        P = from_relations(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.3])
        perm = list(range(n))
        rng.shuffle(perm)
        Q = P.relabel(perm)
        Q._check()
        assert len(Q.relations()) == len(P.relations())
        assert is_31_free(Q) == is_31_free(P)
