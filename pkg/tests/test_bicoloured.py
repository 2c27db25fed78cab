import itertools

import pytest

from tanglecount import (
    BicolouredGraph,
    SizeError,
    Tangle,
    b_unl_table,
    canonical_bicoloured,
    colour_aut_order,
    decompose,
    enumerate_bicoloured,
    enumerate_tangles,
    is_tangle,
)


def all_labelled(p, q):
    for bitsets in range(1 << (p * q)):
        rows = tuple((bitsets >> (a * q)) & ((1 << q) - 1) for a in range(p))
        yield BicolouredGraph(p, q, rows)


def brute_key(G):
    """Smallest edge-set encoding over all top and bottom relabellings."""
    best = None
    for sp in itertools.permutations(range(G.p)):
        for sq in itertools.permutations(range(G.q)):
            key = tuple(sorted((sp[a], sq[b]) for a, b in G.edges()))
            if best is None or key < best:
                best = key
    return best


def brute_aut(G):
    edges = set(G.edges())
    return sum(
        {(sp[a], sq[b]) for a, b in edges} == edges
        for sp in itertools.permutations(range(G.p))
        for sq in itertools.permutations(range(G.q))
    )


SMALL_SHAPES = [(p, q) for p in range(5) for q in range(5) if p + q <= 6 and p * q <= 9]


def test_enumeration_matches_brute_force_classes():
    for p, q in SMALL_SHAPES:
        classes = {}
        for G in all_labelled(p, q):
            classes.setdefault(brute_key(G), set()).add(canonical_bicoloured(G))
        # canonical form is constant on classes and separates them
        assert all(len(reps) == 1 for reps in classes.values())
        assert len({next(iter(r)) for r in classes.values()}) == len(classes)
        got = enumerate_bicoloured(p, q)
        assert len(got) == len(classes) == b_unl_table(p, q), (p, q)
        assert {canonical_bicoloured(G) for G in got} == set(got)


def test_small_counts():
    assert len(enumerate_bicoloured(1, 1)) == 2
    assert len(enumerate_bicoloured(2, 2)) == 7
    assert len(enumerate_bicoloured(0, 3)) == 1


def test_transpose_and_poset():
    G = BicolouredGraph.from_edges(2, 3, [(0, 0), (1, 2)])
    assert G.transpose().transpose() == G
    assert G.transpose().rows == (0b01, 0b00, 0b10)
    P = G.to_poset()
    assert sorted(P.relations()) == [(0, 3), (2, 4)]
    assert BicolouredGraph.from_matrix(G.adj) == G
    with pytest.raises(ValueError):
        BicolouredGraph(1, 1, (0b10,))


def test_is_tangle_examples():
    assert is_tangle(BicolouredGraph.from_edges(2, 2, [(0, 0), (1, 1)]))
    assert not is_tangle(BicolouredGraph(2, 2, (0b11, 0b11)))
    for G in all_labelled(1, 3):
        assert not is_tangle(G)
    for G in all_labelled(3, 1):
        assert not is_tangle(G)


def test_enumerate_tangles_examples():
    assert len(enumerate_tangles(2, 2)) == 1
    assert len(enumerate_tangles(3, 2)) == 1
    assert len(enumerate_tangles(2, 3)) == 1
    assert enumerate_tangles(2, 1) == ()
    with pytest.raises(SizeError):
        enumerate_tangles(7, 6)


def test_tangle_counts_match_filtered_brute_force():
    for p, q in SMALL_SHAPES:
        classes = {brute_key(G) for G in all_labelled(p, q) if is_tangle(G)}
        assert len(enumerate_tangles(p, q)) == len(classes)


def test_tangles_have_no_isolated_or_full_vertices():
    for p in range(2, 7):
        for q in range(2, 9 - p):
            for G in enumerate_tangles(p, q):
                full = (1 << q) - 1
                assert all(0 < r < full for r in G.rows)
                assert all(0 < col < (1 << p) - 1 for col in G.columns)


def test_is_tangle_agrees_with_decompose():
    for p in range(0, 6):
        for q in range(0, 8 - p):
            for G in enumerate_bicoloured(p, q):
                parts = decompose(G.to_poset()).parts
                single = len(parts) == 1 and isinstance(parts[0], Tangle)
                assert is_tangle(G) == single, G


def test_colour_aut_order_matches_brute_force():
    for p, q in SMALL_SHAPES:
        for G in enumerate_bicoloured(p, q):
            assert colour_aut_order(G) == brute_aut(G), G
    for p, q in [(3, 4), (4, 3), (4, 4)]:
        for G in enumerate_tangles(p, q):
            assert colour_aut_order(G) == brute_aut(G), G


def test_colour_aut_order_examples():
    assert colour_aut_order(BicolouredGraph.from_edges(2, 2, [(0, 0), (1, 1)])) == 2
    assert colour_aut_order(BicolouredGraph(2, 3, (0b111, 0b111))) == 12
    assert colour_aut_order(BicolouredGraph(0, 0, ())) == 1
