import random
import time
from pathlib import Path

import pytest

from tanglecount import (
    BicolouredGraph,
    Poset,
    SkeletonWord,
    assemble,
    enumerate_posets_oracle,
    find_3plus1,
    from_relations,
    generate_31free,
)

DATA = Path(__file__).parent / "data"

# The ten-vertex worked example, vertices a..j = 0..9, given by covers.
TEN_NAMES = "abcdefghij"
TEN_COVERS = [
    "ad", "ae", "af", "bf", "ag", "cg",
    "dh", "eh", "bh", "ch",
    "di", "ei", "fi", "gi",
    "hj", "fj", "gj",
]


def ten_vertex_poset() -> Poset:
    idx = {ch: i for i, ch in enumerate(TEN_NAMES)}
    return from_relations(10, [(idx[u], idx[v]) for u, v in TEN_COVERS])


def v(name: str) -> int:
    return TEN_NAMES.index(name)


def vs(names: str) -> frozenset:
    return frozenset(TEN_NAMES.index(ch) for ch in names)


TWO_PLUS_TWO = BicolouredGraph.from_edges(2, 2, [(0, 0), (1, 1)])

BIG_WORD = "c1 c2 c3 c1 t12 t12 c3 t23 c3 c1"
# 26 vertices: seven clone sets of total size 14 and three (2+2) tangles.
BIG_SPEC = [2, 3, 1, 2, TWO_PLUS_TWO, TWO_PLUS_TWO, 2, TWO_PLUS_TWO, 3, 1]


def big_poset() -> Poset:
    return assemble(SkeletonWord.parse(BIG_WORD), BIG_SPEC)


@pytest.fixture
def ten():
    return ten_vertex_poset()


@pytest.fixture(scope="session")
def free_upto_7():
    """Every (3+1)-free poset on at most 7 vertices, one per iso class."""
    out = []
    for n in range(8):
        out.extend(enumerate_posets_oracle(n, predicate=lambda P: find_3plus1(P) is None))
    return out


@pytest.fixture(scope="session")
def all_upto_6():
    return [P for n in range(7) for P in enumerate_posets_oracle(n)]


@pytest.fixture(scope="session")
def generated_pools():
    """generate_31free(n) for n = 0..11, with the wall time of each run."""
    pools, seconds = {}, {}
    for n in range(12):
        t0 = time.perf_counter()
        pools[n] = list(generate_31free(n))
        seconds[n] = time.perf_counter() - t0
    return pools, seconds


@pytest.fixture(scope="session")
def random_free_large(generated_pools):
    """10,000 seeded random draws (randomly relabelled) from the n = 8..11 streams."""
    pools, _ = generated_pools
    rng = random.Random(20240917)
    picks = []
    for _ in range(10_000):
        n = rng.randrange(8, 12)
        picks.append(random_relabel(rng.choice(pools[n]), rng))
    return picks


def random_relabel(P: Poset, rng: random.Random) -> Poset:
    perm = list(range(P.n))
    rng.shuffle(perm)
    return P.relabel(perm)


# One line per acceptance criterion, collected by tests/test_acceptance.py.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
