import random

import pytest

from ohg.builtin import EXAMPLES, load
from ohg.hypercore import Hyperedge, OrientedHypergraph, random_hypergraph


def resign(g: OrientedHypergraph, seed: int) -> OrientedHypergraph:
    """Same vertex sets and multiplicities, freshly randomized signs."""
    rng = random.Random(seed)
    edges = []
    for e in g.hyperedges:
        ins: set[int] = set()
        outs: set[int] = set()
        for v in sorted(e.vertices):
            (ins if rng.random() < 0.5 else outs).add(v)
        edges.append(Hyperedge(frozenset(ins), frozenset(outs)))
    return OrientedHypergraph(g.n, tuple(edges))


def seeded_instances(count: int, seed: int, max_n: int = 8, max_m: int = 8):
    """Deterministic stream of random instances for comparison tests."""
    for idx in range(count):
        rng = random.Random(seed * 1_000_003 + idx)
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        yield random_hypergraph(n, m, (1, n), rng.getrandbits(32))


@pytest.fixture(params=[ex.name for ex in EXAMPLES])
def builtin_example(request):
    from ohg.builtin import get

    return get(request.param)


@pytest.fixture
def ex62():
    return load("ex62")


@pytest.fixture
def ex55():
    return load("ex55")


@pytest.fixture
def ex42():
    return load("ex42")


@pytest.fixture
def loops5():
    return load("loops5")


@pytest.fixture
def allin5():
    return load("allin5")


@pytest.fixture
def ratio_sharp():
    return load("ratio-sharp")
