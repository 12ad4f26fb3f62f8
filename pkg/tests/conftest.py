"""Shared corpora: exhaustive small-graph catalogs and the 200-graph sweep set."""

import random
from itertools import combinations

import pytest

import ascembed as A

SEED = 20260817


def pair_graph(n, code):
    """Graph on n vertices whose edge set is the bits of code over the
    C(n,2) pairs in (a, b), a < b, colex order."""
    edges = []
    for i, (a, b) in enumerate((a, b) for b in range(n) for a in range(b)):
        if code >> i & 1:
            edges.append((a, b))
    return A.Graph(n, edges)


def iso_classes(n, keep):
    """Canonical representatives of all order-n graphs passing keep()."""
    out = {}
    for code in range(1 << (n * (n - 1) // 2)):
        g = pair_graph(n, code)
        if keep(g):
            c = A.canonical_form(g)
            out.setdefault(c.rows, c)
    return list(out.values())


def random_connected(rng, n):
    """Random connected graph: a random spanning chain plus random extras."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set(zip(order, order[1:]))
    extra = rng.randrange(0, n * (n - 1) // 2 - (n - 1) + 1)
    pool = [e for e in combinations(range(n), 2) if e not in edges and (e[1], e[0]) not in edges]
    edges.update(rng.sample(pool, min(extra, len(pool))))
    return A.Graph(n, edges)


def random_any(rng, n):
    """Random graph with no connectivity guarantee (isolated vertices allowed)."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.25]
    return A.Graph(n, edges)


def family_instances():
    spec = [
        ("path", [(k,) for k in range(1, 10)]),
        ("cycle", [(k,) for k in range(3, 10)]),
        ("complete", [(k,) for k in range(1, 7)]),
        ("star", [(k,) for k in range(1, 6)]),
        ("complete_bipartite", [(2, 2), (2, 3), (3, 3)]),
        ("cocktail_party", [(2,), (3,), (4,)]),
        ("k1_join_matchings", [(1,), (2,), (3,)]),
        ("caterpillar", [(10, 2), (10, 5), (12, 6), (14, 2)]),
        ("gadget_c_star", [(4,), (6,), (8,)]),
        ("gadget_c_prime", [(5,), (7,), (9,)]),
        ("gadget_c8_double", [()]),
        ("petersen", [()]),
    ]
    return [A.build_family(kind, *params) for kind, cases in spec for params in cases]


@pytest.fixture(scope="session")
def connected_n_le_5():
    out = []
    for n in range(1, 6):
        out.extend(iso_classes(n, A.is_connected))
    assert len(out) == 31  # 1 + 1 + 2 + 6 + 21 connected classes
    return out


@pytest.fixture(scope="session")
def corpus200(connected_n_le_5):
    graphs = list(connected_n_le_5) + family_instances()
    rng = random.Random(SEED)
    sizes = [6, 7, 8, 9, 10, 11, 12]
    i = 0
    while len(graphs) < 188:
        graphs.append(random_connected(rng, sizes[i % len(sizes)]))
        i += 1
    while len(graphs) < 200:
        graphs.append(random_any(rng, sizes[i % len(sizes)]))
        i += 1
    assert len(graphs) == 200
    return graphs


@pytest.fixture(scope="session")
def diam2_n_le_6():
    def keep(g):
        return A.is_connected(g) and A.ecc_profile(g).diameter == 2

    out = []
    for n in range(3, 7):
        out.extend(iso_classes(n, keep))
    return out
