"""Embedding constructions: added counts, self-verification, recognizers, dispatch."""

import dataclasses
import random

import pytest

import ascembed as A
from ascembed.constructions import METHODS, embed_2sc_three, embed_triple_isolated, embed_triple_p3

from test_analysis import APEX_P3


def _counts(emb, method, added, r):
    assert emb.method == method
    assert len(emb.added) == added
    assert emb.r == r
    assert emb.host.n == emb.guest.n + added
    # independent re-checks on top of the builder's own verification
    assert A.induced_check(emb.host, emb.map, emb.guest)
    assert A.is_r_asc(emb.host, r)


def test_embed_hat():
    _counts(A.embed_hat(A.build_family("complete", 1), 2), "hat", 4, 2)
    _counts(A.embed_hat(A.build_family("path", 3), 3), "hat", 6, 3)
    _counts(A.embed_hat(A.build_family("cycle", 5), 4), "hat", 8, 4)
    emb = A.embed_hat(A.Graph(4, [(0, 1)]), 3)  # disconnected guests allowed
    _counts(emb, "hat", 6, 3)
    roles = [role for role, _ in emb.added]
    assert roles[0] == "w" and roles[-1] == "w'"
    with pytest.raises(A.PreconditionError):
        A.embed_hat(A.build_family("path", 3), 1)


def test_embed_connected():
    _counts(A.embed_connected(A.build_family("complete", 2), 3), "connected", 5, 3)
    _counts(A.embed_connected(A.build_family("path", 3), 3), "connected", 5, 3)
    _counts(A.embed_connected(A.build_family("cycle", 5), 4), "connected", 7, 4)
    with pytest.raises(A.PreconditionError):
        A.embed_connected(A.Graph(4, [(0, 1)]), 3)
    with pytest.raises(A.PreconditionError):
        A.embed_connected(A.build_family("complete", 1), 3)
    with pytest.raises(A.PreconditionError):
        A.embed_connected(A.build_family("complete", 2), 2)


def test_embed_general():
    _counts(A.embed_general(A.Graph(2), 3), "general", 5, 3)  # two isolated vertices
    _counts(A.embed_general(A.Graph(3, [(1, 2)]), 3), "general", 5, 3)  # one isolated
    _counts(A.embed_general(A.Graph(4, [(0, 1), (2, 3)]), 3), "general", 5, 3)
    _counts(A.embed_general(A.build_family("cycle", 5), 4), "general", 7, 4)
    with pytest.raises(A.PreconditionError):
        A.embed_general(A.build_family("complete", 1), 3)
    with pytest.raises(A.PreconditionError):
        A.embed_general(A.Graph(2), 2)


def test_embed_far_vertex_guests():
    # guests with vertices at distance >= 3 from the anchor edge exercise the
    # far-class wiring; each of these once produced a non-ASC host
    for r in (4, 5):
        _counts(A.embed_connected(A.build_family("path", 5), r), "connected", 2 * r - 1, r)
        _counts(A.embed_general(A.build_family("path", 7), r), "general", 2 * r - 1, r)
    _counts(A.embed_connected(A.build_family("cycle", 8), 3), "connected", 5, 3)
    # N_2 vertex adjacent to a far vertex and to both anchor neighborhoods
    tangled = A.Graph(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
    _counts(A.embed_connected(tangled, 3), "connected", 5, 3)
    two_paths = A.Graph(10, [(i, i + 1) for i in range(4)] + [(i, i + 1) for i in range(5, 9)])
    for r in (3, 4):
        _counts(A.embed_general(two_paths, r), "general", 2 * r - 1, r)


def test_embed_complete():
    one = A.embed_complete(1)
    _counts(one, "complete", 6, 3)
    assert one.host.n == 7
    _counts(A.embed_complete(2), "complete", 5, 3)
    _counts(A.embed_complete(5), "complete", 5, 3)
    with pytest.raises(A.PreconditionError):
        A.embed_complete(0)


def test_embed_diam2_four():
    _counts(A.embed_diam2_four(A.build_family("complete_bipartite", 2, 3)), "diam2_four", 4, 3)
    _counts(A.embed_diam2_four(A.build_family("path", 3)), "diam2_four", 4, 3)
    _counts(A.embed_diam2_four(A.build_family("cycle", 5)), "diam2_four", 4, 3)
    for bad in (A.build_family("path", 5), A.build_family("complete", 3)):
        with pytest.raises(A.PreconditionError):
            A.embed_diam2_four(bad)


def test_three_vertex_constructions():
    _counts(embed_2sc_three(A.build_family("petersen")), "2sc_three", 3, 3)
    _counts(embed_triple_isolated(A.build_family("star", 3)), "triple_isolated", 3, 3)
    _counts(embed_triple_p3(APEX_P3), "triple_p3", 3, 3)
    with pytest.raises(A.PreconditionError):
        embed_2sc_three(A.build_family("cycle", 4))
    with pytest.raises(A.PreconditionError):
        embed_triple_isolated(A.build_family("petersen"))
    with pytest.raises(A.PreconditionError):
        embed_triple_p3(A.build_family("star", 3))


def test_path_and_cycle_tables():
    path_added = {1: 6, 2: 5, 3: 4, 4: 3, 5: 2, 6: 1, 7: 1, 8: 1, 9: 2, 10: 2, 11: 2, 12: 2}
    for n, added in path_added.items():
        _counts(A.embed_path(n), "path", added, 3)
    cycle_added = {3: 5, 4: 4, 5: 3, 6: 1, 7: 1, 8: 1, 9: 2, 10: 2, 11: 2, 12: 2}
    for n, added in cycle_added.items():
        _counts(A.embed_cycle(n), "cycle", added, 3)
    with pytest.raises(A.PreconditionError):
        A.embed_path(0)
    with pytest.raises(A.PreconditionError):
        A.embed_cycle(2)


def test_embed_tree_caterpillar():
    for n in (10, 12, 14):
        for k in range(2, n - 1):
            _counts(A.embed_tree_caterpillar(n, k), "caterpillar", 2, 3)
    with pytest.raises(A.PreconditionError):
        A.embed_tree_caterpillar(9, 3)
    with pytest.raises(A.PreconditionError):
        A.embed_tree_caterpillar(10, 9)


def test_recognizers_accept_any_labeling():
    rng = random.Random(5)
    for family, method in (
        (A.build_family("path", 9), "path"),
        (A.build_family("cycle", 7), "cycle"),
        (A.build_family("complete", 4), "complete"),
        (A.build_family("caterpillar", 12, 6), "caterpillar"),
    ):
        sigma = list(range(family.n))
        rng.shuffle(sigma)
        guest = family.permuted(sigma)
        emb = A.embed_by_method(guest, method)
        assert emb.guest == guest and emb.method == method
        assert A.induced_check(emb.host, emb.map, guest)
    with pytest.raises(A.PreconditionError):
        A.embed_by_method(A.build_family("cycle", 5), "path")
    with pytest.raises(A.PreconditionError):
        A.embed_by_method(A.build_family("path", 5), "caterpillar")


def test_embed_by_method_guards():
    p9 = A.build_family("path", 9)
    with pytest.raises(A.PreconditionError):
        A.embed_by_method(p9, "wat")
    for refused in ("identity", "exact_search"):
        assert refused in METHODS
        with pytest.raises(A.PreconditionError):
            A.embed_by_method(p9, refused)
    with pytest.raises(A.PreconditionError):
        A.embed_by_method(p9, "path", r=4)  # table methods are r=3 facts
    _counts(A.embed_by_method(p9, "hat", r=4), "hat", 8, 4)


def test_embed_auto_dispatch():
    cases = (
        (A.build_family("path", 9), 3, "path", 2),
        (A.build_family("complete", 1), 3, "path", 6),
        (A.build_family("cycle", 12), 3, "cycle", 2),
        (A.build_family("complete", 4), 3, "complete", 5),
        (A.build_family("caterpillar", 12, 6), 3, "caterpillar", 2),
        (A.build_family("petersen"), 3, "2sc_three", 3),
        (A.build_family("star", 3), 3, "triple_isolated", 3),
        # APEX_P3 satisfies the isolated-vertex condition too, which wins the
        # dispatch; this 10-vertex graph reaches the induced-path branch alone
        (APEX_P3, 3, "triple_isolated", 3),
        (A.parse_graph6("IsiECIWk?"), 3, "triple_p3", 3),
        (A.build_family("gadget_c_star", 6), 3, "identity", 0),
        (A.build_family("cocktail_party", 3), 3, "diam2_four", 4),
        (A.Graph(4, [(0, 1), (2, 3)]), 3, "general", 5),
        (A.build_family("complete", 2), 4, "connected", 7),
        (A.build_family("complete", 1), 4, "hat", 8),
        (A.build_family("complete", 2), 2, "hat", 4),
    )
    for guest, r, method, added in cases:
        emb = A.embed_auto(guest, r)
        _counts(emb, method, added, r)


def test_determinism():
    for build in (
        lambda: A.embed_auto(A.build_family("petersen"), 3),
        lambda: A.embed_path(9),
        lambda: A.embed_hat(A.build_family("cycle", 5), 4),
    ):
        a, b = build(), build()
        assert A.write_graph6(a.host) == A.write_graph6(b.host)
        assert a.map == b.map and a.added == b.added


def test_verify_embedding_catches_tampering():
    emb = A.embed_path(9)
    bad_map = list(emb.map)
    bad_map[0], bad_map[1] = bad_map[1], bad_map[0]
    with pytest.raises(A.InternalCheckError):
        A.verify_embedding(dataclasses.replace(emb, map=tuple(bad_map)))
    with pytest.raises(A.InternalCheckError):
        A.verify_embedding(dataclasses.replace(emb, added=emb.added[:1]))
    with pytest.raises(A.InternalCheckError):
        A.verify_embedding(dataclasses.replace(emb, r=4))
