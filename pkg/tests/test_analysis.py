"""ASC verdicts, eccentric sets, and the diameter-2 sufficient-condition checkers."""

import pytest

import ascembed as A
from ascembed.analysis import CHECKER_ORDER, check_no_triple, check_union_of_complete, diametrical_structure, ecc_set


APEX_P3 = A.Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (3, 4), (4, 5)])


def test_asc_verdict_basics():
    v = A.asc_verdict(A.build_family("gadget_c_star", 6))
    assert v.is_asc and v.r == 3
    assert v.non_central == (3, 6) and v.ecc_of_non_central == (4, 4)

    p4 = A.asc_verdict(A.build_family("path", 4))
    assert p4.is_asc and p4.r == 2 and p4.non_central == (0, 3)

    assert not A.asc_verdict(A.build_family("cycle", 6)).is_asc  # self-centered
    assert not A.asc_verdict(A.build_family("complete", 4)).is_asc
    star = A.asc_verdict(A.build_family("star", 4))
    assert not star.is_asc and len(star.non_central) == 4

    assert A.is_r_asc(A.build_family("gadget_c_prime", 7), 3)
    assert not A.is_r_asc(A.build_family("gadget_c_prime", 7), 2)
    with pytest.raises(A.DisconnectedGraphError):
        A.asc_verdict(A.Graph(3, [(0, 1)]))


def test_ecc_and_n2_sets():
    p5 = A.build_family("path", 5)
    assert ecc_set(p5, 0) == (4,)
    assert ecc_set(p5, 2) == (0, 4)
    assert A.n2_set(p5, 0) == (2,)
    assert A.n2_set(p5, 2) == (0, 4)
    pg = A.build_family("petersen")
    assert ecc_set(pg, 0) == A.n2_set(pg, 0) == (2, 3, 6, 7, 8, 9)


def test_diametrical_structure():
    pairs, triples = diametrical_structure(A.build_family("cycle", 4))
    assert pairs == ((0, 2), (1, 3)) and triples == ()
    pairs, triples = diametrical_structure(A.build_family("star", 3))
    assert pairs == ((1, 2), (1, 3), (2, 3)) and triples == ((1, 2, 3),)
    pairs, triples = diametrical_structure(A.build_family("complete", 3))
    assert pairs == ((0, 1), (0, 2), (1, 2)) and triples == ((0, 1, 2),)


def test_check_new_added():
    assert A.check_new_added(A.build_family("petersen")).holds
    c5 = A.check_new_added(A.build_family("cycle", 5))
    assert c5.holds and c5.witness == (0, 2, 4, 3)
    assert not A.check_new_added(A.build_family("cycle", 4)).holds
    # not 2-self-centered: hypothesis simply fails, no error
    assert not A.check_new_added(A.build_family("star", 3)).holds
    assert not A.check_new_added(A.build_family("path", 5)).holds


def test_check_isolated_vertex():
    w = A.check_isolated_vertex(A.build_family("star", 3))
    assert w.holds and w.witness == (1, 2, 3)
    assert not A.check_isolated_vertex(A.build_family("k1_join_matchings", 3)).holds
    assert not A.check_isolated_vertex(A.build_family("petersen")).holds
    with pytest.raises(A.PreconditionError):
        A.check_isolated_vertex(A.build_family("path", 5))


def test_check_p3():
    w = A.check_p3(APEX_P3)
    assert w.holds
    u, v, w1, w2, w3 = w.witness
    shared = set(A.n2_set(APEX_P3, u)) & set(A.n2_set(APEX_P3, v))
    assert {w1, w2, w3} <= shared
    assert APEX_P3.has_edge(w1, w2) and APEX_P3.has_edge(w2, w3) and not APEX_P3.has_edge(w1, w3)
    assert not A.check_p3(A.build_family("star", 3)).holds
    assert not A.check_p3(A.build_family("cocktail_party", 3)).holds


def test_check_no_triple_and_union_of_complete():
    assert check_no_triple(A.build_family("cycle", 4)).holds
    assert check_no_triple(A.build_family("cocktail_party", 3)).holds
    assert not check_no_triple(A.build_family("star", 3)).holds
    assert not check_no_triple(A.build_family("petersen")).holds

    assert check_union_of_complete(A.build_family("k1_join_matchings", 3)).holds
    assert not check_union_of_complete(A.build_family("star", 3)).holds
    assert not check_union_of_complete(A.build_family("cocktail_party", 3)).holds  # empty intersections


def test_classify_diam2():
    assert A.classify_diam2(A.build_family("petersen")).verdict == "exactly_3"
    assert A.classify_diam2(A.build_family("star", 3)).verdict == "exactly_3"
    assert A.classify_diam2(APEX_P3).verdict == "exactly_3"
    assert A.classify_diam2(A.build_family("cycle", 5)).verdict == "exactly_3"
    assert A.classify_diam2(A.build_family("cycle", 4)).verdict == "exactly_4"
    assert A.classify_diam2(A.build_family("cocktail_party", 3)).verdict == "exactly_4"
    assert A.classify_diam2(A.build_family("k1_join_matchings", 3)).verdict == "exactly_4"
    cls = A.classify_diam2(A.build_family("petersen"))
    assert tuple(c.theorem for c in cls.checks) == CHECKER_ORDER
    with pytest.raises(A.PreconditionError):
        A.classify_diam2(A.build_family("path", 5))
    with pytest.raises(A.PreconditionError):
        A.classify_diam2(A.build_family("complete", 4))


def test_revalidate():
    for g in (
        A.build_family("petersen"),
        A.build_family("cycle", 5),
        A.build_family("star", 3),
        APEX_P3,
        A.build_family("cycle", 4),
        A.build_family("k1_join_matchings", 3),
    ):
        for check in A.classify_diam2(g).checks:
            assert A.revalidate(g, check)
    # tampered witnesses fail
    from ascembed.analysis import ConditionWitness

    pg = A.build_family("petersen")
    good = A.check_new_added(pg)
    u, v, up, vp = good.witness
    assert not A.revalidate(pg, ConditionWitness("new_added", True, (u, v, up, up)))
    star = A.build_family("star", 3)
    assert not A.revalidate(star, ConditionWitness("isolated_vertex", True, (0, 1, 2)))
    with pytest.raises(A.PreconditionError):
        A.revalidate(pg, ConditionWitness("wat", True, ()))
