"""Almost-self-centered verdicts and the diameter-2 sufficient-condition checkers.

A graph is r-ASC when every eccentricity is r or r+1 and exactly two vertices
have eccentricity r+1. The checkers certify, from structure alone, whether a
connected diameter-2 graph needs exactly 3 or exactly 4 added vertices to sit
inside a 3-ASC host; each verdict carries a re-checkable vertex witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, PreconditionError
from .graph import Graph, bits, bfs_distances, ecc_profile, EccProfile

CHECKER_ORDER = ("new_added", "isolated_vertex", "p3", "no_triple", "union_of_complete")


@dataclass(frozen=True)
class AscVerdict:
    """Outcome of the ASC test: r is the radius when is_asc, else None."""

    is_asc: bool
    r: int | None
    non_central: tuple[int, ...]
    ecc_of_non_central: tuple[int, ...]


def asc_verdict(g: Graph) -> AscVerdict:
    """Decide whether exactly two vertices are non-central (requires connectivity)."""
    prof = ecc_profile(g)
    non_central = tuple(v for v, e in enumerate(prof.ecc) if e != prof.radius)
    is_asc = len(non_central) == 2
    return AscVerdict(
        is_asc=is_asc,
        r=prof.radius if is_asc else None,
        non_central=non_central,
        ecc_of_non_central=tuple(prof.ecc[v] for v in non_central),
    )


def is_r_asc(g: Graph, r: int) -> bool:
    v = asc_verdict(g)
    return v.is_asc and v.r == r


def ecc_set(g: Graph, u: int) -> tuple[int, ...]:
    """Ecc(u): vertices at distance exactly ecc(u) from u."""
    dist = bfs_distances(g, u)
    e = max(dist)
    if min(dist) < 0:
        raise PreconditionError("eccentric set undefined on a disconnected graph")
    return tuple(v for v, d in enumerate(dist) if d == e)


def n2_set(g: Graph, u: int) -> tuple[int, ...]:
    """N_2(u): vertices at distance exactly 2 from u."""
    return tuple(v for v, d in enumerate(bfs_distances(g, u)) if d == 2)


def diametrical_structure(g: Graph):
    """All diametrical pairs and triples (pairwise at distance diam(g))."""
    prof = ecc_profile(g)
    d = prof.diameter
    dist = [bfs_distances(g, v) for v in range(g.n)]
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] == d
    ]
    triples = [
        (u, v, w)
        for u, v in pairs
        for w in range(v + 1, g.n)
        if dist[u][w] == d and dist[v][w] == d
    ]
    return tuple(pairs), tuple(triples)


@dataclass(frozen=True)
class ConditionWitness:
    """One sufficient-condition check: theorem tag, verdict, and cited vertices."""

    theorem: str
    holds: bool
    witness: tuple[int, ...] = ()


def _ecc2_masks(g: Graph) -> list[int]:
    """Per-vertex mask of the vertices at distance exactly 2."""
    out = []
    for v in range(g.n):
        m = 0
        for w, d in enumerate(bfs_distances(g, v)):
            if d == 2:
                m |= 1 << w
        out.append(m)
    return out


def _require_diam2(g: Graph) -> EccProfile:
    prof = ecc_profile(g)
    if prof.diameter != 2:
        raise PreconditionError(f"checker requires diameter 2, got diameter {prof.diameter}")
    return prof


def check_new_added(g: Graph) -> ConditionWitness:
    """2-self-centered test: some diametrical pair u,v admits u' in N(u)\\N(v) and
    v' in N(v)\\N(u) with N(u) cap N(v) inside Ecc(u') cap Ecc(v')."""
    prof = ecc_profile(g)
    if not (prof.radius == 2 and prof.diameter == 2):
        return ConditionWitness("new_added", False)
    full = (1 << g.n) - 1
    # in a 2-self-centered graph Ecc(x) is exactly the set of non-neighbors of x
    ecc_mask = [full & ~g.rows[x] & ~(1 << x) for x in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            nu, nv = g.rows[u], g.rows[v]
            common = nu & nv
            for up in bits(nu & ~nv):
                for vp in bits(nv & ~nu):
                    if common & ~(ecc_mask[up] & ecc_mask[vp]) == 0:
                        return ConditionWitness("new_added", True, (u, v, up, vp))
    return ConditionWitness("new_added", False)


def check_isolated_vertex(g: Graph) -> ConditionWitness:
    """Some diametrical pair u,v has an isolated vertex w in G[Ecc(u) cap Ecc(v)]."""
    _require_diam2(g)
    ecc2 = _ecc2_masks(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            shared = ecc2[u] & ecc2[v]
            for w in bits(shared):
                if g.rows[w] & shared == 0:
                    return ConditionWitness("isolated_vertex", True, (u, v, w))
    return ConditionWitness("isolated_vertex", False)


def check_p3(g: Graph) -> ConditionWitness:
    """Some diametrical pair u,v has an induced 3-vertex path in G[Ecc(u) cap Ecc(v)]."""
    _require_diam2(g)
    ecc2 = _ecc2_masks(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            shared = ecc2[u] & ecc2[v]
            members = list(bits(shared))
            for w1 in members:
                for w2 in members:
                    if w2 == w1 or not g.has_edge(w1, w2):
                        continue
                    for w3 in members:
                        if w3 <= w1 or w3 == w2:
                            continue
                        if g.has_edge(w2, w3) and not g.has_edge(w1, w3):
                            return ConditionWitness("p3", True, (u, v, w1, w2, w3))
    return ConditionWitness("p3", False)


def check_no_triple(g: Graph) -> ConditionWitness:
    """No diametrical triple and the new_added hypothesis fails."""
    _require_diam2(g)
    ecc2 = _ecc2_masks(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and ecc2[u] & ecc2[v]:
                return ConditionWitness("no_triple", False)
    if check_new_added(g).holds:
        return ConditionWitness("no_triple", False)
    return ConditionWitness("no_triple", True)


def check_union_of_complete(g: Graph) -> ConditionWitness:
    """Every diametrical pair's Ecc(u) cap Ecc(v) induces a nonempty disjoint union
    of complete graphs of order >= 2 whose outside neighbors all lie in
    N(u) cap N(v), and the new_added hypothesis fails."""
    _require_diam2(g)
    ecc2 = _ecc2_masks(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            shared = ecc2[u] & ecc2[v]
            if shared == 0:
                return ConditionWitness("union_of_complete", False)
            guard = g.rows[u] & g.rows[v]
            left = shared
            while left:
                # peel the component of the smallest remaining vertex
                s = (left & -left).bit_length() - 1
                comp = 1 << s
                frontier = comp
                while frontier:
                    nxt = 0
                    for x in bits(frontier):
                        nxt |= g.rows[x] & shared
                    nxt &= ~comp
                    comp |= nxt
                    frontier = nxt
                size = comp.bit_count()
                if size < 2:
                    return ConditionWitness("union_of_complete", False)
                for x in bits(comp):
                    if (g.rows[x] & comp) | (1 << x) != comp:
                        return ConditionWitness("union_of_complete", False)
                left &= ~comp
            for s in bits(shared):
                if g.rows[s] & ~shared & ~guard:
                    return ConditionWitness("union_of_complete", False)
    if check_new_added(g).holds:
        return ConditionWitness("union_of_complete", False)
    return ConditionWitness("union_of_complete", True)


_CHECKERS = {
    "new_added": check_new_added,
    "isolated_vertex": check_isolated_vertex,
    "p3": check_p3,
    "no_triple": check_no_triple,
    "union_of_complete": check_union_of_complete,
}


@dataclass(frozen=True)
class Diam2Classification:
    """3-ASC index classification of a connected diameter-2 graph."""

    verdict: str  # exactly_3 | exactly_4 | bounds_3_4
    checks: tuple[ConditionWitness, ...]


def classify_diam2(g: Graph) -> Diam2Classification:
    """Run every checker in fixed order and combine into a verdict."""
    _require_diam2(g)
    checks = tuple(_CHECKERS[name](g) for name in CHECKER_ORDER)
    by_name = {c.theorem: c for c in checks}
    three = any(by_name[t].holds for t in ("new_added", "isolated_vertex", "p3"))
    four = by_name["no_triple"].holds or by_name["union_of_complete"].holds
    if three and four:
        raise InternalCheckError("contradictory classification: both exactly_3 and exactly_4 conditions hold")
    if three:
        verdict = "exactly_3"
    elif four:
        verdict = "exactly_4"
    else:
        verdict = "bounds_3_4"
    return Diam2Classification(verdict, checks)


def revalidate(g: Graph, witness: ConditionWitness) -> bool:
    """Re-run a checker's hypothesis against its cited vertices."""
    if witness.theorem not in _CHECKERS:
        raise PreconditionError(f"unknown theorem tag {witness.theorem!r}")
    if not witness.holds or witness.theorem in ("no_triple", "union_of_complete"):
        fresh = _CHECKERS[witness.theorem](g)
        return fresh.holds == witness.holds
    full = (1 << g.n) - 1
    ecc2 = _ecc2_masks(g)
    if witness.theorem == "new_added":
        u, v, up, vp = witness.witness
        prof = ecc_profile(g)
        if not (prof.radius == 2 and prof.diameter == 2) or g.has_edge(u, v):
            return False
        if not (g.has_edge(u, up) and not g.has_edge(v, up)):
            return False
        if not (g.has_edge(v, vp) and not g.has_edge(u, vp)):
            return False
        ecc_up = full & ~g.rows[up] & ~(1 << up)
        ecc_vp = full & ~g.rows[vp] & ~(1 << vp)
        return g.rows[u] & g.rows[v] & ~(ecc_up & ecc_vp) == 0
    if witness.theorem == "isolated_vertex":
        u, v, w = witness.witness
        shared = ecc2[u] & ecc2[v]
        return not g.has_edge(u, v) and bool(shared >> w & 1) and g.rows[w] & shared == 0
    if witness.theorem == "p3":
        u, v, w1, w2, w3 = witness.witness
        shared = ecc2[u] & ecc2[v]
        if g.has_edge(u, v) or any(not shared >> x & 1 for x in (w1, w2, w3)):
            return False
        return g.has_edge(w1, w2) and g.has_edge(w2, w3) and not g.has_edge(w1, w3)
    raise PreconditionError(f"unhandled theorem tag {witness.theorem!r}")
