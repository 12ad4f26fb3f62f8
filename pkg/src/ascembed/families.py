"""Named graph families with fixed canonical vertex numberings.

Walk-order numbering for paths and cycles, part-by-part for bipartite-style
families, and "gadget extra vertex last" for the cycle gadgets, so identical
family specs always produce identical labeled graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .graph import Graph

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "cocktail_party",
    "k1_join_matchings",
    "caterpillar",
    "gadget_c_star",
    "gadget_c_prime",
    "gadget_c8_double",
    "petersen",
)

# kind -> (min arity, max arity)
_ARITY = {
    "path": (1, 1),
    "cycle": (1, 1),
    "complete": (1, 1),
    "star": (1, 1),
    "complete_bipartite": (2, 2),
    "cocktail_party": (1, 1),
    "k1_join_matchings": (1, 1),
    "caterpillar": (2, 2),
    "gadget_c_star": (1, 1),
    "gadget_c_prime": (1, 1),
    "gadget_c8_double": (0, 0),
    "petersen": (0, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family kind plus its integer parameters."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise PreconditionError(f"unknown family kind {self.kind!r}; known: {', '.join(FAMILY_KINDS)}")
        lo, hi = _ARITY[self.kind]
        if not lo <= len(self.params) <= hi:
            want = str(lo) if lo == hi else f"{lo}..{hi}"
            raise PreconditionError(f"family {self.kind} takes {want} parameter(s), got {len(self.params)}")

    @staticmethod
    def parse(text: str) -> "FamilySpec":
        """Parse the mini-grammar "name" or "name:p1,p2,..." (integer params)."""
        name, sep, rest = text.partition(":")
        name = name.strip()
        if not name:
            raise ParseError(f"empty family name in {text!r}; grammar is name or name:p1,p2,...")
        if name not in _ARITY:
            raise ParseError(f"unknown family {name!r}; grammar is name:params with name in {{{', '.join(FAMILY_KINDS)}}}")
        params = ()
        if sep:
            try:
                params = tuple(int(p.strip()) for p in rest.split(","))
            except ValueError:
                raise ParseError(f"family parameters must be integers, got {rest!r}; grammar is name:p1,p2,...") from None
        try:
            return FamilySpec(name, params)
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    def build(self) -> Graph:
        return build_family(self.kind, *self.params)


def path(n: int) -> Graph:
    """P_n, vertices 0..n-1 in walk order."""
    if n < 1:
        raise PreconditionError("path order must be >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n, vertices 0..n-1 in walk order."""
    if n < 3:
        raise PreconditionError("cycle order must be >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise PreconditionError("complete graph order must be >= 1")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star(t: int) -> Graph:
    """K_{1,t}: center 0, leaves 1..t."""
    if t < 1:
        raise PreconditionError("star must have >= 1 leaf")
    return Graph(t + 1, ((0, i) for i in range(1, t + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: part 0..a-1, part a..a+b-1."""
    if a < 1 or b < 1:
        raise PreconditionError("complete bipartite parts must be >= 1")
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def cocktail_party(n: int) -> Graph:
    """CP(n) = K_{2n} minus the perfect matching (2i, 2i+1)."""
    if n < 1:
        raise PreconditionError("cocktail-party parameter must be >= 1")
    m = 2 * n
    return Graph(m, ((u, v) for u in range(m) for v in range(u + 1, m) if not (u // 2 == v // 2)))


def k1_join_matchings(t: int) -> Graph:
    """K_1 + t*P_2 join: apex 0 adjacent to t disjoint edges (2i+1, 2i+2)."""
    if t < 1:
        raise PreconditionError("matching count must be >= 1")
    edges = [(0, i) for i in range(1, 2 * t + 1)]
    edges += [(2 * i + 1, 2 * i + 2) for i in range(t)]
    return Graph(2 * t + 1, edges)


def caterpillar(n: int, k: int) -> Graph:
    """Spine path 0..n-2 plus leaf n-1 attached at spine vertex k-1.

    k is the 1-based spine position; 2 <= k <= n-2 keeps the diameter at n-2.
    """
    if n < 4:
        raise PreconditionError("caterpillar order must be >= 4")
    if not 2 <= k <= n - 2:
        raise PreconditionError(f"attachment index must satisfy 2 <= k <= n-2, got k={k} with n={n}")
    edges = [(i, i + 1) for i in range(n - 2)]
    edges.append((k - 1, n - 1))
    return Graph(n, edges)


def gadget_c_star(n: int) -> Graph:
    """C_n plus a pendant vertex n attached at cycle vertex 0."""
    if n < 3:
        raise PreconditionError("cycle order must be >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, n))
    return Graph(n + 1, edges)


def gadget_c_prime(n: int) -> Graph:
    """C_n plus vertex n adjacent to the two consecutive cycle vertices 0 and 1."""
    if n < 3:
        raise PreconditionError("cycle order must be >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(0, n), (1, n)]
    return Graph(n + 1, edges)


def gadget_c8_double() -> Graph:
    """C_8 plus vertex 8 adjacent to the five consecutive cycle vertices 0..4."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(i, 8) for i in range(5)]
    return Graph(9, edges)


def petersen() -> Graph:
    """Petersen graph: outer cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "cocktail_party": cocktail_party,
    "k1_join_matchings": k1_join_matchings,
    "caterpillar": caterpillar,
    "gadget_c_star": gadget_c_star,
    "gadget_c_prime": gadget_c_prime,
    "gadget_c8_double": gadget_c8_double,
    "petersen": petersen,
}


def build_family(kind: str, *params: int) -> Graph:
    """Build a family member; validates the kind and parameter bounds."""
    FamilySpec(kind, tuple(params))  # arity + kind validation
    return _BUILDERS[kind](*params)
