"""Bit-packed undirected simple graphs and distance/eccentricity computation.

Vertices are the integers 0..n-1. Adjacency is stored as one Python int per
vertex (bit v of row u is set iff uv is an edge), which keeps BFS a handful of
word-wide OR/AND operations even for hosts with 10^4 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, PreconditionError

# Marker used in distance matrices for unreachable pairs.
UNREACHABLE = -1


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError("graph order must be >= 0")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) endpoint out of range for order {n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build from adjacency masks; validates symmetry and irreflexivity."""
        rows = tuple(rows)
        n = len(rows)
        g = object.__new__(cls)
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full or row >> u & 1:
                raise PreconditionError(f"row {u} has out-of-range bits or a self-loop")
        for u, row in enumerate(rows):
            for v in bits(row):
                if not rows[v] >> u & 1:
                    raise PreconditionError(f"adjacency not symmetric at ({u},{v})")
        g.n = n
        g.rows = rows
        return g

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"

    # -- derived graphs ----------------------------------------------------

    def with_extension(self, k: int, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        """Copy with k extra vertices n..n+k-1 and new_edges added (idempotent union)."""
        rows = list(self.rows) + [0] * k
        m = self.n + k
        for u, v in new_edges:
            if not (0 <= u < m and 0 <= v < m) or u == v:
                raise PreconditionError(f"bad extension edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        g = object.__new__(Graph)
        g.n = m
        g.rows = tuple(rows)
        return g

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        vs = list(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        if len(idx) != len(vs):
            raise PreconditionError("induced vertex list has duplicates")
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for w in bits(self.rows[v]):
                j = idx.get(w)
                if j is not None:
                    rows[i] |= 1 << j
        g = object.__new__(Graph)
        g.n = len(vs)
        g.rows = tuple(rows)
        return g

    def permuted(self, perm: Iterable[int]) -> "Graph":
        """Relabeled copy: vertex v of self becomes perm[v]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("not a permutation")
        rows = [0] * self.n
        for u in range(self.n):
            pu = perm[u]
            for v in bits(self.rows[u]):
                rows[pu] |= 1 << perm[v]
        g = object.__new__(Graph)
        g.n = self.n
        g.rows = tuple(rows)
        return g


# Fast internal constructor used by builders that already hold valid rows.
def _graph_from_rows_unchecked(rows) -> Graph:
    g = object.__new__(Graph)
    g.rows = tuple(rows)
    g.n = len(g.rows)
    return g


# -- combinators -----------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g1's vertices keep their labels, g2's are shifted by g1.n."""
    shift = g1.n
    rows = list(g1.rows) + [r << shift for r in g2.rows]
    return _graph_from_rows_unchecked(rows)

def join(g1: Graph, g2: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    left = ((1 << n1) - 1)
    right = ((1 << n2) - 1) << n1
    rows = [g1.rows[u] | right for u in range(n1)]
    rows += [(g2.rows[u] << n1) | left for u in range(n2)]
    return _graph_from_rows_unchecked(rows)

def complement(g: Graph) -> Graph:
    """Complement graph (no self-loops)."""
    full = (1 << g.n) - 1
    rows = [full & ~g.rows[u] & ~(1 << u) for u in range(g.n)]
    return _graph_from_rows_unchecked(rows)


# -- distances -------------------------------------------------------------


def _bfs_ecc(rows, full: int, source: int, cap: int = -1) -> int:
    """Eccentricity of source, or UNREACHABLE if BFS stalls or exceeds cap.

    Each level expands whichever of frontier / unseen is smaller, so dense
    hosts with tiny diameter finish in a few mask operations.
    """
    seen = 1 << source
    frontier = seen
    depth = 0
    while seen != full:
        unseen = full & ~seen
        if unseen.bit_count() <= frontier.bit_count():
            nxt = 0
            m = unseen
            while m:
                low = m & -m
                if rows[low.bit_length() - 1] & frontier:
                    nxt |= low
                m ^= low
        else:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            nxt &= unseen
        if nxt == 0:
            return UNREACHABLE
        depth += 1
        if cap >= 0 and depth > cap:
            return UNREACHABLE
        seen |= nxt
        frontier = nxt
    return depth


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; UNREACHABLE where no path exists."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    rows = g.rows
    full = (1 << g.n) - 1
    seen = 1 << source
    frontier = seen
    depth = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        nxt &= full & ~seen
        depth += 1
        for v in bits(nxt):
            dist[v] = depth
        seen |= nxt
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs hop distances via per-vertex BFS; UNREACHABLE marks no path."""
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _bfs_ecc(g.rows, (1 << g.n) - 1, 0) != UNREACHABLE


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        start = (left & -left).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        out.append(list(bits(seen)))
        left &= ~seen
    return out


@dataclass(frozen=True)
class EccProfile:
    """Per-vertex eccentricities with the derived radius/diameter/center/periphery."""

    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]
    periphery: tuple[int, ...]


def ecc_profile(g: Graph) -> EccProfile:
    """Eccentricity profile of a connected graph.

    Raises DisconnectedGraphError when some pair is unreachable (infinite
    eccentricity) and PreconditionError on the empty graph.
    """
    if g.n == 0:
        raise PreconditionError("eccentricity profile of the empty graph is undefined")
    full = (1 << g.n) - 1
    rows = g.rows
    ecc = []
    for v in range(g.n):
        e = _bfs_ecc(rows, full, v)
        if e == UNREACHABLE:
            raise DisconnectedGraphError("graph is disconnected: eccentricity is infinite")
        ecc.append(e)
    radius = min(ecc)
    diameter = max(ecc)
    center = tuple(v for v, e in enumerate(ecc) if e == radius)
    periphery = tuple(v for v, e in enumerate(ecc) if e == diameter)
    return EccProfile(tuple(ecc), radius, diameter, center, periphery)


def induced_check(host: Graph, vmap, guest: Graph) -> bool:
    """True iff vmap injects guest into host with edges and non-edges preserved."""
    vmap = list(vmap)
    if len(vmap) != guest.n:
        return False
    if any(not (0 <= h < host.n) for h in vmap) or len(set(vmap)) != len(vmap):
        return False
    image = 0
    for h in vmap:
        image |= 1 << h
    # whole-row comparison: host neighbors inside the image must be exactly
    # the mapped guest neighbors, which covers edges and non-edges at once
    for u in range(guest.n):
        want = 0
        for v in bits(guest.rows[u]):
            want |= 1 << vmap[v]
        if host.rows[vmap[u]] & image != want:
            return False
    return True
