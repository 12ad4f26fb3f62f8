"""Compiled search kernels.

Candidate codes pack k new-vertex neighborhoods over an n-vertex guest:
bit j*n + i is the edge (guest i, new j), and bit k*n + b*(b-1)/2 + a with
a < b < k is the edge (new a, new b). Codes of equal popcount enumerate in
increasing numeric order via Gosper's hack, which is exactly the
increasing-edge-count-then-lexicographic search order the certificates
promise. Everything fits one int64: callers enforce a 62-bit ceiling.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

EXHAUSTED = 0
FOUND = 1
PAUSED = 2


@njit(cache=True, nogil=True)
def _is_r_asc(rows, m, r, ecc_cap):
    """True iff the mask-adjacency graph is r-ASC.

    Sound shortcut: a connected graph with exactly two non-central vertices
    and radius rho has diameter rho+1 (a vertex at distance >= rho+2 from a
    would force every neighbor of a to be non-central as well), so it is
    enough to demand ecc in {r, r+1} everywhere with exactly two r+1 hits.
    With ecc_cap the BFS aborts as soon as a source exceeds depth r+1.
    """
    full = (1 << m) - 1
    non_central = 0
    for s in range(m):
        seen = 1 << s
        frontier = seen
        depth = 0
        while seen != full:
            nxt = 0
            for v in range(m):
                if (frontier >> v) & 1:
                    nxt |= rows[v]
            nxt &= ~seen
            if nxt == 0:
                return False  # disconnected
            seen |= nxt
            frontier = nxt
            depth += 1
            if ecc_cap and depth > r + 1:
                return False
        if depth < r or depth > r + 1:
            return False
        if depth == r + 1:
            non_central += 1
            if non_central > 2:
                return False
    return non_central == 2


@njit(cache=True, nogil=True)
def scan_extensions(guest_rows, n, k, r, code0, limit, sym, conn, ecc_cap):
    """Walk up to `limit` same-popcount candidate codes starting at code0.

    Returns (status, payload, examined): FOUND carries the witness code,
    PAUSED the resume code, EXHAUSTED means the popcount level ran out.
    Pruned codes still count as examined.
    """
    m = n + k
    b_total = k * n + (k * (k - 1)) // 2
    top = 1 << b_total
    gmask = (1 << n) - 1
    nn_base = k * n
    rows = np.empty(m, np.int64)
    code = code0
    examined = 0
    while examined < limit:
        if code >= top:
            return EXHAUSTED, 0, examined
        examined += 1
        ok = True
        if sym:
            prev = -1
            for j in range(k):
                g = (code >> (j * n)) & gmask
                if g < prev:
                    ok = False
                    break
                prev = g
        if ok and conn:
            for j in range(k):
                if (code >> (j * n)) & gmask:
                    continue
                touched = False
                for b in range(k):
                    if b == j:
                        continue
                    lo, hi = (j, b) if j < b else (b, j)
                    if (code >> (nn_base + (hi * (hi - 1)) // 2 + lo)) & 1:
                        touched = True
                        break
                if not touched:
                    ok = False
                    break
        if ok:
            for i in range(n):
                rows[i] = guest_rows[i]
            for j in range(k):
                rows[n + j] = 0
            for j in range(k):
                g = (code >> (j * n)) & gmask
                for i in range(n):
                    if (g >> i) & 1:
                        rows[i] |= 1 << (n + j)
                        rows[n + j] |= 1 << i
            for hi in range(1, k):
                for lo in range(hi):
                    if (code >> (nn_base + (hi * (hi - 1)) // 2 + lo)) & 1:
                        rows[n + lo] |= 1 << (n + hi)
                        rows[n + hi] |= 1 << (n + lo)
            if _is_r_asc(rows, m, r, ecc_cap):
                return FOUND, code, examined
        if code == 0:
            code = top  # the popcount-0 level is the single code 0
        else:
            low = code & (-code)
            ripple = code + low
            code = ripple | (((code ^ ripple) >> 2) // low)
    return PAUSED, code, examined


@njit(cache=True, nogil=True, parallel=True)
def scan_extensions_parallel(guest_rows, n, k, r, starts, limits, sym, conn, ecc_cap):
    """One scan_extensions burst per thread over disjoint rank windows."""
    t_count = starts.shape[0]
    status = np.zeros(t_count, np.int64)
    payload = np.zeros(t_count, np.int64)
    examined = np.zeros(t_count, np.int64)
    for t in prange(t_count):
        st, pl, ex = scan_extensions(
            guest_rows, n, k, r, starts[t], limits[t], sym, conn, ecc_cap
        )
        status[t] = st
        payload[t] = pl
        examined[t] = ex
    return status, payload, examined


@njit(cache=True, nogil=True)
def scan_orders(m, r, code0, limit, degree_prune):
    """Walk same-popcount order-m adjacency codes from code0 (Gosper order).

    Bit b*(b-1)/2 + a (a < b) is the edge (a, b), so a popcount level is an
    edge count and witnesses surface at the sparse end. degree_prune skips
    codes with an isolated or universal vertex or a non-monotone degree
    sequence; every isomorphism class keeps a degree-sorted representative,
    so the skip never loses an r-ASC order.
    """
    b_total = (m * (m - 1)) // 2
    top = 1 << b_total
    rows = np.empty(m, np.int64)
    code = code0
    examined = 0
    while examined < limit:
        if code >= top:
            return EXHAUSTED, 0, examined
        examined += 1
        for v in range(m):
            rows[v] = 0
        for hi in range(1, m):
            for lo in range(hi):
                if (code >> ((hi * (hi - 1)) // 2 + lo)) & 1:
                    rows[lo] |= 1 << hi
                    rows[hi] |= 1 << lo
        ok = True
        if degree_prune:
            prev = 0
            for v in range(m):
                d = 0
                x = rows[v]
                while x:
                    x &= x - 1
                    d += 1
                if d == 0 or d == m - 1 or d < prev:
                    ok = False
                    break
                prev = d
        if ok and _is_r_asc(rows, m, r, True):
            return FOUND, code, examined
        if code == 0:
            code = top
        else:
            low = code & (-code)
            ripple = code + low
            code = ripple | (((code ^ ripple) >> 2) // low)
    return PAUSED, code, examined
