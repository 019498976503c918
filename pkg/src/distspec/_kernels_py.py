"""Pure-Python versions of the hot kernels.

Every function here has a twin with the same signature in the compiled
``_kernels`` extension; ``distspec._backend`` picks one at import time.
Graphs are passed as ``(n, adj)`` where ``adj[v]`` is the neighbour bitmask
of vertex ``v``.
"""
from __future__ import annotations

import math
from itertools import permutations, product

MAX_MASK_ORDER = 11  # n(n-1)/2 pair bits must fit in 63


def bfs_distances(n, adj):
    """All-pairs BFS distances, or ``None`` if the graph is disconnected."""
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
            frontier = nxt
        if seen != full:
            return None
        rows.append(row)
    return rows


def min_mask(n, adj, cells):
    """Minimum upper-triangle edge mask over cell-preserving relabelings.

    ``cells`` is an ordered partition of the vertices; cell ``k`` is mapped
    onto the next ``len(cells[k])`` positions in every possible order. Pair
    ``(i, j)`` with ``i < j`` contributes bit ``j*(j-1)//2 + i``.
    """
    if n > MAX_MASK_ORDER:
        raise ValueError(f"min_mask supports n <= {MAX_MASK_ORDER}, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
    offsets = []
    start = 0
    for cell in cells:
        offsets.append(start)
        start += len(cell)
    pos = [0] * n
    best = None
    for choice in product(*(permutations(cell) for cell in cells)):
        for off, arrangement in zip(offsets, choice):
            for i, v in enumerate(arrangement):
                pos[v] = off + i
        mask = 0
        for u, v in edges:
            i, j = pos[u], pos[v]
            if i > j:
                i, j = j, i
            mask |= 1 << (j * (j - 1) // 2 + i)
        if best is None or mask < best:
            best = mask
    return 0 if best is None else best


def jacobi_eigenvalues(a, rel_tol=1e-12, max_sweeps=100):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi, descending."""
    n = len(a)
    m = [list(map(float, row)) for row in a]
    norm = math.sqrt(sum(x * x for row in m for x in row))
    for _ in range(max_sweeps):
        off = math.sqrt(sum(m[p][q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= rel_tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p][q]
                if apq == 0.0:
                    continue
                theta = (m[q][q] - m[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = m[k][p], m[k][q]
                    m[k][p] = c * akp - s * akq
                    m[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = m[p][k], m[q][k]
                    m[p][k] = c * apk - s * aqk
                    m[q][k] = s * apk + c * aqk
    return sorted((m[i][i] for i in range(n)), reverse=True)
