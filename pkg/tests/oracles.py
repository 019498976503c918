"""Independent reference implementations used only by the tests.

None of these share code with the package beyond the Graph container: they
are deliberately naive so that agreement means something.
"""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

import numpy as np


def edge_set(g):
    return {(i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.adj[i] >> j & 1}


def naive_isomorphic(g, h) -> bool:
    """Try every vertex permutation."""
    if g.n != h.n:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[i], perm[j]))) in eh for i, j in eg):
            return True
    return False


def naive_contains_induced(g, h) -> bool:
    for X in itertools.combinations(range(g.n), h.n):
        sub_edges = {(a, b) for a, b in itertools.combinations(range(h.n), 2) if g.adj[X[a]] >> X[b] & 1}
        eh = edge_set(h)
        if len(sub_edges) != len(eh):
            continue
        for perm in itertools.permutations(range(h.n)):
            if all(tuple(sorted((perm[a], perm[b]))) in eh for a, b in sub_edges):
                return True
    return False


def bfs_matrix(g):
    """Distance matrix by queue BFS over neighbour lists (None if disconnected)."""
    nbrs = [[w for w in range(g.n) if g.adj[v] >> w & 1] for v in range(g.n)]
    rows = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
        if min(dist) < 0:
            return None
        rows.append(dist)
    return rows


def bareiss_det(m) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                assert num % prev == 0
                a[i][j] = num // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# polynomials as ascending coefficient lists of ints
def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def cofactor_char_poly(m) -> list[int]:
    """det(xI - m) by Laplace expansion along the first row, polynomial entries."""
    n = len(m)
    entries = [[([-m[i][j], 1] if i == j else [-m[i][j]]) for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = [0]
        r = rows[0]
        for k, c in enumerate(cols):
            minor = det(rows[1:], cols[:k] + cols[k + 1:])
            term = _pmul(entries[r][c], minor)
            if k % 2:
                term = [-t for t in term]
            total = _padd(total, term)
        return total

    return _trim(det(list(range(n)), list(range(n))))


def numpy_eigs(m):
    return sorted(np.linalg.eigvalsh(np.array(m, dtype=float)), reverse=True)


def frac(x):
    return Fraction(x)
