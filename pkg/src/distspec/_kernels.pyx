# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_kernels_py`` for contracts)."""
from libc.math cimport sqrt, fabs, copysign
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

cdef enum:
    MAXN = 64

MAX_MASK_ORDER = 11


def bfs_distances(int n, adj):
    cdef unsigned long long a[MAXN]
    cdef int queue[MAXN]
    cdef int dist[MAXN]
    cdef int s, v, w, head, tail, reached
    cdef unsigned long long nb
    if n > MAXN:
        raise ValueError("order too large for compiled BFS")
    for v in range(n):
        a[v] = adj[v]
    rows = []
    for s in range(n):
        for v in range(n):
            dist[v] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        reached = 1
        while head < tail:
            v = queue[head]
            head += 1
            nb = a[v]
            while nb:
                w = __builtin_ctzll(nb)
                nb &= nb - 1
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
                    reached += 1
        if reached != n:
            return None
        rows.append([dist[v] for v in range(n)])
    return rows


cdef bint _next_perm(int* arr, int lo, int hi):
    # lexicographic next permutation of arr[lo:hi]; False (and reset) on wrap
    cdef int i = hi - 2
    cdef int j, tmp
    while i >= lo and arr[i] >= arr[i + 1]:
        i -= 1
    if i < lo:
        j = lo
        i = hi - 1
        while j < i:
            tmp = arr[j]; arr[j] = arr[i]; arr[i] = tmp
            j += 1
            i -= 1
        return False
    j = hi - 1
    while arr[j] <= arr[i]:
        j -= 1
    tmp = arr[i]; arr[i] = arr[j]; arr[j] = tmp
    j = i + 1
    i = hi - 1
    while j < i:
        tmp = arr[j]; arr[j] = arr[i]; arr[i] = tmp
        j += 1
        i -= 1
    return True


def min_mask(int n, adj, cells):
    cdef int order[MAXN]
    cdef int pos[MAXN]
    cdef int lo[MAXN]
    cdef int hi[MAXN]
    cdef int eu[64]
    cdef int ev[64]
    cdef int ne = 0, ncells = 0, k = 0, i, j, t, e
    cdef unsigned long long mask, best = 0
    cdef bint first = True
    if n > MAX_MASK_ORDER:
        raise ValueError(f"min_mask supports n <= {MAX_MASK_ORDER}, got {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if (adj[i] >> j) & 1:
                eu[ne] = i
                ev[ne] = j
                ne += 1
    for cell in cells:
        lo[ncells] = k
        for v in sorted(cell):
            order[k] = v
            k += 1
        hi[ncells] = k
        ncells += 1
    while True:
        for i in range(n):
            pos[order[i]] = i
        mask = 0
        for e in range(ne):
            i = pos[eu[e]]
            j = pos[ev[e]]
            if i > j:
                t = i; i = j; j = t
            mask |= (<unsigned long long>1) << (j * (j - 1) // 2 + i)
        if first or mask < best:
            best = mask
            first = False
        t = ncells - 1
        while t >= 0 and not _next_perm(order, lo[t], hi[t]):
            t -= 1
        if t < 0:
            break
    return int(best)


def jacobi_eigenvalues(a, double rel_tol=1e-12, int max_sweeps=100):
    cdef int n = len(a)
    cdef double* m = <double*> malloc(n * n * sizeof(double))
    cdef int p, q, k, sweep
    cdef double norm = 0.0, off, apq, theta, t, c, s, x, y
    try:
        for p in range(n):
            row = a[p]
            for q in range(n):
                m[p * n + q] = row[q]
                norm += m[p * n + q] * m[p * n + q]
        norm = sqrt(norm)
        for sweep in range(max_sweeps):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += m[p * n + q] * m[p * n + q]
            if sqrt(off) <= rel_tol * norm:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = m[p * n + q]
                    if apq == 0.0:
                        continue
                    theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq)
                    t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = m[k * n + p]
                        y = m[k * n + q]
                        m[k * n + p] = c * x - s * y
                        m[k * n + q] = s * x + c * y
                    for k in range(n):
                        x = m[p * n + k]
                        y = m[q * n + k]
                        m[p * n + k] = c * x - s * y
                        m[q * n + k] = s * x + c * y
        return sorted([m[k * n + k] for k in range(n)], reverse=True)
    finally:
        free(m)
