"""Simple undirected graphs on vertices ``0..n-1``.

A :class:`Graph` stores one neighbour bitmask per vertex, which keeps the
objects hashable and makes BFS, complements and induced subgraphs cheap.
Constructors label the left operand first, then the right one.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _backend


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class InvalidOrderError(GraphError):
    pass


class InvalidSetError(GraphError):
    pass


class ArityError(GraphError):
    pass


class NotConnectedError(GraphError):
    pass


class UnsupportedOrderError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal the order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            x = nb
            while x:
                low = x & -x
                if not self.adj[low.bit_length() - 1] >> v & 1:
                    raise GraphError("adjacency is not symmetric")
                x ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def order(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Partition:
    """Ordered vertex partition; blocks are sorted tuples ordered by their minimum."""

    blocks: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...] | None = None

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int | None = None, tags=None) -> "Partition":
        items = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in items):
            raise InvalidSetError("partition blocks must be nonempty")
        if tags is not None:
            tags = list(tags)
            if len(tags) != len(items):
                raise InvalidSetError("one tag per block required")
            paired = sorted(zip(items, tags), key=lambda bt: bt[0][0])
            items = [b for b, _ in paired]
            tags = tuple(t for _, t in paired)
        else:
            items.sort(key=lambda b: b[0])
        seen = [v for b in items for v in b]
        if len(seen) != len(set(seen)):
            raise InvalidSetError("partition blocks overlap")
        if n is not None and sorted(seen) != list(range(n)):
            raise InvalidSetError(f"partition does not cover vertices 0..{n - 1}")
        return cls(tuple(items), tags)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}


# -- constructors -----------------------------------------------------------

def atom(kind: str, n: int) -> Graph:
    """``K_n`` (``"complete"``), ``K_n^c`` (``"edgeless"``) or ``P_n`` (``"path"``)."""
    if n < 1:
        raise InvalidOrderError(f"order must be positive, got {n}")
    if kind == "complete":
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    if kind == "edgeless":
        return Graph(n, (0,) * n)
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    raise ValueError(f"unknown atom kind {kind!r}")


def complete(n: int) -> Graph:
    return atom("complete", n)


def edgeless(n: int) -> Graph:
    return atom("edgeless", n)


def path(n: int) -> Graph:
    return atom("path", n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrderError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*sizes: int) -> Graph:
    g = edgeless(sizes[0])
    for s in sizes[1:]:
        g = join(g, edgeless(s))
    return g


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(nb << shift for nb in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    return Graph(
        g.n + h.n,
        tuple(nb | right for nb in g.adj) + tuple((nb << g.n) | left for nb in h.adj),
    )


def glex_product(base: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex ``i`` of ``base`` by ``parts[i]``; join parts of adjacent base vertices."""
    if len(parts) != base.n:
        raise ArityError(f"base has {base.n} vertices but {len(parts)} parts were given")
    offsets = []
    total = 0
    for h in parts:
        offsets.append(total)
        total += h.n
    spans = [((1 << h.n) - 1) << off for h, off in zip(parts, offsets)]
    adj = []
    for i, (h, off) in enumerate(zip(parts, offsets)):
        outside = 0
        for j in _bits(base.adj[i]):
            outside |= spans[j]
        adj.extend((nb << off) | outside for nb in h.adj)
    return Graph(total, tuple(adj))


def induced_subgraph(g: Graph, X: Sequence[int]) -> Graph:
    """Subgraph induced on ``X``; vertex ``X[k]`` becomes ``k``."""
    X = list(X)
    if not X:
        raise InvalidSetError("vertex set must be nonempty")
    if len(set(X)) != len(X) or any(not 0 <= v < g.n for v in X):
        raise InvalidSetError(f"invalid vertex set {X} for order {g.n}")
    index = {v: k for k, v in enumerate(X)}
    adj = []
    for v in X:
        nb = 0
        for w in _bits(g.adj[v]):
            k = index.get(w)
            if k is not None:
                nb |= 1 << k
        adj.append(nb)
    return Graph(len(X), tuple(adj))


# -- connectivity and distances ---------------------------------------------

def components(g: Graph) -> list[list[int]]:
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(_bits(seen))
        remaining &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def all_pairs_distances(g: Graph) -> list[list[int]]:
    rows = _backend.bfs_distances(g.n, g.adj) if g.n else None
    if rows is None:
        raise NotConnectedError("distance matrix is only defined for connected graphs")
    return rows


def diameter(g: Graph) -> int:
    return max(max(row) for row in all_pairs_distances(g))


# -- structure ----------------------------------------------------------------

def join_decompose(g: Graph) -> tuple[Graph, Graph] | None:
    """Split ``g = G1 v G2`` along the complement component containing vertex 0."""
    if g.n < 2:
        return None
    comps = components(complement(g))
    if len(comps) == 1:
        return None
    first = comps[0]
    rest = sorted(v for c in comps[1:] for v in c)
    return induced_subgraph(g, first), induced_subgraph(g, rest)


CLIQUE = "clique-twin"
INDEPENDENT = "independent-twin"
SINGLETON = "singleton"


def twin_partition(g: Graph) -> Partition:
    """Maximal classes of true twins (cliques) and false twins (independent sets)."""
    closed = [nb | (1 << v) for v, nb in enumerate(g.adj)]
    groups: dict[tuple[str, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("c", closed[v]), []).append(v)
    blocks = []
    tags = []
    placed = set()
    for (_, _), members in groups.items():
        if len(members) > 1:
            blocks.append(members)
            tags.append(CLIQUE)
            placed.update(members)
    open_groups: dict[int, list[int]] = {}
    for v in range(g.n):
        if v not in placed:
            open_groups.setdefault(g.adj[v], []).append(v)
    for members in open_groups.values():
        blocks.append(members)
        tags.append(INDEPENDENT if len(members) > 1 else SINGLETON)
    return Partition.of(blocks, g.n, tags)


def is_complete_multipartite(g: Graph) -> bool:
    """True iff non-adjacency is an equivalence relation (complement is a union of cliques)."""
    return all(
        _is_clique(complement(g), comp) for comp in components(complement(g))
    )


def _is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def multipartite_parts(g: Graph) -> int:
    """Number of parts if ``g`` is complete multipartite, else 0."""
    return len(components(complement(g))) if is_complete_multipartite(g) else 0


# -- isomorphism ----------------------------------------------------------------

def _refine(n: int, adj: Sequence[int], colors: Sequence) -> list[int]:
    """Colour refinement with canonical (sorted-signature) colour numbering."""
    col = list(colors)
    keys = sorted(set(col))
    col = [keys.index(c) for c in col]
    while True:
        sigs = [(col[v], tuple(sorted(col[w] for w in _bits(adj[v])))) for v in range(n)]
        keys = sorted(set(sigs))
        new = [keys.index(s) for s in sigs]
        if len(keys) == len(set(col)):
            return new
        col = new


def _colored_iso(n, adj1, col1, adj2, col2) -> bool:
    r1 = _refine(n, adj1, col1)
    r2 = _refine(n, adj2, col2)
    if sorted(r1) != sorted(r2):
        return False
    # the refinement numbering is canonical, so stable colours must correspond
    order = sorted(range(n), key=lambda v: (sum(1 for c in r1 if c == r1[v]), r1[v]))
    cand = {c: [w for w in range(n) if r2[w] == c] for c in set(r2)}
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in cand[r1[v]]:
            if used[w]:
                continue
            ok = True
            for u in order[:k]:
                if (adj1[v] >> u & 1) != (adj2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return extend(0)


def twin_quotient(g: Graph) -> tuple[Graph, list[tuple[str, int]], Partition]:
    """Quotient by the twin partition, with ``(tag, size)`` vertex colours."""
    part = twin_partition(g)
    reps = [b[0] for b in part.blocks]
    q = induced_subgraph(g, reps)
    colors = [(t, len(b)) for b, t in zip(part.blocks, part.tags)]
    return q, colors, part


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via the coloured twin quotients and backtracking."""
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    qg, cg, _ = twin_quotient(g)
    qh, ch, _ = twin_quotient(h)
    if qg.n != qh.n or sorted(cg) != sorted(ch):
        return False
    return _colored_iso(qg.n, qg.adj, cg, qh.adj, ch)


def canonical_mask(g: Graph) -> int:
    """Canonical integer code: minimum edge mask over refinement-respecting relabelings."""
    col = _refine(g.n, g.adj, [0] * g.n)
    cells = [[v for v in range(g.n) if col[v] == c] for c in range(max(col, default=-1) + 1)]
    return _backend.min_mask(g.n, g.adj, cells)


def from_mask(n: int, mask: int) -> Graph:
    edges = []
    for j in range(1, n):
        for i in range(j):
            if mask >> (j * (j - 1) // 2 + i) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of ``h``.

    Swapping two twins is an automorphism, so only the number of vertices
    taken from each twin class matters; that keeps families with large
    blocks cheap.
    """
    if h.n > g.n:
        return False
    target_edges = h.num_edges
    target_degs = sorted(h.degrees())
    blocks = twin_partition(g).blocks
    for counts in _bounded_compositions(h.n, [len(b) for b in blocks]):
        X = [v for b, k in zip(blocks, counts) for v in b[:k]]
        sub = induced_subgraph(g, sorted(X))
        if sub.num_edges != target_edges or sorted(sub.degrees()) != target_degs:
            continue
        if is_isomorphic(sub, h):
            return True
    return False


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    room = sum(caps[1:])
    for k in range(max(0, total - room), min(caps[0], total) + 1):
        for rest in _bounded_compositions(total - k, caps[1:]):
            yield (k,) + rest


# -- enumeration ------------------------------------------------------------------

MAX_ENUM_ORDER = 6


def _all_graphs(n: int) -> list[int]:
    """Canonical masks of every graph (connected or not) on ``n`` vertices."""
    level = {0}
    for k in range(2, n + 1):
        nxt = set()
        for mask in level:
            g = from_mask(k - 1, mask)
            for nbrs in range(1 << (k - 1)):
                adj = list(g.adj) + [nbrs]
                for v in _bits(nbrs):
                    adj[v] |= 1 << (k - 1)
                nxt.add(canonical_mask(Graph(k, tuple(adj))))
        level = nxt
    return sorted(level)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs."""
    if n < 1:
        raise InvalidOrderError(f"order must be positive, got {n}")
    if n > MAX_ENUM_ORDER:
        raise UnsupportedOrderError(
            f"built-in enumeration stops at n = {MAX_ENUM_ORDER}; feed a graph6 stream instead"
        )
    for mask in _all_graphs(n):
        g = from_mask(n, mask)
        if is_connected(g):
            yield g
