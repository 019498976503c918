"""Distance spectra: characteristic polynomials, exact spectra, threshold predicates,
cospectrality and distance equitable partitions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import ArityError, Graph, InvalidSetError, Partition, all_pairs_distances
from .linalg import char_poly_exact
from .poly import (
    X,
    IntPoly,
    RootInterval,
    count_roots,
    count_roots_beyond_algebraic,
    deflate_at,
    divide_exact,
    isolate_real_roots,
    squarefree_decompose,
)

ISOLATION_WIDTH = Fraction(1, 10**9)


class PreconditionError(ValueError):
    pass


@lru_cache(maxsize=8192)
def distance_char_poly(g: Graph) -> IntPoly:
    """``det(xI - D(G))``; raises ``NotConnectedError`` for disconnected ``g``."""
    return char_poly_exact(all_pairs_distances(g))


@dataclass(frozen=True)
class SpectrumEntry:
    root: RootInterval
    mult: int

    @property
    def approx(self) -> float:
        return self.root.approx()

    def to_json(self) -> dict:
        r = self.root
        root = str(r.exact) if r.exact is not None else [str(r.lo), str(r.hi)]
        return {"root": root, "approx": round(self.approx, 4), "mult": self.mult}


@dataclass(frozen=True)
class Spectrum:
    entries: tuple[SpectrumEntry, ...]

    @property
    def order(self) -> int:
        return sum(e.mult for e in self.entries)

    def values(self) -> list[float]:
        """All eigenvalues with repetition, descending (display precision)."""
        return [e.approx for e in self.entries for _ in range(e.mult)]

    def multiplicity(self, r) -> int:
        r = Fraction(r)
        return sum(e.mult for e in self.entries if e.root.exact == r)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def spectrum_of_poly(p: IntPoly) -> Spectrum:
    entries = []
    for f, m in squarefree_decompose(p):
        for root in isolate_real_roots(f, ISOLATION_WIDTH):
            entries.append(SpectrumEntry(root, m))
    entries.sort(key=lambda e: e.root.key(), reverse=True)
    return Spectrum(tuple(entries))


def spectrum(g: Graph) -> Spectrum:
    return spectrum_of_poly(distance_char_poly(g))


def multiplicity_at(g: Graph, r: int) -> int:
    return deflate_at(distance_char_poly(g), r)[1]


def eigencount_minus12(g: Graph) -> int:
    """``m(-1) + m(-2)``."""
    p = distance_char_poly(g)
    return deflate_at(p, -1)[1] + deflate_at(p, -2)[1]


def third_largest_le_minus1(g: Graph) -> bool:
    if g.n < 3:
        raise ArityError(f"the third largest eigenvalue needs n >= 3, got n = {g.n}")
    return count_roots(distance_char_poly(g), "greater", -1) <= 2


def second_least_ge_minus2(g: Graph) -> bool:
    if g.n < 2:
        raise ArityError(f"the second least eigenvalue needs n >= 2, got n = {g.n}")
    return count_roots(distance_char_poly(g), "less", -2) <= 1


# 1 - sqrt(3) is the root of x^2 - 2x - 2 lying in (-1, 0)
_ONE_MINUS_SQRT3 = (X * X - 2 * X - 2, Fraction(-1), Fraction(0))


def second_largest_below_1_minus_sqrt3(g: Graph) -> bool:
    """Exact test of ``∂2 < 1 - sqrt(3)``."""
    if g.n < 2:
        raise ArityError("the second largest eigenvalue needs n >= 2")
    minpoly, lo, hi = _ONE_MINUS_SQRT3
    above, at = count_roots_beyond_algebraic(distance_char_poly(g), minpoly, lo, hi, "greater")
    return above + at <= 1


def are_cospectral(g: Graph, h: Graph) -> bool:
    return g.n == h.n and distance_char_poly(g) == distance_char_poly(h)


# -- equitable partitions ---------------------------------------------------------

def _validated(g: Graph, p: Partition) -> Partition:
    return Partition.of(p.blocks, g.n, p.tags)


def check_equitable(g: Graph, p: Partition) -> list[list[int]] | None:
    """Divisor matrix ``B`` if ``p`` is distance equitable, else ``None``."""
    p = _validated(g, p)
    d = all_pairs_distances(g)
    b = []
    for bi in p.blocks:
        row = []
        for bj in p.blocks:
            sums = {sum(d[v][u] for u in bj) for v in bi}
            if len(sums) != 1:
                return None
            row.append(sums.pop())
        b.append(row)
    return b


def coarsest_equitable(g: Graph, seed: Partition | None = None) -> Partition:
    """Coarsest distance equitable refinement of ``seed`` (default: one block)."""
    d = all_pairs_distances(g)
    if seed is None:
        seed = Partition.of([range(g.n)], g.n)
    else:
        seed = _validated(g, seed)
    col = [0] * g.n
    for i, b in enumerate(seed.blocks):
        for v in b:
            col[v] = i
    nblocks = len(seed.blocks)
    while True:
        sigs = []
        for v in range(g.n):
            sums = [0] * nblocks
            for u in range(g.n):
                sums[col[u]] += d[v][u]
            sigs.append((col[v], tuple(sums)))
        keys = sorted(set(sigs))
        new = [keys.index(s) for s in sigs]
        if len(keys) == nblocks:
            break
        col, nblocks = new, len(keys)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(col[v], []).append(v)
    return Partition.of(groups.values(), g.n)


def divisor_divides(g: Graph, p: Partition) -> bool:
    b = check_equitable(g, p)
    if b is None:
        raise PreconditionError("partition is not distance equitable")
    return divide_exact(distance_char_poly(g), char_poly_exact(b)) is not None


__all__ = [
    "InvalidSetError",
    "PreconditionError",
    "Spectrum",
    "SpectrumEntry",
    "are_cospectral",
    "check_equitable",
    "coarsest_equitable",
    "distance_char_poly",
    "divisor_divides",
    "eigencount_minus12",
    "multiplicity_at",
    "second_largest_below_1_minus_sqrt3",
    "second_least_ge_minus2",
    "spectrum",
    "spectrum_of_poly",
    "third_largest_le_minus1",
]
