"""The graph families of the characterization theorems: builders, side conditions,
enumerators and a structural recognizer."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .graph import (
    Graph,
    Partition,
    complete,
    complete_multipartite,
    disjoint_union,
    edgeless,
    glex_product,
    is_connected,
    join,
    path,
    twin_quotient,
)
from .spectral import eigencount_minus12

I_IDS = tuple(f"I{i}" for i in range(1, 8))
J_IDS = tuple(f"J{i}" for i in range(1, 8))
K_IDS = ("KST", "KCK", "KABC", "KKK", "KJOIN")
FAMILY_IDS = I_IDS + J_IDS + K_IDS
PRIORITY = {fid: i for i, fid in enumerate(FAMILY_IDS)}

# per id: minimum value of each parameter
MINIMUMS: dict[str, tuple[int, ...]] = {
    "I1": (4,),
    "I2": (2, 1),
    "I3": (2, 2, 2),
    "I4": (2, 2, 1),
    "I5": (1, 1),
    "I6": (1, 2, 2),
    "I7": (1, 2, 1),
    **{j: (1, 1, 1, 1) for j in J_IDS},
    "KST": (1, 1),
    "KCK": (1, 1),
    "KABC": (1, 1, 1),
    "KKK": (1, 1, 1),
    "KJOIN": (1, 1, 1),
}

# substituted atoms along P4 for the J families: K = clique, E = edgeless
J_PATTERN = {
    "J1": "EKEE",
    "J2": "EKKE",
    "J3": "EKEK",
    "J4": "EEKK",
    "J5": "EKKK",
    "J6": "KKEK",
    "J7": "KKKK",
}


class DescriptorError(ValueError):
    pass


_DESCRIPTOR_RE = re.compile(r"^\s*([A-Z]+[0-9]?)\s*\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*$")


@dataclass(frozen=True, order=False)
class FamilyDescriptor:
    id: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.id not in MINIMUMS:
            raise DescriptorError(f"unknown family id {self.id!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        mins = MINIMUMS[self.id]
        if len(self.params) != len(mins):
            raise DescriptorError(f"{self.id} takes {len(mins)} parameters, got {len(self.params)}")
        for p, lo in zip(self.params, mins):
            if p < lo:
                raise DescriptorError(f"{self} violates the minimums {list(mins)}")

    @classmethod
    def parse(cls, text: str) -> "FamilyDescriptor":
        m = _DESCRIPTOR_RE.match(text)
        if not m:
            raise DescriptorError(f"malformed descriptor {text!r}; expected e.g. 'J7[1,9,1,3]'")
        return cls(m.group(1), tuple(int(x) for x in m.group(2).split(",")))

    @property
    def order(self) -> int:
        return sum(self.params)

    def sort_key(self):
        return (PRIORITY[self.id], self.params)

    def __str__(self) -> str:
        return f"{self.id}[{','.join(map(str, self.params))}]"


def _atom(kind: str, k: int) -> Graph:
    return complete(k) if kind == "K" else edgeless(k)


def build(fd: FamilyDescriptor) -> Graph:
    p = fd.params
    fid = fd.id
    K, E = complete, edgeless
    if fid == "I1":
        return K(p[0])
    if fid == "I2":
        return join(K(p[0]), E(p[1]))
    if fid in ("I3", "KJOIN"):
        return join(K(p[0]), disjoint_union(K(p[1]), K(p[2])))
    if fid == "I4":
        return join(K(p[0]), disjoint_union(K(p[1]), E(p[2])))
    if fid in ("I5", "KST"):
        return join(E(p[0]), E(p[1]))
    if fid == "I6":
        return join(E(p[0]), disjoint_union(K(p[1]), K(p[2])))
    if fid == "I7":
        return join(E(p[0]), disjoint_union(K(p[1]), E(p[2])))
    if fid in J_PATTERN:
        return glex_product(path(4), [_atom(k, s) for k, s in zip(J_PATTERN[fid], p)])
    if fid == "KCK":
        return join(E(p[0]), K(p[1]))
    if fid == "KABC":
        return complete_multipartite(*p)
    if fid == "KKK":
        return join(join(E(p[0]), E(p[1])), K(p[2]))
    raise DescriptorError(fid)  # pragma: no cover


def factor_partition(fd: FamilyDescriptor) -> Partition:
    """The blocks of the defining expression, as consecutive vertex ranges."""
    blocks = []
    start = 0
    for s in fd.params:
        blocks.append(range(start, start + s))
        start += s
    return Partition.of(blocks, start)


# -- side conditions ------------------------------------------------------------

def j7_value(a: int, b: int, c: int, d: int) -> int:
    return (a + b + c + d - 3 * a * c - 8 * a * d - 3 * b * d
            - a * b * c - a * b * d - a * c * d - b * c * d + a * b * c * d + 1)


def thm31_admissible(fd: FamilyDescriptor) -> bool:
    """Side conditions of the ∂3 <= -1, ∂(n-1) >= -2 characterization."""
    fid = fd.id
    if fid in I_IDS:
        return True
    if fid not in J_IDS:
        return False
    a, b, c, d = fd.params
    if fid == "J1":
        return (
            (a == 1 and c == 1)
            or (a == 1 and c == 2 and d <= 2)
            or (a == 1 and c >= 3 and d == 1)
            or (a == 2 and c == 1 and d <= 2)
            or (a >= 3 and c == 1 and d == 1)
        )
    if fid == "J2":
        return a == 1 or (a == 2 and d <= 2) or (a >= 3 and d == 1)
    if fid == "J3":
        return a == 1 or c == 1
    if fid == "J4":
        return a == 1 or (a == 2 and b <= 2) or (a >= 3 and b == 1)
    if fid in ("J5", "J6"):
        return True
    return j7_value(a, b, c, d) <= 0


def thm41_member(fd: FamilyDescriptor) -> bool:
    """``m(-1) + m(-2) = n - 2`` families (n >= 4)."""
    if fd.order < 4:
        return False
    if fd.id == "KST":
        return True
    if fd.id == "KCK":
        s, t = fd.params
        return s >= 2 and t >= 2
    return False


def thm42_member(fd: FamilyDescriptor, corrected: bool = False) -> bool:
    """``m(-1) + m(-2) = n - 3`` families (n >= 5), as listed in the theorem.

    With ``corrected=True`` the complete tripartite family additionally needs
    at most one part of size 1: ``K_{1,1,c}`` has ``-1`` as an eigenvalue
    (its two singleton parts are adjacent twins) and lands in the ``n - 2``
    bucket instead.
    """
    if fd.order < 5:
        return False
    p = fd.params
    fid = fd.id
    if fid == "KJOIN":
        a, b, c = p
        return a + b + c >= 5 and b + c >= 3
    if fid == "KABC":
        return sum(p) >= 5 and (not corrected or sorted(p)[1] >= 2)
    if fid in ("KKK", "I4", "I6"):
        return min(p) >= 2
    if fid == "I7":
        a, b, c = p
        return a + c >= 3 and b >= 2
    if fid == "J1":
        a, b, c, d = p
        return (a, c, d) in ((1, 2, 2), (2, 1, 2))
    if fid == "J2":
        return p[0] == 2 and p[3] == 2
    if fid == "J4":
        return p[0] == 2 and p[1] == 2
    if fid == "J7":
        return sum(p) >= 5 and j7_value(*p) == 0
    return False


MEMBERSHIP = {"thm31": thm31_admissible, "thm41": thm41_member, "thm42": thm42_member}
THEOREM_IDS = {
    "thm31": I_IDS + J_IDS,
    "thm41": ("KST", "KCK"),
    "thm42": ("KJOIN", "KABC", "KKK", "I4", "I6", "I7", "J1", "J2", "J4", "J7"),
}


# -- enumeration ----------------------------------------------------------------

def _compositions(total: int, mins: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if len(mins) == 1:
        if total >= mins[0]:
            yield (total,)
        return
    rest_min = sum(mins[1:])
    for first in range(mins[0], total - rest_min + 1):
        for tail in _compositions(total - first, mins[1:]):
            yield (first,) + tail


def descriptors_of_order(n: int, ids=FAMILY_IDS) -> Iterator[FamilyDescriptor]:
    """Every structurally valid descriptor of total order ``n`` (priority order)."""
    for fid in sorted(ids, key=PRIORITY.__getitem__):
        for params in _compositions(n, MINIMUMS[fid]):
            yield FamilyDescriptor(fid, params)


def descriptors_up_to(max_param: int, ids=FAMILY_IDS) -> Iterator[FamilyDescriptor]:
    """Descriptors with every parameter in ``[minimum, max_param]``."""
    from itertools import product

    for fid in sorted(ids, key=PRIORITY.__getitem__):
        mins = MINIMUMS[fid]
        for params in product(*(range(lo, max(lo, max_param) + 1) for lo in mins)):
            yield FamilyDescriptor(fid, params)


def enumerate_members(n: int, which: str) -> Iterator[FamilyDescriptor]:
    if which not in MEMBERSHIP:
        raise ValueError(f"which must be one of {sorted(MEMBERSHIP)}")
    if n < 2:
        raise ValueError("n must be at least 2")
    test = MEMBERSHIP[which]
    for fd in descriptors_of_order(n, THEOREM_IDS[which]):
        if test(fd):
            yield fd


# -- recognition ------------------------------------------------------------------

MAX_QUOTIENT = 4


def _quotient_key(g: Graph):
    """Canonical form of the coloured twin quotient, or ``None`` if it is too big."""
    q, colors, _ = twin_quotient(g)
    if q.n > MAX_QUOTIENT:
        return None
    best = None
    for perm in permutations(range(q.n)):
        cols = tuple(colors[v] for v in perm)
        edges = tuple(int(q.has_edge(perm[i], perm[j])) for j in range(q.n) for i in range(j))
        cand = (cols, edges)
        if best is None or cand < best:
            best = cand
    return (g.n, best)


@lru_cache(maxsize=64)
def _catalog(n: int) -> dict:
    table: dict = {}
    for fd in descriptors_of_order(n):
        table.setdefault(_quotient_key(build(fd)), []).append(fd)
    return table


def recognize_all(g: Graph) -> list[FamilyDescriptor]:
    """Every catalog descriptor whose graph is isomorphic to ``g`` (priority order)."""
    if g.n < 1 or not is_connected(g):
        return []
    key = _quotient_key(g)
    if key is None:
        return []
    return list(_catalog(g.n).get(key, ()))


def recognize(g: Graph) -> FamilyDescriptor | None:
    found = recognize_all(g)
    return found[0] if found else None


# -- eigenvalue buckets -------------------------------------------------------------

def p4_form(g: Graph) -> str | None:
    """``P4[...]`` description when the twin quotient of ``g`` is a path on four blocks.

    Covers substitution patterns outside the named J families, e.g.
    ``P4[K2,K2^c,K2^c,K2]``. Of the two orientations the lexicographically
    smaller string is returned.
    """
    q, colors, _ = twin_quotient(g)
    if q.n != 4 or q.num_edges != 3 or sorted(q.degrees()) != [1, 1, 2, 2]:
        return None
    end = next(v for v in range(4) if q.degree(v) == 1)
    order = [end]
    while len(order) < 4:
        order.append(next(w for w in q.neighbors(order[-1]) if w not in order))

    def render(v):
        tag, size = colors[v]
        return f"K{size}^c" if tag == "independent-twin" else f"K{size}"

    forms = [",".join(render(v) for v in seq) for seq in (order, order[::-1])]
    return f"P4[{min(forms)}]"


def classify_eigencount(g: Graph) -> str:
    gap = g.n - eigencount_minus12(g)
    return {1: "n_minus_1", 2: "n_minus_2", 3: "n_minus_3"}.get(gap, "other")
