"""Exact univariate polynomials over the integers.

Coefficients are stored in ascending degree order with no trailing zeros;
the zero polynomial has no coefficients. Rational arithmetic uses
:class:`fractions.Fraction`. Everything that decides an eigenvalue question
goes through here, so nothing in this module touches floating point except
:func:`RootInterval.approx`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction


class EndpointRootError(ValueError):
    """A Sturm interval endpoint is itself a root."""


class ZeroPolynomialError(ValueError):
    pass


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def linear(cls, root: int) -> "IntPoly":
        """``x - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "IntPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "IntPoly":
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, t):
        return eval_at(self, t)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def sign_at(self, t: Fraction | int) -> int:
        """Sign of ``p(t)`` computed in integers (``t = num/den`` with ``den > 0``)."""
        t = Fraction(t)
        num, den = t.numerator, t.denominator
        acc = 0
        scale = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * scale
            scale *= den
        # acc = den^(deg) * p(t) up to a positive factor
        return (acc > 0) - (acc < 0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i) else str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            terms.append(("-" if c < 0 else "+") + body)
        s = " ".join(t[0] + " " + t[1:] for t in terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]


def _lift(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly.const(p)
    raise TypeError(f"cannot combine IntPoly with {type(p).__name__}")


X = IntPoly.x()


def eval_at(p: IntPoly, t) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


# -- rational-coefficient helpers -------------------------------------------

def _q(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _strip(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], _strip(a)
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] * inv
        quot[k] = coef
        if coef:
            for i, bc in enumerate(b):
                a[k + i] -= coef * bc
    return _strip(quot), _strip(a[: len(b) - 1])


def _signed_primitive(a: Sequence[Fraction], den: int) -> IntPoly:
    # keep the sign of the input: divide by the positive content only
    p = IntPoly(int(c * den) for c in a)
    g = p.content()
    return IntPoly(c // g for c in p.coeffs)


def _positive_multiple(a: Sequence[Fraction]) -> IntPoly:
    """Integer polynomial equal to ``a`` times a positive rational."""
    if not a:
        return IntPoly()
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return _signed_primitive(a, den)


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    return _positive_multiple(_qgcd(_q(p), _q(q)))


# -- exact division and deflation -------------------------------------------------

def divide_exact(p: IntPoly, q: IntPoly) -> IntPoly | None:
    """``p / q`` if ``q`` divides ``p`` with an integer quotient, else ``None``."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = _qdivmod(_q(p), _q(q))
    if rem or any(c.denominator != 1 for c in quot):
        return None
    return IntPoly(int(c) for c in quot)


def deflate_at(p: IntPoly, r) -> tuple[IntPoly, int]:
    """Largest ``k`` with ``(x - r)^k | p`` and the cofactor ``p / (x - r)^k``."""
    if p.is_zero():
        raise ZeroPolynomialError("cannot deflate the zero polynomial")
    r = Fraction(r)
    lin = IntPoly((-r.numerator, r.denominator))
    k = 0
    while p.degree >= 1 and p.sign_at(r) == 0:
        nxt = divide_exact(p, lin)
        if nxt is None:
            break
        p = nxt
        k += 1
    return p, k


def squarefree_decompose(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition ``p = c * prod(f_i ** m_i)`` with primitive square-free ``f_i``."""
    if p.is_zero():
        raise ZeroPolynomialError("square-free decomposition of the zero polynomial")
    if p.degree <= 0:
        return []
    a = _q(p)
    da = _q(p.derivative())
    g = _qgcd(a, da)
    b, _ = _qdivmod(a, g)
    c, _ = _qdivmod(da, g)
    out = []
    i = 1
    while len(b) > 1:
        db = _qderiv(b)
        d = _qsub(c, db)
        h = _qgcd(b, d)
        if len(h) > 1:
            out.append((_positive_multiple(h), i))
        b, _ = _qdivmod(b, h)
        c, _ = _qdivmod(d, h)
        i += 1
    return [(f if f.lc > 0 else -f, m) for f, m in out]


def _qderiv(a: Sequence[Fraction]) -> list[Fraction]:
    return _strip([i * c for i, c in enumerate(a)][1:])


def _qsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def is_squarefree(p: IntPoly) -> bool:
    return p.degree <= 0 or poly_gcd(p, p.derivative()).degree == 0


# -- Sturm sequences and root isolation ------------------------------------------------

def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every root satisfies ``|z| < 1 + max |a_i / a_n|``."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.lc)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs[:-1])


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        _, rem = _qdivmod(_q(chain[-2]), _q(chain[-1]))
        if not rem:
            break
        chain.append(-_positive_multiple(rem))
    return [f for f in chain if f]


def _variations(chain: Sequence[IntPoly], t) -> int:
    signs = [s for s in (f.sign_at(t) for f in chain) if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def sturm_count(p: IntPoly, a, b, chain: Sequence[IntPoly] | None = None) -> int:
    """Number of distinct real roots of square-free ``p`` in the open interval ``(a, b)``."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.sign_at(a) == 0 or p.sign_at(b) == 0:
        raise EndpointRootError(f"polynomial vanishes at an endpoint of ({a}, {b})")
    if chain is None:
        if not is_squarefree(p):
            raise ValueError("sturm_count needs a square-free polynomial")
        chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


@dataclass(frozen=True)
class RootInterval:
    """A real root: exact when ``exact`` is set, otherwise the unique root in ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    def approx(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    def key(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2


def isolate_real_roots(p: IntPoly, width=Fraction(1, 10**9)) -> list[RootInterval]:
    """Isolate every real root of square-free ``p``; ascending order.

    Integer roots are always reported exactly; other roots get an open
    interval of width below ``width``.
    """
    width = Fraction(width)
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    found: list[RootInterval] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        cnt = _variations(chain, lo) - _variations(chain, hi)
        if cnt == 0:
            continue
        if cnt == 1:
            found.append(_refine_simple(p, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            found.append(RootInterval(mid, mid, mid))
            delta = (hi - lo) / 4
            while True:
                if p.sign_at(mid - delta) and p.sign_at(mid + delta) and (
                    _variations(chain, mid - delta) - _variations(chain, mid + delta) == 1
                ):
                    break
                delta /= 2
            stack.append((lo, mid - delta))
            stack.append((mid + delta, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    found.sort(key=RootInterval.key)
    return found


def _refine_simple(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> RootInterval:
    slo = p.sign_at(lo)
    # integer roots are reported exactly
    k = -((-lo.numerator) // lo.denominator) if lo.denominator != 1 else lo.numerator + 1
    while k < hi:
        if p.sign_at(k) == 0:
            return RootInterval(Fraction(k), Fraction(k), Fraction(k))
        if p.sign_at(k) != slo:
            break
        k += 1
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return RootInterval(mid, mid, mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi)


def count_roots(p: IntPoly, side: str, t) -> int:
    """Roots of ``p`` strictly greater (``side="greater"``) or less than ``t``, with multiplicity."""
    if side not in ("greater", "less"):
        raise ValueError("side must be 'greater' or 'less'")
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no finite root count")
    t = Fraction(t)
    q, _ = deflate_at(p, t)
    total = 0
    for f, m in squarefree_decompose(q):
        bound = root_bound(f)
        lo, hi = (t, max(bound, t + 1)) if side == "greater" else (min(-bound, t - 1), t)
        total += m * sturm_count(f, lo, hi, chain=sturm_chain(f))
    return total


def count_roots_beyond_algebraic(
    p: IntPoly, minpoly: IntPoly, lo, hi, side: str = "greater"
) -> tuple[int, int]:
    """Count roots of ``p`` strictly beyond the irrational root ``r`` of ``minpoly`` in ``(lo, hi)``.

    ``minpoly`` must be irreducible over the rationals with exactly one root in
    ``(lo, hi)``. Returns ``(count, multiplicity of r in p)``; counts include
    multiplicity.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if sturm_count(minpoly, lo, hi) != 1:
        raise ValueError("bracket must isolate exactly one root of minpoly")
    k = 0
    rest = p
    while True:
        nxt = divide_exact(rest, minpoly)
        if nxt is None:
            break
        rest = nxt
        k += 1
    slo = minpoly.sign_at(lo)
    # dividing by minpoly also removed its other roots; count those beyond r
    mb = root_bound(minpoly)
    if side == "greater":
        total = k * sturm_count(minpoly, hi, max(mb, hi + 1))
    else:
        total = k * sturm_count(minpoly, min(-mb, lo - 1), lo)
    for f, m in squarefree_decompose(rest):
        chain = sturm_chain(f)
        a, b = lo, hi
        # shrink the bracket around r until f has no root inside it
        while f.sign_at(a) == 0 or f.sign_at(b) == 0 or _variations(chain, a) - _variations(chain, b):
            mid = (a + b) / 2
            if minpoly.sign_at(mid) == slo:
                a = mid
            else:
                b = mid
        bound = root_bound(f)
        if side == "greater":
            total += m * sturm_count(f, b, max(bound, b + 1), chain=chain)
        else:
            total += m * sturm_count(f, min(-bound, a - 1), a, chain=chain)
    return total, k
