"""Exact characteristic polynomials, exact eigenvalue counting and a float eigensolver."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import _backend
from .poly import IntPoly, count_roots

Matrix = Sequence[Sequence[int]]


class SymmetryError(ValueError):
    pass


class ShapeError(ValueError):
    pass


def _check_square(m: Matrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ShapeError(f"matrix is not square: row of length {len(row)} in a {n}-row matrix")
    return n


def is_symmetric(m: Matrix) -> bool:
    n = _check_square(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def char_poly_exact(m: Matrix) -> IntPoly:
    """``det(xI - m)`` for a square integer matrix (Faddeev-LeVerrier recurrence).

    The trace recurrence divides by ``k`` at step ``k``; for integer input the
    division is always exact, which is asserted rather than assumed.
    """
    n = _check_square(m)
    a = [[int(v) for v in row] for row in m]
    if n == 0:
        return IntPoly.const(1)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # M_1 = I, c_{n-1} = -tr(A)
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(n) if a[i][t]) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("inexact trace division; input is not an integer matrix")
        c = -tr // k
        coeffs[n - k] = c
        if k < n:
            mk = am
            for i in range(n):
                mk[i][i] += c
    return IntPoly(coeffs)


def approx_eigenvalues(m: Sequence[Sequence[float]]) -> list[float]:
    """Eigenvalues of a real symmetric matrix, descending (cyclic Jacobi)."""
    if not is_symmetric(m):
        raise SymmetryError("approx_eigenvalues needs a symmetric matrix")
    if not m:
        return []
    return list(_backend.jacobi_eigenvalues([[float(v) for v in row] for row in m]))


def count_eigen_with_multiplicity(m: Matrix, side: str, t) -> int:
    """Eigenvalues of ``m`` strictly greater/less than rational ``t``, with multiplicity."""
    return count_roots(char_poly_exact(m), side, Fraction(t))
