"""Numeric fixtures and closed-form D-polynomials transcribed from the source tables.

Matrices are stored row by row as digit strings (every entry is a single
digit). Printed values are kept as strings so the 4-decimal text survives.
"""
from __future__ import annotations

from math import sqrt

from .families import FamilyDescriptor
from .poly import IntPoly, X

# (index, statistic k for ∂k, printed value, rows)
TABLE1_RAW = (
    (1, 3, "-0.6557", ("01231", "10122", "21012", "32102", "12220")),
    (2, 3, "-0.9321", ("01231", "10122", "21012", "32103", "12230")),
    (3, 3, "-0.6286", ("01231", "10122", "21013", "32102", "12320")),
    (4, 3, "-0.6012", ("01231", "10122", "21013", "32103", "12330")),
    (5, 3, "-0.8365", ("01232", "10121", "21011", "32102", "21120")),
    (6, 5, "-2.5294", ("012322", "101211", "210122", "321022", "212201", "212210")),
    (7, 5, "-2.4413", ("012322", "101211", "210122", "321023", "212201", "212310")),
    (8, 5, "-2.4413", ("012322", "101211", "210122", "321032", "212301", "212210")),
    (9, 5, "-2.3224", ("012322", "101211", "210122", "321033", "212301", "212310")),
    (10, 3, "-0.7666", ("012311", "101211", "210122", "321022", "112202", "112220")),
    (11, 3, "-0.7520", ("012311", "101211", "210122", "321023", "112202", "112320")),
    (12, 3, "-2.0671", ("012311", "101211", "210122", "321032", "112302", "112220")),
    (13, 3, "-0.6851", ("012311", "101211", "210122", "321033", "112302", "112320")),
    (14, 5, "-2.1099", ("012321", "101211", "210122", "321022", "212201", "112210")),
    (15, 5, "-2.1725", ("012321", "101211", "210122", "321022", "212202", "112220")),
    (16, 5, "-2.1099", ("012321", "101211", "210122", "321023", "212201", "112310")),
    (17, 5, "-2.0898", ("012321", "101211", "210122", "321023", "212202", "112320")),
    (18, 3, "-0.5714", ("012321", "101211", "210122", "321032", "212301", "112210")),
    (19, 5, "-2.4413", ("012321", "101211", "210122", "321032", "212302", "112220")),
    (20, 3, "-0.6851", ("012321", "101211", "210122", "321033", "212301", "112310")),
    (21, 5, "-2.3224", ("012321", "101211", "210122", "321033", "212302", "112320")),
    (22, 5, "-2.6712", ("012321", "101212", "210121", "321022", "212202", "121220")),
    (23, 5, "-3.4142", ("012321", "101212", "210121", "321022", "212203", "121230")),
    (24, 5, "-2.5829", ("012321", "101212", "210121", "321032", "212302", "121220")),
    (25, 5, "-3.1708", ("012321", "101212", "210121", "321032", "212303", "121230")),
    (26, 5, "-2.4216", ("012321", "101211", "210121", "321022", "212202", "111220")),
    (27, 5, "-2.3862", ("012321", "101211", "210121", "321032", "212302", "111220")),
    (28, 3, "-0.4353", ("012311", "101212", "210121", "321022", "112202", "121220")),
    (29, 3, "-0.8401", ("012311", "101212", "210121", "321032", "112302", "121220")),
    (30, 3, "-0.4523", ("012311", "101211", "210121", "321022", "112202", "111220")),
    (31, 3, "-0.6010", ("012311", "101211", "210121", "321032", "112302", "111220")),
    (32, 3, "-0.8303", ("012322", "101211", "210122", "321021", "212201", "212110")),
    (33, 3, "-0.6712", ("012322", "101211", "210121", "321021", "212201", "211110")),
    (34, 3, "-0.6535", ("012312", "101211", "210122", "321021", "112201", "212110")),
    (35, 3, "-0.4679", ("012312", "101211", "210121", "321021", "112201", "211110")),
    (36, 5, "-2.3391", ("012322", "101212", "210121", "321022", "212201", "221210")),
    (37, 5, "-2.5829", ("012323", "101212", "210121", "321022", "212201", "321210")),
    (38, 5, "-2.5829", ("012322", "101212", "210121", "321032", "212301", "221210")),
    (39, 5, "-3.1708", ("012323", "101212", "210121", "321032", "212301", "321210")),
    (40, 3, "-0.8636", ("012322", "101212", "210121", "321021", "212201", "221110")),
    (41, 3, "-0.8401", ("012323", "101212", "210121", "321021", "212201", "321110")),
    (42, 3, "-0.7720", ("012312", "101212", "210121", "321021", "112201", "221110")),
    (43, 5, "-2.3770", ("012311", "101222", "210111", "321022", "121201", "121210")),
    (44, 3, "-0.7465", ("012311", "101211", "210111", "321022", "111202", "111220")),
    (45, 3, "-0.7465", ("012311", "101221", "210111", "321022", "121201", "111210")),
    (46, 5, "-2.3770", ("012311", "101221", "210111", "321022", "121202", "111220")),
    (47, 3, "-0.4607", ("012312", "101221", "210112", "321021", "121202", "212120")),
    (48, 3, "0", ("012312", "101221", "210112", "321021", "121203", "212130")),
    (49, 3, "-0.6535", ("012312", "101221", "210111", "321021", "121202", "211120")),
    (50, 3, "-0.4679", ("012312", "101211", "210111", "321021", "111202", "211120")),
    (51, 3, "-0.7720", ("012312", "101221", "210112", "321021", "121201", "212110")),
)

# A12 is printed with a ∂3 label but a value below -2; accept ∂5 as well
TABLE1_ALT_STAT = {12: 5}


def _matrix(rows) -> list[list[int]]:
    return [[int(ch) for ch in r] for r in rows]


def table1() -> list[dict]:
    return [
        {"label": f"A{i}", "stat": k, "value": float(v), "printed": v, "matrix": _matrix(rows)}
        for i, k, v, rows in TABLE1_RAW
    ]


# bordered P4: (d1, d2, d3, d4) -> printed ∂4
TABLE2_RAW = (
    ((2, 2, 2, 2), "-2.3956"), ((2, 2, 2, 3), "-2.3810"), ((2, 2, 3, 2), "-3.0586"), ((2, 2, 3, 3), "-2.6028"),
    ((2, 3, 2, 2), "-3.0586"), ((2, 3, 2, 3), "-3.1163"), ((2, 3, 3, 2), "-3.4142"), ((2, 3, 3, 3), "-3.1014"),
    ((3, 2, 2, 2), "-2.3810"), ((3, 2, 2, 3), "-3.1436"), ((3, 2, 3, 2), "-3.1163"), ((3, 2, 3, 3), "-3.2798"),
    ((3, 3, 2, 2), "-2.6028"), ((3, 3, 2, 3), "-3.2798"), ((3, 3, 3, 2), "-3.1014"), ((3, 3, 3, 3), "-3.4142"),
)

P4_DISTANCES = ((0, 1, 2, 3), (1, 0, 1, 2), (2, 1, 0, 1), (3, 2, 1, 0))


def bordered_p4(border) -> list[list[int]]:
    m = [list(r) + [d] for r, d in zip(P4_DISTANCES, border)]
    m.append(list(border) + [0])
    return m


def table2() -> list[dict]:
    return [
        {"label": "".join(map(str, b)), "border": b, "value": float(v), "printed": v, "matrix": bordered_p4(b)}
        for b, v in TABLE2_RAW
    ]


# forbidden fixtures: label -> (order, statistic k for ∂k, printed value)
FIG2 = {
    "F1": (5, 3, "-0.3820"),
    "F2": (5, 3, "-0.9125"),
    "F3": (5, 3, "-0.7217"),
    "F4": (6, 5, "-2.2223"),
    "F5": (6, 5, "-2.3589"),
    "F6": (5, 3, "-0.8284"),
    "F7": (5, 3, "-0.7667"),
}

# (description, statistic k, printed value) quoted in the running text
ANCHORS = (
    ("P5", 3, -0.7639),
    ("P4", 3, -1.1623),
    ("K1,2", 2, 1 - sqrt(3)),
    ("P4[2K1,K1,2K1,K1]", 3, -0.8990),
    ("K2,2,2,1", 4, -0.8730),
)


def _bracket(coeffs_desc) -> IntPoly:
    return IntPoly(reversed(coeffs_desc))


def table3_factors(fd: FamilyDescriptor) -> tuple[int, int, IntPoly]:
    """``(e1, e2, Psi)`` with ``Phi = (x+1)^e1 (x+2)^e2 Psi`` as printed."""
    fid, p = fd.id, fd.params
    if fid == "I1":
        (n,) = p
        return n - 1, 0, X - (n - 1)
    if fid == "I2":
        a, b = p
        return a - 1, b - 1, _bracket((1, 3 - 2*b - a, -2*a - 2*b + a*b + 2))
    if fid == "I3":
        a, b, c = p
        return a + b + c - 3, 0, _bracket((
            1, 3 - b - c - a, 3 - 2*b - 2*c - 3*b*c - 2*a,
            -a - b - c - 3*b*c + a*b*c + 1))
    if fid == "I4":
        a, b, c = p
        return a + b - 2, c - 1, _bracket((
            1, 4 - b - 2*c - a, a*c - 3*b - 4*c - 3*a - 2*b*c + 5,
            -2*a - 2*b - 2*c + a*c - 2*b*c + a*b*c + 2))
    if fid == "I5":
        a, b = p
        return 0, a + b - 2, _bracket((1, 4 - 2*b - 2*a, -4*a - 4*b + 3*a*b + 4))
    if fid == "I6":
        a, b, c = p
        return b + c - 2, a - 1, _bracket((
            1, 4 - b - c - 2*a, a*b - 3*b - 3*c - 4*a + a*c - 3*b*c + 5,
            -2*a - 2*b - 2*c + a*b + a*c - 6*b*c + 4*a*b*c + 2))
    if fid == "I7":
        a, b, c = p
        return b - 1, a + c - 2, _bracket((
            1, 5 - b - 2*c - 2*a, a*b - 4*b - 6*c - 6*a + 3*a*c - 2*b*c + 8,
            -4*a - 4*b - 4*c + 2*a*b + 3*a*c - 4*b*c + 3*a*b*c + 4))
    if fid == "J1":
        a, b, c, d = p
        return b - 1, a + c + d - 3, _bracket((
            1, 7 - b - 2*c - 2*d - 2*a,
            a*b - 6*b - 10*c - 10*d - 10*a - 5*a*d + b*c - 2*b*d + 3*c*d + 18,
            4*a*b - 12*b - 16*c - 16*d - 16*a - 15*a*d + 4*b*c - 8*b*d + 9*c*d
            + 3*a*b*d + 8*a*c*d + 3*b*c*d + 20,
            -8*a - 8*b - 8*c - 8*d + 4*a*b - 10*a*d + 4*b*c - 8*b*d + 6*c*d
            + 6*a*b*d + 8*a*c*d + 6*b*c*d - 4*a*b*c*d + 8))
    if fid == "J2":
        a, b, c, d = p
        return b + c - 2, a + d - 2, _bracket((
            1, 6 - b - c - 2*d - 2*a,
            a*b - 5*b - 5*c - 8*d - 8*a - 2*a*c - 5*a*d - 2*b*d + c*d + 13,
            3*a*b - 8*b - 8*c - 10*d - 10*a - 6*a*c - 10*a*d - 6*b*d + 3*c*d
            + a*b*c + 3*a*b*d + 3*a*c*d + b*c*d + 12,
            -4*a - 4*b - 4*c - 4*d + 2*a*b - 4*a*c - 5*a*d - 4*b*d + 2*c*d
            + 2*a*b*c + 3*a*b*d + 3*a*c*d + 2*b*c*d - a*b*c*d + 4))
    if fid == "J3":
        a, b, c, d = p
        return b + d - 2, a + c - 2, _bracket((
            1, 6 - b - 2*c - d - 2*a,
            a*b - 5*b - 8*c - 5*d - 8*a - 7*a*d + b*c - 3*b*d + c*d + 13,
            3*a*b - 8*b - 10*c - 8*d - 10*a - 21*a*d + 3*b*c - 12*b*d + 3*c*d
            + 4*a*b*d + 8*a*c*d + 4*b*c*d + 12,
            -4*a - 4*b - 4*c - 4*d + 2*a*b - 14*a*d + 2*b*c - 12*b*d + 2*c*d
            + 8*a*b*d + 8*a*c*d + 8*b*c*d - 4*a*b*c*d + 4))
    if fid == "J4":
        a, b, c, d = p
        return c + d - 2, a + b - 2, _bracket((
            1, 6 - 2*b - c - d - 2*a,
            3*a*b - 8*b - 5*c - 5*d - 8*a - 2*a*c - 7*a*d + b*c - 2*b*d + 13,
            6*a*b - 10*b - 8*c - 8*d - 10*a - 6*a*c - 21*a*d + 3*b*c - 6*b*d
            + 3*a*b*c + 11*a*b*d + a*c*d + b*c*d + 12,
            -4*a - 4*b - 4*c - 4*d + 3*a*b - 4*a*c - 14*a*d + 2*b*c - 4*b*d
            + 3*a*b*c + 11*a*b*d + 2*a*c*d + 2*b*c*d - a*b*c*d + 4))
    if fid == "J5":
        a, b, c, d = p
        return b + c + d - 3, a - 1, _bracket((
            1, 5 - b - c - d - 2*a,
            a*b - 4*b - 4*c - 4*d - 6*a - 2*a*c - 7*a*d - 3*b*d + 9,
            2*a*b - 5*b - 5*c - 5*d - 6*a - 4*a*c - 14*a*d - 9*b*d
            + a*b*c + 4*a*b*d + a*c*d + b*c*d + 7,
            -2*a - 2*b - 2*c - 2*d + a*b - 2*a*c - 7*a*d - 6*b*d
            + a*b*c + 4*a*b*d + a*c*d + 2*b*c*d + 2))
    if fid == "J6":
        a, b, c, d = p
        return a + b + d - 3, c - 1, _bracket((
            1, 5 - b - 2*c - d - a,
            b*c - 4*b - 6*c - 4*d - 2*a*c - 8*a*d - 4*a - 3*b*d + c*d + 9,
            2*b*c - 5*b - 6*c - 5*d - 4*a*c - 24*a*d - 5*a - 9*b*d + 2*c*d
            + a*b*c + a*b*d + 9*a*c*d + 4*b*c*d + 7,
            -2*a - 2*b - 2*c - 2*d - 2*a*c - 16*a*d + b*c - 6*b*d + c*d
            + a*b*c + 2*a*b*d + 9*a*c*d + 4*b*c*d + 2))
    if fid == "J7":
        a, b, c, d = p
        return a + b + c + d - 4, 0, _bracket((
            1, 4 - b - c - d - a,
            6 - 3*b - 3*c - 3*d - 3*a*c - 8*a*d - 3*b*d - 3*a,
            a*b*c - 3*b - 3*c - 3*d - 6*a*c - 16*a*d - 6*b*d - 3*a
            + a*b*d + a*c*d + b*c*d + 4,
            -a - b - c - d - 3*a*c - 8*a*d - 3*b*d + a*b*c
            + a*b*d + a*c*d + b*c*d + a*b*c*d + 1))
    raise ValueError(f"no tabulated D-polynomial for {fd.id}")


def table3_poly(fd: FamilyDescriptor) -> IntPoly:
    e1, e2, psi = table3_factors(fd)
    return (X + 1) ** e1 * (X + 2) ** e2 * psi


def kkk_poly(a: int, b: int, c: int) -> IntPoly:
    """D-polynomial of (K_a^c v K_b^c) v K_c quoted in the n-3 characterization."""
    psi = _bracket((
        1, 5 - 2*b - c - 2*a, 3*a*b - 6*b - 4*c - 6*a + a*c + b*c + 8,
        -4*a - 4*b - 4*c + 3*a*b + 2*a*c + 2*b*c - a*b*c + 4))
    return (X + 2) ** (a + b - 2) * (X + 1) ** (c - 1) * psi


def kck_quadratic(s: int, n: int) -> IntPoly:
    """Quadratic factor for K_s^c v K_(n-s)."""
    return X * X - (n + s - 3) * X - s * s + s * n - 2 * (n - 1)


def j1_divisor_matrix(a: int, b: int, c: int, d: int) -> list[list[int]]:
    return [
        [2 * (a - 1), b, 2 * c, 3 * d],
        [a, b - 1, c, 2 * d],
        [2 * a, b, 2 * (c - 1), d],
        [3 * a, 2 * b, c, 2 * (d - 1)],
    ]
