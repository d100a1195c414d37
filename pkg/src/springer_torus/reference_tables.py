"""Published closed forms for inverse Cartan matrices (A, D, E) and inverse
symmetrized Cartan matrices (B, C, F4, G2), transcribed as printed.

A few printed entries are wrong. They are kept verbatim and listed in
:func:`known_misprints` so callers can compare everything else exactly and
check the flagged entries through ``M @ M^-1 = I`` instead.
"""

from __future__ import annotations

from fractions import Fraction as F

from .exact_linear import RationalMatrix
from .rootsystem import LieType

_E6 = [
    [F(4, 3), 1, F(5, 3), 2, F(4, 3), F(2, 3)],
    [1, 2, 2, 3, 2, 1],
    [F(5, 3), 2, F(10, 3), 4, F(8, 3), F(4, 3)],
    [2, 3, 4, 6, 4, 2],
    [F(4, 3), 2, F(8, 3), 4, F(10, 3), F(5, 3)],
    [F(2, 3), 1, F(4, 3), 2, F(5, 3), F(4, 3)],
]

_E7 = [
    [2, 2, 3, 4, 3, 2, 1],
    [2, F(2, 2), 4, 6, F(9, 2), 3, F(3, 2)],  # printed "2/2"; the true entry is 7/2
    [3, 4, 6, 8, 6, 4, 2],
    [4, 6, 8, 12, 9, 6, 3],
    [3, F(9, 2), 6, 9, F(15, 2), 5, F(5, 2)],
    [2, 3, 4, 6, 5, 4, 2],
    [1, F(3, 2), 2, 3, F(5, 2), 2, F(3, 2)],
]

_E8 = [
    [4, 5, 7, 10, 8, 6, 4, 2],
    [5, 8, 10, 15, 12, 9, 6, 3],
    [7, 10, 14, 20, 16, 12, 8, 4],
    [10, 15, 20, 30, 24, 18, 12, 6],
    [8, 12, 16, 24, 20, 15, 10, 5],
    [6, 9, 12, 18, 15, 12, 8, 4],
    [4, 6, 8, 12, 10, 8, 6, 3],
    [2, 3, 4, 6, 5, 4, 3, 2],
]

_G2_S_INV = [[F(2, 3), 1], [1, 2]]

_F4_S_INV = [[2, 3, 2, 1], [3, 6, 4, 2], [2, 4, 3, F(3, 2)], [1, 2, F(3, 2), 1]]


def _a_inverse(n: int) -> RationalMatrix:
    # min(i,j) (n+1-max(i,j)) / (n+1), except that the printed second row
    # reads 2(n-3) in its third column
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            v = F(min(i, j) * (n + 1 - max(i, j)), n + 1)
            if (i, j) == (2, 3):
                v = F(2 * (n - 3), n + 1)
            row.append(v)
        rows.append(row)
    return RationalMatrix(rows)


def _d_inverse(n: int) -> RationalMatrix:
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i <= n - 2 and j <= n - 2:
                v = F(min(i, j))
            elif i <= n - 2:
                v = F(i, 2)
            elif j <= n - 2:
                v = F(j, 2)
            elif i == j:
                v = F(n, 4)
            else:
                v = F(n - 2, 4)
            row.append(v)
        rows.append(row)
    return RationalMatrix(rows)


def _c_s_inverse(n: int) -> RationalMatrix:
    return RationalMatrix([[F(min(i, j), 2) for j in range(1, n + 1)] for i in range(1, n + 1)])


def _b_s_inverse(n: int) -> RationalMatrix:
    # printed as 1/2 * [2 min(i,j) | i ; j | 2]; the corner is really n/2
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i < n and j < n:
                v = 2 * min(i, j)
            elif i == j == n:
                v = 2
            else:
                v = min(i, j)
            row.append(F(v, 2))
        rows.append(row)
    return RationalMatrix(rows)


def inverse_cartan_table(lt: LieType) -> RationalMatrix | None:
    """Printed inverse of the Cartan matrix, for simply-laced types."""
    fam, n = lt.family, lt.rank
    if fam == "A":
        return _a_inverse(n)
    if fam == "D":
        return _d_inverse(n)
    if fam == "E":
        return RationalMatrix({6: _E6, 7: _E7, 8: _E8}[n])
    return None


def inverse_s_table(lt: LieType) -> RationalMatrix | None:
    """Printed inverse of the symmetrized Cartan matrix, for non-simply-laced types."""
    fam, n = lt.family, lt.rank
    if fam == "B":
        return _b_s_inverse(n)
    if fam == "C":
        return _c_s_inverse(n)
    if fam == "G":
        return RationalMatrix(_G2_S_INV)
    if fam == "F":
        return RationalMatrix(_F4_S_INV)
    return None


def known_misprints(lt: LieType) -> frozenset[tuple[int, int]]:
    """0-based (i, j) positions of printed entries known to be wrong."""
    fam, n = lt.family, lt.rank
    if fam == "A" and n >= 3:
        return frozenset({(1, 2)})
    if fam == "E" and n == 7:
        return frozenset({(1, 1)})
    if fam == "B" and n != 4:
        return frozenset({(n - 1, n - 1)})
    return frozenset()


def reference_table(lt: LieType) -> tuple[str, RationalMatrix] | None:
    """``("cartan", table)`` for A/D/E, ``("s", table)`` for B/C/F/G."""
    t = inverse_cartan_table(lt)
    if t is not None:
        return "cartan", t
    t = inverse_s_table(lt)
    if t is not None:
        return "s", t
    return None
