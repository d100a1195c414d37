"""Exact rational linear algebra on small dense square matrices.

Scalars are :class:`fractions.Fraction`. Matrices are immutable and never
leave exact arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, TypeVar

V = TypeVar("V")


class SingularMatrixError(ArithmeticError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def format_rational(q: Fraction) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RationalMatrix:
    """Immutable dense square matrix of Fractions."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have positive dimension")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> "RationalMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return self._rows == self.transpose()._rows

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def scale(self, c) -> "RationalMatrix":
        c = as_rational(c)
        return RationalMatrix([[c * x for x in r] for r in self._rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        _check_same_dim(self, other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows
        )
        return f"RationalMatrix([{body}])"

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._rows]

    def apply(self, vec: Sequence[V]) -> list[V]:
        """Matrix-vector product; ``vec`` may hold any rational vector-space values."""
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != matrix dimension {self.dim}")
        out = []
        for r in self._rows:
            acc = None
            for a, v in zip(r, vec):
                if a == 0:
                    continue
                term = v * a
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else vec[0] * 0)
        return out


def _check_same_dim(a: RationalMatrix, b: RationalMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    _check_same_dim(a, b)
    cols = list(zip(*b.rows))
    return RationalMatrix(
        [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in a.rows]
    )


def _pivot_row(col: list, start: int) -> int | None:
    # largest magnitude nonzero entry keeps the pivot choice deterministic
    best = None
    for k in range(start, len(col)):
        if col[k] != 0 and (best is None or abs(col[k]) > abs(col[best])):
            best = k
    return best


def solve(m: RationalMatrix, rhs: Sequence[V]) -> list[V]:
    """Solve ``m @ x = rhs`` exactly by Gauss-Jordan elimination.

    ``rhs`` entries only need ``+``, ``-`` and multiplication by a Fraction,
    so vectors of :class:`~springer_torus.springer.CharacterCombo` work the
    same way as vectors of Fractions.
    """
    n = m.dim
    if len(rhs) != n:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {n}")
    a = [list(r) for r in m.rows]
    b = list(rhs)
    for i in range(n):
        p = _pivot_row([a[k][i] for k in range(n)], i)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != i:
            a[i], a[p] = a[p], a[i]
            b[i], b[p] = b[p], b[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        b[i] = b[i] * inv
        for k in range(n):
            f = a[k][i]
            if k == i or f == 0:
                continue
            a[k] = [x - f * y for x, y in zip(a[k], a[i])]
            b[k] = b[k] - b[i] * f
    return b


def mat_inverse(m: RationalMatrix) -> RationalMatrix:
    n = m.dim
    cols = [solve(m, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return RationalMatrix(zip(*cols))


def determinant(m: RationalMatrix) -> Fraction:
    """Bareiss fraction-free elimination (exact divisions only)."""
    n = m.dim
    # clear denominators so every intermediate stays an integer
    scale = 1
    for r in m.rows:
        for x in r:
            scale = math.lcm(scale, x.denominator)
    a = [[int(x * scale) for x in r] for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], scale**n)


def leading_minors(m: RationalMatrix) -> list[Fraction]:
    return [
        determinant(RationalMatrix([r[:k] for r in m.rows[:k]]))
        for k in range(1, m.dim + 1)
    ]


def is_positive_definite(m: RationalMatrix) -> bool:
    """Sylvester's criterion, exact."""
    if not m.is_symmetric():
        raise ValueError("positive definiteness test requires a symmetric matrix")
    return all(d > 0 for d in leading_minors(m))
