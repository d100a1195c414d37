"""Simple root systems in Bourbaki numbering.

Every weight lives in fundamental-weight coordinates: a tuple of ints
``(m_1, ..., m_n)`` meaning ``m_1 w_1 + ... + m_n w_n``. Simple roots are
the rows of the Cartan matrix ``A[i][j] = <alpha_i, alpha_j^vee>``.
The invariant form gives long roots squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact_linear import RationalMatrix, is_positive_definite, mat_inverse

Weight = tuple[int, ...]

FAMILIES = "ABCDEFG"

# classical counts of positive roots, used as a consistency check
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidLieTypeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES or len(fam) != 1:
            raise InvalidLieTypeError(f"unknown Lie family {fam!r}")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidLieTypeError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,  # D2 and D3 are not new simple types
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise InvalidLieTypeError(f"invalid rank {n} for type {fam}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse ``"G2"``, ``"e8"`` and the like."""
        text = text.strip()
        try:
            return cls(text[0].upper(), int(text[1:]))
        except (IndexError, ValueError) as exc:
            if isinstance(exc, InvalidLieTypeError):
                raise
            raise InvalidLieTypeError(f"cannot parse Lie type {text!r}") from None

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin_data(lt: LieType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the edges of the Dynkin diagram (0-based)."""
    fam, n = lt.family, lt.rank
    one, two = Fraction(1), Fraction(2)
    chain = [(i, i + 1) for i in range(n - 1)]
    if fam == "A":
        return [two] * n, chain
    if fam == "B":
        return [two] * (n - 1) + [one], chain
    if fam == "C":
        return [one] * (n - 1) + [two], chain
    if fam == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if fam == "E":
        # 1 - 3 - 4 - 5 - ... with 2 hanging off 4
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [two] * n, edges
    if fam == "F":
        return [two, two, one, one], chain
    if fam == "G":
        return [Fraction(2, 3), two], chain
    raise InvalidLieTypeError(str(lt))


def simple_root_gram(lt: LieType) -> RationalMatrix:
    """(alpha_i, alpha_j) under the long-roots-have-length-2 normalization."""
    lengths, edges = _dynkin_data(lt)
    n = lt.rank
    b = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = lengths[i]
    for i, j in edges:
        # equal lengths L: -(L/2); mixed lengths: -1 (half the long length)
        v = -lengths[i] / 2 if lengths[i] == lengths[j] else Fraction(-1)
        b[i][j] = b[j][i] = v
    return RationalMatrix(b)


@dataclass(frozen=True)
class RootSystemData:
    lie_type: LieType
    cartan: RationalMatrix
    d_diag: tuple[Fraction, ...]
    s_matrix: RationalMatrix
    gram: RationalMatrix
    cartan_inverse: RationalMatrix
    positive_roots: tuple[Weight, ...] = field(repr=False)
    long_indices: frozenset[int]
    # rows of the Cartan matrix as int tuples, for the hot reflection loops
    simple_roots: tuple[Weight, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def simple_root(self, i: int) -> Weight:
        """alpha_i (0-based index) as a weight."""
        return self.simple_roots[i]

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(k == i) for k in range(self.rank))

    def root_coordinates(self, mu: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``mu`` in the simple-root basis (``mu = k @ A``)."""
        ai = self.cartan_inverse
        n = self.rank
        return tuple(sum((mu[i] * ai[i, j] for i in range(n)), Fraction(0)) for j in range(n))

    def is_connected(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i, j] != 0


def _cartan_from_gram(b: RationalMatrix) -> RationalMatrix:
    n = b.dim
    return RationalMatrix([[2 * b[i, j] / b[j, j] for j in range(n)] for i in range(n)])


def _reflect(cartan_rows: list[Weight], i: int, mu: Weight) -> Weight:
    c = mu[i]
    if c == 0:
        return mu
    a = cartan_rows[i]
    return tuple(m - c * x for m, x in zip(mu, a))


def _all_roots(cartan_rows: list[Weight]) -> set[Weight]:
    """Union of the Weyl orbits of the simple roots."""
    n = len(cartan_rows)
    seen = set(cartan_rows)
    frontier = list(cartan_rows)
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(n):
                nu = _reflect(cartan_rows, i, mu)
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def build(lie_type: LieType) -> RootSystemData:
    if not isinstance(lie_type, LieType):
        raise TypeError("build expects a LieType")
    b = simple_root_gram(lie_type)
    n = lie_type.rank
    cartan = _cartan_from_gram(b)
    d_diag = tuple(b[i, i] / 2 for i in range(n))
    s_matrix = RationalMatrix(
        [[4 * b[i, j] / (b[i, i] * b[j, j]) for j in range(n)] for i in range(n)]
    )
    cartan_inv = mat_inverse(cartan)
    gram = mat_inverse(s_matrix)

    rows = [tuple(int(x) for x in cartan.row(i)) for i in range(n)]
    positive = []
    for r in _all_roots(rows):
        k = (sum((r[i] * cartan_inv[i, j] for i in range(n)), Fraction(0)) for j in range(n))
        if all(x >= 0 for x in k):
            positive.append(r)
    positive.sort(key=lambda r: (_height(r, cartan_inv), r))

    rs = RootSystemData(
        lie_type=lie_type,
        cartan=cartan,
        d_diag=d_diag,
        s_matrix=s_matrix,
        gram=gram,
        cartan_inverse=cartan_inv,
        positive_roots=tuple(positive),
        long_indices=frozenset(i for i in range(n) if d_diag[i] == 1),
        simple_roots=tuple(rows),
    )
    _check_invariants(rs)
    return rs


def _height(r: Weight, cartan_inv: RationalMatrix) -> Fraction:
    n = len(r)
    return sum((r[i] * cartan_inv[i, j] for i in range(n) for j in range(n)), Fraction(0))


def _check_invariants(rs: RootSystemData) -> None:
    a, n = rs.cartan, rs.rank
    assert a.is_integral()
    assert all(a[i, i] == 2 for i in range(n))
    for i in range(n):
        for j in range(n):
            if i != j:
                assert a[i, j] <= 0
                assert (a[i, j] == 0) == (a[j, i] == 0)
    assert RationalMatrix.diagonal(rs.d_diag) @ rs.s_matrix == a
    assert rs.s_matrix.is_symmetric() and is_positive_definite(rs.s_matrix)
    expected = _POSITIVE_ROOT_COUNT[rs.lie_type.family](n)
    assert len(rs.positive_roots) == expected, (len(rs.positive_roots), expected)


def inner_product(rs: RootSystemData, a: Sequence[int], b: Sequence[int]) -> Fraction:
    n = rs.rank
    if len(a) != n or len(b) != n:
        raise ValueError(f"weights must have length {n}")
    g = rs.gram.rows
    return sum(
        (a[i] * b[j] * g[i][j] for i in range(n) if a[i] for j in range(n) if b[j]),
        Fraction(0),
    )


def positive_roots(rs: RootSystemData) -> list[Weight]:
    return list(rs.positive_roots)


def long_root_indices(rs: RootSystemData) -> frozenset[int]:
    """0-based indices of long simple roots (all of them when simply laced)."""
    return rs.long_indices


def short_root_indices(rs: RootSystemData) -> frozenset[int]:
    return frozenset(range(rs.rank)) - rs.long_indices
