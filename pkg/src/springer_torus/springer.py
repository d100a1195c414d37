"""Springer morphism restricted to the maximal torus.

For V(lam) with weights mu (fundamental-weight coordinates, with
multiplicity), the coroot coefficients c_1..c_n of theta(t) solve

    S(G, lam) c = m,    S(G, lam)_ij = sum mu_i mu_j,    m_i = sum mu_i e^mu

and S(G, lam) = (x/2) S with S the symmetrized Cartan matrix and x the sum
of mu_j^2 for any long simple root alpha_j. Everything is solved exactly
over formal character sums; numbers only appear in :func:`evaluate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exact_linear import RationalMatrix, SingularMatrixError, as_rational, is_positive_definite, solve
from .repweights import WeightMultiset, expand, freudenthal
from .rootsystem import LieType, RootSystemData, Weight, build, long_root_indices


class NotAlmostFaithfulError(ValueError):
    """S(G, lam) is singular; for a simple group this means lam = 0."""


class IdentityViolation(AssertionError):
    pass


class CharacterCombo:
    """Formal finite sum  sum_mu c_mu e^mu  with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, Fraction] = {}
        for mu, c in items:
            mu = tuple(int(x) for x in mu)
            acc[mu] = acc.get(mu, Fraction(0)) + as_rational(c)
        self._terms = {mu: c for mu, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "CharacterCombo":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def character(cls, mu: Sequence[int]) -> "CharacterCombo":
        return cls({tuple(mu): 1})

    @property
    def terms(self) -> dict[Weight, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, mu: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mu), Fraction(0))

    def __add__(self, other: "CharacterCombo") -> "CharacterCombo":
        if not isinstance(other, CharacterCombo):
            return NotImplemented
        out = dict(self._terms)
        for mu, c in other._terms.items():
            v = out.get(mu, 0) + c
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
        return CharacterCombo._raw(out)

    def __neg__(self) -> "CharacterCombo":
        return CharacterCombo._raw({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other: "CharacterCombo") -> "CharacterCombo":
        if not isinstance(other, CharacterCombo):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k) -> "CharacterCombo":
        if isinstance(k, CharacterCombo):
            return NotImplemented
        k = as_rational(k)
        if k == 0:
            return CharacterCombo._raw({})
        return CharacterCombo._raw({mu: c * k for mu, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k) -> "CharacterCombo":
        return self * (1 / as_rational(k))

    def __eq__(self, other) -> bool:
        if isinstance(other, CharacterCombo):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "CharacterCombo(0)"
        body = " + ".join(f"({c})e^{mu}" for mu, c in self.items())
        return f"CharacterCombo({body})"


ZERO = CharacterCombo()


@dataclass(frozen=True)
class TorusPoint:
    """A torus element, given by its values z_i on the fundamental weights."""

    z: tuple[complex, ...]

    def __post_init__(self):
        z = tuple(complex(v) for v in self.z)
        if any(v == 0 for v in z):
            raise ValueError("torus coordinates must be nonzero")
        object.__setattr__(self, "z", z)

    @classmethod
    def identity(cls, rank: int) -> "TorusPoint":
        return cls((1,) * rank)

    def __len__(self) -> int:
        return len(self.z)


@dataclass(frozen=True)
class SpringerResult:
    lie_type: LieType
    highest: Weight
    point: TorusPoint
    coefficients: tuple[complex, ...] = field(default=())


def torus_from_symplectic_eigenvalues(t: Sequence[complex]) -> TorusPoint:
    """Torus point of Sp(2n) with eigenvalues t_1..t_n, t_1^-1..t_n^-1.

    In type C the fundamental weight w_i is eps_1 + ... + eps_i, so its
    value is the running product t_1 ... t_i.
    """
    t = [complex(v) for v in t]
    if any(v == 0 for v in t):
        raise ValueError("symplectic eigenvalues must be nonzero")
    z, acc = [], complex(1)
    for v in t:
        acc *= v
        z.append(acc)
    return TorusPoint(tuple(z))


def symplectic_diagonal(coefficients: Sequence[complex]) -> list[complex]:
    """Diagonal of sum c_i alpha_i^vee in the defining representation of sp(2n).

    alpha_i^vee = E_i - E_{i+1} - E_{n+i} + E_{n+i+1} for i < n and
    alpha_n^vee = E_n - E_{2n}, so entry k is c_k - c_{k-1}.
    """
    c = [complex(v) for v in coefficients]
    first = [c[k] - (c[k - 1] if k else 0) for k in range(len(c))]
    return first + [-v for v in first]


# --- S(G, lam) --------------------------------------------------------------

def moment_vector(rs: RootSystemData, wm: WeightMultiset) -> list[CharacterCombo]:
    """Component i is sum over weights (with multiplicity) of mu_i e^mu."""
    n = rs.rank
    comps: list[dict] = [{} for _ in range(n)]
    for mu, m in expand(rs, wm):
        for i in range(n):
            if mu[i]:
                comps[i][mu] = Fraction(m * mu[i])
    return [CharacterCombo._raw(c) for c in comps]


def s_matrix_bruteforce(rs: RootSystemData, wm: WeightMultiset) -> RationalMatrix:
    n = rs.rank
    acc = [[0] * n for _ in range(n)]
    for mu, m in expand(rs, wm):
        for i in range(n):
            if not mu[i]:
                continue
            mi = m * mu[i]
            row = acc[i]
            for j in range(n):
                row[j] += mi * mu[j]
    return RationalMatrix(acc)


def _diagonal_sums(rs: RootSystemData, wm: WeightMultiset) -> list[int]:
    n = rs.rank
    sums = [0] * n
    for mu, m in expand(rs, wm):
        for i in range(n):
            sums[i] += m * mu[i] * mu[i]
    return sums


def x_long(rs: RootSystemData, wm: WeightMultiset, diagonal: Sequence[int] | None = None) -> Fraction:
    """sum mu_j^2 for a long simple root alpha_j, checked to agree for all of them."""
    sums = _diagonal_sums(rs, wm) if diagonal is None else diagonal
    longs = sorted(long_root_indices(rs))
    values = {Fraction(sums[j]) for j in longs}
    if len(values) != 1:
        raise IdentityViolation(
            "sum of mu_j^2 differs across long roots: "
            + ", ".join(f"j={j + 1}: {sums[j]}" for j in longs)
        )
    return Fraction(sums[longs[0]])


def s_matrix_closed(rs: RootSystemData, wm: WeightMultiset, x: Fraction | None = None) -> RationalMatrix:
    if x is None:
        x = x_long(rs, wm)
    return rs.s_matrix.scale(Fraction(x) / 2)


# --- identity report -------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    i: int
    j: int
    kind: str
    statement: str
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    lie_type: LieType
    highest: Weight
    x: Fraction
    s_bruteforce: RationalMatrix
    s_closed: RationalMatrix
    checks: tuple[IdentityCheck, ...]

    @property
    def closed_form_agrees(self) -> bool:
        return self.s_bruteforce == self.s_closed

    @property
    def passed(self) -> bool:
        return self.closed_form_agrees and all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def _classify_pair(rs: RootSystemData, i: int, j: int) -> str:
    if rs.lie_type.family == "G":
        return "g2"
    if not rs.is_connected(i, j):
        return "disconnected"
    if rs.d_diag[i] == rs.d_diag[j]:
        return "connected-equal-length"
    return "connected-short-long"


def identity_report(rs: RootSystemData, wm: WeightMultiset) -> IdentityReport:
    """Check every pairwise identity satisfied by the sums  sum mu_i mu_j.

    Pair classes (indices are reported 1-based):

    * disconnected nodes: the cross sum vanishes;
    * connected, same length: equal diagonal sums, cross sum is minus half of them;
    * connected, short i and long j (B, C, F): short diagonal is 2x, cross sum is -x;
    * G2: sum mu_1^2 = -2 sum mu_1 mu_2 = 3 sum mu_2^2.

    Diagonal entries are also checked: x for long roots, 2x for short roots
    of B, C, F and 3x for the short root of G2.
    """
    n = rs.rank
    sb = s_matrix_bruteforce(rs, wm)
    diag = [int(sb[i, i]) for i in range(n)]
    try:
        x = x_long(rs, wm, diag)
        x_ok = True
    except IdentityViolation:
        x = Fraction(diag[min(long_root_indices(rs))])
        x_ok = False
    sc = s_matrix_closed(rs, wm, x)

    checks = []
    longs = long_root_indices(rs)
    short_factor = 3 if rs.lie_type.family == "G" else 2
    for i in range(n):
        if i in longs:
            checks.append(IdentityCheck(
                i + 1, i + 1, "diagonal-long",
                f"sum mu_{i+1}^2 = x = {x}", sb[i, i] == x and x_ok))
        else:
            checks.append(IdentityCheck(
                i + 1, i + 1, "diagonal-short",
                f"sum mu_{i+1}^2 = {short_factor}x", sb[i, i] == short_factor * x))

    for i in range(n):
        for j in range(i + 1, n):
            kind = _classify_pair(rs, i, j)
            sij, sii, sjj = sb[i, j], sb[i, i], sb[j, j]
            a, b = i + 1, j + 1
            if kind == "disconnected":
                ok = sij == 0
                text = f"sum mu_{a} mu_{b} = 0"
            elif kind == "connected-equal-length":
                ok = sii == sjj and 2 * sij == -sii
                text = f"sum mu_{a}^2 = sum mu_{b}^2 and sum mu_{a} mu_{b} = -1/2 sum mu_{a}^2"
            elif kind == "connected-short-long":
                short, long_ = (i, j) if i not in longs else (j, i)
                ok = sb[short, short] == 2 * sb[long_, long_] and sij == -sb[long_, long_]
                text = f"sum mu_{short+1}^2 = 2x and sum mu_{a} mu_{b} = -x"
            else:
                ok = sii == -2 * sij == 3 * sjj
                text = f"sum mu_{a}^2 = -2 sum mu_{a} mu_{b} = 3 sum mu_{b}^2"
            checks.append(IdentityCheck(a, b, kind, text, ok))

    return IdentityReport(rs.lie_type, wm.highest, x, sb, sc, tuple(checks))


# --- coefficients ----------------------------------------------------------

def coefficients(rs: RootSystemData, wm: WeightMultiset) -> list[CharacterCombo]:
    """c_1..c_n of theta(t) in the coroot basis, as exact character sums."""
    if not any(wm.highest):
        raise NotAlmostFaithfulError(
            "representation not almost faithful: the highest weight is zero")
    sb = s_matrix_bruteforce(rs, wm)
    sc = s_matrix_closed(rs, wm)
    if sb != sc:
        raise IdentityViolation(f"brute-force {sb} != closed form {sc}")
    try:
        return solve(sc, moment_vector(rs, wm))
    except SingularMatrixError:
        raise NotAlmostFaithfulError("representation not almost faithful: S(G, lam) is singular") from None


@lru_cache(maxsize=64)
def _coefficients_cached(lie_type: LieType, lam: Weight) -> tuple[CharacterCombo, ...]:
    rs = build(lie_type)
    return tuple(coefficients(rs, freudenthal(rs, lam)))


def evaluate(combo: CharacterCombo, z: TorusPoint) -> complex:
    """sum c_mu prod z_i^mu_i in double precision."""
    items = combo.items()
    if not items:
        return 0j
    n = len(items[0][0])
    if len(z) != n:
        raise ValueError(f"torus point has {len(z)} coordinates, weights have {n}")
    weights = np.array([mu for mu, _ in items], dtype=np.int64)
    coeffs = np.array([float(c) for _, c in items])
    zs = np.asarray(z.z, dtype=complex)
    # integer exponents: numpy uses repeated squaring for complex ** int
    chars = np.prod(zs[None, :] ** weights, axis=1)
    terms = coeffs * chars
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def springer_torus(
    rs: RootSystemData,
    lam: Sequence[int],
    z: TorusPoint | Sequence[complex],
    cache_dir=None,
) -> SpringerResult:
    """Coroot coefficients of theta_lam(t) at the torus point ``z``."""
    lam = tuple(int(v) for v in lam)
    if not isinstance(z, TorusPoint):
        z = TorusPoint(tuple(z))
    if len(z) != rs.rank:
        raise ValueError(f"torus point has {len(z)} coordinates, rank is {rs.rank}")
    if cache_dir is None:
        combos = _coefficients_cached(rs.lie_type, lam)
    else:
        combos = coefficients(rs, freudenthal(rs, lam, cache_dir=cache_dir))
    return SpringerResult(rs.lie_type, lam, z, tuple(evaluate(c, z) for c in combos))


def is_s_positive_definite(rs: RootSystemData, wm: WeightMultiset) -> bool:
    return is_positive_definite(s_matrix_bruteforce(rs, wm))
