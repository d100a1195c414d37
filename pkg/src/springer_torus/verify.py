"""Grid runner for the exact identities, shared by the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact_linear import RationalMatrix, format_rational, is_positive_definite, mat_inverse
from .reference_tables import known_misprints, reference_table
from .repweights import freudenthal, weyl_dimension
from .rootsystem import LieType, RootSystemData, Weight, build
from .springer import (
    IdentityViolation,
    TorusPoint,
    coefficients,
    evaluate,
    identity_report,
    moment_vector,
)

IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class CheckRecord:
    lie_type: str
    weight: Weight | None
    identity: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "type": self.lie_type,
            "lambda": list(self.weight) if self.weight is not None else None,
            "identity": self.identity,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


def grid_types(max_rank: int) -> list[LieType]:
    out = []
    for n in range(1, max_rank + 1):
        out.append(LieType("A", n))
    for fam in "BC":
        out.extend(LieType(fam, n) for n in range(2, max_rank + 1))
    out.extend(LieType("D", n) for n in range(4, max_rank + 1))
    out.extend(LieType("E", n) for n in (6, 7, 8) if n <= max_rank)
    if max_rank >= 4:
        out.append(LieType("F", 4))
    if max_rank >= 2:
        out.append(LieType("G", 2))
    return out


def grid_weights(rs: RootSystemData, which: str = "all") -> list[Weight]:
    """``fundamental``, ``rho`` or ``all`` (both)."""
    fund = [rs.fundamental_weight(i) for i in range(rs.rank)]
    if which == "fundamental":
        return fund
    if which == "rho":
        return [rs.rho]
    if which == "all":
        return fund + ([rs.rho] if rs.rank > 1 else [])
    raise ValueError(f"unknown weight set {which!r}")


def check_type(rs: RootSystemData) -> list[CheckRecord]:
    """Checks that depend only on the root system."""
    name = str(rs.lie_type)
    recs = [
        CheckRecord(name, None, "cartan = D S",
                    RationalMatrix.diagonal(rs.d_diag) @ rs.s_matrix == rs.cartan),
        CheckRecord(name, None, "S symmetric positive definite",
                    rs.s_matrix.is_symmetric() and is_positive_definite(rs.s_matrix)),
    ]
    ref = reference_table(rs.lie_type)
    if ref is not None:
        kind, table = ref
        m = rs.cartan if kind == "cartan" else rs.s_matrix
        computed = mat_inverse(m)
        skip = known_misprints(rs.lie_type)
        n = rs.rank
        mismatches = [
            (i, j) for i in range(n) for j in range(n)
            if (i, j) not in skip and computed[i, j] != table[i, j]
        ]
        label = "inverse Cartan matches table" if kind == "cartan" else "inverse S matches table"
        detail = ""
        if skip:
            notes = ", ".join(
                f"({i + 1},{j + 1}) printed {format_rational(table[i, j])}, "
                f"computed {format_rational(computed[i, j])}"
                for i, j in sorted(skip)
            )
            detail = f"misprinted entries checked via M @ M^-1 = I: {notes}"
        ok = not mismatches and m @ computed == RationalMatrix.identity(n)
        if mismatches:
            detail = "mismatch at " + ", ".join(f"({i + 1},{j + 1})" for i, j in mismatches)
        recs.append(CheckRecord(name, None, label, ok, detail))
    return recs


def check_weight(rs: RootSystemData, lam: Sequence[int], cache_dir=None,
                 with_coefficients: bool = True) -> list[CheckRecord]:
    lam = tuple(lam)
    name = str(rs.lie_type)
    wm = freudenthal(rs, lam, cache_dir=cache_dir)
    recs = []

    wd = weyl_dimension(rs, lam)
    recs.append(CheckRecord(name, lam, "Freudenthal dimension = Weyl dimension",
                            wm.total_dim == wd, f"{wm.total_dim} vs {wd}"))

    rep = identity_report(rs, wm)
    recs.append(CheckRecord(name, lam, "S(G,lambda) brute force = (x/2) S",
                            rep.closed_form_agrees, f"x = {format_rational(rep.x)}"))
    longs = sorted(rs.long_indices)
    long_vals = {rep.s_bruteforce[j, j] for j in longs}
    recs.append(CheckRecord(name, lam, "x independent of long root", len(long_vals) == 1,
                            "long roots " + ",".join(str(j + 1) for j in longs)))
    for c in rep.checks:
        recs.append(CheckRecord(name, lam, f"{c.kind} ({c.i},{c.j})", c.passed, c.statement))

    if any(lam):
        recs.append(CheckRecord(name, lam, "S(G,lambda) positive definite",
                                is_positive_definite(rep.s_bruteforce)))
        if with_coefficients:
            try:
                cs = coefficients(rs, wm)
            except IdentityViolation as exc:
                recs.append(CheckRecord(name, lam, "coefficients solvable", False, str(exc)))
                return recs
            one = TorusPoint.identity(rs.rank)
            worst = max(abs(evaluate(c, one)) for c in cs)
            recs.append(CheckRecord(name, lam, "c_i(identity) = 0", worst < IDENTITY_TOL,
                                    f"max |c_i(1)| = {worst:.3g}"))
            back = rep.s_closed.apply(cs)
            recs.append(CheckRecord(name, lam, "S(G,lambda) c = moment vector",
                                    back == moment_vector(rs, wm)))
    return recs


def run(types: Iterable[LieType], weights: str = "all", cache_dir=None,
        with_coefficients: bool = True) -> list[CheckRecord]:
    records = []
    for lt in types:
        rs = build(lt)
        records.extend(check_type(rs))
        for lam in grid_weights(rs, weights):
            records.extend(check_weight(rs, lam, cache_dir, with_coefficients))
    return records
