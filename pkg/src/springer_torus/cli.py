"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 the weight
gives a representation that is not almost faithful (lambda = 0).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import __version__
from .exact_linear import format_rational, mat_inverse
from .repweights import NotDominantError, expand, freudenthal, weyl_dimension
from .rootsystem import InvalidLieTypeError, LieType, build
from .springer import (
    NotAlmostFaithfulError,
    TorusPoint,
    coefficients,
    evaluate,
    s_matrix_bruteforce,
    s_matrix_closed,
    symplectic_diagonal,
    torus_from_symplectic_eigenvalues,
    x_long,
)
from . import verify as verify_mod

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_NOT_FAITHFUL = 0, 1, 2, 3


class UsageError(Exception):
    pass


_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>{_NUM})(?P<im>[+-](?:\d+\.?\d*|\.\d+)?)i|(?P<re_only>{_NUM})|(?P<im_only>{_NUM}|[+-])?i)$"
)


def parse_complex(text: str) -> complex:
    """Accepts ``a``, ``bi``, ``a+bi`` and ``a-bi`` with decimal parts."""
    s = text.strip().replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not m or not s:
        raise UsageError(f"cannot parse complex number {text!r}")
    if m.group("re_only") is not None:
        return complex(float(m.group("re_only")), 0.0)
    if m.group("re") is not None:
        im = m.group("im")
        im = float(im + "1") if im in "+-" else float(im)
        return complex(float(m.group("re")), im)
    im = m.group("im_only")
    if im in (None, "+"):
        return 1j
    if im == "-":
        return -1j
    return complex(0.0, float(im))


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        w = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}") from None
    if len(w) != rank:
        raise UsageError(f"weight {text!r} has {len(w)} entries, rank is {rank}")
    return w


def _cj(z: complex) -> list[float]:
    # +0.0 folds negative zero so output is stable
    return [z.real + 0.0, z.imag + 0.0]


def _matrix(m) -> list[list[str]]:
    return m.to_strings()


def _combo_json(c) -> list[dict]:
    return [{"weight": list(mu), "coeff": format_rational(q)} for mu, q in c.items()]


def _document(command: str, lt: LieType | None, lam, payload: dict) -> dict:
    return {
        "command": command,
        "lie_type": None if lt is None else {"family": lt.family, "rank": lt.rank},
        "lambda": None if lam is None else list(lam),
        "payload": payload,
        "version": SCHEMA_VERSION,
    }


def _lie_type(args) -> LieType:
    if args.type is None or args.rank is None:
        raise UsageError("--type and --rank are required")
    try:
        return LieType(args.type.upper(), args.rank)
    except InvalidLieTypeError as exc:
        raise UsageError(str(exc)) from None


def _cache_dir(args):
    return args.cache_dir or os.environ.get("SPRINGER_CACHE_DIR") or None


def _multiset(rs, lam, args):
    try:
        return freudenthal(rs, lam, cache_dir=_cache_dir(args))
    except NotDominantError as exc:
        raise UsageError(str(exc)) from None


def _require_faithful(lam):
    if not any(lam):
        raise NotAlmostFaithfulError("representation not almost faithful: lambda = 0")


# --- commands -------------------------------------------------------------

def cmd_info(args) -> dict:
    lt = _lie_type(args)
    rs = build(lt)
    payload = {
        "cartan": _matrix(rs.cartan),
        "cartan_inverse": _matrix(rs.cartan_inverse),
        "d": [format_rational(d) for d in rs.d_diag],
        "s": _matrix(rs.s_matrix),
        "s_inverse": _matrix(mat_inverse(rs.s_matrix)),
        "positive_root_count": len(rs.positive_roots),
        "long_root_indices": sorted(i + 1 for i in rs.long_indices),
    }
    return _document("info", lt, None, payload)


def cmd_weights(args) -> dict:
    lt = _lie_type(args)
    rs = build(lt)
    lam = parse_weight(args.weight, lt.rank)
    wm = _multiset(rs, lam, args)
    payload = {
        "dominant": [{"weight": list(mu), "multiplicity": m} for mu, m in wm.dominant_mults.items()],
        "total_dim": wm.total_dim,
        "weyl_dimension": weyl_dimension(rs, lam),
    }
    if args.expand:
        payload["weights"] = [{"weight": list(mu), "multiplicity": m} for mu, m in expand(rs, wm)]
    return _document("weights", lt, lam, payload)


def cmd_smatrix(args) -> dict:
    lt = _lie_type(args)
    rs = build(lt)
    lam = parse_weight(args.weight, lt.rank)
    wm = _multiset(rs, lam, args)
    _require_faithful(lam)
    sb = s_matrix_bruteforce(rs, wm)
    x = x_long(rs, wm)
    sc = s_matrix_closed(rs, wm, x)
    payload = {
        "bruteforce": _matrix(sb),
        "closed_form": _matrix(sc),
        "x_long": format_rational(x),
        "agree": sb == sc,
    }
    return _document("smatrix", lt, lam, payload)


def cmd_coeffs(args) -> dict:
    lt = _lie_type(args)
    rs = build(lt)
    lam = parse_weight(args.weight, lt.rank)
    wm = _multiset(rs, lam, args)
    _require_faithful(lam)
    cs = coefficients(rs, wm)
    payload = {"coefficients": [_combo_json(c) for c in cs]}
    return _document("coeffs", lt, lam, payload)


def cmd_eval(args) -> dict:
    lt = _lie_type(args)
    rs = build(lt)
    lam = parse_weight(args.weight, lt.rank)
    if args.torus is None:
        raise UsageError("--torus is required")
    values = [parse_complex(p) for p in args.torus.split(",")]
    if len(values) != lt.rank:
        raise UsageError(f"--torus has {len(values)} entries, rank is {lt.rank}")
    if any(v == 0 for v in values):
        raise UsageError("torus coordinates must be nonzero")
    if args.symplectic_eigenvalues:
        if lt.family != "C":
            raise UsageError("--symplectic-eigenvalues is only meaningful for type C")
        z = torus_from_symplectic_eigenvalues(values)
    else:
        z = TorusPoint(tuple(values))
    wm = _multiset(rs, lam, args)
    _require_faithful(lam)
    cs = coefficients(rs, wm)
    vals = [evaluate(c, z) for c in cs]
    payload = {
        "torus": [_cj(v) for v in z.z],
        "coefficients": [_cj(v) for v in vals],
    }
    if args.symplectic_eigenvalues:
        payload["eigenvalues"] = [_cj(v) for v in values]
        payload["symplectic_diagonal"] = [_cj(v) for v in symplectic_diagonal(vals)]
    return _document("eval", lt, lam, payload)


def cmd_verify(args) -> tuple[dict, int]:
    if args.all:
        types = verify_mod.grid_types(args.max_rank)
        lt = None
    else:
        lt = _lie_type(args)
        types = [lt]
    records = verify_mod.run(types, args.weights, cache_dir=_cache_dir(args))
    failed = [r for r in records if not r.passed]
    payload = {
        "checks": [r.to_json() for r in records],
        "total": len(records),
        "failed": len(failed),
        "passed": not failed,
    }
    return _document("verify", lt, None, payload), (EXIT_OK if not failed else EXIT_VERIFY_FAILED)


# --- rendering --------------------------------------------------------------

def _table_matrix(rows: list[list[str]], indent: str = "  ") -> str:
    width = max(len(x) for r in rows for x in r)
    return "\n".join(indent + " ".join(x.rjust(width) for x in r) for r in rows)


def _fmt_complex(pair) -> str:
    re_, im = pair
    return f"{re_:.12g}{im:+.12g}i"


def render_table(doc: dict) -> str:
    cmd, p = doc["command"], doc["payload"]
    lines = []
    lt = doc["lie_type"]
    head = f"{cmd}"
    if lt:
        head += f"  {lt['family']}{lt['rank']}"
    if doc["lambda"] is not None:
        head += "  lambda=(" + ",".join(str(x) for x in doc["lambda"]) + ")"
    lines.append(head)
    if cmd == "info":
        for key, title in [("cartan", "Cartan matrix A"), ("cartan_inverse", "A^-1"),
                           ("s", "symmetrized S (A = D S)"), ("s_inverse", "S^-1")]:
            lines.append(f"{title}:")
            lines.append(_table_matrix(p[key]))
        lines.append("D = diag(" + ", ".join(p["d"]) + ")")
        lines.append(f"positive roots: {p['positive_root_count']}")
        lines.append("long simple roots: " + ", ".join(str(i) for i in p["long_root_indices"]))
    elif cmd == "weights":
        lines.append(f"dimension: {p['total_dim']} (Weyl formula: {p['weyl_dimension']})")
        lines.append("dominant weights:")
        for e in p["dominant"]:
            lines.append(f"  {tuple(e['weight'])}  x{e['multiplicity']}")
        if "weights" in p:
            lines.append("all weights:")
            for e in p["weights"]:
                lines.append(f"  {tuple(e['weight'])}  x{e['multiplicity']}")
    elif cmd == "smatrix":
        lines.append("brute force sum mu_i mu_j:")
        lines.append(_table_matrix(p["bruteforce"]))
        lines.append(f"closed form (x/2) S with x = {p['x_long']}:")
        lines.append(_table_matrix(p["closed_form"]))
        lines.append(f"agree: {p['agree']}")
    elif cmd == "coeffs":
        for i, terms in enumerate(p["coefficients"], 1):
            body = " + ".join(f"({t['coeff']}) e^{tuple(t['weight'])}" for t in terms) or "0"
            lines.append(f"c_{i} = {body}")
    elif cmd == "eval":
        lines.append("torus point z_i = e^{w_i}(t): " + ", ".join(_fmt_complex(v) for v in p["torus"]))
        for i, v in enumerate(p["coefficients"], 1):
            lines.append(f"c_{i} = {_fmt_complex(v)}")
        if "symplectic_diagonal" in p:
            lines.append("theta(t) diagonal: " + ", ".join(_fmt_complex(v) for v in p["symplectic_diagonal"]))
    elif cmd == "verify":
        for c in p["checks"]:
            lam = "" if c["lambda"] is None else "(" + ",".join(map(str, c["lambda"])) + ")"
            status = "PASS" if c["status"] == "pass" else "FAIL"
            extra = f"  [{c['detail']}]" if c["detail"] else ""
            lines.append(f"{status}  {c['type']:<3} {lam:<12} {c['identity']}{extra}")
        lines.append(f"{p['total'] - p['failed']}/{p['total']} checks passed")
    return "\n".join(lines)


# --- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Lie family letter A-G")
    common.add_argument("--rank", type=int)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--cache-dir", help="directory for cached weight multiplicities "
                        "(default: $SPRINGER_CACHE_DIR)")

    parser = argparse.ArgumentParser(
        prog="springer-torus",
        description="Springer morphism on the maximal torus of a simple group, in exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common], help="root system data")
    p = sub.add_parser("weights", parents=[common], help="weights and multiplicities of V(lambda)")
    p.add_argument("--weight", required=True, help="highest weight, e.g. 1,0,0")
    p.add_argument("--expand", action="store_true", help="list every weight, not just dominant ones")
    p = sub.add_parser("smatrix", parents=[common], help="S(G,lambda), brute force and closed form")
    p.add_argument("--weight", required=True)
    p = sub.add_parser("coeffs", parents=[common], help="coroot coefficients as character sums")
    p.add_argument("--weight", required=True)
    p = sub.add_parser("eval", parents=[common], help="evaluate the coefficients at a torus point")
    p.add_argument("--weight", required=True)
    p.add_argument("--torus", help="comma-separated complex values a, bi, a+bi "
                   "(use --torus=-1,2 when the first entry is negative)")
    p.add_argument("--symplectic-eigenvalues", action="store_true",
                   help="read --torus as eigenvalues t_1..t_n of Sp(2n) (type C only)")
    p = sub.add_parser("verify", parents=[common], help="check the exact identities over a grid")
    p.add_argument("--all", action="store_true", help="every type up to --max-rank")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--weights", choices=("fundamental", "rho", "all"), default="all")
    return parser


_COMMANDS = {
    "info": cmd_info,
    "weights": cmd_weights,
    "smatrix": cmd_smatrix,
    "coeffs": cmd_coeffs,
    "eval": cmd_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "verify":
            doc, code = cmd_verify(args)
        else:
            doc = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"springer-torus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAlmostFaithfulError as exc:
        print(f"springer-torus: {exc}", file=sys.stderr)
        return EXIT_NOT_FAITHFUL

    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(render_table(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
