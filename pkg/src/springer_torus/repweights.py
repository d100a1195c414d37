"""Weights of irreducible highest-weight modules, with multiplicities.

Multiplicities of dominant weights come from Freudenthal's recursion; the
Weyl dimension formula is kept separate as an independent check.
"""

from __future__ import annotations

import json
import logging
import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .rootsystem import LieType, RootSystemData, Weight, inner_product
from .weyl import is_dominant, orbit, to_dominant

log = logging.getLogger(__name__)

CACHE_SCHEMA_VERSION = "1"


class NotDominantError(ValueError):
    pass


class MultiplicityError(ArithmeticError):
    """Freudenthal's recursion produced a non-integral or non-positive value."""


@dataclass(frozen=True)
class WeightMultiset:
    lie_type: LieType
    highest: Weight
    dominant_mults: dict[Weight, int]
    total_dim: int

    def __iter__(self):
        return iter(self.dominant_mults.items())


def _check_dominant(rs: RootSystemData, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} does not have length {rs.rank}")
    if not is_dominant(lam):
        raise NotDominantError(f"weight {lam} is not dominant")
    return lam


def _level(rs: RootSystemData, lam: Weight, mu: Weight) -> int:
    k = rs.root_coordinates(tuple(a - b for a, b in zip(lam, mu)))
    total = sum(k)
    assert total.denominator == 1
    return int(total)


def dominant_weights_below(rs: RootSystemData, lam: Sequence[int]) -> list[Weight]:
    """Dominant mu with lam - mu in the positive root cone, by level (lam first).

    Every such mu is reached from lam through dominant weights by
    subtracting one positive root at a time (Stembridge), so a search over
    positive-root steps is complete.
    """
    lam = _check_dominant(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in rs.positive_roots:
                nu = tuple(m - x for m, x in zip(mu, a))
                if nu not in seen and is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda mu: (_level(rs, lam, mu), tuple(-m for m in mu)))


def _scaled_gram(rs: RootSystemData) -> tuple[list[list[int]], int]:
    scale = math.lcm(*(x.denominator for r in rs.gram.rows for x in r))
    return [[int(x * scale) for x in r] for r in rs.gram.rows], scale


def freudenthal(
    rs: RootSystemData,
    lam: Sequence[int],
    cache_dir: str | os.PathLike | None = None,
) -> WeightMultiset:
    """Multiplicities of the dominant weights of V(lam).

    Solves, level by level below lam,

        ((lam+rho, lam+rho) - (mu+rho, mu+rho)) m(mu)
            = 2 * sum_{alpha > 0} sum_{k >= 1} (mu + k alpha, alpha) m(mu + k alpha)

    with m of a non-dominant weight read off its dominant conjugate.
    """
    lam = _check_dominant(rs, lam)
    if cache_dir is not None:
        cached = load_cached(rs, lam, cache_dir)
        if cached is not None:
            return cached

    n = rs.rank
    gram, _ = _scaled_gram(rs)

    def form(a, b):
        # scaled inner product, an integer
        return sum(a[i] * gram[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    rho = rs.rho
    pos = rs.positive_roots
    # (x, alpha) is linear in x: precompute gram @ alpha
    galpha = [[sum(gram[i][j] * a[j] for j in range(n)) for i in range(n)] for a in pos]

    dominant = dominant_weights_below(rs, lam)
    members = set(dominant)
    lr = tuple(l + r for l, r in zip(lam, rho))
    top = form(lr, lr)
    mults: dict[Weight, int] = {lam: 1}

    for mu in dominant[1:]:
        mr = tuple(m + r for m, r in zip(mu, rho))
        divisor = top - form(mr, mr)
        if divisor <= 0:
            raise MultiplicityError(f"non-positive Freudenthal divisor at {mu}")
        acc = 0
        for a, ga in zip(pos, galpha):
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a))
                d = to_dominant(rs, nu)
                if d not in members:
                    break
                acc += sum(x * y for x, y in zip(nu, ga)) * mults[d]
        num = 2 * acc
        if num % divisor:
            raise MultiplicityError(f"non-integral multiplicity {Fraction(num, divisor)} at {mu}")
        m = num // divisor
        if m <= 0:
            raise MultiplicityError(f"non-positive multiplicity {m} at {mu}")
        mults[mu] = m

    total = sum(m * orbit_size(rs, mu) for mu, m in mults.items())
    wm = WeightMultiset(rs.lie_type, lam, dict(sorted(mults.items())), total)
    if cache_dir is not None:
        save_cached(wm, cache_dir)
    return wm


def weyl_group_order(rs: RootSystemData, subset: Sequence[int] | None = None) -> int:
    """Order of the (parabolic) Weyl group generated by the reflections in ``subset``.

    Uses |W| = prod(m_i + 1) over the exponents, which are read from the
    heights of positive roots: the number of exponents >= h equals the
    number of positive roots of height h.
    """
    idx = set(range(rs.rank)) if subset is None else set(subset)
    heights = Counter()
    for a in rs.positive_roots:
        k = rs.root_coordinates(a)
        if all(k[i] == 0 for i in range(rs.rank) if i not in idx):
            heights[int(sum(k))] += 1
    order = 1
    h = 1
    while heights[h]:
        # exponents equal to h
        order *= (h + 1) ** (heights[h] - heights[h + 1])
        h += 1
    return order


def orbit_size(rs: RootSystemData, mu: Sequence[int]) -> int:
    mu = to_dominant(rs, mu)
    stab = [i for i, m in enumerate(mu) if m == 0]
    return weyl_group_order(rs) // weyl_group_order(rs, stab)


def weyl_dimension(rs: RootSystemData, lam: Sequence[int]) -> int:
    """prod over positive roots of (lam + rho, alpha) / (rho, alpha)."""
    lam = _check_dominant(rs, lam)
    lr = tuple(l + 1 for l in lam)
    dim = Fraction(1)
    for a in rs.positive_roots:
        dim *= inner_product(rs, lr, a) / inner_product(rs, rs.rho, a)
    if dim.denominator != 1:
        raise ArithmeticError(f"Weyl dimension {dim} is not an integer")
    return int(dim)


def expand(rs: RootSystemData, wm: WeightMultiset) -> list[tuple[Weight, int]]:
    """All weights of the module with multiplicity, in lexicographic order."""
    out = []
    for mu, m in wm.dominant_mults.items():
        out.extend((w, m) for w in orbit(rs, mu).elements)
    out.sort()
    return out


# --- on-disk cache -------------------------------------------------------

def cache_path(lie_type: LieType, lam: Sequence[int], cache_dir) -> Path:
    tag = "_".join(str(x) for x in lam)
    return Path(cache_dir) / f"{lie_type.family}{lie_type.rank}__{tag}.json"


def multiset_to_json(wm: WeightMultiset) -> dict:
    return {
        "schema": CACHE_SCHEMA_VERSION,
        "lie_type": {"family": wm.lie_type.family, "rank": wm.lie_type.rank},
        "lambda": list(wm.highest),
        "dominant_mults": [
            {"weight": list(mu), "multiplicity": m} for mu, m in wm.dominant_mults.items()
        ],
        "total_dim": wm.total_dim,
    }


def multiset_from_json(doc: dict) -> WeightMultiset:
    lt = LieType(doc["lie_type"]["family"], int(doc["lie_type"]["rank"]))
    mults = {tuple(e["weight"]): int(e["multiplicity"]) for e in doc["dominant_mults"]}
    return WeightMultiset(lt, tuple(doc["lambda"]), mults, int(doc["total_dim"]))


def load_cached(rs: RootSystemData, lam: Weight, cache_dir) -> WeightMultiset | None:
    path = cache_path(rs.lie_type, lam, cache_dir)
    try:
        doc = json.loads(path.read_text())
        if doc.get("schema") != CACHE_SCHEMA_VERSION:
            return None
        wm = multiset_from_json(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if path.exists():
            log.warning("ignoring unreadable cache file %s: %s", path, exc)
        return None
    if wm.lie_type != rs.lie_type or wm.highest != lam:
        return None
    return wm


def save_cached(wm: WeightMultiset, cache_dir) -> None:
    path = cache_path(wm.lie_type, wm.highest, cache_dir)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(multiset_to_json(wm), sort_keys=True))
        tmp.replace(path)
    except OSError as exc:
        log.warning("could not write cache file %s: %s", path, exc)
