"""Weyl group action on weights in fundamental-weight coordinates.

Group elements are never materialized; only orbits under the simple
reflections are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootsystem import RootSystemData, Weight


@dataclass(frozen=True)
class WeylOrbit:
    representative: Weight
    elements: tuple[Weight, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, mu) -> bool:
        return tuple(mu) in set(self.elements)


def simple_reflection(rs: RootSystemData, i: int, mu: Sequence[int]) -> Weight:
    """s_i(mu) = mu - mu_i * alpha_i, with ``i`` 0-based."""
    n = rs.rank
    if not 0 <= i < n:
        raise IndexError(f"reflection index {i} out of range for rank {n}")
    if len(mu) != n:
        raise ValueError(f"weight {tuple(mu)} does not have length {n}")
    c = mu[i]
    if c == 0:
        return tuple(mu)
    return tuple(m - c * x for m, x in zip(mu, rs.simple_roots[i]))


def is_dominant(mu: Sequence[int]) -> bool:
    return all(m >= 0 for m in mu)


def orbit(rs: RootSystemData, mu: Sequence[int]) -> WeylOrbit:
    mu = tuple(mu)
    n = rs.rank
    rows = rs.simple_roots
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(n):
                c = nu[i]
                if c == 0:
                    continue
                a = rows[i]
                w = tuple(m - c * x for m, x in zip(nu, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    elements = tuple(sorted(seen))
    dominant = [w for w in elements if is_dominant(w)]
    assert len(dominant) == 1, dominant
    return WeylOrbit(dominant[0], elements)


def to_dominant(rs: RootSystemData, mu: Sequence[int]) -> Weight:
    """Reflect at the first negative coordinate until none remain."""
    mu = tuple(mu)
    n = rs.rank
    if len(mu) != n:
        raise ValueError(f"weight {mu} does not have length {n}")
    rows = rs.simple_roots
    # each step raises the height of mu by a positive multiple of a simple root,
    # and heights within an orbit are bounded, so this terminates
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                mu = tuple(m - c * x for m, x in zip(mu, rows[i]))
                break
        else:
            return mu
