"""
Sp(2n): the defining representation and the Cayley transform
============================================================

For the defining representation of Sp(2n), theta(t) is the diagonal matrix
with entries (t_k - 1/t_k)/2 and their negatives. In the coroot basis this
means c_k - c_(k-1) = (t_k - 1/t_k)/2.
"""

import numpy as np

from springer_torus.repweights import freudenthal
from springer_torus.rootsystem import LieType, build
from springer_torus.springer import (
    coefficients,
    springer_torus,
    symplectic_diagonal,
    torus_from_symplectic_eigenvalues,
)

n = 4
rs = build(LieType("C", n))
w1 = rs.fundamental_weight(0)
for i, c in enumerate(coefficients(rs, freudenthal(rs, w1)), 1):
    print(f"c_{i} =", c)

rng = np.random.default_rng(0)
t = rng.uniform(0.5, 2, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))
res = springer_torus(rs, w1, torus_from_symplectic_eigenvalues(t))
diag = np.array(symplectic_diagonal(res.coefficients))
cayley = (t - 1 / t) / 2
print("theta(t) diagonal:", np.round(diag, 6))
print("max deviation from (t - 1/t)/2:", np.max(np.abs(diag[:n] - cayley)))
