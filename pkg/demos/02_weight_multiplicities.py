"""
Weights of an irreducible module
================================

Freudenthal's recursion gives the multiplicities of dominant weights; the
Weyl dimension formula is an independent check on the total.
"""

from springer_torus.repweights import expand, freudenthal, weyl_dimension
from springer_torus.rootsystem import LieType, build

rs = build(LieType("G", 2))
for lam in [(1, 0), (0, 1), (1, 1), (2, 0)]:
    wm = freudenthal(rs, lam)
    print(lam, "dim", wm.total_dim, "Weyl", weyl_dimension(rs, lam), "dominant:", wm.dominant_mults)

# The full weight list for the 7-dimensional module
wm = freudenthal(rs, (1, 0))
for mu, m in expand(rs, wm):
    print(f"  {mu}  x{m}")

# F4 at rho: a 2^24-dimensional module, computed exactly in well under a second
f4 = build(LieType("F", 4))
big = freudenthal(f4, f4.rho)
print("F4 rho:", big.total_dim, "=", 2**24, "with", len(big.dominant_mults), "dominant weights")
