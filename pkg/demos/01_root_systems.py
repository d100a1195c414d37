"""
Root systems and the symmetrized Cartan matrix
==============================================

Every simple type is built from its Dynkin diagram in Bourbaki numbering.
The Cartan matrix factors as A = D S with D diagonal and S symmetric.
"""

from springer_torus.exact_linear import mat_inverse
from springer_torus.rootsystem import LieType, build

for name in ["G2", "B3", "C3", "F4"]:
    rs = build(LieType.parse(name))
    print(f"--- {name}")
    print("A =", rs.cartan)
    print("D =", [str(d) for d in rs.d_diag])
    print("S =", rs.s_matrix)
    print("S^-1 =", mat_inverse(rs.s_matrix))
    print("long simple roots:", sorted(i + 1 for i in rs.long_indices))
    print("positive roots:", len(rs.positive_roots))

# In the simply-laced case D is the identity and S is the Cartan matrix.
e6 = build(LieType("E", 6))
assert e6.s_matrix == e6.cartan
print("E6 inverse Cartan:", e6.cartan_inverse)
