"""
G2: explicit coefficient formulas
=================================

For G2 (alpha_1 short, alpha_2 long) with x = sum mu_2^2,

    c_1 = 2/(3x) sum (2 mu_1 + 3 mu_2) e^mu
    c_2 = 2/(3x) sum (3 mu_1 + 6 mu_2) e^mu
"""

from fractions import Fraction

from springer_torus.repweights import expand, freudenthal
from springer_torus.rootsystem import LieType, build
from springer_torus.springer import CharacterCombo, TorusPoint, coefficients, evaluate

rs = build(LieType("G", 2))
wm = freudenthal(rs, (1, 0))
weights = expand(rs, wm)
x = sum(m * mu[1] ** 2 for mu, m in weights)
k = Fraction(2, 3 * x)
c1 = CharacterCombo([(mu, k * m * (2 * mu[0] + 3 * mu[1])) for mu, m in weights])
c2 = CharacterCombo([(mu, k * m * (3 * mu[0] + 6 * mu[1])) for mu, m in weights])

solved = coefficients(rs, wm)
print("x =", x)
print("c_1 =", solved[0])
print("c_2 =", solved[1])
print("matches closed forms:", solved == [c1, c2])

z = TorusPoint((0.8 + 0.6j, 1.5))
print("at z =", z.z, ":", [evaluate(c, z) for c in solved])
