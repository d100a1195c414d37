"""
The matrix of second moments of the weights
===========================================

S(G, lam)_ij = sum over weights (with multiplicity) of mu_i mu_j turns out
to be (x/2) S, where x is the sum of mu_j^2 for any long simple root.
"""

from springer_torus.repweights import freudenthal
from springer_torus.rootsystem import LieType, build
from springer_torus.springer import identity_report

for name, lam in [("C3", (1, 0, 0)), ("B3", (0, 0, 1)), ("F4", (0, 0, 0, 1)), ("G2", (1, 1))]:
    rs = build(LieType.parse(name))
    rep = identity_report(rs, freudenthal(rs, lam))
    print(f"--- {name} lambda={lam}: x = {rep.x}, closed form agrees: {rep.closed_form_agrees}")
    print("  ", rep.s_bruteforce)
    for check in rep.checks:
        print(f"   [{'ok' if check.passed else 'FAIL'}] {check.kind:24s} {check.statement}")
