"""
Checking every identity over a grid of types
============================================

The same runner that backs ``springer-torus verify`` can be driven directly.
"""

from collections import Counter

from springer_torus.verify import grid_types, run

records = run(grid_types(3), weights="all")
by_status = Counter(r.passed for r in records)
print(f"{len(records)} checks: {by_status[True]} passed, {by_status[False]} failed")

# Table checks carry a note when a printed entry had to be verified indirectly
for r in records:
    if r.weight is None and r.detail:
        print(f"{r.lie_type}: {r.identity}: {r.detail}")
