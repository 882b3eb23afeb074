"""
Transformations that never lower the cop number
===============================================

Clique substitution and uniform subdivision can only keep or raise the
cop number, and subdividing raises it by at most one.
"""

from copsrobbers import cop_number
from copsrobbers.graph import complete, cycle, girth, petersen
from copsrobbers.transforms import clique_substitution, girth_lift, hat_construction, subdivide

for name, g in [("C4", cycle(4)), ("K4", complete(4)), ("Petersen", petersen())]:
    base = cop_number(g)
    plus = clique_substitution(g).output
    row = [f"{name}: cop {base}", f"clique-substituted ({plus.n} vertices) {cop_number(plus)}"]
    for r in (1, 2):
        sub = subdivide(g, r).output
        if sub.n <= 30:
            row.append(f"r={r} ({sub.n} vertices) {cop_number(sub)}")
    print(", ".join(row))

# joining non-adjacent pairs by long paths keeps the cop number
hat = hat_construction(cycle(4)).output
print("hat(C4):", hat.n, "vertices, cop", cop_number(hat))

# subdividing until the girth is large
lifted = girth_lift(complete(4), 12)
print("K4 lifted to girth", girth(lifted.output), "with r =", lifted.r)

# subdivide(K_n, n) stays at two cops for small n
for n in (3, 4, 5):
    print(f"subdivide(K_{n}, {n}):", cop_number(subdivide(complete(n), n).output))
