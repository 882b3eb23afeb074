"""
Cop number versus treewidth on the Petersen graph
=================================================

The cop number of a graph is at most half its treewidth plus one.  The
Petersen graph attains that bound, and so does its disjoint union with K_6.
"""

from copsrobbers import cop_number, exact_treewidth, solve
from copsrobbers.graph import complete, disjoint_union, metrics, petersen

g = petersen()
print(metrics(g).as_dict())

# exact treewidth from the elimination-order dynamic programme
width, dec = exact_treewidth(g)
print("treewidth", width, "bags", len(dec.bags))

# retrograde solve: two cops lose, three win
for k in (1, 2, 3):
    table = solve(g, k)
    print(f"{k} cops: {'cop-win' if table.cop_win else 'robber-win'}")
print("cop number", cop_number(g), "bound", width // 2 + 1)

# the bound is attained again one step up
u = disjoint_union(petersen(), complete(6))
print("Petersen + K6: cop number", cop_number(u), "treewidth", exact_treewidth(u)[0])
