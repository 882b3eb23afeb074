"""
Constructive pursuit strategies
===============================

Each strategy plays against the robber extracted from the exact solver,
which is the strongest possible opponent.
"""

from copsrobbers.engine import play, replay_check
from copsrobbers.graph import complete_bipartite, cycle, petersen
from copsrobbers.solver import OptimalRobber, solve_cached
from copsrobbers.strategies import (
    bipartite_lead_cop,
    lead_cop_strategy,
    parse_pattern,
    subdivision_plus_one,
    theorem2_strategy,
    tree_decomposition_strategy,
)
from copsrobbers.treewidth import exact_treewidth


def match(g, strategy):
    k = strategy.budget
    trace = play(g, k, strategy, OptimalRobber(solve_cached(g, k)))
    assert replay_check(trace)
    print(f"{strategy.name:>14} with {k} cops on {g.n:>2} vertices: {trace.outcome}")
    return trace


# C_4 has no induced path on 4 vertices, so 2 cops in single file suffice
trace = match(cycle(4), lead_cop_strategy(4))
print("robber route", trace.robber_route())

# on bipartite graphs the cops keep two steps apart along the lead cop's walk
match(complete_bipartite(3, 3), bipartite_lead_cop(2))

# sweeping the bags of an optimal tree decomposition
match(petersen(), tree_decomposition_strategy(exact_treewidth(petersen())[1]))

# an extra cop pins the robber to a subdivided edge while the rest shadow the base game
strat = subdivision_plus_one(petersen(), 1)
match(strat.graph, strat)

# claw-free connected graphs are paths and cycles
match(cycle(10), theorem2_strategy(parse_pattern("claw")))
