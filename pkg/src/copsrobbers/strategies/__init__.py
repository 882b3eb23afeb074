"""Constructive cop strategies and a name registry for selecting them.

A strategy is named ``name`` or ``name:key=value,key=value``, for example
``lead-cop:l=5``, ``treedec``, ``subdiv+1:r=2`` or ``thm2:H=P2+claw``.
"""

from __future__ import annotations

from ..engine import GreedyCop, ScriptedRobber, StationaryRobber
from ..errors import GraphError
from ..graph import Graph, claw, disjoint_union, path, spider
from ..solver import DENSE_CAP, STATE_CAP, OptimalCop, OptimalRobber, solve_cached
from .base import CopStrategy, step_toward
from .guard import GUARDING, MOVING, GuardAssignment, GuardStrategy, PathGuard, guard_shortest_path
from .lead_cop import (
    LeadCopController,
    LeadCopStrategy,
    StageRecord,
    bipartite_lead_cop,
    induced_cycle_strategy,
    lead_cop_strategy,
)
from .subdivision import SubdivisionPlusOne, subdivision_plus_one
from .theorem2 import Theorem2Strategy, claim_budget, pattern_budget, theorem2_strategy
from .treedec import TreeDecompositionController, TreeDecompositionStrategy, budget_for, tree_decomposition_strategy

__all__ = [
    "COP_STRATEGIES",
    "ROBBER_STRATEGIES",
    "CopStrategy",
    "GUARDING",
    "GuardAssignment",
    "GuardStrategy",
    "LeadCopController",
    "LeadCopStrategy",
    "MOVING",
    "PathGuard",
    "StageRecord",
    "SubdivisionPlusOne",
    "Theorem2Strategy",
    "TreeDecompositionController",
    "TreeDecompositionStrategy",
    "bipartite_lead_cop",
    "budget_for",
    "claim_budget",
    "guard_shortest_path",
    "induced_cycle_strategy",
    "lead_cop_strategy",
    "make_cop",
    "make_robber",
    "parse_pattern",
    "parse_spec",
    "pattern_budget",
    "step_toward",
    "subdivision_plus_one",
    "theorem2_strategy",
    "tree_decomposition_strategy",
]


def parse_spec(text: str):
    """``"lead-cop:l=5"`` -> ``("lead-cop", {"l": "5"})``."""
    name, _, rest = text.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise GraphError(f"strategy parameter {item!r} is not key=value")
        params[key.strip().replace("ℓ", "l")] = value.strip()
    return name.strip(), params


def parse_pattern(text: str) -> Graph:
    """Forest from ``+``-joined parts: ``claw``, ``P<t>``, ``spider-a-b-c``."""
    parts = []
    for token in text.split("+"):
        token = token.strip().lower()
        if token == "claw":
            parts.append(claw())
        elif token.startswith("p") and token[1:].isdigit():
            parts.append(path(int(token[1:])))
        elif token.startswith("spider-"):
            parts.append(spider(*(int(x) for x in token.split("-")[1:])))
        else:
            raise GraphError(f"unknown pattern part {token!r}")
    return disjoint_union(*parts)


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise GraphError(f"missing strategy parameter {key}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise GraphError(f"parameter {key} must be an integer") from None


def _optimal_cop(graph, k, state_cap, dense_cap):
    return OptimalCop(solve_cached(graph, k, state_cap, dense_cap))


COP_STRATEGIES = {
    "lead-cop": lambda p, g, k, sc, dc: lead_cop_strategy(_int(p, "l")),
    "induced-cycle": lambda p, g, k, sc, dc: induced_cycle_strategy(_int(p, "l")),
    "bipartite": lambda p, g, k, sc, dc: bipartite_lead_cop(_int(p, "l")),
    "treedec": lambda p, g, k, sc, dc: tree_decomposition_strategy(),
    "subdiv+1": lambda p, g, k, sc, dc: subdivision_plus_one(g, _int(p, "r"), sc, dc),
    "thm2": lambda p, g, k, sc, dc: theorem2_strategy(parse_pattern(p.get("H", "claw"))),
    "optimal": lambda p, g, k, sc, dc: _optimal_cop(g, k, sc, dc),
    "greedy": lambda p, g, k, sc, dc: GreedyCop(),
    "guard": lambda p, g, k, sc, dc: GuardStrategy([int(x) for x in p["path"].split("-")]),
}

ROBBER_STRATEGIES = {
    "optimal": lambda p, g, k, sc, dc: OptimalRobber(solve_cached(g, k, sc, dc)),
    "stationary": lambda p, g, k, sc, dc: StationaryRobber(_int(p, "v") if "v" in p else None),
    "scripted": lambda p, g, k, sc, dc: ScriptedRobber([int(x) for x in p["route"].split("-")]),
}


def _make(table, side, text, graph, k, state_cap, dense_cap):
    name, params = parse_spec(text)
    try:
        factory = table[name]
    except KeyError:
        known = ", ".join(sorted(table))
        raise GraphError(f"unknown {side} strategy {name!r} (known: {known})") from None
    try:
        handle = factory(params, graph, k, state_cap, dense_cap)
    except KeyError as exc:
        raise GraphError(f"missing strategy parameter {exc.args[0]}") from None
    return handle


def make_cop(text, graph, k, state_cap=STATE_CAP, dense_cap=DENSE_CAP):
    """Cop strategy handle from a registry name.

    ``subdiv+1`` plays on ``subdivide(graph, r)``; its handle's ``graph``
    attribute is the board to use.
    """
    return _make(COP_STRATEGIES, "cop", text, graph, k, state_cap, dense_cap)


def make_robber(text, graph, k, state_cap=STATE_CAP, dense_cap=DENSE_CAP):
    return _make(ROBBER_STRATEGIES, "robber", text, graph, k, state_cap, dense_cap)
