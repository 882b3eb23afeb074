"""The referee: game rules, match play and replayable traces.

A cop strategy implements ``place(graph, k) -> tuple`` and
``move(graph, state, history) -> tuple`` (one destination per cop, in cop
order).  A robber strategy implements ``place(graph, cops) -> int`` and
``move(graph, state, history) -> int``.  Both carry ``name`` and ``side``.

Cops keep their identity across moves (``GameState.cops`` is indexed by
cop), because several strategies assign roles to individual cops;
``GameState.cop_multiset`` gives the canonical sorted view.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphError
from .graph import Graph, parse_graph, render_graph
from .solver import default_horizon

COP_PLACEMENT = "cop-placement"
ROBBER_PLACEMENT = "robber-placement"
COPS = "cops"
ROBBER = "robber"


@dataclass(frozen=True)
class GameState:
    cops: tuple
    robber: int | None
    side_to_move: str
    round: int = 0

    @property
    def cop_multiset(self) -> tuple:
        return tuple(sorted(self.cops))

    @property
    def captured(self) -> bool:
        return self.robber is not None and self.robber in self.cops


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(render_graph(g).encode()).hexdigest()[:16]


@dataclass
class Trace:
    graph: Graph
    k: int
    cop_strategy: str
    robber_strategy: str
    cop_placement: tuple | None = None
    robber_placement: int | None = None
    rounds: list = field(default_factory=list)  # [{"cops": [...], "robber": r}]
    outcome: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    @property
    def captured(self) -> bool:
        return self.outcome.get("result") == "capture"

    @property
    def capture_round(self):
        return self.outcome.get("round") if self.captured else None

    def states(self):
        """Replay the trace as the sequence of states after every half-move."""
        out = []
        if self.cop_placement is None:
            return out
        out.append(GameState(tuple(self.cop_placement), None, ROBBER_PLACEMENT, 0))
        if self.robber_placement is None:
            return out
        out.append(GameState(tuple(self.cop_placement), self.robber_placement, COPS, 0))
        robber = self.robber_placement
        for t, rnd in enumerate(self.rounds, start=1):
            cops = tuple(rnd["cops"])
            out.append(GameState(cops, robber, ROBBER, t))
            if rnd.get("robber") is None:
                break
            robber = rnd["robber"]
            out.append(GameState(cops, robber, COPS, t))
        return out

    def robber_route(self) -> list:
        return [s.robber for s in self.states() if s.side_to_move == COPS]

    def as_dict(self) -> dict:
        return {
            "graph_hash": graph_hash(self.graph),
            "graph": render_graph(self.graph),
            "k": self.k,
            "strategies": {"cop": self.cop_strategy, "robber": self.robber_strategy},
            "placements": {
                "cops": list(self.cop_placement) if self.cop_placement is not None else None,
                "robber": self.robber_placement,
            },
            "rounds": [{"cops": list(r["cops"]), "robber": r.get("robber")} for r in self.rounds],
            "outcome": self.outcome,
            "config": self.config,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "Trace":
        doc = json.loads(text)
        g = parse_graph(doc["graph"])
        if graph_hash(g) != doc["graph_hash"]:
            raise GraphError("trace graph does not match its hash")
        place = doc["placements"]
        return cls(
            graph=g,
            k=doc["k"],
            cop_strategy=doc["strategies"]["cop"],
            robber_strategy=doc["strategies"]["robber"],
            cop_placement=tuple(place["cops"]) if place["cops"] is not None else None,
            robber_placement=place["robber"],
            rounds=[{"cops": tuple(r["cops"]), "robber": r["robber"]} for r in doc["rounds"]],
            outcome=doc["outcome"],
            config=doc.get("config", {}),
        )


def legal_cop_moves(g: Graph, state: GameState) -> list:
    """Per-cop option lists (stay or slide); the joint moves are their product."""
    if state.side_to_move != COPS:
        raise GraphError(f"cops cannot move when side to move is {state.side_to_move}")
    return [list(g.closed_neighbors(c)) for c in state.cops]


def legal_robber_moves(g: Graph, state: GameState) -> list:
    if state.side_to_move != ROBBER:
        raise GraphError(f"robber cannot move when side to move is {state.side_to_move}")
    return list(g.closed_neighbors(state.robber))


def _valid_vertex(g, v):
    return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < g.n


def _normalise(x):
    return int(x) if isinstance(x, np.integer) else x


def play(g: Graph, k: int, cop, robber, horizon: int | None = None, config: dict | None = None) -> Trace:
    """Run one match; ``horizon`` caps the number of rounds (default: state count + 1)."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("the game is played on a connected non-empty graph")
    if k < 1:
        raise GraphError("need at least one cop")
    if horizon is None:
        horizon = default_horizon(g.n, k)
    if horizon < 0:
        raise GraphError("horizon must be >= 0")
    trace = Trace(g, k, cop.name, robber.name, config=dict(config or {}, horizon=horizon))
    history = []

    def forfeit(side, round_, reason):
        trace.outcome = {"result": "forfeit", "violator": side, "round": round_, "reason": reason}
        return trace

    placed = cop.place(g, k)
    placed = tuple(_normalise(v) for v in placed) if isinstance(placed, (tuple, list)) else placed
    if not isinstance(placed, tuple) or len(placed) != k or not all(_valid_vertex(g, v) for v in placed):
        return forfeit("cop", 0, f"invalid cop placement {placed!r}")
    trace.cop_placement = placed
    state = GameState(placed, None, ROBBER_PLACEMENT, 0)
    history.append(state)

    r = _normalise(robber.place(g, placed))
    if not _valid_vertex(g, r):
        return forfeit("robber", 0, f"invalid robber placement {r!r}")
    trace.robber_placement = r
    state = GameState(placed, r, COPS, 0)
    history.append(state)
    if state.captured:
        trace.outcome = {"result": "capture", "round": 0, "half": "placement"}
        return trace

    for t in range(1, horizon + 1):
        move = cop.move(g, state, history)
        move = tuple(_normalise(v) for v in move) if isinstance(move, (tuple, list)) else move
        if (
            not isinstance(move, tuple)
            or len(move) != k
            or not all(_valid_vertex(g, v) for v in move)
            or not all(v == c or g.has_edge(c, v) for c, v in zip(state.cops, move))
        ):
            trace.rounds.append({"cops": state.cops, "robber": None})
            return forfeit("cop", t, f"illegal cop move {state.cops!r} -> {move!r}")
        state = GameState(move, state.robber, ROBBER, t)
        history.append(state)
        if state.captured:
            trace.rounds.append({"cops": move, "robber": None})
            trace.outcome = {"result": "capture", "round": t, "half": "cops"}
            return trace
        nxt = _normalise(robber.move(g, state, history))
        if not _valid_vertex(g, nxt) or not (nxt == state.robber or g.has_edge(state.robber, nxt)):
            trace.rounds.append({"cops": move, "robber": None})
            return forfeit("robber", t, f"illegal robber move {state.robber!r} -> {nxt!r}")
        trace.rounds.append({"cops": move, "robber": nxt})
        state = GameState(move, nxt, COPS, t)
        history.append(state)
        if state.captured:
            trace.outcome = {"result": "capture", "round": t, "half": "robber"}
            return trace
    trace.outcome = {"result": "survived", "round": horizon}
    return trace


def replay_check(trace: Trace) -> bool:
    """Re-validate legality and the outcome of a recorded trace."""
    g = trace.graph
    states = trace.states()
    if not states:
        return trace.outcome.get("result") == "forfeit"
    prev = None
    first_capture = None
    for s in states:
        if prev is not None and s.side_to_move == ROBBER and prev.side_to_move == COPS:
            if not all(a == b or g.has_edge(a, b) for a, b in zip(prev.cops, s.cops)):
                return False
        if prev is not None and s.side_to_move == COPS and prev.side_to_move == ROBBER:
            if not (s.robber == prev.robber or g.has_edge(prev.robber, s.robber)):
                return False
        if s.captured and first_capture is None:
            first_capture = s
        prev = s
    result = trace.outcome.get("result")
    if result == "capture":
        return first_capture is not None and first_capture is states[-1] and first_capture.round == trace.outcome["round"]
    if result == "survived":
        return first_capture is None and len(trace.rounds) == trace.outcome["round"]
    return result == "forfeit"


class GreedyCop:
    """Every cop steps along a shortest path towards the robber (least vertex first)."""

    side = "cop"
    name = "greedy-cop"

    def place(self, graph, k):
        return (0,) * k

    def move(self, graph, state, history):
        out = []
        for c in state.cops:
            if c == state.robber:
                out.append(c)
            else:
                out.append(graph.shortest_path(c, state.robber)[1])
        return tuple(out)


class StationaryRobber:
    side = "robber"

    def __init__(self, vertex=None):
        self.vertex = vertex
        self.name = "stationary-robber" if vertex is None else f"stationary-robber@{vertex}"

    def place(self, graph, cops):
        if self.vertex is not None:
            return self.vertex
        free = [v for v in graph.vertices() if v not in cops]
        return free[0] if free else 0

    def move(self, graph, state, history):
        return state.robber


class ScriptedRobber:
    """Follows a fixed route (placement first); stays put once it runs out."""

    side = "robber"

    def __init__(self, route):
        self.route = list(route)
        self.name = f"scripted-robber({len(self.route)})"
        self._i = 0

    def place(self, graph, cops):
        self._i = 0
        return self.route[0]

    def move(self, graph, state, history):
        self._i += 1
        if self._i < len(self.route):
            return self.route[self._i]
        return state.robber
