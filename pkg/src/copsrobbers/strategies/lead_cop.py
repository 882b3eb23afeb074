"""Lead-cop pursuit in single file.

A stage starts whenever the minimum cop-robber distance, measured after
the robber's move and before the cops', drops below the stage's value.
The lead cop (a closest cop, lowest index) walks a shortest path to the
robber's stage-start vertex ``y`` and then replays the robber's route from
``y``.  The other cops trail the lead cop's walk: follower ``i`` stands on
the walk ``spacing * i`` steps behind, i.e. on the vertex the previous cop
just vacated when ``spacing`` is 1.  Followers that are not yet on the walk
head for its start first.

In a ``P_l``-free graph the robber's route from ``y`` is forced to bend back
within ``l - d - 1`` moves, so every stage is short and the distance keeps
falling until a capture.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import HypothesisError
from ..graph import has_induced_cycle_at_least, is_p_free
from .base import CopStrategy, capture_moves, step_toward


@dataclass
class StageRecord:
    lead: int
    distance: int  # d at stage start
    start: int  # robber vertex y
    origin: int  # lead cop's vertex x
    started_round: int
    route: list = field(default_factory=list)  # robber route consumed so far, from y
    lead_moves: int = 0
    reached_at: int | None = None  # lead-cop moves until the lead first stood on y
    ended: str | None = None  # "distance-drop" | "capture" | None while running
    flagged: bool = False  # safety cap exceeded


class LeadCopController:
    """Single-file pursuit by the cops ``cops`` inside ``graph``."""

    def __init__(self, graph, cops, spacing=1, stages=None):
        self.graph = graph
        self.cops = list(cops)
        self.spacing = spacing
        self.stages = stages if stages is not None else []
        self.stage = None
        self.walk = []
        self.tau = 0
        self.delay = {}
        self.cap = 4 * graph.n * graph.n

    def _start(self, positions, robber, round_):
        dist = self.graph.distance_matrix()
        d = min(int(dist[positions[i], robber]) for i in self.cops)
        lead = min(i for i in self.cops if dist[positions[i], robber] == d)
        x = positions[lead]
        self.walk = self.graph.shortest_path(x, robber)
        self.tau = 0
        others = sorted((i for i in self.cops if i != lead), key=lambda i: (int(dist[positions[i], x]), i))
        self.delay = {lead: 0}
        self.delay.update({i: self.spacing * (s + 1) for s, i in enumerate(others)})
        self.stage = StageRecord(lead, d, robber, x, round_, route=[robber])
        self.stages.append(self.stage)

    def decide(self, positions, robber, round_=0):
        """Destinations for the controlled cops, as ``{cop: vertex}``."""
        dist = self.graph.distance_matrix()
        d = min(int(dist[positions[i], robber]) for i in self.cops)
        grab = capture_moves(self.graph, positions, robber, self.cops)
        if self.stage is not None and d < self.stage.distance:
            self.stage.ended = "distance-drop"
            self.stage = None
        if self.stage is None:
            self._start(positions, robber, round_)
        else:
            self.walk.append(robber)
            self.stage.route.append(robber)
        if grab:
            self.stage.ended = "capture"
        stage = self.stage
        self.tau += 1
        stage.lead_moves = self.tau
        if stage.lead_moves > self.cap and not stage.flagged:
            stage.flagged = True
        out = {}
        for i in self.cops:
            want = self.walk[max(self.tau - self.delay[i], 0)]
            out[i] = step_toward(self.graph, positions[i], want)
        if stage.reached_at is None and out[stage.lead] == stage.start:
            stage.reached_at = self.tau
        out.update(grab)
        return out


class LeadCopStrategy(CopStrategy):
    """``budget`` cops in single file; ``check`` vets the graph at placement."""

    def __init__(self, name, budget, check, spacing=1, ell=None):
        super().__init__(name)
        self.budget = budget
        self.check = check
        self.spacing = spacing
        self.ell = ell
        self.controller = None

    def _place(self, graph, k):
        if not graph.is_connected():
            raise HypothesisError("graph must be connected")
        problem = self.check(graph)
        if problem:
            raise HypothesisError(f"{self.name}: {problem}")
        self.controller = LeadCopController(graph, range(k), self.spacing, self.events)
        return [0] * k

    def _move(self, graph, state, history):
        out = self.controller.decide(state.cops, state.robber, state.round + 1)
        return [out[i] for i in range(len(state.cops))]

    @property
    def stages(self):
        return self.events


def _check_p_free(ell):
    def check(g):
        return None if is_p_free(g, ell) else f"graph has an induced path on {ell} vertices"

    return check


def lead_cop_strategy(ell: int) -> LeadCopStrategy:
    """Pursuit with ``ell - 2`` cops on a connected ``P_ell``-free graph."""
    if ell < 3:
        raise HypothesisError("lead-cop pursuit needs l >= 3")
    return LeadCopStrategy(f"lead-cop:l={ell}", ell - 2, _check_p_free(ell), ell=ell)


def induced_cycle_strategy(ell: int) -> LeadCopStrategy:
    """Same pursuit, ``ell - 2`` cops, on graphs without induced cycles of length >= ``ell``."""
    if ell < 3:
        raise HypothesisError("induced-cycle pursuit needs l >= 3")

    def check(g):
        if has_induced_cycle_at_least(g, ell):
            return f"graph has an induced cycle of length >= {ell}"
        return None

    return LeadCopStrategy(f"induced-cycle:l={ell}", ell - 2, check, ell=ell)


def bipartite_lead_cop(ell: int) -> LeadCopStrategy:
    """``ell`` cops two apart on a connected bipartite ``P_{2 ell}``-free graph."""
    if ell < 1:
        raise HypothesisError("bipartite pursuit needs l >= 1")

    def check(g):
        if not g.is_bipartite():
            return "graph is not bipartite"
        if not is_p_free(g, 2 * ell):
            return f"graph has an induced path on {2 * ell} vertices"
        return None

    return LeadCopStrategy(f"bipartite:l={ell}", ell, check, spacing=2, ell=ell)
