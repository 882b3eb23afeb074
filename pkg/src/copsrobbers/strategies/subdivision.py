"""One extra cop on a uniformly subdivided graph.

The simulating cops replay an optimal strategy for the base graph ``G`` on
``subdivide(G, r)``, one simulated move per ``r + 1`` real moves.  They
respond as soon as the robber leaves a branch vertex ``p`` into the edge
towards ``v``: the response to the simulated robber move ``p -> v`` is walked
in ``r + 1`` steps, so the cops land exactly when the robber reaches ``v``.

A robber who stops or turns back inside an edge breaks the simulation; the
simulating cops then walk home to the base placement, where every robber
position is a cop win, and resume.  An auxiliary cop runs the lead-cop
pursuit meanwhile; each stop or reversal after it settles on the robber's
trail shortens its distance, so breaks happen only finitely often.
"""

from __future__ import annotations

from ..errors import GraphError, HypothesisError
from ..solver import STATE_CAP, DENSE_CAP, solve_cached
from ..transforms import subdivide, subdivision_walk
from .base import CopStrategy, capture_moves, previous_robber, step_toward
from .lead_cop import LeadCopController

IDLE = "idle"
TRAVERSE = "traverse"
HOME = "home"


class SubdivisionPlusOne(CopStrategy):
    def __init__(self, base, r, state_cap=STATE_CAP, dense_cap=DENSE_CAP):
        super().__init__(f"subdiv+1:r={r}")
        if not base.is_connected():
            raise GraphError("base graph must be connected")
        self.base = base
        self.r = r
        self.subdivided = subdivide(base, r)
        k0 = 1
        while True:
            table = solve_cached(base, k0, state_cap, dense_cap)
            if table.cop_win:
                break
            k0 += 1
        self.table = table
        self.base_cops = k0
        self.budget = k0 + 1
        self.home = table.best_placement()[0]
        self.aux = None

    @property
    def graph(self):
        return self.subdivided.output

    def _place(self, graph, k):
        if graph != self.graph:
            raise HypothesisError("strategy is bound to subdivide(G, r) of its base graph")
        self.aux = LeadCopController(graph, [self.base_cops], stages=[])
        self.mode = IDLE
        self.expected = None  # branch vertex where the simulated robber stands
        self.walks = None
        self.step = 0
        self.target = None
        return list(self.home) + [0] * (k - self.base_cops)

    def _commit(self, prev, now):
        """Base-graph vertex the robber just committed to, or ``None``."""
        n = self.base.n
        if prev is None or prev >= n or now == prev:
            return None
        if now < n:
            return now if self.r == 0 else None
        u, v = self.subdivided.origin(now)
        if prev not in (u, v):
            return None
        return v if prev == u else u

    def _move(self, graph, state, history):
        sim = list(range(self.base_cops))
        pos = state.cops
        robber = state.robber
        out = list(pos)
        aux = self.aux.decide(pos, robber, state.round + 1)
        out[self.base_cops] = aux[self.base_cops]

        if self.mode == TRAVERSE:
            for i in sim:
                out[i] = self.walks[i][self.step]
            self.step += 1
            if self.step == len(self.walks[0]):
                self.mode = IDLE
        elif self.mode == HOME:
            for i in sim:
                out[i] = step_toward(graph, pos[i], self.home[i])
            if all(out[i] == self.home[i] for i in sim):
                self.mode = IDLE
                self.expected = None
        else:
            cur = tuple(pos[i] for i in sim)
            at_home = cur == tuple(self.home)
            prev = previous_robber(history)
            v = self._commit(prev, robber)
            synced = prev == self.expected or (self.expected is None and at_home)
            if v is not None and synced:
                reply, _ = self.table.best_cop_move(cur, v)
                self.events.append({"round": state.round + 1, "simulate": [list(cur), v, list(reply)]})
                self.walks = [self._walk(cur[i], reply[i]) for i in sim]
                self.expected = v
                out[: self.base_cops] = [w[1] for w in self.walks]
                self.step = 2
                self.mode = TRAVERSE if self.step < len(self.walks[0]) else IDLE
            elif robber != self.expected and not (self.expected is None and at_home):
                self.events.append({"round": state.round + 1, "desync": robber})
                self.mode = HOME
                self.expected = None
                for i in sim:
                    out[i] = step_toward(graph, pos[i], self.home[i])
                if all(out[i] == self.home[i] for i in sim):
                    self.mode = IDLE

        for i, v in capture_moves(graph, pos, robber, range(len(pos))).items():
            out[i] = v
        return out

    def _walk(self, a, b):
        walk = subdivision_walk(self.base, self.r, a, b)
        return walk + [walk[-1]] * (self.r + 2 - len(walk))


def subdivision_plus_one(base, r, state_cap=STATE_CAP, dense_cap=DENSE_CAP) -> SubdivisionPlusOne:
    """Strategy on ``subdivide(base, r)`` with ``cop_number(base) + 1`` cops."""
    return SubdivisionPlusOne(base, r, state_cap, dense_cap)
