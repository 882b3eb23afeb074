"""Helpers shared by the constructive cop strategies."""

from __future__ import annotations

from ..errors import HypothesisError


def step_toward(graph, src, dst):
    """Next vertex on the lexicographically least shortest ``src``-``dst`` path."""
    if src == dst:
        return src
    dist = graph.distance_matrix()
    target = dist[src, dst]
    if target < 0:
        return src
    return next(w for w in graph.neighbors(src) if dist[w, dst] == target - 1)


def capture_moves(graph, positions, robber, cops):
    """Cops among ``cops`` standing on or next to the robber, mapped to the robber."""
    return {i: robber for i in cops if positions[i] == robber or graph.has_edge(positions[i], robber)}


class CopStrategy:
    """Base class: a named, single-match cop strategy with a fixed budget.

    Subclasses fill ``budget`` and implement ``_place`` and ``_move``;
    ``events`` collects the invariant records a verifier inspects.
    """

    side = "cop"
    budget = 1

    def __init__(self, name):
        self.name = name
        self.events = []

    def check_budget(self, k):
        if k < self.budget:
            raise HypothesisError(f"{self.name} needs {self.budget} cops, got {k}")

    def place(self, graph, k):
        self.check_budget(k)
        self.events = []
        return tuple(self._place(graph, k))

    def move(self, graph, state, history):
        return tuple(self._move(graph, state, history))

    def _place(self, graph, k):  # pragma: no cover - abstract
        raise NotImplementedError

    def _move(self, graph, state, history):  # pragma: no cover - abstract
        raise NotImplementedError


def previous_robber(history):
    """Robber position at the previous cops' turn, or ``None`` at the first move."""
    seen = 0
    for s in reversed(history):
        if s.side_to_move == "cops":
            seen += 1
            if seen == 2:
                return s.robber
    return None
