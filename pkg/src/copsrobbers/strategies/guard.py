"""One cop guarding a shortest path.

The cop stands on the path at offset ``min(dist(robber, u), len(P))`` from
the anchor ``u``.  A robber stepping onto the path at offset ``j`` has
distance at most ``j`` to ``u`` and at least ``j`` (the path is a shortest
one), so the cop, within one step of offset ``j``, captures him.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GraphError
from .base import CopStrategy, step_toward

MOVING = "moving-into-position"
GUARDING = "guarding"


@dataclass
class GuardAssignment:
    cop: int
    path: tuple
    anchor: int
    status: str = MOVING


class PathGuard:
    """Per-cop controller for the shortest path ``path`` anchored at ``path[0]``."""

    def __init__(self, graph, path, cop=0):
        path = tuple(path)
        if not path:
            raise GraphError("cannot guard an empty path")
        if not graph.is_geodesic(path):
            raise GraphError(f"path {path} is not a shortest path")
        self.graph = graph
        self.path = path
        self.offset = {v: i for i, v in enumerate(path)}
        self.assignment = GuardAssignment(cop, path, path[0])

    @property
    def anchor(self):
        return self.path[0]

    @property
    def length(self):
        return len(self.path) - 1

    @property
    def guarding(self):
        return self.assignment.status == GUARDING

    def target(self, robber):
        d = self.graph.distance(robber, self.anchor)
        return self.length if d is None else min(d, self.length)

    def decide(self, cop_pos, robber):
        """Destination for the cop; updates the guarding status."""
        if cop_pos not in self.offset:
            nxt = step_toward(self.graph, cop_pos, self.anchor)
            if nxt in self.offset and self.offset[nxt] == self.target(robber):
                self.assignment.status = GUARDING
            return nxt
        i = self.offset[cop_pos]
        t = self.target(robber)
        j = i + (t > i) - (t < i)
        if j == t:
            self.assignment.status = GUARDING
        return self.path[j]

    def in_position(self, cop_pos, robber):
        return cop_pos in self.offset and self.offset[cop_pos] == self.target(robber)


class GuardStrategy(CopStrategy):
    """A single cop guarding one path; used on its own to exercise the guard."""

    def __init__(self, path):
        super().__init__(f"guard:{'-'.join(map(str, path))}")
        self.path = tuple(path)
        self.guard = None

    def _place(self, graph, k):
        self.guard = PathGuard(graph, self.path)
        return [self.guard.anchor] * k

    def _move(self, graph, state, history):
        nxt = self.guard.decide(state.cops[0], state.robber)
        if self.guard.guarding:
            self.events.append({"round": state.round + 1, "guarding": True, "cop": nxt})
        return [nxt] + list(state.cops[1:])


def guard_shortest_path(graph, path, anchor=None, cop=0) -> PathGuard:
    """Controller guarding ``path``; ``anchor`` must be one of its endpoints."""
    path = list(path)
    if anchor is not None and anchor != path[0]:
        if anchor != path[-1]:
            raise GraphError(f"anchor {anchor} is not an endpoint of {path}")
        path.reverse()
    return PathGuard(graph, path, cop)
