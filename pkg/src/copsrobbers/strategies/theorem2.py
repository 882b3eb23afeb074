"""Capturing on graphs that avoid a forest of few-leaved trees.

For a forest ``H`` whose components are trees with at most three leaves,
the strategy peels components off one at a time.  If the robber's region
contains the next component ``T``, ``|T|`` cops park on a copy of it for
the rest of the game; the robber is then shut inside one component of what
remains, and the strategy recurses there with ``H - T``.  Otherwise ``T``
is absent from the region and a base strategy takes over:

* ``T`` a path on ``t`` vertices: the region is ``P_t``-free, so lead-cop
  pursuit with ``max(t - 2, 1)`` cops.
* ``T`` with a degree-3 vertex of radius ``r``: if the region has no induced
  path on ``2r`` vertices, lead-cop pursuit with ``max(2r - 2, 1)`` cops.
  Otherwise ``r`` sentinels sit on every other vertex of such a path ``P``
  and the tree-decomposition sweep runs, with the other ``r`` cops, on the
  robber's component of the region minus ``P``.
"""

from __future__ import annotations

from ..errors import GraphError, HypothesisError
from ..graph import ForestPattern, Graph, contains_forest_subgraph, induced_path_on, is_p_free
from ..treewidth import exact_treewidth
from .base import CopStrategy, capture_moves, step_toward
from .lead_cop import LeadCopController
from .treedec import TreeDecompositionController


def claim_budget(comp) -> int:
    if comp.is_path:
        return max(comp.size - 2, 1)
    return 2 * comp.radius


def pattern_budget(pattern: ForestPattern) -> int:
    """Cops the recursion may need on any graph avoiding ``pattern``."""
    total = parked = 0
    for c in pattern.components:
        total = max(total, parked + claim_budget(c))
        parked += c.size
    return total


def _region(graph, start, blocked, within):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in graph.neighbors(v):
            if w not in seen and w not in blocked and w in within:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


class _ArenaRun:
    """Runs a controller on the induced subgraph ``arena`` once all its cops are inside."""

    def __init__(self, graph, arena, cops, factory, events):
        self.graph = graph
        self.arena = set(arena)
        self.sub, mapping = graph.induced_subgraph(sorted(arena))
        self.to_host = list(mapping)
        self.to_local = {h: i for i, h in enumerate(mapping)}
        self.cops = list(cops)
        self.factory = factory
        self.events = events
        self.controller = None

    def _entry(self, v):
        dist = self.graph.distance_matrix()
        return min(self.arena, key=lambda a: (int(dist[v, a]), a))

    def decide(self, positions, robber, round_):
        if robber not in self.arena:
            return {i: step_toward(self.graph, positions[i], robber) for i in self.cops}
        if self.controller is None:
            outside = [i for i in self.cops if positions[i] not in self.arena]
            if outside:
                return {i: step_toward(self.graph, positions[i], self._entry(positions[i])) for i in self.cops}
            local = {i: self.to_local[positions[i]] for i in self.cops}
            self.controller = self.factory(self.sub, local)
        local = {i: self.to_local[positions[i]] for i in self.cops}
        out = self.controller.decide(local, self.to_local[robber], round_)
        return {i: self.to_host[v] for i, v in out.items()}


class Theorem2Strategy(CopStrategy):
    def __init__(self, pattern):
        if isinstance(pattern, Graph):
            pattern = ForestPattern.from_graph(pattern)
        if not pattern.satisfies_leaf_condition():
            raise GraphError("every pattern component must be a tree with at most three leaves")
        if not pattern.components:
            raise GraphError("pattern must be non-empty")
        super().__init__("thm2")
        self.pattern = pattern
        self.budget = pattern_budget(pattern)
        self.comps = [(pattern.component_graph(i), c) for i, c in enumerate(pattern.components)]

    def _place(self, graph, k):
        if not graph.is_connected():
            raise HypothesisError("graph must be connected")
        if contains_forest_subgraph(graph, self.pattern) is not None:
            raise HypothesisError("graph contains the forbidden pattern")
        self.graph = graph
        self.posts = {}  # cop -> fixed vertex
        self.pending = None  # (blocked vertices, region, next step) while cops walk to posts
        self.runner = None
        start = self._plan(list(graph.vertices()), 0, list(range(k)))
        out = [start] * k
        for i, v in self.posts.items():
            out[i] = v
        return out

    def _plan(self, region, depth, free):
        """Set up the next level on ``region``; returns a vertex to start free cops on."""
        g = self.graph
        sub, mapping = g.induced_subgraph(region)
        if depth >= len(self.comps):
            raise HypothesisError("pattern exhausted: graph contains the forbidden pattern")
        tg, comp = self.comps[depth]
        emb = contains_forest_subgraph(sub, tg)
        if emb is not None:
            posts = [mapping[x] for x in emb]
            for i, v in zip(free, posts):
                self.posts[i] = v
            self.events.append({"level": depth, "park": posts})
            self.pending = (set(posts), set(region), ("recurse", depth + 1, free[len(posts):]))
            return posts[0]
        if comp.is_path:
            ell = max(comp.size, 3)
        else:
            r = comp.radius
            ell = max(2 * r, 3)
            if not is_p_free(sub, 2 * r):
                path = [mapping[x] for x in induced_path_on(sub, 2 * r)]
                posts = path[0::2]
                for i, v in zip(free, posts):
                    self.posts[i] = v
                self.events.append({"level": depth, "sentinels": posts, "path": path})
                self.pending = (set(path), set(region), ("sweep", depth, free[len(posts):]))
                return posts[0]
        self.events.append({"level": depth, "lead": ell, "region": len(region)})
        self.runner = _ArenaRun(g, region, free, lambda s, pos: LeadCopController(s, free, stages=self.events), self.events)
        return region[0]

    def _sweep_factory(self, free):
        def make(sub, pos):
            _, dec = exact_treewidth(sub)
            self.events.append({"sweep-width": dec.width, "cops": len(free)})
            ctl = TreeDecompositionController(sub, dec, free, self.events)
            return ctl

        return make

    def _move(self, graph, state, history):
        pos = state.cops
        robber = state.robber
        rnd = state.round + 1
        out = list(pos)
        if self.pending is not None and all(pos[i] == v for i, v in self.posts.items()):
            blocked, region, (kind, depth, free) = self.pending
            self.pending = None
            if robber not in blocked:
                inner = _region(graph, robber, blocked, region)
                if kind == "recurse":
                    self._plan(inner, depth, free)
                else:
                    self.events.append({"level": depth, "sweep-region": inner})
                    self.runner = _ArenaRun(graph, inner, free, self._sweep_factory(free), self.events)
        for i, v in self.posts.items():
            out[i] = step_toward(graph, pos[i], v)
        grab = capture_moves(graph, pos, robber, range(len(pos)))
        if self.runner is not None:
            if robber not in self.runner.arena and not grab:
                self.events.append({"round": rnd, "escape": robber})
            for i, v in self.runner.decide(pos, robber, rnd).items():
                out[i] = v
        for i, v in grab.items():
            out[i] = v
        return out


def theorem2_strategy(pattern) -> Theorem2Strategy:
    return Theorem2Strategy(pattern)
