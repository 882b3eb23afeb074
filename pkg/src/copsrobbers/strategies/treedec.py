"""Bag-sweeping strategy driven by a tree decomposition.

The cops guard every vertex of the current bag ``B``: pairs of bag vertices
are joined by guarded shortest paths and a leftover vertex gets a sitting
cop.  Once all guards are in position the robber is stuck in one component
``C`` of ``G - B``, which lives in one branch of the decomposition tree.
The cops then move to the neighbouring bag ``B'`` on the way to that
branch, keeping ``B & B'`` guarded throughout:

* a cop whose two guarded vertices both lie in ``B & B'`` keeps its path;
* a cop with exactly one of them in ``B & B'`` walks to it and from there
  guards a path to a new vertex of ``B' - B`` (or sits if none is left);
* every other cop is free and guards a fresh pair of new vertices.

The territory strictly shrinks with each advance, so the robber is caught.
"""

from __future__ import annotations

from ..errors import GraphError, HypothesisError
from ..treewidth import TreeDecomposition, exact_treewidth, validate_decomposition
from .base import CopStrategy, capture_moves, step_toward
from .guard import PathGuard


class _Sit:
    def __init__(self, graph, v):
        self.graph = graph
        self.vertex = v
        self.covers = (v,)

    def decide(self, pos, robber):
        nxt = step_toward(self.graph, pos, self.vertex)
        return nxt, nxt == self.vertex


class _Guard:
    def __init__(self, graph, a, b, cop):
        self.guard = PathGuard(graph, graph.shortest_path(a, b), cop)
        self.covers = (a, b)

    def decide(self, pos, robber):
        nxt = self.guard.decide(pos, robber)
        return nxt, self.guard.in_position(nxt, robber)


class _Retreat:
    """Walk to ``vertex`` (keeping it protected), then hand over to ``then``."""

    def __init__(self, graph, vertex, then):
        self.graph = graph
        self.vertex = vertex
        self.then = then
        self.covers = (vertex,)

    def decide(self, pos, robber):
        return step_toward(self.graph, pos, self.vertex), False


class _Idle:
    covers = ()

    def decide(self, pos, robber):
        return pos, True


class TreeDecompositionController:
    """Sweeps ``dec`` with the cops ``cops``, starting at tree node ``root``."""

    def __init__(self, graph, dec: TreeDecomposition, cops, events=None, root=0):
        check = validate_decomposition(graph, dec)
        if not check:
            raise GraphError(f"invalid tree decomposition ({check.axiom}: {check.witness})")
        self.graph = graph
        self.dec = dec
        self.cops = list(cops)
        self.events = events if events is not None else []
        need = budget_for(dec)
        if len(self.cops) < need:
            raise HypothesisError(f"decomposition of width {dec.width} needs {need} cops, got {len(self.cops)}")
        self.node = root
        self.established = False
        self.roles = {i: _Idle() for i in self.cops}
        self._assign_fresh(list(dec.bags[root]), list(self.cops))

    def _assign_fresh(self, fresh, free):
        while fresh:
            if not free:
                raise HypothesisError("ran out of cops while reassigning guards")
            i = free.pop(0)
            if len(fresh) >= 2:
                a, b = fresh.pop(0), fresh.pop(0)
                self.roles[i] = _Guard(self.graph, a, b, i)
            else:
                self.roles[i] = _Sit(self.graph, fresh.pop(0))
        for i in free:
            self.roles[i] = _Idle()

    def start_positions(self):
        out = {}
        first = self.dec.bags[self.node][0] if self.dec.bags[self.node] else 0
        for i, role in self.roles.items():
            if isinstance(role, _Guard):
                out[i] = role.guard.anchor
            elif isinstance(role, _Sit):
                out[i] = role.vertex
            else:
                out[i] = first
        return out

    def territory(self, robber):
        bag = set(self.dec.bags[self.node])
        if robber in bag:
            return []
        seen = {robber}
        stack = [robber]
        while stack:
            v = stack.pop()
            for w in self.graph.neighbors(v):
                if w not in seen and w not in bag:
                    seen.add(w)
                    stack.append(w)
        return sorted(seen)

    def _next_node(self, region):
        tree = self.dec.tree
        region = set(region)
        for nb in tree.neighbors(self.node):
            seen = {self.node, nb}
            stack = [nb]
            while stack:
                x = stack.pop()
                if region & set(self.dec.bags[x]):
                    return nb
                for y in tree.neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return None

    def _advance(self, robber, round_):
        region = self.territory(robber)
        if not region:
            return
        nxt = self._next_node(region)
        if nxt is None:
            return
        old = set(self.dec.bags[self.node])
        new_bag = self.dec.bags[nxt]
        keep = old & set(new_bag)
        fresh = [v for v in new_bag if v not in old]
        free = []
        for i in self.cops:
            inside = [v for v in self.roles[i].covers if v in keep]
            if len(inside) == 2:
                continue
            if len(inside) == 1:
                b = inside[0]
                if fresh:
                    then = _Guard(self.graph, b, fresh.pop(0), i)
                else:
                    then = _Sit(self.graph, b)
                self.roles[i] = _Retreat(self.graph, b, then)
            else:
                free.append(i)
        self._assign_fresh(fresh, free)
        self.events.append({"round": round_, "advance": [self.node, nxt], "territory": region})
        self.node = nxt
        self.established = False

    def decide(self, positions, robber, round_=0):
        grab = capture_moves(self.graph, positions, robber, self.cops)
        if self.established and not grab:
            self._advance(robber, round_)
        out = {}
        ready = True
        for i in self.cops:
            role = self.roles[i]
            if isinstance(role, _Retreat) and positions[i] == role.vertex:
                role = self.roles[i] = role.then
            out[i], ok = role.decide(positions[i], robber)
            ready = ready and ok
        if ready and not self.established:
            self.events.append({"round": round_, "established": self.node, "bag": list(self.dec.bags[self.node])})
        self.established = ready
        out.update(grab)
        return out


def budget_for(dec: TreeDecomposition) -> int:
    """Cops needed to guard the largest bag: ``ceil(|B| / 2)``."""
    return (dec.width + 2) // 2


class TreeDecompositionStrategy(CopStrategy):
    """Full strategy; with ``dec=None`` an exact decomposition is computed at placement."""

    def __init__(self, dec: TreeDecomposition | None = None):
        super().__init__("treedec")
        self.dec = dec
        self.budget = budget_for(dec) if dec is not None else 1
        self.controller = None

    def place(self, graph, k):
        if self.dec is None:
            _, self.dec = exact_treewidth(graph)
            self.budget = budget_for(self.dec)
        return super().place(graph, k)

    def _place(self, graph, k):
        if not graph.is_connected():
            raise HypothesisError("graph must be connected")
        self.controller = TreeDecompositionController(graph, self.dec, range(k), self.events)
        start = self.controller.start_positions()
        return [start[i] for i in range(k)]

    def _move(self, graph, state, history):
        out = self.controller.decide(state.cops, state.robber, state.round + 1)
        return [out[i] for i in range(len(state.cops))]


def tree_decomposition_strategy(dec: TreeDecomposition | None = None) -> TreeDecompositionStrategy:
    return TreeDecompositionStrategy(dec)
