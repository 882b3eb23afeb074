"""Tree decompositions: validation, elimination orders and exact treewidth."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphError, InstanceTooLargeError
from .graph import Graph

TREEWIDTH_CAP = 20


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    bags: tuple  # bags[x] is a sorted tuple of graph vertices

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def nodes_containing(self, v: int) -> list:
        return [x for x, bag in enumerate(self.bags) if v in bag]

    def to_json(self) -> str:
        return json.dumps(
            {"tree_edges": [list(e) for e in self.tree.edges], "bags": [list(b) for b in self.bags]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "TreeDecomposition":
        doc = json.loads(text)
        bags = tuple(tuple(sorted(b)) for b in doc["bags"])
        return cls(Graph(len(bags), doc["tree_edges"]), bags)


@dataclass(frozen=True)
class Validation:
    ok: bool
    axiom: str | None = None
    witness: object = None

    def __bool__(self):
        return self.ok


def validate_decomposition(g: Graph, d: TreeDecomposition) -> Validation:
    """Check the tree shape and the three decomposition axioms, in order."""
    t = d.tree
    if t.n != len(d.bags) or t.n == 0 or not t.is_connected() or t.m != t.n - 1:
        return Validation(False, "tree", "decomposition tree is not a tree")
    for x, bag in enumerate(d.bags):
        bad = [v for v in bag if not (0 <= v < g.n)]
        if bad:
            return Validation(False, "vertex", (x, bad[0]))
    covered = set().union(*map(set, d.bags))
    for v in g.vertices():
        if v not in covered:
            return Validation(False, "vertex_coverage", v)
    bag_sets = [set(b) for b in d.bags]
    for u, v in g.edges:
        if not any(u in b and v in b for b in bag_sets):
            return Validation(False, "edge_coverage", (u, v))
    for v in g.vertices():
        nodes = [x for x, b in enumerate(bag_sets) if v in b]
        sub, _ = t.induced_subgraph(nodes)
        if not sub.is_connected():
            return Validation(False, "subtree", v)
    return Validation(True)


def decomposition_from_elimination_order(g: Graph, order) -> TreeDecomposition:
    """Bag of ``order[i]`` is itself plus its later neighbours in the fill graph.

    Tree node ``i`` holds the bag of ``order[i]`` and hangs off the node of
    its earliest-eliminated later neighbour.  Roots of different components
    are joined to the last node.
    """
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise GraphError("elimination order must be a permutation of the vertices")
    if g.n == 0:
        return TreeDecomposition(Graph(1), ((),))
    pos = {v: i for i, v in enumerate(order)}
    fill = [set(g.neighbors(v)) for v in g.vertices()]
    bags = []
    tree_edges = []
    roots = []
    for i, v in enumerate(order):
        later = sorted((w for w in fill[v] if pos[w] > i), key=pos.__getitem__)
        bags.append(tuple(sorted([v] + later)))
        for a in later:
            fill[a].update(w for w in later if w != a)
        if later:
            tree_edges.append((i, pos[later[0]]))
        else:
            roots.append(i)
    last = len(order) - 1
    tree_edges.extend((x, last) for x in roots if x != last)
    return TreeDecomposition(Graph(len(order), tree_edges), tuple(bags))


def _degeneracy(g: Graph) -> int:
    alive = set(g.vertices())
    deg = {v: g.degree(v) for v in alive}
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return best


def _order_within(g: Graph, k: int):
    """Lexicographically least elimination order of width <= k, or None."""
    n = g.n
    full = (1 << n) - 1
    adjmask = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    failed = set()
    order = []

    def q_size(eliminated, v):
        seen = 1 << v
        frontier = [v]
        boundary = 0
        while frontier:
            x = frontier.pop()
            nb = adjmask[x]
            boundary |= nb & ~eliminated
            inner = nb & eliminated & ~seen
            seen |= inner
            while inner:
                low = inner & -inner
                frontier.append(low.bit_length() - 1)
                inner ^= low
        boundary &= ~(1 << v)
        return bin(boundary).count("1")

    def search(eliminated):
        if eliminated == full:
            return True
        if eliminated in failed:
            return False
        for v in range(n):
            bit = 1 << v
            if eliminated & bit:
                continue
            if q_size(eliminated, v) <= k:
                order.append(v)
                if search(eliminated | bit):
                    return True
                order.pop()
        failed.add(eliminated)
        return False

    return order if search(0) else None


def exact_treewidth(g: Graph, cap: int = TREEWIDTH_CAP):
    """Return ``(width, decomposition)`` with ``width`` equal to tw(g).

    Components are solved independently; the combined elimination order
    lists components by least vertex.
    """
    if g.n > cap:
        raise InstanceTooLargeError("exact_treewidth", g.n, cap)
    width = 0 if g.n else -1
    full_order = []
    for part in g.components():
        sub, mapping = g.induced_subgraph(part)
        k = _degeneracy(sub)
        while True:
            local = _order_within(sub, k)
            if local is not None:
                break
            k += 1
        width = max(width, k)
        full_order.extend(mapping[v] for v in local)
    dec = decomposition_from_elimination_order(g, full_order)
    if dec.width != width:
        raise AssertionError(f"decomposition width {dec.width} != treewidth {width}")
    return width, dec


def treewidth(g: Graph, cap: int = TREEWIDTH_CAP) -> int:
    return exact_treewidth(g, cap)[0]
