"""Graph operations that never decrease the cop number.

* ``clique_substitution`` builds ``G+``: every vertex ``v`` becomes a clique
  on the pairs ``(v, u)`` for ``u`` in ``N(v)``; ``(v, u)`` and ``(u, v)`` are
  matched across cliques.
* ``subdivide`` replaces each edge by a path with ``r`` internal vertices.
* ``hat_construction`` joins every non-adjacent pair by a fresh path of
  length ``2n``.

Every operation returns a ``TransformResult`` whose ``origin_map`` sends
each output vertex to the input vertex (an ``int``) or input vertex pair (a
``tuple``) that produced it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import TransformError
from .graph import INF, Graph, girth, parse_graph, render_graph


@dataclass(frozen=True)
class TransformResult:
    output: Graph
    origin_map: tuple
    kind: str = ""
    labels: tuple = ()  # clique substitution: the (v, u) pair of each vertex
    r: int | None = None  # subdivision parameter, when applicable

    def origin(self, w: int):
        return self.origin_map[w]

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "graph": render_graph(self.output),
            "origin_map": [list(o) if isinstance(o, tuple) else o for o in self.origin_map],
        }
        if self.r is not None:
            doc["r"] = self.r
        if self.labels:
            doc["labels"] = [list(x) for x in self.labels]
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TransformResult":
        doc = json.loads(text)
        origin = tuple(tuple(o) if isinstance(o, list) else o for o in doc["origin_map"])
        return cls(
            output=parse_graph(doc["graph"]),
            origin_map=origin,
            kind=doc.get("kind", ""),
            labels=tuple(tuple(x) for x in doc.get("labels", ())),
            r=doc.get("r"),
        )


def clique_substitution(g: Graph) -> TransformResult:
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    if isolated:
        raise TransformError(
            f"clique substitution undefined for isolated vertices {isolated}; "
            "strip them first (they do not affect the cop number)"
        )
    labels = [(v, u) for v in g.vertices() for u in g.neighbors(v)]
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for i, (v1, u1) in enumerate(labels):
        for u2 in g.neighbors(v1):
            j = index[(v1, u2)]
            if j > i:
                edges.append((i, j))
        j = index[(u1, v1)]
        if j > i:
            edges.append((i, j))
    return TransformResult(
        output=Graph(len(labels), edges),
        origin_map=tuple(v for v, _ in labels),
        kind="clique_substitution",
        labels=tuple(labels),
    )


def subdivide(g: Graph, r: int) -> TransformResult:
    """Replace every edge by a path with ``r`` internal vertices.

    Original vertices keep their ids; the ``j``-th internal vertex of the
    ``i``-th edge ``(u, v)`` (edges in lexicographic order, counted from
    ``u``) gets id ``n + i*r + j``.
    """
    if r < 0:
        raise TransformError(f"subdivision count must be >= 0, got {r}")
    n = g.n
    origin = list(range(n))
    edges = []
    for i, (u, v) in enumerate(g.edges):
        chain = [u] + [n + i * r + j for j in range(r)] + [v]
        edges.extend(zip(chain, chain[1:]))
        origin.extend([(u, v)] * r)
    return TransformResult(
        output=Graph(n + r * g.m, edges),
        origin_map=tuple(origin),
        kind="subdivide",
        r=r,
    )


def subdivision_walk(g: Graph, r: int, u: int, v: int) -> list:
    """Vertices of ``subdivide(g, r)`` from branch vertex ``u`` to ``v``.

    ``u == v`` gives ``[u]``; otherwise ``u`` and ``v`` must be adjacent in
    ``g`` and the walk has ``r + 2`` vertices.
    """
    if u == v:
        return [u]
    a, b = (u, v) if u < v else (v, u)
    i = g.edges.index((a, b))
    chain = [a] + [g.n + i * r + j for j in range(r)] + [b]
    return chain if u == a else chain[::-1]


def hat_construction(g: Graph) -> TransformResult:
    """Join every non-adjacent pair by a new path of length ``2n``."""
    n = g.n
    inner = 2 * n - 1
    origin = list(range(n))
    edges = list(g.edges)
    nxt = n
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            chain = [u] + list(range(nxt, nxt + inner)) + [v]
            edges.extend(zip(chain, chain[1:]))
            origin.extend([(u, v)] * inner)
            nxt += inner
    return TransformResult(output=Graph(nxt, edges), origin_map=tuple(origin), kind="hat")


def girth_lift(g: Graph, target_girth: int) -> TransformResult:
    """Least uniform subdivision whose girth reaches ``target_girth``."""
    if target_girth < 3:
        raise TransformError("target girth must be >= 3")
    base = girth(g)
    if base is INF:
        raise TransformError("graph is acyclic; its girth is already infinite")
    r = max(0, -(-target_girth // base) - 1)
    result = subdivide(g, r)
    measured = girth(result.output)
    if measured is INF or measured < target_girth:
        raise AssertionError(f"girth lift produced girth {measured} < {target_girth}")
    return result
