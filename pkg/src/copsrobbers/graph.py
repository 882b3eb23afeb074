"""Immutable simple graphs, edge-list I/O, generators and structural metrics.

Vertices are always ``0..n-1`` and every neighbour list is sorted, so any
search that walks vertices "in order" is deterministic.  The exhaustive
metrics (circumference, induced paths and cycles, forest embeddings) are
exponential and refuse inputs above ``DESK_CAP`` vertices.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError, InstanceTooLargeError, ParseError

DESK_CAP = 30


class Unbounded(enum.Enum):
    """Value of girth/circumference for acyclic graphs."""

    INFINITY = "inf"

    def __str__(self):
        return "inf"

    def __repr__(self):
        return "INF"


INF = Unbounded.INFINITY


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_adj", "_edge_set", "_dist")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        adj = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._dist = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple:
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple:
        self._check(v)
        return self._adj[v]

    def closed_neighbors(self, v: int) -> tuple:
        """``N[v]`` in ascending order (``v`` itself included)."""
        self._check(v)
        return tuple(sorted(self._adj[v] + (v,)))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def _check(self, v):
        if not (0 <= v < self._n):
            raise GraphError(f"invalid vertex {v} for n={self._n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"

    # -- distances -------------------------------------------------------

    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances; ``-1`` marks unreachable pairs."""
        if self._dist is None:
            n = self._n
            dist = np.full((n, n), -1, dtype=np.int32)
            for s in range(n):
                row = dist[s]
                row[s] = 0
                queue = deque([s])
                while queue:
                    u = queue.popleft()
                    for w in self._adj[u]:
                        if row[w] < 0:
                            row[w] = row[u] + 1
                            queue.append(w)
            dist.setflags(write=False)
            self._dist = dist
        return self._dist

    def distance(self, u: int, v: int):
        """Hop count between ``u`` and ``v``, or ``None`` when unreachable."""
        self._check(u)
        self._check(v)
        d = int(self.distance_matrix()[u, v])
        return None if d < 0 else d

    def shortest_path(self, u: int, v: int) -> list:
        """Lexicographically least shortest ``u``-``v`` path (vertex list)."""
        d = self.distance(u, v)
        if d is None:
            raise GraphError(f"no path between {u} and {v}")
        dist = self.distance_matrix()
        path = [u]
        cur = u
        while cur != v:
            cur = next(w for w in self._adj[cur] if dist[w, v] == dist[cur, v] - 1)
            path.append(cur)
        return path

    def is_geodesic(self, path: Sequence[int]) -> bool:
        """True iff ``path`` is a walk along edges that is a shortest path."""
        if not path:
            return False
        for a, b in zip(path, path[1:]):
            if not self.has_edge(a, b):
                return False
        return self.distance(path[0], path[-1]) == len(path) - 1

    # -- structure -------------------------------------------------------

    def components(self) -> list:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        comp = [-1] * self._n
        out = []
        for s in range(self._n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            part = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if comp[w] < 0:
                        comp[w] = comp[s]
                        part.append(w)
                        queue.append(w)
            out.append(sorted(part))
        return out

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Iterable[int]):
        """Return ``(H, mapping)`` where ``mapping[i]`` is H-vertex i's id here."""
        mapping = sorted(set(vertices))
        index = {v: i for i, v in enumerate(mapping)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(mapping), edges), mapping

    def remove_vertices(self, vertices: Iterable[int]):
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def remove_edge(self, u: int, v: int) -> "Graph":
        key = (u, v) if u < v else (v, u)
        return Graph(self._n, [e for e in self._edges if e != key])

    def is_bipartite(self) -> bool:
        colour = [-1] * self._n
        for s in range(self._n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return False
        return True

    def is_forest(self) -> bool:
        return self.m == self._n - len(self.components())


# -- edge-list format ----------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` header, then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def render_graph(g: Graph, comment: str | None = None) -> str:
    """Canonical edge-list text (edges in lexicographic order)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f'  {v} [label="{v}"];' for v in g.vertices())
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- generators ----------------------------------------------------------


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs both sides >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def claw() -> Graph:
    return star(3)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def spider(*legs: int) -> Graph:
    """Tree with centre 0 and one pendant path per entry of ``legs``."""
    _need(len(legs) >= 1 and all(x >= 1 for x in legs), "spider legs must be >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def empty(n: int) -> Graph:
    return Graph(n, [])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi ``G(n, p)``; a pure function of ``(n, p, seed)``."""
    _need(n >= 1, "gnp needs n >= 1")
    _need(0.0 <= p <= 1.0, "gnp needs 0 <= p <= 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    draws = np.random.default_rng(seed).random(len(pairs))
    return Graph(n, [e for e, x in zip(pairs, draws) if x < p])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def _need(cond, msg):
    if not cond:
        raise GraphError(msg)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "claw": claw,
    "petersen": petersen,
    "spider": spider,
    "empty": empty,
    "gnp": gnp,
}


def generate(family: str, *args, **kwargs) -> Graph:
    """Build a named family, e.g. ``generate("cycle", 5)``.

    ``disjoint_union`` takes graphs as positional arguments.
    """
    if family == "disjoint_union":
        return disjoint_union(*args)
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown graph family {family!r}") from None
    try:
        return fn(*args, **kwargs)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None


# -- metrics -------------------------------------------------------------


@dataclass(frozen=True)
class GraphMetrics:
    girth: object
    circumference: object
    longest_induced_path: int
    component_count: int

    def as_dict(self):
        return {
            "girth": _jsonable(self.girth),
            "circumference": _jsonable(self.circumference),
            "longest_induced_path": self.longest_induced_path,
            "component_count": self.component_count,
        }


def _jsonable(x):
    return "inf" if x is INF else x


def _desk(g: Graph, what: str, cap: int):
    if g.n > cap:
        raise InstanceTooLargeError(what, g.n, cap)


def girth(g: Graph):
    """Length of a shortest cycle, or ``INF`` for forests."""
    best = None
    adj = g._adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return INF if best is None else best


def circumference(g: Graph, cap: int = DESK_CAP):
    """Length of a longest cycle, or ``INF`` for forests (exhaustive search)."""
    _desk(g, "circumference", cap)
    if g.is_forest():
        return INF
    adj = g._adj
    best = 0
    for s in range(g.n):
        limit = sum(1 for v in range(s, g.n) if g.distance(s, v) is not None)
        if limit <= best:
            continue
        on_path = [False] * g.n
        on_path[s] = True
        stack_path = [s]

        def extend(u):
            nonlocal best
            for w in adj[u]:
                if w == s and len(stack_path) >= 3 and len(stack_path) > best:
                    best = len(stack_path)
                    if best == limit:
                        return True
                if w > s and not on_path[w]:
                    if len(stack_path) + 1 + _reach(w) <= best:
                        continue
                    on_path[w] = True
                    stack_path.append(w)
                    if extend(w):
                        return True
                    stack_path.pop()
                    on_path[w] = False
            return False

        def _reach(w):
            # vertices > s still reachable from w avoiding the current path
            seen = {w}
            queue = [w]
            while queue:
                u = queue.pop()
                for x in adj[u]:
                    if x > s and not on_path[x] and x not in seen:
                        seen.add(x)
                        queue.append(x)
            return len(seen) - 1

        extend(s)
    return best


def _induced_paths(g: Graph, target: int | None):
    """Longest induced path vertex count; stops early once ``target`` is reached."""
    n = g.n
    if n == 0:
        return 0
    adj = g._adj
    cover = [0] * n  # closed-neighbourhood hits from non-terminal path vertices
    on_path = [False] * n
    best = 1

    def extend(last, length):
        nonlocal best
        if length > best:
            best = length
            if target is not None and best >= target:
                return True
        for v in adj[last]:
            cover[v] += 1
        cover[last] += 1
        found = False
        for w in adj[last]:
            # w's only path neighbour may be ``last``; cover[w] counts last once
            if not on_path[w] and cover[w] == 1:
                on_path[w] = True
                if extend(w, length + 1):
                    found = True
                on_path[w] = False
                if found:
                    break
        for v in adj[last]:
            cover[v] -= 1
        cover[last] -= 1
        return found

    for s in range(n):
        on_path[s] = True
        done = extend(s, 1)
        on_path[s] = False
        if done:
            break
    return best


def longest_induced_path(g: Graph, cap: int = DESK_CAP) -> int:
    """Vertex count of a longest induced path (0 for the empty graph)."""
    _desk(g, "longest_induced_path", cap)
    return _induced_paths(g, None)


def is_p_free(g: Graph, ell: int, cap: int = DESK_CAP) -> bool:
    """True iff ``g`` has no induced path on ``ell`` vertices."""
    if ell < 1:
        raise GraphError("ell must be >= 1")
    _desk(g, "is_p_free", cap)
    if g.n == 0:
        return True
    return _induced_paths(g, ell) < ell


def has_induced_cycle_at_least(g: Graph, ell: int, cap: int = DESK_CAP) -> bool:
    """True iff ``g`` has an induced (chordless) cycle of length >= ``ell``."""
    if ell < 3:
        raise GraphError("ell must be >= 3")
    _desk(g, "has_induced_cycle_at_least", cap)
    return _longest_induced_cycle(g, ell) >= ell


def longest_induced_cycle(g: Graph, cap: int = DESK_CAP) -> int:
    """Length of a longest chordless cycle, 0 for forests."""
    _desk(g, "longest_induced_cycle", cap)
    return _longest_induced_cycle(g, None)


def _longest_induced_cycle(g: Graph, target):
    n = g.n
    adj = g._adj
    best = 0
    interior = [0] * n  # closed-neighbourhood hits from v1..v_{j-1}
    on_path = [False] * n

    for s in range(n):
        on_path[s] = True

        def extend(last, length):
            # path s=v0 .. last=v_j has ``length`` vertices
            nonlocal best
            if length >= 2:
                for v in adj[last]:
                    interior[v] += 1
                interior[last] += 1
            found = False
            for w in adj[last]:
                if w <= s or on_path[w]:
                    continue
                hits = interior[w] - (1 if length >= 2 else 0)
                if hits:
                    continue
                if length >= 2 and g.has_edge(w, s):
                    if length + 1 > best:
                        best = length + 1
                        if target is not None and best >= target:
                            found = True
                            break
                    continue
                on_path[w] = True
                if extend(w, length + 1):
                    found = True
                on_path[w] = False
                if found:
                    break
            if length >= 2:
                for v in adj[last]:
                    interior[v] -= 1
                interior[last] -= 1
            return found

        done = extend(s, 1)
        on_path[s] = False
        if done:
            break
    return best


def metrics(g: Graph, cap: int = DESK_CAP) -> GraphMetrics:
    _desk(g, "metrics", cap)
    return GraphMetrics(
        girth=girth(g),
        circumference=circumference(g, cap),
        longest_induced_path=longest_induced_path(g, cap),
        component_count=len(g.components()),
    )


# -- forest patterns -----------------------------------------------------


@dataclass(frozen=True)
class PatternComponent:
    vertices: tuple
    leaves: int
    center: int | None  # the unique degree-3 vertex, if any
    radius: int | None  # eccentricity of ``center`` inside the component

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_path(self) -> bool:
        return self.center is None


@dataclass(frozen=True)
class ForestPattern:
    underlying: Graph
    components: tuple = field(default=())

    @classmethod
    def from_graph(cls, h: Graph) -> "ForestPattern":
        if not h.is_forest():
            raise GraphError("pattern must be acyclic")
        comps = []
        for part in h.components():
            leaves = sum(1 for v in part if h.degree(v) == 1)
            deg3 = [v for v in part if h.degree(v) >= 3]
            center = deg3[0] if len(deg3) == 1 and h.degree(deg3[0]) == 3 else None
            radius = None
            if center is not None:
                radius = max(h.distance(center, v) for v in part)
            comps.append(PatternComponent(tuple(part), leaves, center, radius))
        return cls(h, tuple(comps))

    def satisfies_leaf_condition(self) -> bool:
        """Every component is a tree with at most three leaves."""
        return all(c.leaves <= 3 for c in self.components)

    def without_component(self, index: int) -> "ForestPattern":
        keep = [v for i, c in enumerate(self.components) if i != index for v in c.vertices]
        sub, _ = self.underlying.induced_subgraph(keep)
        return ForestPattern.from_graph(sub)

    def component_graph(self, index: int) -> Graph:
        sub, _ = self.underlying.induced_subgraph(self.components[index].vertices)
        return sub


def contains_forest_subgraph(g: Graph, h, cap: int = DESK_CAP):
    """Lexicographically least injective map realising ``h`` as a subgraph of ``g``.

    ``h`` may be a ``ForestPattern`` or a ``Graph``.  Returns a tuple
    ``f`` with ``f[i]`` the image of pattern vertex ``i``, or ``None``.
    """
    _desk(g, "contains_forest_subgraph", cap)
    hg = h.underlying if isinstance(h, ForestPattern) else h
    if hg.n > g.n:
        return None
    if hg.n == 0:
        return ()
    hdeg = [hg.degree(a) for a in range(hg.n)]
    earlier = [[b for b in hg.neighbors(a) if b < a] for a in range(hg.n)]
    image = [-1] * hg.n
    used = [False] * g.n

    def assign(a):
        if a == hg.n:
            return True
        for v in range(g.n):
            if used[v] or g.degree(v) < hdeg[a]:
                continue
            if all(g.has_edge(v, image[b]) for b in earlier[a]):
                image[a] = v
                used[v] = True
                if assign(a + 1):
                    return True
                used[v] = False
        image[a] = -1
        return False

    return tuple(image) if assign(0) else None


def induced_path_on(g: Graph, count: int, cap: int = DESK_CAP):
    """Lexicographically least induced path with ``count`` vertices, or ``None``."""
    _desk(g, "induced_path_on", cap)
    adj = g._adj
    n = g.n
    if count <= 0:
        return []
    cover = [0] * n
    route = []

    def extend(last):
        if len(route) == count:
            return True
        for v in adj[last]:
            cover[v] += 1
        cover[last] += 1
        ok = False
        for w in adj[last]:
            if w not in route and cover[w] == 1:
                route.append(w)
                if extend(w):
                    ok = True
                    break
                route.pop()
        for v in adj[last]:
            cover[v] -= 1
        cover[last] -= 1
        return ok

    for s in range(n):
        route[:] = [s]
        if extend(s):
            return list(route)
    return None
