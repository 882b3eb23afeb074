"""Brute-force reference implementations, independent of the package internals.

Only the ``Graph`` container is shared; every algorithm here is the naive
textbook one, used to freeze expected values and cross-check the fast code.
"""

import itertools

import networkx as nx

from copsrobbers.graph import Graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def connected_graphs(max_n):
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    return [
        Graph(h.number_of_nodes(), h.edges())
        for h in nx.graph_atlas_g()
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


def naive_game(g, k):
    """Layered fixpoint over explicit states; returns (cop_rank, robber_rank) dicts.

    States are (sorted cop tuple, robber).  Missing keys mean robber win.
    """
    n = g.n
    closed = [sorted(set(g.neighbors(v)) | {v}) for v in range(n)]
    cop_sets = list(itertools.combinations_with_replacement(range(n), k))
    cop_moves = {c: {tuple(sorted(m)) for m in itertools.product(*[closed[x] for x in c])} for c in cop_sets}
    rank_c, rank_r = {}, {}
    for c in cop_sets:
        for r in range(n):
            if r in c:
                rank_c[(c, r)] = 0
                rank_r[(c, r)] = 0
    h = 0
    while True:
        new_c = [
            (c, r)
            for c in cop_sets
            for r in range(n)
            if (c, r) not in rank_c and any((m, r) in rank_r for m in cop_moves[c])
        ]
        for s in new_c:
            rank_c[s] = h + 1
        new_r = [
            (c, r)
            for c in cop_sets
            for r in range(n)
            if (c, r) not in rank_r and all((c, w) in rank_c for w in closed[r])
        ]
        for s in new_r:
            rank_r[s] = h + 2
        h += 2
        if not new_c and not new_r:
            return rank_c, rank_r


def naive_cop_win(g, k):
    rank_c, _ = naive_game(g, k)
    return any(all((c, r) in rank_c for r in range(g.n)) for c in itertools.combinations_with_replacement(range(g.n), k))


def naive_cop_number(g):
    best = 0
    for part in nx.connected_components(to_nx(g)):
        sub = nx.convert_node_labels_to_integers(to_nx(g).subgraph(sorted(part)), ordering="sorted")
        h = Graph(sub.number_of_nodes(), sub.edges())
        k = 1
        while not naive_cop_win(h, k):
            k += 1
        best = max(best, k)
    return best


def naive_dismantlable(g):
    """Repeatedly delete any dominated vertex (networkx neighbourhoods)."""
    h = to_nx(g)
    for part in list(nx.connected_components(h)):
        sub = h.subgraph(part).copy()
        while sub.number_of_nodes() > 1:
            for v in list(sub.nodes):
                nv = set(sub[v]) | {v}
                if any(u != v and nv <= set(sub[u]) | {u} for u in sub[v]):
                    sub.remove_node(v)
                    break
            else:
                return False
    return True


def elimination_width(g, order):
    fill = {v: set(g.neighbors(v)) for v in range(g.n)}
    width = -1
    done = set()
    for v in order:
        later = fill[v] - done
        width = max(width, len(later))
        for a in later:
            fill[a] |= later - {a}
        done.add(v)
    return width


def brute_treewidth(g):
    if g.n == 0:
        return -1
    return min(elimination_width(g, p) for p in itertools.permutations(range(g.n)))


def brute_subgraph_embedding(g, h):
    """Lexicographically least injective image tuple of ``h`` in ``g``, or None."""
    for image in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(image[a], image[b]) for a, b in h.edges):
            return image
    return None


def brute_longest_induced_path(g):
    nxg = to_nx(g)
    best = 0
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            s = nxg.subgraph(sub)
            if nx.is_connected(s) and s.number_of_edges() == size - 1 and max(dict(s.degree()).values(), default=0) <= 2:
                best = size
    return best


def brute_cycle_lengths(g):
    lengths = [len(c) for c in nx.simple_cycles(to_nx(g))]
    return [x for x in lengths if x >= 3]


def brute_induced_cycle_lengths(g):
    nxg = to_nx(g)
    out = []
    for size in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            s = nxg.subgraph(sub)
            if nx.is_connected(s) and all(d == 2 for _, d in s.degree()):
                out.append(size)
    return out
