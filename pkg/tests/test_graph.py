import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copsrobbers.errors import GraphError, InstanceTooLargeError, ParseError
from copsrobbers.graph import (
    INF,
    ForestPattern,
    Graph,
    circumference,
    claw,
    complete,
    complete_bipartite,
    contains_forest_subgraph,
    cycle,
    disjoint_union,
    generate,
    girth,
    gnp,
    has_induced_cycle_at_least,
    induced_path_on,
    is_p_free,
    longest_induced_cycle,
    longest_induced_path,
    metrics,
    parse_graph,
    path,
    petersen,
    render_graph,
    spider,
    star,
    to_dot,
)
from oracles import (
    brute_cycle_lengths,
    brute_induced_cycle_lengths,
    brute_longest_induced_path,
    brute_subgraph_embedding,
    connected_graphs,
    to_nx,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_parse_with_comments_and_header():
    g = parse_graph("# a triangle\n3 3\n0 1\n1 2\n\n0 2\n")
    assert g.n == 3 and g.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n", None),  # edge count mismatch
        ("3 1\n0 0\n", 2),  # loop
        ("3 2\n0 1\n1 0\n", 3),  # duplicate
        ("3 1\n0 5\n", 2),  # out of range
        ("3 1\n0 x\n", 2),
        ("", None),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    if line is not None:
        assert exc.value.line == line


@given(graphs())
def test_render_parse_round_trip(g):
    assert parse_graph(render_graph(g, "c")) == g


def test_dot_output():
    dot = to_dot(path(3))
    assert "0 -- 1;" in dot and dot.startswith("graph")


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_generators():
    p = petersen()
    assert (p.n, p.m) == (10, 15) and all(p.degree(v) == 3 for v in p.vertices())
    assert complete(5).m == 10 and complete_bipartite(3, 3).m == 9
    assert star(5).n == 6 and claw() == star(3)
    s = spider(2, 2, 2)
    assert s.n == 7 and s.degree(0) == 3
    u = disjoint_union(petersen(), complete(6))
    assert u.n == 16 and len(u.components()) == 2
    assert generate("cycle", 5) == cycle(5)
    with pytest.raises(GraphError):
        generate("nope")


def test_gnp_is_seeded():
    assert gnp(9, 0.4, 7) == gnp(9, 0.4, 7)
    assert gnp(9, 0.4, 7) != gnp(9, 0.4, 8)
    assert gnp(6, 0.0, 1).m == 0 and gnp(6, 1.0, 1).m == 15


def test_connected_graph_counts():
    # number of connected graphs on n unlabelled vertices, n = 1..6
    counts = [len(connected_graphs(n)) - len(connected_graphs(n - 1)) for n in range(1, 7)]
    assert counts == [1, 1, 2, 6, 21, 112]


def test_shortest_path_is_lexicographically_least():
    assert cycle(4).shortest_path(0, 2) == [0, 1, 2]
    assert cycle(6).shortest_path(1, 4) == [1, 0, 5, 4]
    assert cycle(4).is_geodesic([0, 1, 2]) and not cycle(5).is_geodesic([0, 1, 2, 3])


def test_petersen_metrics():
    m = metrics(petersen())
    assert (m.girth, m.circumference, m.longest_induced_path, m.component_count) == (5, 9, 5, 1)
    assert longest_induced_cycle(petersen()) == 6


def test_forest_metrics_are_infinite():
    m = metrics(path(4))
    assert m.girth is INF and m.circumference is INF
    assert m.as_dict()["girth"] == "inf"


def test_metrics_against_brute_force():
    for g in connected_graphs(6)[::3] + [gnp(8, 0.4, s) for s in range(4)]:
        cycles = brute_cycle_lengths(g)
        assert girth(g) == (min(cycles) if cycles else INF)
        assert circumference(g) == (max(cycles) if cycles else INF)
        assert longest_induced_path(g) == brute_longest_induced_path(g)
        ind = brute_induced_cycle_lengths(g)
        for ell in range(3, 8):
            assert has_induced_cycle_at_least(g, ell) == any(x >= ell for x in ind)
            assert is_p_free(g, ell) == (brute_longest_induced_path(g) < ell)


def test_desk_cap():
    with pytest.raises(InstanceTooLargeError):
        circumference(cycle(40))


def test_forest_pattern():
    pat = ForestPattern.from_graph(disjoint_union(path(2), claw()))
    assert pat.satisfies_leaf_condition()
    assert [c.size for c in pat.components] == [2, 4]
    assert pat.components[1].center is not None and pat.components[1].radius == 1
    assert pat.components[0].is_path
    spider_pat = ForestPattern.from_graph(spider(2, 1, 3))
    assert spider_pat.components[0].radius == 3
    assert not ForestPattern.from_graph(star(4)).satisfies_leaf_condition()
    with pytest.raises(GraphError):
        ForestPattern.from_graph(cycle(3))


def test_subgraph_search_matches_brute_force():
    patterns = [claw(), spider(2, 2, 2), disjoint_union(path(2), claw()), path(4)]
    for g in connected_graphs(6)[::2] + [petersen()]:
        for h in patterns:
            assert contains_forest_subgraph(g, h) == brute_subgraph_embedding(g, h)


def test_induced_path_on():
    p = induced_path_on(cycle(6), 5)
    assert p == [0, 1, 2, 3, 4]
    assert induced_path_on(complete(5), 3) is None
    sub = to_nx(petersen()).subgraph(induced_path_on(petersen(), 5))
    assert nx.is_connected(sub) and sub.number_of_edges() == 4


@settings(max_examples=40, deadline=None)
@given(graphs(7))
def test_components_partition(g):
    parts = g.components()
    assert sorted(v for p in parts for v in p) == list(g.vertices())
    assert len(parts) == nx.number_connected_components(to_nx(g))
