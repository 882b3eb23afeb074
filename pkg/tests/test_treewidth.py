import itertools

import pytest

from copsrobbers.errors import GraphError, InstanceTooLargeError
from copsrobbers.graph import Graph, complete, complete_bipartite, cycle, disjoint_union, gnp, path, petersen
from copsrobbers.treewidth import (
    TreeDecomposition,
    decomposition_from_elimination_order,
    exact_treewidth,
    treewidth,
    validate_decomposition,
)
from oracles import brute_treewidth, connected_graphs


def test_exact_treewidth_matches_permutation_brute_force():
    for g in connected_graphs(6)[::2] + [gnp(7, 0.5, s) for s in range(3)]:
        width, dec = exact_treewidth(g)
        assert width == brute_treewidth(g)
        assert validate_decomposition(g, dec)
        assert dec.width == width


@pytest.mark.parametrize(
    "g, width",
    [(petersen(), 4), (disjoint_union(petersen(), complete(6)), 5), (complete(6), 5), (cycle(6), 2), (complete_bipartite(3, 3), 3)],
)
def test_named_treewidths(g, width):
    assert treewidth(g) == width


def test_elimination_orders():
    assert decomposition_from_elimination_order(path(3), (0, 2, 1)).width == 1
    assert decomposition_from_elimination_order(cycle(4), (0, 1, 2, 3)).width == 2
    with pytest.raises(GraphError):
        decomposition_from_elimination_order(path(3), (0, 1))


def test_every_order_gives_a_valid_decomposition():
    g = cycle(5)
    for order in itertools.permutations(range(5)):
        assert validate_decomposition(g, decomposition_from_elimination_order(g, order))


def _dec(tree_edges, bags):
    return TreeDecomposition(Graph(len(bags), tree_edges), tuple(tuple(sorted(b)) for b in bags))


@pytest.mark.parametrize(
    "dec, axiom",
    [
        (_dec([(0, 1), (1, 2), (0, 2)], [(0, 1), (1, 2), (2, 3)]), "tree"),
        (_dec([(0, 1)], [(0, 1), (1, 9)]), "vertex"),
        (_dec([(0, 1)], [(0, 1), (1, 2)]), "vertex_coverage"),
        (_dec([(0, 1), (1, 2)], [(0, 1), (1, 2), (2, 3)]), "edge_coverage"),
        (_dec([(0, 1), (1, 2)], [(0, 1, 3), (1, 2), (2, 3)]), "subtree"),
    ],
)
def test_validation_names_the_first_broken_axiom(dec, axiom):
    g = cycle(4)
    res = validate_decomposition(g, dec)
    assert not res and res.axiom == axiom


def test_decomposition_json_round_trip():
    _, dec = exact_treewidth(petersen())
    back = TreeDecomposition.from_json(dec.to_json())
    assert back == dec and validate_decomposition(petersen(), back)


def test_treewidth_is_deterministic():
    assert exact_treewidth(petersen())[1] == exact_treewidth(petersen())[1]


def test_cap():
    with pytest.raises(InstanceTooLargeError):
        exact_treewidth(cycle(30))
