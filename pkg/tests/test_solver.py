import itertools
import math

import pytest

from copsrobbers.engine import GreedyCop, StationaryRobber, play
from copsrobbers.errors import GraphError, NoWinningStrategyError, ResourceLimitError
from copsrobbers.graph import (
    Graph,
    claw,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    path,
    petersen,
    spider,
    star,
)
from copsrobbers.solver import (
    ROBBER_WIN,
    OptimalCop,
    OptimalRobber,
    cop_number,
    cop_win,
    default_horizon,
    is_cop_win_dismantlable,
    multiset_state_count,
    solve,
)
from copsrobbers.transforms import clique_substitution, hat_construction, subdivide
from oracles import connected_graphs, naive_cop_win, naive_dismantlable, naive_game

# cop numbers frozen from the naive explicit-state fixpoint in oracles.py
FROZEN = [
    ("C3", cycle(3), 1),
    ("C4", cycle(4), 2),
    ("C5", cycle(5), 2),
    ("C8", cycle(8), 2),
    ("K33", complete_bipartite(3, 3), 2),
    ("K23", complete_bipartite(2, 3), 2),
    ("claw", claw(), 1),
    ("spider222", spider(2, 2, 2), 1),
    ("K15", star(5), 1),
    ("C4+", clique_substitution(cycle(4)).output, 2),
    ("C12", subdivide(cycle(4), 2).output, 2),
    ("hatC4", hat_construction(cycle(4)).output, 2),
    ("subK4_4", subdivide(complete(4), 4).output, 2),
]


@pytest.mark.parametrize("name, g, c", FROZEN, ids=[x[0] for x in FROZEN])
def test_frozen_cop_numbers(name, g, c):
    assert cop_number(g) == c


def test_petersen():
    assert not cop_win(petersen(), 2)
    assert cop_win(petersen(), 3)
    assert cop_number(petersen()) == 3
    assert cop_number(disjoint_union(petersen(), complete(6))) == 3


def test_ranks_match_naive_fixpoint():
    for g in connected_graphs(5)[::2] + [cycle(6)]:
        for k in (1, 2):
            t = solve(g, k)
            rank_c, rank_r = naive_game(g, k)
            for cops in itertools.product(range(g.n), repeat=k):
                key = tuple(sorted(cops))
                for r in range(g.n):
                    assert t.cop_rank(cops, r) == rank_c.get((key, r), ROBBER_WIN)
                    assert t.robber_rank(cops, r) == rank_r.get((key, r), ROBBER_WIN)


def test_cop_win_matches_naive_on_small_graphs():
    for g in connected_graphs(6)[::4]:
        for k in (1, 2):
            assert cop_win(g, k) == naive_cop_win(g, k)


def test_dismantlable_matches_naive():
    for g in connected_graphs(6)[::3]:
        assert is_cop_win_dismantlable(g) == naive_dismantlable(g)


def test_cop_win_requires_connected():
    with pytest.raises(GraphError):
        cop_win(Graph(2), 1)
    assert cop_number(Graph(3)) == 1


def test_state_count_and_horizon():
    assert multiset_state_count(4, 2) == 10 * 4 * 2
    assert default_horizon(4, 2) == 81


def test_caps():
    with pytest.raises(ResourceLimitError):
        solve(cycle(10), 3, state_cap=100)
    with pytest.raises(ResourceLimitError):
        solve(cycle(10), 3, dense_cap=1000)


def test_extracted_cop_strategy_c4_two_cops():
    t = solve(cycle(4), 2)
    assert t.cop_win
    bound = 2 * t.n_states
    robbers = [OptimalRobber(t)] + [StationaryRobber(v) for v in range(4)]
    for robber in robbers:
        tr = play(cycle(4), 2, OptimalCop(t), robber)
        assert tr.captured and 2 * tr.capture_round <= bound


def test_extracted_robber_survives_c4_one_cop():
    t = solve(cycle(4), 1)
    assert not t.cop_win
    with pytest.raises(NoWinningStrategyError):
        OptimalCop(t).place(cycle(4), 1)
    tr = play(cycle(4), 1, GreedyCop(), OptimalRobber(t))
    assert tr.outcome["result"] == "survived" and tr.outcome["round"] == default_horizon(4, 1)


def test_cop_move_decreases_rank():
    t = solve(petersen(), 3)
    cops, value = t.best_placement()
    assert math.isfinite(value)
    robber = OptimalRobber(t)
    r = robber.place(petersen(), cops)
    while r not in cops:
        before = t.cop_rank(cops, r)
        cops, after = t.best_cop_move(cops, r)
        assert after == before - 1
        if r in cops:
            break
        r = t.best_robber_move(cops, r)[0]


def test_best_placement_is_lexicographically_least():
    t = solve(path(3), 1)
    assert t.best_placement() == ((1,), 1.0)
