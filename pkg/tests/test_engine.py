import pytest

from copsrobbers.engine import (
    COPS,
    ROBBER,
    GameState,
    GreedyCop,
    ScriptedRobber,
    StationaryRobber,
    Trace,
    legal_cop_moves,
    legal_robber_moves,
    play,
    replay_check,
)
from copsrobbers.errors import GraphError
from copsrobbers.graph import Graph, cycle, path, petersen
from copsrobbers.solver import OptimalCop, OptimalRobber, solve


class Fixed:
    side = "cop"
    name = "fixed"

    def __init__(self, placement, moves=()):
        self.placement = placement
        self.moves = list(moves)

    def place(self, graph, k):
        return self.placement

    def move(self, graph, state, history):
        return self.moves.pop(0) if self.moves else state.cops


def test_legal_moves():
    s = GameState((0, 2), 1, COPS, 1)
    assert legal_cop_moves(cycle(4), s) == [[0, 1, 3], [1, 2, 3]]
    assert legal_robber_moves(cycle(4), GameState((0,), 2, ROBBER, 1)) == [1, 2, 3]
    with pytest.raises(GraphError):
        legal_robber_moves(cycle(4), s)


def test_capture_at_placement_is_round_zero():
    tr = play(path(3), 1, Fixed((1,)), StationaryRobber(1))
    assert tr.captured and tr.capture_round == 0 and tr.rounds == []


def test_cop_capture_half_and_robber_suicide():
    tr = play(path(3), 1, GreedyCop(), StationaryRobber(2))
    assert tr.outcome == {"result": "capture", "round": 2, "half": "cops"}
    tr = play(path(4), 1, Fixed((0,)), ScriptedRobber([2, 1, 0]))
    assert tr.outcome == {"result": "capture", "round": 2, "half": "robber"}


@pytest.mark.parametrize(
    "cop, robber, violator",
    [
        (Fixed((0, 9)), StationaryRobber(1), "cop"),
        (Fixed((0,)), StationaryRobber(1), "cop"),  # wrong number of cops
        (Fixed((0, 1), [(2, 1)]), StationaryRobber(3), "cop"),  # 0 -> 2 is not an edge of P4
        (Fixed((0, 0)), ScriptedRobber([3, 1]), "robber"),
        (Fixed((0, 0)), StationaryRobber(7), "robber"),
    ],
)
def test_forfeits(cop, robber, violator):
    tr = play(path(4), 2, cop, robber)
    assert tr.outcome["result"] == "forfeit" and tr.outcome["violator"] == violator
    assert replay_check(tr)


def test_horizon_survival():
    tr = play(cycle(5), 1, GreedyCop(), OptimalRobber(solve(cycle(5), 1)), horizon=7)
    assert tr.outcome == {"result": "survived", "round": 7} and len(tr.rounds) == 7
    assert replay_check(tr)


def test_disconnected_graph_rejected():
    with pytest.raises(GraphError):
        play(Graph(2), 1, GreedyCop(), StationaryRobber())


def test_trace_json_round_trip_and_replay():
    t = solve(petersen(), 3)
    tr = play(petersen(), 3, OptimalCop(t), OptimalRobber(t))
    back = Trace.from_json(tr.to_json())
    assert back.to_json() == tr.to_json()
    assert replay_check(back) and back.captured


def test_replay_detects_tampering():
    tr = play(cycle(6), 1, GreedyCop(), ScriptedRobber([3, 4, 5, 0, 1]), horizon=5)
    assert replay_check(tr)
    bad = Trace.from_json(tr.to_json())
    bad.rounds[1] = {"cops": bad.rounds[1]["cops"], "robber": 0}  # robber teleports
    assert not replay_check(bad)
    lie = Trace.from_json(tr.to_json())
    lie.outcome = {"result": "survived", "round": 99}
    assert not replay_check(lie)


def test_graph_hash_mismatch():
    tr = play(path(3), 1, GreedyCop(), StationaryRobber(2))
    text = tr.to_json().replace('"graph_hash": "', '"graph_hash": "x')
    with pytest.raises(GraphError):
        Trace.from_json(text)


def test_determinism():
    t = solve(cycle(8), 2)
    a = play(cycle(8), 2, OptimalCop(t), OptimalRobber(t)).to_json()
    b = play(cycle(8), 2, OptimalCop(solve(cycle(8), 2)), OptimalRobber(t)).to_json()
    assert a == b


def test_cops_keep_identity():
    tr = play(path(5), 2, Fixed((0, 4), [(1, 3), (2, 3)]), StationaryRobber(2))
    assert [r["cops"] for r in tr.rounds] == [(1, 3), (2, 3)]
    assert tr.captured
