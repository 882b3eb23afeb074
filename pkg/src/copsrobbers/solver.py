"""Exact k-cop game solving by retrograde analysis.

The game value is computed on dense boolean tensors indexed by
``(cop_1, ..., cop_k, robber)``.  One backward step for the cops is ``k``
successive contractions with the closed adjacency matrix (each cop stays or
slides independently); one step for the robber is a single contraction on
the robber axis.  Layer ``h`` of the fixpoint holds exactly the states won
in ``h`` half-moves, so ranks fall out of the iteration.

Cops are interchangeable, so every table is symmetric in the cop axes and
the number of distinct game states is ``2 * n * C(n+k-1, k)``; that count
is what ``state_cap`` bounds.  The dense tensor has ``n ** (k+1)`` cells and
is bounded separately by ``dense_cap``.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import GraphError, NoWinningStrategyError, ResourceLimitError
from .graph import Graph

STATE_CAP = 5_000_000
DENSE_CAP = 30_000_000
ROBBER_WIN = -1


def multiset_state_count(n: int, k: int) -> int:
    """Distinct game states: cop multisets x robber vertex x side to move."""
    return math.comb(n + k - 1, k) * n * 2


def default_horizon(n: int, k: int) -> int:
    return multiset_state_count(n, k) + 1


def _closed_adjacency(g: Graph) -> np.ndarray:
    a = np.eye(g.n, dtype=np.float32)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def _cop_predecessors(win: np.ndarray, adj: np.ndarray, k: int) -> np.ndarray:
    """``out[c] = any(win[c'] for c' reachable from c in one joint cop move)``."""
    y = win.astype(np.float32)
    for axis in range(k):
        y = np.moveaxis(np.tensordot(adj, y, axes=([1], [axis])), 0, axis)
        y = (y > 0).astype(np.float32)
    return y > 0


def _capture_mask(n: int, k: int) -> np.ndarray:
    cap = np.zeros((n,) * (k + 1), dtype=bool)
    eye = np.eye(n, dtype=bool)
    for i in range(k):
        shape = [1] * (k + 1)
        shape[i] = n
        shape[k] = n
        cap |= eye.reshape(shape)
    return cap


class SolveTable:
    """Exact values of every state of the k-cop game on one graph.

    ``rank_cops[c + (r,)]`` is the number of half-moves to capture under
    optimal play from the state with cops at ``c``, robber at ``r`` and the
    cops to move; ``rank_robber`` likewise with the robber to move.
    ``ROBBER_WIN`` (-1) marks states from which the robber escapes forever.
    Captured states have rank 0.
    """

    def __init__(self, graph: Graph, k: int, rank_cops: np.ndarray, rank_robber: np.ndarray, iterations: int):
        self.graph = graph
        self.k = k
        self.rank_cops = rank_cops
        self.rank_robber = rank_robber
        self.iterations = iterations
        rank_cops.setflags(write=False)
        rank_robber.setflags(write=False)
        self._placement = None

    @property
    def n_states(self) -> int:
        return multiset_state_count(self.graph.n, self.k)

    def _placement_values(self):
        vals = np.where(self.rank_cops < 0, np.inf, self.rank_cops.astype(np.float64))
        return vals.max(axis=self.k)

    def best_placement(self):
        """``(cops, value)`` for the cops' optimal opening; value ``inf`` if none wins."""
        if self._placement is None:
            worst = self._placement_values()
            flat = int(np.argmin(worst))
            cops = tuple(int(x) for x in np.unravel_index(flat, worst.shape))
            self._placement = (cops, float(worst.reshape(-1)[flat]))
        return self._placement

    @property
    def cop_win(self) -> bool:
        return math.isfinite(self.best_placement()[1])

    def cop_rank(self, cops, robber) -> int:
        return int(self.rank_cops[tuple(cops) + (robber,)])

    def robber_rank(self, cops, robber) -> int:
        return int(self.rank_robber[tuple(cops) + (robber,)])

    def is_cop_win(self, cops, robber, cops_to_move=True) -> bool:
        rank = self.cop_rank(cops, robber) if cops_to_move else self.robber_rank(cops, robber)
        return rank != ROBBER_WIN

    def best_cop_move(self, cops, robber):
        """Lexicographically least joint move minimising the rank; ``(move, rank)``."""
        g = self.graph
        options = [g.closed_neighbors(c) for c in cops]
        grids = np.meshgrid(*[np.asarray(o) for o in options], indexing="ij")
        idx = tuple(x.reshape(-1) for x in grids)
        ranks = self.rank_robber[idx + (np.full(idx[0].shape, robber),)].astype(np.float64)
        ranks[ranks < 0] = np.inf
        best = int(np.argmin(ranks))
        return tuple(int(x[best]) for x in idx), ranks[best]

    def best_robber_move(self, cops, robber):
        """Least vertex maximising the cops' rank (robber-win counts as infinite)."""
        best_v, best_val = None, -1.0
        for v in self.graph.closed_neighbors(robber):
            r = self.cop_rank(cops, v)
            val = math.inf if r == ROBBER_WIN else float(r)
            if val > best_val:
                best_v, best_val = v, val
        return best_v, best_val

    def best_robber_placement(self, cops):
        best_v, best_val = None, -1.0
        for v in self.graph.vertices():
            r = self.cop_rank(cops, v)
            val = math.inf if r == ROBBER_WIN else float(r)
            if val > best_val:
                best_v, best_val = v, val
        return best_v, best_val


def _check_caps(n, k, state_cap, dense_cap):
    states = multiset_state_count(n, k)
    if states > state_cap:
        raise ResourceLimitError(f"state space (n={n}, k={k})", states, state_cap)
    cells = n ** (k + 1)
    if cells > dense_cap:
        raise ResourceLimitError(f"dense table (n={n}, k={k})", cells, dense_cap)


def solve(g: Graph, k: int, state_cap: int = STATE_CAP, dense_cap: int = DENSE_CAP) -> SolveTable:
    """Compute the full ``SolveTable`` for ``k`` cops on ``g``."""
    if k < 1:
        raise GraphError("need at least one cop")
    if g.n == 0:
        raise GraphError("cannot play on the empty graph")
    n = g.n
    _check_caps(n, k, state_cap, dense_cap)
    adj = _closed_adjacency(g)
    captured = _capture_mask(n, k)
    win_c = captured.copy()
    win_r = captured.copy()
    rank_c = np.where(captured, 0, ROBBER_WIN).astype(np.int32)
    rank_r = rank_c.copy()
    h = 0
    while True:
        new_c = _cop_predecessors(win_r, adj, k) & ~win_c
        rank_c[new_c] = h + 1
        win_c |= new_c
        escape = np.tensordot((~win_c).astype(np.float32), adj, axes=([k], [0])) > 0
        new_r = ~escape & ~win_r
        rank_r[new_r] = h + 2
        win_r |= new_r
        h += 2
        if not new_c.any() and not new_r.any():
            break
    return SolveTable(g, k, rank_c, rank_r, h // 2)


@lru_cache(maxsize=8)
def _solve_cached(g: Graph, k: int, state_cap: int, dense_cap: int) -> SolveTable:
    return solve(g, k, state_cap, dense_cap)


def solve_cached(g: Graph, k: int, state_cap: int = STATE_CAP, dense_cap: int = DENSE_CAP) -> SolveTable:
    return _solve_cached(g, k, state_cap, dense_cap)


def cop_win(g: Graph, k: int, state_cap: int = STATE_CAP, dense_cap: int = DENSE_CAP) -> bool:
    """Can ``k`` cops force a capture on the connected graph ``g``?"""
    if not g.is_connected():
        raise GraphError("cop_win is defined on connected graphs; use cop_number")
    return solve_cached(g, k, state_cap, dense_cap).cop_win


def cop_number(g: Graph, state_cap: int = STATE_CAP, dense_cap: int = DENSE_CAP) -> int:
    """Least k with a cop win, maximised over connected components."""
    if g.n == 0:
        return 0
    best = 0
    for part in g.components():
        sub, _ = g.induced_subgraph(part)
        k = 1
        while True:
            try:
                won = cop_win(sub, k, state_cap, dense_cap)
            except ResourceLimitError as exc:
                raise ResourceLimitError(
                    f"component {part[:8]}{'...' if len(part) > 8 else ''}: {exc.what}", exc.size, exc.cap
                ) from None
            if won:
                break
            k += 1
        best = max(best, k)
    return best


def is_cop_win_dismantlable(g: Graph) -> bool:
    """Dominated-vertex elimination: every component dismantles to one vertex."""
    for part in g.components():
        alive = set(part)
        closed = {v: set(g.closed_neighbors(v)) for v in part}
        changed = True
        while len(alive) > 1 and changed:
            changed = False
            for v in sorted(alive):
                nv = closed[v] & alive
                if any(u != v and nv <= (closed[u] & alive) for u in nv):
                    alive.remove(v)
                    changed = True
                    break
        if len(alive) > 1:
            return False
    return True


class OptimalCop:
    """Cop strategy read off a ``SolveTable``: always minimise the capture rank."""

    side = "cop"

    def __init__(self, table: SolveTable, name: str | None = None):
        self.table = table
        self.name = name or f"optimal-cop(k={table.k})"

    def place(self, graph, k):
        if k != self.table.k:
            raise GraphError(f"table solved for {self.table.k} cops, asked to place {k}")
        cops, value = self.table.best_placement()
        if not math.isfinite(value):
            raise NoWinningStrategyError(f"{k} cops have no winning strategy on this graph")
        return cops

    def move(self, graph, state, history):
        return self.table.best_cop_move(state.cops, state.robber)[0]


class OptimalRobber:
    """Robber strategy read off a ``SolveTable``.

    Stays inside robber-win states whenever possible; otherwise delays the
    capture as long as possible.  Ties go to the least vertex.
    """

    side = "robber"

    def __init__(self, table: SolveTable, name: str | None = None):
        self.table = table
        self.name = name or f"optimal-robber(k={table.k})"

    def place(self, graph, cops):
        return self.table.best_robber_placement(cops)[0]

    def move(self, graph, state, history):
        return self.table.best_robber_move(state.cops, state.robber)[0]


def optimal_cop_strategy(table: SolveTable) -> OptimalCop:
    return OptimalCop(table)


def optimal_robber_strategy(table: SolveTable) -> OptimalRobber:
    return OptimalRobber(table)


def joint_moves(g: Graph, cops):
    """All joint cop moves in lexicographic order (brute force; used by tests)."""
    return itertools.product(*[g.closed_neighbors(c) for c in cops])
