"""Cops and robber pursuit-evasion lab.

Exact cop numbers by retrograde analysis, exact treewidth at desk scale,
cop-number-monotone graph transformations, constructive cop strategies
played out by a referee, and a harness that checks the bounds they imply.
"""

from .engine import GameState, Trace, play, replay_check
from .errors import (
    CopsRobbersError,
    GraphError,
    HypothesisError,
    InstanceTooLargeError,
    NoWinningStrategyError,
    ParseError,
    ResourceLimitError,
    TransformError,
)
from .graph import INF, Graph, metrics, parse_graph, render_graph
from .solver import SolveTable, cop_number, cop_win, is_cop_win_dismantlable, solve
from .transforms import TransformResult, clique_substitution, hat_construction, subdivide
from .treewidth import TreeDecomposition, exact_treewidth, treewidth, validate_decomposition

__version__ = "0.1.0"
