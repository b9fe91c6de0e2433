"""Strongly connected orientations with lexicographically minimal indegree sequences."""

from .connectivity import (
    TwoReachWitness,
    find_bridges,
    is_strongly_connected,
    two_reach_set,
    two_reaches,
)
from .generators import GenSpec, generate
from .graph import (
    ContractError,
    DirectedPath,
    InfeasibleGraph,
    Orientation,
    UndirectedGraph,
    indegree,
    indegree_sequence,
    lex_compare,
    parse_graph,
    reverse_path,
)
from .oracle import OracleResult, oracle_min_lex, oracle_min_max_indegree
from .reversal import ReversalTrace, path_reversal, sc_path_reversal

__version__ = "0.1.0"
