"""Taut ideal triangulations: search, flattening and the Euler class relation."""

from .flatten import dual_digraph, dual_graph_G, flatten, pi_corners, rectangle_chain
from .lackenby import LackenbyResult, dual_degree_check, lackenby_classes
from .models import UP_PAIRS, TautStructure
from .search import check_taut, find_taut_structures

__all__ = [
    "LackenbyResult",
    "TautStructure",
    "UP_PAIRS",
    "check_taut",
    "dual_degree_check",
    "dual_digraph",
    "dual_graph_G",
    "find_taut_structures",
    "flatten",
    "lackenby_classes",
    "pi_corners",
    "rectangle_chain",
]
