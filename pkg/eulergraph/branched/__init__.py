"""Cooriented branched surfaces and their maw dual graphs."""

from .maw import (
    MawArc,
    MawGraph,
    check_cycle,
    flip_sector_coorientation,
    graph_chain,
    graph_class,
    maw_dual_graph,
    maw_euler_characteristic,
)
from .models import BranchedComplex, Region, Sector
from .storage import BranchedStorage
from .swap import swap_consistency, swap_difference_class

__all__ = [
    "BranchedComplex",
    "BranchedStorage",
    "MawArc",
    "MawGraph",
    "Region",
    "Sector",
    "check_cycle",
    "flip_sector_coorientation",
    "graph_chain",
    "graph_class",
    "maw_dual_graph",
    "maw_euler_characteristic",
    "swap_consistency",
    "swap_difference_class",
]
