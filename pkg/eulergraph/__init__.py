"""eulergraph: Euler classes of foliations carried by branched surfaces.

Two routes lead to the same kind of answer. Closed triangulations with an
acyclic edge orientation give an integer 2-cochain whose cohomology class is
computed exactly; taut ideal triangulations are flattened into branched
surfaces whose maw dual graphs give 1-cycles in the dual complex.
"""

from .branched import BranchedComplex, MawGraph, check_cycle, maw_dual_graph
from .config import Config
from .exceptions import EulerGraphError
from .homology import ChainComplex, HomologyClass, cycle_class, smith_normal_form
from .orientations import EdgeOrientation, enumerate_acyclic_orientations, euler_class
from .taut import TautStructure, find_taut_structures, flatten, lackenby_classes
from .triangulation import Triangulation, dual_chain_complex, parse_triangulation

__version__ = "0.1.0"

__all__ = [
    "BranchedComplex",
    "ChainComplex",
    "Config",
    "EdgeOrientation",
    "EulerGraphError",
    "HomologyClass",
    "MawGraph",
    "TautStructure",
    "Triangulation",
    "check_cycle",
    "cycle_class",
    "dual_chain_complex",
    "enumerate_acyclic_orientations",
    "euler_class",
    "find_taut_structures",
    "flatten",
    "lackenby_classes",
    "maw_dual_graph",
    "parse_triangulation",
    "smith_normal_form",
]
