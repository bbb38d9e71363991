"""Edge-orientation route to the Euler class on closed triangulations."""

from .acyclic import (
    enumerate_acyclic_orientations,
    enumerate_partitioned,
    is_acyclic,
    is_mixed,
    long_edge,
    mixed_count,
)
from .euler import EulerClassResult, dual_branched_complex, euler_class, euler_cochain
from .models import EdgeOrientation, EulerCochain

__all__ = [
    "EdgeOrientation",
    "EulerClassResult",
    "EulerCochain",
    "dual_branched_complex",
    "enumerate_acyclic_orientations",
    "enumerate_partitioned",
    "euler_class",
    "euler_cochain",
    "is_acyclic",
    "is_mixed",
    "long_edge",
    "mixed_count",
]
