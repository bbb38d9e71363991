"""Exact integer homology: Smith normal form, groups and class coordinates."""

from .classes import (
    BoundaryResult,
    HomologyClass,
    HomologyGroup,
    class_representative,
    cocycle_class,
    cohomology_groups,
    cycle_class,
    homology_groups,
    is_boundary,
    is_coboundary,
    zero_class,
)
from .complex import ChainComplex, QuotientBasis
from .matrix import IntMatrix, SNFDecomposition, smith_normal_form

__all__ = [
    "BoundaryResult",
    "ChainComplex",
    "HomologyClass",
    "HomologyGroup",
    "IntMatrix",
    "QuotientBasis",
    "SNFDecomposition",
    "class_representative",
    "cocycle_class",
    "cohomology_groups",
    "cycle_class",
    "homology_groups",
    "is_boundary",
    "is_coboundary",
    "smith_normal_form",
    "zero_class",
]
