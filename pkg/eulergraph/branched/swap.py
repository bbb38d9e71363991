"""Effect of reversing a decomposing disk on the Euler class."""

from ..checks import CheckReport
from ..exceptions import BranchedError
from ..homology import ChainComplex, HomologyClass
from .maw import MawGraph, graph_class


def swap_difference_class(k: int, delta: HomologyClass) -> HomologyClass:
    """``(2 - k) * delta``, the change in the dual class when one disk is reversed.

    Args:
        k: Number of components of the disk boundary meeting the sutures
        delta: Class of the arc dual to the disk

    Raises:
        BranchedError: If ``k`` is odd or below 2
    """
    if k < 2 or k % 2:
        raise BranchedError(f"intersection count must be even and at least 2, got {k}", k=k)
    return (2 - k) * delta


def swap_consistency(
    plus: MawGraph,
    minus: MawGraph,
    complex_: ChainComplex,
    k: int,
    delta: HomologyClass,
) -> CheckReport:
    """Compare ``[plus] - [minus]`` with ``swap_difference_class(k, delta)``.

    ``plus`` and ``minus`` are the maw graphs of two complexes that differ in
    the orientation of one disk sector.
    """
    report = CheckReport("swap_consistency")
    observed = graph_class(plus, complex_) - graph_class(minus, complex_)
    expected = swap_difference_class(k, delta)
    report.details["observed"] = observed.to_dict()
    report.details["expected"] = expected.to_dict()
    if (observed - expected).is_zero():
        return report
    report.add("swap_formula", "graph classes", "difference of classes does not match (2 - k) * delta")
    return report
