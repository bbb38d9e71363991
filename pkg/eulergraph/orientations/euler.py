"""Euler cochain of an acyclic edge orientation and its cohomology class."""

import logging
from dataclasses import dataclass

from ..branched import BranchedComplex, Region, Sector
from ..exceptions import OrientationError
from ..homology import BoundaryResult, ChainComplex, HomologyClass, is_coboundary
from ..triangulation import Triangulation, dual_chain_complex
from .acyclic import check_sign_count, check_orientable, is_acyclic, mixed_count
from .models import EdgeOrientation, EulerCochain

logger = logging.getLogger(__name__)


def _require_acyclic(tri: Triangulation, orientation: EdgeOrientation) -> None:
    check_orientable(tri)
    check_sign_count(tri, orientation)
    if not tri.is_closed:
        raise OrientationError("Euler cochains need a closed triangulation")
    if not is_acyclic(tri, orientation):
        raise OrientationError(f"orientation {orientation.literal} has a cyclic face")


def euler_cochain(tri: Triangulation, orientation: EdgeOrientation, complex_: ChainComplex | None = None) -> EulerCochain:
    """Compute ``phi(e) = 1 - mixed(e)/2`` and its coboundary.

    Args:
        tri: Closed triangulation
        orientation: Acyclic edge orientation
        complex_: Dual chain complex of ``tri``, built when omitted

    Raises:
        OrientationError: Ideal or unorientable input, cyclic faces, or an odd
            mixed count ("non-integral cochain")
    """
    _require_acyclic(tri, orientation)
    mixed = tuple(mixed_count(tri, orientation, e.index) for e in tri.edge_classes)
    odd = [i for i, m in enumerate(mixed) if m % 2]
    if odd:
        raise OrientationError("non-integral cochain: odd mixed count", edges=odd)
    values = tuple(1 - m // 2 for m in mixed)
    dual = tuple(s * v for s, v in zip(orientation.signs, values))
    complex_ = complex_ or dual_chain_complex(tri)
    coboundary = complex_.apply_coboundary(dual, 2)
    if any(coboundary):
        logger.warning("phi for %s is not a cocycle: %s", orientation.literal, coboundary)
    return EulerCochain(values=values, mixed=mixed, dual=dual, coboundary=coboundary)


@dataclass(frozen=True)
class EulerClassResult:
    """Class of phi in ``H^2`` with the integral coboundary test."""

    orientation: EdgeOrientation
    cochain: EulerCochain
    homology_class: HomologyClass
    coboundary_test: BoundaryResult

    @property
    def is_zero(self) -> bool:
        return self.coboundary_test.solvable

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation.literal,
            "cochain": self.cochain.to_dict(),
            "class": self.homology_class.to_dict(),
            "is_zero": self.is_zero,
            "witness": list(self.coboundary_test.witness) if self.is_zero else None,
            "note": "Euler class of the carried foliation, conditional on foliarity",
        }


def euler_class(tri: Triangulation, orientation: EdgeOrientation) -> EulerClassResult:
    """Cohomology class of the Euler cochain, decided by solving ``phi = delta psi``.

    Raises:
        OrientationError: As for ``euler_cochain``
        HomologyError: If phi is not a cocycle
    """
    complex_ = dual_chain_complex(tri)
    cochain = euler_cochain(tri, orientation, complex_)
    result = is_coboundary(complex_, cochain.dual, 2)
    return EulerClassResult(orientation, cochain, result.homology_class, result)


def dual_branched_complex(tri: Triangulation, orientation: EdgeOrientation) -> BranchedComplex:
    """Branched surface dual to an acyclic orientation.

    One disk sector per edge class, cooriented along the edge, with corner
    count ``mixed(e)``; one region per vertex class.
    """
    _require_acyclic(tri, orientation)
    sectors = []
    for edge in tri.edge_classes:
        tail, head = tri.edge_ends(edge.index)
        if orientation.signs[edge.index] < 0:
            tail, head = head, tail
        sectors.append(
            Sector(
                index=edge.index,
                euler_char=1,
                corner_count=mixed_count(tri, orientation, edge.index),
                region_pos=head,
                region_neg=tail,
                label=f"disk{edge.index}",
            )
        )
    regions = [Region(index=v.index, label=f"vertex{v.index}") for v in tri.vertex_classes]
    return BranchedComplex(sectors=tuple(sectors), regions=tuple(regions))
