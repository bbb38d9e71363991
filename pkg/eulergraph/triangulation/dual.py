"""Dual cell structure of a triangulation as an integer chain complex.

Dual 0-cells are tetrahedra, dual 1-cells are face classes (oriented from the
canonical embedding's tetrahedron to its partner), dual 2-cells are edge
classes and, for closed triangulations, dual 3-cells are vertex classes.
"""

import logging

from ..exceptions import TriangulationError
from ..homology import ChainComplex, IntMatrix
from .models import Triangulation

logger = logging.getLogger(__name__)


def crossing_sign(tri: Triangulation, tet: int, face: int) -> tuple[int, int]:
    """Face class crossed when leaving ``tet`` through ``face``, and +1/-1 against its dual edge."""
    index, canonical = tri.face_of(tet, face)
    return index, (1 if canonical else -1)


def edge_crossings(tri: Triangulation, edge_index: int) -> list[tuple[int, int]]:
    """Signed dual edges met walking once around an edge class."""
    return [crossing_sign(tri, f.tet, f.face) for f in tri.edge_classes[edge_index].link_cycle]


def dual_boundary_1(tri: Triangulation) -> IntMatrix:
    matrix = IntMatrix.zeros(tri.tet_count, len(tri.face_classes))
    for face_class in tri.face_classes:
        matrix.entries[face_class.partner.tet, face_class.index] += 1
        matrix.entries[face_class.canonical.tet, face_class.index] -= 1
    return matrix


def dual_boundary_2(tri: Triangulation) -> IntMatrix:
    matrix = IntMatrix.zeros(len(tri.face_classes), len(tri.edge_classes))
    for edge in tri.edge_classes:
        for face_index, sign in edge_crossings(tri, edge.index):
            matrix.entries[face_index, edge.index] += sign
    return matrix


def dual_boundary_3(tri: Triangulation) -> IntMatrix:
    """Signed edge-end incidences: +1 where an edge class ends, -1 where it starts."""
    matrix = IntMatrix.zeros(len(tri.edge_classes), len(tri.vertex_classes))
    for edge in tri.edge_classes:
        tail, head = tri.edge_ends(edge.index)
        matrix.entries[edge.index, head] += 1
        matrix.entries[edge.index, tail] -= 1
    return matrix


def dual_chain_complex(tri: Triangulation, top: int | None = None) -> ChainComplex:
    """Build the dual chain complex of a triangulation.

    Args:
        tri: Validated triangulation
        top: Highest degree; defaults to 3 for closed and 2 for ideal input

    Returns:
        ChainComplex with ``d o d = 0`` verified

    Raises:
        TriangulationError: If degree 3 is requested for an ideal triangulation
    """
    if top is None:
        top = 3 if tri.is_closed else 2
    if top == 3 and not tri.is_closed:
        raise TriangulationError("no dual 3-cells: ideal triangulation has no closed vertex balls")
    if top not in (1, 2, 3):
        raise TriangulationError(f"dual complex top degree must be 1, 2 or 3, got {top}")

    dims = [tri.tet_count, len(tri.face_classes), len(tri.edge_classes), len(tri.vertex_classes)][: top + 1]
    builders = {1: dual_boundary_1, 2: dual_boundary_2, 3: dual_boundary_3}
    boundaries = {k: builders[k](tri) for k in range(1, top + 1)}
    complex_ = ChainComplex(dimensions=tuple(dims), boundaries=boundaries)
    complex_.labels.update(
        {
            0: [f"tet{t}" for t in range(tri.tet_count)],
            1: [f"face{f.index}" for f in tri.face_classes],
            2: [f"edge{e.index}" for e in tri.edge_classes],
        }
    )
    logger.debug("dual complex with dimensions %s", dims)
    return complex_
