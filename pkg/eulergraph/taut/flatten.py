"""The dual graph G and the flattened branched surface of a taut structure."""

import logging

import networkx as nx

from ..branched import BranchedComplex, Region, Sector
from ..exceptions import TautError
from ..triangulation import Triangulation, dual_chain_complex, edge_crossings
from .models import TautStructure
from .search import check_taut

logger = logging.getLogger(__name__)

FAN_SIDES = ("least", "other")

# (hexagon dc, rectangle dc, region R+/R- characteristic) per boundary coorientation
CORNER_DATA = {
    "outward": (0, 4, 1),
    "inward": (6, 0, -3),
}


def _require_taut(tri: Triangulation, ts: TautStructure) -> None:
    report = check_taut(tri, ts)
    if not report.passed:
        first = report.violations[0]
        raise TautError(
            f"taut check failed: {first.kind} at {first.location}",
            violations=[v.to_dict() for v in report.violations],
        )


def dual_graph_G(tri: Triangulation, ts: TautStructure) -> tuple[int, ...]:
    """1-chain crossing every face in its coorientation.

    Returns:
        Coefficient +1 or -1 per face class

    Raises:
        TautError: Failed taut check, or a dual vertex without two incoming
            and two outgoing arcs
    """
    _require_taut(tri, ts)
    chain = tuple(
        1 if ts.is_up(fc.canonical.tet, fc.canonical.face) else -1 for fc in tri.face_classes
    )
    graph = dual_digraph(tri, chain)
    for t in range(tri.tet_count):
        if graph.in_degree(t) != 2 or graph.out_degree(t) != 2:
            raise TautError(f"dual vertex {t} is not two-in/two-out", tet=t)
    return chain


def dual_digraph(tri: Triangulation, chain: tuple[int, ...]) -> nx.MultiDiGraph:
    """Directed dual graph of a +-1 face chain, arcs keyed by face class."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(tri.tet_count))
    for fc, coeff in zip(tri.face_classes, chain):
        source, target = fc.canonical.tet, fc.partner.tet
        if coeff < 0:
            source, target = target, source
        graph.add_edge(source, target, key=fc.index)
    return graph


def pi_corners(tri: Triangulation, ts: TautStructure, edge_index: int) -> tuple[int, int]:
    """Walk positions of the top and bottom pi corners around an edge class."""
    top = bottom = None
    for position, (t, a, b, _, _) in enumerate(tri.edge_classes[edge_index].frames):
        corner = ts.corner(t, a, b)
        if corner == "top":
            top = position
        elif corner == "bottom":
            bottom = position
    if top is None or bottom is None:
        raise TautError(f"edge {edge_index} lacks a top or bottom pi corner", edge=edge_index)
    return top, bottom


def rectangle_chain(tri: Triangulation, ts: TautStructure, edge_index: int, fan_side: str = "least") -> tuple[tuple[int, int], ...]:
    """Path of dual edges through the edge's fan from the lower to the upper tetrahedron.

    The lower tetrahedron holds the top pi corner. ``fan_side="least"`` takes
    the side whose first face embedding is lexicographically least, ``"other"``
    the opposite side; the two differ by the boundary of the edge's dual 2-cell.
    """
    if fan_side not in FAN_SIDES:
        raise TautError(f"fan_side must be one of {FAN_SIDES}, got {fan_side!r}")
    edge = tri.edge_classes[edge_index]
    n = edge.degree
    low, up = pi_corners(tri, ts, edge_index)
    crossings = edge_crossings(tri, edge_index)

    forward = [crossings[i % n] for i in range(low, low + (up - low) % n)]
    backward = [(face, -sign) for face, sign in (crossings[i % n] for i in range(up, up + (low - up) % n))]

    t, _, _, c, d = edge.frames[low]
    forward_first_least = (t, d) < (t, c)
    use_forward = forward_first_least if fan_side == "least" else not forward_first_least
    path = forward if use_forward else backward

    terms: dict[int, int] = {}
    for face, sign in path:
        terms[face] = terms.get(face, 0) + sign
    return tuple(sorted((face, coeff) for face, coeff in terms.items() if coeff))


def flatten(
    tri: Triangulation,
    ts: TautStructure,
    coorientation: str = "outward",
    fan_side: str = "least",
) -> BranchedComplex:
    """Flatten the taut triangulation into a branched surface with rectangles.

    Sectors ``0..F-1`` are hexagons (one per face class) and ``F..F+E-1`` are
    rectangles (one per edge class); regions are the tetrahedra.

    Args:
        tri: Ideal triangulation
        ts: Taut structure on ``tri``
        coorientation: ``"outward"`` or ``"inward"`` normal on the boundary
        fan_side: Which side of each edge fan embeds the rectangle arc

    Raises:
        TautError: Failed taut check or unknown coorientation
    """
    if coorientation not in CORNER_DATA:
        raise TautError(f"unknown boundary coorientation {coorientation!r}")
    _require_taut(tri, ts)
    hexagon_dc, rectangle_dc, region_char = CORNER_DATA[coorientation]
    n_faces = len(tri.face_classes)

    sectors = []
    for fc in tri.face_classes:
        up_in_canonical = ts.is_up(fc.canonical.tet, fc.canonical.face)
        below, above = (fc.canonical.tet, fc.partner.tet) if up_in_canonical else (fc.partner.tet, fc.canonical.tet)
        sectors.append(
            Sector(
                index=fc.index,
                euler_char=1,
                corner_count=hexagon_dc,
                region_pos=above,
                region_neg=below,
                chain=((fc.index, 1 if up_in_canonical else -1),),
                label=f"hexagon{fc.index}",
            )
        )
    for edge in tri.edge_classes:
        low, up = pi_corners(tri, ts, edge.index)
        sectors.append(
            Sector(
                index=n_faces + edge.index,
                euler_char=1,
                corner_count=rectangle_dc,
                region_pos=edge.frames[up][0],
                region_neg=edge.frames[low][0],
                chain=rectangle_chain(tri, ts, edge.index, fan_side),
                label=f"rectangle{edge.index}",
            )
        )
    regions = tuple(
        Region(index=t, r_plus_char=region_char, r_minus_char=region_char, label=f"tet{t}")
        for t in range(tri.tet_count)
    )
    logger.debug("flattened %s (%s): %d sectors", ts.literal, coorientation, len(sectors))
    return BranchedComplex(
        sectors=tuple(sectors),
        regions=regions,
        boundary_coorientation=coorientation,
        complex=dual_chain_complex(tri),
    )
