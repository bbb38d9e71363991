"""Triangulations by face pairings: parsing, cell classes and the dual complex."""

from .builder import TriangulationBuilder
from .dual import crossing_sign, dual_chain_complex, edge_crossings
from .models import (
    EdgeClass,
    EdgeEmbedding,
    FaceClass,
    FaceEmbedding,
    Gluing,
    Triangulation,
    VertexClass,
    perm_sign,
)
from .parser import format_triangulation, parse_triangulation
from .storage import TriangulationStorage


def edge_classes(tri: Triangulation) -> list[EdgeClass]:
    """Edge classes in index order."""
    return list(tri.edge_classes)


def vertex_links(tri: Triangulation) -> list[dict]:
    """Per-vertex link report: corner count, Euler characteristic and link type."""
    return [v.to_dict() for v in tri.vertex_classes]


__all__ = [
    "EdgeClass",
    "EdgeEmbedding",
    "FaceClass",
    "FaceEmbedding",
    "Gluing",
    "Triangulation",
    "TriangulationBuilder",
    "TriangulationStorage",
    "VertexClass",
    "crossing_sign",
    "dual_chain_complex",
    "edge_classes",
    "edge_crossings",
    "format_triangulation",
    "parse_triangulation",
    "perm_sign",
    "vertex_links",
]
