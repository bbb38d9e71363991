"""Acyclic edge orientations: face tests, long edges, mixed counts and enumeration."""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Iterator, Sequence

from ..exceptions import OrientationError
from ..triangulation import EdgeEmbedding, FaceEmbedding, Triangulation
from .models import EdgeOrientation

logger = logging.getLogger(__name__)


def check_orientable(tri: Triangulation) -> None:
    bad = [e.index for e in tri.edge_classes if not e.orientable_flag]
    if bad:
        raise OrientationError(
            f"edge classes {bad} reverse under link transport and cannot be oriented", edges=bad
        )


def check_sign_count(tri: Triangulation, orientation: EdgeOrientation) -> None:
    if len(orientation.signs) != len(tri.edge_classes):
        raise OrientationError(
            f"orientation has {len(orientation.signs)} signs for {len(tri.edge_classes)} edge classes"
        )


def points(tri: Triangulation, signs: Sequence[int], tet: int, a: int, b: int) -> bool:
    """Whether edge ``a b`` of ``tet`` is directed ``a -> b``."""
    index, relative = tri.edge_of(tet, a, b)
    return signs[index] * relative > 0


def _face_vertices(face: int) -> tuple[int, int, int]:
    return tuple(v for v in range(4) if v != face)


def _source_sink(tri: Triangulation, signs: Sequence[int], tet: int, face: int) -> tuple[int, int] | None:
    """Unique source and sink of a face, or None when its boundary is a directed cycle."""
    vertices = _face_vertices(face)
    out_degree = {v: 0 for v in vertices}
    for i, x in enumerate(vertices):
        for y in vertices[i + 1:]:
            if points(tri, signs, tet, x, y):
                out_degree[x] += 1
            else:
                out_degree[y] += 1
    if all(d == 1 for d in out_degree.values()):
        return None
    source = next(v for v in vertices if out_degree[v] == 2)
    sink = next(v for v in vertices if out_degree[v] == 0)
    return source, sink


def is_acyclic(tri: Triangulation, orientation: EdgeOrientation) -> bool:
    """True when no face boundary is a directed cycle.

    Raises:
        OrientationError: Unorientable edge classes or wrong sign count
    """
    check_orientable(tri)
    check_sign_count(tri, orientation)
    return all(
        _source_sink(tri, orientation.signs, t, f) is not None
        for t in range(tri.tet_count)
        for f in range(4)
    )


def long_edge(tri: Triangulation, face: FaceEmbedding, orientation: EdgeOrientation) -> EdgeEmbedding:
    """The edge from a face's source vertex to its sink vertex.

    Raises:
        OrientationError: If the face boundary is a directed cycle
    """
    check_sign_count(tri, orientation)
    ends = _source_sink(tri, orientation.signs, face.tet, face.face)
    if ends is None:
        raise OrientationError(f"face {face.face} of tetrahedron {face.tet} is cyclic", tet=face.tet, face=face.face)
    return EdgeEmbedding(face.tet, ends[0], ends[1])


def is_mixed(tri: Triangulation, orientation: EdgeOrientation, tet: int, a: int, b: int) -> bool:
    """Whether edge ``a b`` of ``tet`` is long in exactly one of its two faces."""
    c, d = (v for v in range(4) if v not in (a, b))
    long_count = 0
    for face in (c, d):
        edge = long_edge(tri, FaceEmbedding(tet, face), orientation)
        if {edge.tail, edge.head} == {a, b}:
            long_count += 1
    return long_count == 1


def mixed_count(tri: Triangulation, orientation: EdgeOrientation, edge_class: int) -> int:
    """Number of embeddings of an edge class that are mixed in their tetrahedron."""
    return sum(
        1
        for e in tri.edge_classes[edge_class].embeddings
        if is_mixed(tri, orientation, e.tet, e.tail, e.head)
    )


class _FaceConstraints:
    """Faces grouped by the last edge class they depend on."""

    def __init__(self, tri: Triangulation):
        self.tri = tri
        self.by_last_edge: dict[int, list[tuple[int, int]]] = {}
        for face_class in tri.face_classes:
            t, f = face_class.canonical.tet, face_class.canonical.face
            vertices = _face_vertices(f)
            edges = [tri.edge_of(t, x, y)[0] for i, x in enumerate(vertices) for y in vertices[i + 1:]]
            self.by_last_edge.setdefault(max(edges), []).append((t, f))

    def satisfied(self, signs: list[int], edge_index: int) -> bool:
        return all(
            _source_sink(self.tri, signs, t, f) is not None for t, f in self.by_last_edge.get(edge_index, [])
        )


def enumerate_acyclic_orientations(
    tri: Triangulation,
    limit: int | None = None,
    prefix: Sequence[int] = (),
) -> Iterator[EdgeOrientation]:
    """Stream acyclic orientations in lexicographic sign order, ``+`` before ``-``.

    Args:
        tri: Triangulation to orient
        limit: Stop after this many orientations
        prefix: Fixed leading signs; partitions the search

    Yields:
        EdgeOrientation, each acyclic
    """
    unoriented = [e.index for e in tri.edge_classes if not e.orientable_flag]
    if unoriented:
        logger.warning("edge classes %s cannot be oriented; no acyclic orientations", unoriented)
        return
    n = len(tri.edge_classes)
    constraints = _FaceConstraints(tri)
    signs = [1] * n
    for i, s in enumerate(prefix):
        signs[i] = s
        if not constraints.satisfied(signs, i):
            return
    stream = _extend(constraints, signs, len(prefix), n)
    yield from islice(stream, limit) if limit is not None else stream


def _extend(constraints: _FaceConstraints, signs: list[int], depth: int, n: int) -> Iterator[EdgeOrientation]:
    if depth == n:
        yield EdgeOrientation(tuple(signs))
        return
    for choice in (1, -1):
        signs[depth] = choice
        if constraints.satisfied(signs, depth):
            yield from _extend(constraints, signs, depth + 1, n)
    signs[depth] = 1


def enumerate_partitioned(tri: Triangulation, limit: int | None, workers: int) -> list[EdgeOrientation]:
    """Same stream as ``enumerate_acyclic_orientations`` with prefixes searched in parallel."""
    n = len(tri.edge_classes)
    depth = 0
    while 2**depth < workers and depth < min(n, 6):
        depth += 1
    if depth == 0 or workers <= 1:
        return list(enumerate_acyclic_orientations(tri, limit))
    prefixes = [[]]
    for _ in range(depth):
        prefixes = [p + [s] for p in prefixes for s in (1, -1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(lambda p: list(enumerate_acyclic_orientations(tri, limit, p)), prefixes))
    merged = [o for chunk in chunks for o in chunk]
    logger.debug("parallel enumeration over %d prefixes found %d orientations", len(prefixes), len(merged))
    return merged[:limit] if limit is not None else merged
