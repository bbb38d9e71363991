"""Triangulation construction from face-pairing data."""

import logging
from collections import deque

from ..exceptions import TriangulationError
from .models import (
    EDGE_PAIRS,
    EdgeClass,
    EdgeEmbedding,
    FaceClass,
    FaceEmbedding,
    Gluing,
    Perm,
    Triangulation,
    VertexClass,
    perm_inverse,
    perm_sign,
)

logger = logging.getLogger(__name__)

Frame = tuple[int, int, int, int, int]


class TriangulationBuilder:
    """Collect gluings one face pair at a time, then validate and derive classes."""

    def __init__(self, tet_count: int):
        """Initialize the builder.

        Args:
            tet_count: Number of tetrahedra
        """
        if tet_count < 0:
            raise TriangulationError(f"negative tetrahedron count {tet_count}")
        self.tet_count = tet_count
        self._gluings: dict[tuple[int, int], Gluing] = {}

    def add_gluing(self, tet: int, face: int, other: int, perm: Perm) -> None:
        """Glue face ``face`` of ``tet`` to face ``perm[face]`` of ``other``; the inverse is implied.

        Raises:
            TriangulationError: Out-of-range indices, bad permutation, self-glued
                face, or a face that is already glued
        """
        for t in (tet, other):
            if not 0 <= t < self.tet_count:
                raise TriangulationError(f"tetrahedron {t} out of range", tet=t)
        if not 0 <= face < 4:
            raise TriangulationError(f"face {face} out of range", tet=tet, face=face)
        perm = tuple(perm)
        if sorted(perm) != [0, 1, 2, 3]:
            raise TriangulationError(f"{perm} is not a permutation of 0123", tet=tet, face=face)
        target_face = perm[face]
        if (tet, face) == (other, target_face):
            raise TriangulationError("face glued to itself", tet=tet, face=face)
        for key in ((tet, face), (other, target_face)):
            if key in self._gluings:
                raise TriangulationError(
                    f"face {key[1]} of tetrahedron {key[0]} is glued twice", tet=key[0], face=key[1]
                )
        self._gluings[(tet, face)] = Gluing(other, perm)
        self._gluings[(other, target_face)] = Gluing(tet, perm_inverse(perm))

    def build(self) -> Triangulation:
        """Validate the gluing table and derive every cell class.

        Returns:
            Immutable Triangulation

        Raises:
            TriangulationError: Unglued face, non-orientable gluing, or a vertex
                link that is neither a sphere nor a torus
        """
        for t in range(self.tet_count):
            for f in range(4):
                if (t, f) not in self._gluings:
                    raise TriangulationError(f"face {f} of tetrahedron {t} is not glued", tet=t, face=f)
        gluings = tuple(tuple(self._gluings[(t, f)] for f in range(4)) for t in range(self.tet_count))
        check_involution(gluings)

        orientation = orient_tetrahedra(gluings)
        edge_classes, edge_lookup = walk_edge_classes(gluings, orientation)
        face_classes, face_lookup = pair_faces(gluings)
        vertex_lookup, corners = vertex_orbits(gluings)
        vertex_classes = link_characteristics(corners, vertex_lookup, edge_classes)

        link_types = {v.link_type for v in vertex_classes}
        if "other" in link_types:
            bad = next(v for v in vertex_classes if v.link_type == "other")
            raise TriangulationError(
                f"vertex {bad.index} has link Euler characteristic {bad.link_euler_characteristic}",
                vertex=bad.index,
            )
        if len(link_types) > 1:
            raise TriangulationError("mixed vertex links: spheres and tori in one triangulation")

        unoriented = [e.index for e in edge_classes if not e.orientable_flag]
        if unoriented:
            logger.warning("edge classes %s reverse under link transport", unoriented)
        logger.debug(
            "built triangulation: %d tets, %d edges, %d faces, %d vertices",
            self.tet_count,
            len(edge_classes),
            len(face_classes),
            len(vertex_classes),
        )
        return Triangulation(
            tet_count=self.tet_count,
            gluings=gluings,
            orientation=orientation,
            edge_classes=tuple(edge_classes),
            face_classes=tuple(face_classes),
            vertex_classes=tuple(vertex_classes),
            edge_lookup=edge_lookup,
            face_lookup=face_lookup,
            vertex_lookup=vertex_lookup,
        )


def check_involution(gluings: tuple[tuple[Gluing, ...], ...]) -> None:
    for t, row in enumerate(gluings):
        for f, gluing in enumerate(row):
            back = gluings[gluing.tet][gluing.perm[f]]
            if back.tet != t or back.perm != perm_inverse(gluing.perm):
                raise TriangulationError("gluing is not an involution", tet=t, face=f)


def orient_tetrahedra(gluings: tuple[tuple[Gluing, ...], ...]) -> tuple[int, ...]:
    """Signs making every gluing orientation-reversing, found by breadth-first search."""
    signs: list[int | None] = [None] * len(gluings)
    for root in range(len(gluings)):
        if signs[root] is not None:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            t = queue.popleft()
            for f, gluing in enumerate(gluings[t]):
                wanted = -signs[t] * perm_sign(gluing.perm)
                if signs[gluing.tet] is None:
                    signs[gluing.tet] = wanted
                    queue.append(gluing.tet)
                elif signs[gluing.tet] != wanted:
                    raise TriangulationError("triangulation is not orientable", tet=t, face=f)
    return tuple(signs)


def _start_frame(tet: int, a: int, b: int, sign: int) -> Frame:
    c, d = (v for v in range(4) if v not in (a, b))
    if perm_sign((a, b, c, d)) * sign != 1:
        c, d = d, c
    return (tet, a, b, c, d)


def _step(gluings, frame: Frame) -> Frame:
    tet, a, b, c, d = frame
    g = gluings[tet][d]
    return (g.tet, g.perm[a], g.perm[b], g.perm[d], g.perm[c])


def walk_edge_classes(gluings, orientation):
    """Group edge embeddings into classes by walking around each edge.

    Classes are numbered by their lexicographically least embedding, whose
    ``a < b`` direction becomes the canonical one.
    """
    classes: list[EdgeClass] = []
    lookup: dict[tuple[int, int, int], tuple[int, int]] = {}
    for tet in range(len(gluings)):
        for a, b in EDGE_PAIRS:
            if (tet, a, b) in lookup:
                continue
            start = _start_frame(tet, a, b, orientation[tet])
            frames = [start]
            frame = _step(gluings, start)
            while (frame[0], {frame[1], frame[2]}) != (tet, {a, b}):
                frames.append(frame)
                frame = _step(gluings, frame)
            orientable = frame == start
            index = len(classes)
            embeddings = []
            for t, x, y, _, _ in frames:
                embeddings.append(EdgeEmbedding(t, x, y))
                lookup[(t, x, y)] = (index, 1)
                lookup[(t, y, x)] = (index, -1)
            classes.append(
                EdgeClass(
                    index=index,
                    embeddings=tuple(embeddings),
                    link_cycle=tuple(FaceEmbedding(f[0], f[4]) for f in frames),
                    frames=tuple(frames),
                    orientable_flag=orientable,
                )
            )
    return classes, lookup


def pair_faces(gluings):
    classes: list[FaceClass] = []
    lookup: dict[tuple[int, int], tuple[int, bool]] = {}
    for tet in range(len(gluings)):
        for face in range(4):
            if (tet, face) in lookup:
                continue
            g = gluings[tet][face]
            partner = (g.tet, g.perm[face])
            index = len(classes)
            classes.append(FaceClass(index, (FaceEmbedding(tet, face), FaceEmbedding(*partner))))
            lookup[(tet, face)] = (index, True)
            lookup[partner] = (index, False)
    return classes, lookup


def vertex_orbits(gluings):
    """Orbits of tetrahedron corners under the gluings."""
    lookup: dict[tuple[int, int], int] = {}
    corners: list[list[tuple[int, int]]] = []
    for tet in range(len(gluings)):
        for vertex in range(4):
            if (tet, vertex) in lookup:
                continue
            index = len(corners)
            orbit = []
            stack = [(tet, vertex)]
            lookup[(tet, vertex)] = index
            while stack:
                t, v = stack.pop()
                orbit.append((t, v))
                for f in range(4):
                    if f == v:
                        continue
                    g = gluings[t][f]
                    image = (g.tet, g.perm[v])
                    if image not in lookup:
                        lookup[image] = index
                        stack.append(image)
            corners.append(sorted(orbit))
    return lookup, corners


def link_characteristics(corners, vertex_lookup, edge_classes) -> list[VertexClass]:
    """Euler characteristic ``V - E + F`` of each vertex link.

    Faces are corner triangles, each link edge joins two of them, and link
    vertices are edge-class ends (a reversed edge class has a single end).
    """
    ends = [0] * len(corners)
    for edge in edge_classes:
        first = edge.canonical
        if edge.orientable_flag:
            ends[vertex_lookup[(first.tet, first.tail)]] += 1
            ends[vertex_lookup[(first.tet, first.head)]] += 1
        else:
            ends[vertex_lookup[(first.tet, first.tail)]] += 1
    result = []
    for index, orbit in enumerate(corners):
        n_faces = len(orbit)
        chi = ends[index] - (3 * n_faces) // 2 + n_faces
        result.append(VertexClass(index=index, corners=tuple(orbit), link_euler_characteristic=chi))
    return result
