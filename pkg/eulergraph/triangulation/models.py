"""Data models for triangulations given by face pairings."""

from dataclasses import dataclass, field
from itertools import combinations

Perm = tuple[int, int, int, int]

EDGE_PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))


def perm_sign(perm: Perm) -> int:
    """Sign of a permutation of {0,1,2,3}."""
    inversions = sum(1 for i, j in combinations(range(4), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def perm_inverse(perm: Perm) -> Perm:
    inverse = [0, 0, 0, 0]
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def perm_text(perm: Perm) -> str:
    return "".join(str(v) for v in perm)


@dataclass(frozen=True)
class Gluing:
    """Face ``f`` of the source tetrahedron is glued to face ``perm[f]`` of ``tet``."""

    tet: int
    perm: Perm

    def to_dict(self) -> dict:
        return {"tet": self.tet, "perm": perm_text(self.perm)}


@dataclass(frozen=True, order=True)
class FaceEmbedding:
    tet: int
    face: int

    def to_list(self) -> list[int]:
        return [self.tet, self.face]


@dataclass(frozen=True)
class EdgeEmbedding:
    """An edge of one tetrahedron, directed ``tail -> head`` by link transport."""

    tet: int
    tail: int
    head: int

    @property
    def key(self) -> tuple[int, tuple[int, int]]:
        return (self.tet, (min(self.tail, self.head), max(self.tail, self.head)))

    def to_list(self) -> list[int]:
        return [self.tet, self.tail, self.head]


@dataclass(frozen=True)
class EdgeClass:
    """An edge of the triangulation with its cyclic link.

    ``frames[i]`` is ``(tet, a, b, c, d)``: the walk sits on edge ``a -> b`` of
    ``tet`` and leaves through face ``d``; ``link_cycle[i]`` is that exit face.
    """

    index: int
    embeddings: tuple[EdgeEmbedding, ...]
    link_cycle: tuple[FaceEmbedding, ...]
    frames: tuple[tuple[int, int, int, int, int], ...]
    orientable_flag: bool

    @property
    def degree(self) -> int:
        return len(self.embeddings)

    @property
    def canonical(self) -> EdgeEmbedding:
        return self.embeddings[0]

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "degree": self.degree,
            "orientable": self.orientable_flag,
            "embeddings": [e.to_list() for e in self.embeddings],
            "link_cycle": [f.to_list() for f in self.link_cycle],
        }


@dataclass(frozen=True)
class FaceClass:
    """A glued pair of tetrahedron faces; ``embeddings[0]`` is the canonical one."""

    index: int
    embeddings: tuple[FaceEmbedding, FaceEmbedding]

    @property
    def canonical(self) -> FaceEmbedding:
        return self.embeddings[0]

    @property
    def partner(self) -> FaceEmbedding:
        return self.embeddings[1]

    def to_dict(self) -> dict:
        return {"index": self.index, "embeddings": [e.to_list() for e in self.embeddings]}


@dataclass(frozen=True)
class VertexClass:
    """Vertex of the triangulation and the surface linking it."""

    index: int
    corners: tuple[tuple[int, int], ...]
    link_euler_characteristic: int

    @property
    def link_type(self) -> str:
        return {2: "sphere", 0: "torus"}.get(self.link_euler_characteristic, "other")

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "corners": [list(c) for c in self.corners],
            "link_euler_characteristic": self.link_euler_characteristic,
            "link_type": self.link_type,
        }


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Validated, orientable triangulation with all derived cell classes.

    Instances come from ``TriangulationBuilder.build`` and are never mutated.
    """

    tet_count: int
    gluings: tuple[tuple[Gluing, ...], ...]
    orientation: tuple[int, ...]
    edge_classes: tuple[EdgeClass, ...]
    face_classes: tuple[FaceClass, ...]
    vertex_classes: tuple[VertexClass, ...]
    edge_lookup: dict[tuple[int, int, int], tuple[int, int]] = field(repr=False)
    face_lookup: dict[tuple[int, int], tuple[int, bool]] = field(repr=False)
    vertex_lookup: dict[tuple[int, int], int] = field(repr=False)

    @property
    def kind(self) -> str:
        if all(v.link_type == "torus" for v in self.vertex_classes):
            return "ideal"
        return "closed"

    @property
    def is_closed(self) -> bool:
        return self.kind == "closed"

    def gluing(self, tet: int, face: int) -> Gluing:
        return self.gluings[tet][face]

    def edge_of(self, tet: int, a: int, b: int) -> tuple[int, int]:
        """Edge class of ``a -> b`` in ``tet`` and +1/-1 against its transported direction."""
        return self.edge_lookup[(tet, a, b)]

    def face_of(self, tet: int, face: int) -> tuple[int, bool]:
        """Face class of a face embedding and whether it is the canonical one."""
        return self.face_lookup[(tet, face)]

    def vertex_of(self, tet: int, vertex: int) -> int:
        return self.vertex_lookup[(tet, vertex)]

    def edge_ends(self, edge_index: int) -> tuple[int, int]:
        """Vertex classes ``(tail, head)`` of an edge class in its canonical direction."""
        canonical = self.edge_classes[edge_index].canonical
        return (self.vertex_of(canonical.tet, canonical.tail), self.vertex_of(canonical.tet, canonical.head))

    def summary(self) -> dict:
        return {
            "tetrahedra": self.tet_count,
            "kind": self.kind,
            "vertices": len(self.vertex_classes),
            "edges": len(self.edge_classes),
            "faces": len(self.face_classes),
            "edge_degrees": [e.degree for e in self.edge_classes],
            "vertex_links": [v.link_type for v in self.vertex_classes],
            "orientable_edges": all(e.orientable_flag for e in self.edge_classes),
        }

    def to_dict(self) -> dict:
        return {
            **self.summary(),
            "edge_classes": [e.to_dict() for e in self.edge_classes],
            "face_classes": [f.to_dict() for f in self.face_classes],
            "vertex_classes": [v.to_dict() for v in self.vertex_classes],
        }
