"""Taut structures encoded by the up faces of each tetrahedron."""

import re
from dataclasses import dataclass
from itertools import combinations

from ..exceptions import TautError

UP_PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))

_TOKEN = re.compile(r"^[0-3]+$")


@dataclass(frozen=True)
class TautStructure:
    """Up faces per tetrahedron; coorientation points out of the tetrahedron through them.

    Angles are derived: pi on the edge where the two up faces meet (the top
    edge) and on the edge where the two down faces meet (the bottom edge),
    zero elsewhere.
    """

    up_faces: tuple[tuple[int, ...], ...]

    @classmethod
    def parse(cls, literal: str) -> "TautStructure":
        """Parse ``taut <p0> <p1> ...``, e.g. ``taut 01 23``.

        Raises:
            TautError: Missing keyword, or a token with digits outside 0-3 or repeated
        """
        tokens = literal.split()
        if not tokens or tokens[0] != "taut":
            raise TautError("taut literal must start with 'taut'", literal=literal)
        faces = []
        for position, token in enumerate(tokens[1:], start=1):
            if not _TOKEN.match(token) or len(set(token)) != len(token):
                raise TautError(f"bad up-face token {token!r} at position {position}", literal=literal)
            faces.append(tuple(sorted(int(ch) for ch in token)))
        if not faces:
            raise TautError("taut literal names no tetrahedra", literal=literal)
        return cls(tuple(faces))

    @property
    def literal(self) -> str:
        return "taut " + " ".join("".join(str(f) for f in pair) for pair in self.up_faces)

    def is_up(self, tet: int, face: int) -> bool:
        return face in self.up_faces[tet]

    def top_edge(self, tet: int) -> tuple[int, int]:
        """Edge shared by the two up faces."""
        i, j = self.up_faces[tet]
        return tuple(v for v in range(4) if v not in (i, j))

    def bottom_edge(self, tet: int) -> tuple[int, int]:
        """Edge shared by the two down faces."""
        return tuple(self.up_faces[tet])

    def corner(self, tet: int, a: int, b: int) -> str | None:
        """``"top"`` or ``"bottom"`` for a pi corner, None for a zero angle."""
        pair = tuple(sorted((a, b)))
        if pair == self.top_edge(tet):
            return "top"
        if pair == self.bottom_edge(tet):
            return "bottom"
        return None

    def to_dict(self) -> dict:
        return {"taut": self.literal, "up_faces": [list(p) for p in self.up_faces]}
