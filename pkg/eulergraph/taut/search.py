"""Checking and enumerating taut structures."""

import logging
from typing import Iterator, Sequence

from ..checks import CheckReport
from ..exceptions import TautError
from ..triangulation import Triangulation
from .models import UP_PAIRS, TautStructure

logger = logging.getLogger(__name__)


def require_ideal(tri: Triangulation) -> None:
    if tri.is_closed:
        raise TautError("taut structures need an ideal triangulation")


def check_taut(tri: Triangulation, ts: TautStructure) -> CheckReport:
    """Verify two-in/two-out faces, face coorientations and edge angle sums.

    Every edge class needs exactly two pi corners, one top and one bottom.

    Raises:
        TautError: Closed triangulation, or a structure of the wrong length
    """
    require_ideal(tri)
    if len(ts.up_faces) != tri.tet_count:
        raise TautError(f"taut structure names {len(ts.up_faces)} tetrahedra, triangulation has {tri.tet_count}")
    report = CheckReport("taut")
    for t, faces in enumerate(ts.up_faces):
        if len(faces) != 2:
            report.add("two_in_two_out", f"tetrahedron {t}", f"{len(faces)} up faces")
    if not report.passed:
        return report

    for face_class in tri.face_classes:
        first, second = face_class.embeddings
        ups = ts.is_up(first.tet, first.face) + ts.is_up(second.tet, second.face)
        if ups != 1:
            report.add(
                "face_coorientation",
                f"face {face_class.index}",
                "both sides point out" if ups == 2 else "both sides point in",
            )

    for edge in tri.edge_classes:
        corners = [ts.corner(e.tet, e.tail, e.head) for e in edge.embeddings]
        total = sum(c is not None for c in corners)
        if total != 2:
            report.add("angle_sum", f"edge {edge.index}", f"angle sum {total}pi != 2pi")
        elif corners.count("top") != 1:
            report.add("pi_corners", f"edge {edge.index}", "pi corners are not one top and one bottom")
    return report


class _SearchState:
    """Partial assignment with incremental face and angle bookkeeping."""

    def __init__(self, tri: Triangulation):
        self.tri = tri
        self.top = [0] * len(tri.edge_classes)
        self.bottom = [0] * len(tri.edge_classes)
        self.pairs: list[tuple[int, int]] = []

    def _pi_edges(self, t: int, pair: tuple[int, int]) -> tuple[int, int]:
        top = tuple(v for v in range(4) if v not in pair)
        return self.tri.edge_of(t, *top)[0], self.tri.edge_of(t, *pair)[0]

    def faces_consistent(self, t: int, pair: tuple[int, int]) -> bool:
        for f in range(4):
            g = self.tri.gluing(t, f)
            if g.tet > t:
                continue
            other_pair = pair if g.tet == t else self.pairs[g.tet]
            if (f in pair) + (g.perm[f] in other_pair) != 1:
                return False
        return True

    def push(self, t: int, pair: tuple[int, int]) -> bool:
        top, bottom = self._pi_edges(t, pair)
        self.top[top] += 1
        self.bottom[bottom] += 1
        self.pairs.append(pair)
        return self.top[top] <= 1 and self.bottom[bottom] <= 1

    def pop(self, t: int) -> None:
        pair = self.pairs.pop()
        top, bottom = self._pi_edges(t, pair)
        self.top[top] -= 1
        self.bottom[bottom] -= 1

    def complete(self) -> bool:
        return all(self.top) and all(self.bottom)


def find_taut_structures(
    tri: Triangulation,
    limit: int | None = None,
    prefix: Sequence[tuple[int, int]] = (),
) -> Iterator[TautStructure]:
    """Stream every taut structure in lexicographic order of up-face pairs.

    Args:
        tri: Ideal triangulation
        limit: Stop after this many structures
        prefix: Fixed up pairs for the leading tetrahedra

    Yields:
        TautStructure passing ``check_taut``
    """
    require_ideal(tri)
    state = _SearchState(tri)
    for t, pair in enumerate(prefix):
        if not (state.faces_consistent(t, pair) and state.push(t, pair)):
            return
    found = 0
    for ts in _search(state, len(prefix)):
        yield ts
        found += 1
        if limit is not None and found >= limit:
            return
    if found == 0 and not prefix:
        logger.warning("no taut structure on this triangulation")


def _search(state: _SearchState, t: int) -> Iterator[TautStructure]:
    if t == state.tri.tet_count:
        if state.complete():
            yield TautStructure(tuple(state.pairs))
        return
    for pair in UP_PAIRS:
        if not state.faces_consistent(t, pair):
            continue
        if state.push(t, pair):
            yield from _search(state, t + 1)
        state.pop(t)
