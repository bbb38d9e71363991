"""Parse and format the line-based triangulation format.

    tri <N>
    glue <t> <f> -> <t'> <p>     # exactly 2N lines, p = images of 0123

``#`` starts a comment that runs to the end of the line.
"""

import re

from ..exceptions import TriangulationError, TriangulationSyntaxError
from .builder import TriangulationBuilder
from .models import Triangulation, perm_text

_HEADER = re.compile(r"^tri\s+(\d+)$")
_GLUE = re.compile(r"^glue\s+(\d+)\s+([0-3])\s+->\s+(\d+)\s+([0-3]{4})$")


def _content(raw: str) -> tuple[str, int]:
    """Strip the comment; return the text and the 1-based column it starts at."""
    text = raw.split("#", 1)[0].rstrip()
    stripped = text.lstrip()
    return stripped, len(text) - len(stripped) + 1


def _glue_error_column(text: str, start: int) -> int:
    """Column of the first token in a glue line that does not fit the grammar."""
    expected = [r"glue", r"\d+", r"[0-3]", r"->", r"\d+", r"[0-3]{4}"]
    tokens = list(re.finditer(r"\S+", text))
    for token, pattern in zip(tokens, expected):
        if not re.fullmatch(pattern, token.group()):
            return start + token.start()
    if len(tokens) > len(expected):
        return start + tokens[len(expected)].start()
    return start + len(text)


def parse_triangulation(text: str) -> Triangulation:
    """Parse a triangulation document.

    Args:
        text: Document contents

    Returns:
        Validated Triangulation

    Raises:
        TriangulationSyntaxError: Malformed line, with line and column
        TriangulationError: Gluing data that is not a valid triangulation
    """
    builder: TriangulationBuilder | None = None
    glue_count = 0
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line, column = _content(raw)
        if not line:
            continue
        if builder is None:
            match = _HEADER.match(line)
            if not match:
                raise TriangulationSyntaxError("expected 'tri <N>' header", number, column)
            builder = TriangulationBuilder(int(match.group(1)))
            continue
        match = _GLUE.match(line)
        if not match:
            raise TriangulationSyntaxError(
                "expected 'glue <t> <f> -> <t'> <pppp>'", number, _glue_error_column(line, column)
            )
        tet, face, other = int(match.group(1)), int(match.group(2)), int(match.group(3))
        perm = tuple(int(ch) for ch in match.group(4))
        glue_count += 1
        if glue_count > 2 * builder.tet_count:
            raise TriangulationSyntaxError(
                f"more than {2 * builder.tet_count} glue lines", number, column
            )
        try:
            builder.add_gluing(tet, face, other, perm)
        except TriangulationError as exc:
            raise TriangulationError(f"line {number}: {exc.message}", line=number, **exc.details) from exc

    if builder is None:
        raise TriangulationSyntaxError("missing 'tri <N>' header", max(last_line, 1), 1)
    if glue_count != 2 * builder.tet_count:
        raise TriangulationSyntaxError(
            f"expected {2 * builder.tet_count} glue lines, found {glue_count}", last_line + 1, 1
        )
    return builder.build()


def format_triangulation(tri: Triangulation) -> str:
    """Serialize with one glue line per face class, from its canonical side."""
    lines = [f"tri {tri.tet_count}"]
    for face_class in tri.face_classes:
        t, f = face_class.canonical.tet, face_class.canonical.face
        g = tri.gluing(t, f)
        lines.append(f"glue {t} {f} -> {g.tet} {perm_text(g.perm)}")
    return "\n".join(lines) + "\n"
