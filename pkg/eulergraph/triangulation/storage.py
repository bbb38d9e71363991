"""Triangulation file storage."""

import json
from pathlib import Path

from ..exceptions import TriangulationSyntaxError
from .models import Triangulation
from .parser import format_triangulation, parse_triangulation


class TriangulationStorage:
    """Save and load triangulations in the text gluing format."""

    def save(self, tri: Triangulation, path: str | Path) -> None:
        """Save a triangulation.

        Args:
            tri: Triangulation to save
            path: File path to save to
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_triangulation(tri), encoding="utf-8")

    def load(self, path: str | Path) -> Triangulation:
        """Load and validate a triangulation file.

        Args:
            path: File path to load from

        Returns:
            Validated Triangulation

        Raises:
            TriangulationSyntaxError: If the file is not UTF-8 text
        """
        raw = Path(path).read_bytes()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = raw.count(b"\n", 0, exc.start) + 1
            column = exc.start - (raw.rfind(b"\n", 0, exc.start) + 1) + 1
            raise TriangulationSyntaxError(f"invalid UTF-8 byte 0x{raw[exc.start]:02x}", line, column) from exc
        return parse_triangulation(text)

    def save_report(self, tri: Triangulation, path: str | Path) -> None:
        """Write the derived class structure as JSON."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(tri.to_dict(), f, indent=2)
