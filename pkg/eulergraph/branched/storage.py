"""Branched complex storage."""

import json
from pathlib import Path

from ..exceptions import BranchedError
from .models import BranchedComplex


class BranchedStorage:
    """Save and load branched complexes as JSON."""

    def save_json(self, bc: BranchedComplex, path: str | Path) -> None:
        """Save a complex to a JSON file.

        Args:
            bc: BranchedComplex to save
            path: File path to save to
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding="utf-8") as f:
            json.dump(bc.to_dict(), f, indent=2)
            f.write("\n")

    def load_json(self, path: str | Path) -> BranchedComplex:
        """Load a complex from a JSON file.

        Args:
            path: File path to load from

        Returns:
            Loaded BranchedComplex
        """
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise BranchedError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
            except UnicodeDecodeError as exc:
                raise BranchedError(f"invalid UTF-8 in {path}") from exc
        return BranchedComplex.from_dict(data)
