"""Edge orientations and Euler cochains."""

from dataclasses import dataclass

from ..exceptions import OrientationError

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1}


@dataclass(frozen=True)
class EdgeOrientation:
    """One sign per edge class: +1 keeps the canonical direction, -1 reverses it."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise OrientationError(f"orientation signs must be +1 or -1, got {self.signs}")

    @classmethod
    def parse(cls, literal: str) -> "EdgeOrientation":
        """Parse ``orient <signs>`` (the keyword is optional), e.g. ``orient +-+``."""
        text = literal.strip()
        if text.startswith("orient"):
            text = text[len("orient"):].strip()
        text = text.replace(" ", "")
        bad = next((ch for ch in text if ch not in _SIGN_CHARS), None)
        if bad is not None:
            raise OrientationError(f"unexpected character {bad!r} in orientation literal", literal=literal)
        return cls(tuple(_SIGN_CHARS[ch] for ch in text))

    @property
    def literal(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def reversed(self) -> "EdgeOrientation":
        return EdgeOrientation(tuple(-s for s in self.signs))

    def to_dict(self) -> dict:
        return {"orient": self.literal}


@dataclass(frozen=True)
class EulerCochain:
    """Integer 2-cochain on dual 2-cells, ``phi(e) = 1 - mixed(e)/2``.

    ``values`` are taken on each disk cooriented along its oriented edge.
    ``dual`` is the same cochain on the dual basis, whose 2-cells follow the
    canonical edge directions, so reversed edges flip sign. ``coboundary`` is
    ``delta`` of ``dual`` on dual 3-cells; it vanishes for a cocycle.
    """

    values: tuple[int, ...]
    mixed: tuple[int, ...]
    dual: tuple[int, ...]
    coboundary: tuple[int, ...]

    @property
    def is_cocycle(self) -> bool:
        return not any(self.coboundary)

    def to_dict(self) -> dict:
        return {
            "phi": list(self.values),
            "mixed": list(self.mixed),
            "dual": list(self.dual),
            "coboundary": list(self.coboundary),
            "is_cocycle": self.is_cocycle,
        }
