"""Data models for cooriented branched-surface complexes."""

from dataclasses import dataclass, field, replace
from typing import Optional

from ..exceptions import BranchedError
from ..homology import ChainComplex

COORIENTATIONS = ("outward", "inward")


def _integer(value: object, name: str, index: int) -> int:
    """JSON integer; floats, bools and strings are rejected instead of truncated."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise BranchedError(f"{name} of entry {index} must be an integer, got {value!r}", field=name, index=index)
    return value



@dataclass(frozen=True)
class Sector:
    """A sector with its corner data and the regions on either side.

    The coorientation points from ``region_neg`` into ``region_pos``. ``chain``
    is the arc crossing the sector written as sparse ``(cell, coefficient)``
    terms of a 1-chain; ``dc_flipped`` is the corner count after reversing the
    coorientation, when known.
    """

    index: int
    euler_char: int
    corner_count: int
    region_pos: int
    region_neg: int
    chain: Optional[tuple[tuple[int, int], ...]] = None
    dc_flipped: Optional[int] = None
    label: str = ""

    def to_dict(self) -> dict:
        data: dict = {
            "chi": self.euler_char,
            "dc": self.corner_count,
            "region_pos": self.region_pos,
            "region_neg": self.region_neg,
        }
        if self.chain is not None:
            data["chain"] = [[cell, coeff] for cell, coeff in self.chain]
        if self.dc_flipped is not None:
            data["dc_flipped"] = self.dc_flipped
        if self.label:
            data["label"] = self.label
        return data

    @classmethod
    def from_dict(cls, index: int, data: dict) -> "Sector":
        chain = data.get("chain")
        return cls(
            index=index,
            euler_char=_integer(data["chi"], "chi", index),
            corner_count=_integer(data["dc"], "dc", index),
            region_pos=_integer(data["region_pos"], "region_pos", index),
            region_neg=_integer(data["region_neg"], "region_neg", index),
            chain=(
                tuple((_integer(c, "chain", index), _integer(v, "chain", index)) for c, v in chain)
                if chain is not None
                else None
            ),
            dc_flipped=None if data.get("dc_flipped") is None else _integer(data["dc_flipped"], "dc_flipped", index),
            label=data.get("label", ""),
        )


@dataclass(frozen=True)
class Region:
    """Complementary product ball; ``R+`` and ``R-`` have equal Euler characteristic."""

    index: int
    r_plus_char: int = 1
    r_minus_char: int = 1
    label: str = ""

    def to_dict(self) -> dict:
        data: dict = {"r_plus_chi": self.r_plus_char, "r_minus_chi": self.r_minus_char}
        if self.label:
            data["label"] = self.label
        return data

    @classmethod
    def from_dict(cls, index: int, data: dict) -> "Region":
        return cls(
            index=index,
            r_plus_char=_integer(data.get("r_plus_chi", 1), "r_plus_chi", index),
            r_minus_char=_integer(data.get("r_minus_chi", 1), "r_minus_chi", index),
            label=data.get("label", ""),
        )


@dataclass(frozen=True, eq=False)
class BranchedComplex:
    """Sectors and regions of a cooriented branched surface with product-ball exterior.

    ``complex`` is the optional ambient chain complex that sector chains live in.
    """

    sectors: tuple[Sector, ...]
    regions: tuple[Region, ...]
    boundary_coorientation: str = "outward"
    complex: Optional[ChainComplex] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "sectors", tuple(self.sectors))
        object.__setattr__(self, "regions", tuple(self.regions))
        if self.boundary_coorientation not in COORIENTATIONS:
            raise BranchedError(f"boundary_coorientation must be one of {COORIENTATIONS}")
        n = len(self.regions)
        for position, region in enumerate(self.regions):
            if region.index != position:
                raise BranchedError(f"region at position {position} has index {region.index}")
            if region.r_plus_char != region.r_minus_char:
                raise BranchedError(
                    f"region {position} is not a product: R+ and R- characteristics differ",
                    region=position,
                )
        for position, sector in enumerate(self.sectors):
            if sector.index != position:
                raise BranchedError(f"sector at position {position} has index {sector.index}")
            for side in (sector.region_pos, sector.region_neg):
                if not 0 <= side < n:
                    raise BranchedError(
                        f"sector {position} refers to region {side}, only {n} regions", sector=position
                    )
            if sector.corner_count < 0:
                raise BranchedError(f"sector {position} has negative corner count", sector=position)
            if sector.chain is not None and self.complex is not None:
                size = self.complex.dimension(1)
                if any(not 0 <= cell < size for cell, _ in sector.chain):
                    raise BranchedError(f"sector {position} chain leaves the 1-cells", sector=position)

    def with_sector(self, sector: Sector) -> "BranchedComplex":
        sectors = list(self.sectors)
        sectors[sector.index] = sector
        return replace(self, sectors=tuple(sectors))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BranchedComplex):
            return NotImplemented
        return (
            self.sectors == other.sectors
            and self.regions == other.regions
            and self.boundary_coorientation == other.boundary_coorientation
        )

    __hash__ = None

    def to_dict(self) -> dict:
        data: dict = {
            "boundary_coorientation": self.boundary_coorientation,
            "sectors": [s.to_dict() for s in self.sectors],
            "regions": [r.to_dict() for r in self.regions],
        }
        if self.complex is not None:
            data["complex"] = {
                "dimensions": list(self.complex.dimensions),
                "boundaries": {
                    str(k): self.complex.boundaries[k].to_lists() for k in range(1, self.complex.top + 1)
                },
            }
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "BranchedComplex":
        """Create a complex from its JSON form.

        Raises:
            BranchedError: Missing keys or inconsistent indices
        """
        try:
            ambient = None
            if data.get("complex") is not None:
                raw = data["complex"]
                ambient = ChainComplex.from_lists(
                    raw["dimensions"], {int(k): rows for k, rows in raw["boundaries"].items()}
                )
            return cls(
                sectors=tuple(Sector.from_dict(i, s) for i, s in enumerate(data.get("sectors", []))),
                regions=tuple(Region.from_dict(i, r) for i, r in enumerate(data.get("regions", []))),
                boundary_coorientation=data.get("boundary_coorientation", "outward"),
                complex=ambient,
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, BranchedError):
                raise
            raise BranchedError(f"malformed branched complex: {exc}") from exc
