"""Homology and cohomology classes with SNF coordinates."""

import logging
from dataclasses import dataclass
from typing import Any, Sequence

from ..exceptions import ComplexMismatchError, HomologyError
from .complex import ChainComplex, QuotientBasis

logger = logging.getLogger(__name__)


def _integer(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise HomologyError(f"{name} must be an integer, got {value!r}", field=name)
    return value



@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group ``Z^rank + Z/t1 + ... + Z/tn``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def describe(self) -> str:
        """Render as e.g. ``Z + Z/5`` (``0`` for the trivial group)."""
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "group": self.describe()}


@dataclass(frozen=True)
class HomologyClass:
    """Class in ``H_k`` or ``H^k`` expressed in one complex's SNF basis.

    Coordinates are only comparable between classes sharing ``fingerprint``;
    combining classes from different bases raises ComplexMismatchError.
    """

    degree: int
    free: tuple[int, ...]
    torsion: tuple[tuple[int, int], ...]
    fingerprint: str
    cohomology: bool = False

    def __post_init__(self):
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        reduced = []
        for modulus, residue in self.torsion:
            if modulus < 2:
                raise HomologyError(f"torsion modulus must be at least 2, got {modulus}")
            reduced.append((int(modulus), int(residue) % int(modulus)))
        object.__setattr__(self, "torsion", tuple(reduced))

    def _check_compatible(self, other: "HomologyClass") -> None:
        if (
            self.fingerprint != other.fingerprint
            or self.degree != other.degree
            or self.cohomology != other.cohomology
        ):
            raise ComplexMismatchError(
                "classes belong to different complexes or degrees",
                left=self.fingerprint,
                right=other.fingerprint,
            )

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check_compatible(other)
        return HomologyClass(
            degree=self.degree,
            free=tuple(a + b for a, b in zip(self.free, other.free)),
            torsion=tuple((m, r + s) for (m, r), (_, s) in zip(self.torsion, other.torsion)),
            fingerprint=self.fingerprint,
            cohomology=self.cohomology,
        )

    def __mul__(self, scalar: int) -> "HomologyClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return HomologyClass(
            degree=self.degree,
            free=tuple(scalar * a for a in self.free),
            torsion=tuple((m, scalar * r) for m, r in self.torsion),
            fingerprint=self.fingerprint,
            cohomology=self.cohomology,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "HomologyClass":
        return self * -1

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free) and all(r == 0 for _, r in self.torsion)

    def to_dict(self) -> dict[str, Any]:
        """JSON form; ``basis`` carries the fingerprint for validity checks."""
        return {
            "degree": self.degree,
            "free": list(self.free),
            "torsion": [{"modulus": m, "residue": r} for m, r in self.torsion],
            "basis": self.fingerprint,
            "cohomology": self.cohomology,
        }

    @classmethod
    def from_dict(cls, data: dict, fingerprint: str | None = None) -> "HomologyClass":
        """Create a class from its JSON form.

        Args:
            data: Mapping with ``degree``, ``free`` and ``torsion`` keys
            fingerprint: Basis to assume when ``data`` has no ``basis`` key

        Returns:
            HomologyClass
        """
        try:
            torsion = tuple(
                (_integer(t["modulus"], "modulus"), _integer(t["residue"], "residue")) for t in data.get("torsion", [])
            )
            return cls(
                degree=_integer(data.get("degree", 1), "degree"),
                free=tuple(_integer(x, "free") for x in data.get("free", [])),
                torsion=torsion,
                fingerprint=data.get("basis") or fingerprint or "",
                cohomology=bool(data.get("cohomology", False)),
            )
        except HomologyError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise HomologyError(f"malformed homology class: {exc}") from exc


@dataclass(frozen=True)
class BoundaryResult:
    """Outcome of solving ``d x = chain`` over the integers."""

    solvable: bool
    witness: tuple[int, ...] | None
    homology_class: HomologyClass

    def to_dict(self) -> dict:
        return {
            "solvable": self.solvable,
            "witness": list(self.witness) if self.witness is not None else None,
            "class": self.homology_class.to_dict(),
        }


def _group(basis: QuotientBasis) -> HomologyGroup:
    return HomologyGroup(rank=basis.rank, torsion=basis.torsion)


def homology_groups(complex_: ChainComplex, k: int) -> HomologyGroup:
    """Rank and torsion of ``ker d_k / im d_{k+1}``.

    Raises:
        HomologyError: If ``k`` is outside the complex
    """
    return _group(complex_.basis(k))


def cohomology_groups(complex_: ChainComplex, k: int) -> HomologyGroup:
    """Rank and torsion of ``H^k`` from the transposed boundary maps."""
    return _group(complex_.basis(k, cohomology=True))


def _class_from_basis(basis: QuotientBasis, chain: Sequence[int], what: str) -> HomologyClass:
    image = basis.outgoing.apply(chain)
    if any(image):
        raise HomologyError(f"not a {what}", boundary=list(image))
    coords = basis.reduced_coordinates(chain)
    n_rel = basis.relations.rank
    factors = basis.factors
    return HomologyClass(
        degree=basis.degree,
        free=coords[n_rel:],
        torsion=tuple((factors[i], coords[i]) for i in basis.torsion_positions),
        fingerprint=basis.fingerprint,
        cohomology=basis.cohomology,
    )


def _solve(basis: QuotientBasis, chain: Sequence[int], what: str) -> BoundaryResult:
    cls = _class_from_basis(basis, chain, what)
    if not cls.is_zero():
        return BoundaryResult(False, None, cls)
    coords = basis.reduced_coordinates(chain)
    factors = basis.factors
    scaled = [coords[i] // factors[i] for i in range(len(factors))]
    scaled += [0] * (basis.relations.V.rows - len(scaled))
    witness = basis.relations.V.apply(scaled)
    if tuple(basis.incoming.apply(witness)) != tuple(int(c) for c in chain):
        raise HomologyError("integral solve failed to reproduce the chain")
    return BoundaryResult(True, witness, cls)


def cycle_class(complex_: ChainComplex, chain: Sequence[int], k: int) -> HomologyClass:
    """Class of a k-cycle in ``H_k``.

    Args:
        complex_: Ambient chain complex
        chain: Integer coefficients, one per k-cell
        k: Degree

    Returns:
        HomologyClass in the complex's SNF basis

    Raises:
        HomologyError: If ``chain`` is not a cycle (``boundary`` detail holds its image)
    """
    complex_._check_length(chain, k)
    return _class_from_basis(complex_.basis(k), chain, "cycle")


def is_boundary(complex_: ChainComplex, chain: Sequence[int], k: int) -> BoundaryResult:
    """Decide whether a k-cycle bounds, with an integral witness (k+1)-chain when it does."""
    complex_._check_length(chain, k)
    return _solve(complex_.basis(k), chain, "cycle")


def cocycle_class(complex_: ChainComplex, cochain: Sequence[int], k: int) -> HomologyClass:
    """Class of a k-cocycle in ``H^k``."""
    complex_._check_length(cochain, k)
    return _class_from_basis(complex_.basis(k, cohomology=True), cochain, "cocycle")


def is_coboundary(complex_: ChainComplex, cochain: Sequence[int], k: int) -> BoundaryResult:
    """Decide whether ``cochain = delta psi`` and return ``psi`` when it does."""
    complex_._check_length(cochain, k)
    return _solve(complex_.basis(k, cohomology=True), cochain, "cocycle")


def class_representative(complex_: ChainComplex, cls: HomologyClass) -> tuple[int, ...]:
    """A (co)cycle whose class is ``cls``."""
    basis = complex_.basis(cls.degree, cohomology=cls.cohomology)
    if basis.fingerprint != cls.fingerprint:
        raise ComplexMismatchError("class does not belong to this complex", basis=cls.fingerprint)
    n_rel = basis.relations.rank
    positions = basis.torsion_positions
    chain = [0] * complex_.dimension(cls.degree)
    for position, (_, residue) in zip(positions, cls.torsion):
        chain = [a + residue * b for a, b in zip(chain, basis.generator(position))]
    for offset, coefficient in enumerate(cls.free):
        chain = [a + coefficient * b for a, b in zip(chain, basis.generator(n_rel + offset))]
    return tuple(chain)


def zero_class(complex_: ChainComplex, k: int, cohomology: bool = False) -> HomologyClass:
    basis = complex_.basis(k, cohomology=cohomology)
    return HomologyClass(
        degree=k,
        free=(0,) * basis.rank,
        torsion=tuple((m, 0) for m in basis.torsion),
        fingerprint=basis.fingerprint,
        cohomology=cohomology,
    )
