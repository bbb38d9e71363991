"""Finite chain complexes of free abelian groups."""

import hashlib
import logging
from dataclasses import dataclass, field
from typing import Sequence

from ..exceptions import HomologyError
from .matrix import IntMatrix, SNFDecomposition, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ChainComplex:
    """Chain complex ``C_top -> ... -> C_1 -> C_0`` given by boundary matrices.

    ``boundaries[k]`` maps ``C_k`` to ``C_{k-1}`` and has shape
    ``(dimensions[k-1], dimensions[k])`` for ``k = 1 .. top``.
    """

    dimensions: tuple[int, ...]
    boundaries: dict[int, IntMatrix]
    labels: dict[int, list[str]] = field(default_factory=dict)
    _bases: dict = field(default_factory=dict, init=False, repr=False)
    _fingerprint: str | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.dimensions = tuple(int(d) for d in self.dimensions)
        for k in range(1, len(self.dimensions)):
            if k not in self.boundaries:
                raise HomologyError(f"missing boundary map in degree {k}")
            expected = (self.dimensions[k - 1], self.dimensions[k])
            if self.boundaries[k].shape != expected:
                raise HomologyError(
                    f"boundary in degree {k} has shape {self.boundaries[k].shape}, expected {expected}"
                )
        for k in range(2, len(self.dimensions)):
            if not (self.boundaries[k - 1] @ self.boundaries[k]).is_zero():
                raise HomologyError(f"boundary maps do not compose to zero in degree {k}")

    @classmethod
    def from_lists(cls, dimensions: Sequence[int], boundaries: dict[int, Sequence[Sequence[int]]]) -> "ChainComplex":
        """Build a complex from nested lists, one entry per degree."""
        matrices = {
            k: IntMatrix.from_rows(rows, n_cols=dimensions[k]) if rows else IntMatrix.zeros(dimensions[k - 1], dimensions[k])
            for k, rows in boundaries.items()
        }
        return cls(dimensions=tuple(dimensions), boundaries=matrices)

    @property
    def top(self) -> int:
        return len(self.dimensions) - 1

    def dimension(self, k: int) -> int:
        if 0 <= k <= self.top:
            return self.dimensions[k]
        return 0

    def boundary(self, k: int) -> IntMatrix:
        """The map ``C_k -> C_{k-1}``, with zero maps at both ends of the complex."""
        if k < 0 or k > self.top + 1:
            raise HomologyError(f"degree {k} out of range 0..{self.top}")
        if k == 0:
            return IntMatrix.zeros(0, self.dimensions[0])
        if k == self.top + 1:
            return IntMatrix.zeros(self.dimensions[self.top], 0)
        return self.boundaries[k]

    def apply_boundary(self, chain: Sequence[int], k: int) -> tuple[int, ...]:
        self._check_length(chain, k)
        return self.boundary(k).apply(chain)

    def apply_coboundary(self, cochain: Sequence[int], k: int) -> tuple[int, ...]:
        """Coboundary ``delta^k = boundary(k+1)^T`` applied to a k-cochain."""
        self._check_length(cochain, k)
        return self.boundary(k + 1).T.apply(cochain)

    def _check_length(self, chain: Sequence[int], k: int) -> None:
        if k < 0 or k > self.top:
            raise HomologyError(f"degree {k} out of range 0..{self.top}")
        if len(chain) != self.dimensions[k]:
            raise HomologyError(f"{k}-chain has {len(chain)} entries, expected {self.dimensions[k]}")

    @property
    def fingerprint(self) -> str:
        """sha256 over dimensions and boundary entries; identifies SNF bases."""
        if self._fingerprint is None:
            digest = hashlib.sha256()
            digest.update(repr(self.dimensions).encode())
            for k in range(1, self.top + 1):
                digest.update(f"|{k}:".encode())
                digest.update(",".join(str(v) for v in self.boundaries[k].to_lists_flat()).encode())
            self._fingerprint = digest.hexdigest()
        return self._fingerprint

    def basis(self, k: int, cohomology: bool = False) -> "QuotientBasis":
        """Cached SNF data for ``H_k`` (or ``H^k``)."""
        if k < 0 or k > self.top:
            raise HomologyError(f"degree {k} out of range 0..{self.top}")
        key = (k, cohomology)
        if key not in self._bases:
            if cohomology:
                outgoing, incoming = self.boundary(k + 1).T, self.boundary(k).T
            else:
                outgoing, incoming = self.boundary(k), self.boundary(k + 1)
            self._bases[key] = QuotientBasis.build(self, k, cohomology, outgoing, incoming)
        return self._bases[key]


@dataclass(frozen=True, eq=False)
class QuotientBasis:
    """SNF coordinates for ``ker(outgoing) / im(incoming)``.

    ``kernel`` columns span the cycles; ``relations`` is the Smith form of the
    incoming map rewritten in kernel coordinates.
    """

    degree: int
    cohomology: bool
    fingerprint: str
    kernel: IntMatrix
    kernel_coords: IntMatrix
    outgoing: IntMatrix
    incoming: IntMatrix
    relations: SNFDecomposition

    @classmethod
    def build(cls, complex_: ChainComplex, k: int, cohomology: bool, outgoing: IntMatrix, incoming: IntMatrix) -> "QuotientBasis":
        out_snf = smith_normal_form(outgoing)
        r = out_snf.rank
        kernel = IntMatrix(out_snf.V.entries[:, r:].copy())
        kernel_coords = IntMatrix(out_snf.V_inv.entries[r:, :].copy())
        relations = smith_normal_form(kernel_coords @ incoming)
        tag = "cohomology" if cohomology else "homology"
        fingerprint = hashlib.sha256(f"{complex_.fingerprint}|{tag}|{k}".encode()).hexdigest()
        logger.debug(
            "%s basis in degree %d: %d cycles, %d relations", tag, k, kernel.cols, relations.rank
        )
        return cls(
            degree=k,
            cohomology=cohomology,
            fingerprint=fingerprint,
            kernel=kernel,
            kernel_coords=kernel_coords,
            outgoing=outgoing,
            incoming=incoming,
            relations=relations,
        )

    @property
    def rank(self) -> int:
        return self.kernel.cols - self.relations.rank

    @property
    def factors(self) -> tuple[int, ...]:
        return self.relations.invariant_factors

    @property
    def torsion_positions(self) -> list[int]:
        return [i for i, d in enumerate(self.factors) if d > 1]

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(self.factors[i] for i in self.torsion_positions)

    def reduced_coordinates(self, chain: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a cycle in the basis diagonalizing the relations."""
        return self.relations.U.apply(self.kernel_coords.apply(chain))

    def generator(self, index: int) -> tuple[int, ...]:
        """Cycle representing the ``index``-th reduced basis vector."""
        column = self.relations.U_inv.entries[:, index]
        return self.kernel.apply(list(column))
