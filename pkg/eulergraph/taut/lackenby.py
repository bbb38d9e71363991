"""Euler class of the foliation carried by a flattened taut triangulation."""

import logging
from dataclasses import dataclass, field

from ..branched import BranchedComplex, check_cycle, maw_dual_graph
from ..checks import CheckReport
from ..exceptions import HomologyError
from ..homology import ChainComplex, HomologyClass, cycle_class, is_boundary
from ..triangulation import Triangulation, dual_chain_complex
from .flatten import dual_digraph, dual_graph_G, flatten
from .models import TautStructure

logger = logging.getLogger(__name__)


@dataclass
class LackenbyResult:
    """Chains G, beta, Gamma+ and Gamma- with their classes and every check."""

    structure: TautStructure
    g: tuple[int, ...]
    beta: tuple[int, ...]
    gamma_plus: tuple[int, ...]
    gamma_minus: tuple[int, ...]
    classes: dict[str, HomologyClass] = field(default_factory=dict)
    checks: list[CheckReport] = field(default_factory=list)
    swap_witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "taut": self.structure.literal,
            "chains": {
                "G": list(self.g),
                "beta": list(self.beta),
                "gamma_plus": list(self.gamma_plus),
                "gamma_minus": list(self.gamma_minus),
            },
            "classes": {name: cls.to_dict() for name, cls in sorted(self.classes.items())},
            "swap_witness": list(self.swap_witness) if self.swap_witness is not None else None,
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }


def rectangle_sum(bc: BranchedComplex, n_faces: int) -> tuple[int, ...]:
    """Sum of the rectangle arc chains (sectors from index ``n_faces`` on)."""
    total = [0] * n_faces
    for sector in bc.sectors[n_faces:]:
        for cell, coeff in sector.chain or ():
            total[cell] += coeff
    return tuple(total)


def _identity_check(name: str, actual: tuple[int, ...], expected: tuple[int, ...]) -> CheckReport:
    report = CheckReport(name)
    for cell, (a, b) in enumerate(zip(actual, expected)):
        if a != b:
            report.add("chain_identity", f"face {cell}", f"{a} != {b}")
    return report


def dual_degree_check(tri: Triangulation, chain: tuple[int, ...]) -> CheckReport:
    """Every tetrahedron must have two incoming and two outgoing arcs of ``chain``."""
    report = CheckReport("dual_degree")
    graph = dual_digraph(tri, chain)
    degrees = [(graph.in_degree(t), graph.out_degree(t)) for t in range(tri.tet_count)]
    report.details["degrees"] = [list(d) for d in degrees]
    for t, (incoming, outgoing) in enumerate(degrees):
        if (incoming, outgoing) != (2, 2):
            report.add("dual_degree", f"tet {t}", f"in {incoming}, out {outgoing}")
    return report


def lackenby_classes(
    tri: Triangulation,
    ts: TautStructure,
    fan_side: str = "least",
    outward: BranchedComplex | None = None,
    inward: BranchedComplex | None = None,
) -> LackenbyResult:
    """Assemble G, beta and both maw graph chains and verify their relations.

    Checks: weight conservation for both boundary coorientations; the chain
    identities ``Gamma+ = G + beta`` and ``Gamma- = -2G - beta``; all four
    chains are cycles; ``Gamma+ - Gamma-`` bounds; ``2[Gamma+] + [G] = 0``.

    Args:
        tri: Ideal triangulation
        ts: Taut structure on ``tri``
        fan_side: Fan side for rectangle arcs
        outward: Flattened complex to use instead of building the outward one
        inward: Flattened complex to use instead of building the inward one

    Returns:
        LackenbyResult; failures are reported in ``checks``, never raised

    Raises:
        TautError: If ``ts`` fails the taut check
    """
    complex_: ChainComplex = dual_chain_complex(tri)
    g = dual_graph_G(tri, ts)
    n_faces = len(tri.face_classes)
    outward = outward or flatten(tri, ts, "outward", fan_side)
    inward = inward or flatten(tri, ts, "inward", fan_side)

    plus_graph = maw_dual_graph(outward)
    minus_graph = maw_dual_graph(inward)
    gamma_plus = plus_graph.weighted_chain(n_faces)
    gamma_minus = minus_graph.weighted_chain(n_faces)
    beta = tuple(-x for x in rectangle_sum(outward, n_faces))

    checks = [dual_degree_check(tri, g)]

    for name, bc, maw in (("maw_cycle_outward", outward, plus_graph), ("maw_cycle_inward", inward, minus_graph)):
        report = check_cycle(maw, bc)
        report.name = name
        checks.append(report)

    checks.append(_identity_check("gamma_plus_identity", gamma_plus, tuple(a + b for a, b in zip(g, beta))))
    checks.append(_identity_check("gamma_minus_identity", gamma_minus, tuple(-2 * a - b for a, b in zip(g, beta))))

    cycles = CheckReport("cycles")
    chains = {"G": g, "beta": beta, "gamma_plus": gamma_plus, "gamma_minus": gamma_minus}
    for name, chain in chains.items():
        image = complex_.apply_boundary(chain, 1)
        if any(image):
            cycles.add("not_a_cycle", name, f"boundary {list(image)}")
    checks.append(cycles)

    result = LackenbyResult(ts, g, beta, gamma_plus, gamma_minus, checks=checks)
    swap = CheckReport("boundary_independence")
    relation = CheckReport("euler_relation")
    try:
        result.classes = {name: cycle_class(complex_, chain, 1) for name, chain in chains.items()}
        difference = tuple(a - b for a, b in zip(gamma_plus, gamma_minus))
        solved = is_boundary(complex_, difference, 1)
        if solved.solvable:
            result.swap_witness = solved.witness
        else:
            swap.add("not_a_boundary", "gamma_plus - gamma_minus", "difference is not a boundary")
        combined = 2 * result.classes["gamma_plus"] + result.classes["G"]
        relation.details["two_gamma_plus_plus_G"] = combined.to_dict()
        if not combined.is_zero():
            relation.add("nonzero_class", "2[gamma_plus] + [G]", "class is not zero")
    except HomologyError as exc:
        swap.add("skipped", "homology", exc.message)
        relation.add("skipped", "homology", exc.message)
    checks.extend([swap, relation])
    logger.debug("%s: %s", ts.literal, "passed" if result.passed else "failed")
    return result
