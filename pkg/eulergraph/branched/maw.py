"""Maw Euler characteristics and the maw dual graph."""

import logging
from dataclasses import dataclass

import networkx as nx

from ..checks import CheckReport
from ..exceptions import BranchedError
from ..homology import ChainComplex, HomologyClass, cycle_class
from .models import BranchedComplex, Sector

logger = logging.getLogger(__name__)


def maw_euler_characteristic(sector: Sector) -> int:
    """``chi(s) - dc(s)/2``.

    Raises:
        BranchedError: If the corner count is odd
    """
    if sector.corner_count % 2:
        raise BranchedError(
            f"inconsistent corner data: sector {sector.index} has odd corner count {sector.corner_count}",
            sector=sector.index,
        )
    return sector.euler_char - sector.corner_count // 2


@dataclass(frozen=True)
class MawArc:
    sector: int
    source: int
    target: int
    weight: int

    def to_dict(self) -> dict:
        return {"sector": self.sector, "from": self.source, "to": self.target, "weight": self.weight}


@dataclass(frozen=True, eq=False)
class MawGraph:
    """Weighted directed multigraph: one node per region, one arc per sector."""

    arcs: tuple[MawArc, ...]
    region_count: int
    chains: tuple[tuple[tuple[int, int], ...] | None, ...] = ()

    @property
    def graph(self) -> nx.MultiDiGraph:
        """networkx view; arcs are keyed by sector index."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.region_count))
        for arc in self.arcs:
            graph.add_edge(arc.source, arc.target, key=arc.sector, weight=arc.weight)
        return graph

    def weights(self) -> list[int]:
        return [arc.weight for arc in self.arcs]

    def weighted_chain(self, size: int) -> tuple[int, ...]:
        """``sum chi_m(s) * a(s)`` as a dense 1-chain of length ``size``.

        Raises:
            BranchedError: If some sector has no chain embedding
        """
        missing = [arc.sector for arc, chain in zip(self.arcs, self.chains) if chain is None]
        if len(self.chains) != len(self.arcs) or missing:
            raise BranchedError("sectors without chain embedding", sectors=missing)
        total = [0] * size
        for arc, chain in zip(self.arcs, self.chains):
            for cell, coeff in chain:
                total[cell] += arc.weight * coeff
        return tuple(total)

    def to_dict(self) -> dict:
        return {"regions": self.region_count, "arcs": [arc.to_dict() for arc in self.arcs]}


def maw_dual_graph(bc: BranchedComplex) -> MawGraph:
    """Build the maw dual graph: arcs run from ``region_neg`` to ``region_pos``."""
    arcs = tuple(
        MawArc(s.index, s.region_neg, s.region_pos, maw_euler_characteristic(s)) for s in bc.sectors
    )
    logger.debug("maw graph: %d regions, %d arcs", len(bc.regions), len(arcs))
    return MawGraph(arcs=arcs, region_count=len(bc.regions), chains=tuple(s.chain for s in bc.sectors))


def check_cycle(graph: MawGraph, bc: BranchedComplex) -> CheckReport:
    """Verify weight conservation at every region.

    In-weight and out-weight must both equal the region's ``R+`` Euler
    characteristic. Imbalances are reported as ``unbalanced`` and wrong totals
    as ``region_value``.
    """
    report = CheckReport("maw_cycle")
    if len(graph.arcs) != len(bc.sectors):
        report.add("arc_count", "graph", f"{len(graph.arcs)} arcs for {len(bc.sectors)} sectors")
        return report
    nx_graph = graph.graph
    values = []
    for region in bc.regions:
        incoming = nx_graph.in_degree(region.index, weight="weight")
        outgoing = nx_graph.out_degree(region.index, weight="weight")
        values.append({"region": region.index, "in": incoming, "out": outgoing})
        if incoming != outgoing:
            report.add("unbalanced", f"region {region.index}", f"in {incoming} != out {outgoing}")
        for name, total in (("in", incoming), ("out", outgoing)):
            if total != region.r_plus_char:
                report.add(
                    "region_value",
                    f"region {region.index}",
                    f"{name}-weight {total} != chi(R+) {region.r_plus_char}",
                )
    report.details["regions"] = values
    return report


def graph_chain(graph: MawGraph, complex_: ChainComplex, degree: int = 1) -> tuple[int, ...]:
    return graph.weighted_chain(complex_.dimension(degree))


def graph_class(graph: MawGraph, complex_: ChainComplex, degree: int = 1) -> HomologyClass:
    """Homology class of the weighted arc chain.

    Raises:
        BranchedError: If a sector has no chain embedding
        HomologyError: If the weighted chain is not a cycle
    """
    return cycle_class(complex_, graph_chain(graph, complex_, degree), degree)


def flip_sector_coorientation(bc: BranchedComplex, sector_index: int, flipped_dc: int | None = None) -> BranchedComplex:
    """Reverse one sector's coorientation.

    Args:
        bc: Complex to modify (left untouched)
        sector_index: Sector to flip
        flipped_dc: Corner count in the flipped state; defaults to the
            sector's recorded ``dc_flipped``

    Returns:
        New BranchedComplex; the old corner count is kept as ``dc_flipped`` so
        flipping twice restores the original

    Raises:
        BranchedError: Unknown sector or no flipped-corner data
    """
    if not 0 <= sector_index < len(bc.sectors):
        raise BranchedError(f"no sector {sector_index}", sector=sector_index)
    sector = bc.sectors[sector_index]
    new_dc = flipped_dc if flipped_dc is not None else sector.dc_flipped
    if new_dc is None:
        raise BranchedError(f"missing flipped-corner data for sector {sector_index}", sector=sector_index)
    chain = tuple((cell, -coeff) for cell, coeff in sector.chain) if sector.chain is not None else None
    flipped = Sector(
        index=sector.index,
        euler_char=sector.euler_char,
        corner_count=new_dc,
        region_pos=sector.region_neg,
        region_neg=sector.region_pos,
        chain=chain,
        dc_flipped=sector.corner_count,
        label=sector.label,
    )
    return bc.with_sector(flipped)
