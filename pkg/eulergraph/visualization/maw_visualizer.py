"""Interactive HTML rendering of maw dual graphs with PyVis."""

import logging
from pathlib import Path

from pyvis.network import Network

from ..branched import BranchedComplex, MawGraph

logger = logging.getLogger(__name__)


class MawGraphVisualizer:
    """Draw regions as nodes and sectors as weighted arrows."""

    WEIGHT_COLORS = {
        "positive": "#2e86de",
        "negative": "#e74c3c",
        "zero": "#95a5a6",
    }

    def __init__(self, graph: MawGraph, bc: BranchedComplex | None = None):
        """Initialize the visualizer.

        Args:
            graph: Maw dual graph to draw
            bc: Complex the graph came from, used for labels and tooltips
        """
        self.graph = graph
        self.bc = bc
        self.network = None

    def generate(self) -> None:
        """Build the PyVis network."""
        self.network = Network(
            height="750px",
            width="100%",
            bgcolor="#ffffff",
            font_color="#000000",
            directed=True,
            notebook=False,
            cdn_resources="remote",
        )
        self.network.barnes_hut(
            gravity=-2000,
            central_gravity=0.3,
            spring_length=180,
            spring_strength=0.05,
            damping=0.09,
        )
        for region in range(self.graph.region_count):
            self._add_region(region)
        for arc in self.graph.arcs:
            self._add_arc(arc)
        self.network.set_options(
            """
            {
                "edges": {
                    "font": {"size": 14, "align": "middle"},
                    "smooth": {"type": "curvedCW", "roundness": 0.2}
                },
                "interaction": {"hover": true, "tooltipDelay": 100}
            }
            """
        )

    def _add_region(self, index: int) -> None:
        label = f"R{index}"
        title = f"<b>region {index}</b>"
        if self.bc is not None:
            region = self.bc.regions[index]
            label = region.label or label
            title += f"<br>chi(R+) = {region.r_plus_char}"
        self.network.add_node(index, label=label, title=title, color="#f5cd79", size=20, borderWidth=2)

    def _add_arc(self, arc) -> None:
        if arc.weight > 0:
            color = self.WEIGHT_COLORS["positive"]
        elif arc.weight < 0:
            color = self.WEIGHT_COLORS["negative"]
        else:
            color = self.WEIGHT_COLORS["zero"]
        title = f"sector {arc.sector}: chi_m = {arc.weight}"
        if self.bc is not None:
            sector = self.bc.sectors[arc.sector]
            title += f"<br>chi = {sector.euler_char}, dc = {sector.corner_count}"
            if sector.label:
                title = f"{sector.label}<br>" + title
        self.network.add_edge(
            arc.source,
            arc.target,
            label=str(arc.weight),
            title=title,
            width=1 + min(abs(arc.weight), 4),
            color=color,
            arrows="to",
        )

    def save(self, path: str | Path) -> None:
        """Save the visualization as an HTML file.

        Args:
            path: Output file path
        """
        if not self.network:
            raise ValueError("Generate visualization first by calling generate()")
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        self.network.save_graph(str(output))
        logger.info("maw graph written to %s", output)
