"""CLI entry point for eulergraph."""

import argparse
import json
import logging
import sys
from pathlib import Path

from eulergraph.branched import (
    BranchedStorage,
    check_cycle,
    graph_class,
    maw_dual_graph,
    maw_euler_characteristic,
    swap_difference_class,
)
from eulergraph.checks import CheckReport
from eulergraph.config import Config
from eulergraph.exceptions import EulerGraphError, HomologyError, UsageError
from eulergraph.homology import HomologyClass, cohomology_groups, homology_groups
from eulergraph.orientations import (
    EdgeOrientation,
    dual_branched_complex,
    enumerate_partitioned,
    euler_class,
    euler_cochain,
    is_acyclic,
)
from eulergraph.reporting import Report
from eulergraph.taut import TautStructure, check_taut, find_taut_structures, lackenby_classes
from eulergraph.triangulation import (
    Triangulation,
    TriangulationStorage,
    dual_chain_complex,
    vertex_links,
)

logger = logging.getLogger("eulergraph.cli")


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting on bad input."""

    def error(self, message):
        raise UsageError(message, usage=self.format_usage().strip())


def load_triangulation(path: str, report: Report) -> Triangulation:
    """Digest and parse a triangulation file."""
    report.add_input(path)
    return TriangulationStorage().load(path)


def build_parser(config: Config) -> ArgumentParser:
    """Build the command-line parser; defaults come from ``config``."""
    output = ArgumentParser(add_help=False)
    group = output.add_mutually_exclusive_group()
    group.add_argument("--json", dest="output_format", action="store_const", const="json", help="JSON report (default)")
    group.add_argument("--human", dest="output_format", action="store_const", const="human", help="Plain-text tables")

    parser = ArgumentParser(
        prog="eulergraph",
        description="eulergraph: Euler classes of foliations carried by branched surfaces",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Validate command
    validate_parser = subparsers.add_parser("validate", parents=[output], help="Validate a triangulation")
    validate_parser.add_argument("triangulation", help="Path to a .tri file")
    validate_parser.add_argument("--classes", action="store_true", help="Include every edge, face and vertex class")
    validate_parser.set_defaults(handler=run_validate)

    # Homology command
    homology_parser = subparsers.add_parser("homology", parents=[output], help="Homology of the dual complex")
    homology_parser.add_argument("triangulation", help="Path to a .tri file")
    homology_parser.set_defaults(handler=run_homology)

    # Orientation commands
    orient_parser = subparsers.add_parser("orient", help="Edge orientations")
    orient_sub = orient_parser.add_subparsers(dest="action", required=True)
    enum_parser = orient_sub.add_parser("enum", parents=[output], help="Enumerate acyclic edge orientations")
    enum_parser.add_argument("triangulation", help="Path to a closed .tri file")
    enum_parser.add_argument(
        "--limit", type=int, default=config.enumeration_limit,
        help=f"Stop after N orientations (default: {config.enumeration_limit})",
    )
    enum_parser.add_argument("--count-only", action="store_true", help="Report the count only")
    enum_parser.set_defaults(handler=run_orient_enum)

    euler_parser = subparsers.add_parser("euler", help="Euler class computations")
    euler_sub = euler_parser.add_subparsers(dest="action", required=True)
    dunfield_parser = euler_sub.add_parser("dunfield", parents=[output], help="Euler class of an acyclic orientation")
    dunfield_parser.add_argument("triangulation", help="Path to a closed .tri file")
    dunfield_parser.add_argument("--orient", required=True, help="One '+'/'-' per edge class")
    dunfield_parser.set_defaults(handler=run_euler_dunfield)

    # Taut commands
    taut_parser = subparsers.add_parser("taut", help="Taut ideal triangulations")
    taut_sub = taut_parser.add_subparsers(dest="action", required=True)
    find_parser = taut_sub.add_parser("find", parents=[output], help="Enumerate taut structures")
    find_parser.add_argument("triangulation", help="Path to an ideal .tri file")
    find_parser.add_argument(
        "--limit", type=int, default=config.taut_search_limit, help="Stop after N structures (default: all)"
    )
    find_parser.set_defaults(handler=run_taut_find)
    taut_euler_parser = taut_sub.add_parser("euler", parents=[output], help="Check the Euler class relation")
    taut_euler_parser.add_argument("triangulation", help="Path to an ideal .tri file")
    taut_euler_parser.add_argument("--taut", required=True, help='Taut literal, e.g. "taut 01 23"')
    taut_euler_parser.add_argument(
        "--fan-side", choices=["least", "other"], default="least", help="Edge fan side for rectangle arcs"
    )
    taut_euler_parser.set_defaults(handler=run_taut_euler)

    # Maw graph command
    maw_parser = subparsers.add_parser("maw", help="Maw dual graphs")
    maw_sub = maw_parser.add_subparsers(dest="action", required=True)
    graph_parser = maw_sub.add_parser("graph", parents=[output], help="Maw dual graph of a branched complex")
    graph_parser.add_argument("complex", help="Path to a branched complex JSON file")
    graph_parser.add_argument("--html", help="Also write an interactive HTML view")
    graph_parser.set_defaults(handler=run_maw_graph)

    # Swap command
    swap_parser = subparsers.add_parser("swap", parents=[output], help="Class change from reversing a disk")
    swap_parser.add_argument("--k", type=int, required=True, help="Components of the disk boundary on the sutures")
    swap_parser.add_argument("--delta", required=True, help='Class as JSON, e.g. "[1]" or {"free": [], "torsion": [...]}')
    swap_parser.set_defaults(handler=run_swap)

    return parser


def run(argv: list[str], config: Config | None = None) -> tuple[Report, int]:
    """Execute one command.

    Args:
        argv: Arguments without the program name
        config: Settings; loaded from config.yaml and the environment when omitted

    Returns:
        Tuple of (report, exit code): 0 all checks pass, 1 a check failed,
        2 an input error
    """
    config = config or Config.from_yaml()
    report = Report(command=list(argv), output_format=config.output_format)
    try:
        args = build_parser(config).parse_args(argv)
        if getattr(args, "output_format", None):
            report.output_format = args.output_format
        if not args.command or not hasattr(args, "handler"):
            raise UsageError("missing command")
        args.handler(args, config, report)
    except EulerGraphError as exc:
        report.error = exc.to_dict()
    except OSError as exc:
        report.error = {"error": "io", "message": f"{exc.strerror or exc}: {exc.filename}"}
    except Exception as exc:  # noqa: BLE001
        logger.exception("internal error")
        report.error = {"error": "internal", "message": f"{type(exc).__name__}: {exc}"}
    return report, report.exit_code


def main():
    """Main entry point for the CLI."""
    try:
        config = Config.from_yaml()
    except EulerGraphError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        sys.exit(2)
    logging.basicConfig(
        level=config.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    report, code = run(sys.argv[1:], config)
    sys.stdout.write(report.render())
    sys.exit(code)


def run_validate(args, config: Config, report: Report) -> None:
    """Parse a triangulation and report its classes."""
    tri = load_triangulation(args.triangulation, report)
    report.results["triangulation"] = tri.summary()
    report.results["vertex_links"] = vertex_links(tri)

    check = CheckReport("structure")
    degrees = sum(e.degree for e in tri.edge_classes)
    if degrees != 6 * tri.tet_count:
        check.add("degree_sum", "edges", f"degrees sum to {degrees}, expected {6 * tri.tet_count}")
    if tri.is_closed:
        euler = len(tri.vertex_classes) - len(tri.edge_classes) + len(tri.face_classes) - tri.tet_count
        if euler != 0:
            check.add("euler_count", "triangulation", f"V - E + F - T = {euler}")
    check.details["dual_dimensions"] = list(dual_chain_complex(tri).dimensions)
    report.checks.append(check)
    if args.classes:
        report.results["classes"] = tri.to_dict()


def run_homology(args, config: Config, report: Report) -> None:
    """Report homology and cohomology of the dual complex in every degree."""
    tri = load_triangulation(args.triangulation, report)
    complex_ = dual_chain_complex(tri)
    degrees = range(complex_.top + 1)
    report.results["kind"] = tri.kind
    report.results["homology"] = {str(k): homology_groups(complex_, k).to_dict() for k in degrees}
    report.results["cohomology"] = {str(k): cohomology_groups(complex_, k).to_dict() for k in degrees}


def run_orient_enum(args, config: Config, report: Report) -> None:
    """Enumerate acyclic edge orientations."""
    tri = load_triangulation(args.triangulation, report)
    if args.limit is not None and args.limit < 1:
        raise UsageError("--limit must be positive")
    orientations = enumerate_partitioned(tri, args.limit, config.worker_count())
    literals = [o.literal for o in orientations]
    report.results["edge_classes"] = len(tri.edge_classes)
    report.results["unorientable_edges"] = [e.index for e in tri.edge_classes if not e.orientable_flag]
    report.results["count"] = len(literals)
    report.results["limit_reached"] = args.limit is not None and len(literals) >= args.limit
    if not args.count_only:
        report.results["orientations"] = literals

    check = CheckReport("reversal_closed")
    if not report.results["limit_reached"]:
        present = set(literals)
        for o in orientations:
            if o.reversed().literal not in present:
                check.add("missing_reversal", o.literal, f"{o.reversed().literal} not enumerated")
    report.checks.append(check)


def run_euler_dunfield(args, config: Config, report: Report) -> None:
    """Euler cochain and class of one acyclic orientation."""
    tri = load_triangulation(args.triangulation, report)
    orientation = EdgeOrientation.parse(args.orient)
    report.inputs["orient"] = orientation.literal

    acyclic = CheckReport("acyclic")
    if not is_acyclic(tri, orientation):
        acyclic.add("cyclic_face", orientation.literal, "some face boundary is a directed cycle")
    report.checks.append(acyclic)
    if not acyclic.passed:
        return

    cochain = euler_cochain(tri, orientation)
    cocycle = CheckReport("cocycle")
    if cochain.is_cocycle:
        report.results["euler"] = euler_class(tri, orientation).to_dict()
    else:
        cocycle.add("coboundary", "phi", f"delta phi = {list(cochain.coboundary)}")
        report.results["euler"] = {"orientation": orientation.literal, "cochain": cochain.to_dict(), "class": None}
    report.checks.append(cocycle)

    bc = dual_branched_complex(tri, orientation)
    graph = maw_dual_graph(bc)
    agreement = CheckReport("maw_agreement")
    for sector, phi in zip(bc.sectors, cochain.values):
        if maw_euler_characteristic(sector) != phi:
            agreement.add("weight", f"edge {sector.index}", f"chi_m {maw_euler_characteristic(sector)} != phi {phi}")
    report.checks.append(agreement)

    balance = check_cycle(graph, bc)
    report.results["maw_regions"] = balance.details["regions"]
    balanced = CheckReport("maw_balance")
    balanced.violations = [v for v in balance.violations if v.kind == "unbalanced"]
    report.checks.append(balanced)


def run_taut_find(args, config: Config, report: Report) -> None:
    """Enumerate taut structures and re-verify each one."""
    tri = load_triangulation(args.triangulation, report)
    structures = list(find_taut_structures(tri, args.limit))
    report.results["count"] = len(structures)
    report.results["structures"] = [ts.literal for ts in structures]
    verified = CheckReport("verified")
    for ts in structures:
        if not check_taut(tri, ts).passed:
            verified.add("taut", ts.literal, "search result fails the taut check")
    report.checks.append(verified)


def run_taut_euler(args, config: Config, report: Report) -> None:
    """Build G, beta and the maw graphs of a taut structure and check their relations."""
    tri = load_triangulation(args.triangulation, report)
    ts = TautStructure.parse(args.taut)
    report.inputs["taut"] = ts.literal

    taut_check = check_taut(tri, ts)
    report.checks.append(taut_check)
    if not taut_check.passed:
        return

    result = lackenby_classes(tri, ts, fan_side=args.fan_side)
    data = result.to_dict()
    data.pop("checks")
    data.pop("passed")
    report.results["lackenby"] = data
    report.checks.extend(result.checks)


def run_maw_graph(args, config: Config, report: Report) -> None:
    """Maw dual graph of a branched complex file, with its cycle check."""
    report.add_input(args.complex)
    bc = BranchedStorage().load_json(args.complex)
    graph = maw_dual_graph(bc)
    report.results["graph"] = graph.to_dict()
    report.checks.append(check_cycle(graph, bc))

    if bc.complex is not None and bc.sectors and all(s.chain is not None for s in bc.sectors):
        chain_check = CheckReport("graph_cycle")
        try:
            report.results["class"] = graph_class(graph, bc.complex).to_dict()
        except HomologyError as exc:
            chain_check.add("not_a_cycle", "weighted chain", exc.message)
        report.checks.append(chain_check)

    if args.html:
        from eulergraph.visualization import MawGraphVisualizer

        visualizer = MawGraphVisualizer(graph, bc)
        visualizer.generate()
        visualizer.save(args.html)
        report.results["html"] = str(Path(args.html))


def parse_delta(text: str) -> HomologyClass:
    """Read ``--delta``: a JSON list of free coordinates or a class object."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--delta is not valid JSON: {exc.msg}") from exc
    if isinstance(data, list):
        bad = [x for x in data if isinstance(x, bool) or not isinstance(x, int)]
        if bad:
            raise UsageError(f"--delta coordinates must be integers, got {bad[0]!r}")
        return HomologyClass(degree=1, free=tuple(data), torsion=(), fingerprint="")
    if isinstance(data, dict):
        return HomologyClass.from_dict(data)
    raise UsageError("--delta must be a JSON list or object")


def run_swap(args, config: Config, report: Report) -> None:
    """Evaluate (2 - k) * delta."""
    delta = parse_delta(args.delta)
    difference = swap_difference_class(args.k, delta)
    report.results["k"] = args.k
    report.results["delta"] = delta.to_dict()
    report.results["difference"] = difference.to_dict()
    report.results["is_zero"] = difference.is_zero()


if __name__ == "__main__":
    main()
