"""Validate every *.tri file in a directory and print its invariants."""

import argparse
from pathlib import Path

from eulergraph.config import Config
from eulergraph.exceptions import EulerGraphError
from eulergraph.homology import homology_groups
from eulergraph.orientations import enumerate_acyclic_orientations, euler_class, euler_cochain
from eulergraph.taut import find_taut_structures, lackenby_classes
from eulergraph.triangulation import TriangulationStorage, dual_chain_complex


def scan(path: Path, config: Config) -> None:
    storage = TriangulationStorage()
    tri = storage.load(path)
    summary = tri.summary()
    h1 = homology_groups(dual_chain_complex(tri), 1)
    print(f"  kind:      {summary['kind']}")
    print(f"  cells:     T={summary['tetrahedra']} F={summary['faces']} E={summary['edges']} V={summary['vertices']}")
    print(f"  degrees:   {summary['edge_degrees']}")
    print(f"  H1:        {h1.describe()}")

    if tri.is_closed:
        orientations = list(enumerate_acyclic_orientations(tri, limit=config.enumeration_limit))
        print(f"  acyclic:   {len(orientations)} orientation(s)")
        cocycles = [o for o in orientations if euler_cochain(tri, o).is_cocycle]
        nonzero = [o.literal for o in cocycles if not euler_class(tri, o).is_zero]
        print(f"  cocycles:  {len(cocycles)}")
        print(f"  nonzero e: {len(nonzero)}")
    else:
        structures = list(find_taut_structures(tri, limit=config.taut_search_limit))
        print(f"  taut:      {len(structures)} structure(s)")
        failed = [ts.literal for ts in structures if not lackenby_classes(tri, ts).passed]
        print(f"  failed:    {failed or 'none'}")


def main() -> None:
    parser = argparse.ArgumentParser(description="Scan a directory of triangulations")
    parser.add_argument("directory", nargs="?", default="fixtures", help="Directory with *.tri files")
    args = parser.parse_args()

    config = Config.from_yaml()
    tri_files = sorted(Path(args.directory).glob("*.tri"))

    if not tri_files:
        print("No *.tri files found.")
        return

    for tri_path in tri_files:
        print(f"\n{'='*60}")
        print(f"Scanning: {tri_path.name}")
        print(f"{'='*60}")
        try:
            scan(tri_path, config)
        except EulerGraphError as exc:
            print(f"  error:     [{exc.kind}] {exc.message}")


if __name__ == "__main__":
    main()
