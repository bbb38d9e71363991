"""Tests for triangulation parsing, cell classes and the dual complex."""

import json

import networkx as nx
import pytest

from eulergraph.exceptions import TriangulationError, TriangulationSyntaxError
from eulergraph.homology import IntMatrix
from eulergraph.triangulation import (
    TriangulationBuilder,
    TriangulationStorage,
    dual_chain_complex,
    edge_classes,
    format_triangulation,
    parse_triangulation,
    vertex_links,
)
from eulergraph.triangulation.models import EDGE_PAIRS, perm_inverse, perm_sign


def brute_force_edge_partition(tri) -> set[frozenset]:
    """Edge orbits under the face identifications, via connected components."""
    graph = nx.Graph()
    for t in range(tri.tet_count):
        for a, b in EDGE_PAIRS:
            graph.add_node((t, (a, b)))
            for f in range(4):
                if f in (a, b):
                    continue
                g = tri.gluing(t, f)
                image = tuple(sorted((g.perm[a], g.perm[b])))
                graph.add_edge((t, (a, b)), (g.tet, image))
    return {frozenset(component) for component in nx.connected_components(graph)}


class TestParser:
    """Tests for parse_triangulation."""

    def test_comments_and_blank_lines(self):
        """Comments and blank lines are ignored."""
        text = "# header comment\n\ntri 1   # one tet\nglue 0 0 -> 0 1230\n\nglue 0 2 -> 0 2031  # last\n"

        tri = parse_triangulation(text)

        assert tri.tet_count == 1
        assert len(tri.face_classes) == 2

    def test_bad_permutation_token(self):
        """A malformed permutation is reported at its column."""
        text = "tri 1\nglue 0 0 -> 0 12x0\nglue 0 2 -> 0 2031\n"

        with pytest.raises(TriangulationSyntaxError) as excinfo:
            parse_triangulation(text)

        assert excinfo.value.line == 2
        assert excinfo.value.column == 15

    def test_bad_header(self):
        """Anything before the header is a syntax error at line 1."""
        with pytest.raises(TriangulationSyntaxError) as excinfo:
            parse_triangulation("  trx 2\n")

        assert (excinfo.value.line, excinfo.value.column) == (1, 3)

    def test_missing_header(self):
        """Empty documents have no header."""
        with pytest.raises(TriangulationSyntaxError):
            parse_triangulation("")

    def test_too_few_glue_lines(self):
        """Exactly 2N glue lines are required."""
        with pytest.raises(TriangulationSyntaxError) as excinfo:
            parse_triangulation("tri 1\nglue 0 0 -> 0 1230\n")

        assert excinfo.value.line == 3

    def test_too_many_glue_lines(self):
        """Surplus glue lines are rejected where they appear."""
        text = "tri 1\nglue 0 0 -> 0 1230\nglue 0 2 -> 0 2031\nglue 0 2 -> 0 2031\n"

        with pytest.raises(TriangulationSyntaxError) as excinfo:
            parse_triangulation(text)

        assert excinfo.value.line == 4

    def test_self_glued_face(self):
        """A face may not be glued to itself."""
        with pytest.raises(TriangulationError) as excinfo:
            parse_triangulation("tri 1\nglue 0 0 -> 0 0123\nglue 0 2 -> 0 2031\n")

        assert excinfo.value.details["line"] == 2

    def test_face_glued_twice(self):
        """Gluing an already glued face is an error."""
        with pytest.raises(TriangulationError, match="glued twice"):
            parse_triangulation("tri 1\nglue 0 0 -> 0 1230\nglue 0 1 -> 0 1023\n")

    def test_tetrahedron_out_of_range(self):
        """Tetrahedron indices must be below N."""
        with pytest.raises(TriangulationError, match="out of range"):
            parse_triangulation("tri 1\nglue 0 0 -> 1 1230\nglue 0 2 -> 0 2031\n")

    def test_non_orientable(self):
        """An orientation-preserving self-gluing is rejected."""
        with pytest.raises(TriangulationError, match="not orientable"):
            parse_triangulation("tri 1\nglue 0 0 -> 0 1032\nglue 0 2 -> 0 2031\n")

    def test_error_dict(self):
        """Syntax errors serialize with kind, line and column."""
        with pytest.raises(TriangulationSyntaxError) as excinfo:
            parse_triangulation("tri x\n")

        data = excinfo.value.to_dict()
        assert data["error"] == "syntax"
        assert data["line"] == 1
        assert data["column"] == 1


class TestBuilder:
    """Tests for TriangulationBuilder."""

    def test_unglued_face(self):
        """Every face must be glued before build."""
        builder = TriangulationBuilder(1)
        builder.add_gluing(0, 0, 0, (1, 2, 3, 0))

        with pytest.raises(TriangulationError, match="not glued"):
            builder.build()

    def test_inverse_gluing_recorded(self):
        """Adding one side records the inverse on the partner face."""
        builder = TriangulationBuilder(1)
        builder.add_gluing(0, 0, 0, (1, 2, 3, 0))
        builder.add_gluing(0, 2, 0, (2, 0, 3, 1))

        tri = builder.build()

        assert tri.gluing(0, 1).tet == 0
        assert tri.gluing(0, 1).perm == perm_inverse((1, 2, 3, 0))

    def test_not_a_permutation(self):
        """Permutations must use each of 0..3 once."""
        with pytest.raises(TriangulationError):
            TriangulationBuilder(1).add_gluing(0, 0, 0, (1, 1, 2, 3))


class TestCellClasses:
    """Tests for edge, face and vertex classes of the shipped triangulations."""

    def test_manifest_counts(self, all_triangulations, manifest):
        """Kind, vertex count, edge degrees and face count match the manifest."""
        for name, tri in all_triangulations.items():
            expected = manifest[name]
            assert tri.kind == expected["kind"], name
            assert len(tri.vertex_classes) == expected["vertices"], name
            assert [e.degree for e in tri.edge_classes] == expected["edge_degrees"], name
            assert len(tri.face_classes) == expected["faces"], name

    def test_degree_sum(self, all_triangulations):
        """Edge degrees add up to six per tetrahedron."""
        for tri in all_triangulations.values():
            assert sum(e.degree for e in tri.edge_classes) == 6 * tri.tet_count

    def test_edge_classes_match_orbits(self, all_triangulations):
        """Walked edge classes equal the brute-force identification orbits."""
        for name, tri in all_triangulations.items():
            walked = {frozenset(e.key for e in edge.embeddings) for edge in edge_classes(tri)}
            assert walked == brute_force_edge_partition(tri), name

    def test_canonical_embedding_is_least(self, all_triangulations):
        """Classes are numbered and directed by their least embedding."""
        for tri in all_triangulations.values():
            firsts = [min(e.key for e in edge.embeddings) for edge in tri.edge_classes]
            assert firsts == sorted(firsts)
            for edge in tri.edge_classes:
                assert edge.canonical.key == min(e.key for e in edge.embeddings)
                assert edge.canonical.tail < edge.canonical.head

    def test_edge_lookup_signs(self, fig8):
        """Reversing an embedding flips the sign of its lookup."""
        for edge in fig8.edge_classes:
            for e in edge.embeddings:
                assert fig8.edge_of(e.tet, e.tail, e.head) == (edge.index, 1)
                assert fig8.edge_of(e.tet, e.head, e.tail) == (edge.index, -1)

    def test_edges_orientable(self, all_triangulations):
        """No shipped edge class reverses under transport."""
        for tri in all_triangulations.values():
            assert all(e.orientable_flag for e in tri.edge_classes)

    def test_orientation_reverses_every_gluing(self, all_triangulations):
        """Tetrahedron signs make each gluing orientation-reversing."""
        for tri in all_triangulations.values():
            for t in range(tri.tet_count):
                for f in range(4):
                    g = tri.gluing(t, f)
                    assert tri.orientation[t] * tri.orientation[g.tet] * perm_sign(g.perm) == -1

    def test_face_classes_pair_embeddings(self, all_triangulations):
        """Each face embedding lies in exactly one face class."""
        for tri in all_triangulations.values():
            seen = [f for fc in tri.face_classes for f in fc.embeddings]
            assert len(seen) == len(set(seen)) == 4 * tri.tet_count

    def test_vertex_links(self, fig8, lens5, s3_two_vertex):
        """Ideal cusps are tori, closed vertices are spheres."""
        assert [v["link_type"] for v in vertex_links(fig8)] == ["torus"]
        assert [v["link_type"] for v in vertex_links(lens5)] == ["sphere"]
        links = vertex_links(s3_two_vertex)
        assert [v["link_euler_characteristic"] for v in links] == [2, 2]
        assert [v["corners"] for v in links] == [[[0, 0], [0, 1]], [[0, 2], [0, 3]]]

    def test_summary(self, fig8):
        """Summary reports the derived counts."""
        summary = fig8.summary()

        assert summary["kind"] == "ideal"
        assert summary["edges"] == 2
        assert summary["vertex_links"] == ["torus"]


class TestDualComplex:
    """Tests for dual_chain_complex."""

    def test_boundaries_compose_to_zero(self, all_triangulations):
        """Consecutive boundary maps multiply to zero."""
        for tri in all_triangulations.values():
            complex_ = dual_chain_complex(tri)
            for k in range(2, complex_.top + 1):
                assert (complex_.boundary(k - 1) @ complex_.boundary(k)).is_zero()

    def test_default_top(self, fig8, lens5):
        """Closed input gets dual 3-cells, ideal input stops at degree 2."""
        assert dual_chain_complex(lens5).top == 3
        assert dual_chain_complex(fig8).top == 2

    def test_ideal_has_no_three_cells(self, fig8):
        """Asking for dual 3-cells of an ideal triangulation fails."""
        with pytest.raises(TriangulationError, match="no dual 3-cells"):
            dual_chain_complex(fig8, top=3)

    def test_lens_boundary(self, lens5):
        """The Z/5 lens space has the expected dual 2-boundary."""
        assert dual_chain_complex(lens5).boundary(2) == IntMatrix.from_rows([[1, 2], [-2, 1]])

    def test_three_boundary_two_vertex(self, s3_two_vertex):
        """Only the edge joining the two vertices has non-zero 3-boundary."""
        expected = IntMatrix.from_rows([[0, 0], [-1, 1], [0, 0]])

        assert dual_chain_complex(s3_two_vertex).boundary(3) == expected

    def test_one_vertex_three_boundary_vanishes(self, lens5, lens4, s3):
        """Edge loops at a single vertex have zero 3-boundary."""
        for tri in (lens5, lens4, s3):
            assert dual_chain_complex(tri).boundary(3).is_zero()

    def test_labels(self, fig8):
        """Cells carry readable labels."""
        complex_ = dual_chain_complex(fig8)

        assert complex_.labels[0] == ["tet0", "tet1"]
        assert complex_.labels[2] == ["edge0", "edge1"]


class TestStorage:
    """Tests for TriangulationStorage."""

    def test_round_trip(self, tmp_path, all_triangulations):
        """Saved triangulations reload with identical gluings and classes."""
        storage = TriangulationStorage()
        for name, tri in all_triangulations.items():
            path = tmp_path / name
            storage.save(tri, path)
            loaded = storage.load(path)

            assert loaded.gluings == tri.gluings
            assert loaded.to_dict() == tri.to_dict()

    def test_format_line_count(self, fig8):
        """One glue line per face class after the header."""
        lines = format_triangulation(fig8).splitlines()

        assert lines[0] == "tri 2"
        assert len(lines) == 1 + 4

    def test_save_report(self, tmp_path, fig8):
        """The class report is JSON with edge, face and vertex classes."""
        path = tmp_path / "reports" / "fig8.json"

        TriangulationStorage().save_report(fig8, path)

        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        assert data["kind"] == "ideal"
        assert len(data["edge_classes"]) == 2

    def test_invalid_utf8(self, tmp_path):
        """Undecodable bytes are a syntax error located at the bad byte."""
        path = tmp_path / "binary.tri"
        path.write_bytes(b"tri 1\nglue \xff\xfe\n")

        with pytest.raises(TriangulationSyntaxError, match="invalid UTF-8 byte 0xff") as excinfo:
            TriangulationStorage().load(path)

        assert (excinfo.value.line, excinfo.value.column) == (2, 6)

