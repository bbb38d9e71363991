"""Tests for branched complexes, maw dual graphs and the swap formula."""

import random

import pytest

from eulergraph.branched import (
    BranchedComplex,
    BranchedStorage,
    MawGraph,
    Region,
    Sector,
    check_cycle,
    flip_sector_coorientation,
    graph_chain,
    graph_class,
    maw_dual_graph,
    maw_euler_characteristic,
    swap_consistency,
    swap_difference_class,
)
from eulergraph.exceptions import BranchedError
from eulergraph.homology import HomologyClass, cycle_class


@pytest.fixture
def torus_bc(fixtures_dir) -> BranchedComplex:
    return BranchedStorage().load_json(fixtures_dir / "torus_complex.json")


@pytest.fixture
def fig8_flat(fixtures_dir) -> BranchedComplex:
    return BranchedStorage().load_json(fixtures_dir / "fig8_flat.json")


def sector(index=0, chi=1, dc=0, pos=0, neg=0, **kwargs) -> Sector:
    return Sector(index=index, euler_char=chi, corner_count=dc, region_pos=pos, region_neg=neg, **kwargs)


class TestMawEulerCharacteristic:
    """Tests for maw_euler_characteristic."""

    @pytest.mark.parametrize(
        "chi,dc,expected",
        [(1, 0, 1), (1, 2, 0), (1, 4, -1), (0, 2, -1), (-1, 6, -4)],
    )
    def test_values(self, chi, dc, expected):
        """chi minus half the corner count."""
        assert maw_euler_characteristic(sector(chi=chi, dc=dc)) == expected

    def test_odd_corner_count(self):
        """Odd corner counts are inconsistent corner data."""
        with pytest.raises(BranchedError, match="odd corner count"):
            maw_euler_characteristic(sector(dc=3))


class TestBranchedComplex:
    """Tests for BranchedComplex validation."""

    def test_product_condition(self):
        """R+ and R- characteristics must agree."""
        with pytest.raises(BranchedError, match="not a product"):
            BranchedComplex(sectors=(), regions=(Region(0, r_plus_char=1, r_minus_char=0),))

    def test_region_out_of_range(self):
        """Sectors must border existing regions."""
        with pytest.raises(BranchedError, match="refers to region"):
            BranchedComplex(sectors=(sector(pos=1),), regions=(Region(0),))

    def test_negative_corner_count(self):
        """Corner counts are non-negative."""
        with pytest.raises(BranchedError):
            BranchedComplex(sectors=(sector(dc=-2),), regions=(Region(0),))

    def test_bad_coorientation(self):
        """Only outward and inward boundary coorientations exist."""
        with pytest.raises(BranchedError):
            BranchedComplex(sectors=(), regions=(), boundary_coorientation="sideways")

    def test_chain_outside_complex(self, torus_bc):
        """Sector chains must use 1-cells of the ambient complex."""
        with pytest.raises(BranchedError, match="chain leaves"):
            BranchedComplex(
                sectors=(sector(chain=((5, 1),)),),
                regions=(Region(0),),
                complex=torus_bc.complex,
            )

    def test_malformed_dict(self):
        """Missing sector keys raise BranchedError."""
        with pytest.raises(BranchedError, match="malformed"):
            BranchedComplex.from_dict({"sectors": [{"chi": 1}], "regions": [{}]})

    @pytest.mark.parametrize(
        "field, value",
        [("chi", 1.9), ("dc", 2.5), ("dc", True), ("region_pos", "0"), ("dc_flipped", 4.0)],
    )
    def test_non_integer_fields(self, field, value):
        """Sector numbers must be JSON integers; floats are not truncated."""
        raw = {"chi": 1, "dc": 2, "region_pos": 0, "region_neg": 0}
        raw[field] = value

        with pytest.raises(BranchedError, match=f"{field} of entry 0 must be an integer"):
            BranchedComplex.from_dict({"sectors": [raw], "regions": [{}]})

    def test_non_integer_region(self):
        """Region characteristics must be JSON integers."""
        with pytest.raises(BranchedError, match="r_plus_chi"):
            BranchedComplex.from_dict({"sectors": [], "regions": [{"r_plus_chi": 0.5}]})


class TestMawDualGraph:
    """Tests for maw_dual_graph and check_cycle."""

    def test_arcs(self, fig8_flat):
        """One arc per sector, from region_neg to region_pos, weighted by chi_m."""
        graph = maw_dual_graph(fig8_flat)

        assert graph.weights() == [1, 1, 1, 1, -1, -1]
        assert (graph.arcs[0].source, graph.arcs[0].target) == (0, 1)
        assert (graph.arcs[4].source, graph.arcs[4].target) == (1, 0)
        assert graph.graph.number_of_edges() == 6
        assert graph.graph.number_of_nodes() == 2

    def test_flattening_is_a_cycle(self, fig8_flat):
        """Each region of the flattened complex has in- and out-weight 1."""
        report = check_cycle(maw_dual_graph(fig8_flat), fig8_flat)

        assert report.passed
        assert report.details["regions"] == [
            {"region": 0, "in": 1, "out": 1},
            {"region": 1, "in": 1, "out": 1},
        ]

    def test_flipped_rectangle_unbalances(self, fig8_flat):
        """Reversing one rectangle breaks conservation at both regions."""
        flipped = flip_sector_coorientation(fig8_flat, 4)

        report = check_cycle(maw_dual_graph(flipped), flipped)

        assert not report.passed
        assert {v.kind for v in report.violations} >= {"unbalanced"}

    def test_wrong_corner_data(self, fig8_flat):
        """Rectangles with six corners give the wrong region values."""
        bc = fig8_flat.with_sector(
            Sector(4, 1, 6, region_pos=0, region_neg=1, label="rectangle0")
        ).with_sector(Sector(5, 1, 6, region_pos=1, region_neg=0, label="rectangle1"))

        report = check_cycle(maw_dual_graph(bc), bc)

        assert [v.kind for v in report.violations] == ["region_value"] * 4

    def test_arc_count_mismatch(self, fig8_flat):
        """A graph built for another complex is reported, not crashed on."""
        report = check_cycle(MawGraph(arcs=(), region_count=2), fig8_flat)

        assert [v.kind for v in report.violations] == ["arc_count"]

    def test_torus_loops(self, torus_bc):
        """Self-loops count once in and once out."""
        graph = maw_dual_graph(torus_bc)

        assert graph.weights() == [1, 0]
        assert check_cycle(graph, torus_bc).passed

    def test_graph_class(self, torus_bc):
        """The weighted chain of the torus complex is the first generator."""
        graph = maw_dual_graph(torus_bc)

        assert graph_chain(graph, torus_bc.complex) == (1, 0)
        cls = graph_class(graph, torus_bc.complex)
        assert cls.free == (1, 0)
        assert cls.torsion == ()

    def test_missing_chains(self, fig8_flat, torus_bc):
        """Classes need a chain on every sector."""
        with pytest.raises(BranchedError, match="without chain"):
            graph_chain(maw_dual_graph(fig8_flat), torus_bc.complex)


class TestFlip:
    """Tests for flip_sector_coorientation."""

    def test_flip_twice_is_identity(self, fig8_flat, torus_bc):
        """Flipping the same sector twice restores the complex."""
        assert flip_sector_coorientation(flip_sector_coorientation(fig8_flat, 5), 5) == fig8_flat
        twice = flip_sector_coorientation(flip_sector_coorientation(torus_bc, 0, flipped_dc=2), 0)
        assert twice.sectors[0].corner_count == 0
        assert twice.sectors[0].chain == torus_bc.sectors[0].chain

    def test_flip_negates_chain(self, torus_bc):
        """The dual arc reverses with the coorientation."""
        flipped = flip_sector_coorientation(torus_bc, 0, flipped_dc=2)

        assert flipped.sectors[0].chain == ((0, -1),)
        assert flipped.sectors[0].dc_flipped == 0
        assert torus_bc.sectors[0].chain == ((0, 1),)

    def test_missing_flipped_corner_data(self, fig8_flat):
        """Hexagons carry no flipped corner count."""
        with pytest.raises(BranchedError, match="flipped-corner"):
            flip_sector_coorientation(fig8_flat, 0)

    def test_unknown_sector(self, fig8_flat):
        """Sector indices are checked."""
        with pytest.raises(BranchedError):
            flip_sector_coorientation(fig8_flat, 17, flipped_dc=0)


class TestSwap:
    """Tests for swap_difference_class and swap_consistency."""

    @pytest.mark.parametrize("k,factor", [(2, 0), (4, -2), (6, -4), (8, -6)])
    def test_formula(self, k, factor):
        """The difference class is (2 - k) times delta."""
        delta = HomologyClass(degree=1, free=(3, -1), torsion=((5, 2),), fingerprint="t")

        result = swap_difference_class(k, delta)

        assert result == factor * delta

    def test_k_two_is_zero(self):
        """Swapping a disk meeting the sutures twice changes nothing."""
        delta = HomologyClass(degree=1, free=(7,), torsion=(), fingerprint="t")

        assert swap_difference_class(2, delta).is_zero()

    @pytest.mark.parametrize("k", [0, 1, 3, -2])
    def test_invalid_k(self, k):
        """Odd or too small intersection counts are rejected."""
        delta = HomologyClass(degree=1, free=(1,), torsion=(), fingerprint="t")

        with pytest.raises(BranchedError):
            swap_difference_class(k, delta)

    def test_linear_in_delta(self):
        """Random deltas with torsion: the formula is additive."""
        rng = random.Random(42)
        for _ in range(100):
            k = rng.choice([2, 4, 6, 8, 10])
            a = HomologyClass(1, (rng.randint(-9, 9),), ((6, rng.randint(0, 5)),), "t")
            b = HomologyClass(1, (rng.randint(-9, 9),), ((6, rng.randint(0, 5)),), "t")

            assert swap_difference_class(k, a + b) == swap_difference_class(k, a) + swap_difference_class(k, b)

    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_consistency_with_graphs(self, torus_bc, k):
        """Reversing the disk with 2k flipped corners shifts the class by (2 - k) delta."""
        minus = flip_sector_coorientation(torus_bc, 0, flipped_dc=2 * k)
        delta = cycle_class(torus_bc.complex, (1, 0), 1)

        report = swap_consistency(maw_dual_graph(torus_bc), maw_dual_graph(minus), torus_bc.complex, k, delta)

        assert report.passed
        assert report.details["observed"] == report.details["expected"]

    def test_consistency_failure(self, torus_bc):
        """Wrong corner data for the flipped disk is reported."""
        minus = flip_sector_coorientation(torus_bc, 0, flipped_dc=6)
        delta = cycle_class(torus_bc.complex, (1, 0), 1)

        report = swap_consistency(maw_dual_graph(torus_bc), maw_dual_graph(minus), torus_bc.complex, 4, delta)

        assert not report.passed
        assert report.violations[0].kind == "swap_formula"


class TestBranchedStorage:
    """Tests for BranchedStorage."""

    def test_round_trip(self, tmp_path, torus_bc):
        """Saved complexes reload equal, ambient complex included."""
        storage = BranchedStorage()
        path = tmp_path / "out" / "torus.json"

        storage.save_json(torus_bc, path)
        loaded = storage.load_json(path)

        assert loaded == torus_bc
        assert loaded.complex.fingerprint == torus_bc.complex.fingerprint

    def test_labels_survive(self, torus_bc):
        """Labels are read from JSON."""
        assert torus_bc.sectors[1].label == "annulus along b"
        assert torus_bc.regions[0].label == "ball"

    def test_invalid_json(self, tmp_path):
        """Unparseable files raise BranchedError with a position."""
        path = tmp_path / "bad.json"
        path.write_text('{"sectors": [\n', encoding="utf-8")

        with pytest.raises(BranchedError) as excinfo:
            BranchedStorage().load_json(path)

        assert "line" in excinfo.value.details

    def test_invalid_utf8(self, tmp_path):
        """Undecodable bytes raise BranchedError."""
        path = tmp_path / "binary.json"
        path.write_bytes(b'{"sectors": ["\xff"]}')

        with pytest.raises(BranchedError, match="invalid UTF-8"):
            BranchedStorage().load_json(path)

