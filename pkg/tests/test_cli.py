"""Tests for the command-line interface, reports and configuration."""

import json
import sys
from pathlib import Path

import pytest

import main
from eulergraph.config import Config
from eulergraph.exceptions import ConfigError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(*argv):
    """Run a command with default settings."""
    return main.run([str(a) for a in argv], Config())


class TestValidate:
    """Tests for the validate command."""

    def test_ideal(self):
        """The figure-eight complement validates as ideal."""
        report, code = run("validate", FIXTURES / "fig8.tri")

        assert code == 0
        assert report.results["triangulation"]["kind"] == "ideal"
        assert report.status == "ok"

    def test_classes_flag(self):
        """--classes adds the full class structure."""
        report, _ = run("validate", FIXTURES / "lens5.tri", "--classes")

        assert len(report.results["classes"]["edge_classes"]) == 2

    def test_input_digest(self):
        """Inputs are recorded with their sha256."""
        report, _ = run("validate", FIXTURES / "s3.tri")

        digest = next(iter(report.inputs.values()))
        assert len(digest) == 64

    def test_missing_file(self):
        """Missing files are input errors."""
        report, code = run("validate", FIXTURES / "missing.tri")

        assert code == 2
        assert report.error["error"] == "io"

    def test_syntax_error(self, tmp_path):
        """Parse errors carry line and column."""
        path = tmp_path / "bad.tri"
        path.write_text("tri 1\nglue 0 0 0 1230\n", encoding="utf-8")

        report, code = run("validate", path)

        assert code == 2
        assert report.error["error"] == "syntax"
        assert report.error["line"] == 2

    def test_binary_file(self, tmp_path):
        """Non-UTF-8 input is a syntax error, not an internal failure."""
        path = tmp_path / "binary.tri"
        path.write_bytes(b"\xff\xfe")

        report, code = run("validate", path)

        assert code == 2
        assert report.error["error"] == "syntax"


class TestUsage:
    """Tests for argument errors."""

    def test_unknown_command(self):
        """Unknown commands exit with 2."""
        report, code = run("frobnicate")

        assert code == 2
        assert report.error["error"] == "usage"

    def test_no_command(self):
        """A bare invocation is a usage error."""
        _, code = run()

        assert code == 2

    def test_missing_required_flag(self):
        """Required flags are enforced."""
        _, code = run("taut", "euler", FIXTURES / "fig8.tri")

        assert code == 2


class TestCommands:
    """Tests for each analysis command."""

    def test_homology(self):
        """Homology of the Z/5 lens space."""
        report, code = run("homology", FIXTURES / "lens5.tri")

        assert code == 0
        assert report.results["homology"]["1"]["group"] == "Z/5"
        assert report.results["cohomology"]["2"]["group"] == "Z/5"

    def test_orient_enum(self):
        """Acyclic orientations of the one-vertex sphere."""
        report, code = run("orient", "enum", FIXTURES / "s3.tri")

        assert code == 0
        assert report.results["orientations"] == ["++", "--"]
        assert report.results["count"] == 2

    def test_orient_enum_count_only(self):
        """--count-only drops the list."""
        report, _ = run("orient", "enum", FIXTURES / "s3_two_vertex.tri", "--count-only")

        assert report.results["count"] == 8
        assert "orientations" not in report.results

    def test_orient_enum_bad_limit(self):
        """Non-positive limits are usage errors."""
        _, code = run("orient", "enum", FIXTURES / "s3.tri", "--limit", "0")

        assert code == 2

    def test_euler_dunfield(self):
        """The sphere's Euler class vanishes."""
        report, code = run("euler", "dunfield", FIXTURES / "s3.tri", "--orient", "++")

        assert code == 0
        assert report.results["euler"]["is_zero"] is True
        assert report.results["euler"]["cochain"]["phi"] == [0, 1]

    def test_euler_dunfield_cyclic(self):
        """Cyclic orientations fail the acyclic check."""
        report, code = run("euler", "dunfield", FIXTURES / "lens5.tri", "--orient", "++")

        assert code == 1
        assert report.checks[0].name == "acyclic"

    def test_euler_dunfield_not_cocycle(self):
        """A cochain with nonzero coboundary fails its check instead of aborting the run."""
        report, code = run("euler", "dunfield", FIXTURES / "non_cocycle.tri", "--orient", "++++")

        assert code == 1
        assert report.error is None
        checks = {check.name: check for check in report.checks}
        assert checks["acyclic"].passed
        assert not checks["cocycle"].passed
        assert "[-2, 2]" in checks["cocycle"].violations[0].detail
        assert not checks["maw_balance"].passed
        assert report.results["euler"]["cochain"]["coboundary"] == [-2, 2]
        assert report.results["euler"]["class"] is None

    def test_euler_dunfield_nonzero(self):
        """S2 x S1 has a nonzero Euler class and passes every check."""
        report, code = run("euler", "dunfield", FIXTURES / "s2xs1.tri", "--orient", "+++")

        assert code == 0
        assert report.results["euler"]["is_zero"] is False
        assert report.results["euler"]["witness"] is None

    def test_taut_find(self):
        """Six taut structures on the figure-eight complement."""
        report, code = run("taut", "find", FIXTURES / "fig8.tri")

        assert code == 0
        assert report.results["count"] == 6

    def test_taut_find_closed(self):
        """Closed input is an error."""
        report, code = run("taut", "find", FIXTURES / "lens5.tri")

        assert code == 2
        assert report.error["error"] == "taut"

    def test_taut_euler(self):
        """The Euler class relation holds for a taut structure."""
        report, code = run("taut", "euler", FIXTURES / "fig8.tri", "--taut", "taut 01 23")

        assert code == 0
        assert report.results["lackenby"]["chains"]["G"] == [1, 1, -1, -1]

    def test_taut_euler_not_taut(self):
        """A structure failing the taut check is a violation."""
        report, code = run("taut", "euler", FIXTURES / "fig8.tri", "--taut", "taut 01 01")

        assert code == 1
        assert report.status == "violation"

    def test_taut_euler_malformed_literal(self):
        """Malformed literals are input errors."""
        _, code = run("taut", "euler", FIXTURES / "fig8.tri", "--taut", "taut 0x 23")

        assert code == 2

    def test_maw_graph(self):
        """The torus complex graph is a cycle representing the first generator."""
        report, code = run("maw", "graph", FIXTURES / "torus_complex.json")

        assert code == 0
        assert report.results["class"]["free"] == [1, 0]

    def test_maw_graph_html(self, tmp_path):
        """--html writes an interactive view."""
        out = tmp_path / "maw.html"

        report, code = run("maw", "graph", FIXTURES / "fig8_flat.json", "--html", out)

        assert code == 0
        assert out.exists()
        assert report.results["html"] == str(out)

    def test_maw_graph_non_integer(self, tmp_path):
        """Fractional corner data is an input error, not a truncated value."""
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"sectors": [{"chi": 1.9, "dc": 2.5, "region_pos": 0, "region_neg": 0}], "regions": [{}]}),
            encoding="utf-8",
        )

        report, code = run("maw", "graph", path)

        assert code == 2
        assert report.error["error"] == "branched"

    def test_swap_zero(self):
        """k = 2 leaves the class unchanged."""
        report, code = run("swap", "--k", "2", "--delta", "[1]")

        assert code == 0
        assert report.results["is_zero"] is True

    def test_swap_with_torsion(self):
        """Class objects with torsion are accepted."""
        delta = json.dumps({"free": [1], "torsion": [{"modulus": 5, "residue": 2}]})

        report, _ = run("swap", "--k", "4", "--delta", delta)

        assert report.results["difference"]["free"] == [-2]
        assert report.results["difference"]["torsion"] == [{"modulus": 5, "residue": 1}]

    @pytest.mark.parametrize(
        "argv",
        [
            ["--k", "3", "--delta", "[1]"],
            ["--k", "2", "--delta", "[1"],
            ["--k", "4", "--delta", "[1.7]"],
            ["--k", "4", "--delta", "[true]"],
            ["--k", "4", "--delta", '{"free": [2.5]}'],
        ],
    )
    def test_swap_errors(self, argv):
        """Odd k, invalid JSON and non-integer coordinates are input errors."""
        _, code = run("swap", *argv)

        assert code == 2


class TestReport:
    """Tests for report rendering."""

    def test_repeat_is_byte_identical(self):
        """Running a command twice gives the same JSON."""
        first, _ = run("taut", "euler", FIXTURES / "fig8.tri", "--taut", "taut 01 23")
        second, _ = run("taut", "euler", FIXTURES / "fig8.tri", "--taut", "taut 01 23")

        assert first.to_json() == second.to_json()

    def test_json_shape(self):
        """JSON reports have the fixed top-level keys."""
        report, _ = run("validate", FIXTURES / "fig8.tri", "--json")

        data = json.loads(report.render())
        assert list(data) == ["command", "inputs", "results", "checks", "status"]

    def test_human(self):
        """--human renders tables."""
        report, _ = run("validate", FIXTURES / "fig8.tri", "--human")

        text = report.render()
        assert "status:  ok" in text
        assert "structure" in text

    def test_main_exit_code(self, monkeypatch, capsys):
        """main() prints the report and exits with its code."""
        monkeypatch.setattr(sys, "argv", ["eulergraph", "validate", str(FIXTURES / "missing.tri")])

        with pytest.raises(SystemExit) as excinfo:
            main.main()

        assert excinfo.value.code == 2
        assert json.loads(capsys.readouterr().out)["status"] == "error"


class TestConfig:
    """Tests for Config loading."""

    def test_defaults(self):
        """Dataclass defaults."""
        config = Config()

        assert config.enumeration_limit == 10000
        assert config.output_format == "json"

    def test_yaml(self, tmp_path, monkeypatch):
        """YAML sections override defaults."""
        monkeypatch.delenv("EULERGRAPH_THREADS", raising=False)
        monkeypatch.delenv("EULERGRAPH_ENUM_LIMIT", raising=False)
        path = tmp_path / "config.yaml"
        path.write_text("runtime:\n  threads: 3\noutput:\n  format: human\ntaut:\n  search_limit: 5\n", encoding="utf-8")

        config = Config.from_yaml(str(path))

        assert config.threads == 3
        assert config.worker_count() == 3
        assert config.output_format == "human"
        assert config.taut_search_limit == 5

    def test_env_overrides_yaml(self, tmp_path, monkeypatch):
        """Environment variables win over YAML."""
        path = tmp_path / "config.yaml"
        path.write_text("enumeration:\n  limit: 7\n", encoding="utf-8")
        monkeypatch.setenv("EULERGRAPH_ENUM_LIMIT", "11")

        assert Config.from_yaml(str(path)).enumeration_limit == 11

    def test_bad_values(self, tmp_path, monkeypatch):
        """Invalid settings raise ConfigError."""
        monkeypatch.setenv("EULERGRAPH_THREADS", "many")
        with pytest.raises(ConfigError):
            Config.from_yaml(str(tmp_path / "absent.yaml"))

        monkeypatch.delenv("EULERGRAPH_THREADS")
        path = tmp_path / "config.yaml"
        path.write_text("output:\n  format: xml\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            Config.from_yaml(str(path))

    def test_config_default_output(self):
        """output.format sets the default rendering."""
        report, _ = main.run(["validate", str(FIXTURES / "fig8.tri")], Config(output_format="human"))

        assert report.render().startswith("command:")

    def test_scan_script_reads_yaml(self, tmp_path, monkeypatch, capsys):
        """The fixture scan takes its limits from config.yaml in the working directory."""
        from scripts import scan_fixtures

        (tmp_path / "s3.tri").write_text((FIXTURES / "s3.tri").read_text(encoding="utf-8"), encoding="utf-8")
        (tmp_path / "config.yaml").write_text("enumeration:\n  limit: 1\n", encoding="utf-8")
        monkeypatch.delenv("EULERGRAPH_ENUM_LIMIT", raising=False)
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(sys, "argv", ["scan_fixtures.py", str(tmp_path)])

        scan_fixtures.main()

        assert "acyclic:   1 orientation(s)" in capsys.readouterr().out
