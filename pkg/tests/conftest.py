"""Shared fixtures: shipped triangulations and their expected invariants."""

from pathlib import Path

import pytest
import yaml

from eulergraph.triangulation import TriangulationStorage

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def manifest() -> dict:
    with open(FIXTURES / "manifest.yaml", "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def _load(name: str):
    return TriangulationStorage().load(FIXTURES / name)


@pytest.fixture(scope="session")
def fig8():
    return _load("fig8.tri")


@pytest.fixture(scope="session")
def lens5():
    return _load("lens5.tri")


@pytest.fixture(scope="session")
def lens4():
    return _load("lens4.tri")


@pytest.fixture(scope="session")
def s3():
    return _load("s3.tri")


@pytest.fixture(scope="session")
def s3_two_vertex():
    return _load("s3_two_vertex.tri")


@pytest.fixture(scope="session")
def s2xs1():
    return _load("s2xs1.tri")


@pytest.fixture(scope="session")
def m003():
    return _load("m003.tri")


@pytest.fixture(scope="session")
def no_taut():
    return _load("no_taut.tri")


@pytest.fixture(scope="session")
def non_cocycle():
    """Closed, two vertices; the acyclic orientation ++++ gives delta phi = (-2, 2)."""
    return _load("non_cocycle.tri")


@pytest.fixture(scope="session")
def all_triangulations(manifest):
    return {name: _load(name) for name in manifest}


@pytest.fixture(scope="session")
def closed_triangulations(manifest):
    return {name: _load(name) for name, data in manifest.items() if data["kind"] == "closed"}


@pytest.fixture(scope="session")
def ideal_triangulations(manifest):
    return {name: _load(name) for name, data in manifest.items() if data["kind"] == "ideal"}
