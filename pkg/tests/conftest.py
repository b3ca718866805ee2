"""Fixtures for labelana tests."""
from __future__ import annotations

from pathlib import Path

import pytest

from labelana.analysis import AnalysisResult, analyze
from labelana.graph_model import LabeledGraph, parse

FIXTURES = Path(__file__).parent.parent / "fixtures"


def load_fixture(name: str) -> LabeledGraph:
    """Parse one shipped fixture."""
    return parse((FIXTURES / f"{name}.lgr").read_text(encoding="utf-8"), name)


@pytest.fixture
def fixtures_dir() -> Path:
    """Return the directory of shipped fixtures."""
    return FIXTURES


@pytest.fixture
def f1() -> LabeledGraph:
    """Return the single-loop graph."""
    return load_fixture("F1")


@pytest.fixture
def f2() -> LabeledGraph:
    """Return the two-loops graph."""
    return load_fixture("F2")


@pytest.fixture
def f3() -> LabeledGraph:
    """Return the collapsing two-cycle."""
    return load_fixture("F3")


@pytest.fixture
def f4() -> LabeledGraph:
    """Return the branching two-cycle."""
    return load_fixture("F4")


@pytest.fixture
def f5() -> LabeledGraph:
    """Return the loop feeding a loop."""
    return load_fixture("F5")


@pytest.fixture
def all_fixtures() -> dict[str, LabeledGraph]:
    """Return every shipped fixture by name."""
    return {name: load_fixture(name) for name in ("F1", "F2", "F3", "F4", "F5")}


@pytest.fixture
def analyzed() -> dict[str, AnalysisResult]:
    """Return the analysis of every shipped fixture."""
    return {name: analyze(load_fixture(name)) for name in ("F1", "F2", "F3", "F4", "F5")}


@pytest.fixture
def sink_text() -> str:
    """Return a graph whose vertex v emits nothing."""
    return "vertex u v\nedge u v : a\n"


@pytest.fixture
def f4_json() -> str:
    """Return the branching two-cycle in the JSON description."""
    return (
        '{"name": "branch-2cycle", "vertices": ["v1", "v2"], "edges": ['
        '{"src": "v1", "dst": "v2", "label": "a"}, '
        '{"src": "v2", "dst": "v1", "label": "a"}, '
        '{"src": "v1", "dst": "v1", "label": "b"}]}'
    )
