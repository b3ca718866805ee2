"""Tests for the classical oracle."""
from __future__ import annotations

import json

import pytest

from labelana.exceptions import OracleInapplicable
from labelana.fuzz import FuzzSummary, compare_with_oracle
from labelana.graph_model import injective_relabel, parse
from labelana.oracle import (
    condition_K,
    condition_L,
    oracle_report,
    plain_graph,
    vertex_connects_to_loop_graph,
)


class TestPlainGraph:
    """Test cases for the underlying multigraph."""

    def test_needs_injective_labels(self, f4):
        """Test a repeated label makes the oracle inapplicable."""
        with pytest.raises(OracleInapplicable):
            plain_graph(f4)

    def test_keeps_parallel_edges(self, f2):
        """Test parallel loops stay distinct edges."""
        plain = plain_graph(f2)

        assert plain.number_of_edges("v", "v") == 2


class TestConditions:
    """Test cases for conditions (L) and (K)."""

    @pytest.mark.parametrize(
        ("name", "L", "K"),
        [
            ("F1", False, False),
            ("F2", True, True),
            ("F3", False, False),
            ("F4", True, True),
            ("F5", False, False),
        ],
    )
    def test_fixtures(self, all_fixtures, name, L, K):
        """Test (L) and (K) of every relabeled fixture."""
        graph = injective_relabel(all_fixtures[name])

        assert condition_L(graph) is L
        assert condition_K(graph) is K

    def test_L_without_K(self):
        """Test a cycle with an exit into a bare loop."""
        graph = parse(
            "vertex x y z\n"
            "edge x y : e0\n"
            "edge y x : e1\n"
            "edge x z : e2\n"
            "edge z z : e3\n"
            "edge z z : e4\n"
        )

        assert condition_L(graph)
        assert not condition_K(graph)

    def test_every_vertex_connects(self, all_fixtures):
        """Test finite graphs without sinks always reach a cycle."""
        for graph in all_fixtures.values():
            assert vertex_connects_to_loop_graph(injective_relabel(graph))

    def test_report(self, f2):
        """Test the report combines (L) with connectivity into (IH)."""
        report = oracle_report(f2)

        assert report.L
        assert report.K
        assert report.IH

    def test_agrees_with_labeled_analysis(self, all_fixtures):
        """Test the labeled analysis of trivial labelings matches the oracle."""
        for graph in all_fixtures.values():
            assert compare_with_oracle(graph) is None


class TestFuzzSummary:
    """Test cases for the differential-run summary."""

    def test_counterexample_as_graph_description(self, f5):
        """Test a counterexample is written as a parseable JSON graph."""
        summary = FuzzSummary(total=3, agreements=2, counterexample=f5, reason="mismatch")
        document = summary.as_dict()

        assert document["counterexample"]["vertices"] == ["v1", "v2"]
        assert document["reason"] == "mismatch"
        assert parse(json.dumps(document["counterexample"])).edges == f5.edges
