"""Tests for report builders."""
from __future__ import annotations

import json

from labelana.const import RULE_STATEMENTS, SCHEMA_VERSION
from labelana.ideals import quotient, quotient_predicates
from labelana.labeled_space import LabeledSpace
from labelana.oracle import oracle_report
from labelana.report import (
    build_report,
    dumps,
    generate_dot,
    oracle_document,
    quotient_report,
    render_text,
)

REPORT_KEYS = [
    "schema",
    "graph",
    "space",
    "automaton",
    "predicates",
    "loops",
    "nonpower_loops",
    "ideals",
    "quotients",
    "verdicts",
    "notes",
]


class TestBuildReport:
    """Test cases for the JSON report."""

    def test_keys(self, analyzed):
        """Test the report sections and their order."""
        report = build_report(analyzed["F4"])

        assert list(report) == REPORT_KEYS
        assert report["schema"] == SCHEMA_VERSION

    def test_space_section(self, analyzed):
        """Test atoms and family size of the branching two-cycle."""
        space = build_report(analyzed["F4"])["space"]

        assert space["atoms"] == [["v1"], ["v2"]]
        assert space["stabilization_depth"] == 1
        assert space["E_size"] == 4
        assert space["wlr"]
        assert space["ce_agrees"]

    def test_predicates(self, analyzed):
        """Test witnesses of the loop feeding a loop."""
        predicates = build_report(analyzed["F5"])["predicates"]

        assert predicates["disagreeable_witness"] == {"atom": ["v2"], "word": ["c"]}
        assert predicates["strongly_cofinal_witness"] == {
            "atom": ["v2"],
            "prefix": ["a"],
            "cycle": ["a"],
        }
        assert predicates["failing_core"] == []

    def test_ideals(self, analyzed):
        """Test cores and quotients of the loop feeding a loop."""
        report = build_report(analyzed["F5"])

        assert report["ideals"] == {"cores": [[], ["v2"], ["v1", "v2"]], "hasse": [[0, 1], [1, 2]]}
        assert [q["core"] for q in report["quotients"]] == [[], ["v2"]]
        assert report["quotients"][1]["atoms"] == [["v1"]]
        assert report["quotients"][1]["alphabet"] == ["a"]

    def test_loops(self, analyzed):
        """Test loop entries carry their exits."""
        loops = build_report(analyzed["F2"])["loops"]

        assert loops[0] == {
            "base": ["v"],
            "word": ["a"],
            "kind": "cycle",
            "exits": [{"type": "type-i", "word": ["b"], "range": None}],
        }

    def test_deterministic(self, analyzed):
        """Test serialization is byte-identical across runs."""
        first = dumps(build_report(analyzed["F4"]))

        assert first == dumps(build_report(analyzed["F4"]))
        assert json.loads(first)["graph"]["name"] == "branch-2cycle"


class TestOtherDocuments:
    """Test cases for the quotient and oracle documents."""

    def test_quotient_report(self, f5):
        """Test the quotient document of {v2}."""
        space = LabeledSpace(f5)
        quotient_space = quotient(space, 0b10)
        document = quotient_report(space, quotient_space, quotient_predicates(quotient_space), 0b10)

        assert document["core"] == ["v2"]
        assert not document["enlarged"]
        assert not document["zero"]
        assert document["disagreeable"] is False

    def test_zero_quotient_report(self, f5):
        """Test the quotient by everything reports zero."""
        space = LabeledSpace(f5)
        document = quotient_report(space, quotient(space, 0b11), None, 0b01)

        assert document["zero"]
        assert document["enlarged"]
        assert "atoms" not in document

    def test_oracle_document(self, f2):
        """Test the oracle document lists every condition."""
        document = oracle_document(oracle_report(f2), True)

        assert document == {"L": True, "K": True, "connects": True, "IH": True, "agrees_with_labeled": True}


class TestText:
    """Test cases for the human-readable report and DOT export."""

    def test_render_text(self, analyzed):
        """Test the text report names the graph and states the rules."""
        text = render_text(analyzed["F2"])

        assert text.startswith("# Labeled space: two-loops\n")
        assert "## Verdicts" in text
        assert "### Simple: Certified" in text
        assert RULE_STATEMENTS["disagreeable-connects-ih"] in text

    def test_render_witness(self, analyzed):
        """Test the text report shows the forced word."""
        text = render_text(analyzed["F5"])

        assert "forced word c repeats at {v2}" in text
        assert "bad run a then (a) forever avoids {v2}" in text

    def test_dot(self, f5):
        """Test DOT output marks core vertices."""
        dot = generate_dot(LabeledSpace(f5), 0b10)

        assert dot.startswith('digraph "loop-to-loop" {')
        assert '"v2" [shape=doublecircle' in dot
        assert '"v1" [shape=circle' in dot
        assert '"v1" -> "v2" [label="b"];' in dot
