"""Tests for hereditary saturated cores and quotients."""
from __future__ import annotations

import random

import pytest

from labelana.exceptions import AtomBudgetExceeded, ValidationError, WellDefinednessFailure
from labelana.fuzz import random_graph
from labelana.graph_model import parse
from labelana.ideals import (
    QuotientSpace,
    _check_well_defined,
    _hereditary_members,
    enumerate_cores,
    is_core,
    proper_core_summaries,
    quotient,
    quotient_of_quotient,
    quotient_predicates,
    saturate_hereditary_closure,
    strongly_disagreeable,
)
from labelana.labeled_space import LabeledSpace

from .helpers import brute_cores

V1, V2 = 0b01, 0b10


@pytest.fixture
def unsaturated():
    """Return a graph where x only feeds the closed set {y}."""
    return LabeledSpace(
        parse(
            "vertex x y z\n"
            "edge x y : a\n"
            "edge y y : b\n"
            "edge z x : c\n"
            "edge z z : d\n"
        )
    )


class TestCores:
    """Test cases for the core lattice."""

    def test_single_loop(self, f1):
        """Test a single atom has only the trivial cores."""
        lattice = enumerate_cores(LabeledSpace(f1))

        assert lattice.cores == (0, 0b1)
        assert lattice.is_trivial

    def test_loop_to_loop(self, f5):
        """Test {v2} is the only proper nonzero core."""
        lattice = enumerate_cores(LabeledSpace(f5))

        assert lattice.cores == (0, V2, 0b11)
        assert lattice.hasse == ((0, 1), (1, 2))
        assert not lattice.is_trivial

    def test_branch_two_cycle(self, f4):
        """Test the branching two-cycle has trivial lattice."""
        assert enumerate_cores(LabeledSpace(f4)).cores == (0, 0b11)

    def test_saturation_adds_atoms(self, unsaturated):
        """Test an atom whose ranges all lie in the core joins it."""
        assert unsaturated.atoms == (0b001, 0b010, 0b100)
        assert not is_core(unsaturated, 0b010)
        assert saturate_hereditary_closure(unsaturated, 0b010) == 0b011
        assert enumerate_cores(unsaturated).cores == (0, 0b011, 0b111)

    def test_closure_follows_ranges(self, f5):
        """Test closing {v1} under ranges reaches everything."""
        space = LabeledSpace(f5)

        assert saturate_hereditary_closure(space, V1) == 0b11
        assert saturate_hereditary_closure(space, V2) == V2
        assert saturate_hereditary_closure(space, 0) == 0

    def test_atom_budget(self, f5):
        """Test the lattice respects the atom cap."""
        with pytest.raises(AtomBudgetExceeded):
            enumerate_cores(LabeledSpace(f5, max_atoms=1))

    def test_matches_definition(self):
        """Test enumerated cores agree with the definitions on random graphs."""
        rng = random.Random(37)
        for _ in range(40):
            graph = random_graph(rng, 4, letters=2)
            space = LabeledSpace(graph)
            found = {frozenset(space.names(core)) for core in enumerate_cores(space).cores}
            assert found == brute_cores(graph)

    def test_closure_is_a_core(self):
        """Test the closure of every vertex is a core."""
        rng = random.Random(41)
        for _ in range(30):
            space = LabeledSpace(random_graph(rng, 5))
            for index in range(len(space.graph.vertices)):
                closure = saturate_hereditary_closure(space, 1 << index)
                assert is_core(space, closure)


class TestQuotients:
    """Test cases for quotient spaces."""

    def test_quotient_by_closed_loop(self, f5):
        """Test dividing by {v2} leaves the loop at v1."""
        space = LabeledSpace(f5)
        result = quotient(space, V2)

        assert result.atoms == (V1,)
        assert result.alphabet == ("a",)
        assert result.step(V1, "b") == 0
        assert result.canonical(0b11) == V1

    def test_quotient_predicates(self, f5):
        """Test the quotient by {v2} is connected but not disagreeable."""
        summary = quotient_predicates(quotient(LabeledSpace(f5), V2))

        assert not summary.disagreeable.holds
        assert summary.disagreeable.witness == (V1, ("a",))
        assert summary.connects.holds
        assert summary.wlr.holds

    def test_zero_quotient(self, f5):
        """Test the quotient by everything is zero and has no predicates."""
        result = quotient(LabeledSpace(f5), 0b11)

        assert result.is_zero
        with pytest.raises(ValidationError) as err:
            quotient_predicates(result)
        assert err.value.kind == "ZeroQuotient"

    def test_not_a_core(self, f5):
        """Test dividing by a set that is not a core is refused."""
        with pytest.raises(ValidationError) as err:
            quotient(LabeledSpace(f5), V1)

        assert err.value.kind == "NotHereditarySaturated"

    def test_quotient_sink(self, unsaturated):
        """Test an unsaturated set leaves an atom without letters."""
        with pytest.raises(WellDefinednessFailure):
            _check_well_defined(unsaturated, QuotientSpace(unsaturated, 0b010))

    def test_hereditary_members(self, f5):
        """Test the members inside a core are every union of its atoms."""
        assert _hereditary_members(LabeledSpace(f5), 0b11) == [0, V1, V2, 0b11]

    def test_classes_follow_definition(self, f5, monkeypatch):
        """Test representatives that split a class are caught."""
        space = LabeledSpace(f5)
        quotient_space = QuotientSpace(space, V2)
        _check_well_defined(space, quotient_space)

        monkeypatch.setattr(quotient_space, "canonical", lambda mask: mask)
        with pytest.raises(WellDefinednessFailure, match="class"):
            _check_well_defined(space, quotient_space)

    def test_quotient_of_quotient(self, f5):
        """Test staged quotients agree with direct ones."""
        space = LabeledSpace(f5)

        assert quotient_of_quotient(space, 0, V2)
        assert quotient_of_quotient(space, V2, 0b11)

    def test_nested_cores_required(self, f5):
        """Test staging needs the inner core inside the outer one."""
        with pytest.raises(ValidationError) as err:
            quotient_of_quotient(LabeledSpace(f5), V2, V1)

        assert err.value.kind == "NotNested"


class TestStrongDisagreeability:
    """Test cases for strong disagreeability."""

    def test_branch_two_cycle(self, f4):
        """Test every proper quotient of the branching two-cycle is disagreeable."""
        space = LabeledSpace(f4)

        assert strongly_disagreeable(proper_core_summaries(space, enumerate_cores(space))).holds

    def test_loop_to_loop(self, f5):
        """Test the quotient by the empty core already fails."""
        space = LabeledSpace(f5)
        summaries = proper_core_summaries(space, enumerate_cores(space))
        result = strongly_disagreeable(summaries)

        assert [s.core for s in summaries] == [0, V2]
        assert not result.holds
        assert result.failing_core == 0
        assert result.witness == (V2, ("c",))
