"""Run every analysis stage on a graph and collect one result."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from .config import Config
from .const import (
    PROPERTY_CONNECTS,
    PROPERTY_DISAGREEABLE,
    PROPERTY_L_E,
    PROPERTY_STAR,
    PROPERTY_STRONGLY_COFINAL,
    PROPERTY_STRONGLY_DISAGREEABLE,
    PROPERTY_WLR,
    QUESTION_PURELY_INFINITE,
    QUESTION_SIMPLE,
)
from .dynamics import (
    CofinalResult,
    ConditionLE,
    ConnectsResult,
    DisagreeableResult,
    LoopWitness,
    NonpowerResult,
    SubsetAutomaton,
    condition_L_E,
    connects_to_loop,
    find_loops,
    is_disagreeable,
    strongly_cofinal,
    two_nonpower_loops,
)
from .exceptions import ConsistencyError, ValidationError
from .graph_model import LabeledGraph
from .ideals import (
    CoreLattice,
    QuotientSummary,
    StronglyDisagreeable,
    enumerate_cores,
    proper_core_summaries,
    strongly_disagreeable,
)
from .labeled_space import LabeledSpace, SpaceProfile, profile_space
from .verdicts import Status, Verdict, decide_all

_LOGGER = logging.getLogger(__name__)


@dataclass
class AnalysisResult:
    """Everything computed for one graph."""

    graph: LabeledGraph
    config: Config
    space: LabeledSpace
    profile: SpaceProfile
    automaton: SubsetAutomaton
    disagreeable: DisagreeableResult
    l_e: ConditionLE
    connects: ConnectsResult
    cofinal: CofinalResult
    loops: dict[int, list[LoopWitness]]
    nonpower: dict[int, NonpowerResult]
    lattice: CoreLattice
    quotients: list[QuotientSummary]
    strongly_disagreeable: StronglyDisagreeable
    verdicts: list[Verdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def verdict(self, question: str) -> Verdict:
        """Return the verdict for one question."""
        return next(v for v in self.verdicts if v.question == question)


def build_space(graph: LabeledGraph, config: Config) -> LabeledSpace:
    """Build the labeled space under the configured atom cap."""
    return LabeledSpace(graph, max_atoms=config.max_atoms)


def analyze(graph: LabeledGraph, config: Config | None = None) -> AnalysisResult:
    """Run the structural checks, the dynamics, the lattice and the verdicts."""
    config = config or Config()
    space = build_space(graph, config)
    profile = profile_space(space)
    aut = SubsetAutomaton(space)

    loops = {
        atom: find_loops(aut, atom, config.max_loop_words, config.word_bound_multiplier)
        for atom in space.atoms
    }
    nonpower = {atom: two_nonpower_loops(aut, atom) for atom in space.atoms if loops[atom]}
    lattice = enumerate_cores(space)
    quotients = proper_core_summaries(
        space, lattice, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
    )

    result = AnalysisResult(
        graph=graph,
        config=config,
        space=space,
        profile=profile,
        automaton=aut,
        disagreeable=is_disagreeable(aut),
        l_e=condition_L_E(aut),
        connects=connects_to_loop(
            aut, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
        ),
        cofinal=strongly_cofinal(aut),
        loops=loops,
        nonpower=nonpower,
        lattice=lattice,
        quotients=quotients,
        strongly_disagreeable=strongly_disagreeable(quotients),
    )
    result.verdicts = decide_all(result)
    result.notes = _notes(result)
    check_consistency(result)
    _LOGGER.debug(
        "Analyzed %s: %d atoms, %d states, %d cores",
        graph.name,
        len(space.atoms),
        len(aut.states),
        len(lattice.cores),
    )
    return result


def _notes(result: AnalysisResult) -> list[str]:
    notes = ["set-finite and receiver set-finite: trivially satisfied for finite graphs"]
    if result.strongly_disagreeable.holds:
        notes.append(
            "strongly disagreeable: purely infinite iff every projection p_A is properly "
            "infinite iff every quotient has property (IH)"
        )
    if result.disagreeable.holds and result.cofinal.holds:
        notes.append(
            "disagreeable and strongly cofinal: purely infinite iff every nonzero p_A is infinite"
        )
    notes.append("repeatable-path connectivity coincides with connects-to-loop for finite graphs")
    return notes


def check_consistency(result: AnalysisResult) -> None:
    """Assert the implications that must hold between computed predicates."""
    violations: list[str] = []

    if result.disagreeable.holds:
        if not result.l_e.holds:
            violations.append("disagreeable but condition (L_E) fails")
        for witnesses in result.loops.values():
            for witness in witnesses:
                if not witness.has_exit:
                    violations.append(
                        f"disagreeable but loop {''.join(witness.word)} at "
                        f"{result.space.names(witness.base)} has no exit"
                    )
    if not result.connects.holds:
        violations.append("some atom connects to no loop")
    for summary in result.quotients:
        if not summary.connects.holds:
            violations.append(f"quotient by {result.space.names(summary.core)} has an unconnected atom")
    if result.profile.wlr.holds and not result.space.ce_agrees:
        violations.append("weakly left-resolving but the family is not the atom-union family")

    if result.profile.wlr.holds:
        simple = result.verdict(QUESTION_SIMPLE)
        pi = result.verdict(QUESTION_PURELY_INFINITE)
        if result.disagreeable.holds and result.cofinal.holds and simple.status != Status.CERTIFIED:
            violations.append("disagreeable and strongly cofinal but not certified simple")
        if pi.status == Status.CERTIFIED:
            if not result.strongly_disagreeable.holds:
                violations.append("purely infinite certified without strong disagreeability")
            for atom, pair in result.nonpower.items():
                if not pair.holds:
                    violations.append(
                        f"purely infinite certified but {result.space.names(atom)} lacks two non-power loops"
                    )

    if violations:
        raise ConsistencyError(violations)


def check_property(graph: LabeledGraph, prop: str, config: Config | None = None) -> dict[str, Any]:
    """Decide a single predicate and return it with its certificate."""
    config = config or Config()
    space = build_space(graph, config)
    aut = SubsetAutomaton(space)
    names = space.names

    if prop == PROPERTY_DISAGREEABLE:
        outcome = is_disagreeable(aut)
        witness = None
        if outcome.witness is not None:
            witness = {"atom": names(outcome.witness[0]), "word": list(outcome.witness[1])}
        return {"property": prop, "holds": outcome.holds, "witness": witness}

    if prop == PROPERTY_STRONGLY_DISAGREEABLE:
        lattice = enumerate_cores(space)
        outcome_sd = strongly_disagreeable(
            proper_core_summaries(
                space, lattice, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
            )
        )
        witness = None
        if not outcome_sd.holds:
            witness = {"failing_core": names(outcome_sd.failing_core or 0)}
            if outcome_sd.witness is not None:
                witness["atom"] = names(outcome_sd.witness[0])
                witness["word"] = list(outcome_sd.witness[1])
        return {"property": prop, "holds": outcome_sd.holds, "witness": witness}

    if prop == PROPERTY_STRONGLY_COFINAL:
        cofinal = strongly_cofinal(aut)
        witness = None
        if cofinal.witness is not None:
            atom, prefix, cycle = cofinal.witness
            witness = {"atom": names(atom), "prefix": list(prefix), "cycle": list(cycle)}
        return {"property": prop, "holds": cofinal.holds, "witness": witness}

    if prop == PROPERTY_L_E:
        l_e = condition_L_E(aut)
        witness = None
        if l_e.witness is not None:
            witness = {"word": list(l_e.witness[0]), "atom": names(l_e.witness[1])}
        return {"property": prop, "holds": l_e.holds, "witness": witness}

    if prop == PROPERTY_STAR:
        profile = profile_space(space)
        return {
            "property": prop,
            "holds": profile.star.holds,
            "witness": {"checked_states": profile.star.checked_states},
        }

    if prop == PROPERTY_CONNECTS:
        connects = connects_to_loop(
            aut, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
        )
        return {
            "property": prop,
            "holds": connects.holds,
            "exhaustive": connects.exhaustive,
            "witness": [
                {
                    "atom": names(c.atom),
                    "holds": c.holds,
                    "loop_base": names(c.loop_base) if c.loop_base is not None else None,
                    "loop_word": list(c.loop_word) if c.loop_word is not None else None,
                    "paths": [list(p) for p in c.paths],
                    "stage": c.stage,
                }
                for c in connects.certificates
            ],
        }

    if prop == PROPERTY_WLR:
        profile = profile_space(space)
        witness = None
        if profile.wlr.counterexample is not None:
            first, second, letter = profile.wlr.counterexample
            witness = {"atoms": [names(first), names(second)], "letter": letter}
        return {"property": prop, "holds": profile.wlr.holds, "witness": witness}

    raise ValidationError("UnknownProperty", prop)
