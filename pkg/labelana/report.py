"""Report builders: JSON documents, text reports and DOT export."""
from __future__ import annotations

import json
from typing import Any

from .analysis import AnalysisResult
from .const import ATOM_COLORS, RULE_STATEMENTS, SCHEMA_VERSION
from .dynamics import LoopWitness
from .ideals import CoreLattice, QuotientSpace, QuotientSummary
from .labeled_space import AtomSpace, LabeledSpace
from .oracle import OracleReport


def dumps(document: dict[str, Any]) -> str:
    """Serialize a report deterministically."""
    return json.dumps(document, indent=2, sort_keys=False, ensure_ascii=False)


def _loop(space: AtomSpace, witness: LoopWitness) -> dict[str, Any]:
    return {
        "base": space.names(witness.base),
        "word": list(witness.word),
        "kind": witness.kind,
        "exits": [
            {
                "type": exit_.kind,
                "word": list(exit_.word) if exit_.word is not None else None,
                "range": space.names(exit_.range) if exit_.range is not None else None,
            }
            for exit_ in witness.exits
        ],
    }


def space_fragment(space: LabeledSpace, result: AnalysisResult) -> dict[str, Any]:
    """Atoms, depth and the structural checks."""
    profile = result.profile
    wlr: dict[str, Any] = {"holds": profile.wlr.holds}
    if profile.wlr.counterexample is not None:
        first, second, letter = profile.wlr.counterexample
        wlr["counterexample"] = {"atoms": [space.names(first), space.names(second)], "letter": letter}
    return {
        "atoms": [space.names(atom) for atom in space.atoms],
        "generalized_vertices": [space.names(c) for c in space.partition.atoms],
        "stabilization_depth": space.partition.stabilization_depth,
        "ce_agrees": space.ce_agrees,
        "wlr": profile.wlr.holds,
        "wlr_detail": wlr,
        "E_size": 1 << len(space.atoms),
        "minimal_sets": [space.names(space.vertices_of(e)) for e in profile.minimal_sets],
        "star": profile.star.holds,
        "sources": list(space.graph.sources),
        "warnings": profile.warnings,
    }


def lattice_fragment(space: AtomSpace, lattice: CoreLattice) -> dict[str, Any]:
    """Cores and covering pairs."""
    return {
        "cores": [space.names(core) for core in lattice.cores],
        "hasse": [list(pair) for pair in lattice.hasse],
    }


def quotient_fragment(space: AtomSpace, summary: QuotientSummary) -> dict[str, Any]:
    """Predicate summary of one quotient."""
    witness = summary.disagreeable.witness
    l_e = summary.l_e.witness
    return {
        "core": space.names(summary.core),
        "atoms": [space.names(atom) for atom in summary.atoms],
        "alphabet": list(summary.alphabet),
        "disagreeable": summary.disagreeable.holds,
        "disagreeable_witness": (
            {"atom": space.names(witness[0]), "word": list(witness[1])} if witness else None
        ),
        "l_e": summary.l_e.holds,
        "l_e_witness": {"word": list(l_e[0]), "atom": space.names(l_e[1])} if l_e else None,
        "connects": summary.connects.holds,
        "star": summary.star.holds,
        "wlr": summary.wlr.holds,
    }


def build_report(result: AnalysisResult) -> dict[str, Any]:
    """Full machine-readable report of an analysis."""
    space = result.space
    disagreeable = result.disagreeable.witness
    cofinal = result.cofinal.witness
    l_e = result.l_e.witness
    return {
        "schema": SCHEMA_VERSION,
        "graph": {
            "name": result.graph.name,
            "vertices": len(result.graph.vertices),
            "edges": len(result.graph.edges),
            "alphabet": list(result.graph.alphabet),
        },
        "space": space_fragment(space, result),
        "automaton": {"states": len(result.automaton.states)},
        "predicates": {
            "disagreeable": result.disagreeable.holds,
            "disagreeable_witness": (
                {"atom": space.names(disagreeable[0]), "word": list(disagreeable[1])}
                if disagreeable
                else None
            ),
            "l_e": result.l_e.holds,
            "l_e_witness": {"word": list(l_e[0]), "atom": space.names(l_e[1])} if l_e else None,
            "connects": result.connects.holds,
            "connects_exhaustive": result.connects.exhaustive,
            "strongly_cofinal": result.cofinal.holds,
            "strongly_cofinal_witness": (
                {"atom": space.names(cofinal[0]), "prefix": list(cofinal[1]), "cycle": list(cofinal[2])}
                if cofinal
                else None
            ),
            "strongly_disagreeable": result.strongly_disagreeable.holds,
            "failing_core": (
                space.names(result.strongly_disagreeable.failing_core)
                if result.strongly_disagreeable.failing_core is not None
                else None
            ),
        },
        "loops": [
            _loop(space, witness) for atom in space.atoms for witness in result.loops[atom]
        ],
        "nonpower_loops": [
            {
                "minimal_set": space.names(atom),
                "holds": pair.holds,
                "pair": [list(w) for w in pair.pair] if pair.pair else None,
            }
            for atom, pair in result.nonpower.items()
        ],
        "ideals": lattice_fragment(space, result.lattice),
        "quotients": [quotient_fragment(space, q) for q in result.quotients],
        "verdicts": [v.as_dict() for v in result.verdicts],
        "notes": result.notes,
    }


def quotient_report(
    space: AtomSpace,
    quotient_space: QuotientSpace,
    summary: QuotientSummary | None,
    requested: int,
) -> dict[str, Any]:
    """Report for the quotient subcommand."""
    document: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "requested_core": space.names(requested),
        "core": space.names(quotient_space.core),
        "enlarged": requested != quotient_space.core,
        "zero": quotient_space.is_zero,
    }
    if summary is not None:
        document.update(quotient_fragment(space, summary))
    return document


def oracle_document(report: OracleReport, agrees: bool) -> dict[str, Any]:
    """Report for the oracle subcommand."""
    return {"L": report.L, "K": report.K, "connects": report.connects, "IH": report.IH, "agrees_with_labeled": agrees}


def _word(word: tuple[str, ...] | list[str]) -> str:
    return " ".join(word) if word else "ε"


def _set_text(names: list[str]) -> str:
    return "{" + ", ".join(names) + "}"


def render_text(result: AnalysisResult) -> str:
    """Human-readable report."""
    space = result.space
    lines = []
    lines.append(f"# Labeled space: {result.graph.name}")
    lines.append("")
    lines.append(
        f"Vertices: {len(result.graph.vertices)} | Edges: {len(result.graph.edges)} | "
        f"Alphabet: {', '.join(result.graph.alphabet)}"
    )
    lines.append(
        f"Atoms: {' '.join(_set_text(space.names(a)) for a in space.atoms)} "
        f"(depth {space.partition.stabilization_depth})"
    )
    lines.append(
        f"Weakly left-resolving: {'yes' if result.profile.wlr.holds else 'no'} | "
        f"Condition (*): {'yes' if result.profile.star.holds else 'no'} | "
        f"Family size: {1 << len(space.atoms)}"
    )
    for warning in result.profile.warnings:
        lines.append(f"Warning: {warning}")
    lines.append("")

    lines.append("## Predicates")
    lines.append("")
    rows = [
        ("disagreeable", result.disagreeable.holds),
        ("condition (L_E)", result.l_e.holds),
        ("connects to a loop", result.connects.holds),
        ("strongly cofinal", result.cofinal.holds),
        ("strongly disagreeable", result.strongly_disagreeable.holds),
    ]
    for label, holds in rows:
        lines.append(f"- {label}: {'yes' if holds else 'no'}")
    if result.disagreeable.witness is not None:
        atom, beta = result.disagreeable.witness
        lines.append(f"  forced word {_word(beta)} repeats at {_set_text(space.names(atom))}")
    if result.cofinal.witness is not None:
        atom, prefix, cycle = result.cofinal.witness
        lines.append(
            f"  bad run {_word(prefix)} then ({_word(cycle)}) forever avoids {_set_text(space.names(atom))}"
        )
    lines.append("")

    lines.append("## Loops")
    lines.append("")
    for atom in space.atoms:
        for witness in result.loops[atom]:
            exits = ", ".join(
                _word(e.word) if e.word is not None else "range grows" for e in witness.exits
            ) or "none"
            lines.append(
                f"- {_set_text(space.names(atom))} {witness.kind} {_word(witness.word)}; exits: {exits}"
            )
    lines.append("")

    lines.append("## Ideals")
    lines.append("")
    for core in result.lattice.cores:
        lines.append(f"- core {_set_text(space.names(core))}")
    for summary in result.quotients:
        lines.append(
            f"  quotient by {_set_text(space.names(summary.core))}: "
            f"disagreeable={'yes' if summary.disagreeable.holds else 'no'}, "
            f"connects={'yes' if summary.connects.holds else 'no'}"
        )
    lines.append("")

    lines.append("## Verdicts")
    lines.append("")
    for verdict in result.verdicts:
        rule = f" [{', '.join(verdict.rules)}]" if verdict.rules else ""
        lines.append(f"### {verdict.question}: {verdict.status}{rule}")
        for tag in verdict.rules:
            lines.append(f"   {RULE_STATEMENTS[tag]}")
        for caveat in verdict.caveats:
            lines.append(f"   caveat: {caveat}")
    lines.append("")

    for note in result.notes:
        lines.append(f"Note: {note}")
    return "\n".join(lines) + "\n"


def generate_dot(space: AtomSpace, core: int = 0) -> str:
    """Graphviz DOT text with atoms coloured and core vertices double-circled."""
    graph = space.graph
    color_of: dict[str, str] = {}
    for index, atom in enumerate(space.atoms):
        for name in space.names(atom):
            color_of[name] = ATOM_COLORS[index % len(ATOM_COLORS)]

    lines = [f'digraph "{graph.name}" {{', "  rankdir=LR;"]
    for i, vertex in enumerate(graph.vertices):
        shape = "doublecircle" if core >> i & 1 else "circle"
        fill = color_of.get(vertex, "#ffffff")
        lines.append(f'  "{vertex}" [shape={shape}, style=filled, fillcolor="{fill}"];')
    for edge in graph.edges:
        lines.append(f'  "{edge.source}" -> "{edge.range}" [label="{edge.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
