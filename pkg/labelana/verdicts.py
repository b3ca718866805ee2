"""Verdicts about the algebra of a labeled space, with rule citations."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any

from .const import (
    CAVEAT_BOUNDED,
    CAVEAT_ONE_DIRECTIONAL,
    CAVEAT_WLR_FAILED,
    QUESTION_GAUGE_INVARIANT_IDEALS,
    QUESTION_IH,
    QUESTION_INFINITE_PROJECTION,
    QUESTION_PURELY_INFINITE,
    QUESTION_SIMPLE,
    RULE_COFINAL_DISAGREEABLE_SIMPLE,
    RULE_COFINAL_LOOP_PI,
    RULE_DISAGREEABLE_CONNECTS_IH,
    RULE_EXITLESS_MINIMAL_LOOP,
    RULE_LOOP_WITH_EXIT,
    RULE_NONPOWER_LOOP_PAIR,
    RULE_QUOTIENTS_CONNECT_PI,
    RULE_SIMPLE_IH_EQUIVALENCE,
    RULE_SIMPLICITY_CRITERION,
    RULE_STANDING_ASSUMPTION,
    RULE_STAR_IH_CONVERSE,
    RULE_STAR_NOT_STRONGLY_DISAGREEABLE,
    RULE_STATEMENTS,
    RULE_STRONGLY_DISAGREEABLE_GAUGE,
)
from .exceptions import ConsistencyError

if TYPE_CHECKING:
    from .analysis import AnalysisResult


class Status(StrEnum):
    """Tri-state verdict outcome."""

    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """A conclusion with the rules that license it."""

    question: str
    status: Status
    rules: tuple[str, ...] = ()
    certificate: dict[str, Any] = field(default_factory=dict)
    caveats: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.status != Status.UNKNOWN and not self.certificate:
            raise ConsistencyError([f"{self.question} is {self.status} without a certificate"])

    @property
    def rule(self) -> str | None:
        """The first rule that fired."""
        return self.rules[0] if self.rules else None

    def as_dict(self) -> dict[str, Any]:
        """JSON-ready form."""
        return {
            "question": self.question,
            "status": str(self.status),
            "rule": self.rule,
            "rules": list(self.rules),
            "statements": [RULE_STATEMENTS[tag] for tag in self.rules],
            "certificate": self.certificate,
            "caveats": list(self.caveats),
        }


def _unknown(question: str, *caveats: str, rules: tuple[str, ...] = ()) -> Verdict:
    return Verdict(question, Status.UNKNOWN, rules=rules, caveats=caveats)


def _set(results: AnalysisResult, mask: int) -> list[str]:
    return results.space.names(mask)


def _cofinal_loop_base(results: AnalysisResult) -> tuple[int, tuple[str, ...]] | None:
    """A loop at some atom when the space is disagreeable and strongly cofinal."""
    if not (results.disagreeable.holds and results.cofinal.holds):
        return None
    for atom, witnesses in results.loops.items():
        if witnesses:
            return atom, witnesses[0].word
    return None


def decide_simplicity(results: AnalysisResult) -> Verdict:
    """Simple iff no exit-less cycle and only the trivial cores."""
    if not results.profile.wlr.holds:
        return _unknown(QUESTION_SIMPLE, CAVEAT_WLR_FAILED, rules=(RULE_STANDING_ASSUMPTION,))

    cores = results.lattice.cores
    if results.l_e.holds and results.lattice.is_trivial:
        rules = [RULE_SIMPLICITY_CRITERION]
        certificate: dict[str, Any] = {
            RULE_SIMPLICITY_CRITERION: {
                "l_e": True,
                "cores": [_set(results, core) for core in cores],
            }
        }
        if results.disagreeable.holds and results.cofinal.holds:
            rules.append(RULE_COFINAL_DISAGREEABLE_SIMPLE)
            certificate[RULE_COFINAL_DISAGREEABLE_SIMPLE] = {
                "disagreeable": True,
                "strongly_cofinal": True,
            }
        loop = _cofinal_loop_base(results)
        if loop is not None:
            rules.append(RULE_COFINAL_LOOP_PI)
            certificate[RULE_COFINAL_LOOP_PI] = {
                "base": _set(results, loop[0]),
                "word": list(loop[1]),
            }
        return Verdict(QUESTION_SIMPLE, Status.CERTIFIED, tuple(rules), certificate)

    evidence: dict[str, Any] = {}
    if not results.l_e.holds:
        word, base = results.l_e.witness  # type: ignore[misc]
        evidence["exitless_cycle"] = {"word": list(word), "base": _set(results, base)}
    if not results.lattice.is_trivial:
        core = next(c for c in cores if c and c != results.space.universe)
        evidence["core"] = _set(results, core)
    return Verdict(
        QUESTION_SIMPLE,
        Status.REFUTED,
        (RULE_SIMPLICITY_CRITERION,),
        {RULE_SIMPLICITY_CRITERION: evidence},
    )


def _connects_certificate(results: AnalysisResult) -> list[dict[str, Any]]:
    return [
        {
            "atom": _set(results, cert.atom),
            "loop_base": _set(results, cert.loop_base) if cert.loop_base is not None else None,
            "loop_word": list(cert.loop_word) if cert.loop_word is not None else None,
            "paths": [list(path) for path in cert.paths],
            "stage": cert.stage,
        }
        for cert in results.connects.certificates
    ]


def decide_IH(results: AnalysisResult) -> Verdict:
    """Property (IH) from disagreeability and connectivity to loops."""
    if not results.profile.wlr.holds:
        return _unknown(QUESTION_IH, CAVEAT_WLR_FAILED, rules=(RULE_STANDING_ASSUMPTION,))

    disagreeable = results.disagreeable.holds
    if disagreeable and results.connects.holds:
        return Verdict(
            QUESTION_IH,
            Status.CERTIFIED,
            (RULE_DISAGREEABLE_CONNECTS_IH,),
            {RULE_DISAGREEABLE_CONNECTS_IH: {"disagreeable": True, "connects": _connects_certificate(results)}},
        )
    if disagreeable and results.profile.star.holds and not results.connects.holds:
        if results.connects.exhaustive:
            failing = [_set(results, c.atom) for c in results.connects.certificates if not c.holds]
            return Verdict(
                QUESTION_IH,
                Status.REFUTED,
                (RULE_STAR_IH_CONVERSE,),
                {RULE_STAR_IH_CONVERSE: {"star": True, "unconnected_atoms": failing}},
            )
        return _unknown(QUESTION_IH, CAVEAT_BOUNDED)
    return _unknown(QUESTION_IH, CAVEAT_ONE_DIRECTIONAL)


def exitless_minimal_loops(results: AnalysisResult) -> list[tuple[int, tuple[str, ...]]]:
    """Minimal sets carrying a loop without exits, one loop each."""
    found: dict[int, tuple[str, ...]] = {}
    if not results.l_e.holds:
        word, base = results.l_e.witness  # type: ignore[misc]
        found[base] = word
    for atom, witnesses in results.loops.items():
        if atom in found:
            continue
        for witness in witnesses:
            if not witness.has_exit:
                found[atom] = witness.word
                break
    return [(atom, found[atom]) for atom in results.space.atoms if atom in found]


def decide_purely_infinite(results: AnalysisResult, simple: Verdict, ih: Verdict) -> Verdict:
    """Pure infiniteness from the certifying and refuting rules."""
    if not results.profile.wlr.holds:
        return _unknown(QUESTION_PURELY_INFINITE, CAVEAT_WLR_FAILED, rules=(RULE_STANDING_ASSUMPTION,))

    certifying: dict[str, Any] = {}
    proper = results.quotients
    if results.strongly_disagreeable.holds and all(q.connects.holds for q in proper):
        certifying[RULE_QUOTIENTS_CONNECT_PI] = {
            "strongly_disagreeable": True,
            "cores": [_set(results, q.core) for q in proper],
        }
    loop = _cofinal_loop_base(results)
    if loop is not None:
        certifying[RULE_COFINAL_LOOP_PI] = {"base": _set(results, loop[0]), "word": list(loop[1])}

    refuting: dict[str, Any] = {}
    exitless = exitless_minimal_loops(results)
    if exitless:
        atom, word = exitless[0]
        refuting[RULE_EXITLESS_MINIMAL_LOOP] = {
            "minimal_set": _set(results, atom),
            "loop": list(word),
            "n": len(word),
            "hereditary_subalgebra": f"M_{len(word)}(C(T))",
        }
    for atom, pair in results.nonpower.items():
        if results.loops.get(atom) and not pair.holds and pair.exhaustive:
            refuting[RULE_NONPOWER_LOOP_PAIR] = {
                "minimal_set": _set(results, atom),
                "shortest_loop": list(results.loops[atom][0].word),
            }
            break
    star_everywhere = results.profile.star.holds and all(q.star.holds for q in proper)
    if star_everywhere and not results.strongly_disagreeable.holds:
        sd = results.strongly_disagreeable
        evidence: dict[str, Any] = {"failing_core": _set(results, sd.failing_core or 0)}
        if sd.witness is not None:
            evidence["witness"] = {"atom": _set(results, sd.witness[0]), "word": list(sd.witness[1])}
        refuting[RULE_STAR_NOT_STRONGLY_DISAGREEABLE] = evidence
    if simple.status == Status.CERTIFIED and ih.status == Status.REFUTED:
        refuting[RULE_SIMPLE_IH_EQUIVALENCE] = {"simple": str(simple.status), "ih": str(ih.status)}

    if certifying and refuting:
        raise ConsistencyError(
            [f"pure infiniteness both certified ({', '.join(certifying)}) and refuted ({', '.join(refuting)})"]
        )
    if certifying:
        return Verdict(QUESTION_PURELY_INFINITE, Status.CERTIFIED, tuple(certifying), certifying)
    if refuting:
        return Verdict(QUESTION_PURELY_INFINITE, Status.REFUTED, tuple(refuting), refuting)
    return _unknown(QUESTION_PURELY_INFINITE, CAVEAT_ONE_DIRECTIONAL)


def decide_gauge_invariance(results: AnalysisResult) -> Verdict:
    """Every ideal is gauge-invariant when the space is strongly disagreeable."""
    if not results.profile.wlr.holds:
        return _unknown(
            QUESTION_GAUGE_INVARIANT_IDEALS, CAVEAT_WLR_FAILED, rules=(RULE_STANDING_ASSUMPTION,)
        )
    if results.strongly_disagreeable.holds:
        return Verdict(
            QUESTION_GAUGE_INVARIANT_IDEALS,
            Status.CERTIFIED,
            (RULE_STRONGLY_DISAGREEABLE_GAUGE,),
            {
                RULE_STRONGLY_DISAGREEABLE_GAUGE: {
                    "strongly_disagreeable": True,
                    "ideals": len(results.lattice.cores),
                }
            },
        )
    return _unknown(QUESTION_GAUGE_INVARIANT_IDEALS, CAVEAT_ONE_DIRECTIONAL)


def infinite_projection_report(results: AnalysisResult) -> list[dict[str, Any]]:
    """Loop bases whose projection is infinite: every loop that has an exit."""
    report = []
    for atom in results.space.atoms:
        for witness in results.loops.get(atom, []):
            if witness.has_exit:
                first = witness.exits[0]
                report.append(
                    {
                        "base": _set(results, atom),
                        "word": list(witness.word),
                        "exit": first.kind,
                        "exit_word": list(first.word) if first.word is not None else None,
                    }
                )
                break
    return report


def decide_infinite_projection(results: AnalysisResult) -> Verdict:
    """An infinite projection exists when some loop has an exit."""
    if not results.profile.wlr.holds:
        return _unknown(
            QUESTION_INFINITE_PROJECTION, CAVEAT_WLR_FAILED, rules=(RULE_STANDING_ASSUMPTION,)
        )
    report = infinite_projection_report(results)
    if report:
        return Verdict(
            QUESTION_INFINITE_PROJECTION,
            Status.CERTIFIED,
            (RULE_LOOP_WITH_EXIT,),
            {RULE_LOOP_WITH_EXIT: report},
        )
    return _unknown(QUESTION_INFINITE_PROJECTION, CAVEAT_ONE_DIRECTIONAL)


def decide_all(results: AnalysisResult) -> list[Verdict]:
    """Every verdict, in report order."""
    simple = decide_simplicity(results)
    ih = decide_IH(results)
    return [
        simple,
        ih,
        decide_purely_infinite(results, simple, ih),
        decide_gauge_invariance(results),
        decide_infinite_projection(results),
    ]
