"""Random graphs and differential runs against the classical oracle."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Any

from .analysis import analyze
from .config import Config
from .const import QUESTION_IH
from .exceptions import ConsistencyError
from .graph_model import LabeledGraph, build_graph, injective_relabel, to_json
from .oracle import oracle_report
from .verdicts import Status

_LOGGER = logging.getLogger(__name__)

LETTERS = "abcdefgh"
DEFAULT_FUZZ_MAX_EDGES = 12


def random_graph(
    rng: random.Random,
    size: int,
    letters: int = 3,
    max_edges: int = DEFAULT_FUZZ_MAX_EDGES,
    name: str = "fuzz",
) -> LabeledGraph:
    """A random graph without sinks on at most size vertices."""
    count = rng.randint(1, size)
    vertices = [f"v{i}" for i in range(count)]
    alphabet = LETTERS[: max(1, letters)]
    edges: list[tuple[str, str, str]] = []
    seen: set[tuple[str, str, str]] = set()

    def add(src: str) -> None:
        edge = (src, rng.choice(vertices), rng.choice(alphabet))
        if edge not in seen:
            seen.add(edge)
            edges.append(edge)

    for vertex in vertices:
        add(vertex)
    for _ in range(rng.randint(0, max(0, max_edges - count))):
        add(rng.choice(vertices))
    return build_graph(vertices, edges, name)


@dataclass
class FuzzSummary:
    """Outcome of a differential run."""

    total: int
    agreements: int
    counterexample: LabeledGraph | None = None
    reason: str | None = None

    def describe(self) -> str:
        return f"{self.agreements}/{self.total} oracle agreements"

    def as_dict(self) -> dict[str, Any]:
        """JSON-ready form, with the counterexample as a graph description."""
        return {
            "total": self.total,
            "agreements": self.agreements,
            "counterexample": to_json(self.counterexample) if self.counterexample is not None else None,
            "reason": self.reason,
        }


def compare_with_oracle(graph: LabeledGraph, config: Config | None = None) -> str | None:
    """Return the first disagreement between the labeled analysis and the oracle."""
    injective = injective_relabel(graph)
    result = analyze(injective, config)
    oracle = oracle_report(injective)
    if result.disagreeable.holds != oracle.L:
        return f"disagreeable={result.disagreeable.holds} but condition (L)={oracle.L}"
    if result.strongly_disagreeable.holds != oracle.K:
        return f"strongly disagreeable={result.strongly_disagreeable.holds} but condition (K)={oracle.K}"
    ih = result.verdict(QUESTION_IH).status == Status.CERTIFIED
    if ih != oracle.IH:
        return f"IH certified={ih} but classical IH={oracle.IH}"
    return None


def run_fuzz(count: int, size: int, seed: int, config: Config | None = None) -> FuzzSummary:
    """Analyze random graphs, checking the consistency mesh and the oracle."""
    rng = random.Random(seed)
    summary = FuzzSummary(total=count, agreements=0)
    for case in range(count):
        graph = random_graph(rng, size, letters=rng.randint(1, 3), name=f"fuzz{case}")
        try:
            analyze(graph, config)
            reason = compare_with_oracle(graph, config)
        except ConsistencyError as err:
            reason = f"consistency failure: {err}"
        if reason is not None:
            _LOGGER.warning("Case %d disagrees with the oracle: %s", case, reason)
            summary.counterexample = graph
            summary.reason = reason
            break
        summary.agreements += 1
    return summary
