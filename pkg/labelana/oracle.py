"""Classical graph-algebra conditions for injectively labeled graphs."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from .exceptions import OracleInapplicable
from .graph_model import LabeledGraph

_LOGGER = logging.getLogger(__name__)


def plain_graph(graph: LabeledGraph) -> nx.MultiDiGraph:
    """Return the underlying multigraph; labels must be injective."""
    if not graph.is_injective:
        raise OracleInapplicable(f"graph {graph.name} repeats a label; the oracle needs one label per edge")
    plain = nx.MultiDiGraph()
    plain.add_nodes_from(graph.vertices)
    for edge in graph.edges:
        plain.add_edge(edge.source, edge.range, key=edge.label)
    return plain


def _cyclic_components(plain: nx.MultiDiGraph) -> list[set[str]]:
    """Strongly connected components that carry a cycle."""
    return [
        component
        for component in nx.strongly_connected_components(plain)
        if len(component) > 1 or any(plain.has_edge(v, v) for v in component)
    ]


def condition_L(graph: LabeledGraph) -> bool:
    """Every cycle has an exit.

    A cycle without exit is exactly a cyclic component in which every vertex
    emits a single edge.
    """
    plain = plain_graph(graph)
    return not any(
        all(plain.out_degree(v) == 1 for v in component) for component in _cyclic_components(plain)
    )


def condition_K(graph: LabeledGraph) -> bool:
    """No vertex is the base of exactly one return path.

    That happens exactly when a cyclic component is a bare cycle, with as many
    internal edges as vertices.
    """
    plain = plain_graph(graph)
    for component in _cyclic_components(plain):
        internal = plain.subgraph(component).number_of_edges()
        if internal == len(component):
            return False
    return True


def vertex_connects_to_loop_graph(graph: LabeledGraph) -> bool:
    """Every vertex reaches a vertex lying on a cycle."""
    plain = plain_graph(graph)
    on_cycle: set[str] = set().union(*_cyclic_components(plain))
    for vertex in plain.nodes:
        if vertex in on_cycle:
            continue
        if not nx.descendants(plain, vertex) & on_cycle:
            return False
    return True


@dataclass(frozen=True)
class OracleReport:
    """Classical conditions of an injectively labeled graph."""

    L: bool
    K: bool
    connects: bool

    @property
    def IH(self) -> bool:
        """Every hereditary subalgebra holds an infinite projection."""
        return self.L and self.connects


def oracle_report(graph: LabeledGraph) -> OracleReport:
    """Evaluate every classical condition."""
    report = OracleReport(
        L=condition_L(graph),
        K=condition_K(graph),
        connects=vertex_connects_to_loop_graph(graph),
    )
    _LOGGER.debug("Oracle for %s: %s", graph.name, report)
    return report
