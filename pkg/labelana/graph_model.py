"""Finite labeled graphs: parsing, validation and letter ranges."""
from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import voluptuous as vol

from .const import DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES
from .exceptions import ParseError, ResourceBoundExceeded, ValidationError

_LOGGER = logging.getLogger(__name__)

Word = tuple[str, ...]

# Identifiers and labels are single .lgr tokens
TOKEN = vol.All(str, vol.Match(r"^[^\s:#]+\Z"))

GRAPH_JSON_SCHEMA = vol.Schema(
    {
        vol.Optional("name", default="graph"): TOKEN,
        vol.Required("vertices"): [TOKEN],
        vol.Required("edges"): [
            {
                vol.Required("src"): TOKEN,
                vol.Required("dst"): TOKEN,
                vol.Required("label"): TOKEN,
            }
        ],
    }
)


@dataclass(frozen=True)
class Edge:
    """A labeled edge source --label--> range."""

    source: str
    range: str
    label: str


@dataclass(frozen=True)
class LabeledGraph:
    """A finite labeled graph with no sinks.

    Vertex order fixes the bit index of every vertex, so all vertex sets are
    plain integers (bit i is the i-th declared vertex).
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    name: str = "graph"
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the graph invariants."""
        index: dict[str, int] = {}
        for position, vertex in enumerate(self.vertices):
            if vertex in index:
                raise ValidationError("DuplicateVertex", vertex)
            index[vertex] = position
        object.__setattr__(self, "_index", index)

        seen: set[Edge] = set()
        for edge in self.edges:
            for end in (edge.source, edge.range):
                if end not in index:
                    raise ParseError(f"edge {edge.source} -> {edge.range} uses unknown vertex {end!r}")
            if edge in seen:
                raise ValidationError(
                    "DuplicateEdge", f"{edge.source} {edge.range} : {edge.label}"
                )
            seen.add(edge)

        emitting = {edge.source for edge in self.edges}
        for vertex in self.vertices:
            if vertex not in emitting:
                raise ValidationError("Sink", vertex)

    @cached_property
    def alphabet(self) -> tuple[str, ...]:
        """Letters in order of first appearance on the edge list."""
        return tuple(dict.fromkeys(edge.label for edge in self.edges))

    @cached_property
    def all_mask(self) -> int:
        """Mask of every vertex."""
        return (1 << len(self.vertices)) - 1

    @cached_property
    def omega0(self) -> int:
        """Mask of the vertices that receive at least one edge."""
        mask = 0
        for edge in self.edges:
            mask |= 1 << self._index[edge.range]
        return mask

    @cached_property
    def sources(self) -> tuple[str, ...]:
        """Vertices receiving no edge."""
        return tuple(v for i, v in enumerate(self.vertices) if not self.omega0 >> i & 1)

    @cached_property
    def _successors(self) -> dict[str, tuple[int, ...]]:
        """Per letter, the range mask of each single vertex."""
        table = {letter: [0] * len(self.vertices) for letter in self.alphabet}
        for edge in self.edges:
            table[edge.label][self._index[edge.source]] |= 1 << self._index[edge.range]
        return {letter: tuple(row) for letter, row in table.items()}

    def index_of(self, vertex: str) -> int:
        """Return the bit index of a vertex."""
        try:
            return self._index[vertex]
        except KeyError as err:
            raise ValidationError("UnknownVertex", vertex) from err

    def mask_of(self, vertices: Iterable[str]) -> int:
        """Return the mask of a collection of vertex identifiers."""
        mask = 0
        for vertex in vertices:
            mask |= 1 << self.index_of(vertex)
        return mask

    def names(self, mask: int) -> list[str]:
        """Return the vertex identifiers of a mask in declaration order."""
        return [v for i, v in enumerate(self.vertices) if mask >> i & 1]

    def letter_range(self, mask: int, letter: str) -> int:
        """Relative range r(A, a) of a vertex mask under one letter."""
        row = self._successors.get(letter)
        if row is None:
            return 0
        result = 0
        while mask:
            low = mask & -mask
            result |= row[low.bit_length() - 1]
            mask ^= low
        return result

    def word_range(self, mask: int, word: Sequence[str]) -> int:
        """Relative range r(A, w); the empty word returns A itself."""
        for letter in word:
            if not mask:
                break
            mask = self.letter_range(mask, letter)
        return mask

    def range_of(self, word: Sequence[str]) -> int:
        """Range r(w) of a word from all vertices."""
        if not word:
            return self.all_mask
        return self.word_range(self.all_mask, word)

    @property
    def is_injective(self) -> bool:
        """Return True when every edge carries its own label."""
        return len(self.alphabet) == len(self.edges)


def letter_range(graph: LabeledGraph, vertices: Iterable[str], letter: str) -> frozenset[str]:
    """Relative range of a set of vertex identifiers under one letter."""
    mask = graph.letter_range(graph.mask_of(vertices), letter)
    return frozenset(graph.names(mask))


def build_graph(
    vertices: Sequence[str],
    edges: Iterable[tuple[str, str, str]],
    name: str = "graph",
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> LabeledGraph:
    """Build a validated graph from plain tuples, enforcing size caps."""
    edge_list = tuple(Edge(src, dst, label) for src, dst, label in edges)
    if len(vertices) > max_vertices:
        raise ResourceBoundExceeded(f"{len(vertices)} vertices exceed the cap of {max_vertices}")
    if len(edge_list) > max_edges:
        raise ResourceBoundExceeded(f"{len(edge_list)} edges exceed the cap of {max_edges}")

    graph = LabeledGraph(vertices=tuple(vertices), edges=edge_list, name=name)
    if graph.sources:
        _LOGGER.warning(
            "Source vertices %s receive no edge and belong to no set of the family",
            ", ".join(graph.sources),
        )
    return graph


def _parse_lgr(text: str, default_name: str) -> tuple[str, list[str], list[tuple[str, str, str]]]:
    """Parse the line-oriented .lgr format."""
    name: str | None = None
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if keyword == "graph":
            if name is not None:
                raise ParseError("graph name given twice", number)
            tokens = rest.split()
            if len(tokens) != 1 or ":" in tokens[0]:
                raise ParseError("expected 'graph NAME'", number)
            name = tokens[0]
        elif keyword == "vertex":
            tokens = rest.split()
            if not tokens:
                raise ParseError("expected 'vertex ID [ID ...]'", number)
            for token in tokens:
                if ":" in token:
                    raise ParseError(f"vertex identifier {token!r} contains ':'", number)
                vertices.append(token)
        elif keyword == "edge":
            ends, colon, label_part = rest.partition(":")
            ends_tokens = ends.split()
            label_tokens = label_part.split()
            if not colon or len(ends_tokens) != 2 or len(label_tokens) != 1:
                raise ParseError("expected 'edge SRC DST : LABEL'", number)
            if ":" in label_tokens[0]:
                raise ParseError(f"label {label_tokens[0]!r} contains ':'", number)
            src, dst = ends_tokens
            declared = set(vertices)
            for end in (src, dst):
                if end not in declared:
                    raise ParseError(f"unknown vertex {end!r}", number)
            edges.append((src, dst, label_tokens[0]))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", number)

    return name or default_name, vertices, edges


def _parse_json(text: str, default_name: str) -> tuple[str, list[str], list[tuple[str, str, str]]]:
    """Parse the JSON graph description."""
    try:
        data = GRAPH_JSON_SCHEMA(json.loads(text))
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err}") from err
    except vol.Invalid as err:
        raise ParseError(f"JSON graph does not match schema: {err}") from err

    edges = [(e["src"], e["dst"], e["label"]) for e in data["edges"]]
    declared = set(data["vertices"])
    for src, dst, _label in edges:
        for end in (src, dst):
            if end not in declared:
                raise ParseError(f"unknown vertex {end!r}")
    name = data["name"] if data["name"] != "graph" else default_name
    return name, data["vertices"], edges


def parse(
    text: str,
    default_name: str = "graph",
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> LabeledGraph:
    """Parse .lgr or JSON text into a validated LabeledGraph."""
    if text.lstrip().startswith("{"):
        name, vertices, edges = _parse_json(text, default_name)
    else:
        name, vertices, edges = _parse_lgr(text, default_name)

    if not vertices:
        raise ParseError("graph declares no vertices")

    return build_graph(vertices, edges, name, max_vertices, max_edges)


def to_lgr(graph: LabeledGraph) -> str:
    """Render a graph in the .lgr text format."""
    lines = [f"graph {graph.name}", f"vertex {' '.join(graph.vertices)}"]
    lines.extend(f"edge {e.source} {e.range} : {e.label}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def to_json(graph: LabeledGraph) -> dict[str, Any]:
    """Render a graph as the JSON description."""
    return {
        "name": graph.name,
        "vertices": list(graph.vertices),
        "edges": [{"src": e.source, "dst": e.range, "label": e.label} for e in graph.edges],
    }


def injective_relabel(graph: LabeledGraph) -> LabeledGraph:
    """Return the same graph with one fresh label per edge (trivial labeling)."""
    edges = tuple(Edge(e.source, e.range, f"e{i}") for i, e in enumerate(graph.edges))
    return LabeledGraph(vertices=graph.vertices, edges=edges, name=f"{graph.name}-id")
