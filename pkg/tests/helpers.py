"""Brute-force reference computations working on explicit edge lists."""
from __future__ import annotations

from labelana.graph_model import LabeledGraph

VertexSet = frozenset[str]


def path_range(graph: LabeledGraph, sources: set[str] | frozenset[str], word: tuple[str, ...]) -> VertexSet:
    """Endpoints of every edge path from sources labeled word, by path listing."""
    paths: list[list[str]] = [[v] for v in sources]
    for letter in word:
        paths = [
            path + [edge.range]
            for path in paths
            for edge in graph.edges
            if edge.source == path[-1] and edge.label == letter
        ]
    return frozenset(path[-1] for path in paths)


def incoming_words(graph: LabeledGraph, vertex: str, max_length: int) -> set[tuple[str, ...]]:
    """Label words of length 1..max_length of paths ending at vertex."""
    words: set[tuple[str, ...]] = set()
    suffixes: list[tuple[str, tuple[str, ...]]] = [(vertex, ())]
    for _ in range(max_length):
        suffixes = [
            (edge.source, (edge.label,) + word)
            for start, word in suffixes
            for edge in graph.edges
            if edge.range == start
        ]
        words.update(word for _start, word in suffixes)
    return words


def explicit_family(graph: LabeledGraph) -> set[VertexSet]:
    """Smallest family with every r(alpha), closed under set operations and letter ranges."""
    everything = frozenset(graph.vertices)
    family: set[VertexSet] = {frozenset()}
    frontier = {path_range(graph, everything, (letter,)) for letter in graph.alphabet} - family
    while frontier:
        family |= frontier
        members = list(family)
        grown: set[VertexSet] = set()
        for first in frontier:
            for second in members:
                grown.update((first | second, first & second, first - second, second - first))
            for letter in graph.alphabet:
                grown.add(path_range(graph, first, (letter,)))
        frontier = grown - family
    return family


def family_atoms(family: set[VertexSet]) -> list[VertexSet]:
    """Minimal nonempty members of a family."""
    nonempty = [member for member in family if member]
    return [a for a in nonempty if all(a & b in (a, frozenset()) for b in nonempty)]


def forced_run(graph: LabeledGraph, start: frozenset[str], length: int) -> list[tuple[tuple[str, ...], VertexSet]] | None:
    """Follow the unique label word from start; None when two words appear.

    Returns the (word, endpoint set) pairs for every length up to length.
    """
    words: dict[tuple[str, ...], set[str]] = {(): set(start)}
    run = []
    for _ in range(length):
        following: dict[tuple[str, ...], set[str]] = {}
        for word, ends in words.items():
            for edge in graph.edges:
                if edge.source in ends:
                    following.setdefault(word + (edge.label,), set()).add(edge.range)
        if len(following) != 1:
            return None
        words = following
        (word, ends), = words.items()
        run.append((word, frozenset(ends)))
    return run


def brute_disagreeable(graph: LabeledGraph) -> bool:
    """No member A whose label words are all powers of one word."""
    horizon = 4 * 2 ** len(graph.vertices)
    for member in explicit_family(graph):
        if not member:
            continue
        run = forced_run(graph, member, horizon)
        if run is None:
            continue
        word = run[-1][0]
        for period in range(1, 2 ** len(graph.vertices) + 1):
            if all(word[i] == word[i + period] for i in range(len(word) - period)):
                return False
    return True


def brute_condition_L_E(graph: LabeledGraph) -> bool:
    """No cycle without exits over the explicit family."""
    family = explicit_family(graph)
    horizon = 2 ** len(graph.vertices)
    for member in family:
        if not member:
            continue
        run = forced_run(graph, member, horizon)
        if run is None:
            continue
        for word, ends in run:
            if ends != member:
                continue
            subsets = [b for b in family if b and b <= member]
            if all(path_range(graph, b, word) == b for b in subsets):
                return False
    return True


def brute_weakly_left_resolving(graph: LabeledGraph) -> bool:
    """r(A,a) & r(B,a) == r(A & B, a) for all members A, B."""
    family = list(explicit_family(graph))
    for first in family:
        for second in family:
            for letter in graph.alphabet:
                left = path_range(graph, first, (letter,)) & path_range(graph, second, (letter,))
                if left != path_range(graph, first & second, (letter,)):
                    return False
    return True


def brute_cores(graph: LabeledGraph) -> set[VertexSet]:
    """Unions of hereditary saturated subfamilies, from the definitions."""
    family = explicit_family(graph)
    cores = set()
    for core in family:
        closed = all(path_range(graph, core, (letter,)) <= core for letter in graph.alphabet)
        if not closed:
            continue
        saturated = all(
            member <= core
            for member in family
            if all(path_range(graph, member, (letter,)) <= core for letter in graph.alphabet)
        )
        if saturated:
            cores.add(core)
    return cores


def realized_ranges(graph: LabeledGraph, max_length: int) -> set[VertexSet]:
    """Every nonempty r(alpha) with 1 <= |alpha| <= max_length, one letter at a time."""
    everything = frozenset(graph.vertices)
    layer = {path_range(graph, everything, (letter,)) for letter in graph.alphabet}
    layer.discard(frozenset())
    found = set(layer)
    for _ in range(max_length - 1):
        layer = {path_range(graph, ends, (letter,)) for ends in layer for letter in graph.alphabet}
        layer.discard(frozenset())
        found |= layer
    return found


def relative_ranges(graph: LabeledGraph, start: VertexSet) -> set[VertexSet]:
    """Every nonempty r(start, alpha) over nonempty words alpha."""
    found: set[VertexSet] = set()
    frontier = {path_range(graph, start, (letter,)) for letter in graph.alphabet}
    while frontier:
        frontier.discard(frozenset())
        found |= frontier
        frontier = {
            path_range(graph, ends, (letter,)) for ends in frontier for letter in graph.alphabet
        } - found
    return found


def brute_strongly_cofinal(graph: LabeledGraph) -> bool:
    """No arbitrarily long word whose every prefix range leaves Good(b) for some atom b."""
    everything = frozenset(graph.vertices)
    horizon = 2 ** len(graph.vertices) + 1
    for atom in family_atoms(explicit_family(graph)):
        good = frozenset().union(*relative_ranges(graph, atom))
        layer = {path_range(graph, everything, (letter,)) for letter in graph.alphabet}
        layer = {ends for ends in layer if ends and not ends <= good}
        for _ in range(horizon):
            layer = {path_range(graph, ends, (letter,)) for ends in layer for letter in graph.alphabet}
            layer = {ends for ends in layer if ends and not ends <= good}
        if layer:
            return False
    return True


def has_other_word(graph: LabeledGraph, base: VertexSet, word: tuple[str, ...]) -> bool:
    """True when base emits a path of length |word| labeled differently.

    Without sinks every path extends, so a differing letter after a shared
    prefix is enough.
    """
    for i, letter in enumerate(word):
        ends = path_range(graph, base, word[:i])
        for other in graph.alphabet:
            if other != letter and path_range(graph, ends, (other,)):
                return True
    return False
