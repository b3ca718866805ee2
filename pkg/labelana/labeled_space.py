"""Generalized vertices, the accommodating family and its structural checks."""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .const import DEFAULT_MAX_ATOMS, MINIMAL_SET_SELF_CHECK_ATOMS
from .exceptions import AtomBudgetExceeded, ConsistencyError, EmptyOmega0, ValidationError
from .graph_model import LabeledGraph

_LOGGER = logging.getLogger(__name__)


def lowest_bit(mask: int) -> int:
    """Return the lowest set bit of a mask."""
    return mask & -mask


def split_classes(classes: Iterable[int], splitters: Iterable[int]) -> tuple[int, ...]:
    """Refine disjoint classes by membership in each splitter set.

    The result is ordered by the lowest vertex of each class.
    """
    current = [c for c in classes if c]
    for splitter in splitters:
        refined: list[int] = []
        for cls in current:
            inside = cls & splitter
            outside = cls & ~splitter
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        current = refined
    return tuple(sorted(current, key=lowest_bit))


@dataclass(frozen=True)
class AtomPartition:
    """Generalized-vertex partition of the non-source vertices."""

    atoms: tuple[int, ...]
    stabilization_depth: int
    per_level: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class ESet:
    """A member of the accommodating family, as a set of atom indices."""

    atom_mask: int

    @property
    def indices(self) -> list[int]:
        """Atom indices in ascending order."""
        return [i for i in range(self.atom_mask.bit_length()) if self.atom_mask >> i & 1]

    def __bool__(self) -> bool:
        return bool(self.atom_mask)


def refine_partition(graph: LabeledGraph) -> AtomPartition:
    """Compute generalized vertices level by level until no new range appears.

    v and w share a level-l class exactly when they lie in the same sets r(alpha)
    with |alpha| <= l, which is the same as receiving the same label words of
    length at most l.
    """
    if not graph.omega0:
        raise EmptyOmega0("every vertex is a source; the family only holds the empty set")

    seen: set[int] = set()
    frontier: list[int] = []
    for letter in graph.alphabet:
        target = graph.range_of((letter,))
        if target and target not in seen:
            seen.add(target)
            frontier.append(target)

    classes = split_classes((graph.omega0,), frontier)
    levels = [classes]
    while True:
        fresh: list[int] = []
        for mask in frontier:
            for letter in graph.alphabet:
                target = graph.letter_range(mask, letter)
                if target and target not in seen:
                    seen.add(target)
                    fresh.append(target)
        if not fresh:
            break
        classes = split_classes(classes, fresh)
        levels.append(classes)
        frontier = fresh

    final = levels[-1]
    depth = next(level for level, cls in enumerate(levels, start=1) if cls == final)
    _LOGGER.debug(
        "Partition of %s stabilized at depth %d with %d classes (%d distinct ranges)",
        graph.name,
        depth,
        len(final),
        len(seen),
    )
    return AtomPartition(atoms=final, stabilization_depth=depth, per_level=tuple(levels[:depth]))


def closure_atoms(graph: LabeledGraph, partition: AtomPartition) -> tuple[int, ...]:
    """Atoms of the smallest family holding every r(alpha), closed under
    boolean operations and relative ranges."""
    atoms = partition.atoms
    while True:
        ranges = sorted(
            {graph.letter_range(atom, letter) for atom in atoms for letter in graph.alphabet} - {0}
        )
        refined = split_classes(atoms, ranges)
        if refined == atoms:
            return atoms
        atoms = refined


class AtomSpace:
    """A finite space of vertex sets generated by disjoint atoms.

    Subclasses provide the letter dynamics; every set handled here is a vertex
    mask that is a union of atoms.
    """

    graph: LabeledGraph
    atoms: tuple[int, ...]
    alphabet: tuple[str, ...]
    universe: int
    max_atoms: int

    def step(self, mask: int, letter: str) -> int:
        """Relative range of a member set under one letter."""
        raise NotImplementedError

    def initial_ranges(self) -> list[tuple[str, int]]:
        """Nonempty one-letter ranges r(a), in alphabet order."""
        raise NotImplementedError

    def word_step(self, mask: int, word: Iterable[str]) -> int:
        """Relative range under a word; the empty word returns the set itself."""
        for letter in word:
            if not mask:
                break
            mask = self.step(mask, letter)
        return mask

    def live_letters(self, mask: int) -> list[tuple[str, int]]:
        """Letters with nonempty range from mask, with their targets."""
        result = []
        for letter in self.alphabet:
            target = self.step(mask, letter)
            if target:
                result.append((letter, target))
        return result

    def is_member(self, mask: int) -> bool:
        """Return True when mask is a union of atoms."""
        covered = 0
        for atom in self.atoms:
            if atom & mask:
                if atom & mask != atom:
                    return False
                covered |= atom
        return covered == mask

    def to_eset(self, mask: int) -> ESet:
        """Convert a member vertex mask to its atom-index form."""
        if not self.is_member(mask):
            raise ValidationError("NotInFamily", ",".join(self.graph.names(mask)))
        return ESet(sum(1 << i for i, atom in enumerate(self.atoms) if atom & mask))

    def vertices_of(self, eset: ESet) -> int:
        """Vertex mask denoted by an ESet."""
        mask = 0
        for i in eset.indices:
            mask |= self.atoms[i]
        return mask

    def cover(self, mask: int) -> int:
        """Smallest union of atoms containing mask, after dropping outside vertices."""
        if mask & ~self.universe:
            _LOGGER.warning(
                "Vertices %s lie outside the space and were dropped",
                ", ".join(self.graph.names(mask & ~self.universe)),
            )
            mask &= self.universe
        result = 0
        for atom in self.atoms:
            if atom & mask:
                result |= atom
        if result != mask:
            _LOGGER.warning(
                "Set %s is not a union of atoms; enlarged to %s",
                ",".join(self.graph.names(mask)),
                ",".join(self.graph.names(result)),
            )
        return result

    def atoms_in(self, mask: int) -> list[int]:
        """Atoms contained in a member set."""
        return [atom for atom in self.atoms if atom & mask]

    def names(self, mask: int) -> list[str]:
        """Vertex identifiers of a mask."""
        return self.graph.names(mask)

    def enumerate_family(self) -> Iterator[int]:
        """Yield every member set as a vertex mask, ordered by atom-mask value."""
        if len(self.atoms) > self.max_atoms:
            raise AtomBudgetExceeded(len(self.atoms), self.max_atoms)
        for atom_mask in range(1 << len(self.atoms)):
            yield self.vertices_of(ESet(atom_mask))


class LabeledSpace(AtomSpace):
    """The labeled space of a graph with its smallest normal accommodating family."""

    def __init__(self, graph: LabeledGraph, max_atoms: int = DEFAULT_MAX_ATOMS) -> None:
        """Build the partition and the closure atoms."""
        self.graph = graph
        self.alphabet = graph.alphabet
        self.universe = graph.omega0
        self.max_atoms = max_atoms
        self.partition = refine_partition(graph)
        self.atoms = closure_atoms(graph, self.partition)
        self.ce_agrees = self.atoms == self.partition.atoms

    def step(self, mask: int, letter: str) -> int:
        """Relative range in the graph."""
        return self.graph.letter_range(mask, letter)

    def initial_ranges(self) -> list[tuple[str, int]]:
        """Nonempty ranges r(a)."""
        result = []
        for letter in self.alphabet:
            target = self.graph.range_of((letter,))
            if target:
                result.append((letter, target))
        return result


@dataclass(frozen=True)
class WeaklyLeftResolving:
    """Outcome of the weakly left-resolving check."""

    holds: bool
    counterexample: tuple[int, int, str] | None = None


@dataclass(frozen=True)
class StarReport:
    """Outcome of condition (*)."""

    holds: bool
    contains_minimal: bool
    ranges_are_unions: bool
    checked_states: int


@dataclass
class SpaceProfile:
    """Structural summary of an atom space."""

    space: AtomSpace
    wlr: WeaklyLeftResolving
    minimal_sets: list[ESet]
    star: StarReport
    warnings: list[str] = field(default_factory=list)


def check_weakly_left_resolving(space: AtomSpace) -> WeaklyLeftResolving:
    """Check r(A,a) & r(B,a) == r(A & B, a) over the family.

    Ranges are unions over atoms, so it is enough that distinct atoms have
    disjoint one-letter ranges.
    """
    ranges = [[space.step(atom, letter) for letter in space.alphabet] for atom in space.atoms]
    for i, first in enumerate(space.atoms):
        for j in range(i + 1, len(space.atoms)):
            for k, letter in enumerate(space.alphabet):
                if ranges[i][k] & ranges[j][k]:
                    return WeaklyLeftResolving(False, (first, space.atoms[j], letter))
    return WeaklyLeftResolving(True)


def minimal_sets(space: AtomSpace) -> list[ESet]:
    """Return the minimal nonempty members: exactly the single atoms."""
    result = [ESet(1 << i) for i in range(len(space.atoms))]
    if len(space.atoms) <= MINIMAL_SET_SELF_CHECK_ATOMS:
        members = range(1, 1 << len(space.atoms))
        brute = [
            ESet(a)
            for a in members
            if all(a & b in (a, 0) for b in members)
        ]
        if brute != result:
            raise ConsistencyError(["minimal sets differ from single atoms"])
    return result


def condition_star(space: AtomSpace) -> StarReport:
    """Evaluate condition (*) over every range reachable from an atom."""
    seen: set[int] = set()
    queue: deque[int] = deque()
    for atom in space.atoms:
        if atom not in seen:
            seen.add(atom)
            queue.append(atom)
    unions = True
    while queue:
        mask = queue.popleft()
        if not space.is_member(mask):
            unions = False
        for _letter, target in space.live_letters(mask):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return StarReport(
        holds=unions,
        contains_minimal=True,
        ranges_are_unions=unions,
        checked_states=len(seen),
    )


def profile_space(space: AtomSpace) -> SpaceProfile:
    """Run the structural checks on a space."""
    wlr = check_weakly_left_resolving(space)
    warnings: list[str] = []
    if not wlr.holds:
        first, second, letter = wlr.counterexample  # type: ignore[misc]
        message = (
            f"not weakly left-resolving: atoms {{{','.join(space.names(first))}}} and "
            f"{{{','.join(space.names(second))}}} share range under {letter}"
        )
        _LOGGER.warning("%s", message)
        warnings.append(message)
    if isinstance(space, LabeledSpace):
        if space.graph.sources:
            warnings.append(f"source vertices outside every set: {', '.join(space.graph.sources)}")
        if not space.ce_agrees:
            message = "generalized vertices are coarser than the closure atoms; closure atoms used"
            _LOGGER.warning("%s", message)
            warnings.append(message)
    return SpaceProfile(
        space=space,
        wlr=wlr,
        minimal_sets=minimal_sets(space),
        star=condition_star(space),
        warnings=warnings,
    )
