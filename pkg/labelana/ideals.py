"""Hereditary saturated cores, their lattice and quotient spaces."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .const import (
    DEFAULT_COVER_MODE,
    DEFAULT_WORD_BOUND_MULTIPLIER,
    MINIMAL_SET_SELF_CHECK_ATOMS,
)
from .dynamics import (
    ConditionLE,
    ConnectsResult,
    DisagreeableResult,
    SubsetAutomaton,
    condition_L_E,
    connects_to_loop,
    is_disagreeable,
)
from .exceptions import AtomBudgetExceeded, ValidationError, WellDefinednessFailure
from .labeled_space import (
    AtomSpace,
    StarReport,
    WeaklyLeftResolving,
    check_weakly_left_resolving,
    condition_star,
)

_LOGGER = logging.getLogger(__name__)


def is_range_closed(space: AtomSpace, core: int) -> bool:
    """True when every letter maps core into itself."""
    return all(space.step(core, letter) & ~core == 0 for letter in space.alphabet)


def is_saturated(space: AtomSpace, core: int) -> bool:
    """True when no atom outside core has all of its ranges inside core."""
    for atom in space.atoms:
        if atom & core:
            continue
        if all(space.step(atom, letter) & ~core == 0 for letter in space.alphabet):
            return False
    return True


def is_core(space: AtomSpace, core: int) -> bool:
    """True when core is a range-closed, saturated union of atoms."""
    return space.is_member(core) and is_range_closed(space, core) and is_saturated(space, core)


def saturate_hereditary_closure(space: AtomSpace, seed: int) -> int:
    """Smallest hereditary saturated core containing seed."""
    core = space.cover(seed)
    while True:
        previous = core
        grown = True
        while grown:
            grown = False
            for letter in space.alphabet:
                target = space.step(core, letter)
                if target & ~core:
                    core |= target
                    grown = True
        for atom in space.atoms:
            if atom & core:
                continue
            if all(space.step(atom, letter) & ~core == 0 for letter in space.alphabet):
                core |= atom
        if core == previous:
            return core


@dataclass(frozen=True)
class CoreLattice:
    """All cores of a space, ordered by atom-mask value, with covering pairs."""

    cores: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]

    @property
    def is_trivial(self) -> bool:
        return len(self.cores) == 2


def enumerate_cores(space: AtomSpace) -> CoreLattice:
    """Enumerate every core and the Hasse diagram of inclusion."""
    if len(space.atoms) > space.max_atoms:
        raise AtomBudgetExceeded(len(space.atoms), space.max_atoms)

    cores = tuple(
        core
        for core in space.enumerate_family()
        if is_range_closed(space, core) and is_saturated(space, core)
    )
    hasse = []
    for i, lower in enumerate(cores):
        for j, upper in enumerate(cores):
            if i == j or lower & ~upper or lower == upper:
                continue
            between = any(
                k not in (i, j) and lower & ~mid == 0 and mid & ~upper == 0
                for k, mid in enumerate(cores)
            )
            if not between:
                hasse.append((i, j))
    _LOGGER.debug("Found %d hereditary saturated cores", len(cores))
    return CoreLattice(cores, tuple(hasse))


class QuotientSpace(AtomSpace):
    """Space of sets modulo a core, realized on the complement of the core."""

    def __init__(self, parent: AtomSpace, core: int) -> None:
        """Restrict the parent dynamics to the complement of core."""
        self.parent = parent
        self.core = core
        self.graph = parent.graph
        self.max_atoms = parent.max_atoms
        self.universe = parent.universe & ~core
        self.atoms = tuple(atom for atom in parent.atoms if not atom & core)
        self.alphabet = tuple(letter for letter, _ in self.initial_ranges())

    @property
    def is_zero(self) -> bool:
        """True for the quotient by the whole space."""
        return not self.atoms

    def step(self, mask: int, letter: str) -> int:
        """Parent range with the core removed."""
        return self.parent.step(mask, letter) & ~self.core

    def initial_ranges(self) -> list[tuple[str, int]]:
        """Parent ranges r(a) outside the core."""
        result = []
        for letter, target in self.parent.initial_ranges():
            if target & ~self.core:
                result.append((letter, target & ~self.core))
        return result

    def canonical(self, mask: int) -> int:
        """Representative of the class of a parent set."""
        return mask & ~self.core


def _hereditary_members(parent: AtomSpace, core: int) -> list[int]:
    """Every union of atoms inside core, the empty set included."""
    members = [0]
    for atom in parent.atoms_in(core):
        members += [member | atom for member in members]
    return members


def _check_well_defined(parent: AtomSpace, quotient_space: QuotientSpace) -> None:
    """Recompute the quotient operations on atoms and their unions.

    Two sets share a class when some member W of the core has A | W == B | W.
    That definition is compared with the canonical representatives for small
    spaces.
    """
    core = quotient_space.core
    canon = quotient_space.canonical
    failures: list[str] = []
    atoms = parent.atoms

    if len(atoms) <= MINIMAL_SET_SELF_CHECK_ATOMS:
        hereditary = _hereditary_members(parent, core)
        sample = (0, *atoms, *(atom | core for atom in atoms))
        for first in sample:
            for second in sample:
                same = any(first | w == second | w for w in hereditary)
                if same != (canon(first) == canon(second)):
                    failures.append("class")

    for i, first in enumerate(atoms):
        for second in atoms[i:]:
            union = first | second
            for letter in parent.alphabet:
                direct = parent.step(union, letter) & ~core
                if direct != quotient_space.step(canon(union), letter):
                    failures.append(f"range under {letter}")
    if failures:
        raise WellDefinednessFailure(f"quotient operations disagree: {', '.join(sorted(set(failures)))}")

    for atom in quotient_space.atoms:
        if not quotient_space.live_letters(atom):
            raise WellDefinednessFailure(
                f"quotient atom {{{','.join(parent.names(atom))}}} has no outgoing letter"
            )


def quotient(space: AtomSpace, core: int) -> QuotientSpace:
    """Build and validate the quotient of space by a core."""
    if not is_core(space, core):
        raise ValidationError("NotHereditarySaturated", ",".join(space.names(core)))
    result = QuotientSpace(space, core)
    if result.is_zero:
        _LOGGER.debug("Quotient by the whole space is zero")
        return result
    _check_well_defined(space, result)
    return result


def quotient_of_quotient(space: AtomSpace, inner: int, outer: int) -> bool:
    """Check that dividing by inner and then by the rest of outer equals dividing by outer."""
    if inner & ~outer:
        raise ValidationError("NotNested", ",".join(space.names(inner)))
    direct = quotient(space, outer)
    first = quotient(space, inner)
    staged = quotient(first, outer & ~inner)
    if direct.atoms != staged.atoms or direct.alphabet != staged.alphabet:
        return False
    return all(
        direct.step(atom, letter) == staged.step(atom, letter)
        for atom in direct.atoms
        for letter in direct.alphabet
    )


@dataclass(frozen=True)
class QuotientSummary:
    """Predicates of one nonzero quotient."""

    core: int
    atoms: tuple[int, ...]
    alphabet: tuple[str, ...]
    disagreeable: DisagreeableResult
    l_e: ConditionLE
    connects: ConnectsResult
    star: StarReport
    wlr: WeaklyLeftResolving


def quotient_predicates(
    quotient_space: QuotientSpace,
    cover_mode: str = DEFAULT_COVER_MODE,
    allow_epsilon: bool = False,
    multiplier: int = DEFAULT_WORD_BOUND_MULTIPLIER,
) -> QuotientSummary:
    """Re-run the dynamics on a nonzero quotient."""
    if quotient_space.is_zero:
        raise ValidationError("ZeroQuotient", ",".join(quotient_space.names(quotient_space.core)))
    aut = SubsetAutomaton(quotient_space)
    return QuotientSummary(
        core=quotient_space.core,
        atoms=quotient_space.atoms,
        alphabet=quotient_space.alphabet,
        disagreeable=is_disagreeable(aut),
        l_e=condition_L_E(aut),
        connects=connects_to_loop(aut, cover_mode, allow_epsilon, multiplier),
        star=condition_star(quotient_space),
        wlr=check_weakly_left_resolving(quotient_space),
    )


@dataclass(frozen=True)
class StronglyDisagreeable:
    """Strong disagreeability with the first failing core."""

    holds: bool
    failing_core: int | None = None
    witness: tuple[int, tuple[str, ...]] | None = None


def strongly_disagreeable(summaries: list[QuotientSummary]) -> StronglyDisagreeable:
    """Every proper-core quotient must be disagreeable."""
    for summary in summaries:
        if not summary.disagreeable.holds:
            return StronglyDisagreeable(False, summary.core, summary.disagreeable.witness)
    return StronglyDisagreeable(True)


def proper_core_summaries(
    space: AtomSpace,
    lattice: CoreLattice,
    cover_mode: str = DEFAULT_COVER_MODE,
    allow_epsilon: bool = False,
    multiplier: int = DEFAULT_WORD_BOUND_MULTIPLIER,
) -> list[QuotientSummary]:
    """Quotient summaries for every core except the whole space."""
    return [
        quotient_predicates(quotient(space, core), cover_mode, allow_epsilon, multiplier)
        for core in lattice.cores
        if core != space.universe
    ]
