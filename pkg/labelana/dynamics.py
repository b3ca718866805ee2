"""Subset automaton and the path-dynamical predicates of a space."""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from .const import (
    COVER_BOTH,
    COVER_PREFIX_FREE,
    COVER_SAME_LENGTH,
    DEFAULT_COVER_MODE,
    DEFAULT_MAX_LOOP_WORDS,
    DEFAULT_WORD_BOUND_MULTIPLIER,
    WITNESS_REPETITIONS,
)
from .exceptions import ConsistencyError
from .graph_model import Word
from .labeled_space import AtomSpace

_LOGGER = logging.getLogger(__name__)

EXIT_SAME_LENGTH = "type-i"
EXIT_RANGE_GROWS = "type-ii"

KIND_LOOP = "loop"
KIND_CYCLE = "cycle"

STAGE_EPSILON = "epsilon"


def primitive_root(word: Sequence[str]) -> Word:
    """Shortest word whose power is word."""
    word = tuple(word)
    if not word:
        raise ValueError("the empty word has no root")
    size = len(word)
    for length in range(1, size + 1):
        if size % length == 0 and word[:length] * (size // length) == word:
            return word[:length]
    return word


def word_common_root(alpha: Sequence[str], beta: Sequence[str]) -> Word | None:
    """Return the primitive common root of two commuting words, else None."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not alpha or not beta:
        raise ValueError("words must be nonempty")
    if alpha + beta != beta + alpha:
        return None
    return primitive_root(alpha)


class SubsetAutomaton:
    """Deterministic automaton on the member sets of a space.

    States are the nonempty sets reachable from the ranges r(a) and from every
    atom. The empty set is absorbing and never stored.
    """

    def __init__(self, space: AtomSpace) -> None:
        """Explore the reachable states breadth first."""
        self.space = space
        self.alphabet = space.alphabet
        self.transitions: dict[tuple[int, str], int] = {}
        self.initial_frontier: tuple[int, ...] = tuple(
            dict.fromkeys(target for _letter, target in space.initial_ranges())
        )
        self.states: tuple[int, ...] = tuple(
            self.reachable([*self.initial_frontier, *space.atoms], include_start=True)
        )
        _LOGGER.debug("Subset automaton has %d live states", len(self.states))

    def step(self, mask: int, letter: str) -> int:
        """Cached transition; zero stands for the absorbing empty set."""
        key = (mask, letter)
        target = self.transitions.get(key)
        if target is None:
            target = self.space.step(mask, letter)
            self.transitions[key] = target
        return target

    def word_step(self, mask: int, word: Iterable[str]) -> int:
        """Run a word from mask."""
        for letter in word:
            if not mask:
                break
            mask = self.step(mask, letter)
        return mask

    def live_letters(self, mask: int) -> list[tuple[str, int]]:
        """Letters leaving mask with nonempty target, in alphabet order."""
        result = []
        for letter in self.alphabet:
            target = self.step(mask, letter)
            if target:
                result.append((letter, target))
        return result

    def reachable(self, starts: Iterable[int], include_start: bool = False) -> list[int]:
        """States reachable from starts in discovery order.

        Without include_start only nonempty words count.
        """
        seen: set[int] = set()
        order: list[int] = []
        queue: deque[int] = deque()

        def visit(mask: int) -> None:
            if mask not in seen:
                seen.add(mask)
                order.append(mask)
                queue.append(mask)

        for start in starts:
            if not start:
                continue
            if include_start:
                visit(start)
            else:
                for _letter, target in self.live_letters(start):
                    visit(target)
        while queue:
            mask = queue.popleft()
            for _letter, target in self.live_letters(mask):
                visit(target)
        return order

    def shortest_word(self, start: int, accept: Callable[[int], bool]) -> Word | None:
        """Shortest-then-lexicographic nonempty word from start to an accepted state."""
        words: dict[int, Word] = {start: ()}
        queue: deque[int] = deque([start])
        while queue:
            mask = queue.popleft()
            prefix = words[mask]
            for letter, target in self.live_letters(mask):
                word = prefix + (letter,)
                if accept(target):
                    return word
                if target not in words:
                    words[target] = word
                    queue.append(target)
        return None

    def language(self, start: int, length: int, limit: int = 2) -> list[Word]:
        """Up to limit words of exactly length with nonempty range from start."""
        found: list[Word] = []

        def walk(mask: int, prefix: Word) -> None:
            if len(found) >= limit:
                return
            if len(prefix) == length:
                found.append(prefix)
                return
            for letter, target in self.live_letters(mask):
                walk(target, prefix + (letter,))

        walk(start, ())
        return found


@dataclass(frozen=True)
class LoopExit:
    """An exit of a loop."""

    kind: str
    word: Word | None = None
    range: int | None = None


@dataclass(frozen=True)
class LoopWitness:
    """A loop (alpha, A) with its exits."""

    base: int
    word: Word
    kind: str
    exits: tuple[LoopExit, ...]

    @property
    def has_exit(self) -> bool:
        return bool(self.exits)


@dataclass(frozen=True)
class ForcedChain:
    """The unique-letter run from an atom until it branches or repeats."""

    start: int
    states: tuple[int, ...]
    letters: Word
    preperiod: int | None
    period: int | None
    branch_point: tuple[int, tuple[str, ...]] | None

    @property
    def forced_word_is_purely_periodic(self) -> bool:
        """True when the forced infinite word equals its own shift by the period."""
        if self.branch_point is not None or self.period is None or self.preperiod is None:
            return False
        tail = self.letters[self.preperiod:]
        for i in range(self.preperiod):
            j = i + self.period
            later = self.letters[j] if j < self.preperiod else tail[(j - self.preperiod) % self.period]
            if self.letters[i] != later:
                return False
        return True


@dataclass(frozen=True)
class DisagreeableResult:
    """Disagreeability with the first failing atom."""

    holds: bool
    witness: tuple[int, Word] | None
    chains: tuple[ForcedChain, ...]


@dataclass(frozen=True)
class ConditionLE:
    """Condition (L_E) with an exit-less cycle when it fails."""

    holds: bool
    witness: tuple[Word, int] | None


@dataclass(frozen=True)
class ConnectsCertificate:
    """How one atom connects to a loop."""

    atom: int
    holds: bool
    loop_base: int | None = None
    loop_word: Word | None = None
    paths: tuple[Word, ...] = ()
    stage: str | None = None


@dataclass(frozen=True)
class ConnectsResult:
    """Connects-to-loop over all atoms."""

    holds: bool
    exhaustive: bool
    certificates: tuple[ConnectsCertificate, ...]


@dataclass(frozen=True)
class CofinalResult:
    """Strong cofinality with a bad lasso when it fails."""

    holds: bool
    witness: tuple[int, Word, Word] | None = None
    good: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class NonpowerResult:
    """Two loops at a set whose words share no common power."""

    holds: bool
    pair: tuple[Word, Word] | None
    exhaustive: bool = True


def _exact_length_targets(
    aut: SubsetAutomaton, states: Sequence[int], accept: Callable[[int], bool], max_length: int
) -> list[set[int]]:
    """Per length m, the states that reach an accepted state in exactly m steps."""
    layers: list[set[int]] = [{s for s in states if accept(s)}]
    for _ in range(max_length):
        previous = layers[-1]
        layers.append(
            {s for s in states if any(t in previous for _letter, t in aut.live_letters(s))}
        )
    return layers


def _loop_words(
    aut: SubsetAutomaton, base: int, shortest: Word, max_words: int, multiplier: int
) -> list[Word]:
    """Loop words at base in shortest-then-lexicographic order, up to the bound."""
    local = aut.reachable([base], include_start=True)
    bound = len(aut.states) * (len(shortest) + 1) * multiplier

    def contains_base(mask: int) -> bool:
        return mask & base == base

    layers = _exact_length_targets(aut, local, contains_base, bound)
    found: list[Word] = []

    for length in range(len(shortest), bound + 1):
        if base not in layers[length]:
            continue
        stack: list[tuple[int, Word]] = [(base, ())]
        while stack and len(found) < max_words:
            mask, prefix = stack.pop()
            remaining = length - len(prefix)
            if remaining == 0:
                found.append(prefix)
                continue
            options = [
                (target, prefix + (letter,))
                for letter, target in aut.live_letters(mask)
                if target in layers[remaining - 1]
            ]
            stack.extend(reversed(options))
        if len(found) >= max_words:
            break
    return found


def loop_exits(aut: SubsetAutomaton, base: int, word: Word) -> tuple[LoopExit, ...]:
    """Exits of the loop (word, base)."""
    exits: list[LoopExit] = []
    mask = base
    for i, letter in enumerate(word):
        other = next(((c, t) for c, t in aut.live_letters(mask) if c != letter), None)
        if other is not None:
            branch, target = other
            tail: list[str] = []
            for _ in range(len(word) - i - 1):
                live = aut.live_letters(target)
                if not live:
                    break
                tail.append(live[0][0])
                target = live[0][1]
            else:
                exits.append(
                    LoopExit(EXIT_SAME_LENGTH, word=(*word[:i], branch, *tail))
                )
                break
        mask = aut.step(mask, letter)
    end = aut.word_step(base, word)
    if end != base:
        exits.append(LoopExit(EXIT_RANGE_GROWS, range=end))
    return tuple(exits)


def is_cycle(aut: SubsetAutomaton, base: int, word: Word) -> bool:
    """True when every atom inside base returns to itself under word."""
    return all(aut.word_step(atom, word) == atom for atom in aut.space.atoms_in(base))


def shortest_loop(aut: SubsetAutomaton, base: int) -> Word | None:
    """Shortest loop word at base."""
    return aut.shortest_word(base, lambda mask: mask & base == base)


def find_loops(
    aut: SubsetAutomaton,
    base: int,
    max_words: int = DEFAULT_MAX_LOOP_WORDS,
    multiplier: int = DEFAULT_WORD_BOUND_MULTIPLIER,
) -> list[LoopWitness]:
    """Loops at base, shortest first, each with its exits."""
    shortest = shortest_loop(aut, base)
    if shortest is None:
        return []
    witnesses = []
    for word in _loop_words(aut, base, shortest, max_words, multiplier):
        kind = KIND_CYCLE if is_cycle(aut, base, word) else KIND_LOOP
        witnesses.append(LoopWitness(base, word, kind, loop_exits(aut, base, word)))
    return witnesses


def forced_chain(aut: SubsetAutomaton, atom: int) -> ForcedChain:
    """Follow the unique live letter from atom until a branch or a repeat."""
    states = [atom]
    letters: list[str] = []
    index = {atom: 0}
    current = atom
    while True:
        live = aut.live_letters(current)
        if not live:
            raise ConsistencyError([f"state {aut.space.names(current)} has no live letter"])
        if len(live) > 1:
            return ForcedChain(
                start=atom,
                states=tuple(states),
                letters=tuple(letters),
                preperiod=None,
                period=None,
                branch_point=(len(letters), tuple(letter for letter, _ in live)),
            )
        letter, target = live[0]
        letters.append(letter)
        if target in index:
            preperiod = index[target]
            return ForcedChain(
                start=atom,
                states=tuple(states),
                letters=tuple(letters),
                preperiod=preperiod,
                period=len(states) - preperiod,
                branch_point=None,
            )
        index[target] = len(states)
        states.append(target)
        current = target


def _verify_forced_witness(aut: SubsetAutomaton, atom: int, beta: Word) -> None:
    """Re-check L(b E^{|beta| n}) == {beta^n} for small n."""
    for n in range(1, WITNESS_REPETITIONS + 1):
        words = aut.language(atom, len(beta) * n, limit=2)
        if words != [beta * n]:
            raise ConsistencyError(
                [f"forced word {''.join(beta)} at {aut.space.names(atom)} fails at n={n}"]
            )


def is_disagreeable(aut: SubsetAutomaton) -> DisagreeableResult:
    """Decide disagreeability from the forced chain of every atom."""
    chains = tuple(forced_chain(aut, atom) for atom in aut.space.atoms)
    for chain in chains:
        if chain.forced_word_is_purely_periodic:
            beta = primitive_root(chain.letters[: chain.period])
            _verify_forced_witness(aut, chain.start, beta)
            return DisagreeableResult(False, (chain.start, beta), chains)
    return DisagreeableResult(True, None, chains)


def condition_L_E(aut: SubsetAutomaton) -> ConditionLE:
    """Decide that no cycle lacks an exit."""
    for atom in aut.space.atoms:
        chain = forced_chain(aut, atom)
        if chain.branch_point is None and chain.preperiod == 0:
            return ConditionLE(False, (chain.letters[: chain.period], atom))
    return ConditionLE(True, None)


def loop_atoms(aut: SubsetAutomaton) -> dict[int, Word]:
    """Atoms carrying a loop, with their shortest loop word."""
    result = {}
    for atom in aut.space.atoms:
        word = shortest_loop(aut, atom)
        if word is not None:
            result[atom] = word
    return result


def _same_length_cover(
    aut: SubsetAutomaton, atom: int, targets: Sequence[int], bound: int
) -> tuple[tuple[Word, int] | None, bool]:
    """Smallest k and lex-first path of length k whose range holds a loop atom.

    The second value is False when the bound ran out before the layers of
    reachable states repeated.
    """
    layer: dict[int, Word] = {atom: ()}
    seen_layers: set[frozenset[int]] = {frozenset(layer)}
    for _ in range(bound):
        following: dict[int, Word] = {}
        for mask, prefix in layer.items():
            for letter, target in aut.live_letters(mask):
                if target not in following:
                    following[target] = prefix + (letter,)
        for mask, word in following.items():
            hit = next((t for t in targets if t & mask == t), None)
            if hit is not None:
                return (word, hit), True
        key = frozenset(following)
        if not following or key in seen_layers:
            return None, True
        seen_layers.add(key)
        layer = following
    return None, False


def connects_to_loop(
    aut: SubsetAutomaton,
    mode: str = DEFAULT_COVER_MODE,
    allow_epsilon: bool = False,
    multiplier: int = DEFAULT_WORD_BOUND_MULTIPLIER,
) -> ConnectsResult:
    """Decide whether every atom connects to a loop.

    An atom inside a union of atoms lies in one of them, so a single path
    always suffices as a cover family.
    """
    loops = loop_atoms(aut)
    targets = list(loops)
    bound = max(1, len(aut.states) * (len(aut.space.atoms) + 1) * multiplier)
    certificates: list[ConnectsCertificate] = []
    exhaustive = True

    for atom in aut.space.atoms:
        if allow_epsilon and atom in loops:
            certificates.append(
                ConnectsCertificate(atom, True, atom, loops[atom], ((),), STAGE_EPSILON)
            )
            continue

        found: tuple[Word, int] | None = None
        stage = None
        if mode in (COVER_SAME_LENGTH, COVER_BOTH):
            found, complete = _same_length_cover(aut, atom, targets, bound)
            if found is not None:
                stage = COVER_SAME_LENGTH
            elif not complete and mode == COVER_SAME_LENGTH:
                exhaustive = False
        if found is None and mode in (COVER_PREFIX_FREE, COVER_BOTH):
            word = aut.shortest_word(atom, lambda mask: any(t & mask == t for t in targets))
            if word is not None:
                end = aut.word_step(atom, word)
                found = (word, next(t for t in targets if t & end == t))
                stage = COVER_PREFIX_FREE

        if found is None:
            certificates.append(ConnectsCertificate(atom, False))
            continue
        path, base = found
        certificates.append(ConnectsCertificate(atom, True, base, loops[base], (path,), stage))

    holds = all(cert.holds for cert in certificates)
    return ConnectsResult(holds, exhaustive or holds, tuple(certificates))


def strongly_cofinal(aut: SubsetAutomaton) -> CofinalResult:
    """Decide strong cofinality by searching a lasso through bad live states."""
    good: dict[int, int] = {}
    initial = [(letter, target) for letter, target in aut.space.initial_ranges()]

    for atom in aut.space.atoms:
        covered = 0
        for state in aut.reachable([atom]):
            covered |= state
        good[atom] = covered

        def bad(mask: int, covered: int = covered) -> bool:
            return bool(mask & ~covered)

        words: dict[int, Word] = {}
        queue: deque[int] = deque()
        for letter, target in initial:
            if bad(target) and target not in words:
                words[target] = (letter,)
                queue.append(target)
        order: list[int] = []
        while queue:
            mask = queue.popleft()
            order.append(mask)
            for letter, target in aut.live_letters(mask):
                if bad(target) and target not in words:
                    words[target] = words[mask] + (letter,)
                    queue.append(target)

        region = set(words)
        for mask in order:
            cycle = _shortest_return(aut, mask, region)
            if cycle is not None:
                _LOGGER.debug("Bad cycle found for atom %s", aut.space.names(atom))
                return CofinalResult(False, (atom, words[mask], cycle), good)

    return CofinalResult(True, None, good)


def _shortest_return(aut: SubsetAutomaton, start: int, region: set[int]) -> Word | None:
    """Shortest word leading from start back to start inside region."""
    words: dict[int, Word] = {start: ()}
    queue: deque[int] = deque([start])
    while queue:
        mask = queue.popleft()
        for letter, target in aut.live_letters(mask):
            if target not in region:
                continue
            word = words[mask] + (letter,)
            if target == start:
                return word
            if target not in words:
                words[target] = word
                queue.append(target)
    return None


def two_nonpower_loops(aut: SubsetAutomaton, base: int) -> NonpowerResult:
    """Find a loop at base that shares no common power with the shortest loop."""
    alpha = shortest_loop(aut, base)
    if alpha is None:
        return NonpowerResult(False, None)
    root = primitive_root(alpha)
    period = len(root)

    start = (base, 0)
    words: dict[tuple[int, int], Word] = {start: ()}
    queue: deque[tuple[int, int]] = deque([start])
    while queue:
        node = queue.popleft()
        mask, phase = node
        for letter, target in aut.live_letters(mask):
            if phase >= 0 and letter == root[phase]:
                next_phase = (phase + 1) % period
            else:
                next_phase = -1
            word = words[node] + (letter,)
            if target & base == base and next_phase != 0:
                return NonpowerResult(True, (alpha, word))
            following = (target, next_phase)
            if following not in words:
                words[following] = word
                queue.append(following)
    return NonpowerResult(False, None)
