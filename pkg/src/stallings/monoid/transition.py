"""Transition monoids M(K) of Stallings automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..automaton import InverseAutomaton, LabeledGraph
from ..errors import AlphabetMismatchError, MonoidOverflowError, PreconditionError
from ..freegroup import Word
from ..utils.config_loader import config_loader
from ..utils.logging_config import StructuredLogger
from .transformation import PartialInjection

logger = StructuredLogger(__name__)


def letter_transition(aut: LabeledGraph, code: int) -> PartialInjection:
    return PartialInjection(tuple(aut.step_code(q, code) for q in range(aut.vertex_count)))


def transition_of_word(aut: LabeledGraph, w: Word) -> PartialInjection:
    """δ_w: read w from every state."""
    if w.max_generator() >= len(aut.alphabet):
        raise AlphabetMismatchError("Word uses a generator outside the automaton's alphabet")
    table = []
    for q in range(aut.vertex_count):
        x: int | None = q
        for letter in w:
            x = aut.step(x, letter)
            if x is None:
                break
        table.append(x)
    return PartialInjection(tuple(table))


@dataclass(frozen=True)
class TransitionMonoid:
    """Elements in breadth-first order from the identity (element 0).

    ``cayley[i][code]`` is the index of ``elements[i] * δ_x`` for the letter with that code.
    """

    automaton: InverseAutomaton
    elements: tuple[PartialInjection, ...]
    witnesses: tuple[Word, ...]
    cayley: tuple[tuple[int, ...], ...]
    _positions: dict[PartialInjection, int] = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f: object) -> bool:
        return f in self._positions

    @property
    def identity(self) -> PartialInjection:
        return self.elements[0]

    @property
    def state_count(self) -> int:
        return self.automaton.state_count

    def index_of(self, f: PartialInjection) -> int:
        return self._positions[f]

    def witness(self, f: PartialInjection) -> Word:
        return self.witnesses[self._positions[f]]

    def element_of_word(self, w: Word) -> PartialInjection:
        i = 0
        for letter in w:
            i = self.cayley[i][letter.code]
        return self.elements[i]

    def idempotents(self) -> list[PartialInjection]:
        return [f for f in self.elements if f.is_idempotent()]

    def is_group(self) -> bool:
        return all(f.is_total() for f in self.elements)


def generate_monoid(aut: InverseAutomaton, cap: int | None = None) -> TransitionMonoid:
    """Breadth-first closure of {id} under right multiplication by the letter transitions."""
    if cap is None:
        cap = config_loader.monoid_cap()
    if cap < 1:
        raise PreconditionError(f"Monoid cap must be at least 1, got {cap}")
    generators = [letter_transition(aut, code) for code in range(2 * len(aut.alphabet))]

    identity = PartialInjection.identity(aut.state_count)
    elements = [identity]
    witnesses: list[tuple[int, ...]] = [()]
    positions = {identity: 0}
    cayley: list[list[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for code, generator in enumerate(generators):
            product = elements[i] * generator
            j = positions.get(product)
            if j is None:
                if len(elements) >= cap:
                    raise MonoidOverflowError(cap)
                j = len(elements)
                positions[product] = j
                elements.append(product)
                witnesses.append(witnesses[i] + (code,))
                queue.append(j)
            row.append(j)
        cayley.append(row)

    logger.debug("Generated transition monoid", states=aut.state_count, size=len(elements))
    return TransitionMonoid(
        automaton=aut,
        elements=tuple(elements),
        witnesses=tuple(Word.from_codes(codes) for codes in witnesses),
        cayley=tuple(map(tuple, cayley)),
        _positions=positions,
    )


def _fixed_counts(m: TransitionMonoid) -> list[int]:
    return [sum(f.table[q] == q for f in m.elements) for q in range(m.state_count)]


def permutation_isomorphic(m1: TransitionMonoid, m2: TransitionMonoid) -> dict[int, int] | None:
    """A renaming σ of states with σ⁻¹ M₁ σ = M₂, for monoids that are permutation groups.

    Backtracks over σ(0), σ(1), … and drops a partial σ as soon as some f ∈ M₁,
    read on the states named so far, matches no element of M₂. The worst case is
    still exponential in |Q|.
    """
    if not (m1.is_group() and m2.is_group()):
        raise PreconditionError("Permutation isomorphism needs complete automata")
    n = m1.state_count
    if n != m2.state_count or len(m1) != len(m2):
        return None
    counts1, counts2 = _fixed_counts(m1), _fixed_counts(m2)
    if sorted(counts1) != sorted(counts2):
        return None

    sigma = [0] * n
    used = [False] * n

    def consistent(last: int) -> bool:
        # g σ(x) = σ(f x) on every x ≤ last with f x ≤ last
        for f in m1.elements:
            pairs = [(sigma[x], sigma[f.table[x]]) for x in range(last + 1) if f.table[x] <= last]
            if not any(all(g.table[a] == b for a, b in pairs) for g in m2.elements):
                return False
        return True

    def extend(q: int) -> bool:
        if q == n:
            return True
        for t in range(n):
            if used[t] or counts1[q] != counts2[t]:
                continue
            sigma[q], used[t] = t, True
            if consistent(q) and extend(q + 1):
                return True
            used[t] = False
        return False

    return dict(enumerate(sigma)) if extend(0) else None
