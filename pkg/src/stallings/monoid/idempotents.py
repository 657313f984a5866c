"""Transitions realized by nonempty reduced words and the poset of their idempotents."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..automaton import InverseAutomaton, is_trivial
from ..errors import MonoidOverflowError, TrivialSubgroupError
from ..utils.config_loader import config_loader
from ..utils.logging_config import StructuredLogger
from .transformation import PartialInjection, natural_leq
from .transition import letter_transition

logger = StructuredLogger(__name__)


def reduced_realizable(aut: InverseAutomaton, cap: int | None = None) -> frozenset[PartialInjection]:
    """All δ_u with u a nonempty reduced word.

    Explores pairs (element, code of the last letter); the next letter never cancels the last.
    """
    if cap is None:
        cap = config_loader.monoid_cap()
    generators = [letter_transition(aut, code) for code in range(2 * len(aut.alphabet))]
    seen = {(generator, code) for code, generator in enumerate(generators)}
    realized = {generator for generator in generators}
    queue = deque(sorted(seen, key=lambda pair: pair[1]))
    while queue:
        f, last = queue.popleft()
        for code, generator in enumerate(generators):
            if code == last ^ 1:
                continue
            state = (f * generator, code)
            if state in seen:
                continue
            seen.add(state)
            realized.add(state[0])
            if len(realized) > cap:
                raise MonoidOverflowError(cap)
            queue.append(state)
    logger.debug("Reduced-realizable transitions", size=len(realized), explored=len(seen))
    return frozenset(realized)


@dataclass(frozen=True)
class IdempotentPoset:
    """E ordered by the natural partial order; ``k`` is the size of a longest chain."""

    elements: tuple[PartialInjection, ...]
    k: int

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, f: object) -> bool:
        return f in self.elements

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (i, j) with elements[i] < elements[j]."""
        n = len(self.elements)
        below = [
            [natural_leq(self.elements[i], self.elements[j]) and i != j for j in range(n)]
            for i in range(n)
        ]
        return [
            (i, j)
            for i in range(n)
            for j in range(n)
            if below[i][j] and not any(below[i][m] and below[m][j] for m in range(n))
        ]


def _longest_chain(elements: list[PartialInjection]) -> int:
    longest: list[int] = []
    for j, e in enumerate(elements):
        below = [longest[i] for i in range(j) if natural_leq(elements[i], e)]
        longest.append(1 + max(below, default=0))
    return max(longest, default=0)


def idempotent_poset(aut: InverseAutomaton, cap: int | None = None) -> IdempotentPoset:
    if is_trivial(aut):
        raise TrivialSubgroupError("Idempotent poset is undefined for the trivial subgroup")
    idempotents = sorted(
        (f for f in reduced_realizable(aut, cap) if f.is_idempotent()),
        key=lambda f: (f.rank(), sorted(f.domain)),
    )
    return IdempotentPoset(elements=tuple(idempotents), k=_longest_chain(idempotents))
