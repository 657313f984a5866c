"""Flower automata, Stallings foldings and trimming."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from ..errors import AlphabetMismatchError, AutomatonInvariantError
from ..freegroup import Alphabet, Word, free_reduce
from ..utils.logging_config import StructuredLogger
from .graph import Edge, InverseAutomaton

logger = StructuredLogger(__name__)


@dataclass(frozen=True)
class MultiAutomaton:
    """Involutive, possibly non-deterministic automaton awaiting folding.

    ``identified`` lists state pairs that must end up equal (empty replacement paths).
    """

    alphabet: Alphabet
    state_count: int
    basepoint: int
    positive_edges: tuple[Edge, ...]
    identified: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if not 0 <= self.basepoint < self.state_count:
            raise AutomatonInvariantError("Basepoint out of range", ["basepoint_in_range"])
        for s, g, t in self.positive_edges:
            if not (0 <= s < self.state_count and 0 <= t < self.state_count):
                raise AutomatonInvariantError(f"Edge ({s}, {g}, {t}) references a missing state", ["states_in_range"])
            if not 0 <= g < len(self.alphabet):
                raise AlphabetMismatchError(f"Edge ({s}, {g}, {t}) uses an unknown generator")


def flower(gens: Iterable[Word], alphabet: Alphabet) -> MultiAutomaton:
    """Wedge of one petal per nonempty reduced generator at q₀ = 0."""
    edges: list[Edge] = []
    count = 1
    for gen in gens:
        word = free_reduce(gen)
        if not word:
            continue
        if word.max_generator() >= len(alphabet):
            raise AlphabetMismatchError("Generator uses a letter outside the alphabet")
        previous = 0
        for i, letter in enumerate(word):
            if i == len(word) - 1:
                nxt = 0
            else:
                nxt = count
                count += 1
            if letter.sign > 0:
                edges.append((previous, letter.generator, nxt))
            else:
                edges.append((nxt, letter.generator, previous))
            previous = nxt
    return MultiAutomaton(alphabet, count, 0, tuple(edges))


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> tuple[int, int] | None:
        """Merge classes; the smaller index survives. Returns (winner, loser)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return None
        winner, loser = min(rx, ry), max(rx, ry)
        self.parent[loser] = winner
        return winner, loser


def fold(m: MultiAutomaton) -> InverseAutomaton:
    """Fold until deterministic and co-deterministic, then renumber canonically."""
    uf = _UnionFind(m.state_count)
    # adjacency[v][code] -> targets; code 2g reads g forwards, 2g+1 reads g backwards
    adjacency: list[dict[int, list[int]]] = [defaultdict(list) for _ in range(m.state_count)]
    for s, g, t in m.positive_edges:
        adjacency[s][2 * g].append(t)
        adjacency[t][2 * g + 1].append(s)

    merges = 0
    worklist: list[int] = list(range(m.state_count))

    def merge(x: int, y: int) -> None:
        nonlocal merges
        result = uf.union(x, y)
        if result is None:
            return
        winner, loser = result
        merges += 1
        for code, targets in adjacency[loser].items():
            adjacency[winner][code].extend(targets)
        adjacency[loser] = defaultdict(list)
        worklist.append(winner)

    for x, y in m.identified:
        merge(x, y)

    while worklist:
        v = uf.find(worklist.pop())
        for code in list(adjacency[v].keys()):
            targets = adjacency[v][code]
            roots = sorted({uf.find(t) for t in targets})
            if len(roots) > 1:
                for other in roots[1:]:
                    merge(roots[0], other)
                # v may have been merged away, so revisit its root
                worklist.append(uf.find(v))
                break
            adjacency[v][code] = roots

    roots = sorted({uf.find(v) for v in range(m.state_count)})
    position = {r: i for i, r in enumerate(roots)}
    edges = {(position[uf.find(s)], g, position[uf.find(t)]) for s, g, t in m.positive_edges}
    folded = InverseAutomaton.from_edges(m.alphabet, len(roots), sorted(edges), position[uf.find(m.basepoint)])
    logger.debug("Folded automaton", states_in=m.state_count, states_out=len(roots), merges=merges)
    return folded.canonical()


def trim(aut: InverseAutomaton) -> InverseAutomaton:
    """Successively remove non-basepoint states of degree ≤ 1."""
    degree = [aut.degree(v) for v in range(aut.state_count)]
    removed = [False] * aut.state_count
    stack = [v for v in range(aut.state_count) if v != aut.basepoint and degree[v] <= 1]
    while stack:
        v = stack.pop()
        if removed[v]:
            continue
        removed[v] = True
        for _, t in aut.neighbours(v):
            if t != v and not removed[t]:
                degree[t] -= 1
                if t != aut.basepoint and degree[t] <= 1:
                    stack.append(t)

    if not any(removed):
        return aut.canonical()
    keep = [v for v in range(aut.state_count) if not removed[v]]
    position = {v: i for i, v in enumerate(keep)}
    edges = [(position[s], g, position[t]) for s, g, t in aut.edges() if not removed[s] and not removed[t]]
    logger.debug("Trimmed automaton", removed=aut.state_count - len(keep))
    return InverseAutomaton.from_edges(aut.alphabet, len(keep), edges, position[aut.basepoint]).canonical()


def stallings(gens: Iterable[Word], alphabet: Alphabet) -> InverseAutomaton:
    """S(⟨gens⟩) = trim(fold(flower(gens)))."""
    return trim(fold(flower(gens, alphabet)))
