"""Labeled involutive graphs and inverse automata with a basepoint.

Only positive edges are stored; reading ``a⁻¹`` from ``q`` follows the ``a``-edge
ending at ``q`` backwards. ``forward[g][q]`` / ``backward[g][q]`` hold the target or
``None``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from ..errors import AutomatonInvariantError
from ..freegroup import Alphabet, Letter, Word, free_reduce

Edge = tuple[int, int, int]
Table = tuple[tuple[int | None, ...], ...]


def _tables(alphabet: Alphabet, vertex_count: int, edges: Iterable[Edge]) -> tuple[Table, Table]:
    forward = [[None] * vertex_count for _ in alphabet.names]
    backward = [[None] * vertex_count for _ in alphabet.names]
    problems = []
    for s, g, t in edges:
        if not (0 <= s < vertex_count and 0 <= t < vertex_count):
            raise AutomatonInvariantError(f"Edge ({s}, {g}, {t}) references a missing state", ["states_in_range"])
        if not 0 <= g < len(alphabet):
            raise AutomatonInvariantError(f"Edge ({s}, {g}, {t}) uses an unknown generator", ["generators_in_range"])
        if forward[g][s] is not None and forward[g][s] != t:
            problems.append(f"state {s} has two '{alphabet.names[g]}'-successors")
        if backward[g][t] is not None and backward[g][t] != s:
            problems.append(f"state {t} has two '{alphabet.names[g]}'-predecessors")
        forward[g][s] = t
        backward[g][t] = s
    if problems:
        raise AutomatonInvariantError("Not an inverse automaton: " + "; ".join(problems), ["deterministic"])
    return tuple(map(tuple, forward)), tuple(map(tuple, backward))


@dataclass(frozen=True)
class LabeledGraph:
    """Deterministic, co-deterministic labeled graph without a basepoint."""

    alphabet: Alphabet
    vertex_count: int
    forward: Table
    backward: Table

    @classmethod
    def from_edges(cls, alphabet: Alphabet, vertex_count: int, edges: Iterable[Edge]) -> "LabeledGraph":
        forward, backward = _tables(alphabet, vertex_count, edges)
        return cls(alphabet, vertex_count, forward, backward)

    def step(self, v: int, letter: Letter) -> int | None:
        table = self.forward if letter.sign > 0 else self.backward
        return table[letter.generator][v]

    def step_code(self, v: int, code: int) -> int | None:
        table = self.backward if code & 1 else self.forward
        return table[code >> 1][v]

    def edges(self) -> list[Edge]:
        return [
            (s, g, t)
            for s in range(self.vertex_count)
            for g, row in enumerate(self.forward)
            if (t := row[s]) is not None
        ]

    @property
    def edge_count(self) -> int:
        return sum(t is not None for row in self.forward for t in row)

    def degree(self, v: int) -> int:
        """Number of edge ends at v (a loop counts twice); equals the out-degree over Ã."""
        return sum(row[v] is not None for row in self.forward) + sum(
            row[v] is not None for row in self.backward
        )

    def neighbours(self, v: int) -> Iterator[tuple[int, int]]:
        """(letter code, target) pairs in canonical letter order."""
        for code in range(2 * len(self.alphabet)):
            t = self.step_code(v, code)
            if t is not None:
                yield code, t

    def is_complete(self) -> bool:
        return all(t is not None for row in self.forward for t in row)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for s, g, t in self.edges():
            graph.add_edge(s, t, label=self.alphabet.names[g])
        return graph

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def bfs_order(self, start: int) -> list[int]:
        order = [start]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for _, t in self.neighbours(v):
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    queue.append(t)
        return order

    def relabel(self, order: list[int]) -> tuple[int, list[Edge]]:
        """Edges renumbered so that ``order[i]`` becomes ``i``; vertices outside order are dropped."""
        position = {v: i for i, v in enumerate(order)}
        edges = [
            (position[s], g, position[t])
            for s, g, t in self.edges()
            if s in position and t in position
        ]
        return len(order), edges

    def canonical_from(self, start: int) -> "LabeledGraph":
        count, edges = self.relabel(self.bfs_order(start))
        return LabeledGraph.from_edges(self.alphabet, count, edges)


@dataclass(frozen=True)
class InverseAutomaton(LabeledGraph):
    """S(K) = (Q, A, δ, q₀)."""

    basepoint: int = 0

    def __post_init__(self):
        if not 0 <= self.basepoint < self.vertex_count:
            raise AutomatonInvariantError(
                f"Basepoint {self.basepoint} outside 0..{self.vertex_count - 1}", ["basepoint_in_range"]
            )

    @classmethod
    def from_edges(
        cls,
        alphabet: Alphabet,
        vertex_count: int,
        edges: Iterable[Edge],
        basepoint: int = 0,
    ) -> "InverseAutomaton":
        forward, backward = _tables(alphabet, vertex_count, edges)
        return cls(alphabet, vertex_count, forward, backward, basepoint)

    @classmethod
    def trivial(cls, alphabet: Alphabet) -> "InverseAutomaton":
        """S(1): one state, no edges."""
        return cls.from_edges(alphabet, 1, [])

    @classmethod
    def bouquet(cls, alphabet: Alphabet) -> "InverseAutomaton":
        """S(F_A): one state with a loop for every generator."""
        return cls.from_edges(alphabet, 1, [(0, g, 0) for g in range(len(alphabet))])

    @property
    def state_count(self) -> int:
        return self.vertex_count

    def canonical(self) -> "InverseAutomaton":
        """Breadth-first renumbering from q₀, letters in canonical order; unreachable states dropped."""
        count, edges = self.relabel(self.bfs_order(self.basepoint))
        return InverseAutomaton.from_edges(self.alphabet, count, edges, 0)

    def as_graph(self) -> LabeledGraph:
        return LabeledGraph(self.alphabet, self.vertex_count, self.forward, self.backward)


def run(aut: LabeledGraph, q: int, w: Word) -> int | None:
    for letter in w:
        q = aut.step(q, letter)
        if q is None:
            return None
    return q


def member(aut: InverseAutomaton, w: Word) -> bool:
    return run(aut, aut.basepoint, free_reduce(w)) == aut.basepoint


def index(aut: InverseAutomaton) -> int | float:
    """[F_A : K] = |Q| when S(K) is complete, ``math.inf`` otherwise."""
    return aut.state_count if aut.is_complete() else math.inf


def is_trivial(aut: InverseAutomaton) -> bool:
    return aut.edge_count == 0


def is_full(aut: InverseAutomaton) -> bool:
    return aut.state_count == 1 and aut.is_complete()


def equal_subgroups(a1: InverseAutomaton, a2: InverseAutomaton) -> bool:
    return a1.alphabet == a2.alphabet and a1.canonical() == a2.canonical()
