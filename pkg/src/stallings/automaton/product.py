"""Product automata S(H) × S(K), their components, and intersections."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..errors import AlphabetMismatchError, InconsistencyError, PreconditionError
from .folding import trim
from .graph import InverseAutomaton, LabeledGraph


@dataclass(frozen=True)
class ProductAutomaton:
    """States are pairs (p, q) encoded as ``p * right_size + q``."""

    left: InverseAutomaton
    right: InverseAutomaton
    graph: LabeledGraph
    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def right_size(self) -> int:
        return self.right.state_count

    def encode(self, p: int, q: int) -> int:
        return p * self.right_size + q

    def decode(self, state: int) -> tuple[int, int]:
        return divmod(state, self.right_size)

    def is_diagonal(self, state: int) -> bool:
        p, q = self.decode(state)
        return p == q

    def component(self, p: int, q: int) -> tuple[LabeledGraph, dict[int, tuple[int, int]]]:
        """Component of (p, q), renumbered breadth-first from it, with the pair of each vertex."""
        start = self.encode(p, q)
        order = self.graph.bfs_order(start)
        count, edges = self.graph.relabel(order)
        pairs = {i: self.decode(state) for i, state in enumerate(order)}
        return LabeledGraph.from_edges(self.graph.alphabet, count, edges), pairs

    def off_diagonal_components(self) -> list[tuple[int, ...]]:
        return [c for c in self.components if not self.is_diagonal(c[0])]


def product(a1: InverseAutomaton, a2: InverseAutomaton) -> ProductAutomaton:
    if a1.alphabet != a2.alphabet:
        raise AlphabetMismatchError("Product of automata over different alphabets")
    n2 = a2.state_count
    edges = []
    for g in range(len(a1.alphabet)):
        row1, row2 = a1.forward[g], a2.forward[g]
        for p in range(a1.state_count):
            tp = row1[p]
            if tp is None:
                continue
            for q in range(n2):
                tq = row2[q]
                if tq is not None:
                    edges.append((p * n2 + q, g, tp * n2 + tq))
    graph = LabeledGraph.from_edges(a1.alphabet, a1.state_count * n2, edges)

    undirected = nx.Graph()
    undirected.add_nodes_from(range(graph.vertex_count))
    undirected.add_edges_from((s, t) for s, _, t in edges)
    components = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(undirected)))
    component_of = [0] * graph.vertex_count
    for i, comp in enumerate(components):
        for state in comp:
            component_of[state] = i

    result = ProductAutomaton(a1, a2, graph, tuple(component_of), components)
    if a1 == a2:
        for comp in components:
            diagonal = {result.is_diagonal(s) for s in comp}
            if len(diagonal) > 1:
                raise InconsistencyError("A product component mixes diagonal and off-diagonal pairs")
    return result


def rank_of_component(c: LabeledGraph) -> int:
    """Rank of the free fundamental group: E − V + 1."""
    if not c.is_connected():
        raise PreconditionError("rank_of_component needs a connected graph")
    return c.edge_count - c.vertex_count + 1


def intersect(a1: InverseAutomaton, a2: InverseAutomaton) -> InverseAutomaton:
    """S(H ∩ K): trimmed component of (q₀, q₀) in S(H) × S(K)."""
    prod = product(a1, a2)
    component, _ = prod.component(a1.basepoint, a2.basepoint)
    aut = InverseAutomaton(component.alphabet, component.vertex_count, component.forward, component.backward, 0)
    return trim(aut)
