"""Structural operations on Stallings automata: core and tail, isomorphism, bases,
conjugation, and images under endomorphisms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import AlphabetMismatchError, TrivialSubgroupError
from ..freegroup import (
    EndomorphismSpec,
    Letter,
    ReducedWord,
    Word,
    apply_endo_to_word,
    free_reduce,
    invert_word,
)
from ..utils.logging_config import StructuredLogger
from .folding import MultiAutomaton, fold, stallings, trim
from .graph import Edge, InverseAutomaton, LabeledGraph, is_trivial

logger = StructuredLogger(__name__)


@dataclass(frozen=True)
class CoreTail:
    """C(K) renumbered breadth-first from the vertex where the tail ends (vertex 0)."""

    core: LabeledGraph
    tail: ReducedWord


def _path_tree(graph: LabeledGraph, start: int) -> dict[int, tuple[int, Letter] | None]:
    """Breadth-first tree: vertex -> (parent, letter read from parent)."""
    parents: dict[int, tuple[int, Letter] | None] = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for code, t in graph.neighbours(v):
            if t not in parents:
                parents[t] = (v, Letter.from_code(code))
                queue.append(t)
    return parents


def _word_to(parents: dict[int, tuple[int, Letter] | None], v: int) -> ReducedWord:
    letters: list[Letter] = []
    while parents[v] is not None:
        v, letter = parents[v]
        letters.append(letter)
    return free_reduce(reversed(letters))


def path_word(graph: LabeledGraph, start: int, end: int) -> ReducedWord | None:
    """Label of the breadth-first path from start to end."""
    parents = _path_tree(graph, start)
    if end not in parents:
        return None
    return _word_to(parents, end)


def core_and_tail(aut: InverseAutomaton) -> CoreTail:
    if is_trivial(aut):
        raise TrivialSubgroupError("The trivial subgroup has no core")

    degree = [aut.degree(v) for v in range(aut.state_count)]
    removed = [False] * aut.state_count
    stack = [v for v in range(aut.state_count) if degree[v] <= 1]
    while stack:
        v = stack.pop()
        if removed[v]:
            continue
        removed[v] = True
        for _, t in aut.neighbours(v):
            if t != v and not removed[t]:
                degree[t] -= 1
                if degree[t] <= 1:
                    stack.append(t)

    parents = _path_tree(aut, aut.basepoint)
    attach = min(
        (v for v in parents if not removed[v]),
        key=lambda v: (len(_word_to(parents, v)), v),
    )
    tail = _word_to(parents, attach)

    keep = [v for v in range(aut.state_count) if not removed[v]]
    position = {v: i for i, v in enumerate(keep)}
    edges = [(position[s], g, position[t]) for s, g, t in aut.edges() if not removed[s] and not removed[t]]
    core = LabeledGraph.from_edges(aut.alphabet, len(keep), edges).canonical_from(position[attach])
    return CoreTail(core=core, tail=tail)


def anchored_isomorphism(g1: LabeledGraph, v1: int, g2: LabeledGraph, v2: int) -> dict[int, int] | None:
    """Label-preserving bijection sending v1 to v2, if one exists (g1 connected)."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    mapping = {v1: v2}
    used = {v2}
    queue = deque([v1])
    while queue:
        v = queue.popleft()
        image = mapping[v]
        for code, t in g1.neighbours(v):
            t2 = g2.step_code(image, code)
            if t2 is None:
                return None
            if t in mapping:
                if mapping[t] != t2:
                    return None
            elif t2 in used:
                return None
            else:
                mapping[t] = t2
                used.add(t2)
                queue.append(t)
    if len(mapping) != g1.vertex_count:
        return None
    return mapping


def graphs_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> dict[int, int] | None:
    if g1.alphabet != g2.alphabet:
        return None
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        return {} if g1.vertex_count == g2.vertex_count else None
    for candidate in range(g2.vertex_count):
        mapping = anchored_isomorphism(g1, 0, g2, candidate)
        if mapping is not None:
            return mapping
    return None


def basis(aut: InverseAutomaton) -> list[ReducedWord]:
    """Free basis read off a breadth-first spanning tree, one word per non-tree edge."""
    parents = _path_tree(aut, aut.basepoint)
    tree_edges: set[Edge] = set()
    for v, link in parents.items():
        if link is None:
            continue
        parent, letter = link
        if letter.sign > 0:
            tree_edges.add((parent, letter.generator, v))
        else:
            tree_edges.add((v, letter.generator, parent))

    words = {v: _word_to(parents, v) for v in parents}
    result = []
    for s, g, t in aut.edges():
        if (s, g, t) in tree_edges:
            continue
        result.append(free_reduce(words[s].letters + (Letter(g, 1),) + invert_word(words[t]).letters))
    return result


def conjugate_subgroup(aut: InverseAutomaton, w: Word) -> InverseAutomaton:
    """S(wKw⁻¹)."""
    w = free_reduce(w)
    w_inv = invert_word(w)
    return stallings([free_reduce(w.letters + g.letters + w_inv.letters) for g in basis(aut)], aut.alphabet)


def conjugator(h: InverseAutomaton, k: InverseAutomaton) -> ReducedWord | None:
    """A word w with H = wKw⁻¹, or None when H and K are not conjugate."""
    if h.alphabet != k.alphabet:
        raise AlphabetMismatchError("Subgroups live in different free groups")
    if is_trivial(h) or is_trivial(k):
        return ReducedWord(()) if is_trivial(h) and is_trivial(k) else None
    ct_h, ct_k = core_and_tail(h), core_and_tail(k)
    iso = graphs_isomorphic(ct_h.core, ct_k.core)
    if iso is None:
        return None
    p = path_word(ct_k.core, 0, iso[0])
    return free_reduce(ct_h.tail.letters + invert_word(p).letters + invert_word(ct_k.tail).letters)


def apply_endo_to_subgroup(aut: InverseAutomaton, e: EndomorphismSpec) -> InverseAutomaton:
    """S(Kφ): replace every edge by a path spelling its image, fold, trim.

    An image reducing to 1 identifies the two endpoints of the edge.
    """
    if aut.alphabet != e.alphabet:
        raise AlphabetMismatchError("Endomorphism and automaton use different alphabets")
    edges: list[Edge] = []
    identified: list[tuple[int, int]] = []
    count = aut.state_count
    for s, g, t in aut.edges():
        image = e.images[g]
        if not image:
            identified.append((s, t))
            continue
        previous = s
        for i, letter in enumerate(image):
            if i == len(image) - 1:
                nxt = t
            else:
                nxt = count
                count += 1
            if letter.sign > 0:
                edges.append((previous, letter.generator, nxt))
            else:
                edges.append((nxt, letter.generator, previous))
            previous = nxt
    m = MultiAutomaton(aut.alphabet, count, aut.basepoint, tuple(edges), tuple(identified))
    result = trim(fold(m))
    logger.debug("Applied endomorphism", states_in=aut.state_count, states_out=result.state_count)
    return result


def image_of_basis(aut: InverseAutomaton, e: EndomorphismSpec) -> InverseAutomaton:
    """S(Kφ) computed from the images of a basis of K."""
    return stallings([apply_endo_to_word(e, g) for g in basis(aut)], aut.alphabet)
