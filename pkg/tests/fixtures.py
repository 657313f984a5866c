"""Hand-built automata and subgroups shared by the test modules."""

from __future__ import annotations

from itertools import permutations

from stallings.automaton import InverseAutomaton, stallings
from stallings.freegroup import Alphabet, Word, parse_word

A = Alphabet.of("a")
AB = Alphabet.of("ab")
ABC = Alphabet.of("abc")
ABCD = Alphabet.of("abcd")


def words(alphabet: Alphabet, *texts: str) -> list[Word]:
    return [parse_word(t, alphabet) for t in texts]


def subgroup(alphabet: Alphabet, *texts: str) -> InverseAutomaton:
    return stallings(words(alphabet, *texts), alphabet)


def automaton(alphabet: Alphabet, edges: list[tuple[int, str, int]], basepoint: int, states=None) -> InverseAutomaton:
    """Automaton from labelled edges over arbitrary vertex names, in canonical form."""
    vertices = sorted({basepoint} | {s for s, _, _ in edges} | {t for _, _, t in edges} | set(states or ()))
    position = {v: i for i, v in enumerate(vertices)}
    numbered = [(position[s], alphabet.index(g), position[t]) for s, g, t in edges]
    return InverseAutomaton.from_edges(alphabet, len(vertices), numbered, position[basepoint]).canonical()


def running_example() -> InverseAutomaton:
    """⟨c, b a⁻¹ c⁻¹, a c a⁻¹⟩ over {a, b, c}."""
    return subgroup(ABC, "c", "b a^-1 c^-1", "a c a^-1")


def kernel_z2() -> InverseAutomaton:
    """Kernel of F(a, b) → Z₂ sending a to 1 and b to 0."""
    return subgroup(AB, "b", "a^2", "a b a^-1")


def six_state_example() -> InverseAutomaton:
    return automaton(
        ABC,
        [(2, "a", 1), (3, "c", 2), (3, "b", 4), (5, "a", 4), (5, "b", 6), (1, "a", 6), (4, "c", 4)],
        basepoint=1,
    )


def six_state_example_beta() -> InverseAutomaton:
    """Image of six_state_example under a ↦ ab: vertex 6 gone, new vertex 7."""
    return automaton(
        ABC,
        [(1, "a", 5), (3, "c", 2), (3, "b", 4), (5, "a", 3), (7, "b", 1), (2, "a", 7), (4, "c", 4)],
        basepoint=1,
    )


def seven_state_example() -> InverseAutomaton:
    return automaton(
        ABCD,
        [
            (1, "a", 2), (2, "c", 3), (4, "b", 3), (5, "b", 6), (6, "c", 2),
            (3, "c", 6), (7, "c", 1), (1, "c", 7), (4, "d", 4), (5, "d", 5),
        ],
        basepoint=1,
    )


def seven_state_example_beta() -> InverseAutomaton:
    return automaton(
        ABCD,
        [
            (1, "a", 8), (8, "b", 2), (2, "c", 3), (4, "b", 3), (5, "b", 6), (6, "c", 2),
            (3, "c", 6), (7, "c", 1), (1, "c", 7), (4, "d", 4), (5, "d", 5),
        ],
        basepoint=1,
    )


def cycle_example() -> InverseAutomaton:
    """0 -c-> 1, with an a/b 2-cycle through 1."""
    return automaton(ABC, [(0, "c", 1), (1, "a", 2), (2, "b", 1)], basepoint=0)


def cyclonormal_pair() -> tuple[InverseAutomaton, InverseAutomaton]:
    """H: a c-edge with a-loops at both ends; K adds b-loops at both ends."""
    h = automaton(ABC, [(1, "c", 2), (1, "a", 1), (2, "a", 2)], basepoint=1)
    k = automaton(ABC, [(1, "c", 2), (1, "a", 1), (2, "a", 2), (1, "b", 1), (2, "b", 2)], basepoint=1)
    return h, k


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """First p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def s3_kernel() -> InverseAutomaton:
    """Cayley graph of S₃ for a ↦ (0 1), b ↦ (0 1 2): kernel of F(a, b) → S₃."""
    elements = list(permutations(range(3)))
    position = {p: i for i, p in enumerate(elements)}
    generators = {"a": (1, 0, 2), "b": (1, 2, 0)}
    edges = [
        (position[p], name, position[_compose(p, g)])
        for p in elements
        for name, g in generators.items()
    ]
    return automaton(AB, edges, basepoint=position[(0, 1, 2)])


FINITE_INDEX = {
    "kernel_z2": kernel_z2,
    "s3_kernel": s3_kernel,
    "full": lambda: subgroup(AB, "a", "b"),
    "even_length": lambda: subgroup(AB, "a^2", "a b", "b a"),
    "index_three": lambda: subgroup(AB, "a^3", "b", "a b a^-1", "a^2 b a^-2"),
}
