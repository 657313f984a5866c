"""Stallings automata of finitely generated subgroups of free groups, their transition
monoids, and decision procedures for subgroup properties."""

__version__ = "1.0.0"

from .automaton import InverseAutomaton, member, stallings
from .errors import StallingsError
from .freegroup import Alphabet, EndomorphismSpec, ReducedWord, Word, free_reduce, parse_word

__all__ = [
    "Alphabet",
    "EndomorphismSpec",
    "InverseAutomaton",
    "ReducedWord",
    "StallingsError",
    "Word",
    "__version__",
    "free_reduce",
    "member",
    "parse_word",
    "stallings",
]
