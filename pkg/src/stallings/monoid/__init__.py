"""Transition monoids of Stallings automata as inverse monoids of partial injections."""

from .green import GreenClasses, GroupHClass, element_order, green_classes, group_H_classes
from .idempotents import IdempotentPoset, idempotent_poset, reduced_realizable
from .transformation import PartialInjection, invert_element, natural_leq
from .transition import (
    TransitionMonoid,
    generate_monoid,
    letter_transition,
    permutation_isomorphic,
    transition_of_word,
)

__all__ = [
    "GreenClasses",
    "GroupHClass",
    "IdempotentPoset",
    "PartialInjection",
    "TransitionMonoid",
    "element_order",
    "generate_monoid",
    "green_classes",
    "group_H_classes",
    "idempotent_poset",
    "invert_element",
    "letter_transition",
    "natural_leq",
    "permutation_isomorphic",
    "reduced_realizable",
    "transition_of_word",
]
