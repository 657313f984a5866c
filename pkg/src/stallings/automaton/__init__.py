"""Stallings automata of finitely generated subgroups of free groups."""

from .folding import MultiAutomaton, flower, fold, stallings, trim
from .graph import (
    Edge,
    InverseAutomaton,
    LabeledGraph,
    equal_subgroups,
    index,
    is_full,
    is_trivial,
    member,
    run,
)
from .product import ProductAutomaton, intersect, product, rank_of_component
from .structure import (
    CoreTail,
    anchored_isomorphism,
    apply_endo_to_subgroup,
    basis,
    conjugate_subgroup,
    conjugator,
    core_and_tail,
    graphs_isomorphic,
    image_of_basis,
    path_word,
)

__all__ = [
    "CoreTail",
    "Edge",
    "InverseAutomaton",
    "LabeledGraph",
    "MultiAutomaton",
    "ProductAutomaton",
    "anchored_isomorphism",
    "apply_endo_to_subgroup",
    "basis",
    "conjugate_subgroup",
    "conjugator",
    "core_and_tail",
    "equal_subgroups",
    "flower",
    "fold",
    "graphs_isomorphic",
    "image_of_basis",
    "index",
    "intersect",
    "is_full",
    "is_trivial",
    "member",
    "path_word",
    "product",
    "rank_of_component",
    "run",
    "stallings",
    "trim",
]
