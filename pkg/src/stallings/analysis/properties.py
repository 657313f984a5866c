"""Normality, malnormality and cyclonormality of finitely generated subgroups."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..automaton import InverseAutomaton, is_full, is_trivial, product
from ..errors import InconsistencyError, MonoidOverflowError, PreconditionError
from ..monoid import TransitionMonoid, generate_monoid, idempotent_poset
from ..utils.logging_config import StructuredLogger

logger = StructuredLogger(__name__)


def is_normal(aut: InverseAutomaton, monoid: TransitionMonoid | None = None) -> bool:
    """K is normal iff M(K) is a group of size |Q|."""
    if is_trivial(aut) or is_full(aut):
        return True
    if not aut.is_complete():
        return False
    if monoid is None:
        try:
            monoid = generate_monoid(aut, cap=aut.state_count)
        except MonoidOverflowError:
            return False
    return monoid.is_group() and len(monoid) == aut.state_count


def off_diagonal_ranks(aut: InverseAutomaton) -> list[int]:
    """Ranks of the components of S(K) × S(K) made of pairs (p, q) with p ≠ q."""
    prod = product(aut, aut)
    edge_counts = [0] * len(prod.components)
    for s, _, _ in prod.graph.edges():
        edge_counts[prod.component_of[s]] += 1
    return [edge_counts[prod.component_of[comp[0]]] - len(comp) + 1 for comp in prod.off_diagonal_components()]


@dataclass(frozen=True)
class MalnormalityMethods:
    """``idempotent_criterion`` is None where its hypotheses (1 ≠ K < F_A) fail."""

    idempotent_criterion: bool | None
    product_criterion: bool

    @property
    def agree(self) -> bool:
        return self.idempotent_criterion is None or self.idempotent_criterion == self.product_criterion


def malnormality_methods(aut: InverseAutomaton, cap: int | None = None) -> MalnormalityMethods:
    product_criterion = all(rank == 0 for rank in off_diagonal_ranks(aut))
    if is_trivial(aut) or is_full(aut):
        return MalnormalityMethods(None, product_criterion)
    poset = idempotent_poset(aut, cap)
    idempotent_criterion = poset.k == 2 and len(poset) == aut.state_count + 1
    return MalnormalityMethods(idempotent_criterion, product_criterion)


def is_malnormal(aut: InverseAutomaton, cap: int | None = None) -> bool:
    methods = malnormality_methods(aut, cap)
    if not methods.agree:
        logger.critical(
            "Malnormality criteria disagree",
            idempotent_criterion=methods.idempotent_criterion,
            product_criterion=methods.product_criterion,
        )
        raise InconsistencyError("Idempotent and product malnormality criteria disagree")
    return methods.product_criterion


def is_cyclonormal(aut: InverseAutomaton) -> bool:
    """Every L_(p,q) with p ≠ q is cyclic."""
    if aut.state_count == 1 or len(aut.alphabet) == 1:
        return True
    return all(rank <= 1 for rank in off_diagonal_ranks(aut))


@dataclass(frozen=True)
class CyclonormalBounds:
    k: int
    e_size: int
    bounds_satisfied: bool


def cyclonormal_bounds(aut: InverseAutomaton, cap: int | None = None) -> CyclonormalBounds:
    """k ∈ {2, 3}; for n = |Q| > 2, |E| ≤ C(n,2)+1 when k = 2 and |E| ≤ n+C(n,2)+1 when k = 3."""
    if is_trivial(aut) or is_full(aut):
        raise PreconditionError("Bounds need a proper nontrivial subgroup")
    if len(aut.alphabet) < 2:
        raise PreconditionError("Bounds need at least two generators")
    if not is_cyclonormal(aut):
        raise PreconditionError("Bounds apply to cyclonormal subgroups only")

    poset = idempotent_poset(aut, cap)
    n, k, e_size = aut.state_count, poset.k, len(poset)
    satisfied = k in (2, 3)
    if satisfied and n > 2:
        pairs = math.comb(n, 2)
        satisfied = e_size <= (pairs + 1 if k == 2 else n + pairs + 1)
    if not satisfied:
        logger.critical("Cyclonormal idempotent bounds violated", states=n, k=k, idempotents=e_size)
    return CyclonormalBounds(k=k, e_size=e_size, bounds_satisfied=satisfied)


def shared_pair(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two distinct sets with at least two common elements, or None.

    Each 2-subset is owned by the first set containing it; a second owner is a hit.
    """
    owner: dict[tuple[int, int], frozenset[int]] = {}
    for s in sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s))):
        for pair in combinations(sorted(s), 2):
            if pair in owner:
                return owner[pair], s
            owner[pair] = s
    return None


def overlap_forced(sets: Iterable[Iterable[int]], n: int) -> bool:
    """For n > 2, more than C(n,2) distinct nonsingletons among subsets of an n-set
    cannot pairwise meet in at most one element."""
    nonsingletons = {frozenset(s) for s in sets if len(frozenset(s)) > 1}
    return n > 2 and len(nonsingletons) > math.comb(n, 2)


@dataclass(frozen=True)
class DomainOverlap:
    nonsingletons: int
    forced: bool
    pair: tuple[frozenset[int], frozenset[int]] | None


def idempotent_domain_overlap(aut: InverseAutomaton, cap: int | None = None) -> DomainOverlap:
    """Domains of E: how many have two or more states, and two of them sharing two states if any."""
    domains = [e.domain for e in idempotent_poset(aut, cap).elements]
    forced = overlap_forced(domains, aut.state_count)
    pair = shared_pair(d for d in domains if len(d) > 1)
    if forced and pair is None:
        logger.critical("Domain overlap count violated", states=aut.state_count, domains=len(domains))
        raise InconsistencyError("More than C(n,2) nonsingleton domains without a shared pair of states")
    return DomainOverlap(nonsingletons=sum(1 for d in set(domains) if len(d) > 1), forced=forced, pair=pair)
