"""Membership of M(K) in pseudovarieties defined by its group H-classes, group identities,
and automorphism detection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as assignments
from typing import Iterable, Sequence

from ..automaton import InverseAutomaton, index, is_full, stallings
from ..errors import AlphabetMismatchError, InconsistencyError, PreconditionError
from ..freegroup import Alphabet, EndomorphismSpec, Word
from ..monoid import PartialInjection, TransitionMonoid, generate_monoid, group_H_classes
from ..utils.config_loader import config_loader
from ..utils.logging_config import StructuredLogger

logger = StructuredLogger(__name__)


def _monoid(aut: InverseAutomaton, monoid: TransitionMonoid | None, cap: int | None) -> TransitionMonoid:
    return monoid if monoid is not None else generate_monoid(aut, cap)


def group_orders(m: TransitionMonoid) -> set[int]:
    """Element orders occurring in group H-classes."""
    return {order for cls in group_H_classes(m) for order in cls.orders}


@dataclass(frozen=True)
class PurityMethods:
    trivial_h_classes: bool
    aperiodic_identity: bool

    @property
    def agree(self) -> bool:
        return self.trivial_h_classes == self.aperiodic_identity


def is_aperiodic(m: TransitionMonoid) -> bool:
    """f^(n+1) = f^n for n = |M| and every element f."""
    n = len(m)
    for f in m.elements:
        power = f ** n
        if power * f != power:
            return False
    return True


def purity_methods(
    aut: InverseAutomaton,
    monoid: TransitionMonoid | None = None,
    cap: int | None = None,
) -> PurityMethods:
    m = _monoid(aut, monoid, cap)
    trivial = all(cls.is_trivial() for cls in group_H_classes(m))
    return PurityMethods(trivial_h_classes=trivial, aperiodic_identity=is_aperiodic(m))


def is_pure(aut: InverseAutomaton, monoid: TransitionMonoid | None = None, cap: int | None = None) -> bool:
    methods = purity_methods(aut, monoid, cap)
    if not methods.agree:
        logger.critical(
            "Purity criteria disagree",
            trivial_h_classes=methods.trivial_h_classes,
            aperiodic_identity=methods.aperiodic_identity,
        )
        raise InconsistencyError("H-class and aperiodicity criteria for purity disagree")
    return methods.trivial_h_classes


def in_Bk_bar(
    aut: InverseAutomaton,
    k: int,
    monoid: TransitionMonoid | None = None,
    cap: int | None = None,
) -> bool:
    """Every element order in every group H-class divides k."""
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    return all(k % order == 0 for order in group_orders(_monoid(aut, monoid, cap)))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_pi_number(n: int, primes: Iterable[int]) -> bool:
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


def in_Gpi_bar(
    aut: InverseAutomaton,
    primes: Iterable[int],
    monoid: TransitionMonoid | None = None,
    cap: int | None = None,
) -> bool:
    """Every element order in every group H-class is a π-number."""
    primes = sorted(set(primes))
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise PreconditionError(f"Not prime: {', '.join(map(str, bad))}")
    return all(is_pi_number(order, primes) for order in group_orders(_monoid(aut, monoid, cap)))


def is_p_pure(aut: InverseAutomaton, p: int, monoid: TransitionMonoid | None = None, cap: int | None = None) -> bool:
    return in_Gpi_bar(aut, {p}, monoid, cap)


def _evaluate(word: Word, assignment: Sequence[PartialInjection], identity: PartialInjection) -> PartialInjection:
    value = identity
    for letter in word:
        f = assignment[letter.generator]
        value = value * (f if letter.sign > 0 else f.inverse())
    return value


def satisfies_group_identities(
    aut: InverseAutomaton,
    identities: Sequence[Word],
    variables: Alphabet,
    monoid: TransitionMonoid | None = None,
    cap: int | None = None,
) -> bool:
    """M(K) ⊨ u = 1 for every u, by evaluating over all assignments X → M(K)."""
    if math.isinf(index(aut)):
        raise PreconditionError("Group identities need a subgroup of finite index")
    for word in identities:
        if word.max_generator() >= len(variables):
            raise AlphabetMismatchError("Identity uses a variable outside the variable alphabet")
    if len(variables) > config_loader.get().identity_warn_variables:
        logger.warning("Identity check enumerates |M|^|X| assignments", variables=len(variables))

    m = _monoid(aut, monoid, cap)
    for values in assignments(m.elements, repeat=len(variables)):
        for word in identities:
            if _evaluate(word, values, m.identity) != m.identity:
                logger.debug("Identity fails", assignment=[str(f) for f in values])
                return False
    return True


def is_automorphism(e: EndomorphismSpec) -> bool:
    """Surjective endomorphisms of a finitely generated free group are automorphisms."""
    return is_full(stallings(e.images, e.alphabet))
