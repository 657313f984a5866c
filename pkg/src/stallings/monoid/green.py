"""Green's relations and group H-classes of a transition monoid.

In an inverse monoid of partial injections R is equality of domains, L equality of
images, H both, and D = R ∘ L.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable

from .transformation import PartialInjection
from .transition import TransitionMonoid

Classes = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GreenClasses:
    """Partitions of element indices, each class and the class list sorted."""

    R: Classes
    L: Classes
    H: Classes
    D: Classes

    def relation(self, name: str) -> Classes:
        return getattr(self, name)


@dataclass(frozen=True)
class GroupHClass:
    members: tuple[int, ...]
    identity: int
    orders: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return self.size == 1

    def is_cyclic(self) -> bool:
        return self.size in self.orders


def _partition(m: TransitionMonoid, key: Callable[[PartialInjection], Hashable]) -> Classes:
    groups: dict[Hashable, list[int]] = defaultdict(list)
    for i, f in enumerate(m.elements):
        groups[key(f)].append(i)
    return tuple(sorted(tuple(g) for g in groups.values()))


def green_classes(m: TransitionMonoid) -> GreenClasses:
    R = _partition(m, lambda f: f.domain)
    L = _partition(m, lambda f: f.image)
    H = _partition(m, lambda f: (f.domain, f.image))

    parent = list(range(len(m)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in R + L:
        for i in cls[1:]:
            a, b = find(cls[0]), find(i)
            if a != b:
                parent[max(a, b)] = min(a, b)
    D = _partition(m, lambda f: find(m.index_of(f)))
    return GreenClasses(R=R, L=L, H=H, D=D)


def element_order(f: PartialInjection, identity: PartialInjection, bound: int) -> int:
    """Least n ≥ 1 with fⁿ = identity, searching up to ``bound``."""
    power = f
    for n in range(1, bound + 1):
        if power == identity:
            return n
        power = power * f
    raise ValueError(f"No power of {f} up to {bound} equals {identity}")


def group_H_classes(m: TransitionMonoid) -> list[GroupHClass]:
    result = []
    for cls in green_classes(m).H:
        f = m.elements[cls[0]]
        if f.domain != f.image:
            continue
        e = PartialInjection.restriction(m.state_count, f.domain)
        orders = tuple(element_order(m.elements[i], e, len(cls)) for i in cls)
        result.append(GroupHClass(members=cls, identity=m.index_of(e), orders=orders))
    return result
