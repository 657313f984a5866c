"""Partial injections on a finite state set, composed left to right."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Table = tuple[int | None, ...]


@dataclass(frozen=True)
class PartialInjection:
    """``table[q]`` is the image of q or ``None``; ``(q)(f * g) = ((q)f)g``."""

    table: Table

    def __post_init__(self):
        seen = set()
        for target in self.table:
            if target is None:
                continue
            if not 0 <= target < len(self.table):
                raise ValueError(f"Image {target} outside 0..{len(self.table) - 1}")
            if target in seen:
                raise ValueError(f"Not injective: {target} has two preimages")
            seen.add(target)

    @classmethod
    def identity(cls, size: int) -> "PartialInjection":
        return cls(tuple(range(size)))

    @classmethod
    def empty(cls, size: int) -> "PartialInjection":
        return cls((None,) * size)

    @classmethod
    def restriction(cls, size: int, states: Iterable[int]) -> "PartialInjection":
        """id restricted to ``states``."""
        keep = set(states)
        return cls(tuple(q if q in keep else None for q in range(size)))

    @classmethod
    def from_mapping(cls, size: int, mapping: dict[int, int]) -> "PartialInjection":
        return cls(tuple(mapping.get(q) for q in range(size)))

    @property
    def size(self) -> int:
        return len(self.table)

    def __call__(self, q: int) -> int | None:
        return self.table[q]

    def __mul__(self, other: "PartialInjection") -> "PartialInjection":
        if other.size != self.size:
            raise ValueError("Cannot compose partial injections on different state sets")
        g = other.table
        return PartialInjection(tuple(None if x is None else g[x] for x in self.table))

    def __pow__(self, n: int) -> "PartialInjection":
        if n < 0:
            return self.inverse() ** -n
        result = PartialInjection.identity(self.size)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(q for q, x in enumerate(self.table) if x is not None)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(x for x in self.table if x is not None)

    def inverse(self) -> "PartialInjection":
        table: list[int | None] = [None] * self.size
        for q, x in enumerate(self.table):
            if x is not None:
                table[x] = q
        return PartialInjection(tuple(table))

    def is_idempotent(self) -> bool:
        return all(x is None or x == q for q, x in enumerate(self.table))

    def is_total(self) -> bool:
        return all(x is not None for x in self.table)

    def is_empty(self) -> bool:
        return all(x is None for x in self.table)

    def rank(self) -> int:
        return len(self.domain)

    def cycles(self) -> list[tuple[int, ...]]:
        """Orbits of a permutation of its domain (dom = im); fixed points omitted."""
        if self.domain != self.image:
            raise ValueError("Cycle notation needs domain equal to image")
        seen: set[int] = set()
        result = []
        for q in sorted(self.domain):
            if q in seen:
                continue
            cycle = [q]
            seen.add(q)
            x = self.table[q]
            while x != q:
                cycle.append(x)
                seen.add(x)
                x = self.table[x]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        return "[" + " ".join("-" if x is None else str(x) for x in self.table) + "]"


def invert_element(f: PartialInjection) -> PartialInjection:
    return f.inverse()


def natural_leq(f: PartialInjection, g: PartialInjection) -> bool:
    """f ≤ g iff f is the restriction of g to dom f."""
    if f.size != g.size:
        raise ValueError("Cannot compare partial injections on different state sets")
    return all(x is None or g.table[q] == x for q, x in enumerate(f.table))
