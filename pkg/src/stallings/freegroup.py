"""Word algebra of the free group F_A.

Letters of Ã = A ∪ A⁻¹ are ordered ``a, a⁻¹, b, b⁻¹, …`` following the alphabet.
That order is the tie-breaker for every deterministic choice downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import AlphabetMismatchError, ParseError
from .utils.config_loader import config_loader


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(str(n) for n in self.names)
        if not names:
            raise ParseError("Alphabet needs at least one generator")
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "^" in name:
                raise ParseError(f"Invalid generator name {name!r}")
        if len(set(names)) != len(names):
            raise ParseError(f"Generator names must be unique: {list(names)}")
        object.__setattr__(self, "names", names)

    @classmethod
    def of(cls, names: Iterable[str] | str) -> "Alphabet":
        """``Alphabet.of("abc")``, ``Alphabet.of("x1, x2")`` or any iterable of names.

        A string is split on whitespace and commas when it has any; otherwise every
        character is a name, so ``"ab1"`` gives ``a, b, 1``. Multi-character names
        need a separator, even when there is only one: ``"ab1,"``.
        """
        if isinstance(names, str):
            names = [p for p in re.split(r"[\s,]+", names) if p] if re.search(r"[\s,]", names) else list(names)
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            if 0 <= name < len(self.names):
                return name
            raise AlphabetMismatchError(f"Generator index {name} out of range")
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetMismatchError(f"Unknown generator '{name}'") from None

    def letters(self) -> tuple["Letter", ...]:
        """All letters of Ã in canonical order."""
        return tuple(Letter(g, s) for g in range(len(self.names)) for s in (1, -1))


class Letter(NamedTuple):
    generator: int
    sign: int = 1

    @property
    def code(self) -> int:
        """Position in the canonical order of Ã; ``code ^ 1`` is the inverse."""
        return 2 * self.generator + (0 if self.sign > 0 else 1)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code >> 1, -1 if code & 1 else 1)

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True, eq=False)
class Word:
    """A possibly unreduced word over Ã."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(l if isinstance(l, Letter) else Letter(*l) for l in self.letters)
        for letter in letters:
            if letter.sign not in (1, -1) or letter.generator < 0:
                raise ValueError(f"Invalid letter {letter!r}")
        object.__setattr__(self, "letters", letters)

    # Reduced and unreduced words with the same letters are equal.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + tuple(other.letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert_word(self) ** (-n)
        return Word(self.letters * n)

    def max_generator(self) -> int:
        return max((l.generator for l in self.letters), default=-1)

    def codes(self) -> tuple[int, ...]:
        return tuple(l.code for l in self.letters)

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> "Word":
        return cls(tuple(Letter.from_code(c) for c in codes))


def _is_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not (x.generator == y.generator and x.sign == -y.sign)
        for x, y in zip(letters, letters[1:])
    )


@dataclass(frozen=True, eq=False)
class ReducedWord(Word):
    """A freely reduced word. Build it with :func:`free_reduce`."""

    def __post_init__(self):
        super().__post_init__()
        if not _is_reduced(self.letters):
            raise ValueError("ReducedWord must not contain a factor x x^-1")

    def __mul__(self, other: Word) -> ReducedWord:
        return free_reduce(Word(self.letters + tuple(other.letters)))

    def __pow__(self, n: int) -> ReducedWord:
        return free_reduce(Word.__pow__(self, n))

    def is_cyclically_reduced(self) -> bool:
        if len(self.letters) < 2:
            return True
        first, last = self.letters[0], self.letters[-1]
        return not (first.generator == last.generator and first.sign == -last.sign)


IDENTITY = ReducedWord(())


def free_reduce(w: Word | Iterable[Letter]) -> ReducedWord:
    if isinstance(w, ReducedWord):
        return w
    stack: list[Letter] = []
    for letter in w:
        if stack and stack[-1].generator == letter.generator and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord(tuple(stack))


def invert_word(w: Word) -> Word:
    inverted = tuple(l.inverse() for l in reversed(w.letters))
    if isinstance(w, ReducedWord):
        return ReducedWord(inverted)
    return Word(inverted)


def cyclic_decompose(u: ReducedWord) -> tuple[ReducedWord, ReducedWord]:
    """Split u = x·w·x⁻¹ with w cyclically reduced."""
    u = free_reduce(u)
    letters = u.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i].generator == letters[j].generator and letters[i].sign == -letters[j].sign:
        i += 1
        j -= 1
    return ReducedWord(letters[:i]), ReducedWord(letters[i:j + 1])


# --- endomorphisms -------------------------------------------------------


@dataclass(frozen=True)
class EndomorphismSpec:
    alphabet: Alphabet
    images: tuple[ReducedWord, ...]

    def __post_init__(self):
        images = tuple(free_reduce(w) for w in self.images)
        if len(images) != len(self.alphabet):
            raise AlphabetMismatchError(
                f"Endomorphism needs {len(self.alphabet)} images, got {len(images)}"
            )
        for image in images:
            if image.max_generator() >= len(self.alphabet):
                raise AlphabetMismatchError("Image uses a generator outside the alphabet")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "EndomorphismSpec":
        return cls(alphabet, tuple(ReducedWord((Letter(g, 1),)) for g in range(len(alphabet))))

    @classmethod
    def from_mapping(cls, alphabet: Alphabet, mapping: Mapping[str | int, Word]) -> "EndomorphismSpec":
        """Generators missing from ``mapping`` are fixed."""
        images = list(cls.identity(alphabet).images)
        for key, word in mapping.items():
            images[alphabet.index(key)] = free_reduce(word)
        return cls(alphabet, tuple(images))

    def image(self, letter: Letter) -> ReducedWord:
        image = self.images[letter.generator]
        return image if letter.sign > 0 else invert_word(image)

    def is_identity(self) -> bool:
        return self == EndomorphismSpec.identity(self.alphabet)


def apply_endo_to_word(e: EndomorphismSpec, w: Word) -> ReducedWord:
    if w.max_generator() >= len(e.alphabet):
        raise AlphabetMismatchError("Word uses a generator outside the endomorphism's alphabet")
    out: list[Letter] = []
    for letter in w:
        out.extend(e.image(letter).letters)
    return free_reduce(out)


def compose_endos(e1: EndomorphismSpec, e2: EndomorphismSpec) -> EndomorphismSpec:
    """First e1, then e2: x ↦ (x e1) e2."""
    if e1.alphabet != e2.alphabet:
        raise AlphabetMismatchError("Cannot compose endomorphisms over different alphabets")
    return EndomorphismSpec(e1.alphabet, tuple(apply_endo_to_word(e2, img) for img in e1.images))


class NielsenKind(str, Enum):
    ALPHA = "alpha"
    BETA = "beta"
    BETA_INV = "betainv"

    @classmethod
    def parse(cls, text: str) -> "NielsenKind":
        key = text.strip().lower().replace("_", "").replace("-", "")
        aliases = {"alpha": cls.ALPHA, "beta": cls.BETA, "betainv": cls.BETA_INV, "betainverse": cls.BETA_INV}
        if key not in aliases:
            raise ValueError(f"Unknown Nielsen automorphism kind '{text}'")
        return aliases[key]


class NielsenStep(NamedTuple):
    kind: NielsenKind
    a: int
    b: int | None = None

    def inverse(self) -> "NielsenStep":
        if self.kind is NielsenKind.BETA:
            return NielsenStep(NielsenKind.BETA_INV, self.a, self.b)
        if self.kind is NielsenKind.BETA_INV:
            return NielsenStep(NielsenKind.BETA, self.a, self.b)
        return self


def nielsen(
    alphabet: Alphabet,
    kind: NielsenKind | str,
    a: str | int,
    b: str | int | None = None,
) -> EndomorphismSpec:
    """α_a (a ↦ a⁻¹), β_ab (a ↦ ab) or β_ab⁻¹ (a ↦ ab⁻¹); other generators fixed."""
    kind = NielsenKind.parse(kind) if isinstance(kind, str) else kind
    ga = alphabet.index(a)
    images = list(EndomorphismSpec.identity(alphabet).images)
    if kind is NielsenKind.ALPHA:
        if b is not None:
            raise ValueError("alpha takes a single generator")
        images[ga] = ReducedWord((Letter(ga, -1),))
        return EndomorphismSpec(alphabet, tuple(images))

    if len(alphabet) < 2:
        raise ValueError(f"{kind.value} needs an alphabet with at least two generators")
    if b is None:
        raise ValueError(f"{kind.value} needs two generators")
    gb = alphabet.index(b)
    if ga == gb:
        raise ValueError(f"{kind.value} needs distinct generators, got '{alphabet.names[ga]}' twice")
    sign = 1 if kind is NielsenKind.BETA else -1
    images[ga] = ReducedWord((Letter(ga, 1), Letter(gb, sign)))
    return EndomorphismSpec(alphabet, tuple(images))


def nielsen_sequence(alphabet: Alphabet, steps: Sequence[NielsenStep]) -> EndomorphismSpec:
    """Composite automorphism applying ``steps`` left to right."""
    result = EndomorphismSpec.identity(alphabet)
    for step in steps:
        result = compose_endos(result, nielsen(alphabet, step.kind, step.a, step.b))
    return result


def inverse_steps(steps: Sequence[NielsenStep]) -> list[NielsenStep]:
    return [step.inverse() for step in reversed(steps)]


# --- text ------------------------------------------------------------------


def _compact_allowed(alphabet: Alphabet) -> bool:
    names = set(alphabet.names)
    return all(len(n) == 1 and n.isalpha() and n.swapcase() not in names for n in names)


def _parse_exponent(raw: str, column: int) -> int:
    body = raw.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        return int(body)
    except ValueError:
        raise ParseError(f"Malformed exponent '^{raw}'", column=column) from None


def parse_word(text: str, alphabet: Alphabet, max_exponent: int | None = None) -> Word:
    """Parse ``"a b^-1 c^2"``; compact ``"aB"`` is accepted for one-letter alphabets.

    Parsing never reduces. ``1`` denotes the empty word. Exponents above
    ``max_exponent`` (config ``max_exponent`` by default) in absolute value are rejected.
    """
    letters: list[Letter] = []
    compact = _compact_allowed(alphabet)
    position = 0
    for token in text.split():
        column = text.index(token, position) + 1
        position = column - 1 + len(token)

        if token == "1" and "1" not in alphabet.names:
            continue

        name, caret, exponent_text = token.partition("^")
        exponent = 1
        if caret:
            if not exponent_text:
                raise ParseError(f"Malformed exponent token '{token}'", column=column + len(name))
            exponent = _parse_exponent(exponent_text, column + len(name))
            if max_exponent is None:
                max_exponent = config_loader.get().max_exponent
            if abs(exponent) > max_exponent:
                raise ParseError(f"Exponent {exponent} exceeds the limit of {max_exponent}", column=column + len(name))

        if name in alphabet.names:
            letter = Letter(alphabet.names.index(name), 1)
            count = abs(exponent)
            letters.extend([letter if exponent > 0 else letter.inverse()] * count)
            continue

        if compact and not caret and name:
            for offset, ch in enumerate(name):
                if ch in alphabet.names:
                    letters.append(Letter(alphabet.names.index(ch), 1))
                elif ch.swapcase() in alphabet.names and ch.isupper():
                    letters.append(Letter(alphabet.names.index(ch.swapcase()), -1))
                else:
                    raise ParseError(f"Unknown generator '{ch}'", column=column + offset)
            continue

        raise ParseError(f"Unknown generator '{name}'", column=column)
    return Word(tuple(letters))


def format_word(w: Word, alphabet: Alphabet) -> str:
    if not w.letters:
        return "1"
    parts = []
    for letter in w:
        name = alphabet.names[letter.generator]
        parts.append(name if letter.sign > 0 else f"{name}^-1")
    return " ".join(parts)


def parse_reduced(text: str, alphabet: Alphabet) -> ReducedWord:
    return free_reduce(parse_word(text, alphabet))
