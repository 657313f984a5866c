"""Text forms used on the command line: Nielsen step lists, partial injections, flag values."""

from __future__ import annotations

import argparse

from ..analysis import is_prime
from ..errors import AlphabetMismatchError, ParseError
from ..freegroup import Alphabet, NielsenKind, NielsenStep, Word, format_word, invert_word, parse_word
from ..monoid import PartialInjection, TransitionMonoid


def parse_nielsen_spec(text: str, alphabet: Alphabet) -> list[NielsenStep]:
    """``"beta a b; alpha c; betainv b a"``, steps applied left to right."""
    steps = []
    position = 0
    for chunk in text.split(";"):
        column = position + 1
        position += len(chunk) + 1
        tokens = chunk.split()
        if not tokens:
            continue
        column += len(chunk) - len(chunk.lstrip())
        try:
            kind = NielsenKind.parse(tokens[0])
        except ValueError as e:
            raise ParseError(str(e), column=column) from None
        expected = 2 if kind is NielsenKind.ALPHA else 3
        if len(tokens) != expected:
            raise ParseError(f"'{kind.value}' takes {expected - 1} generator(s)", column=column)
        try:
            generators = [alphabet.index(name) for name in tokens[1:]]
        except AlphabetMismatchError as e:
            raise ParseError(str(e), column=column) from None
        if len(generators) == 2 and generators[0] == generators[1]:
            raise ParseError(f"'{kind.value}' needs distinct generators", column=column)
        steps.append(NielsenStep(kind, generators[0], generators[1] if len(generators) == 2 else None))
    return steps


def format_nielsen_steps(steps: list[NielsenStep], alphabet: Alphabet) -> str:
    parts = []
    for step in steps:
        names = [alphabet.names[step.a]]
        if step.b is not None:
            names.append(alphabet.names[step.b])
        parts.append(" ".join([step.kind.value, *names]))
    return "; ".join(parts)


def positive_int(text: str) -> int:
    """argparse ``type=`` for counts such as --monoid-cap and --jobs."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def parse_alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.of(text)
    except ParseError as e:
        raise ParseError(f"--alphabet: {e.message}") from None


def parse_identity(text: str, variables: Alphabet) -> Word:
    """``"x y = y x"`` → x y x⁻¹ y⁻¹; a bare ``"x^2"`` means x^2 = 1."""
    lhs, equals, rhs = text.partition("=")
    u = parse_word(lhs, variables)
    if not equals:
        return u
    try:
        v = parse_word(rhs, variables)
    except ParseError as e:
        column = None if e.column is None else e.column + len(lhs) + 1
        raise ParseError(e.message, column=column) from None
    return u * invert_word(v)


def parse_int_list(text: str, flag: str) -> list[int]:
    values = []
    for item in text.replace(",", " ").split():
        try:
            value = int(item)
        except ValueError:
            raise ParseError(f"{flag}: '{item}' is not an integer") from None
        if value < 1:
            raise ParseError(f"{flag}: values must be positive, got {value}")
        values.append(value)
    return values


def parse_prime_sets(text: str) -> list[list[int]]:
    """``"2;3;2,3"`` → [[2], [3], [2, 3]]."""
    sets = [parse_int_list(chunk, "--pi") for chunk in text.split(";") if chunk.strip()]
    for primes in sets:
        bad = [p for p in primes if not is_prime(p)]
        if bad:
            raise ParseError(f"--pi: not prime: {', '.join(map(str, bad))}")
    return sets


def describe_element(f: PartialInjection, m: TransitionMonoid) -> str:
    alphabet = m.automaton.alphabet
    return f"{f}  via {format_word(m.witness(f), alphabet)}"
