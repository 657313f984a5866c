"""JSON file formats for subgroups, automata and endomorphisms."""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..automaton import InverseAutomaton, stallings, trim
from ..errors import AutomatonInvariantError, ParseError
from ..freegroup import Alphabet, EndomorphismSpec, Word, parse_word
from ..utils.deterministic import ordered_json
from ..utils.invariants import critical_failures, run_all_checks
from ..utils.logging_config import StructuredLogger

logger = StructuredLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


class _AlphabetModel(BaseModel):
    alphabet: list[str] = Field(min_length=1)

    @field_validator("alphabet")
    def validate_alphabet(cls, v):
        Alphabet(tuple(v))
        return v

    def to_alphabet(self) -> Alphabet:
        return Alphabet(tuple(self.alphabet))


class SubgroupFile(_AlphabetModel):
    generators: list[str] = Field(default_factory=list)

    def words(self, source: str | None = None) -> list[Word]:
        alphabet = self.to_alphabet()
        words = []
        for text in self.generators:
            try:
                words.append(parse_word(text, alphabet))
            except ParseError as e:
                raise _locate(e, text, source) from None
        return words

    def to_automaton(self, source: str | None = None) -> InverseAutomaton:
        return stallings(self.words(source), self.to_alphabet())


class AutomatonFile(_AlphabetModel):
    states: int
    basepoint: int = 0
    edges: list[tuple[int, str, int]] = Field(default_factory=list)

    @classmethod
    def from_automaton(cls, aut: InverseAutomaton) -> "AutomatonFile":
        names = aut.alphabet.names
        return cls(
            alphabet=list(names),
            states=aut.state_count,
            basepoint=aut.basepoint,
            edges=[(s, names[g], t) for s, g, t in aut.edges()],
        )

    def to_automaton(self) -> InverseAutomaton:
        alphabet = self.to_alphabet()
        if self.states < 1:
            raise AutomatonInvariantError(f"Automaton needs at least one state, got {self.states}", ["states_positive"])
        edges = []
        for s, name, t in self.edges:
            if name not in alphabet.names:
                raise AutomatonInvariantError(f"Edge ({s}, {name}, {t}) uses an unknown generator", ["generators_in_range"])
            edges.append((s, alphabet.names.index(name), t))
        if not 0 <= self.basepoint < self.states:
            raise AutomatonInvariantError(
                f"Basepoint {self.basepoint} outside 0..{self.states - 1}", ["basepoint_in_range"]
            )
        aut = InverseAutomaton.from_edges(alphabet, self.states, edges, self.basepoint)

        results = run_all_checks(aut)
        critical = critical_failures(results)
        if critical:
            detail = "; ".join(f"{r.name}: {r.detail}" for r in critical)
            raise AutomatonInvariantError(f"Invalid automaton: {detail}", [r.name for r in critical])
        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.warning("Normalizing loaded automaton", failed=failed)
        return trim(aut)


class EndomorphismFile(_AlphabetModel):
    images: dict[str, str]

    def to_spec(self, source: str | None = None) -> EndomorphismSpec:
        alphabet = self.to_alphabet()
        mapping = {}
        for name, text in self.images.items():
            if name not in alphabet.names:
                raise ParseError(f"Image given for unknown generator '{name}'")
            try:
                mapping[name] = parse_word(text, alphabet)
            except ParseError as e:
                raise _locate(e, text, source) from None
        return EndomorphismSpec.from_mapping(alphabet, mapping)


def _locate(error: ParseError, text: str, source: str | None) -> ParseError:
    """Re-anchor a word parse error at its position in the JSON source."""
    needle = json.dumps(text)
    if source is None or needle not in source:
        return error
    offset = source.index(needle) + 1
    line = source.count("\n", 0, offset) + 1
    column_offset = offset - (source.rfind("\n", 0, offset) + 1)
    return error.at_line(line, column_offset)


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def decode(source: str) -> dict:
    try:
        data = json.loads(source)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    if not isinstance(data, dict):
        raise ParseError("Expected a JSON object", line=1, column=1)
    return data


def _locate_field(loc: tuple, source: str | None) -> tuple[int | None, int | None]:
    """Line and column of the innermost named key of ``loc`` in the JSON source."""
    keys = [part for part in loc if isinstance(part, str)]
    if source is None or not keys:
        return None, None
    match = re.search(re.escape(json.dumps(keys[-1])) + r"\s*:", source)
    if match is None:
        return None, None
    offset = match.start()
    line = source.count("\n", 0, offset) + 1
    return line, offset - (source.rfind("\n", 0, offset) + 1) + 1


def validate(model: type[Model], data: dict, source: str | None = None) -> Model:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        line, column = _locate_field(first["loc"], source)
        raise ParseError(f"{where}: {first['msg']}" if where else first["msg"], line=line, column=column) from None


def load_automaton(path: str) -> InverseAutomaton:
    """Subgroup files are folded; automaton files are checked and normalized."""
    source = read_text(path)
    data = decode(source)
    if "edges" in data or "states" in data:
        return validate(AutomatonFile, data, source).to_automaton()
    if "generators" in data:
        return validate(SubgroupFile, data, source).to_automaton(source)
    raise ParseError("Expected a subgroup file (generators) or an automaton file (states, edges)")


def load_endomorphism(path: str) -> EndomorphismSpec:
    source = read_text(path)
    return validate(EndomorphismFile, decode(source), source).to_spec(source)


def dump_automaton(aut: InverseAutomaton) -> str:
    return dump(AutomatonFile.from_automaton(aut))


def dump(model: BaseModel) -> str:
    return ordered_json(model.model_dump(mode="json"))


def write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
