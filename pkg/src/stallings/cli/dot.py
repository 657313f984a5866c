"""Graphviz DOT export."""

from __future__ import annotations

from typing import Iterator

from ..automaton import InverseAutomaton


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def graphviz(aut: InverseAutomaton, name: str = "S") -> Iterator[str]:
    """DOT lines; the basepoint is double-circled, one edge per positive transition."""
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    for state in range(aut.state_count):
        shape = "doublecircle" if state == aut.basepoint else "circle"
        yield f'  {state} [shape="{shape}"];\n'
    for s, g, t in aut.edges():
        yield f"  {s} -> {t} [label={_gvquote(aut.alphabet.names[g])}];\n"
    yield "}\n"


def to_dot(aut: InverseAutomaton, name: str = "S") -> str:
    return "".join(graphviz(aut, name))
