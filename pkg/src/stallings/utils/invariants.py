"""
Structural invariant checks over inverse automata.

All checks are read-only and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..automaton.graph import InverseAutomaton

# A failure in any of these makes the automaton unusable as S(K).
CRITICAL_INVARIANTS = frozenset({"basepoint_in_range", "deterministic", "connected"})


@dataclass
class InvariantResult:
    name: str
    passed: bool
    detail: Optional[str] = None

    @property
    def critical(self) -> bool:
        return self.name in CRITICAL_INVARIANTS


def check_basepoint_in_range(aut: InverseAutomaton) -> InvariantResult:
    if 0 <= aut.basepoint < aut.state_count:
        return InvariantResult(name="basepoint_in_range", passed=True)
    return InvariantResult(
        name="basepoint_in_range",
        passed=False,
        detail=f"basepoint={aut.basepoint} states={aut.state_count}",
    )


def check_deterministic(aut: InverseAutomaton) -> InvariantResult:
    """forward and backward tables are mutually inverse partial maps."""
    violations = []
    for g, (row, back) in enumerate(zip(aut.forward, aut.backward)):
        name = aut.alphabet.names[g]
        for s, t in enumerate(row):
            if t is not None and back[t] != s:
                violations.append(f"{s} -{name}-> {t} missing from the backward table")
        for t, s in enumerate(back):
            if s is not None and row[s] != t:
                violations.append(f"{s} -{name}-> {t} missing from the forward table")
    if violations:
        return InvariantResult(name="deterministic", passed=False, detail="; ".join(violations))
    return InvariantResult(name="deterministic", passed=True)


def check_connected(aut: InverseAutomaton) -> InvariantResult:
    reached = len(aut.bfs_order(aut.basepoint))
    if reached == aut.state_count:
        return InvariantResult(name="connected", passed=True)
    return InvariantResult(
        name="connected",
        passed=False,
        detail=f"{aut.state_count - reached} states unreachable from the basepoint",
    )


def check_trimmed(aut: InverseAutomaton) -> InvariantResult:
    """Every non-basepoint state has degree ≥ 2."""
    pendant = [v for v in range(aut.state_count) if v != aut.basepoint and aut.degree(v) <= 1]
    if pendant:
        return InvariantResult(
            name="trimmed",
            passed=False,
            detail=f"Pendant states: {', '.join(map(str, pendant))}",
        )
    return InvariantResult(name="trimmed", passed=True)


def check_canonical(aut: InverseAutomaton) -> InvariantResult:
    if aut.basepoint == 0 and aut == aut.canonical():
        return InvariantResult(name="canonical", passed=True)
    return InvariantResult(name="canonical", passed=False, detail="States are not in breadth-first order")


def run_all_checks(aut: InverseAutomaton) -> list[InvariantResult]:
    """Run all invariant checks and return results."""
    checks = [check_basepoint_in_range(aut)]
    if not checks[0].passed:
        return checks
    checks += [
        check_deterministic(aut),
        check_connected(aut),
        check_trimmed(aut),
    ]
    if all(c.passed for c in checks):
        checks.append(check_canonical(aut))
    return checks


def critical_failures(results: list[InvariantResult]) -> list[InvariantResult]:
    return [r for r in results if not r.passed and r.critical]
