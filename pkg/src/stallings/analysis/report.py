"""Aggregated property report for one subgroup."""

from __future__ import annotations

import math
from typing import Iterable, Optional

from pydantic import BaseModel, Field

from ..automaton import InverseAutomaton, basis, index, is_full, is_trivial
from ..errors import PreconditionError
from ..monoid import generate_monoid, group_H_classes, idempotent_poset
from ..utils.deterministic import canonical_json, ordered_json, stable_hash_hex
from ..utils.logging_config import StructuredLogger
from .properties import cyclonormal_bounds, is_cyclonormal, is_normal, malnormality_methods
from .pseudovariety import in_Bk_bar, in_Gpi_bar, purity_methods

logger = StructuredLogger(__name__)

REPORT_SCHEMA_VERSION = 1


class CrossCheck(BaseModel):
    agree: bool
    values: dict[str, Optional[bool]]


class PropertyReport(BaseModel):
    schema_version: int = REPORT_SCHEMA_VERSION
    alphabet: list[str]
    states: int
    rank: int
    index: Optional[int] = Field(None, description="None when the index is infinite")
    trivial: bool
    full: bool
    normal: bool
    malnormal: bool
    cyclonormal: bool
    pure: bool
    bk: dict[str, bool] = Field(default_factory=dict)
    gpi: dict[str, bool] = Field(default_factory=dict)
    monoid_size: int
    group_h_classes: list[int] = Field(default_factory=list, description="sizes of nontrivial group H-classes")
    idempotents: Optional[int] = None
    k: Optional[int] = None
    cyclonormal_bounds_satisfied: Optional[bool] = None
    cross_checks: dict[str, CrossCheck] = Field(default_factory=dict)
    inconsistent: bool = False
    digest: str = ""

    def to_json(self) -> str:
        return ordered_json(self.model_dump(mode="json"))

    def to_text(self) -> str:
        index_text = "infinite" if self.index is None else str(self.index)
        lines = [
            f"alphabet: {' '.join(self.alphabet)}",
            f"states: {self.states}",
            f"rank: {self.rank}",
            f"index: {index_text}",
            f"normal: {_yes_no(self.normal)}",
            f"malnormal: {_yes_no(self.malnormal)}",
            f"cyclonormal: {_yes_no(self.cyclonormal)}",
            f"pure: {_yes_no(self.pure)}",
        ]
        lines += [f"B_{k}: {_yes_no(v)}" for k, v in self.bk.items()]
        lines += [f"G_{{{pi}}}: {_yes_no(v)}" for pi, v in self.gpi.items()]
        lines.append(f"monoid size: {self.monoid_size}")
        if self.group_h_classes:
            lines.append(f"nontrivial group H-classes: {' '.join(map(str, self.group_h_classes))}")
        if self.idempotents is not None:
            lines.append(f"|E|: {self.idempotents}")
            lines.append(f"k: {self.k}")
        if self.cyclonormal_bounds_satisfied is not None:
            lines.append(f"cyclonormal bounds: {'hold' if self.cyclonormal_bounds_satisfied else 'VIOLATED'}")
        for name, check in self.cross_checks.items():
            lines.append(f"cross-check {name}: {'agree' if check.agree else 'DISAGREE'}")
        if self.inconsistent:
            lines.append("INCONSISTENT")
        return "\n".join(lines) + "\n"


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def build_report(
    aut: InverseAutomaton,
    ks: Iterable[int] = (),
    pis: Iterable[Iterable[int]] = (),
    cap: int | None = None,
) -> PropertyReport:
    monoid = generate_monoid(aut, cap)
    malnormal = malnormality_methods(aut, cap)
    purity = purity_methods(aut, monoid)
    cross_checks = {
        "malnormal": CrossCheck(
            agree=malnormal.agree,
            values={"idempotents": malnormal.idempotent_criterion, "product": malnormal.product_criterion},
        ),
        "pure": CrossCheck(
            agree=purity.agree,
            values={"h_classes": purity.trivial_h_classes, "aperiodic": purity.aperiodic_identity},
        ),
    }

    idempotents = k = bounds = None
    if not is_trivial(aut):
        poset = idempotent_poset(aut, cap)
        idempotents, k = len(poset), poset.k
    cyclonormal = is_cyclonormal(aut)
    if cyclonormal:
        try:
            bounds = cyclonormal_bounds(aut, cap).bounds_satisfied
        except PreconditionError:
            bounds = None

    finite = index(aut)
    report = PropertyReport(
        alphabet=list(aut.alphabet.names),
        states=aut.state_count,
        rank=len(basis(aut)),
        index=None if math.isinf(finite) else int(finite),
        trivial=is_trivial(aut),
        full=is_full(aut),
        normal=is_normal(aut, monoid),
        malnormal=malnormal.product_criterion,
        cyclonormal=cyclonormal,
        pure=purity.trivial_h_classes,
        bk={str(kk): in_Bk_bar(aut, kk, monoid) for kk in ks},
        gpi={",".join(map(str, sorted(set(pi)))): in_Gpi_bar(aut, pi, monoid) for pi in pis},
        monoid_size=len(monoid),
        group_h_classes=sorted(c.size for c in group_H_classes(monoid) if not c.is_trivial()),
        idempotents=idempotents,
        k=k,
        cyclonormal_bounds_satisfied=bounds,
        cross_checks=cross_checks,
        inconsistent=not all(c.agree for c in cross_checks.values()) or bounds is False,
    )
    report.digest = stable_hash_hex(canonical_json(report.model_dump(mode="json", exclude={"digest"})))
    if report.inconsistent:
        logger.critical("Property report carries an inconsistency", digest=report.digest)
    return report
