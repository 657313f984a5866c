"""Decision procedures for properties of finitely generated subgroups."""

from .properties import (
    CyclonormalBounds,
    DomainOverlap,
    MalnormalityMethods,
    cyclonormal_bounds,
    idempotent_domain_overlap,
    is_cyclonormal,
    is_malnormal,
    is_normal,
    malnormality_methods,
    off_diagonal_ranks,
    overlap_forced,
    shared_pair,
)
from .pseudovariety import (
    PurityMethods,
    in_Bk_bar,
    in_Gpi_bar,
    is_aperiodic,
    is_automorphism,
    is_p_pure,
    is_prime,
    is_pure,
    purity_methods,
    satisfies_group_identities,
)
from .report import REPORT_SCHEMA_VERSION, CrossCheck, PropertyReport, build_report

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "CrossCheck",
    "CyclonormalBounds",
    "DomainOverlap",
    "MalnormalityMethods",
    "PropertyReport",
    "PurityMethods",
    "build_report",
    "cyclonormal_bounds",
    "idempotent_domain_overlap",
    "in_Bk_bar",
    "in_Gpi_bar",
    "is_aperiodic",
    "is_automorphism",
    "is_cyclonormal",
    "is_malnormal",
    "is_normal",
    "is_p_pure",
    "is_prime",
    "is_pure",
    "malnormality_methods",
    "off_diagonal_ranks",
    "overlap_forced",
    "purity_methods",
    "satisfies_group_identities",
    "shared_pair",
]
