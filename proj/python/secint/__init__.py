"""Brill-Noether numerics, incidence counts and emptiness certificates for secant varieties."""

from ._secint import (
    Error,
    InternalError,
    InvalidArgument,
    NotApplicable,
    PreconditionError,
    ResidualNotEffective,
    SearchSpaceTooLarge,
    __version__,
    adjunction_nodes,
    certify,
    chow_count,
    classify_incidence_zero,
    counterexample_report,
    emptiness_condition_holds,
    expected_dim_secant,
    gen_binomial,
    incidence_count,
    is_secant_divisor,
    plucker_total,
    ramification_weight_total,
    residual,
    rho,
    run_cli,
    severi_count,
)

__all__ = [
    "Error",
    "InternalError",
    "InvalidArgument",
    "NotApplicable",
    "PreconditionError",
    "ResidualNotEffective",
    "SearchSpaceTooLarge",
    "__version__",
    "adjunction_nodes",
    "certify",
    "chow_count",
    "classify_incidence_zero",
    "counterexample_report",
    "emptiness_condition_holds",
    "expected_dim_secant",
    "gen_binomial",
    "incidence_count",
    "is_secant_divisor",
    "plucker_total",
    "ramification_weight_total",
    "residual",
    "rho",
    "run_cli",
    "severi_count",
]
