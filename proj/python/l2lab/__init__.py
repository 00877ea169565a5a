"""Weighted Bergman spaces, Green functions, and minimal L2 extensions."""

from ._l2lab import (
    Domain,
    L2LabError,
    azukawa,
    demext_constant,
    equality_locus,
    green,
    indicatrix_volume,
    kappa_constant,
    kernel_deterioration,
    kernel_diagonal,
    log_capacity,
    minimal_integral_curve,
    run_suite,
    suita_report,
)

__all__ = [
    "Domain",
    "L2LabError",
    "azukawa",
    "demext_constant",
    "equality_locus",
    "green",
    "indicatrix_volume",
    "kappa_constant",
    "kernel_deterioration",
    "kernel_diagonal",
    "log_capacity",
    "minimal_integral_curve",
    "run_suite",
    "suita_report",
]
