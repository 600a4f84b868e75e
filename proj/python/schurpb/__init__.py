"""Schur multiple zeta values and Schur type poly-Bernoulli numbers.

Tableaux are lists of rows. Exact values come back as fractions.Fraction;
numeric ones as (value, bound, method) tuples.
"""

from ._schurpb import (
    DomainError,
    InputError,
    bernoulli_table,
    conjugate,
    corners,
    decompose,
    eta,
    eta_special_value,
    hook_b_stirling,
    mzv,
    mzv_star,
    polylog,
    run_cli,
    schur_zeta,
    schur_zeta_via_decomposition,
    xi,
    xi_oracle,
    xi_special_value,
)

__all__ = [
    "DomainError",
    "InputError",
    "bernoulli_table",
    "conjugate",
    "corners",
    "decompose",
    "eta",
    "eta_special_value",
    "hook_b_stirling",
    "mzv",
    "mzv_star",
    "polylog",
    "run_cli",
    "schur_zeta",
    "schur_zeta_via_decomposition",
    "xi",
    "xi_oracle",
    "xi_special_value",
]
