"""Exact point counts of root lattices inside hypercubes.

Thin wrapper over the compiled module; everything is exported as-is.
"""

try:
    from ._latcount import (  # noqa: F401
        BFileError,
        BudgetExceeded,
        InvalidSpec,
        bulk,
        centered_multinomial,
        eta,
        expand,
        fit_polynomial,
        gamma_coeff,
        genfunc,
        oracle_bulk,
        surface,
        verify_conjecture_bulk,
        verify_conjecture_surface,
        verify_oracle_equivalence,
        verify_tables,
    )
except ImportError:  # in-tree builds put the compiled module on sys.path directly
    from _latcount import (  # noqa: F401
        BFileError,
        BudgetExceeded,
        InvalidSpec,
        bulk,
        centered_multinomial,
        eta,
        expand,
        fit_polynomial,
        gamma_coeff,
        genfunc,
        oracle_bulk,
        surface,
        verify_conjecture_bulk,
        verify_conjecture_surface,
        verify_oracle_equivalence,
        verify_tables,
    )

__all__ = [
    "BFileError",
    "BudgetExceeded",
    "InvalidSpec",
    "bulk",
    "centered_multinomial",
    "eta",
    "expand",
    "fit_polynomial",
    "gamma_coeff",
    "genfunc",
    "oracle_bulk",
    "surface",
    "verify_conjecture_bulk",
    "verify_conjecture_surface",
    "verify_oracle_equivalence",
    "verify_tables",
]
