"""Exact Juddian points and a Fock-space oracle for the two-mode spin-boson model.

Rational inputs may be ints, ``fractions.Fraction`` or strings such as ``"3/16"``.
"""

from ._jtqes import (
    DegenerateDeterminant,
    OracleNonConvergence,
    algebra_check,
    arbitrate_displaced_oscillator,
    check_J_commutes,
    compare_printed,
    determinant,
    juddian,
    preset,
    recurrence_matrix,
    sector_hamiltonian,
    spectrum,
)

__all__ = [
    "DegenerateDeterminant",
    "OracleNonConvergence",
    "algebra_check",
    "arbitrate_displaced_oscillator",
    "check_J_commutes",
    "compare_printed",
    "determinant",
    "juddian",
    "preset",
    "recurrence_matrix",
    "sector_hamiltonian",
    "spectrum",
]
