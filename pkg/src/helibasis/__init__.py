"""Helicity-basis plane-wave solutions for spin 1/2 and spin 1, with
numerically certified discrete-symmetry tables and the first-order system /
Proca / Tucker-Hammer / Weinberg equivalence chain."""

from .algebra import (
    bmw_gamma,
    dirac_gamma,
    helicity_matrix_half,
    helicity_matrix_one,
    pauli,
    spin1,
    wigner_theta_half,
    wigner_theta_one,
)
from .field_eq import (
    FieldSet,
    fields_from_bivector,
    first_order_residuals,
    proca_residuals,
)
from .kinematics import Kinematics, make_kinematics, parity_flip
from .report import SuiteConfig, VerificationReport, run_suite
from .spin_half import (
    BasisChange,
    FourSpinor,
    TwoSpinor,
    apply_charge_conj,
    apply_parity,
    basis_change,
    dirac_residual,
    expansion_residual,
    four_spinor,
    parity_basis_spinor,
    symmetry_table_half,
    two_spinor,
)
from .spin_one import (
    Bivector,
    ThreeSpinor,
    apply_charge_conj_one,
    apply_parity_one,
    bivector,
    symmetry_table_one,
    three_spinor,
    tucker_hammer_matrix,
    weinberg_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Kinematics", "make_kinematics", "parity_flip",
    "pauli", "spin1", "dirac_gamma", "bmw_gamma",
    "wigner_theta_half", "wigner_theta_one",
    "helicity_matrix_half", "helicity_matrix_one",
    "TwoSpinor", "FourSpinor", "BasisChange",
    "two_spinor", "four_spinor", "dirac_residual", "parity_basis_spinor",
    "basis_change", "expansion_residual", "apply_parity", "apply_charge_conj",
    "symmetry_table_half",
    "ThreeSpinor", "Bivector",
    "three_spinor", "bivector", "tucker_hammer_matrix", "weinberg_matrix",
    "apply_parity_one", "apply_charge_conj_one", "symmetry_table_one",
    "FieldSet", "fields_from_bivector", "first_order_residuals", "proca_residuals",
    "SuiteConfig", "VerificationReport", "run_suite",
]
