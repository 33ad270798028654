"""Fixed matrices of the theory and small helpers on dense complex arrays.

Pauli matrices, spin-1 generators in the S3 weight basis, Dirac gammas in the
spinorial (Weyl) representation, the 6x6 Barut-Muzinich-Williams gammas, the
Wigner time-reversal blocks, and helicity operators sigma.p-hat / S.p-hat.

Conventions fixed here and inherited everywhere else:
  - metric eta = diag(+1,-1,-1,-1), epsilon^{123} = +1;
  - gamma^0 = [[0, 1],[1, 0]] (2x2 blocks), gamma^i = [[0, -sigma_i],[sigma_i, 0]],
    so that gamma^mu p_mu = [[0, E + sigma.p],[E - sigma.p, 0]] with p_mu = (E, -p);
  - spin-1 generators are the standard ladder construction with S3 = diag(1,0,-1),
    the unique choice for which the explicit helicity 3-spinor columns are
    eigenvectors of S.p-hat.

All constructors return fresh arrays; the module-level constants are never
handed out directly, so callers cannot corrupt them.
"""

from __future__ import annotations

import numpy as np

from .kinematics import Kinematics

_I2 = np.eye(2, dtype=complex)
_I3 = np.eye(3, dtype=complex)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_SQ2 = np.sqrt(2.0)
_SPIN1 = (
    np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQ2,
    np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / _SQ2,
    np.diag([1.0, 0.0, -1.0]).astype(complex),
)

# Unitary change of basis from Cartesian components to spherical (weight-basis)
# components, rows = (+1, 0, -1):  a^{+1} = -(a_x - i a_y)/sqrt2, a^0 = a_z,
# a^{-1} = (a_x + i a_y)/sqrt2.  Under it the Cartesian generators
# (S_i)_{jk} = -i eps_{ijk} become the ladder matrices above, and the h = 0
# helicity 3-spinor is exactly the spherical image of p-hat.
SPHERICAL_FROM_CARTESIAN = np.array(
    [[-1 / _SQ2, 1j / _SQ2, 0], [0, 0, 1], [1 / _SQ2, 1j / _SQ2, 0]], dtype=complex
)


def _build_dirac_gamma(mu: int) -> np.ndarray:
    z = np.zeros((2, 2), dtype=complex)
    if mu == 0:
        return np.block([[z, _I2], [_I2, z]])
    s = _PAULI[mu - 1]
    return np.block([[z, -s], [s, z]])


def _build_bmw_gamma(mu: int, nu: int) -> np.ndarray:
    z = np.zeros((3, 3), dtype=complex)
    if mu == 0 and nu == 0:
        return np.block([[z, _I3], [_I3, z]])
    if mu == 0 or nu == 0:
        s = _SPIN1[max(mu, nu) - 1]
        return np.block([[z, -s], [s, z]])
    si, sj = _SPIN1[mu - 1], _SPIN1[nu - 1]
    blk = -(mu == nu) * _I3 + si @ sj + sj @ si
    return np.block([[z, blk], [blk, z]])


# All fixed matrices are built once; the public accessors hand out copies so
# callers can never corrupt the constants.
_GAMMA = tuple(_build_dirac_gamma(mu) for mu in range(4))
_BMW = {(mu, nu): _build_bmw_gamma(mu, nu) for mu in range(4) for nu in range(4)}


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i, i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {i}")
    return _PAULI[i - 1].copy()


def spin1(i: int) -> np.ndarray:
    """Spin-1 generator S_i in the weight basis, i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ValueError(f"spin-1 index must be 1, 2 or 3, got {i}")
    return _SPIN1[i - 1].copy()


def dirac_gamma(mu: int) -> np.ndarray:
    """Dirac gamma^mu in the spinorial representation, mu in {0, 1, 2, 3}."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be in 0..3, got {mu}")
    return _GAMMA[mu].copy()


def bmw_gamma(mu: int, nu: int) -> np.ndarray:
    """Barut-Muzinich-Williams gamma^{mu nu} (6x6), symmetric in (mu, nu).

    gamma^{00} = [[0, 1],[1, 0]] in 3x3 blocks,
    gamma^{i0} = gamma^{0i} = [[0, -S_i],[S_i, 0]],
    gamma^{ij} = [[0, -delta_ij + S_i S_j + S_j S_i],[same, 0]].
    """
    if mu not in (0, 1, 2, 3) or nu not in (0, 1, 2, 3):
        raise ValueError(f"BMW indices must be in 0..3, got ({mu}, {nu})")
    return _BMW[(mu, nu)].copy()


def wigner_theta_half() -> np.ndarray:
    """2x2 Wigner block Theta = [[0, -1],[1, 0]]; Theta J Theta^-1 = -J*."""
    return np.array([[0, -1], [1, 0]], dtype=complex)


def wigner_theta_one() -> np.ndarray:
    """3x3 Wigner block for spin 1 in the weight basis."""
    return np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=complex)


def helicity_matrix_half(kin: Kinematics) -> np.ndarray:
    """sigma.p-hat, Hermitian with eigenvalues {+1, -1}."""
    n = kin.unit_momentum()
    return n[0] * _PAULI[0] + n[1] * _PAULI[1] + n[2] * _PAULI[2]


def helicity_matrix_one(kin: Kinematics) -> np.ndarray:
    """S.p-hat in the weight basis, Hermitian with eigenvalues {+1, 0, -1}."""
    n = kin.unit_momentum()
    return n[0] * _SPIN1[0] + n[1] * _SPIN1[1] + n[2] * _SPIN1[2]


def spherical_from_cartesian(v: np.ndarray) -> np.ndarray:
    """Weight-basis components of a complex Cartesian 3-vector."""
    return SPHERICAL_FROM_CARTESIAN @ np.asarray(v, dtype=complex)


def cartesian_from_spherical(v: np.ndarray) -> np.ndarray:
    """Inverse of spherical_from_cartesian (the map is unitary)."""
    return SPHERICAL_FROM_CARTESIAN.conj().T @ np.asarray(v, dtype=complex)
