"""Spin-1 helicity 3-spinors, bivectors, and the second-order wave operators.

The helicity 3-spinors are the explicit weight-basis columns

    chi_+1 = ((1+cos)/2 e^{-i phi},  sin/sqrt2,        (1-cos)/2 e^{+i phi})
    chi_0  = (-sin/sqrt2 e^{-i phi}, cos,              sin/sqrt2 e^{+i phi})
    chi_-1 = ((1-cos)/2 e^{-i phi}, -sin/sqrt2,        (1+cos)/2 e^{+i phi})

normalized to chi^dag chi = 1; the azimuthal phases are integer multiples of
phi, so reduction of phi is harmless here (unlike the half-integer case).

Bivectors are 6-component (chi-block; psi-block) objects with boost weights
(E+p)/m, 1, m/(E+p) arranged per helicity; v-kind states negate the psi
block.  u-kind bivectors are annihilated by the Tucker-Hammer matrix (blocks
E^2 - p^2 - 2m^2 on the diagonal, E^2 - p^2 +- 2E(S.p) + 2(S.p)^2 off it),
which equals the Barut-Muzinich-Williams contraction
gamma^{mu nu} p_mu p_nu + p^mu p_mu - 2m^2 entrywise, and by the on-shell
Weinberg operator.  v-kind bivectors are annihilated by the mass-sign-flipped
operator gamma^{mu nu} p_mu p_nu + m^2 (a computed, frozen regression fact,
not an assumption).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import bmw_gamma, helicity_matrix_one, wigner_theta_one
from .kinematics import Kinematics, parity_flip
from .symmetry import StateBasis, SymmetryRow

ONE_HELICITIES = (1, 0, -1)
KINDS = ("u", "v")

_SQ2 = np.sqrt(2.0)
_I3 = np.eye(3, dtype=complex)
_I6 = np.eye(6, dtype=complex)
_G00 = bmw_gamma(0, 0)
_BMW_TABLE = {(mu, nu): bmw_gamma(mu, nu) for mu in range(4) for nu in range(4)}


def state_label(kind: str, helicity: int) -> str:
    return f"{kind}_{helicity:+d}" if helicity else f"{kind}_0"


@dataclass(frozen=True)
class ThreeSpinor:
    """Helicity eigenvector of S.p-hat: S.p-hat chi_h = h chi_h, chi^dag chi = 1."""

    entries: np.ndarray
    helicity: int


@dataclass(frozen=True)
class Bivector:
    """6-component (chi-block; psi-block) plane-wave state."""

    entries: np.ndarray
    kind: str
    helicity: int
    kin: Kinematics

    @property
    def chi_block(self) -> np.ndarray:
        return self.entries[:3]

    @property
    def psi_block(self) -> np.ndarray:
        return self.entries[3:]


def three_spinor(helicity: int, kin: Kinematics) -> ThreeSpinor:
    if helicity not in ONE_HELICITIES:
        raise ValueError(f"helicity must be +1, 0 or -1, got {helicity}")
    c, s = np.cos(kin.theta), np.sin(kin.theta)
    em, ep = np.exp(-1j * kin.phi), np.exp(1j * kin.phi)
    if helicity == 1:
        entries = np.array([(1 + c) / 2 * em, s / _SQ2, (1 - c) / 2 * ep])
    elif helicity == 0:
        entries = np.array([-s / _SQ2 * em, c, s / _SQ2 * ep])
    else:
        entries = np.array([(1 - c) / 2 * em, -s / _SQ2, (1 + c) / 2 * ep])
    return ThreeSpinor(entries=entries, helicity=helicity)


def bivector(kind: str, helicity: int, kin: Kinematics) -> Bivector:
    if kind not in KINDS:
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    chi = three_spinor(helicity, kin).entries
    boost = (kin.energy + kin.pmag) / kin.mass
    upper_w, lower_w = {1: (boost, 1.0 / boost), 0: (1.0, 1.0),
                        -1: (1.0 / boost, boost)}[helicity]
    upper, lower = upper_w * chi, lower_w * chi
    if kind == "v":
        lower = -lower
    return Bivector(entries=np.concatenate([upper, lower]) / _SQ2,
                    kind=kind, helicity=helicity, kin=kin)


def bar_norm_one(b: Bivector) -> float:
    """psi^dag gamma^{00} psi; +1 for u-kind, -1 for v-kind."""
    return float(np.real(b.entries.conj() @ _G00 @ b.entries))


def tucker_hammer_matrix(kin: Kinematics) -> np.ndarray:
    """Second-order 6x6 operator annihilating the u-kind bivectors.

    Blocks: diag E^2 - p^2 - 2m^2; off-diagonal E^2 - p^2 +- 2E(S.p) + 2(S.p)^2.
    """
    E, p, m = kin.energy, kin.pmag, kin.mass
    sp = p * helicity_matrix_one(kin)
    ksq = E * E - p * p
    diag = (ksq - 2 * m * m) * _I3
    upper = ksq * _I3 + 2 * E * sp + 2 * (sp @ sp)
    lower = ksq * _I3 - 2 * E * sp + 2 * (sp @ sp)
    return np.block([[diag, upper], [lower, diag]])


def bmw_momentum_form(kin: Kinematics) -> np.ndarray:
    """gamma^{mu nu} p_mu p_nu contracted with p_mu = (E, -p)."""
    p_lower = np.concatenate([[kin.energy], -kin.momentum()])
    out = np.zeros((6, 6), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            out += p_lower[mu] * p_lower[nu] * _BMW_TABLE[(mu, nu)]
    return out


def tucker_hammer_from_bmw(kin: Kinematics) -> np.ndarray:
    """gamma^{mu nu} p_mu p_nu + p^mu p_mu - 2m^2, assembled independently."""
    psq = kin.energy ** 2 - kin.pmag ** 2
    return bmw_momentum_form(kin) + (psq - 2 * kin.mass ** 2) * _I6


def weinberg_matrix(kin: Kinematics) -> np.ndarray:
    """On-shell operator: the Tucker-Hammer blocks with E^2 - p^2 -> m^2."""
    E, p, m = kin.energy, kin.pmag, kin.mass
    sp = p * helicity_matrix_one(kin)
    msq = m * m
    diag = -msq * _I3
    upper = msq * _I3 + 2 * E * sp + 2 * (sp @ sp)
    lower = msq * _I3 - 2 * E * sp + 2 * (sp @ sp)
    return np.block([[diag, upper], [lower, diag]])


def v_mode_operator(kin: Kinematics) -> np.ndarray:
    """gamma^{mu nu} p_mu p_nu + m^2: annihilates the v-kind bivectors."""
    return bmw_momentum_form(kin) + kin.mass ** 2 * _I6


def _build_charge_conj_one() -> np.ndarray:
    th = wigner_theta_one()
    z = np.zeros((3, 3), dtype=complex)
    return np.block([[z, th], [-th, z]])


_CMAT1 = _build_charge_conj_one()


def charge_conj_matrix_one() -> np.ndarray:
    """Linear part of C = e^{i alpha} [[0, Theta],[-Theta, 0]] K for spin 1."""
    return _CMAT1.copy()


def apply_parity_one(b: Bivector) -> np.ndarray:
    """gamma^{00} b; feed a bivector built at parity_flip(kin) to read the table."""
    return _G00 @ b.entries


def apply_charge_conj_one(b: Bivector, alpha: float = 0.0) -> np.ndarray:
    """e^{i alpha} block-Theta times the conjugated entries (antiunitary)."""
    return np.exp(1j * alpha) * (_CMAT1 @ b.entries.conj())


def _apply_op_one(op: str, b: Bivector, alpha: float) -> np.ndarray:
    if op == "P":
        return apply_parity_one(b)
    if op == "C":
        return apply_charge_conj_one(b, alpha)
    if op == "CP":
        return np.exp(1j * alpha) * (_CMAT1 @ (_G00 @ b.entries).conj())
    if op == "PC":
        return _G00 @ (np.exp(1j * alpha) * (_CMAT1 @ b.entries.conj()))
    raise ValueError(f"unknown operation {op!r}")


# Signs of the table: phase = sign for P rows, sign * e^{i alpha} otherwise.
# P preserves the kind and flips helicity (uniform -1 on u, +1 on v: integer
# spin, no +-i); C and CP flip the kind, C flips helicity, CP preserves it.
_EXPECTED_ONE = {
    ("P", "u", 1): ("u", -1, -1), ("P", "u", 0): ("u", 0, -1), ("P", "u", -1): ("u", 1, -1),
    ("P", "v", 1): ("v", -1, 1), ("P", "v", 0): ("v", 0, 1), ("P", "v", -1): ("v", 1, 1),
    ("C", "u", 1): ("v", -1, 1), ("C", "u", 0): ("v", 0, -1), ("C", "u", -1): ("v", 1, 1),
    ("C", "v", 1): ("u", -1, -1), ("C", "v", 0): ("u", 0, 1), ("C", "v", -1): ("u", 1, -1),
    ("CP", "u", 1): ("v", 1, -1), ("CP", "u", 0): ("v", 0, 1), ("CP", "u", -1): ("v", -1, -1),
    ("CP", "v", 1): ("u", 1, -1), ("CP", "v", 0): ("u", 0, 1), ("CP", "v", -1): ("u", -1, -1),
    ("PC", "u", 1): ("v", 1, 1), ("PC", "u", 0): ("v", 0, -1), ("PC", "u", -1): ("v", -1, 1),
    ("PC", "v", 1): ("u", 1, 1), ("PC", "v", 0): ("u", 0, -1), ("PC", "v", -1): ("u", -1, 1),
}


def expected_table_one() -> dict:
    """The asserted (out-state, sign) per (op, kind, helicity); C-containing
    ops carry an extra e^{i alpha}."""
    return dict(_EXPECTED_ONE)


def symmetry_table_one(kin: Kinematics, alpha: float = 0.0) -> list[SymmetryRow]:
    """Full {P, C, CP, PC} x {u, v} x {+1, 0, -1} action table at kin.

    Same protocol as the spin-1/2 table; phases snap to {+-1} for P rows and
    {+-e^{i alpha}} for the C-containing rows, and the full expected table
    (CP = -PC on every state) is asserted.
    """
    flipped = parity_flip(kin)
    at_kin = {(k, h): bivector(k, h, kin) for k in KINDS for h in ONE_HELICITIES}
    at_flip = {(k, h): bivector(k, h, flipped) for k in KINDS for h in ONE_HELICITIES}
    basis = StateBasis({state_label(k, h): b.entries for (k, h), b in at_kin.items()})
    ph_c = np.exp(1j * alpha)
    rows = []
    for op in ("P", "C", "CP", "PC"):
        sources = at_kin if op == "C" else at_flip
        allowed = (np.array([1, -1], dtype=complex) if op == "P"
                   else np.array([ph_c, -ph_c], dtype=complex))
        for kind in KINDS:
            for h in ONE_HELICITIES:
                t = _apply_op_one(op, sources[(kind, h)], alpha)
                label, phase, err = basis.identify(t, allowed)
                exp_kind, exp_h, sign = _EXPECTED_ONE[(op, kind, h)]
                exp_phase = sign if op == "P" else sign * ph_c
                expected_label = state_label(exp_kind, exp_h)
                if label != expected_label or abs(phase - exp_phase) > 1e-9:
                    raise AssertionError(
                        f"{op} {state_label(kind, h)}: got {label} phase {phase}, "
                        f"expected {expected_label} phase {exp_phase}"
                    )
                rows.append(SymmetryRow(operation=op,
                                        in_state=state_label(kind, h),
                                        out_state=label, phase=phase,
                                        snap_error=err))
    return rows


def anticommutator_residual_one(kin: Kinematics, alpha: float = 0.0) -> float:
    """Max over the 12 constructed states of || CP(b) + PC(b) ||."""
    worst = 0.0
    for base in (kin, parity_flip(kin)):
        for kind in KINDS:
            for h in ONE_HELICITIES:
                b = bivector(kind, h, base)
                worst = max(worst, float(np.linalg.norm(
                    _apply_op_one("CP", b, alpha) + _apply_op_one("PC", b, alpha))))
    return worst
