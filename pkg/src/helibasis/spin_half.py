"""Helicity-basis spin-1/2 plane-wave spinors and their discrete symmetries.

Constructs the helicity 2-spinors

    phi_up = (cos(theta/2) e^{-i phi/2},  sin(theta/2) e^{+i phi/2})
    phi_dn = (sin(theta/2) e^{-i phi/2}, -cos(theta/2) e^{+i phi/2})

(evaluated with the UNREDUCED azimuth), the u/v 4-spinors built from them with
boost weights sqrt((E+p)/m) and sqrt(m/(E+p)), the S3-eigenspinor (parity
basis) reference solutions, the closed-form basis-change data, and the P, C,
CP, PC action tables.

Normalization is to the unit bar norm: u-bar u = +1, v-bar v = -1 with
psi-bar psi = psi^dag gamma^0 psi.

On the basis-change data: the closed-form mixing matrices A, B are assembled
from the quaternion components a^mu (a^0 imaginary, a^{1,2,3} real) and the
four boost scalars a_{++}, a_{+-}, a_{-+}, a_{--}.  Neither A nor B is
unitary at p > 0.  Numerically they satisfy the indefinite (bar-metric)
identity A^dag A - B^dag B = 1; the strict sum identity A^dag A + B^dag B = 1
does not hold for these closed forms and is reported rather than assumed.
The expansion coefficients actually realized by the solution bases are
produced by an independent linear solve; both solution bases span the same
eigenspaces of gamma^mu p_mu, so the solved v-mixing blocks vanish and the
assembled 4x4 block transformation U is unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    dirac_gamma,
    helicity_matrix_half,
    pauli,
    wigner_theta_half,
)
from .kinematics import Kinematics, parity_flip
from .symmetry import StateBasis, SymmetryRow

HALF_HELICITIES = (0.5, -0.5)
KINDS = ("u", "v")

_SQ2 = np.sqrt(2.0)
_GAMMA = tuple(dirac_gamma(mu) for mu in range(4))
_I4 = np.eye(4, dtype=complex)


def state_label(kind: str, helicity: float) -> str:
    return f"{kind}_{'up' if helicity > 0 else 'down'}"


@dataclass(frozen=True)
class TwoSpinor:
    """Helicity eigenspinor of sigma.p-hat with eigenvalue 2*helicity."""

    entries: np.ndarray
    helicity: float


@dataclass(frozen=True)
class FourSpinor:
    """Plane-wave Dirac solution: (gamma^mu p_mu -+ m) entries = 0 for u/v."""

    entries: np.ndarray
    kind: str
    helicity: float
    kin: Kinematics


@dataclass(frozen=True)
class BasisChange:
    """Closed-form basis-change data plus the solved block transformation.

    a0..a3 and app..amm are the closed-form ingredients; A and B the
    closed-form mixing matrices.  oracle_a/b/c/d are the coefficients obtained
    by solving the exact linear system expressing the parity-basis solutions
    in the helicity-basis ones, and U is the 4x4 block map assembled from
    them (helicity coordinates -> parity-basis expansion).
    """

    a0: complex
    a1: float
    a2: float
    a3: float
    app: float
    apm: float
    amp: float
    amm: float
    A: np.ndarray
    B: np.ndarray
    U: np.ndarray
    oracle_a: np.ndarray
    oracle_b: np.ndarray
    oracle_c: np.ndarray
    oracle_d: np.ndarray


def two_spinor(helicity: float, kin: Kinematics) -> TwoSpinor:
    """Helicity 2-eigenspinor for eigenvalue +-1/2 of (1/2) sigma.p-hat."""
    if helicity not in HALF_HELICITIES:
        raise ValueError(f"helicity must be +-1/2, got {helicity}")
    t2 = kin.theta / 2.0
    em = np.exp(-0.5j * kin.phi)  # unreduced phi: e^{i phi/2} is double-valued
    ep = np.exp(+0.5j * kin.phi)
    if helicity > 0:
        entries = np.array([np.cos(t2) * em, np.sin(t2) * ep])
    else:
        entries = np.array([np.sin(t2) * em, -np.cos(t2) * ep])
    return TwoSpinor(entries=entries, helicity=helicity)


def _boost_weights(kin: Kinematics) -> tuple[float, float]:
    # sqrt((E+p)/m) and sqrt(m/(E+p)); the latter equals sqrt((E-p)/m) on shell
    # but avoids the E - p cancellation at large p.
    wp = np.sqrt((kin.energy + kin.pmag) / kin.mass)
    wm = np.sqrt(kin.mass / (kin.energy + kin.pmag))
    return wp, wm


def four_spinor(kind: str, helicity: float, kin: Kinematics) -> FourSpinor:
    """Helicity-basis u/v 4-spinor with bar norm +1 (u) or -1 (v).

    u_up = (1/sqrt2)(sqrt((E+p)/m) phi_up ; sqrt(m/(E+p)) phi_up) and the
    helicity-down states carry the weights in the opposite order; v states
    negate the lower block.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    wp, wm = _boost_weights(kin)
    phi = two_spinor(helicity, kin).entries
    upper, lower = (wp * phi, wm * phi) if helicity > 0 else (wm * phi, wp * phi)
    if kind == "v":
        lower = -lower
    return FourSpinor(entries=np.concatenate([upper, lower]) / _SQ2,
                      kind=kind, helicity=helicity, kin=kin)


def gamma_dot_p(kin: Kinematics) -> np.ndarray:
    """gamma^mu p_mu with p_mu = (E, -p); blocks [[0, E+sigma.p],[E-sigma.p, 0]]."""
    p = kin.momentum()
    return (kin.energy * _GAMMA[0] - p[0] * _GAMMA[1]
            - p[1] * _GAMMA[2] - p[2] * _GAMMA[3])


def bar_norm(s: FourSpinor) -> float:
    """Lorentz-invariant norm psi^dag gamma^0 psi (real for these states)."""
    return float(np.real(s.entries.conj() @ _GAMMA[0] @ s.entries))


def dirac_residual(s: FourSpinor) -> float:
    """|| (gamma^mu p_mu - m) s || for u-kind, || (gamma^mu p_mu + m) s || for v-kind."""
    sign = -1.0 if s.kind == "u" else 1.0
    op = gamma_dot_p(s.kin) + sign * s.kin.mass * _I4
    return float(np.linalg.norm(op @ s.entries))


def parity_basis_spinor(kind: str, sigma: float, kin: Kinematics) -> FourSpinor:
    """S3-eigenspinor Dirac solution boosted from rest.

    Rest spinors xi_+ = (1,0), xi_- = (0,1); left/right boost factors
    (E + m +- sigma.p) / sqrt(2m(E+m)) acting on the two blocks of the rest
    solution (xi; +-xi)/sqrt2.  Bar norm +-1, Dirac residual 0.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    if sigma not in HALF_HELICITIES:
        raise ValueError(f"sigma must be +-1/2, got {sigma}")
    xi = np.array([1, 0], dtype=complex) if sigma > 0 else np.array([0, 1], dtype=complex)
    sp = kin.pmag * helicity_matrix_half(kin)
    em = (kin.energy + kin.mass) * np.eye(2, dtype=complex)
    norm = 1.0 / (2.0 * np.sqrt(kin.mass * (kin.energy + kin.mass)))
    upper = (em + sp) @ xi
    lower = (em - sp) @ xi
    if kind == "v":
        lower = -lower
    return FourSpinor(entries=norm * np.concatenate([upper, lower]),
                      kind=kind, helicity=sigma, kin=kin)


def _helicity_columns(kin: Kinematics) -> np.ndarray:
    return np.column_stack([four_spinor(k, h, kin).entries
                            for k in KINDS for h in HALF_HELICITIES])


def _parity_columns(kin: Kinematics) -> np.ndarray:
    return np.column_stack([parity_basis_spinor(k, s, kin).entries
                            for k in KINDS for s in HALF_HELICITIES])


def _solve_expansion(kin: Kinematics) -> np.ndarray:
    """Coordinates of the parity-basis columns in the helicity-basis columns.

    The helicity spinors span C^4 for m > 0, so the system is always regular.
    """
    hel = _helicity_columns(kin)
    par = _parity_columns(kin)
    cond = np.linalg.cond(hel)
    assert np.isfinite(cond), "helicity spinor matrix is singular"
    return np.linalg.solve(hel, par)


def basis_change(kin: Kinematics) -> BasisChange:
    """Closed-form a^mu, a_{+-+-}, A, B plus the solved block transformation U.

    sigma_mu a^mu is read as a^0 1 + a^k sigma_k.  A, B come from

        A = (a_{++} + a_{+-})(sigma_mu a^mu) + (-a_{-+} + a_{--})(sigma_mu a^mu) sigma_3
        B = (-a_{++} + a_{+-})(sigma_mu a^mu) + (a_{-+} + a_{--})(sigma_mu a^mu) sigma_3

    U is assembled from the independently solved expansion coefficients (see
    module docstring) and is unitary.
    """
    E, m, p = kin.energy, kin.mass, kin.pmag
    t2, p2 = kin.theta / 2.0, kin.phi / 2.0
    a0 = -1j * np.cos(t2) * np.sin(p2)
    a1 = np.sin(t2) * np.cos(p2)
    a2 = np.sin(t2) * np.sin(p2)
    a3 = np.cos(t2) * np.cos(p2)
    den = 2.0 * np.sqrt(2.0) * m
    app = np.sqrt((E + m) * (E + p)) / den
    apm = np.sqrt((E + m) * (E - p)) / den
    amp = np.sqrt((E - m) * (E + p)) / den
    amm = np.sqrt((E - m) * (E - p)) / den
    sigma_a = a0 * np.eye(2) + a1 * pauli(1) + a2 * pauli(2) + a3 * pauli(3)
    s3 = pauli(3)
    A = (app + apm) * sigma_a + (-amp + amm) * (sigma_a @ s3)
    B = (-app + apm) * sigma_a + (amp + amm) * (sigma_a @ s3)

    coeff = _solve_expansion(kin)
    # column j of coeff holds the helicity coordinates of parity column j,
    # ordered (u_up, u_down, v_up, v_down); transpose into row-indexed blocks.
    oracle_a = coeff[0:2, 0:2].T.copy()
    oracle_b = coeff[2:4, 0:2].T.copy()
    oracle_c = coeff[0:2, 2:4].T.copy()
    oracle_d = coeff[2:4, 2:4].T.copy()
    U = np.block([[oracle_a, oracle_b], [oracle_c, oracle_d]])
    return BasisChange(a0=complex(a0), a1=float(a1), a2=float(a2), a3=float(a3),
                       app=float(app), apm=float(apm), amp=float(amp), amm=float(amm),
                       A=A, B=B, U=U,
                       oracle_a=oracle_a, oracle_b=oracle_b,
                       oracle_c=oracle_c, oracle_d=oracle_d)


def _row_aligned_distance(solved: np.ndarray, closed: np.ndarray) -> float:
    """Max over rows of || solved_row - e^{i delta} closed_row ||, delta optimal."""
    worst = 0.0
    for r_s, r_c in zip(solved, closed):
        z = np.sum(r_s * r_c.conj())
        phase = z / abs(z) if abs(z) > 0 else 1.0
        worst = max(worst, float(np.linalg.norm(r_s - phase * r_c)))
    return worst


@dataclass(frozen=True)
class ExpansionReport:
    """Reconstruction quality of the oracle expansion and the closed-form gap."""

    reconstruction_error: float
    aligned_distance_a: float
    aligned_distance_b: float
    basis: BasisChange


def expansion_residual(kin: Kinematics) -> float:
    """Max error reconstructing the parity-basis columns from the solved expansion."""
    hel = _helicity_columns(kin)
    par = _parity_columns(kin)
    coeff = np.linalg.solve(hel, par)
    return float(np.max(np.abs(hel @ coeff - par)))


def expansion_report(kin: Kinematics) -> ExpansionReport:
    """expansion_residual plus the row-phase-aligned oracle vs closed-form gap."""
    bc = basis_change(kin)
    return ExpansionReport(
        reconstruction_error=expansion_residual(kin),
        aligned_distance_a=_row_aligned_distance(bc.oracle_a, bc.A),
        aligned_distance_b=_row_aligned_distance(bc.oracle_b, bc.B),
        basis=bc,
    )


def _build_charge_conj() -> np.ndarray:
    th = wigner_theta_half()
    z = np.zeros((2, 2), dtype=complex)
    return np.block([[z, th], [-th, z]])


_CMAT = _build_charge_conj()


def charge_conj_matrix() -> np.ndarray:
    """Linear part of C = [[0, Theta],[-Theta, 0]] K (K = complex conjugation)."""
    return _CMAT.copy()


def apply_parity(s: FourSpinor) -> np.ndarray:
    """gamma^0 s; feed a spinor built at parity_flip(kin) to read the table."""
    return _GAMMA[0] @ s.entries


def apply_charge_conj(s: FourSpinor) -> np.ndarray:
    """Antiunitary charge conjugation: block-Theta times the conjugated entries."""
    return _CMAT @ s.entries.conj()


def _apply_op(op: str, s: FourSpinor) -> np.ndarray:
    if op == "P":
        return apply_parity(s)
    if op == "C":
        return apply_charge_conj(s)
    if op == "CP":
        return _CMAT @ (_GAMMA[0] @ s.entries).conj()
    if op == "PC":
        return _GAMMA[0] @ (_CMAT @ s.entries.conj())
    raise ValueError(f"unknown operation {op!r}")


SNAP_PHASES_HALF = np.array([1, -1, 1j, -1j], dtype=complex)

# (out-kind map, phase) for each op and in-state; P flips helicity, C flips kind.
_EXPECTED_HALF = {
    ("P", "u", 0.5): ("u", -0.5, -1j), ("P", "u", -0.5): ("u", 0.5, -1j),
    ("P", "v", 0.5): ("v", -0.5, 1j), ("P", "v", -0.5): ("v", 0.5, 1j),
    ("C", "u", 0.5): ("v", -0.5, -1), ("C", "u", -0.5): ("v", 0.5, 1),
    ("C", "v", 0.5): ("u", -0.5, 1), ("C", "v", -0.5): ("u", 0.5, -1),
    ("CP", "u", 0.5): ("v", 0.5, 1j), ("CP", "u", -0.5): ("v", -0.5, -1j),
    ("CP", "v", 0.5): ("u", 0.5, 1j), ("CP", "v", -0.5): ("u", -0.5, -1j),
    ("PC", "u", 0.5): ("v", 0.5, -1j), ("PC", "u", -0.5): ("v", -0.5, 1j),
    ("PC", "v", 0.5): ("u", 0.5, -1j), ("PC", "v", -0.5): ("u", -0.5, 1j),
}


def expected_table_half() -> dict:
    """The asserted (out-state, phase) for every (op, kind, helicity)."""
    return dict(_EXPECTED_HALF)


def symmetry_table_half(kin: Kinematics) -> list[SymmetryRow]:
    """Full {P, C, CP, PC} x {u, v} x {up, down} action table at kin.

    P, CP and PC rows transform states constructed at the parity-flipped
    kinematics; C rows act at kin itself.  Every transformed vector is matched
    against the four basis states at kin with phases snapped to {+-1, +-i},
    and the full expected table (including CP = -PC on every state) is
    asserted.
    """
    flipped = parity_flip(kin)
    at_kin = {(k, h): four_spinor(k, h, kin) for k in KINDS for h in HALF_HELICITIES}
    at_flip = {(k, h): four_spinor(k, h, flipped) for k in KINDS for h in HALF_HELICITIES}
    basis = StateBasis({state_label(k, h): s.entries for (k, h), s in at_kin.items()})
    rows = []
    for op in ("P", "C", "CP", "PC"):
        sources = at_kin if op == "C" else at_flip
        for kind in KINDS:
            for h in HALF_HELICITIES:
                t = _apply_op(op, sources[(kind, h)])
                label, phase, err = basis.identify(t, SNAP_PHASES_HALF)
                exp_kind, exp_h, exp_phase = _EXPECTED_HALF[(op, kind, h)]
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


def anticommutator_residual(kin: Kinematics) -> float:
    """Max over the 8 constructed states of || CP(s) + PC(s) ||."""
    worst = 0.0
    for base in (kin, parity_flip(kin)):
        for kind in KINDS:
            for h in HALF_HELICITIES:
                s = four_spinor(kind, h, base)
                worst = max(worst, float(np.linalg.norm(
                    _apply_op("CP", s) + _apply_op("PC", s))))
    return worst
