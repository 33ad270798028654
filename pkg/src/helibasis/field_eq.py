"""Bivector <-> field-strength <-> potential equivalence chain, momentum space.

A plane-wave bivector (chi-block; psi-block) is read as the complex field
combinations chi = E + iB, psi = E - iB of an electromagnetic-like massive
field.  For the plane-wave convention e^{-i p.x} (so d_t -> -iE, grad -> +ip)
the first-order system

    (E + S.p) psi = m xi              p (p.psi) = m p phi
    (E - S.p) xi - p phi = m psi
    (E - S.p) chi = m xi              p (p.chi) = m p phi
    (E + S.p) xi - p phi = m chi

holds exactly for u-kind bivectors, with xi = i m A and phi = i m phi_pot
defining the 4-potential A^mu = (phi_pot, A).  The chi-branch equations are
the complex conjugates of the psi-branch ones; written in terms of the
original (purely imaginary) xi and phi the conjugation flips no signs beyond
what is shown above.  From A^mu the field strength
F^{mu nu} = -i (p^mu A^nu - p^nu A^mu) reproduces E^i = F^{i0} and
B^i = -(1/2) eps^{ijk} F^{jk}, and -i p_mu F^{mu nu} + m^2 A^nu = 0 holds
(its residual is exactly |p^nu| |p_mu A^mu|, and the Lorenz contraction
p_mu A^mu vanishes for every helicity mode).

All vectors here are CARTESIAN; the weight-basis bivector blocks are mapped
through the unitary spherical transform on entry.  In the Cartesian basis the
spin matrices act as (S.p) v = +i p x v.

v-kind bivectors satisfy the mass-sign-flipped branch instead; their
residuals are reported, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import cartesian_from_spherical, spherical_from_cartesian
from .kinematics import Kinematics
from .spin_one import Bivector


@dataclass(frozen=True)
class FieldSet:
    """Cartesian field data extracted from one plane-wave bivector mode."""

    e_field: np.ndarray
    b_field: np.ndarray
    xi: np.ndarray
    phi_aux: complex
    a_potential: np.ndarray  # (phi_pot, A): xi = i m A, phi_aux = i m phi_pot
    kin: Kinematics


def fields_from_bivector(b: Bivector) -> FieldSet:
    """Extract (E, B), xi, phi and the 4-potential from a bivector.

    E = (chi + psi)/2 and B = (chi - psi)/(2i) from the two blocks;
    xi = (E_energy + S.p) psi / m; phi = (p.psi)/m.  At pmag = 0 the phi
    equation is vacuous (p (p.psi) = m p phi reads 0 = 0) and phi := 0,
    consistent with the rest-frame limit of the transverse modes.
    """
    kin = b.kin
    chi = cartesian_from_spherical(b.chi_block)
    psi = cartesian_from_spherical(b.psi_block)
    p = kin.momentum()
    e_field = (chi + psi) / 2.0
    b_field = (chi - psi) / 2.0j
    xi = (kin.energy * psi + 1j * np.cross(p, psi)) / kin.mass
    phi_aux = (p @ psi) / kin.mass if kin.pmag > 0 else 0.0j
    a_potential = np.concatenate([[phi_aux], xi]) / (1j * kin.mass)
    return FieldSet(e_field=e_field, b_field=b_field, xi=xi,
                    phi_aux=complex(phi_aux), a_potential=a_potential, kin=kin)


def block_reconstruction_residual(f: FieldSet, b: Bivector) -> float:
    """Round trip: max deviation of E +- iB (back in the weight basis) from
    the source chi/psi blocks."""
    chi_w = spherical_from_cartesian(f.e_field + 1j * f.b_field)
    psi_w = spherical_from_cartesian(f.e_field - 1j * f.b_field)
    return float(max(np.max(np.abs(chi_w - b.chi_block)),
                     np.max(np.abs(psi_w - b.psi_block))))


def first_order_residuals(f: FieldSet, b: Bivector) -> tuple[float, float, float, float]:
    """Norms of the four first-order equations (module docstring), in order:

        r1 = || (E - S.p) xi  - p phi - m psi ||
        r2 = || (E - S.p) chi - m xi ||
        r3 = || p (p.chi) - m p phi ||
        r4 = || (E + S.p) xi  - p phi - m chi ||

    All four vanish for u-kind bivectors; v-kind values are diagnostics.
    """
    kin = f.kin
    m, energy = kin.mass, kin.energy
    p = kin.momentum()
    chi = cartesian_from_spherical(b.chi_block)
    psi = cartesian_from_spherical(b.psi_block)
    xi, phi = f.xi, f.phi_aux
    r1 = np.linalg.norm(energy * xi - 1j * np.cross(p, xi) - p * phi - m * psi)
    r2 = np.linalg.norm(energy * chi - 1j * np.cross(p, chi) - m * xi)
    r3 = np.linalg.norm(p * (p @ chi) - m * p * phi)
    r4 = np.linalg.norm(energy * xi + 1j * np.cross(p, xi) - p * phi - m * chi)
    return (float(r1), float(r2), float(r3), float(r4))


def field_strength(f: FieldSet) -> np.ndarray:
    """F^{mu nu} = -i (p^mu A^nu - p^nu A^mu) for the plane-wave mode."""
    p_upper = np.concatenate([[f.kin.energy], f.kin.momentum()])
    return -1j * (np.outer(p_upper, f.a_potential) - np.outer(f.a_potential, p_upper))


def lorenz_residual(f: FieldSet) -> float:
    """| p_mu A^mu |; zero for every helicity mode of either kind."""
    p_lower = np.concatenate([[f.kin.energy], -f.kin.momentum()])
    return float(abs(p_lower @ f.a_potential))


def proca_residuals(f: FieldSet) -> tuple[float, float]:
    """(residual_first, residual_second) of the two field equations.

    residual_second: max deviation of F's electric and magnetic components
    (E^i = F^{i0}, B^i = -(1/2) eps^{ijk} F^{jk}) from the FieldSet's (E, B).
    residual_first: max over nu of | -i p_mu F^{mu nu} + m^2 A^nu |.
    """
    F = field_strength(f)
    e_from_f = F[1:, 0]
    b_from_f = np.array([-(F[2, 3] - F[3, 2]) / 2.0,
                         -(F[3, 1] - F[1, 3]) / 2.0,
                         -(F[1, 2] - F[2, 1]) / 2.0])
    residual_second = float(max(np.max(np.abs(e_from_f - f.e_field)),
                                np.max(np.abs(b_from_f - f.b_field))))
    p_lower = np.concatenate([[f.kin.energy], -f.kin.momentum()])
    msq = f.kin.mass ** 2
    residual_first = float(max(
        abs(-1j * (p_lower @ F[:, nu]) + msq * f.a_potential[nu]) for nu in range(4)
    ))
    return residual_first, residual_second
