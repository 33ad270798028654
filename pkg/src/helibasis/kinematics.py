"""On-shell momentum parametrization shared by every solution constructor.

Natural units (c = hbar = 1) and metric signature (+,-,-,-) throughout the
package.  A kinematics point is (m, |p|, theta, phi) with the energy derived
on-shell, E = sqrt(m^2 + |p|^2).

The azimuth phi is stored UNREDUCED.  Half-integer phases e^{+-i phi/2} are
double-valued under phi -> phi + 2 pi, and the parity phase relations only
come out right when the flipped azimuth phi + pi is fed literally into the
2-spinor constructors.  Reducing mod 2 pi would silently flip spinor signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class Kinematics:
    """Immutable on-shell momentum point; freely shareable across threads."""

    mass: float
    pmag: float
    theta: float
    phi: float
    energy: float

    def unit_momentum(self) -> np.ndarray:
        """Cartesian p-hat from the angles.

        Defined from (theta, phi) even at pmag = 0, so the rest-frame
        convention p-hat = (0, 0, 1) holds at theta = 0 and helicity
        operators stay well-defined for every kinematics point.
        """
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    def momentum(self) -> np.ndarray:
        """Cartesian 3-momentum vector."""
        return self.pmag * self.unit_momentum()


def make_kinematics(mass: float, pmag: float, theta: float, phi: float) -> Kinematics:
    """Build an on-shell Kinematics with E = sqrt(mass^2 + pmag^2).

    mass must be strictly positive: the boost weights sqrt((E+p)/m) and
    (E+p)/m used by the spinor constructors are singular at m = 0, so the
    massless limit is rejected rather than special-cased.
    """
    if not mass > 0.0:
        raise ValueError(f"mass must be > 0, got {mass}")
    if pmag < 0.0:
        raise ValueError(f"pmag must be >= 0, got {pmag}")
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    energy = math.sqrt(mass * mass + pmag * pmag)
    return Kinematics(mass=float(mass), pmag=float(pmag), theta=float(theta),
                      phi=float(phi), energy=energy)


def parity_flip(kin: Kinematics) -> Kinematics:
    """Space inversion p -> -p as the angle map theta -> pi - theta, phi -> phi + pi.

    phi + pi is NOT reduced mod 2 pi (see module docstring).  mass, pmag and
    energy are unchanged; unit_momentum flips sign exactly.
    """
    return replace(kin, theta=math.pi - kin.theta, phi=kin.phi + math.pi)
