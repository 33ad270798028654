"""Shared machinery for assembling discrete-symmetry action tables.

A table row records that applying `operation` to the state labelled
`in_state` produced `phase` times the basis state labelled `out_state`,
together with the residual left after snapping the phase to the nearest
member of the allowed phase set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SymmetryRow:
    operation: str
    in_state: str
    out_state: str
    phase: complex
    snap_error: float

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "in_state": self.in_state,
            "out_state": self.out_state,
            "phase_re": float(self.phase.real),
            "phase_im": float(self.phase.imag),
            "snap_error": float(self.snap_error),
        }


class StateBasis:
    """A labelled set of candidate states to match transformed vectors against."""

    def __init__(self, candidates: dict[str, np.ndarray]):
        self.labels = list(candidates)
        self.stack = np.column_stack([candidates[k] for k in self.labels])
        self.norms_sq = np.real(np.sum(self.stack.conj() * self.stack, axis=0))

    def identify(self, transformed: np.ndarray, allowed_phases: np.ndarray,
                 tol: float = 1e-8) -> tuple[str, complex, float]:
        """Match transformed against phase * candidate with the phase snapped.

        Returns (label, snapped_phase, snap_error) for the best candidate,
        snap_error = || transformed - snapped_phase * candidate ||.  Raises if
        nothing matches to within tol (an implementation bug, not physics).
        """
        raw = (self.stack.conj().T @ transformed) / self.norms_sq
        snapped = allowed_phases[np.argmin(
            np.abs(allowed_phases[None, :] - raw[:, None]), axis=1)]
        diff = transformed[:, None] - self.stack * snapped[None, :]
        errs = np.sqrt(np.real(np.sum(diff.conj() * diff, axis=0)))
        j = int(np.argmin(errs))
        scale = max(1.0, math.sqrt(float(np.real(np.vdot(transformed, transformed)))))
        if errs[j] > tol * scale:
            raise ValueError(
                f"no match: transformed state is not proportional to any basis state "
                f"(best candidate {self.labels[j]}, residual {errs[j]:.3e})"
            )
        return self.labels[j], complex(snapped[j]), float(errs[j])


def identify_state(transformed: np.ndarray,
                   candidates: dict[str, np.ndarray],
                   allowed_phases: np.ndarray,
                   tol: float = 1e-8) -> tuple[str, complex, float]:
    """One-shot wrapper around StateBasis.identify."""
    return StateBasis(candidates).identify(transformed, allowed_phases, tol)
