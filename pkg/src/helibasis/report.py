"""Batch verification suite: seeded sampling, residual checks, JSON reports.

Random kinematics are drawn per sample, in this order, from
numpy.random.default_rng(seed): mass log-uniform over mass_range, pmag
uniform over pmag_range, cos(theta) uniform over [-1, 1], phi uniform over
[0, 2 pi).  A report is therefore reproducible from its config echo alone,
and identical configs give byte-identical canonical JSON (which is why wall
time is kept out of the JSON and shown only in the markdown summary).

Residuals are recorded normalized to the scale on which they live: O(1)
quantities raw, Dirac residuals divided by E, second-order operator and field
chain residuals divided by E^2.  A check passes when its recorded maximum
stays below its gate (tol_linear or tol_quadratic from the config).
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import algebra, field_eq, spin_half, spin_one
from .kinematics import Kinematics, make_kinematics, parity_flip

SCHEMA_VERSION = 1
PACKAGE_VERSION = "0.1.0"

# Reference point used for fixed-kinematics checks and the reported tables:
# m = 1, |p| = 0.75 (the 3-4-5 on-shell point, E = 1.25), generic angles.
REFERENCE_KIN = dict(mass=1.0, pmag=0.75, theta=math.pi / 3, phi=math.pi / 5)


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    samples: int = 1000
    tol_linear: float = 1e-11
    tol_quadratic: float = 1e-10
    mass_range: tuple[float, float] = (0.1, 10.0)
    pmag_range: tuple[float, float] = (0.0, 10.0)
    alpha: float = 0.0

    def to_dict(self) -> dict:
        return {
            "seed": int(self.seed),
            "samples": int(self.samples),
            "tol_linear": float(self.tol_linear),
            "tol_quadratic": float(self.tol_quadratic),
            "mass_range": [float(self.mass_range[0]), float(self.mass_range[1])],
            "pmag_range": [float(self.pmag_range[0]), float(self.pmag_range[1])],
            "alpha": float(self.alpha),
        }

    @staticmethod
    def from_dict(d: dict) -> "SuiteConfig":
        return SuiteConfig(seed=d["seed"], samples=d["samples"],
                           tol_linear=d["tol_linear"], tol_quadratic=d["tol_quadratic"],
                           mass_range=tuple(d["mass_range"]),
                           pmag_range=tuple(d["pmag_range"]), alpha=d["alpha"])


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    samples: int
    max_residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "samples": int(self.samples),
            "max_residual": float(self.max_residual),
            "pass": bool(self.passed),
        }


@dataclass(frozen=True)
class VerificationReport:
    config: SuiteConfig
    checks: list[CheckResult]
    table_half: list
    table_one: list

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "package_version": PACKAGE_VERSION,
            "config": self.config.to_dict(),
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.check_id)],
            "symmetry_tables": {
                "spin_half": [r.to_dict() for r in self.table_half],
                "spin_one": [r.to_dict() for r in self.table_one],
            },
            "all_pass": self.all_pass,
        }


def sample_kinematics(config: SuiteConfig) -> list[Kinematics]:
    rng = np.random.default_rng(config.seed)
    lo_m, hi_m = config.mass_range
    lo_p, hi_p = config.pmag_range
    kins = []
    for _ in range(config.samples):
        mass = math.exp(rng.uniform(math.log(lo_m), math.log(hi_m)))
        pmag = rng.uniform(lo_p, hi_p)
        theta = math.acos(rng.uniform(-1.0, 1.0))
        phi = rng.uniform(0.0, 2.0 * math.pi)
        kins.append(make_kinematics(mass, pmag, theta, phi))
    return kins


# (anchor, gate) per check id; gate "linear"/"quadratic" selects the config
# tolerance.  Anchors name the verified identity; "derived-oracle" marks
# facts established by an in-suite oracle rather than a stated identity.
CHECKS: dict[str, tuple[str, str]] = {
    "kinematics.on_shell": ("E^2 - p^2 = m^2 (relative to E^2)", "linear"),
    "kinematics.unit_momentum_norm": ("|p-hat| = 1", "linear"),
    "kinematics.parity_reverses_momentum": ("theta -> pi - theta, phi -> phi + pi sends p-hat -> -p-hat", "linear"),
    "kinematics.double_flip_involution": ("two parity flips restore p-hat and advance phi by 2 pi", "linear"),
    "algebra.pauli_products": ("sigma_i sigma_j = delta_ij + i eps_ijk sigma_k", "linear"),
    "algebra.su2_half": ("[sigma_i/2, sigma_j/2] = i eps_ijk sigma_k/2", "linear"),
    "algebra.su2_one": ("[S_i, S_j] = i eps_ijk S_k", "linear"),
    "algebra.casimir_one": ("S_1^2 + S_2^2 + S_3^2 = 2", "linear"),
    "algebra.clifford": ("{gamma^mu, gamma^nu} = 2 eta^{mu nu}", "linear"),
    "algebra.bmw_symmetric": ("gamma^{mu nu} = gamma^{nu mu}", "linear"),
    "algebra.wigner_blocks": ("Theta_half^2 = -1, Theta_one^2 = +1", "linear"),
    "algebra.helicity_half_spectrum": ("sigma.p-hat Hermitian with eigenvalues {+1, -1}; derived-oracle", "linear"),
    "algebra.helicity_one_spectrum": ("S.p-hat Hermitian with eigenvalues {+1, 0, -1}; derived-oracle", "linear"),
    "spin_half.two_spinor_norm": ("phi_h^dag phi_h = 1", "linear"),
    "spin_half.two_spinor_eigen": ("sigma.p-hat phi_h = 2h phi_h", "linear"),
    "spin_half.two_spinor_orthogonal": ("phi_up^dag phi_dn = 0", "linear"),
    "spin_half.wigner_action": ("Theta phi_up* = -phi_dn, Theta phi_dn* = +phi_up", "linear"),
    "spin_half.bar_norms": ("u-bar u = +1, v-bar v = -1", "linear"),
    "spin_half.dirac_residual": ("(gamma^mu p_mu -+ m) u/v = 0 (per E)", "linear"),
    "spin_half.bar_orthogonality": ("u-bar_h v_h' = 0; derived-oracle", "linear"),
    "spin_half.parity_basis_solutions": ("boosted S3 eigenspinors: bar norm +-1, Dirac residual 0 (per E)", "linear"),
    "spin_half.coefficient_reality": ("a^0 imaginary, a^{1,2,3} real", "linear"),
    "spin_half.coefficient_product": ("a_{++} a_{--} = a_{+-} a_{-+}", "linear"),
    "spin_half.pseudo_unitarity": ("A^dag A - B^dag B = 1; derived-oracle", "linear"),
    "spin_half.block_transform_unitary": ("U^dag U = 1 for the solved block transformation", "linear"),
    "spin_half.expansion_reconstruction": ("parity-basis columns reconstruct from helicity columns; derived-oracle", "linear"),
    "spin_half.symmetry_table": ("P, C, CP, PC table phases in {+-1, +-i}", "linear"),
    "spin_half.cp_pc_anticommute": ("CP(s) + PC(s) = 0", "linear"),
    "spin_half.double_application": ("P^2 = -1 and C^2 = +1 on every state; derived-oracle", "linear"),
    "spin_half.a_nonunitary_reference": ("closed-form A departs from unitarity by > 1e-6 at m=1, p=0.75", "linear"),
    "spin_half.reference_coefficients": ("a_{++}, a_{+-}, a_{-+}, a_{--} = 0.75, 0.375, 0.25, 0.125 at m=1, p=0.75", "linear"),
    "spin_one.three_spinor_norm": ("chi^dag chi = 1", "linear"),
    "spin_one.three_spinor_eigen": ("S.p-hat chi_h = h chi_h", "linear"),
    "spin_one.orthonormal_triple": ("chi_h^dag chi_h' = delta_hh'", "linear"),
    "spin_one.completeness": ("sum_h chi_h chi_h^dag = 1", "linear"),
    "spin_one.parity_three_spinor": ("chi_h(flipped angles) = -chi_{-h}", "linear"),
    "spin_one.bivector_bar_norm": ("u-bar u = +1, v-bar v = -1 with gamma^{00}", "linear"),
    "spin_one.tucker_hammer_annihilates_u": ("TH u_{1,h} = 0 (per E^2)", "quadratic"),
    "spin_one.th_equals_bmw": ("TH blocks = gamma^{mu nu} p_mu p_nu + p^2 - 2m^2 entrywise", "quadratic"),
    "spin_one.weinberg_equals_th_onshell": ("Weinberg operator = TH on shell (per m^2)", "linear"),
    "spin_one.weinberg_annihilates_u": ("Weinberg operator annihilates u_{1,h} (per E^2)", "quadratic"),
    "spin_one.v_operator_annihilates_v": ("(gamma^{mu nu} p_mu p_nu + m^2) v_{1,h} = 0; derived-oracle (per E^2)", "quadratic"),
    "spin_one.symmetry_table": ("P, C, CP, PC table phases in {+-1, +-e^{i alpha}}", "linear"),
    "spin_one.cp_pc_anticommute": ("CP(b) + PC(b) = 0", "linear"),
    "field_eq.block_round_trip": ("E +- iB reproduce the chi/psi blocks", "linear"),
    "field_eq.linearity": ("field extraction is linear in the bivector", "linear"),
    "field_eq.first_order_u": ("first-order system residuals vanish for u-kind (per E^2)", "quadratic"),
    "field_eq.proca_first_u": ("-i p_mu F^{mu nu} + m^2 A^nu = 0 for u-kind (per E^2)", "quadratic"),
    "field_eq.proca_second_u": ("F^{i0}, -(1/2) eps^{ijk} F^{jk} reproduce (E, B) for u-kind (per E^2)", "quadratic"),
    "field_eq.lorenz_condition": ("p_mu A^mu = 0 for every helicity mode; derived-oracle (per E^2)", "quadratic"),
    "field_eq.transverse_phi_zero": ("p.psi = 0 for the h = +-1 modes", "linear"),
    "field_eq.longitudinal_phi_value": ("phi_aux = p/(sqrt2 m) for the h = 0 u-mode; derived-oracle", "linear"),
}


def _static_algebra_maxima() -> dict[str, float]:
    """Constant-matrix identities: sample-independent."""
    mx: dict[str, float] = {}
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0

    worst = 0.0
    for i in range(3):
        for j in range(3):
            prod = algebra.pauli(i + 1) @ algebra.pauli(j + 1)
            expect = (i == j) * np.eye(2) + 1j * sum(
                eps[i, j, k] * algebra.pauli(k + 1) for k in range(3))
            worst = max(worst, float(np.max(np.abs(prod - expect))))
    mx["algebra.pauli_products"] = worst

    for name, gen in (("algebra.su2_half", [algebra.pauli(i) / 2 for i in (1, 2, 3)]),
                      ("algebra.su2_one", [algebra.spin1(i) for i in (1, 2, 3)])):
        worst = 0.0
        for i in range(3):
            for j in range(3):
                comm = gen[i] @ gen[j] - gen[j] @ gen[i]
                expect = 1j * sum(eps[i, j, k] * gen[k] for k in range(3))
                worst = max(worst, float(np.max(np.abs(comm - expect))))
        mx[name] = worst

    casimir = sum(algebra.spin1(i) @ algebra.spin1(i) for i in (1, 2, 3))
    mx["algebra.casimir_one"] = float(np.max(np.abs(casimir - 2 * np.eye(3))))

    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            g_mu, g_nu = algebra.dirac_gamma(mu), algebra.dirac_gamma(nu)
            anti = g_mu @ g_nu + g_nu @ g_mu
            worst = max(worst, float(np.max(np.abs(anti - 2 * eta[mu, nu] * np.eye(4)))))
    mx["algebra.clifford"] = worst

    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            worst = max(worst, float(np.max(np.abs(
                algebra.bmw_gamma(mu, nu) - algebra.bmw_gamma(nu, mu)))))
    mx["algebra.bmw_symmetric"] = worst

    th2, th1 = algebra.wigner_theta_half(), algebra.wigner_theta_one()
    mx["algebra.wigner_blocks"] = float(max(
        np.max(np.abs(th2 @ th2 + np.eye(2))),
        np.max(np.abs(th1 @ th1 - np.eye(3)))))
    return mx


def _reference_maxima() -> dict[str, float]:
    """Fixed-kinematics checks at the reference point."""
    kin = make_kinematics(**REFERENCE_KIN)
    bc = spin_half.basis_change(kin)
    mx: dict[str, float] = {}
    departure = float(np.linalg.norm(bc.A.conj().T @ bc.A - np.eye(2)))
    # recorded as a shortfall: 0 when the departure clears the 1e-6 floor
    mx["spin_half.a_nonunitary_reference"] = max(0.0, 1e-6 - departure)
    ref = np.array([0.75, 0.375, 0.25, 0.125])
    got = np.array([bc.app, bc.apm, bc.amp, bc.amm])
    mx["spin_half.reference_coefficients"] = float(np.max(np.abs(got - ref)))
    return mx


def _sample_maxima(kins: list[Kinematics], alpha: float) -> dict[str, float]:
    mx: dict[str, float] = defaultdict(float)

    def up(key: str, value: float) -> None:
        if value > mx[key]:
            mx[key] = float(value)

    th_half = algebra.wigner_theta_half()
    for kin in kins:
        E, m, p = kin.energy, kin.mass, kin.pmag
        esq = E * E
        flipped = parity_flip(kin)
        n = kin.unit_momentum()

        up("kinematics.on_shell", abs(esq - p * p - m * m) / esq)
        up("kinematics.unit_momentum_norm", abs(np.linalg.norm(n) - 1.0))
        up("kinematics.parity_reverses_momentum",
           float(np.max(np.abs(flipped.unit_momentum() + n))))
        double = parity_flip(flipped)
        up("kinematics.double_flip_involution",
           max(float(np.max(np.abs(double.unit_momentum() - n))),
               abs(double.phi - kin.phi - 2.0 * math.pi)))

        h_half = algebra.helicity_matrix_half(kin)
        up("algebra.helicity_half_spectrum",
           max(float(np.max(np.abs(h_half - h_half.conj().T))),
               float(np.max(np.abs(np.linalg.eigvalsh(h_half) - [-1.0, 1.0])))))
        h_one = algebra.helicity_matrix_one(kin)
        up("algebra.helicity_one_spectrum",
           max(float(np.max(np.abs(h_one - h_one.conj().T))),
               float(np.max(np.abs(np.linalg.eigvalsh(h_one) - [-1.0, 0.0, 1.0])))))

        # spin 1/2
        phis = {h: spin_half.two_spinor(h, kin).entries for h in spin_half.HALF_HELICITIES}
        for h, vec in phis.items():
            up("spin_half.two_spinor_norm", abs(np.linalg.norm(vec) - 1.0))
            up("spin_half.two_spinor_eigen", float(np.linalg.norm(h_half @ vec - 2 * h * vec)))
        up("spin_half.two_spinor_orthogonal", abs(np.vdot(phis[0.5], phis[-0.5])))
        up("spin_half.wigner_action",
           max(float(np.linalg.norm(th_half @ phis[0.5].conj() + phis[-0.5])),
               float(np.linalg.norm(th_half @ phis[-0.5].conj() - phis[0.5]))))

        states = {(k, h): spin_half.four_spinor(k, h, kin)
                  for k in spin_half.KINDS for h in spin_half.HALF_HELICITIES}
        for (k, h), s in states.items():
            up("spin_half.bar_norms",
               abs(spin_half.bar_norm(s) - (1.0 if k == "u" else -1.0)))
            up("spin_half.dirac_residual", spin_half.dirac_residual(s) / E)
        g0 = algebra.dirac_gamma(0)
        for hu in spin_half.HALF_HELICITIES:
            for hv in spin_half.HALF_HELICITIES:
                up("spin_half.bar_orthogonality",
                   abs(states[("u", hu)].entries.conj() @ g0 @ states[("v", hv)].entries))
        for k in spin_half.KINDS:
            for sg in spin_half.HALF_HELICITIES:
                ps = spin_half.parity_basis_spinor(k, sg, kin)
                up("spin_half.parity_basis_solutions",
                   max(abs(spin_half.bar_norm(ps) - (1.0 if k == "u" else -1.0)),
                       spin_half.dirac_residual(ps) / E))

        bc = spin_half.basis_change(kin)
        up("spin_half.coefficient_reality",
           max(abs(bc.a0.real), abs(np.imag(bc.a1)), abs(np.imag(bc.a2)), abs(np.imag(bc.a3))))
        up("spin_half.coefficient_product", abs(bc.app * bc.amm - bc.apm * bc.amp))
        up("spin_half.pseudo_unitarity",
           float(np.linalg.norm(bc.A.conj().T @ bc.A - bc.B.conj().T @ bc.B - np.eye(2))))
        up("spin_half.block_transform_unitary",
           float(np.linalg.norm(bc.U.conj().T @ bc.U - np.eye(4))))
        up("spin_half.expansion_reconstruction", spin_half.expansion_residual(kin))

        for row in spin_half.symmetry_table_half(kin):
            up("spin_half.symmetry_table", row.snap_error)
        up("spin_half.cp_pc_anticommute", spin_half.anticommutator_residual(kin))

        cmat = spin_half.charge_conj_matrix()
        for (k, h), s in states.items():
            # compose the two P table rows: the (-i)^2 (u) / (+i)^2 (v) phases
            # surface as the sign of the unreduced phi + 2 pi half-angle phase
            double_p = g0 @ (g0 @ spin_half.four_spinor(
                k, h, parity_flip(flipped)).entries)
            up("spin_half.double_application",
               float(np.linalg.norm(double_p + s.entries)))
            double_c = cmat @ (cmat @ s.entries.conj()).conj()
            up("spin_half.double_application",
               float(np.linalg.norm(double_c - s.entries)))

        # spin 1
        chis = {h: spin_one.three_spinor(h, kin).entries for h in spin_one.ONE_HELICITIES}
        for h, vec in chis.items():
            up("spin_one.three_spinor_norm", abs(np.linalg.norm(vec) - 1.0))
            up("spin_one.three_spinor_eigen", float(np.linalg.norm(h_one @ vec - h * vec)))
            up("spin_one.parity_three_spinor", float(np.linalg.norm(
                spin_one.three_spinor(h, flipped).entries + chis[-h])))
        tri = np.column_stack([chis[1], chis[0], chis[-1]])
        up("spin_one.orthonormal_triple",
           float(np.max(np.abs(tri.conj().T @ tri - np.eye(3)))))
        up("spin_one.completeness",
           float(np.max(np.abs(tri @ tri.conj().T - np.eye(3)))))

        th = spin_one.tucker_hammer_matrix(kin)
        th_bmw = spin_one.tucker_hammer_from_bmw(kin)
        wb = spin_one.weinberg_matrix(kin)
        vop = spin_one.v_mode_operator(kin)
        up("spin_one.th_equals_bmw", float(np.max(np.abs(th - th_bmw))) / esq)
        up("spin_one.weinberg_equals_th_onshell",
           float(np.max(np.abs(wb - th))) / (m * m))
        for h in spin_one.ONE_HELICITIES:
            bu = spin_one.bivector("u", h, kin)
            bv = spin_one.bivector("v", h, kin)
            up("spin_one.bivector_bar_norm",
               max(abs(spin_one.bar_norm_one(bu) - 1.0),
                   abs(spin_one.bar_norm_one(bv) + 1.0)))
            up("spin_one.tucker_hammer_annihilates_u",
               float(np.linalg.norm(th @ bu.entries)) / esq)
            up("spin_one.weinberg_annihilates_u",
               float(np.linalg.norm(wb @ bu.entries)) / esq)
            up("spin_one.v_operator_annihilates_v",
               float(np.linalg.norm(vop @ bv.entries)) / esq)

            # field chain
            fs = field_eq.fields_from_bivector(bu)
            up("field_eq.block_round_trip", field_eq.block_reconstruction_residual(fs, bu))
            r1, r2, r3, r4 = field_eq.first_order_residuals(fs, bu)
            up("field_eq.first_order_u", max(r1, r2, r3, r4) / esq)
            pf, ps = field_eq.proca_residuals(fs)
            up("field_eq.proca_first_u", pf / esq)
            up("field_eq.proca_second_u", ps / esq)
            up("field_eq.lorenz_condition", field_eq.lorenz_residual(fs) / esq)
            fsv = field_eq.fields_from_bivector(bv)
            up("field_eq.block_round_trip", field_eq.block_reconstruction_residual(fsv, bv))
            up("field_eq.lorenz_condition", field_eq.lorenz_residual(fsv) / esq)
            if h == 0:
                up("field_eq.longitudinal_phi_value",
                   abs(fs.phi_aux - p / (math.sqrt(2.0) * m)))
            else:
                up("field_eq.transverse_phi_zero", abs(fs.phi_aux))
                up("field_eq.transverse_phi_zero", abs(fsv.phi_aux))

        # linearity of the field extraction on a fixed combination
        b1 = spin_one.bivector("u", 1, kin)
        b2 = spin_one.bivector("u", -1, kin)
        combo = spin_one.Bivector(
            entries=(0.7 - 0.2j) * b1.entries + (1.1 + 0.4j) * b2.entries,
            kind="u", helicity=1, kin=kin)
        f_combo = field_eq.fields_from_bivector(combo)
        f1 = field_eq.fields_from_bivector(b1)
        f2 = field_eq.fields_from_bivector(b2)
        for attr in ("e_field", "b_field", "xi"):
            up("field_eq.linearity", float(np.max(np.abs(
                getattr(f_combo, attr)
                - (0.7 - 0.2j) * getattr(f1, attr)
                - (1.1 + 0.4j) * getattr(f2, attr)))))

        for row in spin_one.symmetry_table_one(kin, alpha):
            up("spin_one.symmetry_table", row.snap_error)
        up("spin_one.cp_pc_anticommute", spin_one.anticommutator_residual_one(kin, alpha))

    return dict(mx)


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Execute every residual check over seeded random kinematics.

    Failures are data: every check is always evaluated and recorded, and the
    report's all_pass flag (not an exception) carries the verdict.
    """
    kins = sample_kinematics(config)
    maxima: dict[str, float] = {}
    maxima.update(_static_algebra_maxima())
    maxima.update(_reference_maxima())
    maxima.update(_sample_maxima(kins, config.alpha))

    static_ids = set(_static_algebra_maxima()) | set(_reference_maxima())
    checks = []
    for check_id, (anchor, gate) in CHECKS.items():
        tol = config.tol_linear if gate == "linear" else config.tol_quadratic
        value = maxima.get(check_id, float("nan"))
        n = 1 if check_id in static_ids else config.samples
        checks.append(CheckResult(check_id=check_id, anchor=anchor, samples=n,
                                  max_residual=value,
                                  passed=bool(value < tol)))

    ref = make_kinematics(**REFERENCE_KIN)
    return VerificationReport(
        config=config,
        checks=checks,
        table_half=spin_half.symmetry_table_half(ref),
        table_one=spin_one.symmetry_table_one(ref, config.alpha),
    )


def emit_json(report: VerificationReport) -> str:
    """Canonical byte-stable JSON: sorted keys, two-space indent, newline end."""
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> dict:
    return json.loads(text)


def markdown_summary(report: VerificationReport, wall_time: float | None = None) -> str:
    d = report.to_dict()
    lines = [
        "# Verification report",
        "",
        f"- schema version: {d['schema_version']}, package version: {d['package_version']}",
        f"- config: `{json.dumps(d['config'], sort_keys=True)}`",
        f"- checks: {len(d['checks'])}, all pass: {d['all_pass']}",
    ]
    if wall_time is not None:
        lines.append(f"- wall time: {wall_time:.3f} s")
    lines += ["", "| check | max residual | pass |", "|---|---|---|"]
    for c in d["checks"]:
        lines.append(f"| `{c['check_id']}` | {c['max_residual']:.3e} | {'yes' if c['pass'] else 'NO'} |")
    lines += ["", "## Symmetry tables (reference kinematics)", ""]
    for name in ("spin_half", "spin_one"):
        lines.append(f"### {name}")
        lines.append("")
        lines.append("| op | in | out | phase | snap error |")
        lines.append("|---|---|---|---|---|")
        for r in d["symmetry_tables"][name]:
            phase = complex(r["phase_re"], r["phase_im"])
            lines.append(f"| {r['operation']} | {r['in_state']} | {r['out_state']} "
                         f"| {phase.real:+.6f}{phase.imag:+.6f}i | {r['snap_error']:.2e} |")
        lines.append("")
    return "\n".join(lines) + "\n"
