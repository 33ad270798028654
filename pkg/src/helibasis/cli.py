"""Command-line interface: verify / spinor / table / expand / fields.

Exit codes: 0 success (and all checks pass under `verify`), 1 at least one
failing check under `verify`, 2 malformed flags (argparse usage error).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import field_eq, report, spin_half, spin_one
from .kinematics import make_kinematics


def _parse_helicity(text: str, spin: str) -> float | int:
    t = text.strip().replace(" ", "")
    if spin == "half":
        if t in ("+1/2", "1/2", "+0.5", "0.5"):
            return 0.5
        if t in ("-1/2", "-0.5"):
            return -0.5
        raise argparse.ArgumentTypeError(f"helicity for spin half must be +-1/2, got {text!r}")
    if t in ("+1", "1"):
        return 1
    if t == "0":
        return 0
    if t == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"helicity for spin one must be +1, 0 or -1, got {text!r}")


def _add_kin_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mass", type=float, required=True, help="mass m > 0")
    p.add_argument("--pmag", type=float, required=True, help="momentum magnitude |p| >= 0")
    p.add_argument("--theta", type=float, default=0.0, help="polar angle in [0, pi]")
    p.add_argument("--phi", type=float, default=0.0, help="azimuth (radians, unreduced)")


def _kin_from(args) -> "make_kinematics":
    return make_kinematics(args.mass, args.pmag, args.theta, args.phi)


def _complex_pairs(vec: np.ndarray) -> list[dict]:
    return [{"re": float(z.real), "im": float(z.imag)} for z in vec]


def _print_vector(name: str, vec: np.ndarray, stream) -> None:
    print(f"{name}:", file=stream)
    for z in np.asarray(vec).ravel():
        print(f"  ({z.real:+.17g}, {z.imag:+.17g})", file=stream)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helibasis",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--alpha", type=float, default=0.0,
                          help="free charge-conjugation phase for spin 1")
    p_verify.add_argument("--tol-linear", type=float, default=1e-11)
    p_verify.add_argument("--tol-quadratic", type=float, default=1e-10)
    p_verify.add_argument("--json", type=str, default=None,
                          help="write the canonical JSON report here (default: stdout)")
    p_verify.add_argument("--markdown", type=str, default=None,
                          help="write a human-readable summary here")

    p_spinor = sub.add_parser("spinor", help="print one constructed spinor or bivector")
    p_spinor.add_argument("--spin", choices=("half", "one"), required=True)
    p_spinor.add_argument("--kind", choices=("u", "v"), required=True)
    p_spinor.add_argument("--helicity", type=str, required=True)
    p_spinor.add_argument("--format", choices=("json", "text"), default="text")
    _add_kin_args(p_spinor)

    p_table = sub.add_parser("table", help="print a discrete-symmetry action table")
    p_table.add_argument("--spin", choices=("half", "one"), required=True)
    p_table.add_argument("--op", choices=("P", "C", "CP", "PC"), required=True)
    p_table.add_argument("--alpha", type=float, default=0.0)
    p_table.add_argument("--format", choices=("json", "text"), default="text")
    _add_kin_args(p_table)

    p_expand = sub.add_parser("expand", help="print the basis-change data and residuals")
    _add_kin_args(p_expand)

    p_fields = sub.add_parser("fields", help="print the field set and chain residuals")
    p_fields.add_argument("--helicity", type=str, required=True)
    p_fields.add_argument("--kind", choices=("u", "v"), default="u")
    _add_kin_args(p_fields)
    return parser


def _cmd_verify(args) -> int:
    config = report.SuiteConfig(seed=args.seed, samples=args.samples,
                                alpha=args.alpha, tol_linear=args.tol_linear,
                                tol_quadratic=args.tol_quadratic)
    t0 = time.perf_counter()
    rep = report.run_suite(config)
    elapsed = time.perf_counter() - t0
    text = report.emit_json(rep)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.markdown:
        with open(args.markdown, "w") as fh:
            fh.write(report.markdown_summary(rep, wall_time=elapsed))
    n_fail = sum(not c.passed for c in rep.checks)
    print(f"{len(rep.checks)} checks, {n_fail} failing, {elapsed:.3f} s", file=sys.stderr)
    return 0 if rep.all_pass else 1


def _cmd_spinor(args) -> int:
    kin = _kin_from(args)
    h = _parse_helicity(args.helicity, args.spin)
    if args.spin == "half":
        entries = spin_half.four_spinor(args.kind, h, kin).entries
    else:
        entries = spin_one.bivector(args.kind, h, kin).entries
    if args.format == "json":
        print(json.dumps({"spin": args.spin, "kind": args.kind,
                          "helicity": args.helicity,
                          "kinematics": {"mass": kin.mass, "pmag": kin.pmag,
                                         "theta": kin.theta, "phi": kin.phi,
                                         "energy": kin.energy},
                          "entries": _complex_pairs(entries)},
                         indent=2, sort_keys=True))
    else:
        _print_vector(f"{args.kind}[{args.helicity}] at E={kin.energy!r}",
                      entries, sys.stdout)
    return 0


def _cmd_table(args) -> int:
    kin = _kin_from(args)
    if args.spin == "half":
        rows = spin_half.symmetry_table_half(kin)
    else:
        rows = spin_one.symmetry_table_one(kin, args.alpha)
    rows = [r for r in rows if r.operation == args.op]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in rows], indent=2, sort_keys=True))
    else:
        for r in rows:
            print(f"{r.operation:>2}  {r.in_state:>6} -> {r.out_state:<6} "
                  f"phase {r.phase.real:+.6f}{r.phase.imag:+.6f}i   "
                  f"snap error {r.snap_error:.2e}")
    return 0


def _cmd_expand(args) -> int:
    kin = _kin_from(args)
    rep = spin_half.expansion_report(kin)
    bc = rep.basis
    out = sys.stdout
    print(f"a^mu   = ({bc.a0!r}, {bc.a1!r}, {bc.a2!r}, {bc.a3!r})", file=out)
    print(f"a_++   = {bc.app!r}", file=out)
    print(f"a_+-   = {bc.apm!r}", file=out)
    print(f"a_-+   = {bc.amp!r}", file=out)
    print(f"a_--   = {bc.amm!r}", file=out)
    with np.printoptions(precision=12, suppress=False):
        print(f"A (closed form) =\n{bc.A}", file=out)
        print(f"B (closed form) =\n{bc.B}", file=out)
        print(f"U (solved block transformation) =\n{bc.U}", file=out)
    i2, i4 = np.eye(2), np.eye(4)
    print(f"|U^.U - 1|          = {np.linalg.norm(bc.U.conj().T @ bc.U - i4):.3e}", file=out)
    print(f"|A^.A - B^.B - 1|   = {np.linalg.norm(bc.A.conj().T @ bc.A - bc.B.conj().T @ bc.B - i2):.3e}", file=out)
    print(f"|A^.A + B^.B - 1|   = {np.linalg.norm(bc.A.conj().T @ bc.A + bc.B.conj().T @ bc.B - i2):.3e}", file=out)
    print(f"|A^.A - 1|          = {np.linalg.norm(bc.A.conj().T @ bc.A - i2):.3e}", file=out)
    print(f"reconstruction error        = {rep.reconstruction_error:.3e}", file=out)
    print(f"row-aligned |solved - A|    = {rep.aligned_distance_a:.3e}", file=out)
    print(f"row-aligned |solved - B|    = {rep.aligned_distance_b:.3e}", file=out)
    return 0


def _cmd_fields(args) -> int:
    kin = _kin_from(args)
    h = _parse_helicity(args.helicity, "one")
    b = spin_one.bivector(args.kind, h, kin)
    fs = field_eq.fields_from_bivector(b)
    out = sys.stdout
    _print_vector("E", fs.e_field, out)
    _print_vector("B", fs.b_field, out)
    _print_vector("xi", fs.xi, out)
    print(f"phi_aux: ({fs.phi_aux.real:+.17g}, {fs.phi_aux.imag:+.17g})", file=out)
    _print_vector("A^mu", fs.a_potential, out)
    r1, r2, r3, r4 = field_eq.first_order_residuals(fs, b)
    pf, ps = field_eq.proca_residuals(fs)
    print(f"first-order residuals: {r1:.3e} {r2:.3e} {r3:.3e} {r4:.3e}", file=out)
    print(f"field-eq residual (dF + m^2 A): {pf:.3e}", file=out)
    print(f"field-strength reconstruction residual: {ps:.3e}", file=out)
    print(f"lorenz contraction |p.A|: {field_eq.lorenz_residual(fs):.3e}", file=out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"verify": _cmd_verify, "spinor": _cmd_spinor, "table": _cmd_table,
                "expand": _cmd_expand, "fields": _cmd_fields}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
