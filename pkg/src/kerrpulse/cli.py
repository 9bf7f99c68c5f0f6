"""Command-line tables for the quadrature spectra, squeezing bandwidth,
photon statistics and the validation ledger.

Quadrature frequencies are normalized by tau_r (column ``omega_r``), photon
frequencies by tau_p (column ``omega_p``).  Output is CSV or JSON and is
byte-for-byte reproducible for a given command line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__, photon, quadspec
from .pulse import GaussianEnvelope, KerrParams

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_range(text: str) -> np.ndarray:
    """``start:stop:count`` -> inclusive linspace, count >= 2."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric field in range {text!r}") from None
    if count < 2:
        raise argparse.ArgumentTypeError(f"range count must be >= 2, got {count}")
    return np.linspace(start, stop, count)


def parse_phase(text: str):
    """``optimal`` or ``fixed:<radians>``."""
    if text == "optimal":
        return ("optimal", None)
    if text.startswith("fixed:"):
        try:
            return ("fixed", float(text[len("fixed:"):]))
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"phase must be 'optimal' or 'fixed:<radians>', got {text!r}")


def _positive(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not val > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return val


def _non_negative(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if val < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return val


# -- output -----------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return "%.15e" % float(value)


def render(columns: dict, metadata: dict, fmt: str) -> str:
    names = list(columns)
    if fmt == "json":
        cols = {k: [v if isinstance(v, (str, bool)) else float(v) for v in columns[k]]
                for k in names}
        doc = {"columns": cols, "column_order": names, "metadata": metadata}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for row in zip(*(columns[k] for k in names)):
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _metadata(args, formula: str, **extra) -> dict:
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "parser", "out", "format") and v is not None}
    params = {k: (list(v) if isinstance(v, (tuple, list)) else v) for k, v in params.items()}
    for key in ("psi0_range", "omega_range"):
        if key in params:
            arr = np.asarray(params[key])
            params[key] = [float(arr[0]), float(arr[-1]), int(arr.size)]
    meta = {"artifact": "kerrpulse", "version": __version__, "formula": formula,
            "parameters": params}
    meta.update(extra)
    return meta


def _psi0_grid(args, default: str) -> np.ndarray:
    if args.psi0 is not None and args.psi0_range is not None:
        raise SystemExit(_usage(args, "--psi0 and --psi0-range are mutually exclusive"))
    if args.psi0 is not None:
        return np.array([args.psi0])
    grid = args.psi0_range if args.psi0_range is not None else parse_range(default)
    if np.any(grid < 0):
        raise SystemExit(_usage(args, "--psi0-range: psi0 must be non-negative"))
    return grid


def _usage(args, message: str) -> int:
    args.parser.print_usage(sys.stderr)
    sys.stderr.write(f"kerrpulse {args.command}: error: {message}\n")
    return EXIT_USAGE


# -- commands ---------------------------------------------------------------

def cmd_quadspec(args) -> int:
    psi0s = _psi0_grid(args, "0:5:11")
    omegas = args.omega_range if args.omega_range is not None else parse_range("0:4:401")
    env = GaussianEnvelope(1.0)
    kind, fixed = args.phase
    cols = {"psi0": [], "omega_r": [], "s_x": [], "s_y": []}
    for psi0 in psi0s:
        psi = float(psi0 * env.rho2(args.t))
        if kind == "optimal":
            s_x, s_y = quadspec.general_spectrum(psi, omegas, args.omega0)
        else:
            s_x, s_y = quadspec.spectrum_from_phase(psi, psi + fixed, omegas)
        cols["psi0"] += [psi0] * omegas.size
        cols["omega_r"] += list(omegas)
        cols["s_x"] += list(np.broadcast_to(s_x, omegas.shape))
        cols["s_y"] += list(np.broadcast_to(s_y, omegas.shape))
    formula = "general" if kind == "optimal" else "fixed-phase"
    emit(render(cols, _metadata(args, formula), args.format), args.out)
    return EXIT_OK


def cmd_bandwidth(args) -> int:
    psi0s = _psi0_grid(args, "0:5:51")
    env = GaussianEnvelope(1.0)
    widths = [quadspec.squeezing_bandwidth(float(p * env.rho2(args.t))) for p in psi0s]
    cols = {"psi0": list(psi0s), "delta_omega_r": widths}
    emit(render(cols, _metadata(args, "half-depth quadratic root, Omega0=0"), args.format),
         args.out)
    return EXIT_OK


def cmd_photon(args) -> int:
    psi0s = _psi0_grid(args, "0:5:101")
    if args.quantity == "density":
        omegas = args.omega_range if args.omega_range is not None else parse_range("0:3:61")
        cols = {"psi0": [], "omega_p": [], "n_classical": [], "n_relaxing": []}
        for psi0 in psi0s:
            p = KerrParams.from_phase(float(psi0), nu=args.nu, gamma=args.gamma)
            cols["psi0"] += [psi0] * omegas.size
            cols["omega_p"] += list(omegas)
            cols["n_classical"] += list(photon.photon_density_classical(p, omegas))
            cols["n_relaxing"] += list(photon.photon_density_relaxing(p, omegas))
        meta = _metadata(args, "spectral photon density, units of n_bar0")
        emit(render(cols, meta, args.format), args.out)
        return EXIT_OK

    cols = {"psi0": [], "r_tilde": [], "r_smooth": [], "r_delta": [], "r_literal": []}
    origin = args.band_center == 0.0
    for psi0 in psi0s:
        p = KerrParams.from_phase(float(psi0), nu=args.nu, gamma=args.gamma)
        full = photon.band_integral(p, args.band_center, args.band_width)
        simplified = photon.band_integral_origin(p, args.band_width) if origin else full.smooth
        cols["psi0"].append(psi0)
        cols["r_tilde"].append(simplified)
        cols["r_smooth"].append(full.smooth)
        cols["r_delta"].append(full.delta_term)
        cols["r_literal"].append(full.literal)
    formula = ("band_integral_origin (simplified Omega_p=0 form)" if origin
               else "band_integral smooth part")
    emit(render(cols, _metadata(args, formula, units="n_bar0"), args.format), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    from .oracle.suite import CASE_IDS, run_suite

    unknown = [c for c in (args.case or []) if c not in CASE_IDS]
    if unknown:
        return _usage(args, f"unknown case id(s): {', '.join(unknown)}")
    rows = run_suite(args.case, tol_scale=args.tol_scale)
    cols = {"id": [r.id for r in rows],
            "formula_ref": [r.formula_ref for r in rows],
            "oracle_ref": [r.oracle_ref for r in rows],
            "tolerance": [r.tolerance for r in rows],
            "achieved": [r.achieved for r in rows],
            "pass": [r.passed for r in rows]}
    emit(render(cols, _metadata(args, "tolerance ledger"), args.format), args.out)
    failed = [r for r in rows if not r.passed]
    for r in failed:
        sys.stderr.write(f"FAIL {r.id}: achieved {r.achieved:.3e} > tolerance {r.tolerance:.3e}\n")
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerrpulse",
                                     description="Quantum noise tables for Kerr self-phase modulation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default: stdout)")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--psi0", type=_non_negative, help="single peak nonlinear phase")
    grid.add_argument("--psi0-range", type=parse_range, metavar="A:B:N")
    grid.add_argument("--t", type=float, default=0.0,
                      help="evaluation time in units of tau_p (default 0)")

    p = sub.add_parser("quadspec", parents=[common, grid],
                       help="S_X, S_Y over (psi0, Omega) with Omega = omega tau_r")
    p.add_argument("--omega0", type=_non_negative, default=0.0,
                   help="frequency at which the phase is optimised (tau_r units)")
    p.add_argument("--omega-range", type=parse_range, metavar="A:B:N")
    p.add_argument("--phase", type=parse_phase, default=("optimal", None),
                   help="optimal | fixed:<radians>")
    p.set_defaults(func=cmd_quadspec)

    p = sub.add_parser("bandwidth", parents=[common, grid],
                       help="half-depth squeezing bandwidth in tau_r units")
    p.set_defaults(func=cmd_bandwidth)

    p = sub.add_parser("photon", parents=[common, grid],
                       help="band-integrated photon correlation or spectral density")
    p.add_argument("--quantity", choices=("correlation", "density"), default="correlation")
    p.add_argument("--nu", type=_positive, default=10.0, help="tau_p / tau_r")
    p.add_argument("--gamma", type=_positive, default=1e-3, help="nonlinear coupling")
    p.add_argument("--band-center", type=float, default=0.0, help="tau_p units")
    p.add_argument("--band-width", type=_positive, default=0.75, help="tau_p units")
    p.add_argument("--omega-range", type=parse_range, metavar="A:B:N",
                   help="omega tau_p grid for --quantity density")
    p.set_defaults(func=cmd_photon)

    p = sub.add_parser("validate", parents=[common], help="run the oracle suite")
    p.add_argument("--case", action="append", help="run only this case id (repeatable)")
    p.add_argument("--tol-scale", type=_positive, default=1.0,
                   help="multiply every tolerance by this factor")
    p.set_defaults(func=cmd_validate)

    for action in sub.choices.values():
        action.set_defaults(parser=action)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code)
    except (ValueError, ArithmeticError) as exc:
        return _usage(args, str(exc))


if __name__ == "__main__":
    sys.exit(main())
