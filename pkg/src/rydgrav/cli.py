"""Command-line interface: ``rydgrav transition | sweep | feasibility``.

Exit codes: 0 success, 2 usage or input error, 3 numeric domain error,
4 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__, angular, detector, gw
from .constants import NormalizationSet
from .hydrogenic import QuantumState, parse_j

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4
CATALOG_ENV = "RYDGRAV_CATALOG"
SCHEMA_VERSION = 1


class InputError(Exception):
    """Bad user input; exit code 2."""


def parse_j_arg(text: str) -> Fraction:
    """``"p/2"`` or the integer ``2j``."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            if int(den) != 2:
                raise ValueError
            j = Fraction(int(num), 2)
        else:
            j = Fraction(int(text), 2)
        return parse_j(j)
    except ValueError:
        raise InputError(f"malformed j {text!r}: give p/2 or the integer 2j") from None


def _state(n, l, j, Z):
    try:
        return QuantumState(n, l, j, Z)
    except ValueError as exc:
        raise InputError(f"invalid quantum numbers: {exc}") from None


# -- output ----------------------------------------------------------------


def _envelope(kind, payload):
    return {"schema": f"rydgrav.{kind}/{SCHEMA_VERSION}", "generator": {"name": "rydgrav", "version": __version__}, "result": payload}


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12e}"
    return str(value)


def write_csv(rows, columns, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])


def write_table(rows, columns, out):
    cells = [[_fmt(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
    for r in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n")


def write_record(record, out):
    width = max(len(k) for k in record)
    for key, value in record.items():
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, list):
            value = "; ".join(map(str, value))
        else:
            value = _fmt(value) if value is not None else "-"
        out.write(f"{key.ljust(width)}  {value}\n")


def write_json(kind, payload, out):
    json.dump(_envelope(kind, payload), out, indent=2, sort_keys=True, allow_nan=False)
    out.write("\n")


def _finite(value):
    return value if value is None or math.isfinite(value) else None


# -- transition --------------------------------------------------------------


def _state_dict(s: QuantumState):
    return {"n": s.n, "l": s.l, "j": str(s.j), "Z": s.Z}


def transition_record(lower, upper, radial_mode="auto", amplitude=None, flux=None, spectral_flux=None):
    factor = gw.transition_factor(lower, upper, radial_mode)
    units = NormalizationSet(lower.Z)
    omega = factor.omega_tilde * units.omega_unit
    record = {
        "lower": _state_dict(lower),
        "upper": _state_dict(upper),
        "c2": factor.c2,
        "radial_integral": factor.radial,
        "radial_method": factor.radial_method.value,
        "omega_tilde": factor.omega_tilde,
        "omega_rad_per_s": omega,
        "tau_tilde": factor.tau_tilde,
        "combined_lifetime_s": factor.tau_tilde * units.tau_unit,
        "f": factor.f_value,
        "bound_flag": factor.bound_flag,
        "sigma_max_m2": gw.sigma_abs_max(lower, upper, radial_mode),
        "gamma_gr_per_s": gw.spontaneous_gw_rate(upper, lower, radial_mode),
        "branching_ratio": gw.branching_ratio(upper, lower, radial_mode),
        "amplitude": None,
        "flux_w_per_m2": None,
        "rate_monochromatic_per_s": None,
        "spectral_flux": spectral_flux,
        "rate_broadband_per_s_per_rad": None,
    }
    if amplitude is not None or flux is not None:
        wave = gw.WaveField.monochromatic(omega, amplitude=amplitude, flux=flux)
        record["amplitude"] = wave.characteristic_amplitude
        record["flux_w_per_m2"] = wave.flux
        record["rate_monochromatic_per_s"] = gw.absorption_rate_monochromatic(lower, upper, wave, radial_mode)
    if spectral_flux is not None:
        wave = gw.WaveField.spectral(spectral_flux, omega)
        record["rate_broadband_per_s_per_rad"] = gw.absorption_rate_broadband(lower, upper, wave, radial_mode)
    return record


def cmd_transition(args, out):
    j = parse_j_arg(args.j)
    dj = args.dj
    dl = args.dl
    if dl is None:
        if dj % 2:
            raise InputError("--dl is required for odd --dj")
        dl = dj
    lower = _state(args.n, args.l, j, args.Z)
    upper = _state(args.n + args.dn, args.l + dl, j + dj, args.Z)
    outcome = angular.selection_rules(lower, upper)
    if not outcome.allowed:
        raise InputError(f"forbidden transition: {outcome.reason}")
    if args.amplitude is not None and args.flux is not None:
        raise InputError("give --amplitude or --flux, not both")
    record = transition_record(lower, upper, args.radial_mode, args.amplitude, args.flux, args.spectral_flux)
    if args.format == "json":
        write_json("transition", record, out)
        return
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            flat.update({f"{key}_{k}": v for k, v in value.items()})
        else:
            flat[key] = value
    if args.format == "csv":
        write_csv([flat], list(flat), out)
    else:
        write_record(flat, out)


# -- sweep -------------------------------------------------------------------


@dataclass
class SweepSpec:
    variable: str
    start: float
    stop: float
    count: int | None = None
    step: float | None = None
    scale: str = "linear"
    fixed: dict = field(default_factory=dict)

    INTEGER_VARIABLES = ("n", "l")

    def values(self) -> list:
        if self.stop < self.start:
            raise InputError("empty sweep range: stop < start")
        if (self.count is None) == (self.step is None):
            raise InputError("give exactly one of --count or --step")
        integer = self.variable in self.INTEGER_VARIABLES
        if self.scale == "log" and self.start <= 0:
            raise InputError("log sweeps need a positive start")
        if self.count is not None:
            if self.count < 1:
                raise InputError("empty sweep range: --count must be >= 1")
            if self.scale == "log":
                raw = np.geomspace(self.start, self.stop, self.count)
            else:
                raw = np.linspace(self.start, self.stop, self.count)
        else:
            if not self.step > 0:
                raise InputError("--step must be positive")
            if integer and self.scale == "linear" and float(self.step) != int(self.step):
                raise InputError("quantum-number sweeps need an integer --step")
            if self.scale == "log":
                if not self.step > 1:
                    raise InputError("log sweeps need a --step factor > 1")
                k = int(math.floor(math.log(self.stop / self.start) / math.log(self.step) + 1e-9))
                raw = self.start * self.step ** np.arange(k + 1)
            else:
                k = int(math.floor((self.stop - self.start) / self.step + 1e-9))
                raw = self.start + self.step * np.arange(k + 1)
        if integer:
            vals = []
            for v in raw:
                iv = int(round(float(v)))
                if not vals or vals[-1] != iv:
                    vals.append(iv)
            return vals
        return [float(v) for v in raw]


SWEEP_COLUMNS = [
    "n", "l", "omega_rad_per_s", "residual_linewidths", "amplitude", "spectral_flux",
    "f", "bound_flag", "sigma_max_m2", "rate_monochromatic_per_s", "rate_broadband_per_s_per_rad",
]


def sweep_rows(spec: SweepSpec):
    """Yield one row per sweep point, in sweep order."""
    fx = spec.fixed
    dn, Z = fx.get("dn", 1), fx.get("Z", 1)
    for value in spec.values():
        residual = None
        amplitude = fx.get("amplitude")
        if spec.variable == "n":
            lower, upper = gw.near_circular_pair(value, dn, Z)
        elif spec.variable == "l":
            n = fx.get("n")
            if n is None:
                raise InputError("an l sweep needs --n")
            lower = _state(n, value, Fraction(2 * value + 1, 2), Z)
            upper = _state(n + dn, value + 2, Fraction(2 * value + 5, 2), Z)
        elif spec.variable == "omega":
            match = detector.match_principal_n(value, Z, dn)
            residual = match.residual
            lower, upper = gw.near_circular_pair(match.n, dn, Z)
        else:
            n = fx.get("n")
            if n is None:
                raise InputError("an amplitude sweep needs --n")
            lower, upper = gw.near_circular_pair(n, dn, Z)
            amplitude = value
        record = transition_record(lower, upper, "auto", amplitude, None, fx.get("spectral_flux"))
        yield {
            "n": lower.n,
            "l": lower.l,
            "omega_rad_per_s": record["omega_rad_per_s"],
            "residual_linewidths": residual,
            "amplitude": amplitude,
            "spectral_flux": record["spectral_flux"],
            "f": record["f"],
            "bound_flag": record["bound_flag"],
            "sigma_max_m2": record["sigma_max_m2"],
            "rate_monochromatic_per_s": record["rate_monochromatic_per_s"],
            "rate_broadband_per_s_per_rad": record["rate_broadband_per_s_per_rad"],
        }


def cmd_sweep(args, out):
    fixed = {"dn": args.dn, "Z": args.Z}
    for key in ("n", "amplitude", "spectral_flux"):
        if getattr(args, key) is not None:
            fixed[key] = getattr(args, key)
    spec = SweepSpec(args.variable, args.start, args.stop, args.count, args.step, args.scale, fixed)
    spec.values()  # validate before any output
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in sweep_rows(spec):
            writer.writerow([_fmt(row[c]) for c in SWEEP_COLUMNS])
    elif args.format == "json":
        rows = [{k: _finite(v) if isinstance(v, float) else v for k, v in r.items()} for r in sweep_rows(spec)]
        payload = {"variable": spec.variable, "scale": spec.scale, "fixed": fixed, "columns": SWEEP_COLUMNS, "rows": rows}
        write_json("sweep", payload, out)
    else:
        write_table(list(sweep_rows(spec)), SWEEP_COLUMNS, out)


# -- feasibility ---------------------------------------------------------------


def cmd_feasibility(args, out):
    path = args.catalog or os.environ.get(CATALOG_ENV)
    try:
        catalog = detector.load_catalog(path)
    except detector.CatalogError as exc:
        raise InputError(f"catalog {path or '(bundled)'}: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read catalog: {exc}") from None
    if args.source not in catalog:
        raise InputError(f"unknown source {args.source!r}; catalog has: {', '.join(sorted(catalog))}")
    report = detector.feasibility_report(catalog[args.source], args.Z, args.target_events, args.model)
    payload = report.as_dict()
    if args.format == "json":
        write_json("feasibility", payload, out)
    else:
        write_record(payload, out)


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rydgrav", description="Gravitational-wave absorption by Rydberg atoms.")
    parser.add_argument("--version", action="version", version=f"rydgrav {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transition", help="evaluate one quadrupole transition")
    p.add_argument("--n", type=int, required=True, help="lower principal quantum number")
    p.add_argument("--l", type=int, required=True, help="lower orbital quantum number")
    p.add_argument("--j", required=True, help="lower total angular momentum, as p/2 or the integer 2j")
    p.add_argument("--dn", type=int, default=1)
    p.add_argument("--dl", type=int, default=None, help="defaults to --dj for even --dj")
    p.add_argument("--dj", type=int, default=2)
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--radial-mode", choices=["auto", "exact", "asymptotic"], default="auto")
    p.add_argument("--amplitude", type=float, help="characteristic strain |A| (both polarizations)")
    p.add_argument("--flux", type=float, help="total wave flux, W/m^2")
    p.add_argument("--spectral-flux", type=float, help="flux density at resonance, W/m^2 per rad/s")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("sweep", help="tabulate a ladder of transitions")
    p.add_argument("--variable", choices=["n", "l", "omega", "amplitude"], required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--step", type=float)
    p.add_argument("--scale", choices=["linear", "log"], default="linear")
    p.add_argument("--n", type=int, help="fixed lower n for l and amplitude sweeps")
    p.add_argument("--dn", type=int, default=1)
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--amplitude", type=float)
    p.add_argument("--spectral-flux", type=float)
    p.add_argument("--format", choices=["table", "json", "csv"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("feasibility", help="detector feasibility report for a catalogued source")
    p.add_argument("--catalog", help=f"JSON-lines source catalog (default: ${CATALOG_ENV} or the bundled one)")
    p.add_argument("--source", default="crab")
    p.add_argument("--target-events", type=float, default=3.0, help="absorption events per year")
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--model", choices=["exact", "rydberg"], default="exact", help="level spacing used for matching")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_feasibility)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buffer = io.StringIO()
    try:
        args.func(args, buffer)
    except InputError as exc:
        print(f"rydgrav: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, NotImplementedError, ArithmeticError) as exc:
        print(f"rydgrav: numeric domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"rydgrav: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    out.write(buffer.getvalue())
    return EXIT_OK


def console_main():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
