"""Source-to-experiment feasibility estimates for pulsar-like sources.

All angular frequencies are in rad/s.  A source quoted "in Hz" by its
angular frequency (e.g. the Crab at 379.8) is angular; its ordinary
frequency is ``omega / 2 pi``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import gw, lifetimes
from .constants import CODATA, SECONDS_PER_DAY, SECONDS_PER_YEAR, GAUSS_PER_TESLA, NormalizationSet
from .hydrogenic import QuantumState

MIN_RYDBERG_N = 100


class ResonanceMatch(NamedTuple):
    n: int
    residual: float  # (omega - omega_n) in units of the line width
    omega_tilde_n: float


def _spacing(n, dn, model):
    if model == "exact":
        return gw.bohr_omega_tilde(n, n + dn)
    if model == "rydberg":
        return dn / float(n) ** 3
    raise ValueError(f"unknown level-spacing model {model!r}")


def match_principal_n(omega: float, Z: int = 1, dn: int = 1, model: str = "exact", constants=CODATA) -> ResonanceMatch:
    """Lower principal number whose ``n -> n + dn`` line lies closest to ``omega``.

    ``model="exact"`` uses the Bohr level difference, ``model="rydberg"`` the
    ``dn / n^3`` approximation.  The two can disagree by one unit at ``n ~ 5e4``
    because the approximation is off by ``3/(2n)`` in frequency, i.e. half a
    level.  Exact resonance needs integer ``n``, so the residual detuning is
    reported in units of the near-circular line width.
    """
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    w = omega / NormalizationSet(Z, constants).omega_unit
    guess = (dn / w) ** (1.0 / 3.0)
    if model == "exact":
        guess -= 0.5 * dn
    base = int(round(guess))
    candidates = [m for m in range(base - 2, base + 3) if m >= 1]
    n = min(candidates, key=lambda m: (abs(_spacing(m, dn, model) - w), m))
    if n < MIN_RYDBERG_N:
        raise ValueError(f"omega={omega!r} rad/s resonates at n={n}, outside the Rydberg regime (n >= {MIN_RYDBERG_N})")
    w_n = _spacing(n, dn, model)
    lower, upper = gw.near_circular_pair(n, dn, Z)
    width = 1.0 / lifetimes.combined_lifetime(lower, upper)
    return ResonanceMatch(n, (w - w_n) / width, w_n)


def b_field_ceiling(n: int, Z: int = 1, constants=CODATA) -> float:
    """Field (gauss) at which the diamagnetic energy of a circular orbit equals the level spacing.

    ``sqrt(8) Z^2 a0^-1 (2 Ryd / r0)^(1/2) n^-3.5`` in Gaussian units.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = constants.rescaled(length=100.0, mass=1000.0)  # SI -> CGS
    coeff = math.sqrt(8.0) / k.bohr_radius * math.sqrt(2.0 * k.rydberg_energy / k.classical_electron_radius)
    return coeff * Z**2 * float(n) ** -3.5


def atoms_for_events(rate_per_atom: float, target_events_per_year: float) -> int:
    """Atoms needed for ``target`` absorptions per year, at least one."""
    if not rate_per_atom > 0:
        raise ValueError(f"rate per atom must be positive, got {rate_per_atom!r}")
    return max(1, math.ceil(target_events_per_year / (rate_per_atom * SECONDS_PER_YEAR)))


@dataclass(frozen=True)
class GwSource:
    name: str
    omega: float  # rad/s
    spindown_lifetime: float  # s
    los_velocity_amplitude: float  # m/s, diurnal
    amplitude: float | None = None
    flux: float | None = None  # W/m^2
    orbital_velocity_amplitude: float = 0.0  # m/s, annual

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"source omega must be positive, got {self.omega!r}")
        if (self.amplitude is None) == (self.flux is None):
            raise ValueError("give exactly one of amplitude or flux")
        if not self.spindown_lifetime > 0:
            raise ValueError("spindown lifetime must be positive")
        if self.los_velocity_amplitude < 0 or self.orbital_velocity_amplitude < 0:
            raise ValueError("velocity amplitudes must be non-negative")

    def wave_field(self, constants=CODATA) -> gw.WaveField:
        return gw.WaveField.monochromatic(self.omega, amplitude=self.amplitude, flux=self.flux, constants=constants)


class DutyCycle(NamedTuple):
    fraction_per_day: float
    dwell_per_crossing: float  # s
    in_band_time_per_day: float  # s
    required_velocity_stability: float  # m/s


def _band_fraction(doppler, low, high):
    # fraction of a period that D sin(theta) spends in [low, high]
    if doppler == 0:
        return 1.0 if low <= 0 <= high else 0.0
    u1 = min(max(low / doppler, -1.0), 1.0)
    u2 = min(max(high / doppler, -1.0), 1.0)
    return (math.asin(u2) - math.asin(u1)) / math.pi


def duty_cycle(source: GwSource, bandwidth_rel: float, resonance_offset: float = 0.0, constants=CODATA) -> DutyCycle:
    """Time the Doppler-shifted source line spends inside the atomic band.

    The line-of-sight velocity swings as ``v sin(2 pi t / day)``, so the
    relative shift ``D sin(theta)`` with ``D = v/c`` sweeps through a band of
    relative width ``b`` centred at ``resonance_offset``.  The band is crossed
    twice per day and the in-band fraction is ``(asin u2 - asin u1) / pi``,
    about ``b / (pi D)`` for a narrow band at zero offset.  A non-zero orbital
    amplitude moves the band centre through the year; the fraction is then
    the annual mean.
    """
    if not bandwidth_rel > 0:
        raise ValueError("bandwidth must be positive")
    c = constants.c
    doppler = source.los_velocity_amplitude / c
    half = 0.5 * bandwidth_rel
    stability = c * bandwidth_rel
    if source.orbital_velocity_amplitude > 0:
        phases = np.linspace(0.0, 2.0 * math.pi, 3600, endpoint=False)
        offsets = resonance_offset + source.orbital_velocity_amplitude / c * np.sin(phases)
        fraction = float(np.mean([_band_fraction(doppler, x - half, x + half) for x in offsets]))
    else:
        fraction = _band_fraction(doppler, resonance_offset - half, resonance_offset + half)
    in_band = fraction * SECONDS_PER_DAY
    if doppler == 0 or fraction >= 1.0:
        return DutyCycle(fraction, math.inf, in_band, stability)
    return DutyCycle(fraction, 0.5 * in_band, in_band, stability)


@dataclass(frozen=True)
class FeasibilityReport:
    source: str
    Z: int
    matched_n: int
    residual_detuning: float
    lower: str
    upper: str
    transition_omega: float
    circular_lifetime_years: float
    combined_lifetime_years: float
    bandwidth_rel: float
    rate_per_atom: float
    target_events_per_year: float
    atoms_for_target: int | None
    b_field_ceiling_gauss: float
    b_field_ceiling_tesla: float
    fraction_per_day: float
    dwell_per_crossing: float
    in_band_time_per_day: float
    required_velocity_stability: float
    source_bandwidth: float
    atomic_width: float
    monochromatic: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def monochromaticity(self) -> str:
        return "satisfied" if self.monochromatic else "violated"

    def as_dict(self) -> dict:
        out = asdict(self)
        out["notes"] = list(self.notes)
        out["monochromaticity"] = self.monochromaticity
        for key, value in out.items():
            if isinstance(value, float) and not math.isfinite(value):
                out[key] = None
        return out


def feasibility_report(
    source: GwSource, Z: int = 1, target_events_per_year: float = 3.0, model: str = "exact", constants=CODATA
) -> FeasibilityReport:
    """Compose resonance matching, absorption rate, atom budget, field ceiling and duty cycle."""
    match = match_principal_n(source.omega, Z, 1, model, constants)
    n = match.n
    lower, upper = gw.near_circular_pair(n, 1, Z)
    units = NormalizationSet(Z, constants)
    field_ = source.wave_field(constants)
    rate = gw.absorption_rate_monochromatic(lower, upper, field_, constants=constants)
    tau_pair = lifetimes.combined_lifetime(lower, upper) * units.tau_unit
    tau_circ = lifetimes.lifetime_bound(QuantumState.circular(n, Z)) * units.tau_unit
    bandwidth_rel = 2.0 * math.pi / (source.omega * tau_pair)  # 1 / (f tau)
    duty = duty_cycle(source, bandwidth_rel, constants=constants)
    b_gauss = b_field_ceiling(n, Z, constants)
    source_width = 1.0 / source.spindown_lifetime
    atomic_width = 1.0 / tau_pair
    notes = ["resonance needs integer n; residual detuning is in line widths"]
    atoms = atoms_for_events(rate, target_events_per_year) if rate > 0 else None
    if atoms is None:
        notes.append("zero absorption rate: no finite atom count reaches the target")
    monochromatic = source_width < atomic_width
    if not monochromatic:
        notes.append("source line is broader than the atomic line; the monochromatic rate is an overestimate")
    return FeasibilityReport(
        source=source.name,
        Z=Z,
        matched_n=n,
        residual_detuning=match.residual,
        lower=str(lower),
        upper=str(upper),
        transition_omega=match.omega_tilde_n * units.omega_unit,
        circular_lifetime_years=tau_circ / SECONDS_PER_YEAR,
        combined_lifetime_years=tau_pair / SECONDS_PER_YEAR,
        bandwidth_rel=bandwidth_rel,
        rate_per_atom=rate,
        target_events_per_year=target_events_per_year,
        atoms_for_target=atoms,
        b_field_ceiling_gauss=b_gauss,
        b_field_ceiling_tesla=b_gauss / GAUSS_PER_TESLA,
        fraction_per_day=duty.fraction_per_day,
        dwell_per_crossing=duty.dwell_per_crossing,
        in_band_time_per_day=duty.in_band_time_per_day,
        required_velocity_stability=duty.required_velocity_stability,
        source_bandwidth=source_width,
        atomic_width=atomic_width,
        monochromatic=monochromatic,
        notes=tuple(notes),
    )


# -- source catalogs -------------------------------------------------------

CATALOG_FIELDS = {
    "name": str,
    "omega_rad_per_s": float,
    "amplitude": float,
    "flux_w_per_m2": float,
    "spindown_years": float,
    "los_velocity_mps": float,
    "orbital_velocity_mps": float,
}
REQUIRED_FIELDS = ("name", "omega_rad_per_s", "spindown_years", "los_velocity_mps")


class CatalogError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_catalog(text: str) -> dict[str, GwSource]:
    """Parse a JSON-lines source catalog.

    One JSON object per line; blank lines and lines starting with ``#`` are
    skipped.  Unknown fields are rejected.
    """
    sources = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"invalid JSON ({exc.msg})", lineno) from None
        if not isinstance(record, dict):
            raise CatalogError("record must be a JSON object", lineno)
        unknown = sorted(set(record) - set(CATALOG_FIELDS))
        if unknown:
            raise CatalogError(f"unknown field(s): {', '.join(unknown)}", lineno)
        missing = [k for k in REQUIRED_FIELDS if k not in record]
        if missing:
            raise CatalogError(f"missing field(s): {', '.join(missing)}", lineno)
        values = {}
        for key, value in record.items():
            kind = CATALOG_FIELDS[key]
            if kind is float and (isinstance(value, bool) or not isinstance(value, (int, float))):
                raise CatalogError(f"field {key!r} must be a number", lineno)
            if kind is str and not isinstance(value, str):
                raise CatalogError(f"field {key!r} must be a string", lineno)
            values[key] = kind(value)
        if values["name"] in sources:
            raise CatalogError(f"duplicate source {values['name']!r}", lineno)
        try:
            source = GwSource(
                name=values["name"],
                omega=values["omega_rad_per_s"],
                spindown_lifetime=values["spindown_years"] * SECONDS_PER_YEAR,
                los_velocity_amplitude=values["los_velocity_mps"],
                amplitude=values.get("amplitude"),
                flux=values.get("flux_w_per_m2"),
                orbital_velocity_amplitude=values.get("orbital_velocity_mps", 0.0),
            )
        except ValueError as exc:
            raise CatalogError(str(exc), lineno) from None
        sources[source.name] = source
    return sources


def load_catalog(path: str | Path | None = None) -> dict[str, GwSource]:
    """Read a catalog file, or the bundled one when ``path`` is None."""
    if path is None:
        text = resources.files("rydgrav").joinpath("data/sources.jsonl").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(text)
