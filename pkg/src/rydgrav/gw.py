"""Gravitational-wave absorption and emission by one-electron atoms.

The central quantity is the transition factor

    f = C * I^2 * w^3 * tau

built from the angular factor ``C`` (see :mod:`rydgrav.angular`), the
normalized radial integral ``I``, the normalized transition frequency ``w``
and the normalized combined lifetime ``tau``.  Cross sections and rates are
``f`` times fundamental constants; for absorption the cross section contains
only the Planck length and the fine-structure constant.

Functions take the states as ``(lower, upper)`` except the emission-side ones
(:func:`spontaneous_gw_rate`, :func:`branching_ratio`), which follow the
emission direction ``(upper, lower)``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, replace
from functools import lru_cache

from . import angular, hydrogenic, lifetimes
from .constants import CODATA, NormalizationSet, PhysicalConstants
from .hydrogenic import QuantumState, RadialMethod

# Use delta_n / n^3 for the level spacing only below this delta_n / n.
RYDBERG_APPROX_THRESHOLD = 1e-2

# sigma_abs_profile warns beyond this relative detuning.
PROFILE_VALIDITY = 0.1


def omega_tilde(lower: QuantumState, upper: QuantumState) -> float:
    """Normalized angular frequency of the transition.

    ``delta_n / n^3`` in the Rydberg regime, the exact Bohr-level difference
    ``(1/n^2 - 1/n'^2) / 2`` otherwise.
    """
    dn = upper.n - lower.n
    if dn <= 0:
        raise ValueError(
            f"upper state must have larger n than the lower one (fine structure is not resolved): "
            f"{lower} -> {upper}"
        )
    n = lower.n
    if dn / n < RYDBERG_APPROX_THRESHOLD:
        return dn / float(n) ** 3
    return bohr_omega_tilde(n, upper.n)


def bohr_omega_tilde(n: int, n_upper: int) -> float:
    """``(1/n^2 - 1/n'^2) / 2`` without cancellation."""
    n, m = float(n), float(n_upper)
    return (m - n) * (m + n) / (2.0 * n * n * m * m)


@dataclass(frozen=True)
class TransitionFactor:
    lower: QuantumState
    upper: QuantumState
    c2: float
    radial: float
    omega_tilde: float
    tau_tilde: float
    radial_method: RadialMethod

    @property
    def f_value(self) -> float:
        return self.c2 * self.radial**2 * self.omega_tilde**3 * self.tau_tilde

    @property
    def bound_flag(self) -> bool:
        """True when the radial integral is a bound, making ``f`` an upper bound."""
        return self.radial_method is not RadialMethod.EXACT


@lru_cache(maxsize=4096)
def transition_factor(lower: QuantumState, upper: QuantumState, radial_mode: str = "auto") -> TransitionFactor:
    """Compose angular, radial, frequency and lifetime parts for ``lower -> upper``."""
    c2 = angular.reduced_c2(lower, upper)
    w = omega_tilde(lower, upper)
    radial = hydrogenic.radial_integral(lower, upper, radial_mode)
    tau = lifetimes.combined_lifetime(lower, upper)
    return TransitionFactor(lower, upper, c2, float(radial.value), w, tau, radial.method)


def _units(state, constants):
    return NormalizationSet(state.Z, constants)


def transition_omega(lower, upper, constants: PhysicalConstants = CODATA) -> float:
    """Physical angular frequency of the transition, rad/s."""
    return omega_tilde(lower, upper) * _units(lower, constants).omega_unit


def sigma_abs_max(lower, upper, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Peak absorption cross section ``(16 pi/15) L*^2 alpha^-3 Z^-2 f``."""
    f = transition_factor(lower, upper, radial_mode).f_value
    k = constants
    return 16.0 * math.pi / 15.0 * k.planck_length**2 * k.alpha**-3 * lower.Z**-2 * f


def sigma_via_branching(lower, upper, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Peak cross section from the branching ratio, ``2 pi c^2 (g'/g) w^-2 eta``."""
    eta = branching_ratio(upper, lower, radial_mode, constants)
    omega = transition_omega(lower, upper, constants)
    g_ratio = upper.degeneracy / lower.degeneracy
    return 2.0 * math.pi * constants.c**2 * g_ratio * eta / omega**2


def sigma_abs_profile(lower, upper, omega_t: float, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Cross section at normalized frequency ``omega_t`` near the resonance."""
    factor = transition_factor(lower, upper, radial_mode)
    center = factor.omega_tilde
    if abs(omega_t - center) > PROFILE_VALIDITY * center:
        warnings.warn(
            f"detuning {omega_t - center:.3g} is not small against the line frequency {center:.3g}; "
            "the resonance approximation is unreliable here",
            stacklevel=2,
        )
    profile = lifetimes.LineProfile(center, 1.0 / factor.tau_tilde)
    return sigma_abs_max(lower, upper, radial_mode, constants) * lifetimes.lorentz_factor(omega_t, profile)


def spontaneous_gw_rate(upper, lower, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Spontaneous graviton emission rate ``upper -> lower`` in 1/s.

    ``(4/15) (G m_e^2 / hbar c^5) w^5 (g_lower/g_upper) C I^2`` with ``I`` in m^2.
    """
    factor = transition_factor(lower, upper, radial_mode)
    k = constants
    units = _units(lower, k)
    omega = factor.omega_tilde * units.omega_unit
    radial = factor.radial * units.r2_unit
    g_ratio = lower.degeneracy / upper.degeneracy
    return 4.0 / 15.0 * k.G * k.m_e**2 / (k.hbar * k.c**5) * omega**5 * g_ratio * factor.c2 * radial**2


def branching_ratio(upper, lower, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Gravitational over electromagnetic decay probability of the transition.

    Evaluated entirely in normalized variables, independently of
    :func:`spontaneous_gw_rate`.
    """
    factor = transition_factor(lower, upper, radial_mode)
    k = constants
    g_ratio = lower.degeneracy / upper.degeneracy
    return (
        8.0 / 15.0 * k.grav_em_ratio * (k.alpha * lower.Z) ** 2 * g_ratio * factor.c2
        * factor.radial**2 * factor.omega_tilde**5 * factor.tau_tilde
    )


def scattering_cross_section(lower, upper, radial_mode="auto", constants: PhysicalConstants = CODATA) -> float:
    """Peak re-emission (scattering) cross section ``eta * sigma_tot``."""
    eta = branching_ratio(upper, lower, radial_mode, constants)
    return eta * sigma_abs_max(lower, upper, radial_mode, constants) / (1.0 - eta)


# -- wave fields -------------------------------------------------------------


class FieldMode(str, enum.Enum):
    MONOCHROMATIC = "monochromatic"
    SPECTRAL = "broadband_spectral"


@dataclass(frozen=True)
class WaveField:
    """An incoming gravitational wave.

    Monochromatic fields carry the angular frequency, both polarization
    amplitudes and the total flux (W/m^2), kept consistent by
    :func:`amplitude_flux_convert`.  Spectral fields carry the flux density at
    the resonance in W/m^2 per rad/s.
    """

    mode: FieldMode
    omega: float | None = None
    a_plus: float | None = None
    a_cross: float | None = None
    flux: float | None = None
    spectral_flux: float | None = None

    @classmethod
    def monochromatic(cls, omega, amplitude=None, flux=None, a_plus=None, a_cross=None, constants=CODATA):
        if amplitude is not None:
            if a_plus is not None or a_cross is not None:
                raise ValueError("give either a characteristic amplitude or the two polarizations")
            a_plus = a_cross = amplitude
        given = (a_plus is not None or a_cross is not None) + (flux is not None)
        if given != 1:
            raise ValueError("exactly one of amplitude(s) or flux must be given")
        field = cls(FieldMode.MONOCHROMATIC, omega, a_plus, a_cross, flux)
        return amplitude_flux_convert(field, constants)

    @classmethod
    def spectral(cls, spectral_flux, omega=None):
        if spectral_flux < 0:
            raise ValueError("spectral flux must be non-negative")
        return cls(FieldMode.SPECTRAL, omega=omega, spectral_flux=spectral_flux)

    @property
    def amplitude_sq_sum(self) -> float:
        return (self.a_plus or 0.0) ** 2 + (self.a_cross or 0.0) ** 2

    @property
    def characteristic_amplitude(self) -> float:
        """RMS of the two polarization amplitudes."""
        return math.sqrt(0.5 * self.amplitude_sq_sum)


def amplitude_flux_convert(field: WaveField, constants: PhysicalConstants = CODATA) -> WaveField:
    """Fill in whichever of (amplitudes, flux) a monochromatic field is missing.

    ``S = c^3 w^2 (|A+|^2 + |Ax|^2) / (32 pi G)``; from a flux the two
    amplitudes are set equal, ``|A| = sqrt(16 pi G S / (c^3 w^2))``.
    """
    if field.mode is not FieldMode.MONOCHROMATIC:
        raise ValueError("amplitude/flux conversion applies to monochromatic fields")
    if field.omega is None or not field.omega > 0:
        raise ValueError(f"conversion needs a positive angular frequency, got {field.omega!r}")
    k = constants
    if field.a_plus is not None or field.a_cross is not None:
        a_plus, a_cross = field.a_plus or 0.0, field.a_cross or 0.0
        flux = k.c**3 * field.omega**2 * (a_plus**2 + a_cross**2) / (32.0 * math.pi * k.G)
        return replace(field, a_plus=a_plus, a_cross=a_cross, flux=flux)
    if field.flux is None or field.flux < 0:
        raise ValueError("field needs non-negative amplitudes or flux")
    amplitude = math.sqrt(16.0 * math.pi * k.G * field.flux / (k.c**3 * field.omega**2))
    return replace(field, a_plus=amplitude, a_cross=amplitude)


def absorption_rate_broadband(lower, upper, field: WaveField, radial_mode="auto", constants=CODATA) -> float:
    """Resonant absorption rate per unit angular frequency, (1/s) / (rad/s).

    ``(16 pi/15) L*^2 alpha^-5 Z^-4 (S(w0) / m_e c^2) w~^-1 f``.
    """
    if field.spectral_flux is None:
        raise ValueError("broadband rate needs the spectral flux at the resonance")
    factor = transition_factor(lower, upper, radial_mode)
    k = constants
    return (
        16.0 * math.pi / 15.0 * k.planck_length**2 * k.alpha**-5 * lower.Z**-4
        * field.spectral_flux / k.electron_mass_energy / factor.omega_tilde * factor.f_value
    )


def absorption_rate_monochromatic(lower, upper, field: WaveField, radial_mode="auto", constants=CODATA) -> float:
    """Total absorption rate (1/s) for a wave narrower than the atomic line.

    ``(1/30) (c/r0) (|Ax|^2 + |A+|^2) w~ f``.  The narrow-band condition is the
    caller's responsibility; :mod:`rydgrav.detector` checks it for sources.
    """
    if field.a_plus is None and field.a_cross is None:
        raise ValueError("monochromatic rate needs polarization amplitudes")
    factor = transition_factor(lower, upper, radial_mode)
    k = constants
    return k.c / k.classical_electron_radius / 30.0 * field.amplitude_sq_sum * factor.omega_tilde * factor.f_value


def circular_monochromatic_rate(n, l_plus_half, c2, field: WaveField, dn=1, constants=CODATA) -> float:
    """Near-circular large-``n`` form ``(1/80)(c/r0) sum|A|^2 C dn^4 (l+1/2)^2 / n``."""
    k = constants
    return k.c / k.classical_electron_radius / 80.0 * field.amplitude_sq_sum * c2 * dn**4 * l_plus_half**2 / n


def circular_broadband_rate(n, l_plus_half, c2, field: WaveField, dn=1, Z=1, constants=CODATA) -> float:
    """Near-circular form ``(2 pi/5) L*^2 alpha^-5 Z^-4 C (S/m_e c^2) dn^2 n^5 (l+1/2)^2``."""
    k = constants
    return (
        2.0 * math.pi / 5.0 * k.planck_length**2 * k.alpha**-5 * Z**-4 * c2
        * field.spectral_flux / k.electron_mass_energy * dn**2 * float(n) ** 5 * l_plus_half**2
    )


def circular_sigma_max(n, l_plus_half, c2, dn=1, Z=1, constants=CODATA) -> float:
    """Near-circular form ``(2 pi/5) L*^2 alpha^-3 Z^-2 C dn^3 (n (l+1/2))^2``."""
    k = constants
    return 2.0 * math.pi / 5.0 * k.planck_length**2 * k.alpha**-3 * Z**-2 * c2 * dn**3 * (n * l_plus_half) ** 2


def cross_section_ratio(lower, upper, radial_mode="auto", constants=CODATA) -> float:
    """Peak absorption cross section over the geometric one, ``4 pi <r^2>``.

    ``(8/15) (G m_e^2/e^2) f / ([5n^2 + 1 - 3l(l+1)] n^2)``; only ``G``, ``e``
    and ``m_e`` survive, no ``hbar``.
    """
    f = transition_factor(lower, upper, radial_mode).f_value
    n, l = lower.n, lower.l
    return 8.0 / 15.0 * constants.grav_em_ratio * f / ((5 * n * n + 1 - 3 * l * (l + 1)) * float(n) ** 2)


def near_circular_pair(n: int, dn: int = 1, Z: int = 1) -> tuple[QuantumState, QuantumState]:
    """The ``delta_j = +2`` pair closest to a circular-to-circular transition.

    Lower ``(n, l = n+dn-3, j = l+1/2)``, upper ``(n+dn, l+2, j+2)``; the upper
    state is circular.  A literal circular pair is forbidden because ``l``
    would have to grow by one.
    """
    l = n + dn - 3
    if l < 0 or l > n - 1:
        raise ValueError(f"no near-circular delta_j=+2 pair for n={n}, dn={dn}")
    lower = QuantumState(n, l, l + 0.5, Z)
    upper = QuantumState(n + dn, l + 2, l + 2.5, Z)
    return lower, upper


def classical_limit_check(n: int, l: int | None = None, dn: int = 1, Z: int = 1, constants=CODATA) -> float:
    """Quantum over classical spontaneous emission rate for a circular orbit.

    The circular state ``(n, n-1)`` decays by ``delta_j = -2`` to
    ``(n - dn, n - 3)``.  The classical rate is the quadrupole power of a
    charge on a circle of radius ``r = n_lower^2 a0 / Z`` divided by
    ``hbar w``.  The ratio tends to 1.
    """
    if l is None:
        l = n - 1
    if l != n - 1:
        raise ValueError(f"classical limit check needs a circular state (l = n-1), got n={n}, l={l}")
    if n < 100:
        raise ValueError("classical limit check is meaningful for n >= 100")
    upper = QuantumState.circular(n, Z)
    lower = QuantumState(n - dn, l - 2, upper.j - 2, Z)
    k = constants
    gamma_q = spontaneous_gw_rate(upper, lower, constants=k)
    omega = transition_omega(lower, upper, k)
    r = float(lower.n) ** 2 * _units(lower, k).length_unit
    gamma_cl = 0.1 * k.G * k.m_e**2 / (k.hbar * k.c**5) * omega**5 * r**4
    return gamma_q / gamma_cl
