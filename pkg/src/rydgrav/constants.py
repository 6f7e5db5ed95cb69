"""Physical constants, atomic normalization units and unit conversions.

Everything downstream works in dimensionless "tilde" quantities:

* angular frequencies in units of ``m_e c^2 (alpha Z)^2 / hbar`` (2 Ryd Z^2 / hbar),
* lifetimes in units of ``2 hbar / (m_e c^2 alpha^5 Z^4)``,
* lengths in units of ``a0 / Z``.

Physical units enter only through this module.  Electromagnetic quantities use
the Gaussian convention ``e^2 = alpha hbar c`` so that the same expressions hold
in any consistent mechanical unit system (SI, CGS, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property

from scipy import constants as _codata

SECONDS_PER_YEAR = _codata.Julian_year  # 3.15576e7 s
SECONDS_PER_DAY = 86400.0
GAUSS_PER_TESLA = 1.0e4


@dataclass(frozen=True)
class PhysicalConstants:
    """A consistent set of fundamental constants.

    Only ``hbar``, ``c``, ``G``, ``m_e`` and ``alpha`` are stored; every other
    constant is derived from them, which keeps the set mutually consistent in
    whatever unit system the primaries are expressed in.
    """

    hbar: float = _codata.hbar  # J s
    c: float = _codata.c  # m / s
    G: float = _codata.G  # m^3 / (kg s^2)
    m_e: float = _codata.m_e  # kg
    alpha: float = _codata.alpha

    @cached_property
    def e2(self) -> float:
        """Gaussian squared charge ``e^2 = alpha hbar c`` (energy x length)."""
        return self.alpha * self.hbar * self.c

    @cached_property
    def planck_length(self) -> float:
        return math.sqrt(self.hbar * self.G / self.c**3)

    @cached_property
    def classical_electron_radius(self) -> float:
        return self.e2 / (self.m_e * self.c**2)

    @cached_property
    def electron_mass_energy(self) -> float:
        return self.m_e * self.c**2

    @cached_property
    def bohr_radius(self) -> float:
        return self.hbar / (self.m_e * self.c * self.alpha)

    @cached_property
    def rydberg_energy(self) -> float:
        return 0.5 * self.m_e * self.c**2 * self.alpha**2

    @cached_property
    def grav_em_ratio(self) -> float:
        """``m_e^2 G / e^2``: gravitational over electrostatic attraction."""
        return self.m_e**2 * self.G / self.e2

    def rescaled(self, length: float = 1.0, mass: float = 1.0, time: float = 1.0) -> "PhysicalConstants":
        """Express the same constants in other units.

        ``length``, ``mass`` and ``time`` are the number of new units per old
        unit (e.g. ``length=100, mass=1000`` converts SI to CGS).
        """
        return replace(
            self,
            hbar=self.hbar * mass * length**2 / time,
            c=self.c * length / time,
            G=self.G * length**3 / (mass * time**2),
            m_e=self.m_e * mass,
        )


CODATA = PhysicalConstants()
CGS = CODATA.rescaled(length=100.0, mass=1000.0)

# Values as printed in the source publication; kept for reproduction checks.
PAPER_VALUES = {
    "planck_length": 1.616e-35,  # m
    "classical_electron_radius": 2.817e-15,  # m
    "grav_em_ratio": 2.4e-43,
    "omega_unit": 4.134e16,  # 1/s, Z = 1
    "tau_unit": 1.245e-10,  # s, Z = 1
    "b_field_coefficient": 6.6e9,  # gauss, Z = 1
}


@dataclass(frozen=True)
class NormalizationSet:
    """Atomic units for one core charge ``Z``."""

    Z: int = 1
    constants: PhysicalConstants = CODATA

    def __post_init__(self):
        _check_charge(self.Z)

    @property
    def omega_unit(self) -> float:
        """``m_e c^2 (alpha Z)^2 / hbar`` in rad/s."""
        k = self.constants
        return k.electron_mass_energy * (k.alpha * self.Z) ** 2 / k.hbar

    @property
    def tau_unit(self) -> float:
        """``2 hbar / (m_e c^2 alpha^5 Z^4)`` in seconds."""
        k = self.constants
        return 2.0 * k.hbar / (k.electron_mass_energy * k.alpha**5 * self.Z**4)

    @property
    def length_unit(self) -> float:
        return self.constants.bohr_radius / self.Z

    @property
    def r2_unit(self) -> float:
        return self.length_unit**2


def _check_charge(Z):
    if not isinstance(Z, int) or isinstance(Z, bool) or Z < 1:
        raise ValueError(f"core charge Z must be a positive integer, got {Z!r}")


def _check_positive(name, value):
    if not value > 0 or not math.isfinite(value):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


def to_physical_omega(omega_tilde: float, Z: int = 1, constants: PhysicalConstants = CODATA) -> float:
    """Dimensionless angular frequency -> rad/s."""
    _check_positive("omega_tilde", omega_tilde)
    return omega_tilde * NormalizationSet(Z, constants).omega_unit


def from_physical_omega(omega: float, Z: int = 1, constants: PhysicalConstants = CODATA) -> float:
    _check_positive("omega", omega)
    return omega / NormalizationSet(Z, constants).omega_unit


def to_physical_lifetime(tau_tilde: float, Z: int = 1, constants: PhysicalConstants = CODATA) -> float:
    """Dimensionless lifetime -> seconds."""
    _check_positive("tau_tilde", tau_tilde)
    return tau_tilde * NormalizationSet(Z, constants).tau_unit


def from_physical_lifetime(tau: float, Z: int = 1, constants: PhysicalConstants = CODATA) -> float:
    _check_positive("tau", tau)
    return tau / NormalizationSet(Z, constants).tau_unit
