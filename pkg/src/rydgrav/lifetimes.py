"""Electromagnetic lifetimes, combined widths and the Lorentz line profile.

Lifetimes use the hydrogenic upper-bound approximation
``tau_nl <= (3/4) n^3 (l + 1/2)^2`` (dimensionless units), which runs at most
about ten percent above the true value.  Ground states are stable: they add no
width to a transition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hydrogenic import QuantumState


def lifetime_bound(state: QuantumState) -> float:
    """Dimensionless lifetime bound ``(3/4) n^3 (l + 1/2)^2``.

    The formula is evaluated for every state, including ``n = 1``; check
    ``state.is_ground`` (or use :func:`decay_width`) for the stable case.
    """
    n, l = state.n, state.l
    return 0.75 * float(n) ** 3 * (l + 0.5) ** 2


def decay_width(state: QuantumState) -> float:
    """Dimensionless width ``1 / tau``; zero for the ground state."""
    return 0.0 if state.is_ground else 1.0 / lifetime_bound(state)


def upper_lower(a: QuantumState, b: QuantumState) -> tuple[QuantumState, QuantumState]:
    """Order a pair as ``(upper, lower)``: larger ``n`` is higher, ties by larger ``l``."""
    return (b, a) if (b.n, b.l) > (a.n, a.l) else (a, b)


def combined_lifetime(a: QuantumState, b: QuantumState, rydberg: bool = False) -> float:
    """Dimensionless lifetime of the transition, ``(1/tau_a + 1/tau_b)^-1``.

    With ``rydberg=True`` the ``(n/n')^3`` factor is set to one, the
    simplification valid for ``delta_n << n``.
    """
    if a.is_ground and b.is_ground:
        raise ValueError("a pair of ground states has no width")
    if rydberg:
        if a.is_ground or b.is_ground:
            raise ValueError("the Rydberg simplification does not apply to ground-state pairs")
        ratio = ((a.l + 0.5) / (b.l + 0.5)) ** 2
        return lifetime_bound(a) / (1.0 + ratio)
    return 1.0 / (decay_width(a) + decay_width(b))


@dataclass(frozen=True)
class LineProfile:
    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"line width must be positive, got {self.width!r}")

    @classmethod
    def for_transition(cls, omega_tilde: float, a: QuantumState, b: QuantumState) -> "LineProfile":
        return cls(omega_tilde, 1.0 / combined_lifetime(a, b))


def lorentzian(omega, profile: LineProfile):
    """Unit-normalized Lorentzian ``(G/2pi) / ((w - w0)^2 + G^2/4)``."""
    half = 0.5 * profile.width
    return (profile.width / (2.0 * math.pi)) / ((omega - profile.center) ** 2 + half * half)


def lorentz_factor(omega, profile: LineProfile):
    """Lorentzian scaled to one at the line center."""
    half = 0.5 * profile.width
    return half * half / ((omega - profile.center) ** 2 + half * half)
