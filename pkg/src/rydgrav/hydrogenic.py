"""Radial structure of quasi-hydrogenic states.

All lengths are in units of ``a0 / Z`` so the core charge drops out of every
radial quantity here.  Radial functions follow the textbook sign convention,
positive as ``r -> 0``:

    R_nl(r) = N_nl (2r/n)^l exp(-r/n) L^{2l+1}_{n-l-1}(2r/n)

Off-diagonal radial integrals are evaluated exactly (generalized Gauss-Laguerre
quadrature) for ``n <= EXACT_N_CUTOFF``.  Above the cutoff only the
near-circular asymptote or the Schwarz bracket is available.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import eval_genlaguerre

EXACT_N_CUTOFF = 64

# States with at most this many radial nodes count as "near circular".
NEAR_CIRCULAR_MAX_NODES = 2


def parse_j(value) -> Fraction:
    """Coerce a total angular momentum to an exact half-integer.

    Accepts Fractions, ints, floats that are exact half-integers, and strings
    such as ``"7/2"`` or ``"3.5"``.
    """
    try:
        j = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError, OverflowError) as exc:
        raise ValueError(f"cannot interpret j={value!r} as a half-integer") from exc
    if (2 * j).denominator != 1:
        raise ValueError(f"j={value!r} is not a half-integer")
    return j


@dataclass(frozen=True)
class QuantumState:
    """Fine-structure level ``(n, l, j)`` of a one-electron atom with core charge ``Z``."""

    n: int
    l: int
    j: Fraction
    Z: int = 1

    def __post_init__(self):
        for name in ("n", "l", "Z"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        object.__setattr__(self, "j", parse_j(self.j))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.Z < 1:
            raise ValueError(f"Z must be >= 1, got {self.Z}")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"l must satisfy 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if self.j not in (self.l - Fraction(1, 2), self.l + Fraction(1, 2)) or self.j < 0:
            raise ValueError(f"j must be l +/- 1/2 and non-negative, got l={self.l}, j={self.j}")

    @classmethod
    def circular(cls, n: int, Z: int = 1) -> "QuantumState":
        return cls(n, n - 1, Fraction(2 * n - 1, 2), Z)

    @property
    def two_j(self) -> int:
        return int(2 * self.j)

    @property
    def degeneracy(self) -> int:
        return self.two_j + 1

    @property
    def radial_nodes(self) -> int:
        return self.n - self.l - 1

    @property
    def is_ground(self) -> bool:
        return self.n == 1

    def __str__(self):
        return f"(n={self.n}, l={self.l}, j={self.j}, Z={self.Z})"


class RadialMethod(str, enum.Enum):
    EXACT = "exact_quadrature"
    ASYMPTOTIC = "asymptotic_circular"
    SCHWARZ = "schwarz_bracket"


@dataclass(frozen=True)
class RadialIntegralResult:
    """Normalized radial integral ``<R_a| r^2 |R_b>`` in units of ``(a0/Z)^2``.

    For ``SCHWARZ`` results ``value`` is the Schwarz bound and the true integral
    lies somewhere in ``[-value, value]``.
    """

    value: float
    method: RadialMethod
    abs_error_estimate: float

    @property
    def is_bound(self) -> bool:
        return self.method is not RadialMethod.EXACT

    @property
    def bracket(self) -> tuple[float, float]:
        if self.method is RadialMethod.SCHWARZ:
            return (-self.value, self.value)
        return (self.value - self.abs_error_estimate, self.value + self.abs_error_estimate)


def mean_r2(state: QuantumState) -> float:
    """``<r^2>_nl`` in units of ``(a0/Z)^2``."""
    n, l = state.n, state.l
    return 0.5 * n * n * (5 * n * n + 1 - 3 * l * (l + 1))


def i_diagonal(n: int, l: int) -> float:
    """``<r^2>_nl / n^4``; tends to 1 for circular states."""
    return 2.5 + 0.5 / n**2 - 1.5 * l * (l + 1) / n**2


def schwarz_bound(a: QuantumState, b: QuantumState) -> float:
    """Upper bound on ``|<R_a| r^2 |R_b>|`` from the Cauchy-Schwarz inequality."""
    _check_same_charge(a, b)
    return math.sqrt(mean_r2(a) * mean_r2(b))


def asymptotic_radial(a: QuantumState, b: QuantumState) -> float:
    """``n^4 sqrt(i_a i_b)`` with ``n`` the smaller principal number."""
    n = min(a.n, b.n)
    return float(n) ** 4 * math.sqrt(i_diagonal(a.n, a.l) * i_diagonal(b.n, b.l))


def is_near_circular(state: QuantumState) -> bool:
    return state.radial_nodes <= NEAR_CIRCULAR_MAX_NODES


# -- quadrature machinery ---------------------------------------------------


@lru_cache(maxsize=512)
def gauss_laguerre(n_nodes: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and log-weights for ``int_0^inf x^alpha e^-x f(x) dx``.

    Nodes come from the Laguerre Jacobi matrix.  Weights are normalized to sum
    to one (the caller multiplies by ``Gamma(alpha + 1)``) and returned as
    logarithms: the outer weights underflow long before the integrand they
    multiply becomes negligible.  Arrays are read-only.
    """
    k = np.arange(n_nodes, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    log_weights = -_log_christoffel_sum(nodes, diag, off)
    nodes.setflags(write=False)
    log_weights.setflags(write=False)
    return nodes, log_weights


def _log_christoffel_sum(x, diag, off):
    # log(sum_k p_k(x)^2) for the orthonormal polynomials of the Jacobi matrix,
    # rescaling on the fly so large nodes do not overflow.
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    total = np.ones_like(x)
    log_scale = np.zeros_like(x)
    for k in range(len(diag) - 1):
        p_next = ((x - diag[k]) * p - (off[k - 1] * p_prev if k else 0.0)) / off[k]
        p_prev, p = p, p_next
        total += p * p
        big = np.abs(p) > 1e100
        if big.any():
            p[big] *= 1e-100
            p_prev[big] *= 1e-100
            total[big] *= 1e-200
            log_scale[big] += 200.0 * math.log(10.0)
    return np.log(total) + log_scale


def _log_norm(n: int, l: int) -> float:
    # log of N_nl = sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!))
    return 0.5 * (3.0 * math.log(2.0 / n) + math.lgamma(n - l) - math.log(2.0 * n) - math.lgamma(n + l + 1))


def radial_function(n: int, l: int, r) -> np.ndarray:
    """Normalized hydrogenic radial function ``R_nl(r)``, ``r`` in units of ``a0/Z``."""
    r = np.asarray(r, dtype=float)
    rho = 2.0 * r / n
    log_env = _log_norm(n, l) - 0.5 * rho
    if l > 0:
        with np.errstate(divide="ignore"):
            log_env = log_env + l * np.log(rho)
    env = np.exp(log_env)
    return env * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)


def _quadrature(na, la, nb, lb, power, n_nodes):
    s = 1.0 / na + 1.0 / nb
    alpha = la + lb + 2 + power
    x, log_w = gauss_laguerre(n_nodes, float(alpha))
    poly = eval_genlaguerre(na - la - 1, 2 * la + 1, 2.0 * x / (s * na)) * eval_genlaguerre(
        nb - lb - 1, 2 * lb + 1, 2.0 * x / (s * nb)
    )
    log_pref = (
        _log_norm(na, la)
        + _log_norm(nb, lb)
        + la * math.log(2.0 / na)
        + lb * math.log(2.0 / nb)
        - (alpha + 1) * math.log(s)
        + math.lgamma(alpha + 1)
    )
    with np.errstate(divide="ignore"):
        terms = np.sign(poly) * np.exp(log_w + log_pref + np.log(np.abs(poly)))
    return math.fsum(terms), float(np.sum(np.abs(terms)))


def radial_moment(a: QuantumState, b: QuantumState, power: int = 2) -> tuple[float, float]:
    """``int_0^inf r^(2+power) R_a R_b dr`` by exact Gauss-Laguerre quadrature.

    Returns ``(value, abs_error_estimate)``.  Exact for any ``power >= -2 - la - lb``
    because the integrand is a polynomial times the quadrature weight.
    """
    _check_same_charge(a, b)
    if max(a.n, b.n) > EXACT_N_CUTOFF:
        raise NotImplementedError(f"exact radial integrals are limited to n <= {EXACT_N_CUTOFF}")
    # canonical ordering makes the result exactly symmetric in (a, b)
    (na, la), (nb, lb) = sorted([(a.n, a.l), (b.n, b.l)])
    n_nodes = 2 * (na + nb) + 8
    value, magnitude = _quadrature(na, la, nb, lb, power, n_nodes)
    check, _ = _quadrature(na, la, nb, lb, power, n_nodes + 4)
    err = abs(value - check) + 8 * np.finfo(float).eps * magnitude
    return value, err


def radial_integral(a: QuantumState, b: QuantumState, mode: str = "auto") -> RadialIntegralResult:
    """Normalized quadrupole radial integral ``<R_a| r^2 |R_b>``.

    ``mode`` is ``"exact"``, ``"asymptotic"`` or ``"auto"``.  In auto mode exact
    quadrature is used up to the cutoff; above it near-circular pairs get the
    circular-orbit asymptote and anything else gets the Schwarz bracket.
    """
    _check_same_charge(a, b)
    if mode not in ("auto", "exact", "asymptotic"):
        raise ValueError(f"unknown radial mode {mode!r}")
    within = max(a.n, b.n) <= EXACT_N_CUTOFF
    if mode == "exact" or (mode == "auto" and within):
        if not within:
            raise NotImplementedError(
                f"exact radial integral requested for n={max(a.n, b.n)} > cutoff {EXACT_N_CUTOFF}"
            )
        value, err = radial_moment(a, b, 2)
        return RadialIntegralResult(value, RadialMethod.EXACT, err)
    if mode == "asymptotic" or (is_near_circular(a) and is_near_circular(b)):
        value = asymptotic_radial(a, b)
        n = min(a.n, b.n)
        return RadialIntegralResult(value, RadialMethod.ASYMPTOTIC, 3.0 * value / n)
    bound = schwarz_bound(a, b)
    return RadialIntegralResult(bound, RadialMethod.SCHWARZ, bound)


def _check_same_charge(a, b):
    if a.Z != b.Z:
        raise ValueError(f"states belong to different core charges: Z={a.Z} vs Z={b.Z}")
