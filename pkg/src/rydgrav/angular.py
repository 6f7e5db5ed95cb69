"""Angular and spin factors for rank-2 (quadrupole) transitions.

``reduced_c2`` evaluates the closed-form table of squared reduced matrix
elements ``C = |(1/2 l' j'|| C^(2) ||1/2 l j)|^2 / (2j + 1)`` in exact rational
arithmetic.  ``reduced_c2_oracle`` recomputes the same quantity from
Clebsch-Gordan coefficients and Gaunt integrals and exists to cross-check the
table.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hydrogenic import QuantumState

HALF = Fraction(1, 2)


class Rule(str, enum.Enum):
    DELTA_J = "|delta_j| <= 2"
    DELTA_L = "delta_l in {0, +-2}"
    L_SUM = "l + l' >= 2"
    PARITY_COLUMN = "delta_j parity matches j-l pairing"
    CHARGE = "same core charge"


@dataclass(frozen=True)
class SelectionRuleOutcome:
    allowed: bool
    delta_j: int
    delta_l: int
    violations: tuple[Rule, ...] = ()

    @property
    def reason(self) -> str:
        return "; ".join(v.value for v in self.violations)


def same_parity_column(a: QuantumState, b: QuantumState) -> bool:
    """True when ``j - l`` has the same sign in both states."""
    return (a.j - a.l) == (b.j - b.l)


def selection_rules(a: QuantumState, b: QuantumState) -> SelectionRuleOutcome:
    dj = b.j - a.j
    dl = b.l - a.l
    violations = []
    if a.Z != b.Z:
        violations.append(Rule.CHARGE)
    if abs(dj) > 2:
        violations.append(Rule.DELTA_J)
    if dl not in (-2, 0, 2):
        violations.append(Rule.DELTA_L)
    if a.l + b.l < 2:
        violations.append(Rule.L_SUM)
    # even delta_j needs the same j-l pairing, odd delta_j the flipped one
    if not violations and (dj % 2 == 0) != same_parity_column(a, b):
        violations.append(Rule.PARITY_COLUMN)
    return SelectionRuleOutcome(not violations, int(dj), int(dl), tuple(violations))


def _require_allowed(a, b):
    outcome = selection_rules(a, b)
    if not outcome.allowed:
        raise ValueError(f"transition {a} -> {b} is forbidden: {outcome.reason}")
    return outcome


def reduced_c2_exact(a: QuantumState, b: QuantumState) -> Fraction:
    """Table value of ``C_{lj}^{l'j'}(2)`` as an exact fraction (``j`` is ``a.j``)."""
    outcome = _require_allowed(a, b)
    j = a.j
    dj = outcome.delta_j
    same = same_parity_column(a, b)
    if dj == 2:
        return Fraction(6 * (2 * j + 3) * (2 * j + 5), 1) / (64 * (j + 2) * (j + 1)) if same else Fraction(0)
    if dj == -2:
        return Fraction(6 * (2 * j - 1) * (2 * j - 3), 1) / (64 * j * (j - 1)) if same else Fraction(0)
    if dj == 1:
        return Fraction(0) if same else 6 * (2 * j + 3) / (32 * (j + 2) * (j + 1) * j)
    if dj == -1:
        return Fraction(0) if same else 6 * (2 * j - 1) / (32 * (j + 1) * j * (j - 1))
    return (2 * j + 3) * (2 * j - 1) / (16 * (j + 1) * j) if same else Fraction(0)


def reduced_c2(a: QuantumState, b: QuantumState) -> float:
    return float(reduced_c2_exact(a, b))


def degeneracy_weighted_c2(lower: QuantumState, upper: QuantumState) -> float:
    """``(g_lower / g_upper) C``; tends to 3/8 for delta_j = +2 at large j."""
    c = reduced_c2_exact(lower, upper)
    return float(Fraction(lower.degeneracy, upper.degeneracy) * c)


# -- independent Wigner-algebra route --------------------------------------


def _fact(x: Fraction) -> int:
    return math.factorial(int(x))


@lru_cache(maxsize=None)
def wigner_3j(j1, j2, j3, m1, m2, m3) -> float:
    """Wigner 3j symbol by the Racah formula; arguments are Fractions."""
    if m1 + m2 + m3 != 0:
        return 0.0
    if not abs(j1 - j2) <= j3 <= j1 + j2:
        return 0.0
    if abs(m1) > j1 or abs(m2) > j2 or abs(m3) > j3:
        return 0.0
    for j, m in ((j1, m1), (j2, m2), (j3, m3)):
        if (j - m).denominator != 1:
            return 0.0
    tri = Fraction(
        _fact(j1 + j2 - j3) * _fact(j1 - j2 + j3) * _fact(-j1 + j2 + j3),
        _fact(j1 + j2 + j3 + 1),
    )
    pre = tri * (
        _fact(j1 + m1) * _fact(j1 - m1) * _fact(j2 + m2) * _fact(j2 - m2) * _fact(j3 + m3) * _fact(j3 - m3)
    )
    kmin = int(max(0, j2 - j3 - m1, j1 - j3 + m2))
    kmax = int(min(j1 + j2 - j3, j1 - m1, j2 + m2))
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            math.factorial(k)
            * _fact(j1 + j2 - j3 - k)
            * _fact(j1 - m1 - k)
            * _fact(j2 + m2 - k)
            * _fact(j3 - j2 + m1 + k)
            * _fact(j3 - j1 - m2 + k)
        )
        total += Fraction((-1) ** k, den)
    phase = -1 if int(j1 - j2 - m3) % 2 else 1
    # sign(total) * sqrt(pre * total^2), exactly rounded
    value = math.sqrt(pre * total * total)
    return phase * value * (1 if total >= 0 else -1)


def clebsch_gordan(j1, m1, j2, m2, j, m) -> float:
    """``<j1 m1; j2 m2 | j m>``."""
    phase = -1 if int(j1 - j2 + m) % 2 else 1
    return phase * math.sqrt(2 * j + 1) * wigner_3j(j1, j2, j, m1, m2, -m)


def gaunt_c2(l1, m1, l2, m2, q) -> float:
    """``<l1 m1| C^2_q |l2 m2>`` with ``C^2_q = sqrt(4 pi / 5) Y_2q``."""
    phase = -1 if int(m1) % 2 else 1
    two = Fraction(2)
    return (
        phase
        * math.sqrt((2 * l1 + 1) * (2 * l2 + 1))
        * wigner_3j(l1, two, l2, -m1, q, m2)
        * wigner_3j(l1, two, l2, Fraction(0), Fraction(0), Fraction(0))
    )


def _coupled_element(lp, jp, mp, l, j, m, q) -> float:
    # <l' 1/2 j' m'| C^2_q |l 1/2 j m>, uncoupling the spin (the operator is spin-blind)
    total = 0.0
    for ms in (-HALF, HALF):
        ml, mlp = m - ms, mp - ms
        if abs(ml) > l or abs(mlp) > lp:
            continue
        total += (
            clebsch_gordan(lp, mlp, HALF, ms, jp, mp)
            * clebsch_gordan(l, ml, HALF, ms, j, m)
            * gaunt_c2(lp, mlp, l, ml, q)
        )
    return total


def reduced_c2_oracle(a: QuantumState, b: QuantumState) -> float:
    """``(2j+1)^-1 sum_{m m' q} |<b m'| C^2_q |a m>|^2`` from first principles."""
    if a.Z != b.Z:
        raise ValueError("states belong to different core charges")
    l, j = Fraction(a.l), a.j
    lp, jp = Fraction(b.l), b.j
    total = 0.0
    for two_m in range(-a.two_j, a.two_j + 1, 2):
        m = Fraction(two_m, 2)
        for q in range(-2, 3):
            mp = m + q
            if abs(mp) > jp:
                continue
            element = _coupled_element(lp, jp, mp, l, j, m, Fraction(q))
            total += element * element
    return total / (2 * j + 1)
