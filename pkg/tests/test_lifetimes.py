import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from conftest import states
from rydgrav.constants import SECONDS_PER_YEAR, NormalizationSet, to_physical_lifetime
from rydgrav.hydrogenic import QuantumState
from rydgrav.lifetimes import (
    LineProfile,
    combined_lifetime,
    decay_width,
    lifetime_bound,
    lorentz_factor,
    lorentzian,
    upper_lower,
)


def s(n, l):
    return QuantumState(n, l, l + Fraction(1, 2))


def test_two_p_bound_brackets_measured_lifetime():
    tau = lifetime_bound(s(2, 1))
    assert tau == 13.5
    seconds = to_physical_lifetime(tau)
    assert seconds == pytest.approx(1.68e-9, rel=5e-3)
    assert 1.596e-9 < seconds < 1.596e-9 * 1.1  # measured 2p lifetime, bound within ten percent above


def test_crab_state_lifetime():
    n = 47746
    tau = lifetime_bound(s(n, n - 1))
    assert tau == pytest.approx(1.861e23, rel=1e-3)
    assert to_physical_lifetime(tau) / SECONDS_PER_YEAR == pytest.approx(7.35e5, rel=1e-2)


def test_ground_state_is_stable():
    g = s(1, 0)
    assert lifetime_bound(g) == pytest.approx(0.1875)
    assert decay_width(g) == 0.0
    assert combined_lifetime(g, s(3, 2)) == lifetime_bound(s(3, 2))
    with pytest.raises(ValueError):
        combined_lifetime(g, g)
    with pytest.raises(ValueError):
        combined_lifetime(g, s(3, 2), rydberg=True)


def test_combined_examples():
    a = s(5, 3)
    assert combined_lifetime(a, a) == pytest.approx(lifetime_bound(a) / 2, rel=1e-15)
    n = 10**4
    lower, upper = s(n, n - 1), s(n + 1, n + 1 - 1)
    assert combined_lifetime(lower, upper) / (0.375 * n**3 * (n - 0.5) ** 2) == pytest.approx(1, rel=5e-4)
    crab_lo, crab_hi = s(47746, 47745), s(47747, 47746)
    years = to_physical_lifetime(combined_lifetime(crab_lo, crab_hi)) / SECONDS_PER_YEAR
    assert years == pytest.approx(3.67e5, rel=1e-2)


def test_full_formula_matches_paper_bracket():
    lower, upper = s(20, 15), s(23, 17)
    n, l, m, lp = 20, 15, 23, 17
    bracket = 1 + (n / m) ** 3 * ((l + 0.5) / (lp + 0.5)) ** 2
    assert combined_lifetime(lower, upper) == pytest.approx(lifetime_bound(lower) / bracket, rel=1e-14)
    simplified = lifetime_bound(lower) / (1 + ((l + 0.5) / (lp + 0.5)) ** 2)
    assert combined_lifetime(lower, upper, rydberg=True) == pytest.approx(simplified, rel=1e-15)


def test_bandwidth_reproduction():
    assert 1 / (60.45 * 3.67e5 * SECONDS_PER_YEAR) == pytest.approx(1.4e-15, rel=5e-2)
    # same number from the combined lifetime of the matched pair
    tau = to_physical_lifetime(combined_lifetime(s(47746, 47745), s(47747, 47746)))
    assert 1 / (379.8 / (2 * math.pi) * tau) == pytest.approx(1.4e-15, rel=5e-2)


@given(st.integers(2, 10**6), st.data())
def test_monotonic_in_l_and_n(n, data):
    l = data.draw(st.integers(0, n - 2))
    assert lifetime_bound(s(n, l + 1)) > lifetime_bound(s(n, l))
    assert lifetime_bound(s(n + 1, l)) > lifetime_bound(s(n, l))


@given(states(max_n=10**5, min_n=2), states(max_n=10**5, min_n=2))
def test_combined_below_parts(a, b):
    tau = combined_lifetime(a, b)
    assert tau <= min(lifetime_bound(a), lifetime_bound(b))
    assert tau >= 0.5 * min(lifetime_bound(a), lifetime_bound(b)) * (1 - 1e-15)


def test_upper_lower_ordering():
    a, b = s(5, 2), s(6, 0)
    assert upper_lower(a, b) == (b, a)
    c = s(5, 4)
    assert upper_lower(a, c) == (c, a)


def test_lorentzian_shape():
    p = LineProfile(3.0, 0.2)
    assert lorentzian(3.0, p) == pytest.approx(2 / (math.pi * 0.2), rel=1e-15)
    assert lorentzian(3.1, p) == pytest.approx(0.5 * lorentzian(3.0, p), rel=1e-14)
    assert lorentzian(2.9, p) == pytest.approx(0.5 * lorentzian(3.0, p), rel=1e-14)
    assert lorentz_factor(3.0, p) == 1.0
    assert lorentz_factor(3.0 + 1e3 * 0.2, p) == pytest.approx(1 / 4e6, rel=1e-3)


def test_lorentzian_normalization():
    p = LineProfile(0.0, 1.0)
    edges = [0.0] + [10.0**k for k in range(-2, 7)]
    half = sum(integrate.quad(lambda w: lorentzian(w, p), lo, hi)[0] for lo, hi in zip(edges, edges[1:]))
    # over +-1e6 widths the tails miss 1/(pi 1e6) of the area
    assert 2 * half == pytest.approx(1.0, abs=1e-5)


def test_line_profile_validation():
    with pytest.raises(ValueError):
        LineProfile(1.0, 0.0)
    profile = LineProfile.for_transition(0.1, s(3, 1), s(4, 3))
    assert profile.width == pytest.approx(1 / combined_lifetime(s(3, 1), s(4, 3)))
    assert NormalizationSet().tau_unit > 0
