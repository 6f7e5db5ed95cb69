import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rydgrav import detector, gw
from rydgrav.constants import CODATA, SECONDS_PER_YEAR, NormalizationSet
from rydgrav.detector import (
    CatalogError,
    GwSource,
    atoms_for_events,
    b_field_ceiling,
    duty_cycle,
    feasibility_report,
    load_catalog,
    match_principal_n,
    parse_catalog,
)

OMEGA_UNIT = NormalizationSet().omega_unit
C = CODATA.c


def brute_force_n(omega, lo, hi, spacing):
    n = np.arange(lo, hi + 1, dtype=float)
    w = omega / OMEGA_UNIT
    return int(n[np.argmin(np.abs(spacing(n) - w))])


def rydberg(n):
    return 1.0 / n**3


def bohr(n):
    return (2 * n + 1) / (2 * n**2 * (n + 1) ** 2)


def crab(**overrides):
    base = dict(name="crab", omega=379.8, spindown_lifetime=3e4 * SECONDS_PER_YEAR, los_velocity_amplitude=C * 1e-6, amplitude=1e-24)
    base.update(overrides)
    return GwSource(**base)


# -- matching --------------------------------------------------------------------


def test_crab_match():
    m = match_principal_n(379.8)
    assert m.n == 47746
    # the nearest line is off by less than half the gap to its neighbours (~3 w/n)
    lower, upper = gw.near_circular_pair(m.n)
    width = 1 / detector.lifetimes.combined_lifetime(lower, upper)
    assert abs(m.residual) * width < 0.5 * 3 * m.omega_tilde_n / m.n
    assert m.n == brute_force_n(379.8, 30000, 60000, bohr)


def test_rydberg_model_on_crab():
    # dn/n^3 is off by 3/(2n) against the Bohr spacing, half a level here
    assert match_principal_n(379.8, model="rydberg").n == brute_force_n(379.8, 30000, 60000, rydberg) == 47747


def test_constructed_exact_cube():
    m = match_principal_n(OMEGA_UNIT / 1e9, model="rydberg")
    assert m.n == 1000
    assert m.residual == pytest.approx(0.0, abs=1e-6)


def test_double_crab():
    m = match_principal_n(2 * 379.8)
    assert abs(m.n - 37895) <= 1
    assert m.n == brute_force_n(2 * 379.8, 30000, 50000, bohr)
    # the dn/n^3 spacing lands one level higher, as for the Crab itself
    r = match_principal_n(2 * 379.8, model="rydberg")
    assert r.n == brute_force_n(2 * 379.8, 30000, 50000, rydberg) == 37897


def test_match_rejects():
    with pytest.raises(ValueError, match="Rydberg regime"):
        match_principal_n(1e14)
    with pytest.raises(ValueError):
        match_principal_n(0.0)
    with pytest.raises(ValueError):
        match_principal_n(379.8, model="other")


@settings(max_examples=100)
@given(st.floats(math.log(1e3), math.log(1e5)))
def test_match_agrees_with_scan(log_n):
    omega = OMEGA_UNIT * bohr(math.exp(log_n))
    assert match_principal_n(omega).n == brute_force_n(omega, 900, 110000, bohr)
    omega = OMEGA_UNIT * rydberg(math.exp(log_n))
    assert match_principal_n(omega, model="rydberg").n == brute_force_n(omega, 900, 110000, rydberg)


def test_match_charge_scaling():
    # frequencies scale as Z^2 at fixed n
    assert match_principal_n(379.8 * 4, Z=2).n == 47746
    assert match_principal_n(379.8 * 8, Z=2).n == pytest.approx(47746 * 2 ** (-1 / 3), abs=2)


# -- magnetic field ----------------------------------------------------------------


def test_b_field_values():
    assert b_field_ceiling(1) == pytest.approx(6.6e9, rel=5e-2)
    # 6.648e9 * 1000^-3.5; the quoted "smaller than 0.2" is rounded (5.1% low)
    assert b_field_ceiling(1000) == pytest.approx(0.21023, rel=1e-4)
    assert b_field_ceiling(47746) == pytest.approx(2.8e-7, rel=5e-2)
    assert b_field_ceiling(10, Z=3) == pytest.approx(9 * b_field_ceiling(10), rel=1e-14)


def test_b_field_closed_form():
    # Gaussian units by hand: sqrt(8) Z^2 a0^-1 (2 Ryd / r0)^(1/2)
    a0, r0 = 0.529177e-8, 2.817940e-13
    ryd = 13.605693 * 1.602177e-12
    assert b_field_ceiling(1) == pytest.approx(math.sqrt(8) / a0 * math.sqrt(2 * ryd / r0), rel=1e-5)


@given(st.integers(1, 10**7))
def test_b_field_decreasing(n):
    assert b_field_ceiling(n + 1) < b_field_ceiling(n)
    assert b_field_ceiling(2 * n) / b_field_ceiling(n) == pytest.approx(2**-3.5, rel=1e-12)


# -- atom budget ------------------------------------------------------------------


def test_atoms_for_events():
    assert atoms_for_events(1e-15, 3) == pytest.approx(9.5e7, rel=1e-2)
    assert atoms_for_events(1.0, 1) == 1
    assert atoms_for_events(1e-24, 3) == pytest.approx(9.5e16, rel=1e-2)
    assert atoms_for_events(1e-15, 3) == math.ceil(3 / (1e-15 * SECONDS_PER_YEAR))
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            atoms_for_events(bad, 3)


# -- duty cycle -----------------------------------------------------------------------


def sampled_fraction(doppler, low, high, orbital=0.0, samples=2_000_000):
    # time-sampling oracle over one day (and one year when orbital motion is on)
    t = (np.arange(samples) + 0.5) / samples
    shift = doppler * np.sin(2 * np.pi * t * 365.25)
    if orbital:
        shift = shift + orbital * np.sin(2 * np.pi * t)
    else:
        shift = doppler * np.sin(2 * np.pi * t)
    return float(np.mean((shift >= low) & (shift <= high)))


@pytest.mark.parametrize("b_rel, offset", [(0.1, 0.0), (0.3, 0.5), (0.05, -0.9), (0.4, 0.95)])
def test_duty_fraction_against_sampling(b_rel, offset):
    d = 1e-6
    src = crab(los_velocity_amplitude=C * d)
    got = duty_cycle(src, b_rel * d, resonance_offset=offset * d)
    expect = sampled_fraction(d, (offset - b_rel / 2) * d, (offset + b_rel / 2) * d)
    assert got.fraction_per_day == pytest.approx(expect, abs=2e-5)


def test_duty_with_orbital_motion_against_sampling():
    d, orb = 1e-6, 3e-6
    src = crab(los_velocity_amplitude=C * d, orbital_velocity_amplitude=C * orb)
    got = duty_cycle(src, 0.2 * d)
    expect = sampled_fraction(d, -0.1 * d, 0.1 * d, orbital=orb, samples=20_000_000)
    assert got.fraction_per_day == pytest.approx(expect, rel=2e-2)
    assert got.fraction_per_day < duty_cycle(crab(los_velocity_amplitude=C * d), 0.2 * d).fraction_per_day


def test_crab_duty_cycle():
    bw = 1.4e-15
    duty = duty_cycle(crab(), bw)
    assert duty.fraction_per_day == pytest.approx(bw / (math.pi * 1e-6), rel=1e-6)
    assert 1e-9 / 3 <= duty.fraction_per_day <= 3e-9
    assert 1e-4 / 3 <= duty.in_band_time_per_day <= 3e-4
    assert duty.dwell_per_crossing == pytest.approx(duty.in_band_time_per_day / 2)
    assert duty.required_velocity_stability == pytest.approx(4.2e-7, rel=2e-2)


def test_duty_cycle_edges():
    wide = duty_cycle(crab(), 2.5e-6)
    assert wide.fraction_per_day == 1.0 and math.isinf(wide.dwell_per_crossing)
    still = duty_cycle(crab(los_velocity_amplitude=0.0), 1e-15)
    assert still.fraction_per_day == 1.0 and math.isinf(still.dwell_per_crossing)
    assert duty_cycle(crab(los_velocity_amplitude=0.0), 1e-15, resonance_offset=1e-9).fraction_per_day == 0.0
    with pytest.raises(ValueError):
        duty_cycle(crab(), 0.0)


# -- sources and reports ----------------------------------------------------------------


def test_source_validation():
    with pytest.raises(ValueError):
        crab(flux=1.0)
    with pytest.raises(ValueError):
        crab(amplitude=None)
    with pytest.raises(ValueError):
        crab(omega=-1.0)
    with pytest.raises(ValueError):
        crab(los_velocity_amplitude=-1.0)
    with pytest.raises(ValueError):
        crab(spindown_lifetime=0.0)
    by_flux = crab(amplitude=None, flux=crab().wave_field().flux)
    assert by_flux.wave_field().characteristic_amplitude == pytest.approx(1e-24, rel=1e-12)


def test_crab_report():
    r = feasibility_report(crab())
    assert r.matched_n == 47746
    assert r.circular_lifetime_years == pytest.approx(7.35e5, rel=1e-2)
    assert r.combined_lifetime_years == pytest.approx(3.67e5, rel=1e-2)
    assert r.bandwidth_rel == pytest.approx(1.4e-15, rel=5e-2)
    assert r.b_field_ceiling_gauss == pytest.approx(2.8e-7, rel=5e-2)
    assert r.b_field_ceiling_tesla == pytest.approx(r.b_field_ceiling_gauss * 1e-4)
    assert r.required_velocity_stability == pytest.approx(4.2e-7, rel=2e-2)
    assert r.monochromaticity == "violated" and not r.monochromatic
    assert r.transition_omega == pytest.approx(379.8, rel=1e-4)
    lower, upper = gw.near_circular_pair(47746)
    expected = gw.absorption_rate_monochromatic(lower, upper, crab().wave_field())
    assert r.rate_per_atom == expected
    assert r.atoms_for_target == atoms_for_events(expected, 3)


def test_long_coherence_source_is_monochromatic():
    r = feasibility_report(crab(spindown_lifetime=1e8 * SECONDS_PER_YEAR))
    assert r.monochromaticity == "satisfied"


def test_zero_strain_source():
    r = feasibility_report(crab(amplitude=0.0))
    assert r.rate_per_atom == 0 and r.atoms_for_target is None
    assert any("zero absorption" in note for note in r.notes)


def test_report_is_deterministic():
    a, b = feasibility_report(crab()), feasibility_report(crab())
    assert a == b and a.as_dict() == b.as_dict()


def test_report_dict_has_no_infinities():
    d = feasibility_report(crab(los_velocity_amplitude=0.0)).as_dict()
    assert d["dwell_per_crossing"] is None
    assert d["monochromaticity"] == "violated"


# -- catalogs -----------------------------------------------------------------------


def test_bundled_catalog():
    cat = load_catalog()
    src = cat["crab"]
    assert src.omega == 379.8 and src.amplitude == 1e-24
    assert src.spindown_lifetime == pytest.approx(3e4 * SECONDS_PER_YEAR)


GOOD = '# comment\n\n{"name": "a", "omega_rad_per_s": 100.0, "flux_w_per_m2": 1e-9, "spindown_years": 10, "los_velocity_mps": 464}\n'


def test_parse_catalog_good(tmp_path):
    cat = parse_catalog(GOOD)
    assert cat["a"].flux == 1e-9 and cat["a"].amplitude is None
    path = tmp_path / "c.jsonl"
    path.write_text(GOOD)
    assert load_catalog(path) == cat


@pytest.mark.parametrize(
    "line, message",
    [
        ('{"name": "a", "omega_rad_per_s": 1, "amplitude": 1, "spindown_years": 1, "los_velocity_mps": 1, "ra": 0}', "unknown"),
        ('{"name": "a", "amplitude": 1, "spindown_years": 1, "los_velocity_mps": 1}', "missing"),
        ('{"name": "a", "omega_rad_per_s": "fast", "amplitude": 1, "spindown_years": 1, "los_velocity_mps": 1}', "number"),
        ('{"name": 3, "omega_rad_per_s": 1, "amplitude": 1, "spindown_years": 1, "los_velocity_mps": 1}', "string"),
        ('{"name": "a", "omega_rad_per_s": 1, "spindown_years": 1, "los_velocity_mps": 1}', "exactly one"),
        ('{"name": "a", "omega_rad_per_s": 1,', "invalid JSON"),
        ("[1, 2]", "object"),
    ],
)
def test_parse_catalog_errors(line, message):
    with pytest.raises(CatalogError, match=message) as info:
        parse_catalog("# header\n" + line + "\n")
    assert info.value.line == 2
    assert str(info.value).startswith("line 2:")


def test_parse_catalog_duplicate():
    with pytest.raises(CatalogError, match="duplicate") as info:
        parse_catalog(GOOD + GOOD.splitlines()[-1])
    assert info.value.line == 4
