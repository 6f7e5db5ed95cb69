"""
Could Rydberg atoms see the Crab pulsar?
========================================

Walk through the estimate for the Crab: find the resonant n, the lifetime
and line width, the absorption rate per atom, the atom count for three
events a year, the magnetic field that keeps n a good quantum number, and
how long the diurnal Doppler shift leaves the line in band.
"""

from rydgrav import detector, gw
from rydgrav.constants import SECONDS_PER_YEAR

crab = detector.load_catalog()["crab"]
print(f"source: omega = {crab.omega} rad/s (f = {crab.omega / 6.283185307:.2f} Hz), |A| = {crab.amplitude:g}")

# 379.8 rad/s sits between two Rydberg lines near n = 47746
match = detector.match_principal_n(crab.omega)
print(f"resonant n = {match.n}, detuning {match.residual:.3g} line widths")
print("cube-root rule with dn/n^3 would say", detector.match_principal_n(crab.omega, model="rydberg").n)

report = detector.feasibility_report(crab)
print(f"circular lifetime   {report.circular_lifetime_years:.4g} yr")
print(f"pair lifetime       {report.combined_lifetime_years:.4g} yr")
print(f"line width df/f     {report.bandwidth_rel:.3g}")
print(f"rate per atom       {report.rate_per_atom:.3g} /s")
print(f"atoms for 3 / yr    {report.atoms_for_target:.3g}")
print(f"B ceiling           {report.b_field_ceiling_gauss:.3g} G")
print(f"in band per day     {report.fraction_per_day:.3g} ({report.in_band_time_per_day * 1e3:.3g} ms)")
print(f"velocity stability  {report.required_velocity_stability:.3g} m/s")

# the pulsar spins down in ~3e4 yr, faster than the atomic line decays
print("monochromatic condition:", report.monochromaticity)

# an optimistic source: |A| = 1e-20 at n = 1e4
lower, upper = gw.near_circular_pair(10**4)
field = gw.WaveField.monochromatic(gw.transition_omega(lower, upper), amplitude=1e-20)
rate = gw.absorption_rate_monochromatic(lower, upper, field)
print(f"\noptimistic: rate {rate:.3g} /s, atoms {detector.atoms_for_events(rate, 3):.3g}")
print(f"one atom waits {1 / (rate * SECONDS_PER_YEAR):.3g} years")
