"""
Atomic units for gravitational-wave absorption
==============================================

Everything inside rydgrav is dimensionless.  This script shows the units
that turn the numbers back into seconds and rad/s.
"""

from rydgrav.constants import CGS, CODATA, PAPER_VALUES, SECONDS_PER_YEAR, NormalizationSet, to_physical_lifetime

units = NormalizationSet(Z=1)
print(f"frequency unit  {units.omega_unit:.4e} rad/s")
print(f"lifetime unit   {units.tau_unit:.4e} s")
print(f"length unit     {units.length_unit:.4e} m")

# the two units are tied together by alpha
print("omega_unit * tau_unit * alpha^3 / 2 =", units.omega_unit * units.tau_unit * CODATA.alpha**3 / 2)

# derived constants next to the values quoted in the literature
for name in ("planck_length", "classical_electron_radius", "grav_em_ratio"):
    print(f"{name:26s} {getattr(CODATA, name):.4e}  (quoted {PAPER_VALUES[name]:.4e})")

# m_e^2 G / e^2 is a pure number, so it survives a change to CGS
print("same ratio in CGS:", CGS.grav_em_ratio)

# the hydrogen 2p level: (3/4) n^3 (l+1/2)^2 = 13.5 atomic lifetime units
print(f"2p lifetime bound {to_physical_lifetime(13.5) * 1e9:.3f} ns (measured 1.596 ns)")

# and a circular state at n = 47746
tau = to_physical_lifetime(0.75 * 47746**3 * 47745.5**2)
print(f"circular n=47746: {tau / SECONDS_PER_YEAR:.4g} years")
