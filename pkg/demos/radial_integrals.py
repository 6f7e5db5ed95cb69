"""
Radial quadrupole integrals
===========================

Exact Gauss-Laguerre quadrature of <R_a| r^2 |R_b> for n up to 64, the
Schwarz bound that caps it, and the circular-orbit asymptote used beyond.
"""

import numpy as np

from rydgrav.hydrogenic import QuantumState, mean_r2, radial_integral, schwarz_bound

s = lambda n, l: QuantumState(n, l, l + 0.5)

# the smallest example: 1s -> 2s
res = radial_integral(s(1, 0), s(2, 0), "exact")
print(f"<1s|r^2|2s> = {res.value:.6f} +- {res.abs_error_estimate:.1e}")
print(f"Schwarz bound sqrt(3 * 42) = {schwarz_bound(s(1, 0), s(2, 0)):.4f}")

# on the diagonal the integral is <r^2>
state = s(40, 17)
print("diagonal:", radial_integral(state, state, "exact").value, "closed form:", mean_r2(state))

# How good is I ~ n^4 for nearly circular orbits?  Two circular orbits two
# shells apart converge quickly...
print("\n  n   circular n->n+2   single step (n,n-2)->(n+1,n)")
for n in (8, 16, 32, 62):
    a, b = QuantumState.circular(n), QuantumState.circular(n + 2)
    two = radial_integral(a, b, "exact").value / radial_integral(a, b, "asymptotic").value
    lo, up = s(n, n - 2), s(n + 1, n)
    one = radial_integral(lo, up, "exact").value / radial_integral(lo, up, "asymptotic").value
    print(f"{n:3d}   {two:15.6f}   {one:12.4f}")

# ...while the single-step pair falls behind roughly as 1/sqrt(n): the
# classical circular orbit radiates quadrupole waves at twice its orbital
# frequency only.  Above the cutoff the library still reports the asymptote,
# tagged as a bound.
big = radial_integral(s(47746, 47744), s(47747, 47746))
print("\nn=47746:", big.method.value, f"I/n^4 = {big.value / 47746**4:.6f}")

# a generic large-n pair gets only the Schwarz bracket
generic = radial_integral(s(5000, 100), s(5001, 102))
print("eccentric pair bracket:", np.round(generic.bracket, -10))
