"""
Angular factors of quadrupole transitions
=========================================

The closed-form table of C versus a brute-force sum over Clebsch-Gordan
coefficients and Gaunt integrals.
"""

import itertools
from fractions import Fraction

from rydgrav.angular import degeneracy_weighted_c2, reduced_c2_exact, reduced_c2_oracle, selection_rules
from rydgrav.hydrogenic import QuantumState

states = [
    QuantumState(20, l, j)
    for l in range(8)
    for j in (l - Fraction(1, 2), l + Fraction(1, 2))
    if j > 0
]

worst = 0.0
for a, b in itertools.product(states, repeat=2):
    if selection_rules(a, b).allowed:
        worst = max(worst, abs(float(reduced_c2_exact(a, b)) - reduced_c2_oracle(a, b)))
print("largest table/oracle difference:", worst)

# a forbidden pair says why
print(selection_rules(QuantumState(3, 0, "1/2"), QuantumState(4, 0, "1/2")).reason)

# C runs from 0 to 3/5; the top sits at j = 1/2, delta_j = +2
print("C(s1/2 -> d5/2) =", reduced_c2_exact(QuantumState(3, 0, "1/2"), QuantumState(4, 2, "5/2")))

# large-j limits: 3/8 for delta_j = +2 and 1/4 for delta_j = 0
for j2 in (11, 101, 1001, 100001):
    j = Fraction(j2, 2)
    l = int(j - Fraction(1, 2))
    up2 = QuantumState(10**6, l + 2, j + 2)
    low = QuantumState(10**6, l, j)
    flat = QuantumState(10**6 + 1, l, j)
    print(f"j={str(j):>9s}  dj=+2 {float(reduced_c2_exact(low, up2)):.6f}"
          f"  weighted {degeneracy_weighted_c2(low, up2):.6f}  dj=0 {float(reduced_c2_exact(low, flat)):.6f}")
