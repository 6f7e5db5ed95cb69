"""
Quantum versus classical graviton emission
==========================================

A charge on a circular orbit of radius r radiates (1/10) G m^2 w^6 r^4 / c^5.
Dividing by hbar w gives a rate to compare with the quantum spontaneous
emission rate of a circular Rydberg state.
"""

from rydgrav import gw

for n in (100, 300, 1000, 3000, 10000, 100000):
    ratio = gw.classical_limit_check(n)
    print(f"n={n:>6d}  quantum/classical = {ratio:.6f}  (n * (ratio - 1) = {n * (ratio - 1):.3f})")

# the approach is 1/n, as expected from (g/g')C and I^2 at finite n
