"""
How absorption grows with n
===========================

At fixed strain the monochromatic rate grows like n; at fixed spectral flux
the resonant rate grows like n^7.  The same ladder is available from the
command line with ``rydgrav sweep --variable n``.
"""

import numpy as np

from rydgrav import gw

ns = np.unique(np.geomspace(1e3, 1e5, 11).astype(int))
strain = gw.WaveField.monochromatic(1.0, amplitude=1e-22)
spectral = gw.WaveField.spectral(1e-10)

rows = []
for n in ns:
    lower, upper = gw.near_circular_pair(int(n))
    rows.append((
        n,
        gw.sigma_abs_max(lower, upper),
        gw.absorption_rate_monochromatic(lower, upper, strain),
        gw.absorption_rate_broadband(lower, upper, spectral),
    ))
rows = np.array(rows, dtype=float)

print("      n     sigma_max [m^2]   rate(|A|) [1/s]   rate(S) [1/s per rad/s]")
for n, sigma, ra, rs in rows:
    print(f"{int(n):7d}   {sigma:.3e}        {ra:.3e}         {rs:.3e}")

slopes = [np.polyfit(np.log(rows[:, 0]), np.log(rows[:, k]), 1)[0] for k in (1, 2, 3)]
print("log-log slopes: sigma %.3f, fixed strain %.3f, fixed flux %.3f" % tuple(slopes))

# the ratio of sigma_max to the geometric cross section 4 pi <r^2> stays put
lower, upper = gw.near_circular_pair(10**4)
print("sigma_max / (4 pi <r^2>) over m_e^2 G / e^2:", gw.cross_section_ratio(lower, upper) / 2.4e-43)
