# coding: utf-8

# # Root counting measures approach rho_Q
#
# Put mass 1/(m+1) on each Van Vleck root and compare with rho_Q by the
# Kolmogorov-Smirnov distance and by a histogram.

import numpy as np

from lamespec import LAME_EXPONENTS, Cubic, DensityModel, ExponentTriple, cdf, empirical, histogram, ks_distance, van_vleck_roots

c = Cubic(1, 0, -1)
dm = DensityModel(c)

for m in (25, 50, 100, 200, 400, 800):
    em = empirical(van_vleck_roots(c, LAME_EXPONENTS, m))
    d = ks_distance(em, dm)
    print("m = %4d   KS = %.5f   m * KS = %.3f" % (m, d, m * d))

# The histogram at m = 400 against the exact bin averages.

em = empirical(van_vleck_roots(c, LAME_EXPONENTS, 400))
h = histogram(em, 20, c.e3, c.e1)
exact = np.diff(cdf(dm, h.edges)) / h.widths
for x, got, want in zip(h.centers, h.heights, exact):
    print("%+.2f  %6.3f  %6.3f  %s" % (x, got, want, "#" * int(40 * got)))

# Different exponents change the roots but not the limit.

for a in [(0.3, 1.7, 0.9), (2.5, 0.1, 1.0)]:
    em = empirical(van_vleck_roots(c, ExponentTriple(*a), 400))
    print(a, "KS =", round(ks_distance(em, dm), 5))
