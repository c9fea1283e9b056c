# coding: utf-8

# # The eight Lame families
#
# A Lame function of degree n is prod (z - e_i)^k_i times a polynomial, with
# k_i in {0, 1/2}.  The four families allowed by the parity of n contribute
# 2n + 1 energies in total.

import numpy as np

from lamespec import Cubic, DensityModel, empirical, ks_distance, union_spectrum, verify_lame_residual

c = Cubic(2, 0, -1)

for n in (3, 4):
    print("n =", n)
    for fs in union_spectrum(c, n):
        print("   k = %-12s m = %d  E =" % (fs.kappa.label, fs.m), np.round(fs.roots_E, 6))
    print("   total", sum(fs.count for fs in union_spectrum(c, n)))

# Every energy gives a genuine solution.  Flipping the sign convention of
# E breaks the equation.

fs = union_spectrum(c, 6)[0]
print("residual, sign -1:", verify_lame_residual(c, 6, fs.kappa, 2))
print("residual, sign +1:", verify_lame_residual(c, 6, fs.kappa, 2, sigma=+1))

# Each family, rescaled by n(n+1), has the same limit as the Van Vleck roots.

dm = DensityModel(c)
for fs in union_spectrum(c, 200):
    print(fs.kappa.label, round(ks_distance(empirical(fs.roots_t), dm), 4))
