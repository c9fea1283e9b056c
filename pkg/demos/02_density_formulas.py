# coding: utf-8

# # Five ways to write the limiting density
#
# As m grows the Van Vleck roots fill [e3, e1] with density rho_Q.  The package
# evaluates rho_Q by five mathematically equivalent routes; they agree to
# rounding away from the logarithmic peak at e2.

import numpy as np

from lamespec import FORMULAS, Cubic, DensityModel, cdf, log_asymptote, rho

c = Cubic(2, 0, -1)
s = np.array([-0.9, -0.4, 0.3, 1.0, 1.7])

for f in FORMULAS:
    print("%-12s" % f, np.array2string(rho(c, s, f), precision=12))

# At the outer endpoint of z^3 - z the density is 1/(2 sqrt 2).

print("rho(1) =", rho(Cubic(1, 0, -1), 1.0), " 1/(2 sqrt 2) =", 1 / (2 * np.sqrt(2)))

# Total mass one.

print("mass =", cdf(DensityModel(c), c.e1))

# Near e2 the density blows up like log(1/|s - e2|) / (2 pi) times a constant.

for d in (1e-2, 1e-4, 1e-6, 1e-8):
    print("s - e2 = %.0e   rho / asymptote = %.6f" % (d, rho(c, d) / log_asymptote(c, d)))
