# coding: utf-8

# # rho_Q solves a Heun equation
#
# The density satisfies a second order equation with regular singular points
# at e1, e2, e3 and infinity.  Check it numerically and look at the local
# exponents.

import numpy as np

from lamespec import Cubic, DensityModel, heun_residual, indicial_exponents

c = Cubic(5, 1, -3)
dm = DensityModel(c)

rng = np.random.default_rng(0)
pts = rng.uniform(c.e3 + 0.05 * c.span, c.e1 - 0.05 * c.span, 8)
pts = pts[np.abs(pts - c.e2) > 0.05 * c.span]
for s in pts:
    print("s = %+.4f   relative residual %.2e" % (s, heun_residual(dm, s, relative=True)))

for p in ("e1", "e2", "e3", "infinity"):
    print("%-9s exponents %s" % (p, indicial_exponents(c, p)))
