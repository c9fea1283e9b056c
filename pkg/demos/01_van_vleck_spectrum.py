# coding: utf-8

# # Van Vleck roots from a tridiagonal matrix
#
# For a cubic Q with real roots e1 > e2 > e3 and positive exponents a_i, the
# Heine-Stieltjes problem of degree m has exactly m+1 Van Vleck polynomials
# V(z) = alpha (z - t).  Their roots t are the eigenvalues of an
# (m+1) x (m+1) tridiagonal matrix whose off-diagonal products are positive.

import numpy as np

from lamespec import LAME_EXPONENTS, Cubic, build_tridiag, eigenvalues, linear_coefficient, van_vleck_roots

# Start with the symmetric cubic z^3 - z and the Lame exponents (1/2, 1/2, 1/2).

c = Cubic(1, 0, -1)
p = linear_coefficient(c, LAME_EXPONENTS)
print("P(z) = %g z^2 + %g z + %g" % (p.alpha, p.beta, p.gamma))

# For m = 1 the roots are +-1/sqrt(3).

t = build_tridiag(c, p, 1)
print("theta =", t.theta)
print("xi    =", t.xi, " psi =", t.psi)
print("roots =", eigenvalues(t), " 1/sqrt(3) =", 1 / np.sqrt(3))

# The roots interlace as m grows and always stay inside (e3, e1).

for m in (2, 3, 4):
    print(m, np.round(van_vleck_roots(c, LAME_EXPONENTS, m), 6) + 0.0)

# The bisection solver agrees with LAPACK's tridiagonal routine.

t = build_tridiag(Cubic(5, 1, -3), linear_coefficient(Cubic(5, 1, -3), LAME_EXPONENTS), 200)
diff = np.max(np.abs(eigenvalues(t) - eigenvalues(t, "lapack")))
print("bisection vs LAPACK at m=200:", diff)
