# coding: utf-8

# # Roots for a cubic with complex roots
#
# With complex e_i the Van Vleck roots leave the real line and settle on
# curves joining the e_i.  The roots are found by Aberth iteration on the
# characteristic polynomial, evaluated through its three-term recurrence.

import numpy as np

from lamespec import ComplexCubic, scatter

c = ComplexCubic(1, 0, complex(-0.5, 1))

for n in (10, 25, 50):
    sc = scatter(c, n)
    print("n = %2d  thickness %.4f  min sep %.4f  residual %.1e  error bound %.1e  origin %d"
          % (n, sc.thickness, sc.min_separation, sc.max_residual, sc.error_estimate, sc.origin))

# The conditioning depends strongly on which root is moved to the origin.


for o in (0, 1, 2):
    sc = scatter(ComplexCubic(*c.roots, origin=o), 50, auto_origin=False)
    print("origin %d  error bound %.1e" % (o, sc.error_estimate))

# A rough text plot of the n = 50 roots.

sc = scatter(c, 50)
grid = [[" "] * 61 for _ in range(21)]
for z in sc.points:
    col = int(round((z.real + 0.6) / 1.7 * 60))
    row = int(round((1.05 - z.imag) / 1.1 * 20))
    if 0 <= row < 21 and 0 <= col < 61:
        grid[row][col] = "*"
for e in c.roots:
    grid[int(round((1.05 - e.imag) / 1.1 * 20))][int(round((e.real + 0.6) / 1.7 * 60))] = "o"
print("\n".join("".join(r) for r in grid))
print(np.round(sc.points[:5], 4))
