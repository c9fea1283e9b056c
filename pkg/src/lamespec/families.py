"""The eight Lame spectral families and their union.

A Lame solution of the first kind is ``S = prod (z - e_i)**k_i * S~(z)`` with
each ``k_i`` in ``{0, 1/2}``.  Factoring out the square roots leaves a
Heine-Stieltjes problem for ``S~`` with exponents ``1/2 + 2 k_i`` and linear
coefficient ``V~ = V + C``, where ``C`` collects the cross terms produced by
the square-root prefactor:

    C(z) = sum_{i<j} 2 k_i k_j (z - e_l) + sum_{i != j} (1/2) k_i (z - e_l)

(``l`` is the remaining index).  The Lame operator itself is

    S'' + 1/2 sum 1/(z - e_i) S' - (n(n+1) z + E) / (4 prod (z - e_i)) S = 0,

so ``V(z) = -(n(n+1)/4)(z - t)`` with ``E = SIGMA * n(n+1) * t``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cubic import (
    LAME_EXPONENTS,
    Cubic,
    FamilyKappa,
    effective_exponents,
    linear_coefficient,
)
from .errors import InadmissibleParity, IndexOutOfRange
from .tridiag import SolutionVector, build_tridiag, eigenvalues, null_vector

__all__ = [
    "SIGMA",
    "EVEN_FAMILIES",
    "ODD_FAMILIES",
    "FamilySpectrum",
    "family_degree",
    "family_count",
    "family_spectrum",
    "union_spectrum",
    "energy_from_t",
    "verify_lame_residual",
]

# Sign of the t -> E map.  The Lame operator's linear term vanishes at
# z = -E / (n(n+1)); verify_lame_residual certifies this choice.
SIGMA = -1

_H = 0.5
EVEN_FAMILIES = (
    FamilyKappa(0, 0, 0),
    FamilyKappa(_H, _H, 0),
    FamilyKappa(_H, 0, _H),
    FamilyKappa(0, _H, _H),
)
ODD_FAMILIES = (
    FamilyKappa(_H, 0, 0),
    FamilyKappa(0, _H, 0),
    FamilyKappa(0, 0, _H),
    FamilyKappa(_H, _H, _H),
)

_N_SAMPLES = 20


@dataclass(frozen=True, eq=False)
class FamilySpectrum:
    """Spectrum of one family ``R_n^{k1,k2,k3}``.

    ``roots_t`` are the roots of the Lame linear term ``V`` (so
    ``roots_E = SIGMA n(n+1) roots_t``); ``stieltjes_roots`` are the roots of
    the shifted-exponent problem solved by the tridiagonal matrix (empty for
    ``m = 0``).  The two coincide for ``k = (0, 0, 0)``.  For ``n = 0`` the
    single energy is 0 and there is no scaled root.
    """

    cubic: Cubic
    n: int
    kappa: FamilyKappa
    m: int
    roots_t: np.ndarray
    roots_E: np.ndarray
    stieltjes_roots: np.ndarray
    theta: float

    @property
    def count(self) -> int:
        return self.roots_E.size


def family_degree(n: int, k: FamilyKappa) -> int:
    """Degree ``m = n/2 - (k1 + k2 + k3)`` of the polynomial part."""
    if n < 0:
        raise InadmissibleParity(f"n must be nonnegative, got {n}")
    twice = n - round(2 * k.total)
    if twice < 0 or twice % 2:
        raise InadmissibleParity(f"family {k.label} has no solutions for n={n}")
    return twice // 2


def family_count(n: int, type_number: int) -> int:
    """Classical number of solutions of a given type (all subfamilies)."""
    even = n % 2 == 0
    table = {
        1: (n + 2) // 2 if even else 0,
        2: 0 if even else 3 * (n + 1) // 2,
        3: 3 * n // 2 if even else 0,
        4: 0 if even else (n - 1) // 2,
    }
    return table[type_number]


def energy_from_t(n: int, t):
    """Lame energy ``E`` for a scaled root ``t`` (scalar or array)."""
    e = SIGMA * n * (n + 1) * np.asarray(t, dtype=float)
    return float(e) if e.ndim == 0 else e


def _correction(c: Cubic, k: FamilyKappa) -> tuple[float, float]:
    """Coefficients ``(c1, c0)`` of ``C(z) = c1 z + c0`` in the original frame."""
    e = c.roots
    ks = tuple(k)
    c1 = c0 = 0.0
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            rest = 3 - i - j
            coef = 0.5 * ks[i] + (ks[i] * ks[j] if i < j else 0.0) * 2
            c1 += coef
            c0 -= coef * e[rest]
    return c1, c0


def _stieltjes(c: Cubic, k: FamilyKappa, m: int):
    p = linear_coefficient(c, effective_exponents(LAME_EXPONENTS, k))
    return build_tridiag(c, p, m)


def family_spectrum(c: Cubic, n: int, k: FamilyKappa) -> FamilySpectrum:
    m = family_degree(n, k)
    theta_lame = n * (n + 1) / 4
    c1, c0 = _correction(c, k)
    if n == 0:
        return FamilySpectrum(c, 0, k, 0, np.empty(0), np.zeros(1), np.empty(0), 0.0)
    if m == 0:
        # V~ vanishes identically, so V = -C
        stieltjes = np.empty(0)
        theta = 0.0
        roots_t = np.array([-c0 / c1])
    else:
        spec = _stieltjes(c, k, m)
        theta = spec.theta
        stieltjes = eigenvalues(spec) + c.e2
        roots_t = np.sort((theta * stieltjes - c0) / theta_lame)
    return FamilySpectrum(
        c, n, k, m, roots_t, energy_from_t(n, roots_t), stieltjes, theta
    )


def union_spectrum(c: Cubic, n: int) -> list[FamilySpectrum]:
    """The four families present for the parity of ``n``; ``2n + 1`` roots."""
    families = EVEN_FAMILIES if n % 2 == 0 else ODD_FAMILIES
    out = []
    for k in families:
        try:
            out.append(family_spectrum(c, n, k))
        except InadmissibleParity:
            continue
    return out


def polynomial_part(fs: FamilySpectrum, root_index: int) -> SolutionVector:
    """Coefficients of ``S~`` in the shifted variable ``z - e2``."""
    if not 0 <= root_index < fs.count:
        raise IndexOutOfRange(f"root index {root_index} outside 0..{fs.count - 1}")
    if fs.m == 0:
        return SolutionVector(np.ones(1))
    spec = _stieltjes(fs.cubic, fs.kappa, fs.m)
    return null_vector(spec, fs.stieltjes_roots[root_index] - fs.cubic.e2)


def _sample_points(c: Cubic) -> np.ndarray:
    theta = 2 * np.pi * (np.arange(_N_SAMPLES) + 0.5) / _N_SAMPLES
    center = 0.5 * (c.e1 + c.e3)
    return center + 0.6 * c.span * np.exp(1j * theta)


def verify_lame_residual(
    c: Cubic,
    n: int,
    k: FamilyKappa,
    root_index: int,
    sigma: int = SIGMA,
) -> float:
    """Max relative residual of the reconstructed Lame solution.

    ``S = prod (z - e_i)**k_i S~`` is substituted into the Lame operator with
    ``E = sigma n(n+1) t`` at 20 points on a circle around ``[e3, e1]``.  The
    prefactor is divided out analytically, so no branch choice is involved.
    Relative means: divided by the sum of the magnitudes of the terms.
    """
    fs = family_spectrum(c, n, k)
    if n == 0:
        energy = 0.0
    else:
        if not 0 <= root_index < fs.count:
            raise IndexOutOfRange(f"root index {root_index} outside 0..{fs.count - 1}")
        energy = sigma * n * (n + 1) * fs.roots_t[root_index]
    poly = polynomial_part(fs, root_index).polynomial()
    z = _sample_points(c)
    y = z - c.e2
    u = poly(y)
    du = poly.deriv(1)(y) if poly.order >= 1 else 0 * y
    d2u = poly.deriv(2)(y) if poly.order >= 2 else 0 * y

    inv = [1.0 / (z - e) for e in c.roots]
    g = sum(kk * r for kk, r in zip(k, inv))
    dg = -sum(kk * r * r for kk, r in zip(k, inv))
    h = 0.5 * sum(inv)
    pot = -(n * (n + 1) * z + energy) / (4 * c(z))
    terms = [d2u, 2 * g * du, (dg + g * g) * u, h * du, h * g * u, pot * u]
    total = np.abs(sum(terms))
    scale = sum(np.abs(t) for t in terms)
    with np.errstate(invalid="ignore", divide="ignore"):
        rel = np.where(scale > 0, total / scale, 0.0)
    return float(np.max(rel))
