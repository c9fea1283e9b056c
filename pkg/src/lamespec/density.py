"""Limiting root density of the Van Vleck polynomials.

All formulas are evaluated with the shifted arguments ``(e1 - e2, e3 - e2,
s - e2)``.  Five routes are available and agree to rounding:

``"i"``           elliptic ``K`` at imaginary modulus
``"ii"``          ``F(1/2, 1/2, 1; .)`` at a negative argument
``"iii"``         ``F(1/2, 1/2, 1; .)`` at ``(1 - omega) / (1 + omega)``
``"iv-closed"``   the same in terms of the roots only
``"iv-integral"`` the branch integrals, by quadrature (reference route)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cubic import Cubic
from .errors import (
    AtLogSingularity,
    OutOfSupport,
    TooCloseToSingularity,
    ZeroDenominator,
)
from .specfun import (
    QuadratureSpec,
    ellipK_imag,
    f_half,
    f_half_complement,
    quad_singular,
)

__all__ = [
    "FORMULAS",
    "DensityModel",
    "NuBounds",
    "omega",
    "nu_bounds",
    "rho",
    "limit_coeffs",
    "band",
    "cdf",
    "heun_residual",
    "indicial_exponents",
    "log_asymptote",
]

FORMULAS = ("i", "ii", "iii", "iv-closed", "iv-integral")

SINGULAR_RTOL = 1e-13
HEUN_MIN_DISTANCE = 0.02
HEUN_STEP = 1e-4


@dataclass(frozen=True)
class DensityModel:
    """A cubic together with the settings used to evaluate its density."""

    cubic: Cubic
    formula: str = "iii"
    quadrature: QuadratureSpec = field(
        default_factory=lambda: QuadratureSpec(atol=1e-14, rtol=1e-12)
    )

    def __post_init__(self):
        if self.formula not in FORMULAS:
            raise ValueError(f"unknown formula {self.formula!r}; use one of {FORMULAS}")

    def rho(self, s, formula: str | None = None):
        return rho(self, s, formula)

    def cdf(self, s):
        return cdf(self, s)


@dataclass(frozen=True)
class NuBounds:
    nu_min: float
    nu_max: float


def omega(x1, x2, x3):
    """``(|x1| + |x2|) |x3| / (|x1| |x2 - x3| + |x2| |x1 - x3|)``."""
    x1, x2, x3 = (np.asarray(x, dtype=float) for x in (x1, x2, x3))
    num = (np.abs(x1) + np.abs(x2)) * np.abs(x3)
    den = np.abs(x1) * np.abs(x2 - x3) + np.abs(x2) * np.abs(x1 - x3)
    if np.any(den == 0):
        raise ZeroDenominator("omega denominator vanishes")
    out = num / den
    return float(out) if out.ndim == 0 else out


def _as_model(dm) -> DensityModel:
    return dm if isinstance(dm, DensityModel) else DensityModel(dm)


def _shifted(c: Cubic, s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if np.any((s < c.e3) | (s > c.e1)) or np.any(np.isnan(s)):
        raise OutOfSupport(f"s must lie in [{c.e3}, {c.e1}]")
    st = s - c.e2
    if np.any(np.abs(st) < SINGULAR_RTOL * c.span):
        raise AtLogSingularity("s is at the logarithmic singularity e2")
    return st


def nu_bounds(c: Cubic, s: float) -> NuBounds:
    """Roots of ``(4w - v**2) nu**2 - (4w + 2 v s) nu - s**2 = 0`` (shifted ``s``)."""
    s = float(s)
    if not (c.e3 < s < c.e1):
        raise OutOfSupport(f"s must lie strictly inside ({c.e3}, {c.e1})")
    st = s - c.e2
    v, w = c.v, c.w
    disc2 = v * v - 4 * w
    root = math.sqrt(max(w * (w + v * st + st * st), 0.0))
    # 2w + v s < 0 on the support, so the larger root has no cancellation
    nu_max = -(2 * w + v * st - 2 * root) / disc2
    nu_min = (st * st / disc2) / nu_max
    return NuBounds(nu_min, nu_max)


def _rho_closed(c: Cubic, st: np.ndarray, formula: str) -> np.ndarray:
    x1, x3, span = c.x1, c.x3, c.span
    a = np.abs(st)
    if formula == "iv-closed":
        base = (x1 + x3) * st - 2 * x1 * x3
        plus = base + span * a
        # 1 - (base - span|s|) / plus
        return 1.0 / np.sqrt(2 * plus) * f_half_complement(2 * span * a / plus)
    om = np.asarray(omega(x1, x3, st))
    r = np.sqrt((1 - om) * (1 + om))
    one_minus_r = om * om / (1 + r)
    if formula == "i":
        pref = np.sqrt((1 + r) / (span * a * om)) / math.pi
        return pref * ellipK_imag(np.sqrt(2 * r / one_minus_r))
    if formula == "ii":
        pref = 0.5 * np.sqrt((1 + r) / (span * a * om))
        return pref * f_half(-2 * r / one_minus_r)
    if formula == "iii":
        pref = np.sqrt(om / (2 * span * a * (1 + om)))
        # argument (1 - om) / (1 + om) passed via its complement 2 om / (1 + om)
        return pref * f_half_complement(2 * om / (1 + om))
    raise ValueError(f"unknown formula {formula!r}")


def _rho_integral_one(c: Cubic, st: float, q: QuadratureSpec) -> float:
    x1, x3 = c.x1, c.x3
    if st < 0:
        # int_0^x1 dx / sqrt((x1 - x) x (x - x3) (x - s))
        def f(x, d0, d1):
            return 1.0 / np.sqrt(d1 * d0 * (d0 - x3) * (d0 - st))

        val, _ = quad_singular(f, 0.0, x1, q)
    else:
        # int_x3^0 dx / sqrt((x1 - x) (0 - x) (x - x3) (s - x))
        def f(x, d0, d1):
            return 1.0 / np.sqrt((x1 + d1) * d1 * d0 * (st + d1))

        val, _ = quad_singular(f, x3, 0.0, q)
    return val / (2 * math.pi)


def rho(dm, s, formula: str | None = None):
    """Density at ``s`` (scalar or array) by the chosen route."""
    dm = _as_model(dm)
    formula = formula or dm.formula
    st = _shifted(dm.cubic, s)
    if formula == "iv-integral":
        out = np.array([_rho_integral_one(dm.cubic, float(x), dm.quadrature)
                        for x in np.ravel(st)]).reshape(st.shape)
    elif formula in FORMULAS:
        out = np.asarray(_rho_closed(dm.cubic, st, formula), dtype=float)
    else:
        raise ValueError(f"unknown formula {formula!r}; use one of {FORMULAS}")
    return float(out) if out.ndim == 0 else out


def limit_coeffs(tau: float, c: Cubic) -> tuple[float, float]:
    """Limits of the diagonal and off-diagonal product at row fraction ``tau``."""
    if not 0 <= tau <= 1:
        raise ValueError("tau must lie in [0, 1]")
    u = (1 - tau) ** 2
    return -c.v * u, -c.w * (1 - u) * u


def band(tau: float, c: Cubic) -> tuple[float, float]:
    """``[xi - 2 sqrt(psi), xi + 2 sqrt(psi)]`` at ``tau``, reported frame."""
    xi, psi = limit_coeffs(tau, c)
    r = 2 * math.sqrt(psi)
    return xi - r + c.e2, xi + r + c.e2


def _rho_pieces(c: Cubic, q: QuadratureSpec, lo: float, hi: float, side: int) -> float:
    """Integral of the density over ``[lo, hi]`` (shifted) on one side of 0.

    Distances to 0 are taken from the quadrature offsets so the logarithmic
    singularity is resolved without cancellation.
    """
    if hi <= lo:
        return 0.0
    if side < 0:
        at_zero = hi == 0.0

        def f(x, d0, d1):
            st = -d1 if at_zero else x
            return _rho_closed(c, st, "iii")
    else:
        at_zero = lo == 0.0

        def f(x, d0, d1):
            st = d0 if at_zero else x
            return _rho_closed(c, st, "iii")

    val, _ = quad_singular(f, lo, hi, q)
    return val


def cdf(dm, s):
    """``int_{e3}^{s} rho``; clamps to 0 below ``e3`` and 1 above ``e1``.

    Arrays are integrated piecewise between sorted points and accumulated,
    with a split at ``e2``.
    """
    dm = _as_model(dm)
    c = dm.cubic
    q = dm.quadrature
    s_arr = np.asarray(s, dtype=float)
    flat = np.clip(np.ravel(s_arr), c.e3, c.e1) - c.e2
    order = np.argsort(flat)
    pts = flat[order]
    out = np.empty_like(pts)
    acc = 0.0
    prev = c.x3
    for k, p in enumerate(pts):
        if p > prev:
            if prev < 0:
                acc += _rho_pieces(c, q, prev, min(p, 0.0), -1)
            if p > 0:
                acc += _rho_pieces(c, q, max(prev, 0.0), p, +1)
            prev = p
        out[k] = acc
    res = np.empty_like(out)
    res[order] = out
    res = res.reshape(s_arr.shape)
    return float(res) if res.ndim == 0 else res


def _heun_terms(dm: DensityModel, s: float):
    c = dm.cubic
    dist = min(abs(s - c.e1), abs(s - c.e2), abs(s - c.e3))
    if not (c.e3 < s < c.e1) or dist <= HEUN_MIN_DISTANCE * c.span:
        raise TooCloseToSingularity(
            f"s={s} is within {HEUN_MIN_DISTANCE} of the span from a singular point"
        )
    formula = dm.formula if dm.formula != "iv-integral" else "iii"
    f = lambda x: rho(dm, x, formula)  # noqa: E731
    h0 = HEUN_STEP * c.span
    f0 = f(s)
    d1, d2 = [], []
    for h in (h0, h0 / 2, h0 / 4):
        fp, fm = f(s + h), f(s - h)
        d1.append((fp - fm) / (2 * h))
        d2.append((fp - 2 * f0 + fm) / (h * h))

    def richardson(d):
        # two elimination sweeps for the h**2 and h**4 error terms
        r1 = [(4 * d[1] - d[0]) / 3, (4 * d[2] - d[1]) / 3]
        return (16 * r1[1] - r1[0]) / 15

    rp, rpp = richardson(d1), richardson(d2)
    return (8 * c(s) * rpp, 8 * c.derivative(s, 1) * rp, c.derivative(s, 2) * f0)


def heun_residual(dm, s: float, relative: bool = False) -> float:
    """``|8 Q rho'' + 8 Q' rho' + Q'' rho|`` with ``Q = (s-e1)(s-e2)(s-e3)``.

    Derivatives are Richardson-extrapolated central differences of the
    closed-form density.  With ``relative=True`` the residual is divided by
    the largest of the three term magnitudes.
    """
    terms = _heun_terms(_as_model(dm), float(s))
    res = abs(sum(terms))
    if relative:
        return res / max(abs(t) for t in terms)
    return res


def _limit_finite(num: np.poly1d, den: np.poly1d, p: float, k: int) -> float:
    """``lim_{s -> p} (s - p)**k num(s) / den(s)`` by deflating ``den``."""
    scale = max(1.0, abs(p))
    mult = 0
    while den.order > 0 and abs(den(p)) <= 1e-10 * scale**den.order * max(abs(den.coeffs)):
        den, _ = np.polydiv(den, np.poly1d([1.0, -p]))
        den = np.poly1d(den)
        mult += 1
    if k > mult:
        return 0.0
    if k < mult and abs(num(p)) > 0:
        return math.inf
    return float(num(p) / den(p))


def _limit_infinity(num: np.poly1d, den: np.poly1d, k: int) -> float:
    """``lim_{s -> inf} s**k num(s) / den(s)``."""
    top = np.polymul(np.poly1d([1.0] + [0.0] * k), num)
    top = np.poly1d(top)
    if top.order < den.order:
        return 0.0
    if top.order > den.order:
        return math.inf
    return float(top.coeffs[0] / den.coeffs[0])


def _heun_coefficients(c: Cubic):
    q = np.poly1d(np.poly([c.e1, c.e2, c.e3]))
    a1 = (q.deriv(), q)
    a2 = (np.poly1d([3.0, -(c.e1 + c.e2 + c.e3)]), 4 * q)
    return a1, a2


def indicial_exponents(c: Cubic, point) -> tuple[float, float]:
    """Indicial exponents of ``rho'' + a1 rho' + a2 rho = 0`` at ``point``.

    ``point`` is ``"e1"``, ``"e2"``, ``"e3"``, ``"infinity"`` or a float.
    The coefficient limits are evaluated from the rational coefficients,
    not tabulated.
    """
    (n1, d1), (n2, d2) = _heun_coefficients(c)
    if point in ("infinity", "inf", math.inf):
        l1 = _limit_infinity(n1, d1, 1)
        l2 = _limit_infinity(n2, d2, 2)
        # zeta (zeta + 1) - l1 zeta + l2 = 0
        coeffs = [1.0, 1.0 - l1, l2]
    else:
        p = {"e1": c.e1, "e2": c.e2, "e3": c.e3}.get(point, point)
        p = float(p)
        l1 = _limit_finite(n1, d1, p, 1)
        l2 = _limit_finite(n2, d2, p, 2)
        # zeta (zeta - 1) + l1 zeta + l2 = 0
        coeffs = [1.0, l1 - 1.0, l2]
    b, cc = coeffs[1], coeffs[2]
    disc = b * b - 4 * cc
    if disc < 0:
        raise ValueError("complex indicial exponents")
    r = math.sqrt(disc)
    z1, z2 = (-b - r) / 2, (-b + r) / 2
    return (z1 + 0.0, z2 + 0.0)


def log_asymptote(c: Cubic, s: float) -> float:
    """Leading logarithmic behaviour of the density as ``s -> e2``."""
    a, b = c.e1 - c.e2, c.e2 - c.e3
    d = abs(s - c.e2)
    if d == 0:
        raise AtLogSingularity("s must differ from e2")
    return math.log(16 * a * b / (c.span * d)) / (2 * math.pi * math.sqrt(a * b))
