"""AGM-based complete elliptic integrals, ``F(1/2, 1/2, 1; z)`` and
quadrature for integrands with inverse-square-root endpoint singularities.

Every closed-form value goes through the arithmetic-geometric mean:

    K(k)              = pi / (2 agm(1, sqrt(1 - k**2)))
    F(1/2, 1/2, 1; z) = 1 / agm(1, sqrt(1 - z))          for all z < 1

The quadrature routines are deliberately independent of the AGM path so that
they can serve as oracles for it.
"""

from __future__ import annotations

import inspect
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    ArgumentAtOrAboveOne,
    ModulusOutOfRange,
    NegativeInput,
    NonPositiveInput,
    QuadratureNotConverged,
)

__all__ = [
    "QuadratureSpec",
    "agm",
    "agm_iterations",
    "ellipK",
    "ellipK_imag",
    "f_half",
    "f_half_complement",
    "f_half_quadrature_oracle",
    "ellipK_quadrature_oracle",
    "quad_singular",
]

_AGM_RTOL = 4 * np.finfo(float).eps
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Settings for :func:`quad_singular`.

    ``level`` is the starting refinement level; tanh-sinh uses step
    ``2**-level`` and Gauss-Chebyshev uses ``16 * 2**level`` nodes.
    Refinement stops when two successive levels agree or ``max_level`` is hit.
    """

    method: str = "tanh-sinh"
    level: int = 3
    max_level: int = 12
    atol: float = 1e-15
    rtol: float = 1e-14

    def __post_init__(self):
        if self.method not in ("tanh-sinh", "gauss-chebyshev"):
            raise ValueError(f"unknown quadrature method {self.method!r}")
        if not (self.atol > 0 and self.rtol > 0):
            raise ValueError("tolerances must be positive")
        if self.level < 1 or self.max_level < self.level:
            raise ValueError("need 1 <= level <= max_level")


DEFAULT_QUADRATURE = QuadratureSpec()


def _agm(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(~(a > 0)) or np.any(~(b > 0)):
        raise NonPositiveInput("agm needs strictly positive arguments")
    a, b = np.broadcast_arrays(a, b)
    a = a.astype(float)
    b = b.astype(float)
    steps = 0
    while np.any(np.abs(a - b) > _AGM_RTOL * a):
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        steps += 1
        if steps > 64:
            break
    return 0.5 * (a + b), steps


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def agm(a, b):
    """Arithmetic-geometric mean (vectorized)."""
    return _scalar(_agm(a, b)[0])


def agm_iterations(a, b) -> int:
    """Number of AGM steps taken before the two means agree."""
    return _agm(a, b)[1]


def ellipK(zeta):
    """Complete elliptic integral of the first kind, modulus ``0 <= zeta < 1``."""
    z = np.asarray(zeta, dtype=float)
    if np.any(~((z >= 0) & (z < 1))):
        raise ModulusOutOfRange("modulus must satisfy 0 <= zeta < 1")
    kp = np.sqrt((1.0 - z) * (1.0 + z))
    return _scalar(_HALF_PI / _agm(1.0, kp)[0])


def ellipK_imag(kappa):
    """``K(i kappa)`` for real ``kappa >= 0`` (a real number)."""
    k = np.asarray(kappa, dtype=float)
    if np.any(~(k >= 0)):
        raise NegativeInput("kappa must be nonnegative")
    return _scalar(_HALF_PI / _agm(1.0, np.hypot(1.0, k))[0])


def f_half(z):
    """Gauss hypergeometric ``F(1/2, 1/2, 1; z)`` for real ``z < 1``.

    Equals ``(2/pi) K(sqrt z)`` on ``[0, 1)`` and ``(2/pi) K(i sqrt(-z))``
    for ``z < 0``; both reduce to ``1 / agm(1, sqrt(1 - z))``.
    """
    z = np.asarray(z, dtype=float)
    if np.any(~(z < 1)):
        raise ArgumentAtOrAboveOne("F(1/2,1/2,1;z) is evaluated only for z < 1")
    return _scalar(1.0 / _agm(1.0, np.sqrt(1.0 - z))[0])


def f_half_complement(zc):
    """``F(1/2, 1/2, 1; 1 - zc)`` for ``zc > 0`` without forming ``1 - zc``.

    Keeps full relative accuracy when the argument approaches 1.
    """
    zc = np.asarray(zc, dtype=float)
    if np.any(~(zc > 0)):
        raise ArgumentAtOrAboveOne("complement 1 - z must be positive")
    return _scalar(1.0 / _agm(1.0, np.sqrt(zc))[0])


# -- quadrature ---------------------------------------------------------------

_TS_TMAX = 4.5


def _wants_distances(f) -> bool:
    try:
        params = inspect.signature(f).parameters.values()
    except (TypeError, ValueError):
        return False
    positional = [
        p for p in params
        if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD, p.VAR_POSITIONAL)
    ]
    return len(positional) >= 3 or any(p.kind == p.VAR_POSITIONAL for p in positional)


def _tanh_sinh_nodes(level: int, half: float, odd_only: bool):
    """Offsets from both endpoints and weights for tanh-sinh at step 2**-level."""
    h = 2.0 ** -level
    jmax = int(math.ceil(_TS_TMAX / h))
    j = np.arange(1, jmax + 1, 2 if odd_only else 1, dtype=float)
    t = j * h
    u = _HALF_PI * np.sinh(t)
    # distance to the nearer endpoint, hw * (1 - tanh u), without cancellation
    near = half * 2.0 / (np.exp(2.0 * u) + 1.0)
    far = 2.0 * half - near
    wt = half * h * _HALF_PI * np.cosh(t) * 4.0 / (np.exp(u) + np.exp(-u)) ** 2
    dlo = np.concatenate((near, far))
    dhi = np.concatenate((far, near))
    wts = np.concatenate((wt, wt))
    if not odd_only:
        dlo = np.append(dlo, half)
        dhi = np.append(dhi, half)
        wts = np.append(wts, half * h * _HALF_PI)
    keep = (dlo > 0) & (dhi > 0) & (wts > 0)
    return dlo[keep], dhi[keep], wts[keep]


def _evaluate(f, lo, dlo, dhi, distances):
    x = lo + dlo
    vals = f(x, dlo, dhi) if distances else f(x)
    return np.broadcast_to(np.asarray(vals, dtype=float), x.shape)


def quad_singular(
    f: Callable,
    lo: float,
    hi: float,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> tuple[float, float]:
    """Integrate ``f`` over ``[lo, hi]``; endpoint singularities up to ``1/sqrt``.

    ``f`` is called with a 1-D array of abscissae.  If it accepts three
    positional arguments it is called as ``f(x, x - lo, hi - x)`` with the
    endpoint distances computed exactly, which is what keeps singular
    integrands accurate near the ends.

    Returns ``(value, abserr)``; raises :class:`QuadratureNotConverged` if two
    successive levels never agree to ``max(atol, rtol * |value|)``.
    """
    lo = float(lo)
    hi = float(hi)
    if hi == lo:
        return 0.0, 0.0
    if hi < lo:
        val, err = quad_singular(f, hi, lo, q)
        return -val, err
    distances = _wants_distances(f)
    half = 0.5 * (hi - lo)
    err = math.inf

    if q.method == "tanh-sinh":
        total = 0.0
        prev = None
        for level in range(q.level, q.max_level + 1):
            first = level == q.level
            dlo, dhi, wts = _tanh_sinh_nodes(level, half, odd_only=not first)
            vals = _evaluate(f, lo, dlo, dhi, distances)
            contrib = float(np.sum(wts * vals))
            # a new level halves the step: old sum scaled by 1/2 plus odd nodes
            total = contrib if first else 0.5 * total + contrib
            if not math.isfinite(total):
                raise QuadratureNotConverged("non-finite integrand values")
            if prev is not None:
                err = abs(total - prev)
                if err <= max(q.atol, q.rtol * abs(total)):
                    return total, err
            prev = total
    else:
        prev = None
        for level in range(q.level, q.max_level + 1):
            n = 16 * 2**level
            theta = (2.0 * np.arange(1, n + 1) - 1.0) * math.pi / (2.0 * n)
            dlo = 2.0 * half * np.cos(0.5 * theta) ** 2
            dhi = 2.0 * half * np.sin(0.5 * theta) ** 2
            vals = _evaluate(f, lo, dlo, dhi, distances)
            total = math.pi / n * float(np.sum(vals * np.sqrt(dlo * dhi)))
            if prev is not None:
                err = abs(total - prev)
                if err <= max(q.atol, q.rtol * abs(total)):
                    return total, err
            prev = total
    raise QuadratureNotConverged(
        f"no agreement by level {q.max_level} (last difference {err:.3e})"
    )


def f_half_quadrature_oracle(z: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """``F(1/2, 1/2, 1; z)`` from the Euler integral, by quadrature.

    ``(1/pi) * int_0^1 t**-1/2 (1-t)**-1/2 (1 - t z)**-1/2 dt``
    """
    z = float(z)
    if not z < 1:
        raise ArgumentAtOrAboveOne("z must be < 1")

    def integrand(t, d0, d1):
        # 1 - t z written as (1 - z) + z (1 - t) stays accurate for z near 1
        return 1.0 / np.sqrt(d0 * d1 * ((1.0 - z) + z * d1))

    val, _ = quad_singular(integrand, 0.0, 1.0, q)
    return val / math.pi


def ellipK_quadrature_oracle(zeta: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """``int_0^1 dt / sqrt((1 - t**2)(1 - zeta**2 t**2))`` by quadrature."""
    z2 = float(zeta) ** 2

    def integrand(t, d0, d1):
        return 1.0 / np.sqrt(d1 * (1.0 + t) * (1.0 - z2 * t * t))

    val, _ = quad_singular(integrand, 0.0, 1.0, q)
    return val
