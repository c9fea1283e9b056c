"""Van Vleck roots for cubics with complex roots.

Without a real symmetric structure the spectrum is computed as the roots of
``Sp_{n,n+1}(t)``.  The three-term recurrence can be run on coefficient
arrays (``sp_coefficients``), but the monomial basis is badly conditioned
for these root sets beyond n ~ 30, so ``scatter`` drives Aberth-Ehrlich
iteration with values and derivatives taken straight from the recurrence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .cubic import LAME_EXPONENTS, ExponentTriple
from .errors import NoConvergence, NonDistinctRoots
from .tridiag import tridiag_entries

__all__ = [
    "ComplexCubic",
    "PolynomialCoefficients",
    "Scatter",
    "parse_complex",
    "sp_coefficients",
    "SpRecurrence",
    "sp_recurrence",
    "aberth_roots",
    "relative_residual",
    "thickness",
    "scatter",
]

RESCALE_EVERY = 16


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"``, ``"a-bi"``, ``"bi"`` or ``"a"`` (no spaces)."""
    t = text.strip().replace("i", "j")
    if " " in t:
        raise ValueError(f"no spaces allowed in complex literal {text!r}")
    if t.endswith("j") and t[:-1] in ("", "+", "-") or t.endswith(("+j", "-j")):
        t = t[:-1] + "1j"
    return complex(t)


@dataclass(frozen=True)
class ComplexCubic:
    """Monic cubic with three distinct complex roots.

    ``origin`` selects the root moved to 0 before building the recurrence.
    """

    r1: complex
    r2: complex
    r3: complex
    origin: int = 1

    def __post_init__(self):
        roots = self.roots
        scale = max(abs(r) for r in roots) or 1.0
        for a, b in itertools.combinations(roots, 2):
            if abs(a - b) <= 1e-12 * scale:
                raise NonDistinctRoots(f"roots {roots} are not distinct")
        if self.origin not in (0, 1, 2):
            raise ValueError("origin must be 0, 1 or 2")

    @property
    def roots(self) -> tuple[complex, complex, complex]:
        return (complex(self.r1), complex(self.r2), complex(self.r3))

    @property
    def shift(self) -> complex:
        return self.roots[self.origin]

    @property
    def shifted_roots(self) -> tuple[complex, complex, complex]:
        return tuple(r - self.shift for r in self.roots)

    @property
    def v(self) -> complex:
        a, b = (r for k, r in enumerate(self.shifted_roots) if k != self.origin)
        return -(a + b)

    @property
    def w(self) -> complex:
        a, b = (r for k, r in enumerate(self.shifted_roots) if k != self.origin)
        return a * b


@dataclass(frozen=True, eq=False)
class PolynomialCoefficients:
    """Monic coefficients (highest degree first) of ``Sp_{n,n+1}`` in the shifted frame."""

    coeffs: np.ndarray
    log_scale: float = 0.0

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1


def _linear_coefficient(c: ComplexCubic, a: ExponentTriple):
    er = c.shifted_roots
    p = np.zeros(3, dtype=complex)
    for i, ai in enumerate(a):
        others = [er[j] for j in range(3) if j != i]
        p += ai * np.poly(others)
    return p  # alpha, beta, gamma


def sp_coefficients(c: ComplexCubic, a: ExponentTriple, n: int) -> PolynomialCoefficients:
    """Characteristic polynomial of ``M_n`` from the three-term recurrence.

    The two live iterates are rescaled every ``RESCALE_EVERY`` steps; the
    accumulated log-scale is kept in ``log_scale`` and the result is
    renormalized to be monic.
    """
    alpha, beta, gamma = _linear_coefficient(c, a)
    _, xi, off_a, off_g = tridiag_entries(c.v, c.w, alpha, beta, gamma, n)
    psi = off_a * off_g
    prev = np.zeros(1, dtype=complex)
    cur = np.ones(1, dtype=complex)
    log_scale = 0.0
    for i in range(1, n + 2):
        nxt = np.append(cur, 0) - xi[i - 1] * np.concatenate(([0], cur))
        if i >= 2:
            nxt[2:] -= psi[i - 2] * prev
        prev, cur = cur, nxt
        if i % RESCALE_EVERY == 0:
            s = np.max(np.abs(cur))
            prev, cur = prev / s, cur / s
            log_scale += math.log(s)
    lead = cur[0]
    log_scale += math.log(abs(lead))
    return PolynomialCoefficients(cur / lead, log_scale)


@dataclass(frozen=True, eq=False)
class SpRecurrence:
    """Diagonal ``xi`` and products ``psi`` of ``M_n`` (shifted frame, complex)."""

    xi: np.ndarray
    psi: np.ndarray

    @property
    def degree(self) -> int:
        return self.xi.size

    def evaluate(self, z):
        """``(Sp, Sp', scale)`` at each ``z``.

        ``scale`` is the same recurrence run on magnitudes, the natural size
        of the rounding error in ``Sp``.  The three outputs share an unknown
        power-of-two factor, which cancels in every ratio used here.
        """
        z = np.asarray(z, dtype=complex)
        p0, p1 = np.zeros_like(z), np.ones_like(z)
        d0, d1 = np.zeros_like(z), np.zeros_like(z)
        a0, a1 = np.zeros(z.shape), np.ones(z.shape)
        for k in range(self.xi.size):
            u = z - self.xi[k]
            q = self.psi[k - 1] if k else 0.0
            p2 = u * p1 - q * p0
            d2 = p1 + u * d1 - q * d0
            a2 = np.abs(u) * a1 + abs(q) * a0
            _, e = np.frexp(np.maximum(a2, a1))
            p0, p1 = np.ldexp(p1.real, -e) + 1j * np.ldexp(p1.imag, -e), \
                np.ldexp(p2.real, -e) + 1j * np.ldexp(p2.imag, -e)
            d0, d1 = np.ldexp(d1.real, -e) + 1j * np.ldexp(d1.imag, -e), \
                np.ldexp(d2.real, -e) + 1j * np.ldexp(d2.imag, -e)
            a0, a1 = np.ldexp(a1, -e), np.ldexp(a2, -e)
        return p1, d1, a1

    def relative_residual(self, roots) -> np.ndarray:
        val, _, scale = self.evaluate(roots)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(scale > 0, np.abs(val) / scale, 0.0)

    def error_estimate(self, roots) -> np.ndarray:
        """First-order forward error ``eps * scale / |Sp'|`` of each root."""
        _, der, scale = self.evaluate(roots)
        with np.errstate(divide="ignore"):
            return np.finfo(float).eps * scale / np.abs(der)


def sp_recurrence(c: ComplexCubic, a: ExponentTriple, n: int) -> SpRecurrence:
    alpha, beta, gamma = _linear_coefficient(c, a)
    _, xi, off_a, off_g = tridiag_entries(c.v, c.w, alpha, beta, gamma, n)
    return SpRecurrence(np.asarray(xi, dtype=complex), np.asarray(off_a * off_g, dtype=complex))


def _horner(coeffs: np.ndarray, z: np.ndarray):
    p = np.full_like(z, coeffs[0])
    dp = np.zeros_like(z)
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def relative_residual(coeffs, roots) -> np.ndarray:
    """``|p(z)| / sum_k |c_k| |z|**k`` at each root (backward-error scale)."""
    coeffs = np.asarray(coeffs, dtype=complex)
    roots = np.asarray(roots, dtype=complex)
    p, _ = _horner(coeffs, roots)
    scale, _ = _horner(np.abs(coeffs).astype(complex), np.abs(roots).astype(complex))
    scale = np.abs(scale)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(scale > 0, np.abs(p) / scale, 0.0)


def aberth_roots(p, max_sweeps: int = 500, tol: float = 1e-10) -> np.ndarray:
    """All roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

    ``p`` is :class:`PolynomialCoefficients`, a coefficient sequence (highest
    degree first), or an :class:`SpRecurrence` evaluated directly.  Converged
    when every root's relative residual is at most ``tol``; raises
    :class:`NoConvergence` otherwise.
    """
    if isinstance(p, SpRecurrence):
        deg = p.degree
        evaluate = p.evaluate
        residual = p.relative_residual
        center = np.mean(p.xi)
        # Gershgorin-type radius; values carry an unknown power-of-two factor
        radius = float(np.max(np.abs(p.xi - center)) + 2 * np.sqrt(np.max(np.abs(p.psi), initial=0.0)))
    else:
        coeffs = p.coeffs if isinstance(p, PolynomialCoefficients) else p
        coeffs = np.asarray(coeffs, dtype=complex)
        coeffs = coeffs / coeffs[0]
        deg = coeffs.size - 1
        if deg < 1:
            raise ValueError("polynomial must have degree >= 1")

        def evaluate(z):
            return _horner(coeffs, z)

        def residual(z):
            return relative_residual(coeffs, z)

        center = -coeffs[1] / deg
        # geometric mean of the root distances from the centroid
        radius = abs(_horner(coeffs, np.array([center]))[0][0]) ** (1.0 / deg)
    if deg == 1:
        z = np.array([center], dtype=complex)
        return z - evaluate(z)[0] / evaluate(z)[1]
    radius = radius or 1.0
    angles = 2 * np.pi * np.arange(deg) / deg + 0.4
    z = center + radius * np.exp(1j * angles)

    active = np.ones(deg, dtype=bool)
    for _ in range(max_sweeps):
        val, der = evaluate(z)[:2]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = val / der
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulse = np.sum(1.0 / diff, axis=1)
            step = ratio / (1.0 - ratio * repulse)
        step = np.where(np.isfinite(step), step, 0.0)
        step[~active] = 0.0
        z = z - step
        small = np.abs(step) <= 4 * np.finfo(float).eps * np.maximum(np.abs(z), 1e-300)
        active &= ~small
        if not active.any():
            break
    if np.max(residual(z)) > tol:
        raise NoConvergence("Aberth iteration did not reach the residual target")
    return z


def thickness(points) -> float:
    """Max distance of each point from the segment through its neighbours.

    Points are ordered by projection on their principal axis; a set lying on
    a smooth curve gives a value that shrinks with the point spacing.
    """
    pts = np.asarray(points, dtype=complex)
    if pts.size < 3:
        return 0.0
    xy = np.column_stack((pts.real, pts.imag))
    xy0 = xy - xy.mean(axis=0)
    _, _, vt = np.linalg.svd(xy0, full_matrices=False)
    order = np.argsort(xy0 @ vt[0])
    q = pts[order]
    a, b, p = q[:-2], q[2:], q[1:-1]
    ab = b - a
    denom = np.maximum(np.abs(ab) ** 2, np.finfo(float).tiny)
    frac = np.clip(((p - a) * np.conj(ab)).real / denom, 0.0, 1.0)
    return float(np.max(np.abs(p - (a + frac * ab))))


@dataclass(frozen=True, eq=False)
class Scatter:
    """Roots in the reported frame with diagnostics.

    ``error_estimate`` is the largest first-order forward error bound over
    the roots; ``origin`` is the root index that was moved to 0.
    """

    points: np.ndarray
    thickness: float
    min_separation: float
    max_residual: float
    error_estimate: float
    origin: int


def scatter(
    c: ComplexCubic,
    n: int,
    a: ExponentTriple = LAME_EXPONENTS,
    auto_origin: bool = True,
) -> Scatter:
    """Roots of ``Sp_n`` (reported frame) plus shape diagnostics.

    The roots do not depend on which root of the cubic is moved to 0, but
    their conditioning in double precision does, by orders of magnitude.
    With ``auto_origin`` every choice is tried and the one with the smallest
    forward error estimate is kept; otherwise ``c.origin`` is used.
    """
    origins = (0, 1, 2) if auto_origin else (c.origin,)
    best = None
    for o in origins:
        cc = ComplexCubic(c.r1, c.r2, c.r3, origin=o)
        rec = sp_recurrence(cc, a, n)
        try:
            roots = aberth_roots(rec)
        except NoConvergence:
            if len(origins) == 1:
                raise
            continue
        err = float(np.max(rec.error_estimate(roots)))
        if best is None or err < best[0]:
            best = (err, o, roots + cc.shift, float(np.max(rec.relative_residual(roots))))
    if best is None:
        raise NoConvergence("Aberth iteration failed for every choice of origin")
    err, o, pts, res = best
    pts = pts[np.lexsort((pts.imag, pts.real))]
    d = np.abs(pts[:, None] - pts[None, :])
    np.fill_diagonal(d, np.inf)
    sep = float(d.min()) if pts.size > 1 else math.inf
    return Scatter(pts, thickness(pts), sep, res, err, o)
