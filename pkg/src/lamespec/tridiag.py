"""Tridiagonal formulation of the Heine-Stieltjes problem.

For ``Q(z) = z**3 + v z**2 + w z`` and ``P(z) = alpha z**2 + beta z + gamma``
we look for a polynomial ``S`` of degree ``m`` and a linear ``V(z) =
-theta_m (z - t)`` such that ``Q S'' + P S' + V S = 0``.  Writing
``S = a_0 z**m + ... + a_m`` turns this into ``M_m(t) A = 0`` with ``M_m``
tridiagonal, ``theta_m = m (m - 1 + alpha)`` and

    xi_i    = -(v (m-i)(m-i+1) + beta (m-i+1)) / theta_m,        i = 1..m+1
    alpha_i = ((m-i)(m-i+1) + alpha (m-i+1)) / theta_m - 1,      i = 2..m+1
    gamma_i = (w (m-i+1)(m-i+2) + gamma (m-i+2)) / theta_m,      i = 2..m+1

on the diagonal (``t - xi_i``), super-diagonal and sub-diagonal.  The admissible
``t`` are the eigenvalues of the matrix with diagonal ``xi`` and off-diagonal
products ``psi_i = alpha_i gamma_i``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal, solve_banded

from .cubic import Cubic, ExponentTriple, LinearCoefficient, linear_coefficient
from .errors import (
    DegreeTooSmall,
    IndexOutOfRange,
    NonPositivePsi,
    NotAnEigenvalue,
)

__all__ = [
    "TridiagSpec",
    "SolutionVector",
    "build_tridiag",
    "tridiag_entries",
    "check_psi_positivity",
    "eigenvalues",
    "sturm_count",
    "sp_eval",
    "null_vector",
    "van_vleck_roots",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class TridiagSpec:
    """Entries of ``M_m`` for one degree ``m`` (``m + 1`` rows)."""

    degree: int
    theta: float
    xi: np.ndarray
    off_a: np.ndarray
    off_g: np.ndarray
    psi: np.ndarray

    @classmethod
    def from_recurrence(cls, xi, psi) -> "TridiagSpec":
        """Hand-built spec from diagonal ``xi`` and products ``psi`` only.

        The off-diagonal factors are set to ``(-1, -psi)``; ``theta`` is NaN.
        """
        xi = np.asarray(xi, dtype=float)
        psi = np.asarray(psi, dtype=float)
        if psi.shape != (xi.size - 1,):
            raise ValueError("psi must have exactly one entry fewer than xi")
        return cls(xi.size - 1, float("nan"), xi, -np.ones_like(psi), -psi, psi)

    @property
    def size(self) -> int:
        return self.xi.size

    def gershgorin(self) -> tuple[float, float]:
        """Gershgorin interval of the symmetrized matrix."""
        s = np.sqrt(np.abs(self.psi))
        r = np.zeros_like(self.xi)
        r[:-1] += s
        r[1:] += s
        return float(np.min(self.xi - r)), float(np.max(self.xi + r))

    def matvec(self, t: float, a: np.ndarray) -> np.ndarray:
        """``M_m(t) @ a`` in the original (non-symmetric) form."""
        a = np.asarray(a, dtype=float)
        out = (t - self.xi) * a
        out[:-1] += self.off_a * a[1:]
        out[1:] += self.off_g * a[:-1]
        return out


@dataclass(frozen=True, eq=False)
class SolutionVector:
    """Coefficients ``a_0..a_m`` (leading first) of the polynomial part ``S``.

    Normalized so that the entry of largest magnitude equals ``+1``.
    """

    coeffs: np.ndarray

    def __call__(self, z):
        return np.polyval(self.coeffs, z)

    def polynomial(self) -> np.poly1d:
        return np.poly1d(self.coeffs)


def tridiag_entries(v, w, alpha, beta, gamma, m: int):
    """``(theta, xi, off_a, off_g)`` for degree ``m``; complex input allowed."""
    if m < 1:
        raise DegreeTooSmall(f"degree must be >= 1, got {m}")
    theta = m * (m - 1 + alpha)
    i = np.arange(1, m + 2, dtype=float)
    j = m - i
    xi = -(v * j * (j + 1) + beta * (j + 1)) / theta
    j = j[1:]
    off_a = (j * (j + 1) + alpha * (j + 1)) / theta - 1.0
    off_g = (w * (j + 1) * (j + 2) + gamma * (j + 2)) / theta
    return theta, xi, off_a, off_g


def build_tridiag(c: Cubic, p: LinearCoefficient, m: int) -> TridiagSpec:
    theta, xi, off_a, off_g = tridiag_entries(c.v, c.w, p.alpha, p.beta, p.gamma, m)
    return TridiagSpec(m, float(theta), xi, off_a, off_g, off_a * off_g)


def check_psi_positivity(t: TridiagSpec) -> bool:
    return bool(np.all(t.psi > 0))


def sturm_count(t: TridiagSpec, x) -> np.ndarray:
    """Number of eigenvalues strictly below each ``x`` (LDL^T pivot signs)."""
    x = np.asarray(x, dtype=float)
    scale = max(1.0, float(np.max(np.abs(t.psi), initial=0.0)))
    pivmin = np.finfo(float).tiny * scale
    d = t.xi[0] - x
    d = np.where(np.abs(d) < pivmin, -pivmin, d)
    count = (d < 0).astype(int)
    for k in range(1, t.size):
        d = (t.xi[k] - x) - t.psi[k - 1] / d
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        count += d < 0
    return count


def _bisection(t: TridiagSpec) -> np.ndarray:
    lo0, hi0 = t.gershgorin()
    radius = max(abs(lo0), abs(hi0), hi0 - lo0, np.finfo(float).tiny)
    pad = 4 * _EPS * radius
    n = t.size
    k = np.arange(n)
    lo = np.full(n, lo0 - pad)
    hi = np.full(n, hi0 + pad)
    for _ in range(200):
        width = hi - lo
        tol = 2 * _EPS * np.maximum(np.abs(lo), np.abs(hi)) + 1e-16 * radius
        if np.all(width <= tol):
            break
        mid = 0.5 * (lo + hi)
        below = sturm_count(t, mid) > k
        hi = np.where(below, mid, hi)
        lo = np.where(below, lo, mid)
    return 0.5 * (lo + hi)


def eigenvalues(t: TridiagSpec, method: str = "bisection") -> np.ndarray:
    """Ascending roots of ``det M_m(t)``.

    ``method="bisection"`` is the Sturm-sequence reference; ``"lapack"``
    delegates to ``scipy.linalg.eigvalsh_tridiagonal`` on the symmetrized
    matrix (diagonal ``xi``, off-diagonal ``sqrt(psi)``).
    """
    if not check_psi_positivity(t):
        raise NonPositivePsi("all psi must be positive for a real spectrum")
    if t.size == 1:
        return t.xi.copy()
    if method == "bisection":
        return _bisection(t)
    if method == "lapack":
        return eigvalsh_tridiagonal(t.xi, np.sqrt(t.psi))
    raise ValueError(f"unknown method {method!r}")


def van_vleck_roots(c: Cubic, a: ExponentTriple, m: int, method: str = "bisection") -> np.ndarray:
    """Ascending roots ``t`` of the ``m + 1`` Van Vleck polynomials, reported frame."""
    return eigenvalues(build_tridiag(c, linear_coefficient(c, a), m), method) + c.shift


def sp_eval(t: TridiagSpec, i: int, x):
    """Principal minor determinant ``Sp_{m,i}(x)`` via the three-term recurrence.

    Iterates are renormalized by powers of two so intermediate values never
    overflow; the final value is only infinite if it is genuinely out of range.
    """
    if not 0 <= i <= t.size:
        raise IndexOutOfRange(f"index {i} outside 0..{t.size}")
    x = np.asarray(x, dtype=float)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    expo = np.zeros(x.shape, dtype=int)
    for k in range(1, i + 1):
        nxt = (x - t.xi[k - 1]) * cur
        if k >= 2:
            nxt = nxt - t.psi[k - 2] * prev
        _, e = np.frexp(np.maximum(np.abs(nxt), np.abs(cur)))
        prev = np.ldexp(cur, -e)
        cur = np.ldexp(nxt, -e)
        expo = expo + e
    out = np.ldexp(cur, expo)
    return out[()] if out.ndim == 0 else out


def null_vector(t: TridiagSpec, eig: float, rtol: float = 1e-9) -> SolutionVector:
    """Nontrivial solution of ``M_m(eig) A = 0``.

    Computed by inverse iteration on the symmetrized matrix and mapped back
    through the diagonal similarity ``d_i / d_{i-1} = sqrt(gamma_i / alpha_i)``.
    Raises :class:`NotAnEigenvalue` when ``||M A||_inf`` exceeds
    ``rtol * ||A||_inf * ||M||_inf``.
    """
    if not check_psi_positivity(t):
        raise NonPositivePsi("all psi must be positive")
    n = t.size
    eig = float(eig)
    if n == 1:
        coeffs = np.ones(1)
    else:
        off = np.sqrt(t.psi)
        lo, hi = t.gershgorin()
        shift = eig + 8 * _EPS * max(abs(lo), abs(hi), 1.0)
        ab = np.zeros((3, n))
        ab[0, 1:] = off
        ab[1] = t.xi - shift
        ab[2, :-1] = off
        y = np.ones(n) / np.sqrt(n)
        for _ in range(3):
            y = solve_banded((1, 1), ab, y)
            y /= np.max(np.abs(y))
        logd = np.concatenate(([0.0], np.cumsum(0.5 * np.log(t.off_g / t.off_a))))
        with np.errstate(divide="ignore"):
            log_a = logd + np.log(np.abs(y))
        coeffs = np.sign(y) * np.exp(log_a - np.max(log_a))
    k = int(np.argmax(np.abs(coeffs)))
    coeffs = coeffs / coeffs[k]

    resid = np.max(np.abs(t.matvec(eig, coeffs)))
    m_norm = np.abs(eig - t.xi)
    m_norm[:-1] += np.abs(t.off_a)
    m_norm[1:] += np.abs(t.off_g)
    if resid > rtol * np.max(np.abs(coeffs)) * np.max(m_norm):
        raise NotAnEigenvalue(f"{eig!r} is not an eigenvalue (residual {resid:.3e})")
    return SolutionVector(coeffs)
