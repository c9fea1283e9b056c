"""Cubics with real ordered roots, exponent triples and family bookkeeping.

All spectral work happens in the *shifted frame*, where the middle root
``e2`` sits at the origin and

    Q(z + e2) = (z - x3) z (z - x1) = z**3 + v z**2 + w z,

with ``x1 = e1 - e2 > 0`` and ``x3 = e3 - e2 < 0``.  Results are shifted back
by ``e2`` before being reported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    InvalidKappa,
    NonDistinctRoots,
    NonPositiveExponent,
    UnorderedRoots,
)

__all__ = [
    "Cubic",
    "ExponentTriple",
    "FamilyKappa",
    "LinearCoefficient",
    "LAME_EXPONENTS",
    "make_cubic",
    "linear_coefficient",
    "effective_exponents",
]

ROOT_TOL = 1e-14


@dataclass(frozen=True)
class Cubic:
    """Monic real cubic ``(z - e1)(z - e2)(z - e3)`` with ``e1 > e2 > e3``."""

    e1: float
    e2: float
    e3: float

    def __post_init__(self):
        roots = (self.e1, self.e2, self.e3)
        if not all(math.isfinite(r) for r in roots):
            raise ValueError(f"roots must be finite, got {roots}")
        scale = max(abs(r) for r in roots) or 1.0
        for a, b in itertools.combinations(roots, 2):
            if abs(a - b) <= ROOT_TOL * scale:
                raise NonDistinctRoots(f"roots {roots} are not distinct")
        if not (self.e1 > self.e2 > self.e3):
            raise UnorderedRoots(f"roots must satisfy e1 > e2 > e3, got {roots}")

    @property
    def shift(self) -> float:
        return self.e2

    @property
    def x1(self) -> float:
        """Largest root in the shifted frame, ``e1 - e2``."""
        return self.e1 - self.e2

    @property
    def x3(self) -> float:
        """Smallest root in the shifted frame, ``e3 - e2``."""
        return self.e3 - self.e2

    @property
    def span(self) -> float:
        return self.e1 - self.e3

    @property
    def v(self) -> float:
        return -(self.x1 + self.x3)

    @property
    def w(self) -> float:
        return self.x1 * self.x3

    @property
    def roots(self) -> tuple[float, float, float]:
        return (self.e1, self.e2, self.e3)

    @classmethod
    def from_coefficients(cls, v: float, w: float, shift: float = 0.0) -> "Cubic":
        """Rebuild from the shifted-frame coefficients ``v, w`` and ``e2``."""
        disc = v * v - 4.0 * w
        if disc <= 0:
            raise NonDistinctRoots("v**2 - 4w must be positive")
        r = math.sqrt(disc)
        # cancellation-free roots of z**2 + v z + w
        q = -0.5 * (v + math.copysign(r, v))
        a, b = q, w / q
        return cls(max(a, b) + shift, shift, min(a, b) + shift)

    def __call__(self, z):
        """Evaluate ``Q(z) = (z - e1)(z - e2)(z - e3)``."""
        return (z - self.e1) * (z - self.e2) * (z - self.e3)

    def derivative(self, z, order: int = 1):
        e1, e2, e3 = self.roots
        if order == 1:
            return (z - e2) * (z - e3) + (z - e1) * (z - e3) + (z - e1) * (z - e2)
        if order == 2:
            return 6.0 * z - 2.0 * (e1 + e2 + e3)
        raise ValueError("only first and second derivatives are supported")


@dataclass(frozen=True)
class ExponentTriple:
    """Residues ``a1, a2, a3 > 0`` of the first-order coefficient at e1, e2, e3."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        for a in (self.a1, self.a2, self.a3):
            if not (a > 0 and math.isfinite(a)):
                raise NonPositiveExponent(f"exponents must be positive, got {self}")

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @property
    def total(self) -> float:
        return self.a1 + self.a2 + self.a3


LAME_EXPONENTS = ExponentTriple(0.5, 0.5, 0.5)


@dataclass(frozen=True)
class FamilyKappa:
    """Square-root exponents ``(k1, k2, k3)``, each 0 or 1/2."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self):
        for k in (self.k1, self.k2, self.k3):
            if k not in (0, 0.5):
                raise InvalidKappa(f"each kappa must be 0 or 1/2, got {self}")

    def __iter__(self):
        return iter((self.k1, self.k2, self.k3))

    @property
    def total(self) -> float:
        return self.k1 + self.k2 + self.k3

    @property
    def type_number(self) -> int:
        """Classical type (species) 1-4: one plus the number of square roots."""
        return 1 + sum(1 for k in self if k)

    @property
    def label(self) -> str:
        return ",".join("1/2" if k else "0" for k in self)

    @classmethod
    def all(cls) -> list["FamilyKappa"]:
        return [cls(*ks) for ks in itertools.product((0, 0.5), repeat=3)]

    @classmethod
    def parse(cls, text: str) -> "FamilyKappa":
        """Parse ``"0,1/2,0"`` / ``"0,0.5,0"`` / ``"010"``-style selectors."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        if len(parts) != 3:
            raise InvalidKappa(f"cannot parse kappa selector {text!r}")
        vals = []
        for p in parts:
            if p in ("0", "0.0"):
                vals.append(0)
            elif p in ("1/2", "0.5", ".5", "1"):
                vals.append(0.5)
            else:
                raise InvalidKappa(f"cannot parse kappa selector {text!r}")
        return cls(*vals)


@dataclass(frozen=True)
class LinearCoefficient:
    """``P(z) = alpha z**2 + beta z + gamma`` in the shifted frame."""

    alpha: float
    beta: float
    gamma: float

    def __call__(self, z):
        return (self.alpha * z + self.beta) * z + self.gamma


def make_cubic(e1: float, e2: float, e3: float) -> Cubic:
    return Cubic(float(e1), float(e2), float(e3))


def linear_coefficient(c: Cubic, a: ExponentTriple) -> LinearCoefficient:
    """Numerator of ``sum_i a_i / (z - e_i)`` over the monic shifted cubic.

    The shifted roots are ``(x1, 0, x3)``, so

        P(z) = a1 z (z - x3) + a2 (z - x1)(z - x3) + a3 (z - x1) z.
    """
    x1, x3 = c.x1, c.x3
    alpha = a.a1 + a.a2 + a.a3
    beta = -a.a1 * x3 - a.a2 * (x1 + x3) - a.a3 * x1
    gamma = a.a2 * x1 * x3
    return LinearCoefficient(alpha, beta, gamma)


def effective_exponents(a: ExponentTriple, k: FamilyKappa) -> ExponentTriple:
    """Exponents seen by the polynomial part after factoring out the square roots."""
    return ExponentTriple(a.a1 + 2 * k.k1, a.a2 + 2 * k.k2, a.a3 + 2 * k.k3)
