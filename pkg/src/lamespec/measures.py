"""Root-counting measures and their distance to the limiting density."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import DensityModel, _as_model, cdf
from .errors import BadRange, DuplicateAtoms, EmptyInput

__all__ = ["EmpiricalMeasure", "Histogram", "empirical", "ks_distance", "histogram"]


@dataclass(frozen=True, eq=False)
class EmpiricalMeasure:
    """Uniform probability measure on strictly ascending atoms."""

    atoms: np.ndarray

    @property
    def count(self) -> int:
        return self.atoms.size

    @property
    def weight(self) -> float:
        return 1.0 / self.atoms.size

    def cdf(self, x):
        """Right-continuous step CDF."""
        return np.searchsorted(self.atoms, x, side="right") / self.atoms.size


@dataclass(frozen=True, eq=False)
class Histogram:
    edges: np.ndarray
    counts: np.ndarray
    heights: np.ndarray

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)


def empirical(roots) -> EmpiricalMeasure:
    atoms = np.sort(np.asarray(roots, dtype=float).ravel())
    if atoms.size == 0:
        raise EmptyInput("need at least one root")
    if np.any(np.diff(atoms) <= 0):
        raise DuplicateAtoms("roots must be pairwise distinct")
    return EmpiricalMeasure(atoms)


def ks_distance(em: EmpiricalMeasure, dm: DensityModel | object) -> float:
    """Sup distance between the empirical CDF and the model CDF.

    The supremum of |step - continuous| is attained at an atom, either just
    to the left (empirical value k/n) or at the atom ((k+1)/n).
    """
    dm = _as_model(dm)
    n = em.count
    f = np.atleast_1d(cdf(dm, em.atoms))
    k = np.arange(n)
    return float(max(np.max((k + 1) / n - f), np.max(f - k / n)))


def histogram(em: EmpiricalMeasure, bins: int, lo: float, hi: float) -> Histogram:
    """Counts and density-normalized heights ``count / (n * width)``."""
    if bins < 1 or not lo < hi:
        raise BadRange("need bins >= 1 and lo < hi")
    counts, edges = np.histogram(em.atoms, bins=bins, range=(lo, hi))
    heights = counts / (em.count * np.diff(edges))
    return Histogram(edges, counts, heights)
