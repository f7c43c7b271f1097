"""Error distributions: seeded samplers and discretized weight grids.

Four one-dimensional families share a single scale parameter ``sigma``:

* ``gaussian``       -- N(0, sigma^2)
* ``poisson_scaled`` -- Poisson(lambda=1) draws multiplied by sigma
* ``uniform3sigma``  -- uniform on [-3*sigma, 3*sigma]
* ``exponential``    -- exponential with mean sigma

Samplers draw from the full (untruncated) law; only weight grids are
truncated to [-3*sigma, 3*sigma].  Randomness comes from numpy's
``default_rng`` (PCG64) seeded through ``SeedSequence``, so a given
(distribution, seed, count) always reproduces the same sequence and
spawned child streams are statistically independent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = ["KINDS", "ErrorDistribution", "WeightGrid", "sample", "weight_grid"]

KINDS = ("gaussian", "poisson_scaled", "uniform3sigma", "exponential")


@dataclass(frozen=True)
class ErrorDistribution:
    """A named error law with scale ``sigma`` (> 0)."""

    kind: str
    sigma: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}; expected one of {KINDS}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise ValueError(f"sigma must be finite and > 0, got {self.sigma!r}")


@dataclass(frozen=True)
class WeightGrid:
    """Evenly spaced points on [-3*sigma, 3*sigma] with normalized weights."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.points.shape != self.weights.shape:
            raise ValueError("points and weights must have the same shape")
        if np.any(self.weights < 0):
            raise ValueError("weights must be non-negative")
        if abs(self.weights.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")

    def __len__(self) -> int:
        return self.points.size


def sample(dist: ErrorDistribution, seed: int, count: int) -> np.ndarray:
    """Draw ``count`` values; deterministic for fixed (dist, seed, count)."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    s = dist.sigma
    if dist.kind == "gaussian":
        return rng.normal(0.0, s, count)
    if dist.kind == "poisson_scaled":
        return rng.poisson(1.0, count) * s
    if dist.kind == "uniform3sigma":
        return rng.uniform(-3 * s, 3 * s, count)
    return rng.exponential(s, count)


def _density(dist: ErrorDistribution, x: np.ndarray) -> np.ndarray:
    s = dist.sigma
    if dist.kind == "gaussian":
        return np.exp(-(x**2) / (2 * s * s))
    if dist.kind == "uniform3sigma":
        return np.ones_like(x)
    if dist.kind == "exponential":
        return np.where(x >= 0, np.exp(-np.clip(x, 0, None) / s), 0.0)
    # poisson_scaled: continuous extension of the pmf exp(-1)/k! with k = x/sigma,
    # via k! = Gamma(k+1); zero for x < 0.
    k = np.clip(x, 0, None) / s
    return np.where(x >= 0, np.exp(-1.0 - gammaln(k + 1.0)), 0.0)


def weight_grid(dist: ErrorDistribution, n: int) -> WeightGrid:
    """Discretize ``dist`` on n evenly spaced points spanning [-3*sigma, 3*sigma].

    Weights are proportional to the density at each point and sum to 1,
    which pins the minimum of any weighted fidelity-loss average at 0.
    """
    if n < 3:
        raise ValueError(f"need at least 3 grid points, got {n}")
    s = dist.sigma
    points = np.linspace(-3 * s, 3 * s, n)
    w = _density(dist, points)
    total = w.sum()
    if total <= 0:
        raise ValueError("distribution has no mass on the grid")
    return WeightGrid(points=points, weights=w / total)
