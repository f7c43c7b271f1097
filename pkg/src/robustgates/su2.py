"""Exact 2x2 linear algebra for driven two-level systems.

Conventions
-----------
A constant-Hamiltonian segment with real coupling ``omega`` and real
detuning ``delta`` evolves under

    H = [[-delta, omega], [omega, delta]] = omega*X - delta*Z,

and a systematic detuning error ``epsilon`` shifts ``delta -> delta +
epsilon``.  The propagator is computed in closed form from the
axis-angle decomposition

    exp(-i*t*H) = cos(th)*I - i*sin(th)*(omega*X - d*Z)/w_g,

with ``d = delta + epsilon``, ``w_g = sqrt(omega**2 + d**2)`` the
generalized coupling and ``th = w_g * t``.  The zero-generator case
(``w_g == 0``) returns the identity.

Gate closeness is measured by the global-phase-invariant fidelity
``|Tr(A^dag B)| / 2``, so no canonical phase is enforced on any matrix
produced here.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ID2",
    "X",
    "Y",
    "Z",
    "SegmentParams",
    "propagator",
    "propagator_many",
    "fidelity",
    "fidelity_many",
    "standard_gate",
    "is_unitary",
]

ID2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)

_H = (X + Z) / math.sqrt(2)


@dataclass(frozen=True)
class SegmentParams:
    """One constant-Hamiltonian segment: coupling, detuning, duration.

    ``t`` is a duration (or physical length); it must be non-negative
    and all three fields finite.
    """

    omega: float
    delta: float
    t: float

    def __post_init__(self):
        for name in ("omega", "delta", "t"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"segment parameter {name!r} must be finite, got {v!r}")
        if self.t < 0:
            raise ValueError(f"segment duration must be >= 0, got {self.t}")


def _axis_angle(omega, delta_eff, tau):
    """Closed-form exp(-i*tau*(omega*X - delta_eff*Z)), broadcasting over arrays.

    ``tau * sinc`` keeps the sin(th)/w_g factor finite as w_g -> 0, so the
    zero-generator limit is exactly the identity.
    """
    omega = np.asarray(omega, dtype=float)
    delta_eff = np.asarray(delta_eff, dtype=float)
    tau = np.asarray(tau, dtype=float)
    w_g = np.hypot(omega, delta_eff)
    th = w_g * tau
    k = tau * np.sinc(th / np.pi)  # sin(th)/w_g, finite at w_g == 0
    c = np.cos(th)
    shape = np.broadcast(omega, delta_eff, tau).shape
    u = np.empty(shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c + 1j * k * delta_eff
    u[..., 0, 1] = -1j * k * omega
    u[..., 1, 0] = -1j * k * omega
    u[..., 1, 1] = c - 1j * k * delta_eff
    return u


def propagator(p: SegmentParams, epsilon: float = 0.0) -> np.ndarray:
    """Propagator exp(-i*p.t*(p.omega*X - (p.delta+epsilon)*Z)).

    The detuning error enters exactly as an offset on ``delta``; the
    result depends on ``(omega, delta+epsilon, t)`` only.
    """
    if not math.isfinite(epsilon):
        raise ValueError(f"epsilon must be finite, got {epsilon!r}")
    return _axis_angle(p.omega, p.delta + epsilon, p.t)


def propagator_many(p: SegmentParams, epsilons: np.ndarray) -> np.ndarray:
    """Vectorized :func:`propagator` over an array of detuning errors."""
    eps = np.asarray(epsilons, dtype=float)
    if not np.all(np.isfinite(eps)):
        raise ValueError("epsilons must be finite")
    return _axis_angle(p.omega, p.delta + eps, p.t)


def fidelity(ideal: np.ndarray, actual: np.ndarray) -> float:
    """Gate fidelity |Tr(ideal^dag actual)| / 2, in [0, 1].

    Symmetric in its arguments and invariant under a global phase of
    either argument.
    """
    return abs(np.trace(ideal.conj().T @ actual)) / 2.0


def fidelity_many(ideal: np.ndarray, actuals: np.ndarray) -> np.ndarray:
    """Fidelity of each matrix in a stack ``actuals`` (..., 2, 2) against ``ideal``."""
    tr = np.einsum("ij,...ji->...", ideal.conj().T, actuals)
    return np.abs(tr) / 2.0


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    """True if u^dag u = I to within ``tol`` per entry."""
    return bool(np.all(np.abs(u.conj().T @ u - ID2) <= tol))


_IX_ROOT = re.compile(r"^\(iX\)\^\(1/(\d+)\)$")
_X_ROOT = re.compile(r"^X\^\(1/(\d+)\)$")


def _x_power_root(n: int, base_phase: float) -> np.ndarray:
    """Principal n-th root of a gate P+ + exp(i*base_phase) P- in the X eigenbasis."""
    p_plus = (ID2 + X) / 2
    p_minus = (ID2 - X) / 2
    return p_plus + np.exp(1j * base_phase / n) * p_minus


def _ix_root(n: int) -> np.ndarray:
    # iX = exp(i*(pi/2)*X); the principal log gives (iX)^(1/n) = exp(i*pi/(2n)*X).
    th = math.pi / (2 * n)
    return math.cos(th) * ID2 + 1j * math.sin(th) * X


def standard_gate(label: str) -> np.ndarray:
    """Return a named 2x2 target gate.

    Recognized labels: ``X``, ``iX``, ``-iX``, ``H``, ``iH``,
    ``X^(1/2)``, ``X^(1/3)``, ``(iX)^(1/n)`` for integer n >= 1, and
    ``sqrt13`` for sqrt(1/3)*I - i*sqrt(2/3)*X.

    Roots are principal: ``X^(1/n)`` is ``exp(log(X)/n)`` and
    ``(iX)^(1/n)`` is ``exp(log(iX)/n)``, so the n-th power of the
    result reproduces the base gate exactly.
    """
    if label == "X":
        return X.copy()
    if label == "iX":
        return 1j * X
    if label == "-iX":
        return -1j * X
    if label == "H":
        return _H.copy()
    if label == "iH":
        return 1j * _H
    if label == "sqrt13":
        return math.sqrt(1 / 3) * ID2 - 1j * math.sqrt(2 / 3) * X
    m = _X_ROOT.match(label)
    if m:
        return _x_power_root(int(m.group(1)), math.pi)
    m = _IX_ROOT.match(label)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"root order must be >= 1 in {label!r}")
        return _ix_root(n)
    raise ValueError(f"unknown gate label {label!r}")
