"""Composite segmented gates under a shared (fully correlated) error.

Duration convention
-------------------
The tabulated segment length ``t`` enters the evolution with a factor
one half: segment k contributes ``exp(-i*(t_k/2)*(omega_k*X -
(delta_k+eps)*Z))``.  This matches the physical-length convention of
directional couplers (where a segment of length z evolves with z/2)
and is the convention under which the published three- and
four-segment solution tables compose to their target gates.  A single
segment ``(omega=1, delta=0, t=pi)`` therefore realizes ``-iX``.

Segments are listed in physical action order: segment 1 acts first, so
``realize`` computes ``U_N @ ... @ U_2 @ U_1``.  Optional bookends wrap
the product as ``U_c @ product @ U_c`` with ``U_c = cos(theta)*I -
i*sin(theta)*X``, modelling the residual coupling where the waveguides
approach and separate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .su2 import ID2, X, SegmentParams, _axis_angle, fidelity_many

__all__ = [
    "CompositeGate",
    "bookend_matrix",
    "realize",
    "realize_many",
    "error_series",
    "uniform_gate",
    "UNIFORM_LABELS",
]


@dataclass(frozen=True)
class CompositeGate:
    """Ordered list of segments, with an optional bookend coupler angle."""

    segments: tuple[SegmentParams, ...]
    bookend_angle: float | None = None

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        if len(segs) < 1:
            raise ValueError("a composite gate needs at least one segment")
        for s in segs:
            if not isinstance(s, SegmentParams):
                raise TypeError(f"segments must be SegmentParams, got {type(s).__name__}")
        if self.bookend_angle is not None:
            th = self.bookend_angle
            if not (math.isfinite(th) and 0.0 <= th < math.pi / 2):
                raise ValueError(f"bookend_angle must lie in [0, pi/2), got {th!r}")

    @property
    def n_segments(self) -> int:
        return len(self.segments)


def bookend_matrix(theta: float) -> np.ndarray:
    """Residual coupler rotation cos(theta)*I - i*sin(theta)*X."""
    return math.cos(theta) * ID2 - 1j * math.sin(theta) * X


def realize(gate: CompositeGate, epsilon: float = 0.0) -> np.ndarray:
    """Realize the composite under a shared detuning error ``epsilon``."""
    return realize_many(gate, np.array([float(epsilon)]))[0]


def realize_many(gate: CompositeGate, epsilons: np.ndarray) -> np.ndarray:
    """Vectorized :func:`realize`: one unitary per entry of ``epsilons``.

    The same error offsets every segment's detuning (full correlation).
    """
    eps = np.atleast_1d(np.asarray(epsilons, dtype=float))
    if not np.all(np.isfinite(eps)):
        raise ValueError("epsilons must be finite")
    u = None
    for seg in gate.segments:
        step = _axis_angle(seg.omega, seg.delta + eps, seg.t / 2.0)
        u = step if u is None else step @ u
    if gate.bookend_angle is not None:
        uc = bookend_matrix(gate.bookend_angle)
        u = uc @ u @ uc
    return u


def error_series(gate: CompositeGate, order: int, h: float = 1e-4) -> list[np.ndarray]:
    """Central finite-difference Taylor coefficients of U(eps) - U(0) at eps = 0.

    Returns ``[E_1, ..., E_order]`` with ``order`` in {1, 2, 3}:
    E_1 from a 2-point, E_2 from a 3-point and E_3 from a 5-point
    stencil, so E_k estimates (d^k U/d eps^k)/k! at 0.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"order must be 1, 2 or 3, got {order!r}")
    if not (1e-6 <= h <= 1e-2):
        raise ValueError(f"step h must lie in [1e-6, 1e-2], got {h!r}")
    pts = realize_many(gate, np.array([-2 * h, -h, 0.0, h, 2 * h]))
    um2, um1, u0, up1, up2 = pts
    out = [(up1 - um1) / (2 * h)]
    if order >= 2:
        out.append((up1 - 2 * u0 + um1) / (2 * h * h))
    if order >= 3:
        out.append((up2 - 2 * up1 + 2 * um1 - um2) / (12 * h**3))
    return out


# Bloch rotation half-angle (about X unless noted) realizing each target
# up to a global phase, for a single segment with coupling omega:
# duration t = 2*theta/omega.  (iX)^(1/n) is a positive X rotation, reached
# with a positive coupling via theta = pi - pi/(2n).
_UNIFORM_X_ANGLE = {
    "X": math.pi / 2,
    "iX": math.pi / 2,
    "-iX": math.pi / 2,
    "X^(1/2)": math.pi / 4,
    "X^(1/3)": math.pi / 6,
    "sqrt13": math.acos(math.sqrt(1 / 3)),
}

UNIFORM_LABELS = tuple(_UNIFORM_X_ANGLE) + ("H", "iH", "(iX)^(1/n)")


def uniform_gate(label: str, omega: float = 1.0) -> CompositeGate:
    """Single-segment (non-composite) gate for ``label``, the robustness baseline.

    Hadamard targets use an equal-weight X-Z generator (delta = -omega);
    everything else is a pure X rotation.
    """
    if omega <= 0:
        raise ValueError(f"uniform gate coupling must be > 0, got {omega!r}")
    if label in ("H", "iH"):
        # exp(-i*(t/2)*omega*(X+Z)) = -iH at half-angle pi/2
        t = math.pi / (math.sqrt(2) * omega)
        return CompositeGate((SegmentParams(omega, -omega, t),))
    import re

    m = re.match(r"^\(iX\)\^\(1/(\d+)\)$", label)
    if m:
        theta = math.pi - math.pi / (2 * int(m.group(1)))
    elif label in _UNIFORM_X_ANGLE:
        theta = _UNIFORM_X_ANGLE[label]
    else:
        raise ValueError(f"no uniform single-segment construction for label {label!r}")
    return CompositeGate((SegmentParams(omega, 0.0, 2 * theta / omega),))
