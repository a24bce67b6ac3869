"""Zeros of a family member and their spacing statistics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceFailure, DegreeTooSmall, UnsupportedFamily
from .families import (
    Family,
    FamilySpec,
    Purpose,
    _frozen,
    newton_ratio,
    recurrence_coefficients,
    validate,
)
from .normal_form import laguerre_t0

NEWTON_STEP_TOL = 1e-14
NEWTON_MAX_ITER = 50
RESIDUAL_TOL = 1e-10
MAX_POLISH_SHIFT = 1e-6
DUPLICATE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ZeroSet:
    spec: FamilySpec
    zeros: np.ndarray
    spacings: np.ndarray
    second_differences: np.ndarray

    @property
    def n(self):
        return len(self.zeros)


@dataclass(frozen=True)
class FirstZeroBounds:
    """Known bounds on the smallest Laguerre zero.

    ``lower = (a+1)/n`` bounds ``x_1`` from below; ``upper_a`` and ``upper_b``
    bound it from above.  ``t0_below_upper`` records whether the stationary
    point ``t0`` of F lies below both upper bounds.
    """

    lower: float
    upper_a: float
    upper_b: float
    t0: float
    t0_below_upper: bool


def _polish(spec, raw):
    """Newton iteration on all zeros at once; converged entries stop moving."""
    x = raw.copy()
    active = np.ones(x.shape, dtype=bool)
    for _ in range(NEWTON_MAX_ITER):
        step = newton_ratio(spec, x[active])
        bad = ~np.isfinite(step)
        if bad.any():
            idx = int(np.flatnonzero(active)[np.argmax(bad)])
            raise ConvergenceFailure(f"non-finite Newton step at x={x[idx]!r}", idx + 1)
        x[active] -= step
        done = np.abs(step) <= NEWTON_STEP_TOL * np.maximum(1.0, np.abs(x[active]))
        active[np.flatnonzero(active)[done]] = False
        if not active.any():
            break
    scale = np.maximum(1.0, np.abs(x))
    # The residual test reads the size of the next Newton correction p / p'.
    resid = np.abs(newton_ratio(spec, x))
    for i in range(len(x)):
        if not resid[i] <= RESIDUAL_TOL * scale[i]:
            raise ConvergenceFailure(f"residual too large at x={x[i]!r}", i + 1)
        if abs(x[i] - raw[i]) > MAX_POLISH_SHIFT * scale[i]:
            raise ConvergenceFailure(f"Newton moved from eigenvalue {raw[i]!r} to {x[i]!r}", i + 1)
    return x


def spacing_profile(zs) -> tuple[np.ndarray, np.ndarray]:
    """First and second differences of the zeros (a ``ZeroSet`` or an array)."""
    zeros = np.asarray(zs.zeros if isinstance(zs, ZeroSet) else zs, dtype=float)
    if len(zeros) < 2:
        raise DegreeTooSmall("spacings need at least 2 zeros")
    spacings = np.diff(zeros)
    second = np.diff(spacings)
    return spacings, second


def compute_zeros(spec: FamilySpec) -> ZeroSet:
    """All zeros via the Jacobi-matrix eigenvalues, each refined by Newton's method."""
    validate(spec, Purpose.ZERO_COMPUTATION)
    rc = recurrence_coefficients(spec)
    if spec.n == 1:
        raw = np.array(rc.diagonal, dtype=float)
    else:
        raw = eigh_tridiagonal(rc.diagonal, rc.offdiagonal, eigvals_only=True)
    raw = np.sort(raw)
    zeros = _polish(spec, raw)
    if spec.symmetric:
        zeros = 0.5 * (zeros - zeros[::-1])

    lo, hi = spec.support
    for i, x in enumerate(zeros):
        if not (lo < x < hi):
            raise ConvergenceFailure(f"zero {x!r} outside the support", i + 1)
    gaps = np.diff(zeros)
    for i, d in enumerate(gaps):
        if d <= DUPLICATE_TOL * max(1.0, abs(zeros[i + 1])):
            raise ConvergenceFailure("coincident or unordered zeros after polishing", i + 2)

    spacings, second = spacing_profile(zeros) if spec.n > 1 else (gaps, np.diff(gaps))
    return ZeroSet(spec, _frozen(zeros), _frozen(spacings), _frozen(second))


def first_zero_bounds(spec: FamilySpec) -> FirstZeroBounds:
    if spec.kind is not Family.LAGUERRE:
        raise UnsupportedFamily("first-zero bounds are Laguerre-specific")
    validate(spec, Purpose.ZERO_COMPUTATION)
    a, n = spec.alpha, spec.n
    upper_a = (a + 1.0) * (a + 2.0) / (a + n + 1.0)
    upper_b = (a + 1.0) * (a + 3.0) / (a + 2.0 * n + 1.0)
    t0 = laguerre_t0(spec)
    return FirstZeroBounds(
        lower=(a + 1.0) / n,
        upper_a=upper_a,
        upper_b=upper_b,
        t0=t0,
        t0_below_upper=t0 < min(upper_a, upper_b),
    )
