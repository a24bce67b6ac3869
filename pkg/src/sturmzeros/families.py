"""Laguerre, Jacobi and ultraspherical polynomials.

Values follow the conventional normalisations: ``L_n^alpha`` has leading
coefficient ``(-1)**n / n!`` and ``P_n^(alpha, beta)(1) = binom(n + alpha, n)``.
The ultraspherical family is ``P_n^(alpha, alpha)``, i.e. the Jacobi case with
equal parameters, and is evaluated through the Jacobi recurrence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegreeNonPositive, Overflow, ParameterOutOfRange

MAX_DEGREE = 200
MAX_PARAMETER = 30.0

# Rescale the recurrence once values pass 2**RESCALE_EXP.
_RESCALE_EXP = 400


class Family(str, enum.Enum):
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"
    ULTRASPHERICAL = "ultraspherical"


class Purpose(str, enum.Enum):
    ZERO_COMPUTATION = "zero_computation"
    CLASSIFICATION = "classification"


@dataclass(frozen=True)
class FamilySpec:
    """One member of a polynomial family.

    ``beta`` is ``None`` for Laguerre; for the ultraspherical family it is
    forced to equal ``alpha``.
    """

    kind: Family
    alpha: float
    n: int
    beta: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Family(self.kind))
        object.__setattr__(self, "alpha", float(self.alpha))
        if self.kind is Family.LAGUERRE:
            if self.beta is not None:
                raise ParameterOutOfRange("beta absent for laguerre")
        elif self.kind is Family.ULTRASPHERICAL:
            if self.beta is not None and float(self.beta) != self.alpha:
                raise ParameterOutOfRange("beta == alpha for ultraspherical")
            object.__setattr__(self, "beta", self.alpha)
        else:
            if self.beta is None:
                raise ParameterOutOfRange("beta present for jacobi")
            object.__setattr__(self, "beta", float(self.beta))

    @classmethod
    def laguerre(cls, alpha, n):
        return cls(Family.LAGUERRE, alpha, n)

    @classmethod
    def jacobi(cls, alpha, beta, n):
        return cls(Family.JACOBI, alpha, n, beta)

    @classmethod
    def ultraspherical(cls, alpha, n):
        return cls(Family.ULTRASPHERICAL, alpha, n)

    @property
    def symmetric(self) -> bool:
        """True when the zeros are symmetric about the origin."""
        return self.kind is not Family.LAGUERRE and self.alpha == self.beta

    @property
    def support(self) -> tuple[float, float]:
        if self.kind is Family.LAGUERRE:
            return (0.0, math.inf)
        return (-1.0, 1.0)

    def label(self) -> str:
        if self.kind is Family.JACOBI:
            return f"jacobi(alpha={self.alpha!r}, beta={self.beta!r}, n={self.n})"
        return f"{self.kind.value}(alpha={self.alpha!r}, n={self.n})"


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Diagonal and sub-diagonal of the symmetric Jacobi matrix."""

    diagonal: np.ndarray
    offdiagonal: np.ndarray


@dataclass(frozen=True)
class EvalResult:
    value: float
    derivative: float


def validate(spec: FamilySpec, purpose: Purpose = Purpose.ZERO_COMPUTATION) -> FamilySpec:
    """Check ``spec`` for the given purpose and return it unchanged.

    Zero computation needs the orthogonality regime (``alpha, beta > -1``).
    Classification of Jacobi-type specs needs the oscillation conditions
    ``n + alpha + beta > 0``, ``n + alpha > 0``, ``n + beta > 0``.
    """
    purpose = Purpose(purpose)
    n = spec.n
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DegreeNonPositive(n)
    if n > MAX_DEGREE:
        raise Overflow(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    params = [("alpha", spec.alpha)]
    if spec.kind is Family.JACOBI:
        params.append(("beta", spec.beta))
    for name, value in params:
        if not math.isfinite(value):
            raise ParameterOutOfRange(f"{name} finite")
        if abs(value) > MAX_PARAMETER:
            raise Overflow(f"|{name}| = {abs(value)!r} exceeds {MAX_PARAMETER!r}")

    if purpose is Purpose.ZERO_COMPUTATION or spec.kind is Family.LAGUERRE:
        for name, value in params:
            if not value > -1.0:
                raise ParameterOutOfRange(f"{name} > -1", f"{name}={value!r}")
        return spec

    a, b = spec.alpha, spec.beta
    for condition, value in (
        ("n + alpha + beta > 0", n + a + b),
        ("n + alpha > 0", n + a),
        ("n + beta > 0", n + b),
    ):
        if not value > 0.0:
            raise ParameterOutOfRange(condition, f"value {value!r}")
    return spec


def recurrence_coefficients(spec: FamilySpec) -> RecurrenceCoefficients:
    """Jacobi-matrix entries whose eigenvalues are the zeros of degree ``n``."""
    validate(spec, Purpose.ZERO_COMPUTATION)
    n = spec.n
    a = spec.alpha
    k = np.arange(n, dtype=float)
    if spec.kind is Family.LAGUERRE:
        diag = 2.0 * k + a + 1.0
        kk = k[1:]
        off = np.sqrt(kk * (kk + a))
        return RecurrenceCoefficients(_frozen(diag), _frozen(off))

    b = spec.beta
    s = a + b
    diag = np.empty(n)
    diag[0] = (b - a) / (s + 2.0)
    if n > 1:
        kk = k[1:]
        diag[1:] = (b * b - a * a) / ((2.0 * kk + s) * (2.0 * kk + s + 2.0))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        # k = 1 written with the (1 + alpha + beta) factor cancelled.
        off[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) ** 2 * (3.0 + s))
        kk = k[2:]
        off[1:] = (
            4.0 * kk * (kk + a) * (kk + b) * (kk + s)
            / ((2.0 * kk + s) ** 2 * (2.0 * kk + s + 1.0) * (2.0 * kk + s - 1.0))
        )
        off = np.sqrt(off)
    return RecurrenceCoefficients(_frozen(diag), _frozen(off))


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=float)
    arr.flags.writeable = False
    return arr


def _scaled_recurrence(spec: FamilySpec, t):
    """Return ``(p, dp, e)`` with value ``p * 2**e`` and derivative ``dp * 2**e``.

    ``t`` may be a scalar or an array; ``e`` then has the same shape.
    """
    t = np.asarray(t, dtype=float)
    n = spec.n
    a = spec.alpha
    exp = np.zeros(t.shape, dtype=np.int64)
    big = 2.0 ** _RESCALE_EXP
    shrink = 2.0 ** -_RESCALE_EXP
    p_prev, dp_prev = np.ones_like(t), np.zeros_like(t)
    if spec.kind is Family.LAGUERRE:
        p, dp = 1.0 + a - t, np.full_like(t, -1.0)
    else:
        b = spec.beta
        s = a + b
        p, dp = 0.5 * ((s + 2.0) * t + a - b), np.full_like(t, 0.5 * (s + 2.0))
    for k in range(2, n + 1):
        if spec.kind is Family.LAGUERRE:
            lin = 2 * k - 1 + a - t
            slope = -1.0
            c1 = float(k)
            c4 = k - 1 + a
        else:
            c1 = 2.0 * k * (k + s) * (2 * k + s - 2.0)
            c3 = (2 * k + s - 2.0) * (2 * k + s - 1.0) * (2 * k + s)
            lin = (2 * k + s - 1.0) * (a * a - b * b) + c3 * t
            slope = c3
            c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2 * k + s)
        p_new = (lin * p - c4 * p_prev) / c1
        dp_new = (lin * dp + slope * p - c4 * dp_prev) / c1
        p_prev, dp_prev, p, dp = p, dp, p_new, dp_new
        over = (np.abs(p) > big) | (np.abs(dp) > big)
        if over.any():
            f = np.where(over, shrink, 1.0)
            p_prev, dp_prev, p, dp = p_prev * f, dp_prev * f, p * f, dp * f
            exp = exp + np.where(over, _RESCALE_EXP, 0)
    return p, dp, exp


def evaluate(spec: FamilySpec, t: float) -> EvalResult:
    """Value and first derivative of the degree-``n`` polynomial at ``t``."""
    validate(spec, Purpose.ZERO_COMPUTATION)
    t = float(t)
    if not math.isfinite(t):
        raise ParameterOutOfRange("t finite")
    p, dp, exp = _scaled_recurrence(spec, t)
    try:
        value = math.ldexp(float(p), int(exp))
        derivative = math.ldexp(float(dp), int(exp))
    except OverflowError:
        value = derivative = math.inf
    if not (math.isfinite(value) and math.isfinite(derivative)):
        raise Overflow(f"{spec.label()} at t={t!r} is not representable in double precision")
    return EvalResult(value, derivative)


def newton_ratio(spec: FamilySpec, t):
    """``p(t) / p'(t)`` computed without leaving the scaled range (scalar or array)."""
    p, dp, _ = _scaled_recurrence(spec, t)
    with np.errstate(divide="ignore", invalid="ignore"):
        return p / dp
