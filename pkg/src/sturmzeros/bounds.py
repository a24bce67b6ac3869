"""Spacing bounds from comparison with ``y'' + M y = 0``.

If ``F < M`` on a gap between consecutive zeros, the gap exceeds
``pi / sqrt(M)``; if ``F > m > 0`` it is shorter than ``pi / sqrt(m)``.  Every
inequality here is strict and is checked without tolerance: margins expose
near-ties instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import UnsupportedFamily
from .families import Family, FamilySpec, Purpose, validate
from .normal_form import (
    F_direction,
    F_eval,
    F_supremum,
    NormalFormProfile,
    critical_points,
)
from .zeros import ZeroSet, compute_zeros

CROSSING_TOL = 1e-12

# Bound sources.
LEFT = "F(x_k)"
RIGHT = "F(x_k+1)"
GAP_SUP = "sup F on gap"
GAP_INF = "inf F on gap"
LAGUERRE_LITERAL = "laguerre global (closed form)"
LAGUERRE_DERIVED = "laguerre global (sup F past x_1)"
SUPPORT_SUP = "sup F on support"
ULTRA_UPPER_F0 = "ultraspherical F(0) upper"
ULTRA_LOWER_F0 = "ultraspherical F(0) lower"
ULTRA_LOWER_FT2 = "ultraspherical F(T2) lower"
ULTRA_INNER_CAP = "ultraspherical F(0) upper inside (T1, T2)"


def spacing_bound(F_value: Optional[float]) -> Optional[float]:
    """``pi / sqrt(F)`` for positive ``F``, else ``None``."""
    if F_value is None or not F_value > 0.0:
        return None
    return math.pi / math.sqrt(F_value)


@dataclass(frozen=True)
class GapBoundRecord:
    k: int
    x_k: float
    x_k1: float
    spacing: float
    lower: Optional[float] = None
    upper: Optional[float] = None
    lower_source: Optional[str] = None
    upper_source: Optional[str] = None
    lower_satisfied: Optional[bool] = None
    upper_satisfied: Optional[bool] = None
    lower_margin: Optional[float] = None
    upper_margin: Optional[float] = None


@dataclass(frozen=True)
class GlobalCheck:
    """One bound checked against a set of gaps; ``margin`` is the worst case."""

    source: str
    direction: str
    bound: float
    gaps_checked: int
    worst_k: Optional[int]
    margin: Optional[float]
    satisfied: bool


@dataclass(frozen=True)
class Violation:
    k: Optional[int]
    which: str
    margin: float


@dataclass(frozen=True)
class UltrasphericalGlobalBounds:
    upper_from_F0: Optional[float] = None
    lower_from_F0: Optional[float] = None
    lower_from_FT2: Optional[float] = None


@dataclass(frozen=True)
class BoundSuiteReport:
    spec: FamilySpec
    global_lower_literal: Optional[float]
    global_lower_derived: Optional[float]
    laguerre_crossing: Optional[float]
    records: tuple[GapBoundRecord, ...]
    global_checks: tuple[GlobalCheck, ...]
    literal_check: Optional[GlobalCheck]
    violations: tuple[Violation, ...] = field(default=())

    @property
    def bound_checks(self) -> int:
        per_gap = sum((r.lower is not None) + (r.upper is not None) for r in self.records)
        return per_gap + sum(c.gaps_checked for c in self.global_checks)


def _record(k, a, b, M, M_src, m, m_src):
    spacing = b - a
    lower, upper = spacing_bound(M), spacing_bound(m)
    kw = {}
    if lower is not None:
        kw.update(
            lower=lower,
            lower_source=M_src,
            lower_satisfied=bool(spacing > lower),
            lower_margin=spacing - lower,
        )
    if upper is not None:
        kw.update(
            upper=upper,
            upper_source=m_src,
            upper_satisfied=bool(spacing < upper),
            upper_margin=upper - spacing,
        )
    return GapBoundRecord(k, float(a), float(b), float(spacing), **kw)


def gap_bounds(
    spec: FamilySpec, profile: NormalFormProfile, zs: ZeroSet
) -> tuple[GapBoundRecord, ...]:
    """Per-gap bounds that follow from where F is monotone on the gap.

    On a gap where F decreases, ``F(x_k)`` is the maximum and ``F(x_k+1)`` the
    minimum; where F increases the roles swap.  A gap that contains a sign
    change of ``F'`` falls back to the extreme values over the gap.
    """
    x = zs.zeros
    out = []
    for i in range(len(x) - 1):
        a, b = float(x[i]), float(x[i + 1])
        Fa, Fb = F_eval(spec, a), F_eval(spec, b)
        inside = [p for p in profile.breakpoints if a < p < b]
        direction = 0 if inside else F_direction(spec, 0.5 * (a + b))
        if direction < 0:
            rec = _record(i + 1, a, b, Fa, LEFT, Fb, RIGHT)
        elif direction > 0:
            rec = _record(i + 1, a, b, Fb, RIGHT, Fa, LEFT)
        else:
            vals = [Fa, Fb, *(F_eval(spec, p) for p in inside)]
            rec = _record(i + 1, a, b, max(vals), GAP_SUP, min(vals), GAP_INF)
        out.append(rec)
    return tuple(out)


def laguerre_literal_bound(spec: FamilySpec) -> float:
    a, n = spec.alpha, spec.n
    return math.pi * math.sqrt(2.0) / math.sqrt(2.0 * a * n + a + 2.0 * n * n + 2.0 * n + 1.0)


def laguerre_global_bound(
    spec: FamilySpec, profile: NormalFormProfile, zs: Optional[ZeroSet] = None
) -> tuple[float, Optional[float]]:
    """``(closed-form value, pi / sqrt(sup F on (x_1, inf)))``.

    Past the smallest zero the supremum is ``F(max(t0, x_1))``.
    """
    if spec.kind is not Family.LAGUERRE:
        raise UnsupportedFamily("the Laguerre global bound needs a Laguerre spec")
    if zs is None:
        zs = compute_zeros(spec)
    sup = F_supremum(spec, (float(zs.zeros[0]), math.inf), profile)
    return laguerre_literal_bound(spec), spacing_bound(sup)


def laguerre_crossing_bisect(spec: FamilySpec, profile: NormalFormProfile, zs: ZeroSet) -> float:
    """Point past ``t0`` where the Laguerre F turns negative, by bisection."""
    lo = max(profile.t0, float(zs.zeros[0]))
    if not F_eval(spec, lo) > 0.0:
        raise ValueError("F is not positive at the start of the bracket")
    hi = float(zs.zeros[-1]) + 10.0
    while F_eval(spec, hi) >= 0.0:
        hi *= 2.0
    while hi - lo > CROSSING_TOL:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if F_eval(spec, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ultraspherical_global_bounds(
    spec: FamilySpec, profile: Optional[NormalFormProfile] = None
) -> UltrasphericalGlobalBounds:
    """Exactly one whole-interval bound, chosen by the size of ``alpha``."""
    if spec.kind is not Family.ULTRASPHERICAL:
        raise UnsupportedFamily("needs an ultraspherical spec")
    validate(spec, Purpose.CLASSIFICATION)
    if profile is None:
        profile = critical_points(spec)
    a, n = spec.alpha, spec.n
    F0 = 2.0 * a * n + a + n * n + n + 1.0
    if abs(a) <= 1.0:
        return UltrasphericalGlobalBounds(upper_from_F0=spacing_bound(F0))
    if (n + a) * (n + a + 1.0) <= 2.0 * (a * a - 1.0):
        return UltrasphericalGlobalBounds(lower_from_F0=spacing_bound(F0))
    return UltrasphericalGlobalBounds(lower_from_FT2=spacing_bound(F_eval(spec, profile.T12[1])))


def _check(source, direction, bound, spacings, ks):
    spacings = np.asarray(spacings, dtype=float)
    if len(spacings) == 0:
        return GlobalCheck(source, direction, bound, 0, None, None, True)
    if direction == "lower":
        i = int(np.argmin(spacings))
        margin = float(spacings[i] - bound)
    else:
        i = int(np.argmax(spacings))
        margin = float(bound - spacings[i])
    return GlobalCheck(source, direction, bound, len(spacings), int(ks[i]), margin, margin > 0.0)


def verify_suite(spec: FamilySpec) -> BoundSuiteReport:
    """Compute zeros and check every applicable spacing bound."""
    validate(spec, Purpose.ZERO_COMPUTATION)
    validate(spec, Purpose.CLASSIFICATION)
    zs = compute_zeros(spec)
    profile = critical_points(spec)
    records = gap_bounds(spec, profile, zs)
    spacings = zs.spacings
    ks = np.arange(1, len(spacings) + 1)

    checks = []
    literal = derived = crossing = None
    literal_check = None

    support_sup = spacing_bound(F_supremum(spec, spec.support, profile))
    if support_sup is not None:
        checks.append(_check(SUPPORT_SUP, "lower", support_sup, spacings, ks))

    if spec.kind is Family.LAGUERRE:
        literal, derived = laguerre_global_bound(spec, profile, zs)
        literal_check = _check(LAGUERRE_LITERAL, "lower", literal, spacings, ks)
        if derived is not None:
            checks.append(_check(LAGUERRE_DERIVED, "lower", derived, spacings, ks))
        crossing = laguerre_crossing_bisect(spec, profile, zs)
    elif spec.kind is Family.ULTRASPHERICAL:
        ub = ultraspherical_global_bounds(spec, profile)
        if ub.upper_from_F0 is not None:
            checks.append(_check(ULTRA_UPPER_F0, "upper", ub.upper_from_F0, spacings, ks))
        if ub.lower_from_F0 is not None:
            checks.append(_check(ULTRA_LOWER_F0, "lower", ub.lower_from_F0, spacings, ks))
        if ub.lower_from_FT2 is not None:
            checks.append(_check(ULTRA_LOWER_FT2, "lower", ub.lower_from_FT2, spacings, ks))
            T1, T2 = profile.T12
            x = zs.zeros
            inner = (x[:-1] >= T1) & (x[1:] <= T2)
            cap = spacing_bound(F_eval(spec, 0.0))
            checks.append(_check(ULTRA_INNER_CAP, "upper", cap, spacings[inner], ks[inner]))

    violations = []
    for r in records:
        if r.lower_satisfied is False:
            violations.append(Violation(r.k, r.lower_source, r.lower_margin))
        if r.upper_satisfied is False:
            violations.append(Violation(r.k, r.upper_source, r.upper_margin))
    for c in checks:
        if not c.satisfied:
            violations.append(Violation(c.worst_k, c.source, c.margin))

    return BoundSuiteReport(
        spec=spec,
        global_lower_literal=literal,
        global_lower_derived=derived,
        laguerre_crossing=crossing,
        records=records,
        global_checks=tuple(checks),
        literal_check=literal_check,
        violations=tuple(violations),
    )
