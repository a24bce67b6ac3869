"""Normal form ``y'' + F(t) y = 0`` of the family differential equations.

The substitution ``y = x * exp(1/2 * int g)`` removes the first-derivative
term from ``x'' + g x' + f x = 0`` and leaves ``F = f - g**2/4 - g'/2``; the
zeros of ``x`` and ``y`` coincide.  For Jacobi-type families the sign of
``F'`` is governed by the cubic ``j`` in ``F'(t) = j(t) / (2 (t**2 - 1)**3)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .cubic import real_cubic_roots
from .errors import DomainViolation, UnsupportedFamily
from .families import Family, FamilySpec, Purpose, validate

# |D| below this fraction of its term scale counts as D == 0.
DEGENERATE_DISCRIMINANT = 1e-8


@dataclass(frozen=True)
class ODECoefficients:
    """Coefficients of ``x'' + g(t) x' + f(t) x = 0`` on the open ``domain``."""

    g: Callable[[float], float]
    g_prime: Callable[[float], float]
    f: Callable[[float], float]
    domain: tuple[float, float]


@dataclass(frozen=True)
class NormalFormProfile:
    family: FamilySpec
    support: tuple[float, float]
    x_aux: Optional[float] = None
    y_aux: Optional[float] = None
    z_aux: Optional[float] = None
    t0: Optional[float] = None
    t12: Optional[tuple[float, float]] = None
    t12_inside: Optional[tuple[bool, bool]] = None
    T12: Optional[tuple[float, float]] = None
    discriminant: Optional[float] = None
    # Points in the open support where F' changes sign, ascending.
    breakpoints: tuple[float, ...] = ()


def _check_inside(t, domain):
    lo, hi = domain
    if not (lo < t < hi):
        raise DomainViolation(f"t={t!r} outside the open interval ({lo!r}, {hi!r})")


def family_ode(spec: FamilySpec) -> ODECoefficients:
    """The family's differential equation divided through by its leading coefficient."""
    a, n = spec.alpha, spec.n
    if spec.kind is Family.LAGUERRE:
        return ODECoefficients(
            g=lambda t: (a + 1.0 - t) / t,
            g_prime=lambda t: -(a + 1.0) / (t * t),
            f=lambda t: n / t,
            domain=spec.support,
        )
    b = spec.beta
    s = a + b

    def g(t):
        return (b - a - (s + 2.0) * t) / (1.0 - t * t)

    def g_prime(t):
        w = 1.0 - t * t
        return (-(s + 2.0) * w + 2.0 * t * (b - a - (s + 2.0) * t)) / (w * w)

    lam = n * (n + s + 1.0)
    return ODECoefficients(g=g, g_prime=g_prime, f=lambda t: lam / (1.0 - t * t), domain=spec.support)


def normal_form_generic(coeffs: ODECoefficients, t: float) -> float:
    _check_inside(t, coeffs.domain)
    g = coeffs.g(t)
    return coeffs.f(t) - 0.25 * g * g - 0.5 * coeffs.g_prime(t)


def aux(spec: FamilySpec) -> tuple[float, float, float]:
    """``(x, y, z) = (alpha**2 - 1, beta**2 - 1, (alpha+beta+2n)(alpha+beta+2n+2))``."""
    if spec.kind is Family.LAGUERRE:
        raise UnsupportedFamily("x, y, z are defined for Jacobi-type families only")
    a, b, n = spec.alpha, spec.beta, spec.n
    m = a + b + 2.0 * n
    return a * a - 1.0, b * b - 1.0, m * (m + 2.0)


def _ultra_pq(spec):
    # P = (alpha+n)(alpha+n+1); Q = P - 2(alpha^2 - 1) = 2 + n + n^2 + alpha + 2 alpha n - alpha^2
    a, n = spec.alpha, spec.n
    big_p = (a + n) * (a + n + 1.0)
    big_q = 2.0 + n + n * n + a + 2.0 * a * n - a * a
    return big_p, big_q


def F_eval(spec: FamilySpec, t: float) -> float:
    """Closed-form normal-form coefficient of the family."""
    t = float(t)
    _check_inside(t, spec.support)
    a, n = spec.alpha, spec.n
    if spec.kind is Family.LAGUERRE:
        num = -t * t + 2.0 * a * t + 2.0 * t + 4.0 * n * t - a * a + 1.0
        return num / (4.0 * t * t)
    w = t * t - 1.0
    if spec.kind is Family.ULTRASPHERICAL:
        big_p = (a + n) * (a + n + 1.0)
        return (-big_p * t * t + (1.0 + n + n * n + a + 2.0 * a * n)) / (w * w)
    x, y, z = aux(spec)
    num = -z * t * t - 2.0 * (x - y) * t - 2.0 * x - 2.0 * y + z
    return num / (4.0 * w * w)


def _j_coefficients(spec):
    """Coefficients of j, highest degree first."""
    if spec.kind is Family.ULTRASPHERICAL:
        big_p, big_q = _ultra_pq(spec)
        return (4.0 * big_p, 0.0, -4.0 * big_q, 0.0)
    x, y, z = aux(spec)
    return (z, 3.0 * (x - y), 4.0 * x + 4.0 * y - z, x - y)


def j_eval(spec: FamilySpec, t: float) -> float:
    """Cubic numerator of ``F'``; ``F`` decreases where ``j > 0`` on (-1, 1)."""
    if spec.kind is Family.LAGUERRE:
        raise UnsupportedFamily("j is defined for Jacobi-type families; Laguerre uses t0")
    validate(spec, Purpose.CLASSIFICATION)
    c3, c2, c1, c0 = _j_coefficients(spec)
    t = float(t)
    return ((c3 * t + c2) * t + c1) * t + c0


def discriminant(spec: FamilySpec) -> float:
    """Discriminant of ``j'``; positive iff ``j`` has two distinct stationary points."""
    if spec.kind is Family.LAGUERRE:
        raise UnsupportedFamily("the discriminant of j' is defined for Jacobi-type families")
    validate(spec, Purpose.CLASSIFICATION)
    if spec.kind is Family.ULTRASPHERICAL:
        big_p, big_q = _ultra_pq(spec)
        return 192.0 * big_p * big_q
    x, y, z = aux(spec)
    return 12.0 * (3.0 * x * x + 3.0 * y * y + z * z - 6.0 * x * y - 4.0 * x * z - 4.0 * y * z)


def _discriminant_scale(x, y, z):
    return 12.0 * (
        3.0 * x * x + 3.0 * y * y + z * z + 6.0 * abs(x * y) + 4.0 * abs(x * z) + 4.0 * abs(y * z)
    )


def laguerre_t0(spec: FamilySpec) -> float:
    a = spec.alpha
    return (a * a - 1.0) / (a + 2.0 * spec.n + 1.0)


def laguerre_crossing(spec: FamilySpec) -> float:
    """Closed form of the point beyond ``t0`` where the Laguerre ``F`` turns negative."""
    a = spec.alpha
    big_b = a + 2.0 * spec.n + 1.0
    return big_b + math.sqrt(big_b * big_b - (a * a - 1.0))


def j_roots(spec: FamilySpec) -> tuple[float, ...]:
    """Real roots of ``j`` strictly inside (-1, 1) at which ``j`` changes sign."""
    if spec.kind is Family.LAGUERRE:
        raise UnsupportedFamily("j is defined for Jacobi-type families")
    validate(spec, Purpose.CLASSIFICATION)
    coeffs = _j_coefficients(spec)
    if spec.kind is Family.ULTRASPHERICAL:
        # j = 4t (P t^2 - Q): roots 0 and +-sqrt(Q/P) are exact.
        big_p, big_q = _ultra_pq(spec)
        cands = [0.0]
        if big_q > 0.0:
            T = math.sqrt(big_q / big_p)
            if T < 1.0:
                cands = [-T, 0.0, T]
    else:
        cands = real_cubic_roots(*coeffs)
    out = []
    for r in cands:
        if not (-1.0 < r < 1.0):
            continue
        # Repeated (touching) roots do not change the sign of j.
        if out and abs(r - out[-1]) <= 1e-12:
            out.pop()
            continue
        out.append(r)
    return tuple(out)


def critical_points(spec: FamilySpec) -> NormalFormProfile:
    validate(spec, Purpose.CLASSIFICATION)
    if spec.kind is Family.LAGUERRE:
        t0 = laguerre_t0(spec)
        return NormalFormProfile(
            family=spec,
            support=spec.support,
            t0=t0,
            breakpoints=(t0,) if t0 > 0.0 else (),
        )

    x, y, z = aux(spec)
    D = discriminant(spec)
    inflection = (y - x) / z
    t12 = None
    if abs(D) <= DEGENERATE_DISCRIMINANT * _discriminant_scale(x, y, z):
        t12 = (inflection, inflection)
    elif D > 0.0:
        r = math.sqrt(D)
        t12 = ((6.0 * (y - x) - r) / (6.0 * z), (6.0 * (y - x) + r) / (6.0 * z))
    t12_inside = None if t12 is None else tuple(-1.0 < t < 1.0 for t in t12)

    T12 = None
    if spec.kind is Family.ULTRASPHERICAL:
        big_p, big_q = _ultra_pq(spec)
        if big_q > 0.0:
            T = math.sqrt(big_q / big_p)
            T12 = (-T, T)

    return NormalFormProfile(
        family=spec,
        support=spec.support,
        x_aux=x,
        y_aux=y,
        z_aux=z,
        t0=inflection,
        t12=t12,
        t12_inside=t12_inside,
        T12=T12,
        discriminant=D,
        breakpoints=j_roots(spec),
    )


def F_direction(spec: FamilySpec, t: float) -> int:
    """+1 where F is increasing at ``t``, -1 where decreasing, 0 at a stationary point."""
    if spec.kind is Family.LAGUERRE:
        a = spec.alpha
        # F' = (A - B t) / (2 t^3) with A = alpha^2 - 1, B = alpha + 2n + 1.
        val = (a * a - 1.0) - (a + 2.0 * spec.n + 1.0) * t
    else:
        val = -j_eval(spec, t)
    return (val > 0.0) - (val < 0.0)


def _endpoint_limit(spec, side):
    """Limit of F at the left (side=-1) or right (side=+1) end of the support."""
    a, n = spec.alpha, spec.n
    if spec.kind is Family.LAGUERRE:
        if side > 0:
            return -0.25
        num0 = 1.0 - a * a
        if num0 != 0.0:
            return math.copysign(math.inf, num0)
        return math.inf  # numerator ~ 2(alpha + 2n + 1) t > 0
    x, y, z = aux(spec)
    end = float(side)
    num = -4.0 * (x if side > 0 else y)
    if num != 0.0:
        return math.copysign(math.inf, num)
    # Numerator vanishes at the endpoint; the double pole leaves N'(end) * (t - end).
    slope = -2.0 * z * end - 2.0 * (x - y)
    approach = -slope if side > 0 else slope
    if approach != 0.0:
        return math.copysign(math.inf, approach)
    return -z / 16.0


def _candidates(spec, interval, profile):
    lo, hi = float(interval[0]), float(interval[1])
    s_lo, s_hi = spec.support
    if not (s_lo <= lo < hi <= s_hi):
        raise DomainViolation(f"interval ({lo!r}, {hi!r}) not inside the support ({s_lo!r}, {s_hi!r})")
    if profile is None:
        profile = critical_points(spec)
    vals = []
    vals.append(_endpoint_limit(spec, -1) if lo == s_lo else F_eval(spec, lo))
    vals.append(_endpoint_limit(spec, +1) if hi == s_hi else F_eval(spec, hi))
    vals.extend(F_eval(spec, b) for b in profile.breakpoints if lo < b < hi)
    return vals


def F_supremum(spec: FamilySpec, interval, profile: Optional[NormalFormProfile] = None) -> Optional[float]:
    """Supremum of F over an open sub-interval of the support; ``None`` if it is +inf."""
    sup = max(_candidates(spec, interval, profile))
    return None if sup == math.inf else sup


def F_infimum(spec: FamilySpec, interval, profile: Optional[NormalFormProfile] = None) -> Optional[float]:
    """Infimum of F over an open sub-interval of the support; ``None`` if it is -inf."""
    inf = min(_candidates(spec, interval, profile))
    return None if inf == -math.inf else inf
