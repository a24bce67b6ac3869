"""Closed-form real roots of a cubic.

Three real roots use the trigonometric (Viete) form, a single real root uses
Cardano's formula.  Each root then receives one Newton step on the original
cubic, kept only if it does not increase the residual.
"""

from __future__ import annotations

import math

from .errors import DegenerateCubic


def _horner(coeffs, t):
    a, b, c, d = coeffs
    return ((a * t + b) * t + c) * t + d


def _horner_prime(coeffs, t):
    a, b, c, _ = coeffs
    return (3.0 * a * t + 2.0 * b) * t + c


def _cbrt(x):
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(coeffs, r):
    fr = _horner(coeffs, r)
    dfr = _horner_prime(coeffs, r)
    if dfr == 0.0 or fr == 0.0:
        return r
    cand = r - fr / dfr
    if abs(_horner(coeffs, cand)) <= abs(fr):
        return cand
    return r


def real_cubic_roots(a, b, c, d, *, rel_tol=1e-12):
    """Real roots of ``a t^3 + b t^2 + c t + d``, ascending, repeated by multiplicity.

    ``rel_tol`` decides when the discriminant counts as zero (a repeated root),
    relative to the size of its two competing terms.
    """
    if a == 0.0:
        raise DegenerateCubic("leading coefficient is zero")
    coeffs = (float(a), float(b), float(c), float(d))
    shift = b / (3.0 * a)
    p = (3.0 * a * c - b * b) / (3.0 * a * a)
    q = (2.0 * b ** 3 - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a ** 3)

    # disc > 0: three distinct real roots; disc < 0: one real root.
    term_p = -4.0 * p ** 3
    term_q = 27.0 * q * q
    disc = term_p - term_q
    scale = abs(term_p) + abs(term_q)

    if scale == 0.0:
        roots = [-shift] * 3
    elif abs(disc) <= rel_tol * scale:
        if p == 0.0:
            roots = [-shift] * 3
        else:
            simple = 3.0 * q / p
            double = -1.5 * q / p
            roots = [simple - shift, double - shift, double - shift]
    elif disc > 0.0:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) - shift for k in range(3)]
    else:
        root = math.sqrt(q * q / 4.0 + p ** 3 / 27.0)
        u = _cbrt(-q / 2.0 + root)
        v = _cbrt(-q / 2.0 - root)
        roots = [u + v - shift]

    return sorted(_polish(coeffs, r) for r in roots)
