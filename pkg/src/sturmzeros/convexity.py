"""Intervals where consecutive zero spacings grow (convex) or shrink (concave).

A strictly decreasing ``F`` forces growing spacings and a strictly increasing
``F`` forces shrinking ones.  The theoretical partition comes from the known
case splits per family or, in general, from the sign of the cubic ``j``.
Computed zeros are then checked triple by triple against that partition.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateCubic, DegreeTooSmall, UnsupportedFamily
from .families import Family, FamilySpec, Purpose, validate
from .normal_form import NormalFormProfile, critical_points, j_eval
from .zeros import ZeroSet

DEFAULT_TOL = 1e-9

J_ROOTS = "j-root analysis"


class Label(str, enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"

    @property
    def short(self):
        return "CX" if self is Label.CONVEX else "CC"


class Verdict(str, enum.Enum):
    AGREES = "agrees"
    DISAGREES = "disagrees"
    STRADDLES = "straddles"
    BELOW_TOLERANCE = "below_tolerance"


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    label: Label
    provenance: str

    def contains(self, a, b):
        return self.lo <= a and b <= self.hi


@dataclass(frozen=True)
class ConvexityReport:
    spec: FamilySpec
    partition: tuple[Piece, ...]
    boundaries: tuple[float, ...]

    @property
    def pattern(self) -> str:
        return "-".join(p.label.short for p in self.partition)


@dataclass(frozen=True)
class TripleVerdict:
    k: int
    piece: Optional[int]
    sign: int
    second_difference: float
    verdict: Verdict


@dataclass(frozen=True)
class EmpiricalClassification:
    triples: tuple[TripleVerdict, ...]

    def count(self, verdict: Verdict) -> int:
        return sum(1 for t in self.triples if t.verdict is verdict)

    @property
    def pattern(self) -> str:
        """Run-length-collapsed signs of the judged (non-straddling, non-tiny) triples."""
        seq = []
        for t in self.triples:
            if t.verdict not in (Verdict.AGREES, Verdict.DISAGREES):
                continue
            lab = "CX" if t.sign > 0 else "CC"
            if not seq or seq[-1] != lab:
                seq.append(lab)
        return "-".join(seq)


def _report(spec, cuts, labels, provenance):
    lo, hi = spec.support
    edges = [lo, *cuts, hi]
    pieces = tuple(
        Piece(edges[i], edges[i + 1], labels[i], provenance) for i in range(len(labels))
    )
    return ConvexityReport(spec, pieces, tuple(cuts))


def classify_from_j_roots(spec: FamilySpec, profile: Optional[NormalFormProfile] = None) -> ConvexityReport:
    """Partition (-1, 1) by the sign changes of ``j``; ``j > 0`` means convex."""
    if spec.kind is Family.LAGUERRE:
        raise UnsupportedFamily("j-root analysis applies to Jacobi-type families")
    if profile is None:
        profile = critical_points(spec)
    if not (profile.z_aux is not None and profile.z_aux > 0.0):
        raise DegenerateCubic("leading coefficient z <= 0; oscillation conditions violated")
    edges = [-1.0, *profile.breakpoints, 1.0]
    cuts, labels = [], []
    for i in range(len(edges) - 1):
        mid = 0.5 * (edges[i] + edges[i + 1])
        lab = Label.CONVEX if j_eval(spec, mid) > 0.0 else Label.CONCAVE
        if labels and labels[-1] is lab:
            continue
        if labels:
            cuts.append(edges[i])
        labels.append(lab)
    return _report(spec, cuts, labels, J_ROOTS)


def classify_theoretical(spec: FamilySpec, profile: Optional[NormalFormProfile] = None) -> ConvexityReport:
    validate(spec, Purpose.CLASSIFICATION)
    if profile is None:
        profile = critical_points(spec)
    a, n = spec.alpha, spec.n
    cx, cc = Label.CONVEX, Label.CONCAVE

    if spec.kind is Family.LAGUERRE:
        if a > 3.0 and n * (a - 3.0) > a + 1.0:
            return _report(spec, [profile.t0], [cc, cx], "laguerre: F rises to t0 then falls")
        # t0 < (a+1)/n < x_1, so F decreases across every zero.
        return _report(spec, [], [cx], "laguerre: F decreasing past the first zero")

    if spec.kind is Family.JACOBI:
        b = spec.beta
        degenerate = profile.t12 is not None and profile.t12[0] == profile.t12[1]
        if (
            abs(a) > 1.0
            and abs(b) < 1.0
            and profile.discriminant < 0.0
            and not degenerate
        ):
            return _report(spec, [], [cx], "jacobi: |alpha|>1, |beta|<1, D<0")
        return classify_from_j_roots(spec, profile)

    # Ultraspherical; |alpha| == 1 sits on every case boundary.
    if abs(a) == 1.0:
        return classify_from_j_roots(spec, profile)
    if abs(a) < 1.0:
        return _report(spec, [0.0], [cx, cc], "ultraspherical: |alpha|<1")
    if (n + a) * (n + a + 1.0) <= 2.0 * (a * a - 1.0):
        return _report(spec, [0.0], [cc, cx], "ultraspherical: |alpha|>1, no interior extrema of F")
    T1, T2 = profile.T12
    return _report(
        spec, [T1, 0.0, T2], [cc, cx, cc, cx], "ultraspherical: |alpha|>1, F peaks at T1 and T2"
    )


def asymptotic_pattern(alpha: float, beta: float) -> str:
    """Large-degree left-to-right pattern for fixed Jacobi parameters."""
    if not (alpha > -1.0 and beta > -1.0):
        raise ValueError("alpha and beta must exceed -1")
    big_a, big_b = abs(alpha) > 1.0, abs(beta) > 1.0
    if not big_a and not big_b:
        return "CX-CC"
    if not big_a:
        return "CC-CX-CC"
    if not big_b:
        return "CX-CC-CX"
    return "CC-CX-CC-CX"


def classify_empirical(
    zs: ZeroSet, report: ConvexityReport, tol_rel: float = DEFAULT_TOL
) -> EmpiricalClassification:
    """Judge each zero triple against the theoretical partition.

    A triple whose second difference is within ``tol_rel`` times its first
    spacing is ``BELOW_TOLERANCE``; one spanning a partition boundary
    ``STRADDLES``; otherwise it ``AGREES`` when the sign matches the label.
    """
    n = len(zs.zeros)
    if n < 3:
        raise DegreeTooSmall("empirical convexity needs at least 3 zeros")
    if not tol_rel > 0.0:
        raise ValueError("tol_rel must be positive")
    x = zs.zeros
    out = []
    for i, d2 in enumerate(zs.second_differences):
        lo, hi = x[i], x[i + 2]
        sign = int(np.sign(d2))
        piece = next(
            (j for j, p in enumerate(report.partition) if p.contains(lo, hi)), None
        )
        if abs(d2) <= tol_rel * zs.spacings[i]:
            verdict = Verdict.BELOW_TOLERANCE
        elif piece is None:
            verdict = Verdict.STRADDLES
        else:
            want = 1 if report.partition[piece].label is Label.CONVEX else -1
            verdict = Verdict.AGREES if sign == want else Verdict.DISAGREES
        out.append(TripleVerdict(i + 1, piece, sign, float(d2), verdict))
    return EmpiricalClassification(tuple(out))


def mirror(report: ConvexityReport) -> tuple[tuple[float, float, Label], ...]:
    """Reflect a partition through 0 with labels swapped (for parity checks)."""
    swap = {Label.CONVEX: Label.CONCAVE, Label.CONCAVE: Label.CONVEX}
    return tuple(
        (-p.hi, -p.lo, swap[p.label]) for p in reversed(report.partition)
    )


def partitions_match(r1: ConvexityReport, r2: ConvexityReport, tol: float = 1e-9) -> bool:
    if len(r1.partition) != len(r2.partition):
        return False
    for p, q in zip(r1.partition, r2.partition):
        if p.label is not q.label:
            return False
        for u, v in ((p.lo, q.lo), (p.hi, q.hi)):
            if math.isinf(u) or math.isinf(v):
                if u != v:
                    return False
            elif abs(u - v) > tol:
                return False
    return True
