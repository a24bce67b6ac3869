"""Parameter sweeps that run classification and bound checks spec by spec."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .bounds import verify_suite
from .convexity import DEFAULT_TOL, Verdict, classify_empirical, classify_theoretical
from .families import Family, FamilySpec
from .normal_form import critical_points
from .zeros import compute_zeros

DEFAULT_SWEEP_VERSION = "default-v1"


@dataclass(frozen=True)
class GridEntry:
    family: Family
    alphas: tuple[float, ...]
    degrees: tuple[int, ...]
    betas: Optional[tuple[float, ...]] = None

    def specs(self) -> Iterator[FamilySpec]:
        if self.family is Family.JACOBI:
            for a, b, n in itertools.product(self.alphas, self.betas, self.degrees):
                yield FamilySpec.jacobi(a, b, n)
        else:
            for a, n in itertools.product(self.alphas, self.degrees):
                yield FamilySpec(self.family, a, n)


DEFAULT_GRID = (
    GridEntry(Family.LAGUERRE, (-0.5, 0.0, 1.0, 2.0, 3.0, 3.5, 4.0, 6.0), (3, 5, 10, 20, 40)),
    GridEntry(Family.ULTRASPHERICAL, (-0.5, 0.0, 0.5, 1.0, 2.0, 7.0), (2, 4, 5, 7, 15)),
    GridEntry(Family.JACOBI, (-0.5, 0.5, 2.0), (3, 10, 50, 200), (-0.5, 0.5, 2.0)),
    GridEntry(Family.JACOBI, (20.0,), (3, 10), (0.0,)),
)


@dataclass(frozen=True)
class SweepTotals:
    specs_run: int = 0
    triples_classified: int = 0
    agreements: int = 0
    disagreements: int = 0
    straddles: int = 0
    below_tolerance: int = 0
    bound_checks: int = 0
    violations: int = 0
    literal_checks: int = 0
    literal_failures: int = 0


@dataclass(frozen=True)
class ViolationDetail:
    spec: str
    category: str
    k: Optional[int]
    which: str
    margin: Optional[float]


@dataclass(frozen=True)
class SweepSummary:
    name: str
    grid: tuple[GridEntry, ...]
    tol_rel: float
    totals: SweepTotals
    violations: tuple[ViolationDetail, ...]
    # Closed-form Laguerre global bound failures; tabulated, never fatal.
    literal_failures: tuple[ViolationDetail, ...]

    @property
    def ok(self) -> bool:
        return self.totals.disagreements == 0 and self.totals.violations == 0


def run_sweep(
    grid: Iterable[GridEntry] = DEFAULT_GRID,
    *,
    name: str = DEFAULT_SWEEP_VERSION,
    tol_rel: float = DEFAULT_TOL,
) -> SweepSummary:
    grid = tuple(grid)
    counts = dict.fromkeys(SweepTotals.__dataclass_fields__, 0)
    details, literal = [], []
    for entry in grid:
        for spec in entry.specs():
            counts["specs_run"] += 1
            label = spec.label()
            if spec.n >= 3:
                zs = compute_zeros(spec)
                report = classify_theoretical(spec, critical_points(spec))
                emp = classify_empirical(zs, report, tol_rel)
                counts["triples_classified"] += len(emp.triples)
                counts["agreements"] += emp.count(Verdict.AGREES)
                counts["disagreements"] += emp.count(Verdict.DISAGREES)
                counts["straddles"] += emp.count(Verdict.STRADDLES)
                counts["below_tolerance"] += emp.count(Verdict.BELOW_TOLERANCE)
                for t in emp.triples:
                    if t.verdict is Verdict.DISAGREES:
                        details.append(
                            ViolationDetail(label, "convexity", t.k, "second difference sign", t.second_difference)
                        )
            suite = verify_suite(spec)
            counts["bound_checks"] += suite.bound_checks
            counts["violations"] += len(suite.violations)
            for v in suite.violations:
                details.append(ViolationDetail(label, "bound", v.k, v.which, v.margin))
            lit = suite.literal_check
            if lit is not None:
                counts["literal_checks"] += 1
                if not lit.satisfied:
                    counts["literal_failures"] += 1
                    literal.append(ViolationDetail(label, "laguerre literal", lit.worst_k, lit.source, lit.margin))
    return SweepSummary(
        name=name,
        grid=grid,
        tol_rel=tol_rel,
        totals=SweepTotals(**counts),
        violations=tuple(details),
        literal_failures=tuple(literal),
    )
