"""Zeros of Laguerre, Jacobi and ultraspherical polynomials: convexity and spacing bounds."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConvergenceFailure,
    DegenerateCubic,
    DegreeNonPositive,
    DegreeTooSmall,
    DomainViolation,
    Overflow,
    ParameterOutOfRange,
    SturmZerosError,
    UnsupportedFamily,
)
from .families import Family, FamilySpec, Purpose, evaluate, recurrence_coefficients, validate  # noqa: E402
from .normal_form import F_eval, F_supremum, critical_points, discriminant, j_eval  # noqa: E402
from .zeros import ZeroSet, compute_zeros, first_zero_bounds, spacing_profile  # noqa: E402
from .convexity import (  # noqa: E402
    Label,
    Verdict,
    asymptotic_pattern,
    classify_empirical,
    classify_from_j_roots,
    classify_theoretical,
)
from .bounds import gap_bounds, laguerre_global_bound, ultraspherical_global_bounds, verify_suite  # noqa: E402
