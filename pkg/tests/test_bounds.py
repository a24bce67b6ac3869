import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmzeros.bounds import (
    LAGUERRE_LITERAL,
    LEFT,
    ULTRA_LOWER_F0,
    RIGHT,
    gap_bounds,
    laguerre_crossing_bisect,
    laguerre_global_bound,
    spacing_bound,
    ultraspherical_global_bounds,
    verify_suite,
)
from sturmzeros.errors import UnsupportedFamily
from sturmzeros.families import FamilySpec
from sturmzeros.normal_form import F_direction, F_eval, critical_points, laguerre_crossing
from sturmzeros.zeros import compute_zeros


def _setup(spec):
    return critical_points(spec), compute_zeros(spec)


def test_spacing_bound():
    assert spacing_bound(4.0) == pytest.approx(math.pi / 2)
    assert spacing_bound(0.0) is None and spacing_bound(-1.0) is None and spacing_bound(None) is None


def test_laguerre_global_examples():
    spec = FamilySpec.laguerre(0, 3)
    literal, derived = laguerre_global_bound(spec, critical_points(spec))
    assert literal == pytest.approx(math.pi * math.sqrt(2) / 5, rel=1e-15)
    assert literal == pytest.approx(0.888577, abs=1e-6)
    # F decreases past x_1 when alpha < 1, so the supremum is F(x_1).
    assert derived == pytest.approx(1.0131950949, abs=1e-9)
    spec = FamilySpec.laguerre(3, 5)
    _, derived = laguerre_global_bound(spec, critical_points(spec))
    assert F_eval(spec, 4 / 7) == pytest.approx(5.875, rel=1e-14)
    # Here x_1 > t0, so F(x_1) < F(t0) and the bound is larger than pi/sqrt(5.875).
    x1 = compute_zeros(spec).zeros[0]
    assert x1 > 4 / 7
    assert derived == pytest.approx(math.pi / math.sqrt(F_eval(spec, x1)), rel=1e-15)
    assert derived > math.pi / math.sqrt(5.875)
    with pytest.raises(UnsupportedFamily):
        laguerre_global_bound(FamilySpec.jacobi(1, 1, 3), None)


def test_gap_bounds_laguerre_cubic():
    spec = FamilySpec.laguerre(0, 3)
    recs = gap_bounds(spec, *_setup(spec))
    assert [r.k for r in recs] == [1, 2]
    r1, r2 = recs
    assert r1.lower_source == LEFT and r1.lower == pytest.approx(1.0131950949, abs=1e-9)
    assert r1.upper_source == RIGHT and r1.upper == pytest.approx(math.pi / math.sqrt(1.3230277314), rel=1e-9)
    assert r1.lower_satisfied and r1.upper_satisfied
    assert r2.lower == pytest.approx(math.pi / math.sqrt(1.3230277314), rel=1e-9)
    assert r2.upper == pytest.approx(math.pi / math.sqrt(0.3127626201), rel=1e-9)
    assert r2.lower_satisfied and r2.upper_satisfied


def test_gap_bounds_legendre_positive_gap():
    spec = FamilySpec.jacobi(0, 0, 4)
    rec = gap_bounds(spec, *_setup(spec))[2]
    assert rec.lower == pytest.approx(0.32689886490, abs=1e-10)
    assert rec.upper == pytest.approx(0.64271809641, abs=1e-10)
    assert rec.lower < rec.spacing < rec.upper
    ub = ultraspherical_global_bounds(FamilySpec.ultraspherical(0, 4))
    assert ub.upper_from_F0 == pytest.approx(math.pi / math.sqrt(21), rel=1e-15)
    assert ub.lower_from_F0 is None and ub.lower_from_FT2 is None


def test_tight_ultraspherical_witness():
    spec = FamilySpec.ultraspherical(7, 2)
    ub = ultraspherical_global_bounds(spec)
    assert ub.lower_from_F0 == pytest.approx(math.pi / math.sqrt(42), rel=1e-15)
    assert ub.upper_from_F0 is None and ub.lower_from_FT2 is None
    suite = verify_suite(spec)
    (check,) = [c for c in suite.global_checks if c.source == ULTRA_LOWER_F0]
    assert check.bound == ub.lower_from_F0
    assert check.satisfied
    assert check.margin == pytest.approx(2 / math.sqrt(17) - math.pi / math.sqrt(42), abs=1e-14)
    assert 0 < check.margin < 1e-3


def test_ultraspherical_lower_from_t2():
    spec = FamilySpec.ultraspherical(2, 5)
    ub = ultraspherical_global_bounds(spec)
    assert ub.lower_from_FT2 == pytest.approx(0.19433564617, abs=1e-10)
    with pytest.raises(UnsupportedFamily):
        ultraspherical_global_bounds(FamilySpec.laguerre(0, 3))


@pytest.mark.parametrize(
    "spec",
    [FamilySpec.laguerre(0, 3), FamilySpec.ultraspherical(0, 4), FamilySpec.jacobi(20, 0, 3)],
)
def test_verify_suite_examples_clean(spec):
    suite = verify_suite(spec)
    assert suite.violations == ()
    assert suite.bound_checks > 0


def test_literal_check_reported_separately():
    suite = verify_suite(FamilySpec.laguerre(0, 3))
    assert suite.literal_check.source == LAGUERRE_LITERAL
    assert suite.literal_check.satisfied
    assert all(c.source != LAGUERRE_LITERAL for c in suite.global_checks)


def test_violations_mirror_flags():
    for spec in (FamilySpec.laguerre(6, 40), FamilySpec.ultraspherical(2, 15), FamilySpec.jacobi(0.5, 2, 50)):
        suite = verify_suite(spec)
        flagged = sum(
            (r.lower_satisfied is False) + (r.upper_satisfied is False) for r in suite.records
        ) + sum(not c.satisfied for c in suite.global_checks)
        assert len(suite.violations) == flagged == 0


@pytest.mark.parametrize("alpha, n", [(0, 3), (2, 10), (4, 20), (-0.5, 40), (6, 5)])
def test_crossing_bisection_matches_closed_form(alpha, n):
    spec = FamilySpec.laguerre(alpha, n)
    profile, zs = _setup(spec)
    assert laguerre_crossing_bisect(spec, profile, zs) == pytest.approx(laguerre_crossing(spec), abs=1e-10)


def test_laguerre_last_gap_has_no_upper_past_crossing():
    for alpha in (-0.5, 0, 2, 6):
        for n in (3, 10, 40):
            spec = FamilySpec.laguerre(alpha, n)
            profile, zs = _setup(spec)
            last = gap_bounds(spec, profile, zs)[-1]
            if F_eval(spec, zs.zeros[-1]) <= 0:
                assert last.upper is None
            t1 = laguerre_crossing(spec)
            # At most one zero lies beyond the crossing point.
            assert np.count_nonzero(zs.zeros > t1) <= 1


laguerre = st.builds(FamilySpec.laguerre, st.floats(-0.95, 30), st.integers(2, 120))
jacobi_like = st.one_of(
    st.builds(FamilySpec.jacobi, st.floats(-0.95, 30), st.floats(-0.95, 30), st.integers(2, 200)),
    st.builds(FamilySpec.ultraspherical, st.floats(-0.95, 30), st.integers(2, 200)),
)


@settings(max_examples=100, deadline=None)
@given(st.one_of(laguerre, jacobi_like))
def test_bounds_sound(spec):
    suite = verify_suite(spec)
    assert suite.violations == ()
    for r in suite.records:
        assert r.lower is None or r.lower > 0
        assert r.upper is None or r.upper > 0


@settings(max_examples=60, deadline=None)
@given(laguerre)
def test_laguerre_lower_bounds_increase_and_derived_dominates(spec):
    profile, zs = _setup(spec)
    recs = gap_bounds(spec, profile, zs)
    dec = [r.lower for r in recs if r.lower_source == LEFT and F_direction(spec, 0.5 * (r.x_k + r.x_k1)) < 0]
    assert all(a < b for a, b in zip(dec, dec[1:]))
    _, derived = laguerre_global_bound(spec, profile, zs)
    if derived is not None:
        assert derived >= min(r.lower for r in recs if r.lower is not None) - 1e-15
        assert zs.spacings.min() > derived
