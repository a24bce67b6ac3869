import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmzeros.errors import DegreeTooSmall, ParameterOutOfRange, UnsupportedFamily
from sturmzeros.families import FamilySpec, evaluate, recurrence_coefficients
from sturmzeros.zeros import compute_zeros, first_zero_bounds, spacing_profile

# Roots of -t^3 + 9t^2 - 18t + 6 (6 L_3), 40-digit mpmath findroot.
LAGUERRE_3 = [0.41577455678347908331, 2.2942803602790417198, 6.2899450829374791969]
# Roots of 35t^4 - 30t^2 + 3: t^2 = (15 +- 2 sqrt 30) / 35.
LEGENDRE_4 = [-0.86113631159405257522, -0.33998104358485626480, 0.33998104358485626480, 0.86113631159405257522]


def test_laguerre_quadratic():
    zs = compute_zeros(FamilySpec.laguerre(0, 2))
    np.testing.assert_allclose(zs.zeros, [2 - math.sqrt(2), 2 + math.sqrt(2)], atol=1e-14)


def test_chebyshev_u_closed_form():
    zs = compute_zeros(FamilySpec.ultraspherical(0.5, 3))
    np.testing.assert_allclose(zs.zeros, [-math.sqrt(0.5), 0.0, math.sqrt(0.5)], atol=1e-15)
    assert zs.zeros[1] == 0.0


def test_legendre_four():
    zs = compute_zeros(FamilySpec.jacobi(0, 0, 4))
    np.testing.assert_allclose(zs.zeros, LEGENDRE_4, atol=1e-15)


def test_spacing_profile_laguerre_cubic():
    zs = compute_zeros(FamilySpec.laguerre(0, 3))
    np.testing.assert_allclose(zs.zeros, LAGUERRE_3, atol=1e-14)
    sp, d2 = spacing_profile(zs)
    np.testing.assert_allclose(sp, [1.8785058034955626865, 3.9956647226584374771], atol=1e-13)
    np.testing.assert_allclose(d2, [2.1171589191628747906], atol=1e-13)


def test_spacing_profile_legendre():
    sp, d2 = spacing_profile(compute_zeros(FamilySpec.jacobi(0, 0, 4)))
    np.testing.assert_allclose(sp, [0.52115526800919631042, 0.67996208716971252961, 0.52115526800919631042], atol=1e-14)
    np.testing.assert_allclose(d2, [0.15880681916051621918, -0.15880681916051621918], atol=1e-14)


def test_spacing_profile_chebyshev_symmetric_middle():
    sp, d2 = spacing_profile(compute_zeros(FamilySpec.ultraspherical(0.5, 3)))
    np.testing.assert_allclose(sp, [math.sqrt(0.5)] * 2, rtol=1e-15)
    assert d2[0] == 0.0


def test_spacing_profile_too_small():
    with pytest.raises(DegreeTooSmall):
        spacing_profile(np.array([0.5]))
    sp, d2 = spacing_profile(compute_zeros(FamilySpec.laguerre(0, 2)))
    assert len(sp) == 1 and len(d2) == 0


def test_zeroset_invariants_and_frozen():
    zs = compute_zeros(FamilySpec.jacobi(3.0, -0.5, 25))
    assert (zs.spacings == zs.zeros[1:] - zs.zeros[:-1]).all()
    assert (zs.second_differences == zs.spacings[1:] - zs.spacings[:-1]).all()
    with pytest.raises(ValueError):
        zs.zeros[0] = 0.0


def test_compute_zeros_rejects_out_of_range():
    with pytest.raises(ParameterOutOfRange):
        compute_zeros(FamilySpec.jacobi(-1.5, 0, 4))


def test_first_zero_bounds_examples():
    b = first_zero_bounds(FamilySpec.laguerre(2, 4))
    assert b.lower == 0.75
    assert b.upper_a == pytest.approx(12 / 7, rel=1e-15)
    assert b.upper_b == pytest.approx(15 / 11, rel=1e-15)
    b = first_zero_bounds(FamilySpec.laguerre(3, 5))
    assert b.t0 == pytest.approx(4 / 7) and b.upper_b == pytest.approx(12 / 7) and b.t0_below_upper
    b = first_zero_bounds(FamilySpec.laguerre(0, 3))
    assert b.lower < LAGUERRE_3[0] < b.upper_b
    with pytest.raises(UnsupportedFamily):
        first_zero_bounds(FamilySpec.jacobi(1, 1, 3))


specs = st.one_of(
    st.builds(FamilySpec.laguerre, st.floats(-0.95, 30), st.integers(1, 200)),
    st.builds(FamilySpec.jacobi, st.floats(-0.95, 30), st.floats(-0.95, 30), st.integers(1, 200)),
    st.builds(FamilySpec.ultraspherical, st.floats(-0.95, 30), st.integers(1, 200)),
)


@settings(max_examples=80, deadline=None)
@given(specs)
def test_zero_set_properties(spec):
    zs = compute_zeros(spec)
    x = zs.zeros
    lo, hi = spec.support
    assert len(x) == spec.n
    assert (np.diff(x) > 0).all()
    assert lo < x[0] and x[-1] < hi
    for t in x:
        r = evaluate(spec, t)
        assert abs(r.value) <= 1e-10 * abs(r.derivative) * max(1.0, abs(t))
    if spec.kind.value == "laguerre":
        # Degree one has its only zero exactly at alpha + 1.
        lower = (spec.alpha + 1) / spec.n
        assert x[0] > lower if spec.n > 1 else x[0] == pytest.approx(lower, rel=1e-15)
    if spec.symmetric:
        np.testing.assert_array_equal(x, -x[::-1])
        assert (0.0 in x) == (spec.n % 2 == 1)


@settings(max_examples=40, deadline=None)
@given(specs)
def test_polish_stays_near_eigenvalues(spec):
    rc = recurrence_coefficients(spec)
    m = np.diag(rc.diagonal) + np.diag(rc.offdiagonal, 1) + np.diag(rc.offdiagonal, -1)
    raw = np.linalg.eigvalsh(m)
    zs = compute_zeros(spec)
    assert np.all(np.abs(zs.zeros - raw) <= 1e-6 * np.maximum(1.0, np.abs(raw)))


@settings(max_examples=40, deadline=None)
@given(specs)
def test_interlacing(spec):
    if spec.n >= 200:
        return
    nxt = FamilySpec(spec.kind, spec.alpha, spec.n + 1, spec.beta if spec.kind.value == "jacobi" else None)
    a, b = compute_zeros(spec).zeros, compute_zeros(nxt).zeros
    assert (b[:-1] < a).all() and (a < b[1:]).all()


def test_jacobi_equal_parameters_match_ultraspherical():
    for a in (-0.5, 0.0, 2.5, 17.0):
        z1 = compute_zeros(FamilySpec.jacobi(a, a, 31)).zeros
        z2 = compute_zeros(FamilySpec.ultraspherical(a, 31)).zeros
        np.testing.assert_allclose(z1, z2, atol=1e-12)
