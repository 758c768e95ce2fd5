"""Parameter validation, ratio classification, and shift decomposition."""

import math

import pytest

from doublezeta import (
    BarnesParams,
    DomainError,
    HalfPlaneSpec,
    ImaginaryRatio,
    Rational,
    RealIrrational,
    ShiftOutOfRange,
    classify_ratio,
    decompose_shift,
    in_half_plane,
)
from doublezeta.errors import DegenerateRatio


class TestHalfPlane:
    def test_positive_real_part_in_default_plane(self):
        spec = HalfPlaneSpec(0.0)
        assert in_half_plane(1.0, spec)
        # Membership depends on Re alone for theta = 0, however large Im is.
        assert in_half_plane(2.5 + 1e3j, spec)
        assert not in_half_plane(-2.5 + 1e3j, spec)

    def test_strictness_on_boundary(self):
        # Re(z e^{-i theta}) must be strictly positive: the imaginary axis
        # is outside the theta = 0 plane.
        spec = HalfPlaneSpec(0.0)
        assert not in_half_plane(1j, spec)
        assert not in_half_plane(0.0, spec)
        assert in_half_plane(1e-300, spec)

    def test_rotated_plane(self):
        # Points on the rotated boundary resolve only to the float precision
        # of the rotation, so probe clearly inside and clearly outside.
        spec = HalfPlaneSpec(math.pi / 2.0)
        assert in_half_plane(1j, spec)
        assert in_half_plane(-0.1 + 1j, spec)
        assert not in_half_plane(-1.0, spec)
        assert not in_half_plane(-1j, spec)


class TestBarnesParams:
    def test_accepts_standard_real_weights(self):
        p = BarnesParams(2.0, 1.0, 1.0)
        assert p.alpha == 2.0 + 0j
        assert in_half_plane(p.alpha, p.half_plane)
        assert in_half_plane(p.v, p.half_plane)
        assert in_half_plane(p.w, p.half_plane)

    def test_accepts_imaginary_weight(self):
        p = BarnesParams(0.7 + 0.7j, 1.0, 1j)
        for z in (p.alpha, p.v, p.w):
            assert in_half_plane(z, p.half_plane)

    def test_rejects_zero_weight(self):
        with pytest.raises(DomainError):
            BarnesParams(1.0, 0.0, 1.0)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            BarnesParams(float("nan"), 1.0, 1.0)

    def test_rejects_antipodal_weights(self):
        # v and -v can never share a half plane.
        with pytest.raises(DomainError):
            BarnesParams(1.0, 1.0, -1.0)

    def test_explicit_theta_validated(self):
        with pytest.raises(DomainError):
            BarnesParams(1.0, 1.0, 1.0, theta=math.pi)  # alpha+v+w behind the plane

    def test_frozen(self):
        p = BarnesParams(1.0, 1.0, 1.0)
        with pytest.raises(AttributeError):
            p.alpha = 2.0


class TestClassifyRatio:
    def test_unit_ratio(self):
        rc = classify_ratio(1.0, 1.0)
        assert isinstance(rc, Rational)
        assert (rc.p, rc.q) == (1, 1)

    def test_two_to_one(self):
        rc = classify_ratio(1.0, 2.0)
        assert isinstance(rc, Rational)
        assert (rc.p, rc.q) == (2, 1)

    def test_reduced_fraction(self):
        rc = classify_ratio(3.0, 2.0)
        # w/v = 2/3
        assert isinstance(rc, Rational)
        assert (rc.p, rc.q) == (2, 3)

    def test_imaginary(self):
        rc = classify_ratio(1.0, 1j)
        assert isinstance(rc, ImaginaryRatio)
        assert rc.im_part == pytest.approx(1.0)

    def test_sqrt2_is_irrational(self):
        # The best rational approximations of float sqrt(2) within 1e6
        # denominators miss by far more than the Diophantine acceptance
        # threshold, so the float must classify as irrational.
        rc = classify_ratio(1.0, math.sqrt(2.0))
        assert isinstance(rc, RealIrrational)
        assert rc.value == pytest.approx(math.sqrt(2.0))

    def test_golden_is_irrational(self):
        rc = classify_ratio(1.0, (1.0 + math.sqrt(5.0)) / 2.0)
        assert isinstance(rc, RealIrrational)

    def test_exact_dyadic_rational(self):
        rc = classify_ratio(4.0, 3.0)
        assert isinstance(rc, Rational)
        assert (rc.p, rc.q) == (3, 4)

    def test_negative_ratio_rejected(self):
        with pytest.raises(DomainError):
            classify_ratio(1.0, -2.0)

    def test_zero_weight_degenerate(self):
        with pytest.raises(DegenerateRatio):
            classify_ratio(0.0, 1.0)


class TestDecomposeShift:
    def test_imaginary_pair_exact(self):
        # alpha = v(1-y1) + w(1-y2) with y1 = y2 = 0.3
        p = BarnesParams(0.7 + 0.7j, 1.0, 1j)
        sh = decompose_shift(p)
        assert sh.exact
        assert sh.y1 == pytest.approx(0.3, abs=1e-12)
        assert sh.y2 == pytest.approx(0.3, abs=1e-12)

    def test_collinear_equal_shift(self):
        # Real weights are collinear: the equal-shift solution is used.
        p = BarnesParams(1.5, 1.0, 2.0)
        sh = decompose_shift(p)
        assert not sh.exact
        y = (1.0 + 2.0 - 1.5) / 3.0
        assert sh.y1 == pytest.approx(y)
        assert sh.y2 == pytest.approx(y)
        # and the decomposition reproduces alpha
        alpha = 1.0 * (1.0 - sh.y1) + 2.0 * (1.0 - sh.y2)
        assert alpha == pytest.approx(1.5)

    def test_out_of_range_raises(self):
        # alpha too large for any shift in [0, 1]^2
        p = BarnesParams(5.0, 1.0, 2.0)
        with pytest.raises(ShiftOutOfRange):
            decompose_shift(p)

    def test_complex_residual_raises(self):
        # Collinear weights cannot absorb an off-line alpha.
        p = BarnesParams(1.5 + 0.4j, 1.0, 2.0)
        with pytest.raises(ShiftOutOfRange):
            decompose_shift(p)
