"""One-dimensional zeta evaluators against classical closed forms.

Oracles used here:
  * nonpositive integer arguments: zeta_H(-n, a) = -B_{n+1}(a)/(n+1) with
    the Bernoulli polynomial evaluated from exact rational coefficients;
  * alternating series: sum (-1)^n/(n+1) = ln 2, sum (-1)^n/(n+1)^2 =
    pi^2/12, and the quarter twist giving Catalan's constant;
  * duplication at a = 1/2: zeta_H(s, 1/2) = (2^s - 1) zeta(s);
  * brute partial sums with integral tail bounds in the absolutely
    convergent region.
"""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from doublezeta import (
    DomainError,
    EMConfig,
    PoleAt,
    complex_gamma,
    frac01,
    hurwitz_fe_rhs,
    hurwitz_zeta,
    lerch_fe_rhs,
    lerch_zeta,
    periodic_zeta,
    riemann_zeta,
)

ZETA3 = 1.2020569031595942854  # Apery's constant
CATALAN = 0.9159655941772190151


def bernoulli_numbers(top: int) -> list[Fraction]:
    """Exact Bernoulli numbers B_0..B_top via the Akiyama-Tanigawa scheme."""
    out = []
    row: list[Fraction] = []
    for m in range(top + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    # convention B_1 = -1/2 (the scheme yields +1/2)
    if top >= 1:
        out[1] = -out[1]
    return out


def bernoulli_poly(n: int, x: float) -> float:
    """B_n(x) = sum_k C(n,k) B_k x^{n-k} from exact rational coefficients."""
    bs = bernoulli_numbers(n)
    return sum(
        float(Fraction(math.comb(n, k)) * bs[k]) * x ** (n - k)
        for k in range(n + 1)
    )


class TestFrac01:
    def test_examples(self):
        assert frac01(0.3) == pytest.approx(0.3)
        assert frac01(-0.3) == pytest.approx(0.7)
        assert frac01(0.0) == 1.0
        assert frac01(2.0) == 1.0
        assert frac01(-2.0) == 1.0
        assert frac01(1.25) == pytest.approx(0.25)

    def test_range(self):
        for x in np.linspace(-3.7, 3.7, 61):
            f = frac01(float(x))
            assert 0.0 < f <= 1.0
            assert abs((x - f) - round(x - f)) < 1e-12


class TestComplexGamma:
    def test_half_integer(self):
        assert complex_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_factorial(self):
        assert complex_gamma(5.0) == pytest.approx(24.0, rel=1e-13)

    def test_reflection_product(self):
        # Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)
        prod = complex_gamma(1.0 / 3.0) * complex_gamma(2.0 / 3.0)
        assert prod == pytest.approx(2.0 * math.pi / math.sqrt(3.0), rel=1e-12)

    def test_complex_conjugation(self):
        z = 1.7 + 2.3j
        a = complex_gamma(z)
        b = complex_gamma(z.conjugate())
        assert a == pytest.approx(b.conjugate(), rel=1e-12)

    def test_poles(self):
        for bad in (0.0, -1.0, -2.0):
            with pytest.raises(PoleAt):
                complex_gamma(bad)


class TestHurwitzZeta:
    def test_brute_sum_oracle(self):
        # Oracle: partial sum to N with integral bracket for the tail.
        s, a = 3.0, 0.7
        N = 20000
        partial = sum((n + a) ** -s for n in range(N))
        tail_hi = (N + a) ** (1 - s) / (s - 1)  # integral from N
        oracle = partial + tail_hi
        r = hurwitz_zeta(s, a)
        assert r.value.real == pytest.approx(oracle, rel=1e-7)
        assert abs(r.value.imag) < 1e-15

    def test_riemann_values(self):
        assert riemann_zeta(2.0).value.real == pytest.approx(math.pi**2 / 6.0, rel=1e-13)
        assert riemann_zeta(4.0).value.real == pytest.approx(math.pi**4 / 90.0, rel=1e-13)
        assert riemann_zeta(3.0).value.real == pytest.approx(ZETA3, rel=1e-13)

    def test_half_shift_duplication(self):
        # zeta_H(s, 1/2) = (2^s - 1) zeta(s)
        for s in (2.5, 3.0 + 1.5j, 4.0 - 2.0j):
            lhs = hurwitz_zeta(s, 0.5).value
            rhs = (2.0**complex(s) - 1.0) * riemann_zeta(s).value
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_nonpositive_integers_bernoulli(self):
        # zeta_H(-n, a) = -B_{n+1}(a)/(n+1); the deviation must sit inside
        # the reported estimate and the estimate itself must stay tiny.
        for n in (0, 1, 2, 3, 4, 5):
            for a in (0.3, 0.7, 1.0, 1.6):
                expect = -bernoulli_poly(n + 1, a) / (n + 1)
                got = hurwitz_zeta(float(-n), a)
                assert abs(got.value.real - expect) <= 10.0 * got.abs_err_est + 1e-13
                assert got.abs_err_est < 1e-7
                assert abs(got.value.imag) < 1e-12

    def test_pole_raises(self):
        with pytest.raises(PoleAt):
            hurwitz_zeta(1.0, 0.5)

    def test_domain(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, -0.5)

    def test_error_estimate_covers_true_error(self):
        # Against the Bernoulli oracle at s = -3 the estimate must not lie
        # by more than a small factor.
        a = 0.37
        expect = -bernoulli_poly(4, a) / 4.0
        got = hurwitz_zeta(-3.0, a)
        assert abs(got.value.real - expect) <= 10.0 * got.abs_err_est + 1e-15

    def test_recurrence_in_a(self):
        # zeta_H(s, a) - zeta_H(s, a+1) = a^{-s}
        s = 2.2 + 3.0j
        a = 0.9
        lhs = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1.0).value
        assert abs(lhs - a ** (-s)) < 1e-12


class TestLerchZeta:
    def test_ln2(self):
        # sum (-1)^n/(n+1) = ln 2 at the twisted point s = 1
        r = lerch_zeta(1.0, 1.0, 0.5)
        assert r.value.real == pytest.approx(math.log(2.0), rel=1e-12)
        assert abs(r.value.imag) < 1e-13

    def test_pi2_over_12(self):
        r = lerch_zeta(2.0, 1.0, 0.5)
        assert r.value.real == pytest.approx(math.pi**2 / 12.0, rel=1e-12)

    def test_trivial_twist_matches_hurwitz(self):
        a = 0.8
        s = 2.5 - 1.0j
        tw = lerch_zeta(s, a, 1.0)
        hw = hurwitz_zeta(s, a)
        assert abs(tw.value - hw.value) < 1e-13

    def test_brute_sum_oracle_convergent(self):
        s, a, lam = 2.4, 0.6, 0.3
        N = 200000
        n = np.arange(N)
        oracle = complex(np.sum(np.exp(2j * np.pi * lam * n) * (n + a) ** -s))
        tail = (N + a) ** (1 - s) / abs(1 - np.exp(2j * np.pi * lam))
        r = lerch_zeta(s, a, lam)
        assert abs(r.value - oracle) <= abs(tail) + 1e-10

    def test_continuation_smoothness(self):
        # Values on a short segment crossing sigma = 0 stay bounded and vary
        # smoothly: adjacent samples differ by O(step).
        vals = [lerch_zeta(complex(sig, 1.3), 0.7, 0.25).value for sig in np.linspace(-1.0, 1.0, 9)]
        diffs = [abs(b - a) for a, b in zip(vals, vals[1:])]
        assert max(diffs) < 1.0
        assert all(np.isfinite([v.real for v in vals]))


class TestPeriodicZeta:
    def test_alternating_values(self):
        # F(1/2, s) = sum (-1)^n / n^s
        r = periodic_zeta(0.5, 2.0)
        assert r.value.real == pytest.approx(-(math.pi**2) / 12.0, rel=1e-12)
        r1 = periodic_zeta(0.5, 1.0)
        assert r1.value.real == pytest.approx(-math.log(2.0), rel=1e-12)

    def test_quarter_twist_catalan(self):
        # F(1/4, 2) = Li_2(i) = -pi^2/48 + i G
        r = periodic_zeta(0.25, 2.0)
        assert r.value.real == pytest.approx(-(math.pi**2) / 48.0, rel=1e-10)
        assert r.value.imag == pytest.approx(CATALAN, rel=1e-10)

    def test_negative_twist_conjugates(self):
        r_p = periodic_zeta(0.3, 2.5)
        r_m = periodic_zeta(-0.3, 2.5)
        assert abs(r_m.value - r_p.value.conjugate()) < 1e-12


class TestHurwitzFunctionalEquation:
    def test_agreement_on_negative_strip(self):
        rng = np.random.default_rng(7)
        for _ in range(12):
            s = complex(rng.uniform(-3.0, -0.5), rng.uniform(-8.0, 8.0))
            a = rng.uniform(0.1, 1.0)
            lhs = hurwitz_zeta(s, a)
            rhs = hurwitz_fe_rhs(s, a)
            allow = 10.0 * (lhs.abs_err_est + rhs.abs_err_est + 1e-14)
            assert abs(lhs.value - rhs.value) <= allow

    def test_rejects_right_half(self):
        with pytest.raises(DomainError):
            hurwitz_fe_rhs(0.5, 0.5)


class TestLerchFunctionalEquation:
    def test_agreement_on_negative_strip(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            s = complex(rng.uniform(-3.0, -0.5), rng.uniform(-6.0, 6.0))
            a = rng.uniform(0.1, 1.0)
            lam = rng.uniform(0.05, 0.95)
            lhs = lerch_zeta(s, a, lam)
            rhs = lerch_fe_rhs(s, a, lam)
            allow = 10.0 * (lhs.abs_err_est + rhs.abs_err_est + 1e-14)
            assert abs(lhs.value - rhs.value) <= allow

    def test_trivial_twist_defers_to_hurwitz(self):
        s = -1.5
        a = 0.6
        via_lerch = lerch_fe_rhs(s, a, 1.0)
        via_hurwitz = hurwitz_fe_rhs(s, a)
        assert abs(via_lerch.value - via_hurwitz.value) < 1e-14


class TestEMConfig:
    def test_validation(self):
        with pytest.raises(DomainError):
            EMConfig(cutoff_n=0)
        with pytest.raises(DomainError):
            EMConfig(cutoff_n=10, bernoulli_order=3)

    def test_custom_config_converges_tighter(self):
        s, a = -2.5 + 4.0j, 0.8
        loose = hurwitz_zeta(s, a, EMConfig(cutoff_n=18, bernoulli_order=8))
        tight = hurwitz_zeta(s, a, EMConfig(cutoff_n=40, bernoulli_order=14))
        assert abs(loose.value - tight.value) <= 10.0 * (
            loose.abs_err_est + tight.abs_err_est
        )
