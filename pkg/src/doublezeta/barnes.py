"""Evaluation routes for the double zeta function.

The object is zeta2(s, alpha; v, w) = sum_{m,n>=0} (alpha + v m + w n)^(-s),
absolutely convergent for Re(s) > 2 and continued elsewhere with simple poles
at s = 1 and s = 2.  Six routes compute it:

  DirectSeries            box sum plus Euler-Maclaurin tail completion,
                          Re(s) > 2
  ApproxFE                truncated box plus the three-power main term,
                          0 < Re(s) < 2, |t| <= 2 pi x / C
  FuncEqIndep             prefactor times two bilateral sums, for imaginary
                          or irrational real ratio w/v
  FuncEqRationalHurwitz   bilateral residue-class sums plus two Hurwitz-zeta
                          closing terms, for rational w/v = p/q
  FuncEqRationalLerch     same bilateral part with the closing terms kept as
                          twisted series at 1-s and 2-s
  IteratedHurwitz         w^{-s} sum_m zeta_H(s, (alpha+vm)/w) with
                          Euler-Maclaurin applied to the outer sum; valid on
                          the whole plane minus the poles and used as the
                          independent cross-check oracle

The functional-equation prefactor is Gamma(1-s)/(2 pi)^{1-s} e^{i pi (1-s)/2}
(equivalently -Gamma(1-s)/((2 pi i)^{1-s} e^{i pi s}) on principal branches),
and the negative-index branch n^{1-s} = |n|^{1-s} e^{+i pi (1-s)} is pinned by
the v = w = 1 closed-form identity.

Gamma(1-s) has poles at every positive integer; at s = 1, 2 these are genuine
poles of zeta2 and evaluation is refused, while at integer s >= 3 (and at
s = 0 when a twist parameter degenerates) the assembled right-hand side has a
removable singularity, which is evaluated by averaging over a small circle
around s (error O(radius^8)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, PoleAt, RangeError
from .eta import TruncationPlan, bilateral_indep, bilateral_rational, nearest_int_signed
from .params import (
    BarnesParams,
    ImaginaryRatio,
    Rational,
    RealIrrational,
    classify_ratio,
    decompose_shift,
)
from .zetas import (
    _B2K,
    EMConfig,
    EvalResult,
    complex_gamma,
    frac01,
    hurwitz_zeta,
    periodic_zeta,
)

_EPS = 2.220446049250313e-16
# Relative accuracy envelope of the Lanczos gamma in the prefactor.
_GAMMA_REL = 2e-13
_POLE_TOL = 1e-10
_RESCUE_TOL = 1e-6
_RESCUE_RADIUS = 0.1
_AFE_BLOCK_ROWS = 256


class MethodTag(str, Enum):
    """Route labels carried by every double-zeta EvalResult."""

    DIRECT_SERIES = "DirectSeries"
    APPROX_FE = "ApproxFE"
    FUNC_EQ_INDEP = "FuncEqIndep"
    FUNC_EQ_RATIONAL_LERCH = "FuncEqRationalLerch"
    FUNC_EQ_RATIONAL_HURWITZ = "FuncEqRationalHurwitz"
    ITERATED_HURWITZ = "IteratedHurwitz"


@dataclass(frozen=True)
class DispatchPolicy:
    """Region boundaries for evaluate().

    afe_x None means the automatic choice x = max(10^3, 1.2 C |t| / (2 pi)).
    afe_sigma_min tightens the strip in which the approximate functional
    equation is trusted: its error scale x^{1-sigma} is useless for sigma
    near 0, so the dispatcher falls back to the iterated route below it.
    """

    sigma_direct: float = 2.5
    sigma_fe: float = -0.25
    afe_C: float = 2.0
    afe_x: float | None = None
    afe_sigma_min: float = 1.05

    def __post_init__(self):
        if not self.sigma_direct > 2.0:
            raise DomainError("sigma_direct must exceed 2")
        if not self.sigma_fe < 0.0:
            raise DomainError("sigma_fe must be negative")
        if not self.afe_C > 1.0:
            raise DomainError("afe_C must exceed 1")
        if self.afe_x is not None and not self.afe_x > 0.0:
            raise DomainError("afe_x must be positive when given")


def _pole_guard(s: complex, tol: float = _POLE_TOL) -> None:
    for j in (1.0, 2.0):
        if abs(s - j) <= tol:
            raise PoleAt(j)


def _power_tail(z: complex, base, step: complex, order: int = 12):
    """Euler-Maclaurin value of sum_{j>=0} (base + step j)^(-z).

    base may be a scalar or an ndarray; returns (value, omitted) where
    omitted is the magnitude (or magnitude sum) of the first dropped
    correction term.
    """
    value = base ** (1.0 - z) / (step * (z - 1.0)) + 0.5 * base ** (-z)
    rise = z
    bpow = base ** (-z - 1.0)
    inv_b2 = 1.0 / (base * base)
    omitted = 0.0
    for k in range(1, order // 2 + 1):
        coef = _B2K[k - 1] / math.factorial(2 * k) * step ** (2 * k - 1)
        if rise != 0:
            value = value + coef * rise * bpow
        rise = rise * (z + (2 * k - 1)) * (z + 2 * k)
        bpow = bpow * inv_b2
        if k == order // 2:
            b_next = _B2K[k] if k < len(_B2K) else _B2K[-1]
            nxt = np.abs(b_next / math.factorial(2 * k + 2) * step ** (2 * k + 1) * rise * bpow)
            omitted = float(np.sum(nxt))
    return value, omitted


def direct_double_sum(
    s: complex, params: BarnesParams, cutoff: int | None = None
) -> EvalResult:
    """Box sum over 0 <= m, n <= cutoff with Euler-Maclaurin tail completion.

    Requires Re(s) > 2.  The two tail strips and the corner are completed by
    one-dimensional Euler-Maclaurin sums, which brings the result to near
    machine accuracy at moderate cutoffs; abs_err_est carries the first
    omitted correction.  terms_used counts the explicitly summed box.
    """
    s = complex(s)
    if not s.real > 2.0:
        raise DomainError("direct_double_sum requires Re(s) > 2")
    alpha, v, w = params.alpha, params.v, params.w
    m_top = cutoff if cutoff is not None else max(64, int(math.ceil(2.0 * abs(s))))
    if m_top < 1:
        raise DomainError("cutoff must be at least 1")

    m = np.arange(m_top + 1)
    n = np.arange(m_top + 1)
    rows = alpha + v * m
    grid = rows[:, None] + w * n[None, :]
    box_terms = np.power(grid, -s)
    box = complex(np.sum(box_terms))
    abs_mass = float(np.sum(np.abs(box_terms)))

    # Right strip: for each row, the n > cutoff tail.
    strip_a, om_a = _power_tail(s, rows + w * (m_top + 1), w)
    # Remaining rows m > cutoff with their full n-sums, via Euler-Maclaurin
    # in m applied to row(m) = (base_m)^{1-s}/(w(s-1)) + (base_m)^{-s}/2 + ...
    base0 = alpha + v * (m_top + 1)
    t_int, om_b1 = _power_tail(s - 1.0, base0, v)
    t_half, om_b2 = _power_tail(s, base0, v)
    part_b = t_int / (w * (s - 1.0)) + 0.5 * t_half
    om_b = abs(om_b1 / (w * (s - 1.0))) + 0.5 * om_b2
    rise = s
    for k in range(1, 7):
        coef = _B2K[k - 1] / math.factorial(2 * k) * w ** (2 * k - 1)
        tk, om_k = _power_tail(s + (2 * k - 1), base0, v)
        part_b = part_b + coef * rise * tk
        om_b += abs(coef * rise) * om_k
        rise = rise * (s + (2 * k - 1)) * (s + 2 * k)

    value = box + complex(np.sum(strip_a)) + part_b
    est = om_a + om_b + _EPS * abs_mass
    return EvalResult(
        value=value,
        abs_err_est=est,
        method=MethodTag.DIRECT_SERIES.value,
        terms_used=(m_top + 1) ** 2,
    )


def approx_fe(
    s: complex,
    params: BarnesParams,
    x: float | None = None,
    C: float = 2.0,
) -> EvalResult:
    """Truncated box plus main term, for 0 < Re(s) < 2 in the strip.

    value = sum_{0<=m,n<=X} (alpha+vm+wn)^{-s}
          + [(alpha+vX)^{2-s} + (alpha+wX)^{2-s} - (alpha+vX+wX)^{2-s}]
            / (v w (s-1)(s-2)),      X = floor(x),
    with abs_err_est ~ x^{1-sigma}.  Requires |Im(s)| <= 2 pi x / C.
    """
    s = complex(s)
    sigma, t = s.real, s.imag
    if not 0.0 < sigma < 2.0:
        raise DomainError("approx_fe requires 0 < Re(s) < 2")
    _pole_guard(s)
    if not C > 1.0:
        raise DomainError("C must exceed 1")
    if x is None:
        x = max(1000.0, 1.2 * C * abs(t) / (2.0 * math.pi))
    x = float(x)
    if not x >= 1.0:
        raise DomainError("x must be at least 1")
    if abs(t) > 2.0 * math.pi * x / C:
        raise RangeError(
            f"|Im(s)| = {abs(t):.6g} exceeds 2 pi x / C = {2 * math.pi * x / C:.6g}"
        )
    alpha, v, w = params.alpha, params.v, params.w
    big_x = int(math.floor(x))

    n = np.arange(big_x + 1)
    cols = w * n
    box = 0.0 + 0.0j
    abs_mass = 0.0
    for lo in range(0, big_x + 1, _AFE_BLOCK_ROWS):
        hi = min(lo + _AFE_BLOCK_ROWS, big_x + 1)
        rows = alpha + v * np.arange(lo, hi)
        block = np.power(rows[:, None] + cols[None, :], -s)
        box += complex(np.sum(block))
        abs_mass += float(np.sum(np.abs(block)))

    main = (
        (alpha + v * big_x) ** (2.0 - s)
        + (alpha + w * big_x) ** (2.0 - s)
        - (alpha + v * big_x + w * big_x) ** (2.0 - s)
    ) / (v * w * (s - 1.0) * (s - 2.0))
    value = box + main
    est = 2.0 * (1.0 + abs(alpha)) * x ** (1.0 - sigma) + _EPS * abs_mass
    return EvalResult(
        value=value,
        abs_err_est=est,
        method=MethodTag.APPROX_FE.value,
        terms_used=(big_x + 1) ** 2,
    )


def _fe_prefactor(s: complex) -> complex:
    """Gamma(1-s)/(2 pi)^{1-s} e^{i pi (1-s)/2} on principal branches."""
    return (
        complex_gamma(1.0 - s)
        * (2.0 * math.pi) ** (s - 1.0)
        * cmath.exp(1j * math.pi * (1.0 - s) / 2.0)
    )


def _fe_range_guard(s: complex) -> None:
    # Gamma(1-s) underflows while the branch factor e^{-i pi (1-s)} overflows
    # once pi |t| passes the double-precision exponent range; the assembled
    # value is finite but not representable factor by factor.
    if math.pi * abs(s.imag) > 600.0:
        raise RangeError(
            "functional-equation factors exceed double range for this Im(s)"
        )


def _circle_average(f, s0: complex, radius: float = _RESCUE_RADIUS) -> EvalResult:
    """Average f over eight points of |s - s0| = radius.

    For f analytic in the disk the average equals f(s0) + O(radius^8); used
    where the formula at s0 itself is an indeterminate 0 x infinity.
    """
    values = []
    ests = []
    terms = 0
    for k in range(8):
        r = f(s0 + radius * cmath.exp(1j * math.pi * k / 4.0))
        values.append(r.value)
        ests.append(r.abs_err_est)
        terms += r.terms_used
    value = sum(values) / 8.0
    spread_scale = max(abs(val) for val in values)
    est = sum(ests) / 8.0 + 2.0 * spread_scale * radius**8
    return EvalResult(value=value, abs_err_est=est, method="average", terms_used=terms)


def func_eq_indep(
    s: complex,
    params: BarnesParams,
    plan: TruncationPlan | None = None,
    negative_branch: str = "plus",
) -> EvalResult:
    """Functional-equation route for imaginary or irrational real ratio w/v.

    value = P(s) [ v^{-s} B(v, w; y1, y2) + w^{-s} B(w, v; y2, y1) ] with
    P(s) = Gamma(1-s)/(2 pi)^{1-s} e^{i pi (1-s)/2} and B the bilateral sum.
    Valid on the whole plane when Im(w/v) != 0 and 0 < y1, y2 < 1, otherwise
    for Re(s) < 0.  Removable prefactor poles at integer s >= 3 are handled
    by circle averaging.
    """
    s = complex(s)
    _pole_guard(s)
    _fe_range_guard(s)
    sh = decompose_shift(params)
    v, w = params.v, params.w
    ratio = w / v
    whole_plane = abs(ratio.imag) > 1e-13 and 0.0 < sh.y1 < 1.0 and 0.0 < sh.y2 < 1.0
    if not whole_plane and s.real >= 0.0:
        raise DomainError(
            "this (y1, y2) admits the functional equation only for Re(s) < 0"
        )

    def core(z: complex) -> EvalResult:
        b1 = bilateral_indep(v, w, sh.y1, sh.y2, z, plan, negative_branch)
        b2 = bilateral_indep(w, v, sh.y2, sh.y1, z, plan, negative_branch)
        pref = _fe_prefactor(z)
        value = pref * (v ** (-z) * b1.value + w ** (-z) * b2.value)
        est = abs(pref) * (
            abs(v ** (-z)) * b1.abs_err_est + abs(w ** (-z)) * b2.abs_err_est
        )
        return EvalResult(
            value=value,
            abs_err_est=est + _GAMMA_REL * abs(value),
            method=MethodTag.FUNC_EQ_INDEP.value,
            terms_used=b1.terms_used + b2.terms_used,
        )

    m = round(s.real)
    if m >= 3 and abs(s - m) < _RESCUE_TOL:
        res = _circle_average(core, s)
        return EvalResult(
            value=res.value,
            abs_err_est=res.abs_err_est,
            method=MethodTag.FUNC_EQ_INDEP.value,
            terms_used=res.terms_used,
        )
    return core(s)


def _resolve_rational(params: BarnesParams, p: int | None, q: int | None):
    if p is None or q is None:
        rc = classify_ratio(params.v, params.w)
        if not isinstance(rc, Rational):
            raise DomainError(
                "ratio w/v is not rational; use func_eq_indep for this ratio"
            )
        return rc.p, rc.q
    p = int(p)
    q = int(q)
    if p <= 0 or q <= 0 or math.gcd(p, q) != 1:
        raise DomainError("p/q must be a positive fraction in lowest terms")
    ratio = params.w / params.v
    if abs(ratio - p / q) > 1e-9 * max(1.0, abs(ratio)):
        raise DomainError("p v = q w must hold for the rational route")
    return p, q


def _closing_shift(params: BarnesParams, q: int) -> float:
    """The real closing-term shift q alpha / v; rejects non-collinear alpha."""
    c = q * params.alpha / params.v
    if abs(c.imag) > 1e-10 * (1.0 + abs(c)):
        raise DomainError("the rational closing terms need alpha/v real")
    return c.real


def _rational_rescue_needed(s: complex, trivial_twist: bool) -> bool:
    m = round(s.real)
    if abs(s - m) >= _RESCUE_TOL:
        return False
    if m >= 3:
        return True
    return m == 0 and trivial_twist


def _rational_twists_trivial(p: int, q: int, y1: float, y2: float, c: float) -> bool:
    rho_v = y1 + (p / q) * y2
    rho_w = y2 + (q / p) * y1
    trivial = abs(nearest_int_signed(c)) < 1e-12
    if q > 1:
        trivial = trivial or abs(nearest_int_signed(q * rho_v)) < 1e-12
    if p > 1:
        trivial = trivial or abs(nearest_int_signed(p * rho_w)) < 1e-12
    return trivial


def func_eq_rational_hurwitz(
    s: complex,
    params: BarnesParams,
    p: int | None = None,
    q: int | None = None,
    plan: TruncationPlan | None = None,
    coefficient_form: str = "derived",
) -> EvalResult:
    """Functional-equation route for rational ratio w/v = p/q, Hurwitz closing.

    value = P(s) [ v^{-s} B_q + w^{-s} B_p ]
          + K (q/v)^{s-1} zeta_H(s, a) + q^{s-1}/(p v^s) zeta_H(s-1, a)

    where B_q, B_p are the residue-class bilateral sums over the two lattice
    directions and a = frac01(q alpha / v).  coefficient_form selects K:

      "derived"   K = ((v+w)/2 - alpha) q / (p v^2), the value consistent
                  with homogeneity and with every cross-route comparison;
      "verbatim"  K = (p+q)/(p v) - v p/(2 q) - v/2 - alpha q/(p v^2) with
                  the unreduced shift, kept available because it is the
                  transcribed form; it fails the cross-route checks.
    """
    s = complex(s)
    _pole_guard(s)
    _fe_range_guard(s)
    p, q = _resolve_rational(params, p, q)
    alpha, v, w = params.alpha, params.v, params.w
    sh = decompose_shift(params)
    c = _closing_shift(params, q)
    if coefficient_form == "derived":
        k_coef = ((v + w) / 2.0 - alpha) * q / (p * v * v)
        shift = frac01(c)
    elif coefficient_form == "verbatim":
        k_coef = (p + q) / (p * v) - v * p / (2.0 * q) - v / 2.0 - alpha * q / (p * v * v)
        if c <= 0.0:
            raise DomainError("the verbatim closing shift needs q alpha / v > 0")
        shift = c
    else:
        raise DomainError("coefficient_form must be 'derived' or 'verbatim'")

    def core(z: complex) -> EvalResult:
        b_q = bilateral_rational(p, q, v, sh.y1, sh.y2, z, plan)
        b_p = bilateral_rational(q, p, w, sh.y2, sh.y1, z, plan)
        pref = _fe_prefactor(z)
        h1 = hurwitz_zeta(z, shift)
        h2 = hurwitz_zeta(z - 1.0, shift)
        qv = (q / v) ** (z - 1.0)
        q2 = q ** (z - 1.0) / (p * v**z)
        pieces = (
            pref * v ** (-z) * b_q.value,
            pref * w ** (-z) * b_p.value,
            k_coef * qv * h1.value,
            q2 * h2.value,
        )
        value = sum(pieces)
        est = (
            abs(pref)
            * (abs(v ** (-z)) * b_q.abs_err_est + abs(w ** (-z)) * b_p.abs_err_est)
            + abs(k_coef * qv) * h1.abs_err_est
            + abs(q2) * h2.abs_err_est
        )
        # The pieces can cancel; roundoff follows their magnitudes, and the
        # prefactor-scaled part inherits the gamma accuracy floor.
        mass = sum(abs(piece) for piece in pieces)
        est += _GAMMA_REL * abs(pieces[0] + pieces[1])
        return EvalResult(
            value=value,
            abs_err_est=est + 3.0 * _EPS * mass,
            method=MethodTag.FUNC_EQ_RATIONAL_HURWITZ.value,
            terms_used=b_q.terms_used + b_p.terms_used + h1.terms_used + h2.terms_used,
        )

    if _rational_rescue_needed(s, _rational_twists_trivial(p, q, sh.y1, sh.y2, c)):
        res = _circle_average(core, s)
        return EvalResult(
            value=res.value,
            abs_err_est=res.abs_err_est,
            method=MethodTag.FUNC_EQ_RATIONAL_HURWITZ.value,
            terms_used=res.terms_used,
        )
    return core(s)


def func_eq_rational_lerch(
    s: complex,
    params: BarnesParams,
    p: int | None = None,
    q: int | None = None,
    plan: TruncationPlan | None = None,
) -> EvalResult:
    """Functional-equation route for rational w/v with twisted-series closing.

    value = P(s) [ v^{-s} B_q + w^{-s} B_p + T3 + T4 ] with

      T3 = (s-1) q^{s-1} / (2 pi i p v^s) [ F(-c, 2-s) + e^{i pi s} F(c, 2-s) ]
      T4 = K (q/v)^{s-1} [ F(-c, 1-s) - e^{i pi s} F(c, 1-s) ]

    where c = q alpha / v, F is the periodic zeta and K the derived closing
    coefficient.  Mathematically equal to the Hurwitz-closing form; the two
    routes share only the bilateral part, so their agreement exercises the
    one-dimensional functional equations.
    """
    s = complex(s)
    _pole_guard(s)
    _fe_range_guard(s)
    p, q = _resolve_rational(params, p, q)
    alpha, v, w = params.alpha, params.v, params.w
    sh = decompose_shift(params)
    c = _closing_shift(params, q)
    k_coef = ((v + w) / 2.0 - alpha) * q / (p * v * v)

    def core(z: complex) -> EvalResult:
        b_q = bilateral_rational(p, q, v, sh.y1, sh.y2, z, plan)
        b_p = bilateral_rational(q, p, w, sh.y2, sh.y1, z, plan)
        e_pis = cmath.exp(1j * math.pi * z)
        f_m2 = periodic_zeta(-c, 2.0 - z)
        f_p2 = periodic_zeta(c, 2.0 - z)
        f_m1 = periodic_zeta(-c, 1.0 - z)
        f_p1 = periodic_zeta(c, 1.0 - z)
        c3 = (z - 1.0) * q ** (z - 1.0) / (2j * math.pi * p * v**z)
        c4 = k_coef * (q / v) ** (z - 1.0)
        t3 = c3 * (f_m2.value + e_pis * f_p2.value)
        t4 = c4 * (f_m1.value - e_pis * f_p1.value)
        pref = _fe_prefactor(z)
        pieces = (
            pref * v ** (-z) * b_q.value,
            pref * w ** (-z) * b_p.value,
            pref * t3,
            pref * t4,
        )
        value = sum(pieces)
        est = abs(pref) * (
            abs(v ** (-z)) * b_q.abs_err_est
            + abs(w ** (-z)) * b_p.abs_err_est
            + abs(c3) * (f_m2.abs_err_est + abs(e_pis) * f_p2.abs_err_est)
            + abs(c4) * (f_m1.abs_err_est + abs(e_pis) * f_p1.abs_err_est)
        )
        mass = sum(abs(piece) for piece in pieces)
        est += _GAMMA_REL * abs(value)
        return EvalResult(
            value=value,
            abs_err_est=est + 3.0 * _EPS * mass,
            method=MethodTag.FUNC_EQ_RATIONAL_LERCH.value,
            terms_used=b_q.terms_used
            + b_p.terms_used
            + f_m2.terms_used
            + f_p2.terms_used
            + f_m1.terms_used
            + f_p1.terms_used,
        )

    if _rational_rescue_needed(s, _rational_twists_trivial(p, q, sh.y1, sh.y2, c)):
        res = _circle_average(core, s)
        return EvalResult(
            value=res.value,
            abs_err_est=res.abs_err_est,
            method=MethodTag.FUNC_EQ_RATIONAL_LERCH.value,
            terms_used=res.terms_used,
        )
    return core(s)


def iterated_hurwitz(
    s: complex,
    params: BarnesParams,
    cfg: EMConfig | None = None,
    outer_cutoff: int | None = None,
) -> EvalResult:
    """Row-wise evaluation w^{-s} sum_{m>=0} zeta_H(s, (alpha+vm)/w).

    The outer sum over m is completed by Euler-Maclaurin:

      sum_{m>=M} zeta_H(s, a_m) = (w/v) zeta_H(s-1, a_M)/(s-1)
        + zeta_H(s, a_M)/2
        + sum_k B_{2k}/(2k)! (v/w)^{2k-1} (s)_{2k-1} zeta_H(s+2k-1, a_M)

    with a_m = (alpha+vm)/w.  At s = 2 - 2k the k-th correction is an
    indeterminate 0 x infinity (zero rising factorial against the inner pole);
    its finite limit is the product of the remaining rising-factorial factors,
    which is substituted inside the corner window |s + 2k - 2| < 1e-9.

    Valid on the whole plane minus s = 1, 2.  Needs Re((alpha+vm)/w) > 0 for
    all m >= 0, which holds throughout the parameter cone used here.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-12:
        raise PoleAt(1.0)
    if abs(s - 2.0) <= 1e-12:
        raise PoleAt(2.0)
    alpha, v, w = params.alpha, params.v, params.w
    # At Re(s) < 0 the row values grow like m^{2-Re(s)}, so head-sum
    # cancellation costs eps * cutoff^{2-Re(s)}; a small cutoff is better as
    # long as it stays comparable to |s| for the outer corrections.
    m_top = outer_cutoff if outer_cutoff is not None else max(10, int(math.ceil(abs(s))))
    if m_top < 1:
        raise DomainError("outer_cutoff must be at least 1")
    order = cfg.bernoulli_order if cfg is not None else 12

    if ((alpha + v * m_top) / w).real <= 0.0 or (v / w).real < -1e-12:
        raise DomainError(
            "iterated route needs Re((alpha + v m)/w) > 0 for all m"
        )

    total = 0.0 + 0.0j
    est = 0.0
    mass = 0.0
    used = 0
    for m in range(m_top):
        inner = hurwitz_zeta(s, (alpha + v * m) / w, cfg)
        total += inner.value
        est += inner.abs_err_est
        mass += abs(inner.value)
        used += inner.terms_used

    a_top = (alpha + v * m_top) / w
    h_int = hurwitz_zeta(s - 1.0, a_top, cfg)
    h_half = hurwitz_zeta(s, a_top, cfg)
    total += (w / v) * h_int.value / (s - 1.0) + 0.5 * h_half.value
    est += abs(w / v) * h_int.abs_err_est / abs(s - 1.0) + 0.5 * h_half.abs_err_est
    mass += abs((w / v) * h_int.value / (s - 1.0)) + 0.5 * abs(h_half.value)
    used += h_int.terms_used + h_half.terms_used

    rise = s
    last_term_mag = 0.0
    for k in range(1, order // 2 + 1):
        coef = _B2K[k - 1] / math.factorial(2 * k) * (v / w) ** (2 * k - 1)
        z_arg = s + (2 * k - 1)
        delta = z_arg - 1.0
        if abs(delta) < 1e-9:
            # Indeterminate corner: (s)_{2k-1} -> 0 against the inner pole.
            partial = 1.0 + 0.0j
            for j in range(2 * k - 1):
                if j != 2 * k - 2:
                    partial *= s + j
            total += coef * partial
            mass += abs(coef * partial)
            est += abs(coef * partial) * (abs(delta) * 8.0 + 1e-15)
        elif rise != 0:
            h_k = hurwitz_zeta(z_arg, a_top, cfg)
            term = coef * rise * h_k.value
            total += term
            est += abs(coef * rise) * h_k.abs_err_est
            mass += abs(term)
            used += h_k.terms_used
            last_term_mag = abs(term)
        rise = rise * (s + (2 * k - 1)) * (s + 2 * k)

    # A zero rising factorial persists at every later order, so the
    # correction series terminated and nothing was omitted; otherwise the
    # omitted remainder is roughly the next term, one decrement ratio past
    # the last one computed.
    if rise == 0:
        omitted = 0.0
    else:
        ratio = ((abs(s) + order + 2.0) / (2.0 * math.pi * abs(a_top))) ** 2
        omitted = last_term_mag * min(ratio, 1.0)

    weight = w ** (-s)
    value = weight * total
    est = abs(weight) * (est + omitted + 4.0 * _EPS * mass)
    return EvalResult(
        value=value,
        abs_err_est=est,
        method=MethodTag.ITERATED_HURWITZ.value,
        terms_used=used,
    )


def evaluate(
    s: complex,
    params: BarnesParams,
    policy: DispatchPolicy | None = None,
) -> EvalResult:
    """Evaluate the double zeta function, dispatching on Re(s) and the ratio.

    Re(s) >= sigma_direct: DirectSeries.  sigma_fe < Re(s) < sigma_direct:
    ApproxFE when afe_sigma_min <= Re(s) < 2 and |Im(s)| fits 2 pi x / C,
    else IteratedHurwitz.  Re(s) <= sigma_fe: the functional-equation route
    matching the ratio class.  Refuses |s - 1| and |s - 2| within 1e-10.
    """
    s = complex(s)
    if policy is None:
        policy = DispatchPolicy()
    _pole_guard(s)
    sigma, t = s.real, s.imag

    if sigma >= policy.sigma_direct:
        return direct_double_sum(s, params)

    if sigma > policy.sigma_fe:
        x = policy.afe_x
        if x is None:
            x = max(1000.0, 1.2 * policy.afe_C * abs(t) / (2.0 * math.pi))
        strip_ok = policy.afe_sigma_min <= sigma < 2.0 - _POLE_TOL
        t_ok = abs(t) <= 2.0 * math.pi * x / policy.afe_C
        if strip_ok and t_ok:
            return approx_fe(s, params, x, policy.afe_C)
        return iterated_hurwitz(s, params)

    rc = classify_ratio(params.v, params.w)
    if isinstance(rc, Rational):
        return func_eq_rational_hurwitz(s, params, rc.p, rc.q)
    return func_eq_indep(s, params)


def residue_probe(params: BarnesParams, j: int, radius: float = 0.05) -> complex:
    """Residue of the double zeta function at s = j for j in {1, 2}.

    Averages (s - j) times the iterated evaluation over four points of the
    circle |s - j| = radius; for a simple pole the average equals the residue
    up to O(radius^4).
    """
    if j not in (1, 2):
        raise DomainError("residue_probe supports j in {1, 2}")
    radius = float(radius)
    if not 0.0 < radius <= 0.1:
        raise DomainError("radius must lie in (0, 0.1]")
    acc = 0.0 + 0.0j
    for k in range(4):
        z = j + radius * cmath.exp(1j * math.pi * (2 * k + 1) / 4.0)
        acc += (z - j) * iterated_hurwitz(z, params).value
    return acc / 4.0
