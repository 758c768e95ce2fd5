"""One-dimensional zeta functions and their functional equations.

Evaluators:

  hurwitz_zeta(s, a)        sum_{n>=0} (n+a)^(-s), Euler-Maclaurin continuation
  riemann_zeta(s)           hurwitz_zeta at a = 1
  lerch_zeta(s, a, lam)     sum_{n>=0} e^{2 pi i n lam} (n+a)^(-s), head plus a
                            K-fold forward-difference (Abel) tail that both
                            accelerates convergence and continues in s
  periodic_zeta(lam, z)     sum_{n>=1} e^{2 pi i n lam} n^(-z)
  hurwitz_fe_rhs(s, a)      the twisted-series side of the Hurwitz functional
                            equation, evaluated independently of hurwitz_zeta
  lerch_fe_rhs(s, a, lam)   same for the twisted series

complex_gamma is a Lanczos approximation (g = 7, nine coefficients) with the
reflection formula for Re z < 1/2; it exists so the functional-equation routes
do not share code with any library continuation they are checked against.

All evaluators return EvalResult(value, abs_err_est, method, terms_used); the
error estimate is the magnitude of the first omitted correction plus a float
noise allowance, not a proven bound.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConditioningWarning, DomainError, PoleAt

_EPS = 2.220446049250313e-16
# Relative accuracy envelope of the Lanczos gamma over the working strip;
# every value it multiplies inherits this floor.
_GAMMA_REL = 2e-13

# Bernoulli numbers B_2, B_4, ..., B_30 as exact-ratio floats.
_B2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
)

# Lanczos coefficients for g = 7.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def frac01(x: float) -> float:
    """Fractional part normalized to the half-open interval (0, 1]."""
    return float(x) - math.ceil(float(x)) + 1.0


def complex_gamma(z: complex) -> complex:
    """Gamma function for complex argument, ~1e-13 relative accuracy."""
    z = complex(z)
    if z.real < 0.5:
        # Reflection; poles at nonpositive integers.
        if abs(z.imag) < 1e-12 and abs(z.real - round(z.real)) < 1e-12:
            raise PoleAt(complex(round(z.real), 0.0),
                         f"gamma pole at z = {round(z.real)}")
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1.0 - z))
    z = z - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


@dataclass(frozen=True)
class EMConfig:
    """Truncation settings for the Euler-Maclaurin evaluators.

    cutoff_n is the number of directly summed head terms; bernoulli_order is
    the highest Bernoulli index used in the correction sum (even, at most 30).
    """

    cutoff_n: int
    bernoulli_order: int = 12

    def __post_init__(self):
        if not (isinstance(self.cutoff_n, int) and self.cutoff_n > 0):
            raise DomainError("cutoff_n must be a positive integer")
        if (
            not isinstance(self.bernoulli_order, int)
            or self.bernoulli_order % 2 != 0
            or not 2 <= self.bernoulli_order <= 30
        ):
            raise DomainError("bernoulli_order must be even and within [2, 30]")


@dataclass(frozen=True)
class EvalResult:
    """A numerical value with an honest error estimate and provenance.

    method is a short route label; the double-zeta evaluators always store
    one of the MethodTag values there.  abs_err_est is an estimate (first
    omitted correction plus float noise), not a certified bound.
    """

    value: complex
    abs_err_est: float
    method: str
    terms_used: int


def default_em_config(s: complex) -> EMConfig:
    # At Re(s) < 0 the head terms grow like n^{-Re(s)}, so a long head only
    # adds cancellation noise; the tail expansion converges once the shifted
    # argument clears |s|, which a short head already ensures.
    s = complex(s)
    head = 18 if s.real < 0.0 else 50
    return EMConfig(cutoff_n=max(head, int(2.0 * abs(s))), bernoulli_order=12)


def _em_tail(s: complex, x: complex, order: int) -> tuple[complex, float, float]:
    """Euler-Maclaurin tail for sum_{n>=N} (n+a)^(-s) with x = a + N.

    Returns (tail, remainder_bound, abs_mass).  The remainder of the
    truncated expansion is the first omitted term scaled by
    |s + 2K + 1| / (Re(s) + 2K + 1), the classical growth factor for complex
    exponents.  abs_mass is the sum of the magnitudes of all assembled
    pieces, which drives the roundoff component of the caller's estimate;
    the final tail value can be far smaller than its pieces.  Terms whose
    rising factorial vanishes exactly are skipped so that a zero coefficient
    never multiplies an overflowing power.
    """
    main = x ** (1.0 - s) / (s - 1.0)
    half = 0.5 * x ** (-s)
    tail = main + half
    mass = abs(main) + abs(half)
    rise = s
    xpow = x ** (-s - 1.0)
    inv_x2 = 1.0 / (x * x)
    omitted = 0.0
    for k in range(1, order // 2 + 1):
        if rise != 0:
            term = _B2K[k - 1] / math.factorial(2 * k) * rise * xpow
            tail += term
            mass += abs(term)
        rise = rise * (s + (2 * k - 1)) * (s + 2 * k)
        xpow = xpow * inv_x2
        if k == order // 2:
            b_next = _B2K[k] if k < len(_B2K) else _B2K[-1]
            omitted = abs(b_next / math.factorial(2 * k + 2) * rise * xpow)
            grow = abs(s + 2 * k + 1) / max(s.real + 2 * k + 1, 1e-3)
            omitted *= min(max(grow, 1.0), 10.0)
    return tail, omitted, mass


def hurwitz_zeta(s: complex, a: complex, cfg: EMConfig | None = None) -> EvalResult:
    """Analytic continuation of sum_{n>=0} (n+a)^(-s) for Re(a) > 0."""
    s = complex(s)
    a = complex(a)
    if abs(s - 1.0) <= 1e-12:
        raise PoleAt(1.0)
    if a.real <= 0.0:
        raise DomainError("hurwitz_zeta requires Re(a) > 0")
    if cfg is None:
        cfg = default_em_config(s)
    n_head = cfg.cutoff_n
    n = np.arange(n_head)
    terms = np.power(a + n, -s)
    head = complex(np.sum(terms[::-1]))
    x = a + n_head
    tail, omitted, tail_mass = _em_tail(s, x, cfg.bernoulli_order)
    value = head + tail
    # Roundoff scales with the magnitudes assembled, not the result; complex
    # powers cost a few ulp each.
    est = omitted + 3.0 * _EPS * (float(np.sum(np.abs(terms))) + tail_mass)
    return EvalResult(
        value=value,
        abs_err_est=est,
        method="HurwitzEM",
        terms_used=n_head + cfg.bernoulli_order // 2,
    )


def riemann_zeta(s: complex, cfg: EMConfig | None = None) -> EvalResult:
    """Riemann zeta via the Hurwitz evaluator at a = 1."""
    if abs(complex(s) - 1.0) <= 1e-12:
        raise PoleAt(1.0)
    return hurwitz_zeta(s, 1.0, cfg)


def lerch_zeta(
    s: complex, a: complex, lam: float, cfg: EMConfig | None = None
) -> EvalResult:
    """Analytic continuation of sum_{n>=0} e^{2 pi i n lam} (n+a)^(-s).

    The twist is reduced modulo 1 to (0, 1]; a trivial twist (lam integer)
    defers to the Hurwitz evaluator.  The tail is accelerated by K-fold
    summation by parts: each fold trades a factor z/(1-z) for one forward
    difference of (n+a)^(-s), which both boosts convergence and provides the
    analytic continuation once K + Re(s) > 1.  Twists very close to an
    integer lose the boost; the result then carries a ConditioningWarning and
    an inflated error estimate.
    """
    s = complex(s)
    a = complex(a)
    lam_r = frac01(float(lam))
    if lam_r == 1.0:
        return hurwitz_zeta(s, a, cfg)
    if a.real <= 0.0:
        raise DomainError("lerch_zeta requires Re(a) > 0")
    if cfg is None:
        cfg = default_em_config(s)

    # Signed reduction keeps 1 - z exact near trivial twists:
    # 1 - e^{2 pi i f} = -2i sin(pi f) e^{i pi f} with f in (-1/2, 1/2].
    f_lam = lam_r if lam_r <= 0.5 else lam_r - 1.0
    z = cmath.exp(2j * math.pi * f_lam)
    one_minus_z = -2j * math.sin(math.pi * f_lam) * cmath.exp(1j * math.pi * f_lam)
    amp = 1.0 / abs(one_minus_z)
    n_folds = min(28, max(8, int(math.ceil(2.0 - s.real)) + 4))
    n_head = max(cfg.cutoff_n, int(math.ceil(3.0 * (abs(s) + 2.0 * n_folds) * min(amp, 64.0))))
    capped = False
    if n_head > 2_000_000:
        n_head = 2_000_000
        capped = True

    n = np.arange(n_head)
    phases = np.exp((2j * math.pi * lam_r) * n)
    terms = phases * np.power(a + n, -s)
    head = complex(np.sum(terms[::-1]))

    # Tail by K-fold summation by parts at n = n_head.
    g = np.power(a + n_head + np.arange(n_folds + 1), -s)
    zn = cmath.exp(2j * math.pi * ((lam_r * n_head) % 1.0))
    lead = zn / one_minus_z
    ratio = z / one_minus_z
    tail = 0.0 + 0.0j
    prev_mag = math.inf
    t_k = 0.0 + 0.0j
    k_used = 0
    factor = lead
    d = g.copy()
    for k in range(n_folds):
        t_k = factor * d[0]
        mag = abs(t_k)
        if k >= 2 and mag > prev_mag:
            # The asymptotic-style series started diverging; stop at the
            # smallest term.
            break
        tail += t_k
        k_used = k + 1
        prev_mag = mag
        factor *= ratio
        d = d[1:] - d[:-1]

    noise = (2.0 * max(amp, 1.0)) ** k_used * _EPS * float(np.abs(g[0])) * max(amp, 1.0)
    est = abs(t_k) * (1.0 + amp) + noise + _EPS * float(np.sum(np.abs(terms)))
    if capped:
        est += 2.0 * amp * float(np.abs(g[0]))
        warnings.warn(
            "twist too close to an integer for the accelerated tail; "
            "error estimate inflated",
            ConditioningWarning,
        )
    value = head + tail
    return EvalResult(
        value=value,
        abs_err_est=est,
        method="LerchAbel",
        terms_used=n_head + k_used,
    )


def periodic_zeta(lam: float, z: complex, cfg: EMConfig | None = None) -> EvalResult:
    """sum_{n>=1} e^{2 pi i n lam} n^(-z) with lam taken modulo 1.

    Equals e^{2 pi i lam'} lerch_zeta(z, 1, lam') with lam' = frac01(lam):
    the n >= 1 series is the n >= 0 series shifted by one index, which pulls
    out one phase factor.
    """
    lam_r = frac01(float(lam))
    inner = lerch_zeta(z, 1.0, lam_r, cfg)
    phase = cmath.exp(2j * math.pi * lam_r)
    return EvalResult(
        value=phase * inner.value,
        abs_err_est=inner.abs_err_est,
        method="PeriodicZeta",
        terms_used=inner.terms_used,
    )


def _fe_prefactor(s: complex) -> complex:
    """Gamma(1-s) / (2 pi)^(1-s), shared by both functional equations."""
    return complex_gamma(1.0 - s) * (2.0 * math.pi) ** (s - 1.0)


def hurwitz_fe_rhs(s: complex, a: float) -> EvalResult:
    """Twisted-series side of the Hurwitz functional equation, Re(s) < 0.

    Gamma(1-s)/(2 pi)^{1-s} [ e^{i pi (1-s)/2} F(-a, 1-s)
                            + e^{-i pi (1-s)/2} F(a, 1-s) ]
    with F the periodic zeta; for Re(s) < 0 both F-series sit in their
    absolutely convergent half plane.
    """
    s = complex(s)
    a = float(a)
    if s.real >= 0.0:
        raise DomainError("hurwitz_fe_rhs requires Re(s) < 0")
    if not 0.0 < a <= 1.0:
        raise DomainError("hurwitz_fe_rhs requires a in (0, 1]")
    pref = _fe_prefactor(s)
    rot = cmath.exp(1j * math.pi * (1.0 - s) / 2.0)
    f_minus = periodic_zeta(-a, 1.0 - s)
    f_plus = periodic_zeta(a, 1.0 - s)
    value = pref * (rot * f_minus.value + f_plus.value / rot)
    # |rot| = e^{pi t / 2} is exponentially large off the real axis and must
    # scale the component estimates.
    est = abs(pref) * (
        abs(rot) * f_minus.abs_err_est + f_plus.abs_err_est / abs(rot)
    )
    return EvalResult(
        value=value,
        abs_err_est=est + _GAMMA_REL * abs(value),
        method="HurwitzFERhs",
        terms_used=f_minus.terms_used + f_plus.terms_used,
    )


def lerch_fe_rhs(s: complex, a: float, lam: float) -> EvalResult:
    """Twisted-series side of the Lerch functional equation, Re(s) < 0.

    Gamma(1-s)/(2 pi)^{1-s} [ e^{i pi ((1-s)/2 - 2 a lam)}
                                  L(1-s, lam, frac01(1-a))
                            + e^{i pi (-(1-s)/2 + 2 a (1-lam))}
                                  L(1-s, 1-lam, frac01(a)) ]
    where L(z, b, mu) = sum_{n>=0} e^{2 pi i n mu} (n+b)^(-z).
    """
    s = complex(s)
    a = float(a)
    lam = float(lam)
    if s.real >= 0.0:
        raise DomainError("lerch_fe_rhs requires Re(s) < 0")
    if not 0.0 < a <= 1.0:
        raise DomainError("lerch_fe_rhs requires a in (0, 1]")
    if not 0.0 < lam <= 1.0:
        raise DomainError("lerch_fe_rhs requires lam in (0, 1]")
    if lam == 1.0:
        # Trivial twist: the series is the Hurwitz one.
        return hurwitz_fe_rhs(s, a)
    pref = _fe_prefactor(s)
    first = lerch_zeta(1.0 - s, lam, frac01(1.0 - a))
    second = lerch_zeta(1.0 - s, 1.0 - lam, frac01(a))
    ph1 = cmath.exp(1j * math.pi * ((1.0 - s) / 2.0 - 2.0 * a * lam))
    ph2 = cmath.exp(1j * math.pi * (-(1.0 - s) / 2.0 + 2.0 * a * (1.0 - lam)))
    value = pref * (ph1 * first.value + ph2 * second.value)
    # The phase factors are exponentially large off the real axis.
    est = abs(pref) * (
        abs(ph1) * first.abs_err_est + abs(ph2) * second.abs_err_est
    )
    return EvalResult(
        value=value,
        abs_err_est=est + _GAMMA_REL * abs(value),
        method="LerchFERhs",
        terms_used=first.terms_used + second.terms_used,
    )
