"""Twisted bilateral series over one lattice direction.

Core objects, with rho = y1 + tau y2 and nb = e^{-i pi (1-s)}:

  eta(beta0; p1, p2)(s)     sum_{n>=1} e^{2 pi i n (p1 beta0 + p2)}
                                       / ((1 - e^{2 pi i n beta0}) n^{1-s})
  bilateral(tau)(s)         sum_{n>=1} [ e^{2 pi i n rho} / (e^{2 pi i n tau} - 1)
                            + nb e^{-2 pi i n rho} / (e^{-2 pi i n tau} - 1) ] n^{s-1}

The negative-index branch of n^{1-s} is fixed by arg(n) = +pi for n < 0,
which is where nb comes from; the opposite branch choice is available through
the negative_branch keyword and demonstrably breaks the lattice identities.

Denominators are evaluated through the exact reduction
1 - e^{2 pi i x} = -2 i sin(pi f) e^{i pi f} with f = x - nearest_int(x), so
no precision is lost for large n.  Real ratios get a small-denominator guard:
indices with |<n tau>| < guard_epsilon / n are skipped and budgeted into the
error estimate, and the evaluation aborts with GuardSaturated when more than
one percent of indices are skipped or any denominator vanishes exactly.

For a rational ratio p/q the indices divisible by q are excluded by
definition and the sum collapses to q-1 residue classes; for Re(s) >= 0 each
class is an analytically continued Lerch zeta, which extends the object far
beyond the half plane where the series converges.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GuardSaturated, NonConvergent, TooCloseToPole
from .zetas import EvalResult, frac01, lerch_zeta

_EPS = 2.220446049250313e-16
_BLOCK = 8192


def nearest_int_signed(x: float) -> float:
    """Signed distance to the nearest integer, in (-1/2, 1/2].

    Half-integers round down, so <0.5> = 0.5 and <-0.5> = 0.5.
    """
    x = float(x)
    return x - math.ceil(x - 0.5)


def _nis_array(x: np.ndarray) -> np.ndarray:
    return x - np.ceil(x - 0.5)


@dataclass(frozen=True)
class TruncationPlan:
    """Series truncation budget shared by the bilateral evaluators."""

    max_index: int = 200_000
    target_tail: float = 1e-12
    guard_epsilon: float = 1e-8

    def __post_init__(self):
        if not (isinstance(self.max_index, int) and self.max_index > 0):
            raise DomainError("max_index must be a positive integer")
        if not self.target_tail > 0.0:
            raise DomainError("target_tail must be positive")
        if not self.guard_epsilon > 0.0:
            raise DomainError("guard_epsilon must be positive")


@dataclass(frozen=True)
class EtaParams:
    """Arguments of the eta series: ratio beta0 and phase multipliers p1, p2."""

    beta0: float
    p1: float
    p2: float


def _neg_branch_factor(s: complex, negative_branch: str) -> complex:
    """Phase carried by the negative-index branch of n^{1-s}."""
    if negative_branch == "plus":
        return cmath.exp(-1j * math.pi * (1.0 - s))
    if negative_branch == "minus":
        return cmath.exp(1j * math.pi * (1.0 - s))
    raise DomainError("negative_branch must be 'plus' or 'minus'")


def _osc_tail_estimate(csum: np.ndarray) -> float:
    """Oscillation of partial sums over the last half of the index range.

    For a convergent oscillatory series the limit sits inside the envelope of
    late partial sums, so the spread around the final value estimates the
    truncation error.
    """
    n = len(csum)
    if n < 8:
        return float(abs(csum[-1])) if n else 0.0
    idx = np.linspace(n // 2, n - 1, 33).astype(int)
    return float(np.max(np.abs(csum[-1] - csum[idx])))


def _guarded_real_sum(
    n: np.ndarray,
    fden: np.ndarray,
    numer: np.ndarray,
    powers: np.ndarray,
    plan: TruncationPlan,
) -> tuple[complex, float, int]:
    """Sum numer/denominator(fden) * powers with the small-denominator guard.

    fden holds the signed fractional parts generating the denominators
    1 - e^{2 pi i fden}; the guard skips |fden| < guard_epsilon / n and
    budgets a bound for every skipped term into the returned estimate.
    """
    if np.any(fden == 0.0):
        bad = int(n[np.nonzero(fden == 0.0)[0][0]])
        raise GuardSaturated(
            f"denominator vanishes exactly at index n = {bad}; "
            "the ratio behaves rationally"
        )
    guard = np.abs(fden) < plan.guard_epsilon / n
    n_skip = int(np.count_nonzero(guard))
    if n_skip > 0.01 * len(n):
        raise GuardSaturated(
            f"{n_skip} of {len(n)} indices hit the small-denominator guard"
        )
    keep = ~guard
    denom = -2j * np.sin(math.pi * fden) * np.exp(1j * math.pi * fden)
    terms = np.zeros_like(numer)
    terms[keep] = numer[keep] / denom[keep] * powers[keep]
    csum = np.cumsum(terms)
    value = complex(csum[-1])
    est = _osc_tail_estimate(csum)
    if n_skip:
        # |1/(1 - e^{2 pi i f})| = 1/(2 |sin(pi f)|) <= 1/(4 |f|).
        est += float(
            np.sum(np.abs(numer[guard] * powers[guard]) / (4.0 * np.abs(fden[guard])))
        )
    est += _EPS * float(np.sum(np.abs(terms[keep])))
    return value, est, len(n) - n_skip


def eta(
    params: EtaParams,
    s: complex,
    plan: TruncationPlan | None = None,
) -> EvalResult:
    """Evaluate the eta series for Re(s) < 0 by guarded direct summation."""
    s = complex(s)
    if s.real >= 0.0:
        raise DomainError("eta requires Re(s) < 0")
    if plan is None:
        plan = TruncationPlan()
    n = np.arange(1, plan.max_index + 1, dtype=np.float64)
    fden = _nis_array(n * params.beta0)
    rho = params.p1 * params.beta0 + params.p2
    fnum = n * rho - np.rint(n * rho)
    numer = np.exp(2j * math.pi * fnum)
    powers = np.power(n, s - 1.0)
    value, est, used = _guarded_real_sum(n, fden, numer, powers, plan)
    return EvalResult(value=value, abs_err_est=est, method="EtaSeries", terms_used=used)


def bilateral_indep(
    v: complex,
    w: complex,
    y1: float,
    y2: float,
    s: complex,
    plan: TruncationPlan | None = None,
    negative_branch: str = "plus",
) -> EvalResult:
    """Bilateral sum for an arbitrary ratio tau = w/v.

    Convergence region: the whole s-plane when Im(tau) != 0 and 0 < y2 < 1
    (both branches then decay exponentially), otherwise Re(s) < 0.  Real
    ratios are summed with the small-denominator guard; use the rational
    variant when w/v is a known fraction.
    """
    s = complex(s)
    v = complex(v)
    w = complex(w)
    if v == 0:
        raise DomainError("bilateral_indep requires v != 0")
    if plan is None:
        plan = TruncationPlan()
    tau = w / v
    rho = y1 + tau * y2
    nb = _neg_branch_factor(s, negative_branch)

    if abs(tau.imag) > 1e-13:
        exponential = 0.0 < y2 < 1.0
        if not exponential and s.real >= 0.0:
            raise DomainError(
                "whole-plane evaluation needs 0 < y2 < 1; otherwise Re(s) < 0"
            )
        return _bilateral_imag(tau, rho, nb, s, plan, exponential)

    if s.real >= 0.0:
        raise DomainError("a real ratio requires Re(s) < 0")
    n = np.arange(1, plan.max_index + 1, dtype=np.float64)
    fden = _nis_array(n * tau.real)
    rho_r = rho.real
    fnum = n * rho_r - np.rint(n * rho_r)
    e_plus = np.exp(2j * math.pi * fnum)
    powers = np.power(n, s - 1.0)
    # e^{2 pi i n tau} - 1 = 2 i sin(pi f) e^{i pi f}; the mirror denominator
    # is its conjugate, so both branches share one guarded pass.
    if np.any(fden == 0.0):
        bad = int(n[np.nonzero(fden == 0.0)[0][0]])
        raise GuardSaturated(
            f"denominator vanishes exactly at index n = {bad}; "
            "the ratio behaves rationally"
        )
    guard = np.abs(fden) < plan.guard_epsilon / n
    n_skip = int(np.count_nonzero(guard))
    if n_skip > 0.01 * len(n):
        raise GuardSaturated(
            f"{n_skip} of {len(n)} indices hit the small-denominator guard"
        )
    keep = ~guard
    dplus = 2j * np.sin(math.pi * fden) * np.exp(1j * math.pi * fden)
    terms = np.zeros_like(e_plus)
    terms[keep] = (
        e_plus[keep] / dplus[keep] + nb * np.conj(e_plus[keep] / dplus[keep])
    ) * powers[keep]
    csum = np.cumsum(terms)
    value = complex(csum[-1])
    est = _osc_tail_estimate(csum)
    if n_skip:
        est += float(
            np.sum(np.abs(powers[guard]) * (1.0 + abs(nb)) / (4.0 * np.abs(fden[guard])))
        )
    est += _EPS * float(np.sum(np.abs(terms[keep])))
    return EvalResult(
        value=value,
        abs_err_est=est,
        method="BilateralDirect",
        terms_used=len(n) - n_skip,
    )


def _bilateral_imag(
    tau: complex,
    rho: complex,
    nb: complex,
    s: complex,
    plan: TruncationPlan,
    exponential: bool,
) -> EvalResult:
    """Blockwise bilateral sum for Im(tau) != 0 with overflow-free branches.

    The growing exponential branch is rewritten over the decaying one:
    1/(e^{-z} - 1) = -e^{z}/(e^{z} - 1), which keeps every factor bounded.
    """
    flip = tau.imag < 0.0
    acc = 0.0 + 0.0j
    abs_acc = 0.0
    used = 0
    tail_est = math.inf
    lo = 1
    while lo <= plan.max_index:
        hi = min(lo + _BLOCK - 1, plan.max_index)
        n = np.arange(lo, hi + 1, dtype=np.float64)
        powers = np.power(n, s - 1.0)
        if not flip:
            # Im(tau) > 0: E = e^{2 pi i n tau} decays, and so do
            # e^{2 pi i n rho} and the combined e^{2 pi i n (tau - rho)};
            # exponents are merged before exponentiating so no factor ever
            # overflows.
            ee = np.exp(2j * math.pi * n * tau)
            d = ee - 1.0
            num = np.exp(2j * math.pi * n * rho) - nb * np.exp(
                2j * math.pi * n * (tau - rho)
            )
            terms = num / d * powers
        else:
            # Im(tau) < 0: E' = e^{-2 pi i n tau} decays, as do
            # e^{-2 pi i n rho} and e^{2 pi i n (rho - tau)}.
            ee = np.exp(-2j * math.pi * n * tau)
            d = ee - 1.0
            num = nb * np.exp(-2j * math.pi * n * rho) - np.exp(
                2j * math.pi * n * (rho - tau)
            )
            terms = num / d * powers
        acc += complex(np.sum(terms))
        abs_acc += float(np.sum(np.abs(terms)))
        used = hi
        block_max = float(np.max(np.abs(terms)))
        tail_est = block_max * len(n)
        if exponential and tail_est < plan.target_tail:
            break
        lo = hi + 1
    else:
        if exponential:
            raise NonConvergent(
                f"tail bound {tail_est:.3g} above target {plan.target_tail:.3g} "
                f"after {plan.max_index} terms"
            )
    if not exponential:
        tail_est = float(abs(powers[-1]))  # n^{sigma-1} envelope at the cutoff
    est = tail_est + _EPS * abs_acc
    return EvalResult(
        value=acc, abs_err_est=est, method="BilateralDirect", terms_used=used
    )


def bilateral_rational(
    p: int,
    q: int,
    v: complex,
    y1: float,
    y2: float,
    s: complex,
    plan: TruncationPlan | None = None,
    negative_branch: str = "plus",
) -> EvalResult:
    """Bilateral sum for the rational ratio tau = p/q, lowest terms.

    Indices divisible by q are excluded by definition (their denominators
    vanish identically), so the sum runs over q-1 residue classes and is
    empty for q = 1.  For Re(s) < 0 the series is summed directly; for
    Re(s) >= 0 each residue class is evaluated as an analytically continued
    Lerch zeta, q^{s-1} sum_r e^{+-2 pi i r rho} / (e^{+-2 pi i r p/q} - 1)
    L(1-s, r/q, frac01(+-q rho)).  The v argument fixes the lattice scale of
    the caller and does not enter the sum itself.
    """
    s = complex(s)
    p = int(p)
    q = int(q)
    if q <= 0 or p <= 0:
        raise DomainError("bilateral_rational requires positive p, q")
    if math.gcd(p, q) != 1:
        raise DomainError("p/q must be in lowest terms")
    if complex(v) == 0:
        raise DomainError("bilateral_rational requires v != 0")
    if plan is None:
        plan = TruncationPlan()
    rho = y1 + (p / q) * y2
    nb = _neg_branch_factor(s, negative_branch)
    if q == 1:
        return EvalResult(
            value=0.0 + 0.0j, abs_err_est=0.0, method="BilateralRational", terms_used=0
        )

    if s.real < 0.0:
        n = np.arange(1, plan.max_index + 1, dtype=np.int64)
        r = (n * p) % q
        keep = r != 0
        nk = n[keep].astype(np.float64)
        rk = r[keep].astype(np.float64)
        dplus = 2j * np.sin(math.pi * rk / q) * np.exp(1j * math.pi * rk / q)
        fnum = nk * rho - np.rint(nk * rho)
        e_plus = np.exp(2j * math.pi * fnum)
        powers = np.power(nk, s - 1.0)
        terms = (e_plus / dplus + nb * np.conj(e_plus / dplus)) * powers
        csum = np.cumsum(terms)
        est = _osc_tail_estimate(csum) + _EPS * float(np.sum(np.abs(terms)))
        return EvalResult(
            value=complex(csum[-1]),
            abs_err_est=est,
            method="BilateralRational",
            terms_used=int(np.count_nonzero(keep)),
        )

    # Continuation through residue-class Lerch zetas.
    lam_plus = frac01(q * rho)
    lam_minus = frac01(-q * rho)
    qs = q ** (s - 1.0)
    total = 0.0 + 0.0j
    est = 0.0
    used = 0
    for r in range(1, q):
        dplus = 2j * math.sin(math.pi * r / q) * cmath.exp(1j * math.pi * r / q)
        lz_plus = lerch_zeta(1.0 - s, r / q, lam_plus)
        lz_minus = lerch_zeta(1.0 - s, r / q, lam_minus)
        c_plus = cmath.exp(2j * math.pi * ((r * rho) % 1.0)) / dplus
        c_minus = cmath.exp(-2j * math.pi * ((r * rho) % 1.0)) / dplus.conjugate()
        total += c_plus * lz_plus.value + nb * c_minus * lz_minus.value
        est += abs(c_plus) * lz_plus.abs_err_est + abs(nb * c_minus) * lz_minus.abs_err_est
        used += lz_plus.terms_used + lz_minus.terms_used
    value = qs * total
    return EvalResult(
        value=value,
        abs_err_est=abs(qs) * est + _EPS * abs(value),
        method="BilateralRational",
        terms_used=used,
    )


def inv_expm1_bound_check(z: complex, eps: float = 1e-6) -> tuple[float, float]:
    """Return (|1/(e^z - 1)|, e^{-max(Re z, 0)}), the bound-check pair.

    The second component is the decay coefficient that bounds the first up to
    a distance-dependent constant.  Raises TooCloseToPole when z is within
    eps of a pole 2 pi i k of 1/(e^z - 1).
    """
    z = complex(z)
    if not eps > 0.0:
        raise DomainError("eps must be positive")
    k = round(z.imag / (2.0 * math.pi))
    if abs(z - 2j * math.pi * k) < eps:
        raise TooCloseToPole(
            f"z is within {eps:g} of the pole at 2 pi i {k}"
        )
    if z.real > 0.0:
        ez = cmath.exp(-z)
        lhs = abs(ez / (1.0 - ez))
    else:
        lhs = abs(1.0 / (cmath.exp(z) - 1.0))
    rhs_coeff = math.exp(-max(z.real, 0.0))
    return lhs, rhs_coeff
