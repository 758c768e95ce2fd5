"""Batch verification, growth scans, exponent fits and moment integrals.

verify_identity_vw11 checks the closed form at v = w = 1,
zeta2(s, alpha; 1, 1) = (1-alpha) zeta_H(s, alpha) + zeta_H(s-1, alpha),
through the public evaluate() dispatcher.  cross_check runs every applicable
evaluation route at one point and compares all pairs against their combined
error estimates.  growth_scan samples |zeta2(sigma+it)| along a vertical
line, fit_exponent extracts an empirical growth exponent from windowed
maxima, and moment_integral accumulates trapezoid quadrature of
|zeta2|^{2k} over [2, T].

Scans and quadrature parallelize over t when BARNES_ZETA_THREADS is set
above 1; reduction order is fixed regardless, so results do not depend on
the thread count.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .barnes import (
    DispatchPolicy,
    MethodTag,
    approx_fe,
    direct_double_sum,
    evaluate,
    func_eq_indep,
    func_eq_rational_hurwitz,
    func_eq_rational_lerch,
    iterated_hurwitz,
)
from .errors import (
    ConditioningWarning,
    DomainError,
    DoubleZetaError,
    InsufficientSpan,
    NotEnoughMethods,
    PoleAt,
)
from .params import BarnesParams
from .zetas import EvalResult, hurwitz_zeta

_EPS = 2.220446049250313e-16


def _worker_count() -> int:
    raw = os.environ.get("BARNES_ZETA_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _ordered_map(fn, items):
    """Map preserving order; threads only when the env cap allows them."""
    items = list(items)
    n = _worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an identity sweep; failures are data, not exceptions."""

    alpha: complex
    tol: float
    points_checked: int
    max_rel_dev: float
    failing_points: tuple[complex, ...]

    @property
    def passed(self) -> bool:
        return not self.failing_points and self.points_checked > 0


def vw11_default_grid() -> tuple[complex, ...]:
    """7x7 grid sigma in [-3, 3], t in [-20, 20], poles removed."""
    pts = []
    for sigma in np.linspace(-3.0, 3.0, 7):
        for t in np.linspace(-20.0, 20.0, 7):
            s = complex(sigma, t)
            if abs(s - 1.0) > 1e-9 and abs(s - 2.0) > 1e-9:
                pts.append(s)
    return tuple(pts)


def verify_identity_vw11(
    alpha: complex,
    s_grid,
    tol: float,
    policy: DispatchPolicy | None = None,
) -> VerifyReport:
    """Compare evaluate(s, alpha; 1, 1) with the two-term Hurwitz closed form.

    Relative deviation is measured against the closed-form magnitude.  Grid
    points that sit on a pole are skipped rather than failed.
    """
    params = BarnesParams(alpha, 1.0, 1.0)
    alpha = params.alpha

    def check(s: complex):
        try:
            lhs = evaluate(s, params, policy).value
            rhs = (
                (1.0 - alpha) * hurwitz_zeta(s, alpha).value
                + hurwitz_zeta(s - 1.0, alpha).value
            )
        except PoleAt:
            return None
        return s, abs(lhs - rhs) / max(abs(rhs), 1e-30)

    results = [r for r in _ordered_map(check, s_grid) if r is not None]
    if not results:
        return VerifyReport(alpha, tol, 0, math.nan, ())
    max_dev = max(dev for _, dev in results)
    failing = tuple(s for s, dev in results if dev >= tol)
    return VerifyReport(alpha, float(tol), len(results), max_dev, failing)


@dataclass(frozen=True)
class PairCheck:
    method_a: str
    method_b: str
    deviation: float
    allowance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.allowance


@dataclass(frozen=True)
class CrossCheckReport:
    s: complex
    results: tuple[tuple[str, complex, float], ...]
    pairs: tuple[PairCheck, ...]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.pairs)


_METHOD_RUNNERS = {
    MethodTag.DIRECT_SERIES: lambda s, params: direct_double_sum(s, params),
    MethodTag.APPROX_FE: lambda s, params: approx_fe(s, params),
    MethodTag.FUNC_EQ_INDEP: lambda s, params: func_eq_indep(s, params),
    MethodTag.FUNC_EQ_RATIONAL_HURWITZ: lambda s, params: func_eq_rational_hurwitz(
        s, params
    ),
    MethodTag.FUNC_EQ_RATIONAL_LERCH: lambda s, params: func_eq_rational_lerch(
        s, params
    ),
    MethodTag.ITERATED_HURWITZ: lambda s, params: iterated_hurwitz(s, params),
}


def cross_check(
    s: complex,
    params: BarnesParams,
    methods=None,
    tol_mult: float = 10.0,
) -> CrossCheckReport:
    """Run every applicable route at s and compare all pairs.

    A route is applicable when it returns without a domain, range, pole, or
    convergence failure.  Each pair must agree within
    tol_mult * (abs_err_est_a + abs_err_est_b + 1e-14).  Raises
    NotEnoughMethods when fewer than two routes apply.
    """
    s = complex(s)
    if methods is None:
        methods = list(_METHOD_RUNNERS)
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConditioningWarning)
        for tag in methods:
            runner = _METHOD_RUNNERS[MethodTag(tag)]
            try:
                r = runner(s, params)
            except DoubleZetaError:
                continue
            results.append((MethodTag(tag).value, r.value, r.abs_err_est))
    if len(results) < 2:
        raise NotEnoughMethods(
            f"only {len(results)} route(s) applicable at s = {s}"
        )
    pairs = []
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            tag_a, val_a, est_a = results[i]
            tag_b, val_b, est_b = results[j]
            pairs.append(
                PairCheck(
                    method_a=tag_a,
                    method_b=tag_b,
                    deviation=abs(val_a - val_b),
                    allowance=tol_mult * (est_a + est_b + 1e-14),
                )
            )
    return CrossCheckReport(s=s, results=tuple(results), pairs=tuple(pairs))


@dataclass(frozen=True)
class ScanRecord:
    """One sample of |zeta2(sigma + i t)| with its provenance."""

    t: float
    magnitude: float
    method: str
    err: float


def growth_scan(
    sigma: float,
    t_min: float,
    t_max: float,
    params: BarnesParams,
    samples_per_decade: int = 16,
    policy: DispatchPolicy | None = None,
) -> tuple[ScanRecord, ...]:
    """Sample |zeta2(sigma+it)| at log-spaced t in [t_min, t_max].

    Requires sigma >= 0 and 2 <= t_min < t_max.  Per-sample evaluation
    failures are reported as warnings and the sample is dropped, so the
    returned records always satisfy the finiteness invariant.
    """
    sigma = float(sigma)
    if sigma < 0.0:
        raise DomainError("growth_scan requires sigma >= 0")
    if not (2.0 <= t_min < t_max):
        raise DomainError("growth_scan requires 2 <= t_min < t_max")
    if samples_per_decade < 1:
        raise DomainError("samples_per_decade must be positive")
    decades = math.log10(t_max / t_min)
    count = max(2, int(math.ceil(samples_per_decade * decades)) + 1)
    ts = np.geomspace(t_min, t_max, count)

    def sample(t: float):
        try:
            r = evaluate(complex(sigma, t), params, policy)
        except DoubleZetaError as exc:
            warnings.warn(f"scan sample at t={t:.6g} failed: {exc}")
            return None
        mag = abs(r.value)
        if not math.isfinite(mag):
            warnings.warn(f"scan sample at t={t:.6g} not finite")
            return None
        return ScanRecord(t=float(t), magnitude=mag, method=r.method, err=r.abs_err_est)

    return tuple(r for r in _ordered_map(sample, ts) if r is not None)


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares slope of log max-magnitude against log t."""

    slope: float
    intercept: float
    r2: float
    windows: int


def fit_exponent(records, windows: int | None = None) -> ExponentFit:
    """Fit a growth exponent from windowed maxima of scan records.

    The t-range is split into geometrically equal windows (binary decades
    when the span is a power of two); each nonempty window contributes its
    maximum magnitude at the t where it occurs, and the slope of
    log(max) vs log(t) is the exponent.  Windowed maxima are used instead of
    raw points because the magnitude oscillates and a raw fit would
    underestimate the envelope.
    """
    pts = [(r.t, r.magnitude) for r in records if r.magnitude > 0.0 and math.isfinite(r.magnitude)]
    if len(pts) < 2:
        raise InsufficientSpan("need at least two records with positive magnitude")
    ts = np.array([t for t, _ in pts])
    mags = np.array([m for _, m in pts])
    span = float(ts.max() / ts.min())
    if span < 10.0:
        raise InsufficientSpan(f"records span factor {span:.3g} < 10 in t")
    if windows is None:
        windows = max(4, int(math.floor(math.log2(span))))
    if windows < 4:
        raise InsufficientSpan("windows must be at least 4")
    edges = ts.min() * (span ** (np.arange(windows + 1) / windows))
    edges[-1] = ts.max() * (1.0 + 1e-12)
    xs = []
    ys = []
    for i in range(windows):
        mask = (ts >= edges[i]) & (ts < edges[i + 1])
        if not np.any(mask):
            continue
        j = int(np.argmax(mags[mask]))
        xs.append(math.log(float(ts[mask][j])))
        ys.append(math.log(float(mags[mask][j])))
    if len(xs) < 4:
        raise InsufficientSpan(f"only {len(xs)} nonempty windows, need 4")
    x = np.array(xs)
    y = np.array(ys)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_res = float(np.sum(resid**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot <= 1e-30:
        r2 = 1.0 if ss_res <= 1e-30 else 0.0
    else:
        r2 = max(0.0, 1.0 - ss_res / ss_tot)
    return ExponentFit(
        slope=float(slope), intercept=float(intercept), r2=r2, windows=len(xs)
    )


@dataclass(frozen=True)
class MomentCurve:
    """Cumulative moment integrals int_2^T |zeta2(sigma+it)|^{2k} dt."""

    k: int
    sigma: float
    points: tuple[tuple[float, float], ...]


def moment_integral(
    sigma: float,
    k: int,
    T_values,
    params: BarnesParams,
    quad_points_per_unit: int = 4,
    policy: DispatchPolicy | None = None,
) -> MomentCurve:
    """Trapezoid quadrature of |zeta2(sigma+it)|^{2k} over [2, T].

    Requires 1/2 <= sigma <= 2, a positive integer k, and increasing
    T_values with min(T) >= 2.  The same cumulative grid serves every T, so
    the curve is nondecreasing by construction.
    """
    sigma = float(sigma)
    if not 0.5 <= sigma <= 2.0:
        raise DomainError("moment_integral requires 1/2 <= sigma <= 2")
    if not (isinstance(k, int) and k >= 1):
        raise DomainError("k must be a positive integer")
    T_list = [float(T) for T in T_values]
    if not T_list or any(T < 2.0 for T in T_list):
        raise DomainError("T values must be >= 2")
    if any(b <= a for a, b in zip(T_list, T_list[1:])):
        raise DomainError("T values must be increasing")
    if quad_points_per_unit < 1:
        raise DomainError("quad_points_per_unit must be positive")

    t_top = T_list[-1]
    h = 1.0 / quad_points_per_unit
    n_steps = int(round((t_top - 2.0) * quad_points_per_unit))
    ts = 2.0 + h * np.arange(n_steps + 1)

    def integrand(t: float) -> float:
        r = evaluate(complex(sigma, t), params, policy)
        return abs(r.value) ** (2 * k)

    vals = np.array(_ordered_map(integrand, ts))
    cum = np.zeros(len(ts))
    if len(ts) > 1:
        cum[1:] = np.cumsum(0.5 * h * (vals[1:] + vals[:-1]))
    points = []
    for T in T_list:
        idx = int(round((T - 2.0) * quad_points_per_unit))
        idx = min(max(idx, 0), len(ts) - 1)
        points.append((T, float(cum[idx])))
    return MomentCurve(k=k, sigma=sigma, points=tuple(points))
