"""Parameter domain for the double zeta function.

The double series sum_{m,n>=0} (alpha + v m + w n)^(-s) makes sense when
alpha, v, w all lie in a common open half plane H(theta) = {z : Re(z e^{-i
theta}) > 0}, so that the summands never vanish and the terms have a uniform
direction of growth.  This module holds the half-plane test, the validated
parameter record, the classification of the ratio w/v (imaginary, rational or
real irrational), and the shift decomposition alpha = v(1-y1) + w(1-y2) used
by the functional-equation evaluators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateRatio, DomainError, ShiftOutOfRange

_EPS = math.ulp(1.0)


def _wrap_angle(x: float) -> float:
    """Reduce an angle to the interval (-pi, pi]."""
    y = math.fmod(x, 2.0 * math.pi)
    if y <= -math.pi:
        y += 2.0 * math.pi
    elif y > math.pi:
        y -= 2.0 * math.pi
    return y


@dataclass(frozen=True)
class HalfPlaneSpec:
    """Open half plane {z : Re(z e^{-i theta}) > 0}."""

    theta: float


def in_half_plane(z: complex, spec: HalfPlaneSpec) -> bool:
    """Strict membership of z in the open half plane of ``spec``."""
    z = complex(z)
    return (z * cmath.exp(-1j * spec.theta)).real > 0.0


def _clamped_theta(alpha: complex, v: complex, w: complex) -> float:
    # Feasible theta form the intersection of three open arcs of width pi,
    # one per parameter.  Start from the centroid direction and move to the
    # middle of the intersection only if the centroid direction fails.
    s = alpha + v + w
    theta0 = cmath.phase(s) if s != 0 else 0.0
    deltas = [_wrap_angle(cmath.phase(z) - theta0) for z in (alpha, v, w)]
    lo = max(deltas) - math.pi / 2.0
    hi = min(deltas) + math.pi / 2.0
    if not lo < hi:
        raise DomainError(
            "no half plane contains alpha, v and w simultaneously"
        )
    if lo < 0.0 < hi:
        return theta0
    return theta0 + 0.5 * (lo + hi)


@dataclass(frozen=True)
class BarnesParams:
    """Validated parameter triple (alpha, v, w) with its half-plane angle.

    theta defaults to the direction of alpha + v + w, nudged into the set of
    angles whose half plane contains all three parameters.  Construction
    raises DomainError when no common half plane exists or when a parameter
    vanishes.
    """

    alpha: complex
    v: complex
    w: complex
    theta: float | None = None

    def __post_init__(self):
        alpha = complex(self.alpha)
        v = complex(self.v)
        w = complex(self.w)
        if alpha == 0 or v == 0 or w == 0:
            raise DomainError("alpha, v, w must all be nonzero")
        for z in (alpha, v, w):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise DomainError("alpha, v, w must be finite")
        if self.theta is None:
            theta = _clamped_theta(alpha, v, w)
        else:
            theta = float(self.theta)
            spec = HalfPlaneSpec(theta)
            if not all(in_half_plane(z, spec) for z in (alpha, v, w)):
                raise DomainError(
                    "alpha, v, w do not all lie in the requested half plane"
                )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "theta", theta)

    @property
    def half_plane(self) -> HalfPlaneSpec:
        return HalfPlaneSpec(self.theta)


@dataclass(frozen=True)
class ImaginaryRatio:
    """w/v has a nonzero imaginary part."""

    im_part: float


@dataclass(frozen=True)
class RealIrrational:
    """w/v is real but not well approximated by any small-denominator fraction."""

    value: float


@dataclass(frozen=True)
class Rational:
    """w/v = p/q in lowest terms with q <= the classification bound."""

    p: int
    q: int


RatioClass = Union[ImaginaryRatio, RealIrrational, Rational]


def classify_ratio(
    v: complex,
    w: complex,
    max_denominator: int = 10**6,
    tol: float = 1e-10,
) -> RatioClass:
    """Classify the ratio w/v into one of the three evaluation regimes.

    A real ratio x is accepted as the fraction p/q only when
    |x - p/q| <= max(tol / q**2, 8 ulp(x)); the q**2 scaling separates true
    small fractions from the inevitable good rational approximations of
    irrational floats (the best convergent of sqrt(2) with q <= 10**6 misses
    this bound by three orders of magnitude, while exact binary fractions and
    small ratios like 1/3 pass through their representation error).
    """
    v = complex(v)
    w = complex(w)
    if v == 0:
        raise DegenerateRatio("ratio w/v undefined for v = 0")
    ratio = w / v
    if not (math.isfinite(ratio.real) and math.isfinite(ratio.imag)):
        raise DegenerateRatio("ratio w/v is not finite")
    if abs(ratio.imag) > tol:
        return ImaginaryRatio(im_part=ratio.imag)
    x = ratio.real
    if x <= 0.0:
        raise DomainError("a real ratio w/v must be positive")
    cand = Fraction(x).limit_denominator(max_denominator)
    p, q = cand.numerator, cand.denominator
    if p > 0:
        err = abs(x - p / q)
        if err <= max(tol / (q * q), 8.0 * _EPS * abs(x)):
            return Rational(p=p, q=q)
    return RealIrrational(value=x)


@dataclass(frozen=True)
class ShiftDecomposition:
    """Real shifts (y1, y2) with alpha = v(1-y1) + w(1-y2).

    exact is True when the pair is the unique solution of the 2x2 real
    system (independent directions v, w) and False when v, w are collinear
    and the equal-shift representative of the solution family was chosen.
    """

    y1: float
    y2: float
    exact: bool


def decompose_shift(params: BarnesParams) -> ShiftDecomposition:
    """Solve alpha = v(1-y1) + w(1-y2) for real shifts in [0, 1].

    With Im(w/v) != 0 the solution is unique.  For collinear v, w the family
    is one dimensional and the equal-shift point y1 = y2 is returned; it lies
    inside [0, 1] whenever any feasible solution does.
    """
    v, w, alpha = params.v, params.w, params.alpha
    rhs = v + w - alpha
    det = v.real * w.imag - v.imag * w.real
    scale = abs(v) * abs(w)
    if abs(det) > 1e-12 * scale:
        y1 = (rhs.real * w.imag - rhs.imag * w.real) / det
        y2 = (v.real * rhs.imag - v.imag * rhs.real) / det
        exact = True
    else:
        y_eq = rhs / (v + w)
        if abs(y_eq.imag) > 1e-12 * max(1.0, abs(y_eq.real)):
            raise ShiftOutOfRange(
                "alpha has a component outside the line spanned by v and w"
            )
        y1 = y2 = y_eq.real
        exact = False
    if not (-1e-12 <= y1 <= 1.0 + 1e-12 and -1e-12 <= y2 <= 1.0 + 1e-12):
        raise ShiftOutOfRange(
            f"shift components ({y1:.6g}, {y2:.6g}) fall outside [0, 1]"
        )
    return ShiftDecomposition(
        y1=min(max(y1, 0.0), 1.0), y2=min(max(y2, 0.0), 1.0), exact=exact
    )
