"""Numerics for the double zeta function zeta2(s, alpha; v, w).

The double series sum over m, n >= 0 of (alpha + v m + w n)^(-s) converges
for Re(s) > 2 and continues meromorphically with simple poles at s = 1 and
s = 2.  This package evaluates it by six independent routes (direct series
with tail completion, an approximate functional equation in the critical
strip, functional-equation forms for irrational, imaginary, and rational
weight ratios, and iterated Hurwitz summation), dispatches between them,
and cross-verifies them against each other and against classical
identities.
"""

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
    residue_probe,
)
from .errors import (
    ConditioningWarning,
    DegenerateRatio,
    DomainError,
    DoubleZetaError,
    GuardSaturated,
    InsufficientSpan,
    NonConvergent,
    NotEnoughMethods,
    PoleAt,
    RangeError,
    ShiftOutOfRange,
    TooCloseToPole,
)
from .eta import (
    EtaParams,
    TruncationPlan,
    bilateral_indep,
    bilateral_rational,
    eta,
    inv_expm1_bound_check,
    nearest_int_signed,
)
from .harness import (
    CrossCheckReport,
    ExponentFit,
    MomentCurve,
    ScanRecord,
    VerifyReport,
    cross_check,
    fit_exponent,
    growth_scan,
    moment_integral,
    verify_identity_vw11,
    vw11_default_grid,
)
from .params import (
    BarnesParams,
    HalfPlaneSpec,
    ImaginaryRatio,
    Rational,
    RatioClass,
    RealIrrational,
    ShiftDecomposition,
    classify_ratio,
    decompose_shift,
    in_half_plane,
)
from .zetas import (
    EMConfig,
    EvalResult,
    complex_gamma,
    frac01,
    hurwitz_fe_rhs,
    hurwitz_zeta,
    lerch_fe_rhs,
    lerch_zeta,
    periodic_zeta,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BarnesParams",
    "ConditioningWarning",
    "CrossCheckReport",
    "DegenerateRatio",
    "DispatchPolicy",
    "DomainError",
    "DoubleZetaError",
    "EMConfig",
    "EtaParams",
    "EvalResult",
    "ExponentFit",
    "GuardSaturated",
    "HalfPlaneSpec",
    "ImaginaryRatio",
    "InsufficientSpan",
    "MethodTag",
    "MomentCurve",
    "NonConvergent",
    "NotEnoughMethods",
    "PoleAt",
    "RangeError",
    "Rational",
    "RatioClass",
    "RealIrrational",
    "ScanRecord",
    "ShiftDecomposition",
    "ShiftOutOfRange",
    "TooCloseToPole",
    "TruncationPlan",
    "VerifyReport",
    "approx_fe",
    "bilateral_indep",
    "bilateral_rational",
    "classify_ratio",
    "complex_gamma",
    "cross_check",
    "decompose_shift",
    "direct_double_sum",
    "eta",
    "evaluate",
    "fit_exponent",
    "frac01",
    "func_eq_indep",
    "func_eq_rational_hurwitz",
    "func_eq_rational_lerch",
    "growth_scan",
    "hurwitz_fe_rhs",
    "hurwitz_zeta",
    "in_half_plane",
    "inv_expm1_bound_check",
    "iterated_hurwitz",
    "lerch_fe_rhs",
    "lerch_zeta",
    "moment_integral",
    "nearest_int_signed",
    "periodic_zeta",
    "residue_probe",
    "riemann_zeta",
    "verify_identity_vw11",
    "vw11_default_grid",
]
