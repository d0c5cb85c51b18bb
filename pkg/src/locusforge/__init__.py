"""Exact-arithmetic locus engine for planar 4-bar linkages.

Derives symbolic coupler-curve equations by Groebner-basis elimination,
traces the motion numerically, fits implicit curves through sampled points,
and proves geometric statements by ideal membership.
"""

from .errors import (
    Cancelled,
    ContextMismatch,
    Deadline,
    DegenerateCoupler,
    EmptyIdeal,
    InvalidDegree,
    InvalidSpec,
    LocusForgeError,
    NoAssembly,
    NoCurve,
    NotEnoughPoints,
    RankDeficient,
    ValidationError,
    ZeroPolynomial,
)
from .fit import FitProblem, FitResult, fit_implicit, required_points
from .groebner import (
    buchberger,
    eliminate,
    normal_form,
    normal_form_with_quotients,
    s_polynomial,
)
from .linkage import (
    ConstraintSystem,
    LinkageSpec,
    build_constraints,
    reduce_variables,
)
from .locus import (
    HOLDS_PLAIN,
    HOLDS_RADICAL,
    UNKNOWN,
    LocusResult,
    ProveResult,
    locus_equation,
    prove_membership,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    canonicalize,
    parse_polynomial,
    parse_rational,
    polynomial_string,
)
from .tracer import Pose, Trace, residual, residuals, solve_position, trace, trace_to_csv

__version__ = "0.1.0"

__all__ = [
    "Cancelled", "ContextMismatch", "Deadline", "DegenerateCoupler",
    "EmptyIdeal", "InvalidDegree", "InvalidSpec", "LocusForgeError",
    "NoAssembly", "NoCurve", "NotEnoughPoints", "RankDeficient",
    "ValidationError", "ZeroPolynomial",
    "FitProblem", "FitResult", "fit_implicit", "required_points",
    "buchberger", "eliminate", "normal_form", "normal_form_with_quotients",
    "s_polynomial",
    "ConstraintSystem", "LinkageSpec", "build_constraints", "reduce_variables",
    "HOLDS_PLAIN", "HOLDS_RADICAL", "UNKNOWN", "LocusResult", "ProveResult",
    "locus_equation", "prove_membership",
    "MonomialOrder", "Polynomial", "canonicalize", "parse_polynomial",
    "parse_rational", "polynomial_string",
    "Pose", "Trace", "residual", "residuals", "solve_position", "trace",
    "trace_to_csv",
    "__version__",
]
