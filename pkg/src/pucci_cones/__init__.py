"""Homogeneous solutions of the Pucci extremal equations in planar cones."""
from .errors import (
    ConvergenceError, DimensionError, DomainError, EvaluationError, InfeasibleError,
    PucciConesError, RangeError, SingularityError,
)
from .special_functions import eval_G, eval_g, eval_H, eval_h
from .exponents import ConeProblem, ExponentSet, invert_G, invert_H, solve_exponents
from .profiles import AngularProfile, ProfileKind, make_profile
from .field import (
    FieldSample, HomogeneousSolution, PucciOperator, PucciSign, RankTwoUpdateSpec, SymMatrix2,
    homogeneous_hessian_eigs, pucci_apply, rank_two_update_eigs, sample_solution,
)
from .analysis import (
    LiouvilleVerdict, MonotonicityReport, SupersolutionWitness, bound_suite, build_supersolution,
    liouville_classify, monotonicity_report,
)

__version__ = "0.1.0"

__all__ = [
    "AngularProfile", "ConeProblem", "ConvergenceError", "DimensionError", "DomainError",
    "EvaluationError", "ExponentSet", "FieldSample", "HomogeneousSolution", "InfeasibleError",
    "LiouvilleVerdict", "MonotonicityReport", "ProfileKind", "PucciConesError", "PucciOperator",
    "PucciSign", "RangeError", "RankTwoUpdateSpec", "SingularityError", "SupersolutionWitness",
    "SymMatrix2", "bound_suite", "build_supersolution", "eval_G", "eval_H", "eval_g", "eval_h",
    "homogeneous_hessian_eigs", "invert_G", "invert_H", "liouville_classify", "make_profile",
    "monotonicity_report", "pucci_apply", "rank_two_update_eigs", "sample_solution",
    "solve_exponents",
]
