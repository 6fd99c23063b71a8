"""Credibilistic TOPSIS: rank alternatives under conflicting criteria from
multi-expert linguistic ratings.

Expert ratings become triangular fuzzy numbers through a linguistic scale,
are aggregated across experts, normalized per criterion, reduced to
credibilistic mean and standard-deviation matrices, and scored by dual
closeness coefficients fused geometrically.

>>> from credtopsis import waste_disposal_problem, evaluate
>>> problem, scale = waste_disposal_problem()
>>> evaluate(problem, scale=scale).ranking()
('A3', 'A2', 'A1', 'A4')
"""

from .casestudy import waste_disposal_problem, waste_disposal_scenarios
from .credibility import (
    credibility_at_least,
    credibility_at_most,
    expected_value,
    expected_value_numeric,
    std_dev,
    variance,
    variance_numeric,
)
from .engine import (
    IdealVectors,
    RankingResult,
    closeness,
    combined_closeness,
    evaluate,
    mean_ideals,
    mean_matrix,
    normalize,
    rank_alternatives,
    separations,
    std_dev_ideals,
    std_dev_matrix,
)
from .errors import (
    DecisionError,
    DimensionMismatch,
    DivisorNotPositive,
    NegativeOperand,
    NonPositiveMode,
    NonPositiveScalar,
    OrderingViolation,
    ParseError,
    QuadratureFailure,
    UnknownTerm,
    ValidationError,
    ZeroDivisor,
)
from .matrices import CrispMatrix, FuzzyMatrix
from .model import (
    BENEFIT,
    COST,
    Criterion,
    DecisionProblem,
    DEFAULT_SCALE,
    LinguisticScale,
    aggregate_ratings,
    build_decision_matrix,
)
from .problem_io import (
    ScenarioSet,
    load_problem,
    load_scenarios,
    problem_from_dict,
    problem_to_dict,
    run_sensitivity,
)
from .report import ReportBundle, emit_report
from .tfn import TFN, TriangularFuzzyNumber

__version__ = "0.1.0"

__all__ = [
    "BENEFIT",
    "COST",
    "CrispMatrix",
    "Criterion",
    "DecisionError",
    "DecisionProblem",
    "DEFAULT_SCALE",
    "DimensionMismatch",
    "DivisorNotPositive",
    "FuzzyMatrix",
    "IdealVectors",
    "LinguisticScale",
    "NegativeOperand",
    "NonPositiveMode",
    "NonPositiveScalar",
    "OrderingViolation",
    "ParseError",
    "QuadratureFailure",
    "RankingResult",
    "ReportBundle",
    "ScenarioSet",
    "TFN",
    "TriangularFuzzyNumber",
    "UnknownTerm",
    "ValidationError",
    "ZeroDivisor",
    "aggregate_ratings",
    "build_decision_matrix",
    "closeness",
    "combined_closeness",
    "credibility_at_least",
    "credibility_at_most",
    "emit_report",
    "evaluate",
    "expected_value",
    "expected_value_numeric",
    "load_problem",
    "load_scenarios",
    "mean_ideals",
    "mean_matrix",
    "normalize",
    "problem_from_dict",
    "problem_to_dict",
    "rank_alternatives",
    "run_sensitivity",
    "separations",
    "std_dev",
    "std_dev_ideals",
    "std_dev_matrix",
    "variance",
    "variance_numeric",
    "waste_disposal_problem",
    "waste_disposal_scenarios",
]
