"""The credibilistic TOPSIS pipeline.

Steps, starting from the aggregated fuzzy decision matrix:

1. normalize each column into (0, 1] (benefit columns divide by the column's
   largest upper bound, cost columns invert through the column's smallest
   lower bound);
2. reduce the normalized fuzzy matrix to two crisp matrices, the
   credibilistic means and the credibilistic standard deviations;
3. take per-criterion ideals on both: for means the positive ideal is the
   column maximum (cost criteria were already inverted), for standard
   deviations the positive ideal is the smallest spread;
4. measure each alternative's weighted Euclidean separation from both ideals
   on both matrices, with the weight applied inside the square;
5. convert separations to closeness coefficients d-/(d+ + d-) per facet and
   fuse the two facets geometrically;
6. rank by decreasing fused coefficient.
"""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from math import sqrt
from typing import Literal, Optional, Sequence

import numpy as np

from . import credibility
from .errors import DecisionError, DimensionMismatch, ValidationError, ZeroDivisor
from .matrices import CrispMatrix, FuzzyMatrix
from .model import (
    BENEFIT,
    COST,
    Criterion,
    DecisionProblem,
    DEFAULT_SCALE,
    LinguisticScale,
    build_decision_matrix,
)
from .tfn import TriangularFuzzyNumber

#: Tolerated deviation of the weight sum from 1 before a warning is attached.
WEIGHT_SUM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class IdealVectors:
    """Per-criterion positive and negative ideal values for one crisp matrix."""

    pis: np.ndarray
    nis: np.ndarray
    source: Literal["mean", "stddev"]

    def __post_init__(self):
        object.__setattr__(self, "pis", np.asarray(self.pis, dtype=float))
        object.__setattr__(self, "nis", np.asarray(self.nis, dtype=float))


@dataclass(frozen=True, eq=False)
class RankingResult:
    """Scores, ranks and every intermediate matrix of one evaluation."""

    alternatives: tuple[str, ...]
    d_mean_plus: np.ndarray
    d_mean_minus: np.ndarray
    d_std_plus: np.ndarray
    d_std_minus: np.ndarray
    cc_mean: np.ndarray
    cc_std: np.ndarray
    cc_final: np.ndarray
    ranks: tuple[int, ...]
    weight_warning: Optional[str]
    aggregated: FuzzyMatrix = field(repr=False)
    normalized: FuzzyMatrix = field(repr=False)
    mean_values: CrispMatrix = field(repr=False)
    std_devs: CrispMatrix = field(repr=False)
    mean_ideals: IdealVectors = field(repr=False)
    std_ideals: IdealVectors = field(repr=False)
    weights: tuple[float, ...] = ()

    def ranking(self) -> tuple[str, ...]:
        """Alternative ids ordered best first."""
        order = sorted(range(len(self.alternatives)), key=lambda i: self.ranks[i])
        return tuple(self.alternatives[i] for i in order)


def normalize(matrix: FuzzyMatrix, criteria: Sequence[Criterion]) -> FuzzyMatrix:
    """Column-normalize a fuzzy matrix into (0, 1] per the criterion kinds."""
    if len(criteria) != len(matrix.cols):
        raise DimensionMismatch(
            f"{len(criteria)} criteria for {len(matrix.cols)} matrix columns"
        )
    columns = list(zip(*matrix.cells))
    out_columns = []
    for crit, column in zip(criteria, columns):
        if crit.kind == BENEFIT:
            u_star = max(cell.upper for cell in column)
            if u_star <= 0:
                raise ZeroDivisor(
                    f"column {crit.id}: benefit normalization needs a positive maximum"
                )
            out_columns.append(
                tuple(
                    TriangularFuzzyNumber(
                        cell.lower / u_star, cell.mode / u_star, cell.upper / u_star
                    )
                    for cell in column
                )
            )
        else:
            if any(cell.lower <= 0 for cell in column):
                raise ZeroDivisor(
                    f"column {crit.id}: cost normalization divides by cell bounds, "
                    "every lower bound must be positive"
                )
            l_minus = min(cell.lower for cell in column)
            out_columns.append(
                tuple(
                    TriangularFuzzyNumber(
                        l_minus / cell.upper, l_minus / cell.mode, l_minus / cell.lower
                    )
                    for cell in column
                )
            )
    return FuzzyMatrix(
        rows=matrix.rows,
        cols=matrix.cols,
        cells=tuple(zip(*out_columns)),
    )


def mean_matrix(matrix: FuzzyMatrix) -> CrispMatrix:
    """Entrywise credibilistic mean."""
    values = [[credibility.expected_value(cell) for cell in row] for row in matrix.cells]
    return CrispMatrix(matrix.rows, matrix.cols, np.array(values))


def std_dev_matrix(matrix: FuzzyMatrix) -> CrispMatrix:
    """Entrywise credibilistic standard deviation."""
    values = [[credibility.std_dev(cell) for cell in row] for row in matrix.cells]
    return CrispMatrix(matrix.rows, matrix.cols, np.array(values))


def mean_ideals(means: CrispMatrix) -> IdealVectors:
    """Columnwise max (positive ideal) and min (negative ideal) of the means."""
    return IdealVectors(
        pis=means.values.max(axis=0), nis=means.values.min(axis=0), source="mean"
    )


def std_dev_ideals(spreads: CrispMatrix) -> IdealVectors:
    """For spreads the positive ideal is the smallest per-criterion value."""
    return IdealVectors(
        pis=spreads.values.min(axis=0), nis=spreads.values.max(axis=0), source="stddev"
    )


def separations(
    matrix: CrispMatrix, ideals: IdealVectors, weights: Sequence[float]
) -> tuple[np.ndarray, np.ndarray]:
    """Weighted Euclidean distance of every row to both ideals.

    The weight multiplies the per-criterion deviation before squaring,
    d_i = sqrt(sum_j ((ideal_j - m_ij) * w_j)^2).
    """
    w = np.asarray(weights, dtype=float)
    if w.shape != (len(matrix.cols),):
        raise DimensionMismatch(
            f"{w.size} weights for {len(matrix.cols)} criteria"
        )
    if np.any(w < 0):
        raise ValidationError("weights must be nonnegative", path="weights")
    d_plus = np.sqrt((((ideals.pis - matrix.values) * w) ** 2).sum(axis=1))
    d_minus = np.sqrt((((ideals.nis - matrix.values) * w) ** 2).sum(axis=1))
    return d_plus, d_minus


def closeness(d_plus: float, d_minus: float) -> float:
    """Relative closeness d-/(d+ + d-); 0.5 when both distances vanish."""
    denominator = d_plus + d_minus
    if denominator == 0.0:
        return 0.5
    return d_minus / denominator


def combined_closeness(cc_mean: float, cc_std: float) -> float:
    """Geometric mean of the mean-facet and spread-facet coefficients."""
    return sqrt(cc_mean * cc_std)


def rank_alternatives(
    cc_final: Sequence[float], cc_mean: Sequence[float] | None = None
) -> tuple[int, ...]:
    """1-based ranks, best first; ties broken by larger mean-facet coefficient,
    then by input order."""
    n = len(cc_final)
    means = cc_mean if cc_mean is not None else [0.0] * n
    order = sorted(range(n), key=lambda i: (-cc_final[i], -means[i], i))
    ranks = [0] * n
    for position, i in enumerate(order, start=1):
        ranks[i] = position
    return tuple(ranks)


@contextmanager
def _stage(label: str):
    # errors bubbling out of evaluate carry the pipeline stage they came from
    try:
        yield
    except DecisionError as exc:
        raise type(exc)(f"{label}: {exc}") from None


def evaluate(
    problem: DecisionProblem,
    scale: LinguisticScale = DEFAULT_SCALE,
    weights: Sequence[float] | None = None,
) -> RankingResult:
    """Run the whole pipeline on a problem.

    ``weights`` overrides the criteria weights (used by scenario analysis);
    weights are taken as given, never renormalized. A warning string is
    attached when they do not sum to 1, since every closeness coefficient is
    invariant to uniform weight scaling anyway.
    """
    if weights is None:
        w = np.array(problem.weights, dtype=float)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != (len(problem.criteria),):
            raise DimensionMismatch(
                f"{w.size} weights for {len(problem.criteria)} criteria"
            )
        if np.any(w < 0) or not np.any(w > 0):
            raise ValidationError(
                "weights must be nonnegative with at least one positive entry",
                path="weights",
            )

    with _stage("aggregating expert ratings"):
        aggregated = build_decision_matrix(problem, scale)
    with _stage("normalizing the decision matrix"):
        normalized = normalize(aggregated, problem.criteria)
    means = mean_matrix(normalized)
    spreads = std_dev_matrix(normalized)
    ideals_e = mean_ideals(means)
    ideals_s = std_dev_ideals(spreads)
    d_mean_plus, d_mean_minus = separations(means, ideals_e, w)
    d_std_plus, d_std_minus = separations(spreads, ideals_s, w)
    cc_mean = np.array(
        [closeness(p, m) for p, m in zip(d_mean_plus, d_mean_minus)]
    )
    cc_std = np.array([closeness(p, m) for p, m in zip(d_std_plus, d_std_minus)])
    cc_final = np.array(
        [combined_closeness(e, s) for e, s in zip(cc_mean, cc_std)]
    )
    ranks = rank_alternatives(cc_final, cc_mean)

    warning = None
    total = float(w.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        warning = (
            f"criteria weights sum to {total:.6f}, not 1; closeness "
            "coefficients are invariant to uniform weight scaling"
        )

    return RankingResult(
        alternatives=tuple(problem.alternatives),
        d_mean_plus=d_mean_plus,
        d_mean_minus=d_mean_minus,
        d_std_plus=d_std_plus,
        d_std_minus=d_std_minus,
        cc_mean=cc_mean,
        cc_std=cc_std,
        cc_final=cc_final,
        ranks=ranks,
        weight_warning=warning,
        aggregated=aggregated,
        normalized=normalized,
        mean_values=means,
        std_devs=spreads,
        mean_ideals=ideals_e,
        std_ideals=ideals_s,
        weights=tuple(float(x) for x in w),
    )
