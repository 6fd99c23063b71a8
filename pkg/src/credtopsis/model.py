"""Linguistic rating scale, decision-problem data model and expert aggregation.

A group decision problem holds p alternatives, q criteria (each a benefit or
a cost with a nonnegative weight) and K experts; every (alternative,
criterion) pair carries one rating per expert, given either as a term from a
linguistic scale or as an explicit fuzzy triple. Aggregation across experts
takes the minimum of lower bounds, the geometric mean of modes and the
maximum of upper bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .errors import NonPositiveMode, UnknownTerm, ValidationError
from .matrices import FuzzyMatrix
from .tfn import TriangularFuzzyNumber

Rating = Union[str, TriangularFuzzyNumber]

BENEFIT = "benefit"
COST = "cost"


@dataclass(frozen=True)
class LinguisticScale:
    """Ordered mapping from term codes to TFN scores."""

    terms: Mapping[str, TriangularFuzzyNumber]

    def lookup(self, term: str) -> TriangularFuzzyNumber:
        try:
            return self.terms[term]
        except KeyError:
            known = ", ".join(self.terms)
            raise UnknownTerm(f"term {term!r} is not in the scale ({known})") from None

    def with_overrides(
        self, overrides: Mapping[str, TriangularFuzzyNumber]
    ) -> "LinguisticScale":
        merged = dict(self.terms)
        merged.update(overrides)
        return LinguisticScale(merged)


#: Seven-term evaluation scale: Very Poor .. Very Good.
DEFAULT_SCALE = LinguisticScale(
    {
        "VP": TriangularFuzzyNumber(1, 1, 1),
        "P": TriangularFuzzyNumber(1, 1, 3),
        "MP": TriangularFuzzyNumber(1, 3, 5),
        "F": TriangularFuzzyNumber(3, 5, 7),
        "MG": TriangularFuzzyNumber(5, 7, 9),
        "G": TriangularFuzzyNumber(7, 9, 10),
        "VG": TriangularFuzzyNumber(9, 10, 10),
    }
)


@dataclass(frozen=True)
class Criterion:
    id: str
    name: str
    kind: str  # BENEFIT or COST
    weight: float

    def __post_init__(self):
        if self.kind not in (BENEFIT, COST):
            raise ValidationError(
                f"kind must be {BENEFIT!r} or {COST!r}, got {self.kind!r}",
                path=f"criteria[{self.id}].kind",
            )
        if not (self.weight >= 0):
            raise ValidationError(
                f"weight must be nonnegative, got {self.weight}",
                path=f"criteria[{self.id}].weight",
            )


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives, criteria, experts and the full rating tensor.

    ``ratings[alternative][criterion_id]`` is the per-expert sequence of
    ratings, in the order of ``experts``. The tensor must be fully populated.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    experts: tuple[str, ...]
    ratings: Mapping[str, Mapping[str, tuple[Rating, ...]]] = field(repr=False)

    def __post_init__(self):
        if len(self.alternatives) < 2:
            raise ValidationError("need at least two alternatives", path="alternatives")
        if len(self.criteria) < 1:
            raise ValidationError("need at least one criterion", path="criteria")
        if len(self.experts) < 1:
            raise ValidationError("need at least one expert", path="experts")
        for label, seq in (
            ("alternatives", self.alternatives),
            ("experts", self.experts),
            ("criteria", [c.id for c in self.criteria]),
        ):
            dupes = {x for x in seq if list(seq).count(x) > 1}
            if dupes:
                raise ValidationError(f"duplicate ids {sorted(dupes)}", path=label)
        if not any(c.weight > 0 for c in self.criteria):
            raise ValidationError(
                "at least one criterion must have positive weight", path="criteria"
            )
        for alt in self.alternatives:
            if alt not in self.ratings:
                raise ValidationError("missing ratings row", path=f"ratings[{alt}]")
            for crit in self.criteria:
                cell = self.ratings[alt].get(crit.id)
                if cell is None:
                    raise ValidationError(
                        "missing ratings cell", path=f"ratings[{alt}][{crit.id}]"
                    )
                if len(cell) != len(self.experts):
                    missing = self.experts[len(cell)] if len(cell) < len(self.experts) else None
                    detail = (
                        f"expected {len(self.experts)} expert ratings, got {len(cell)}"
                    )
                    if missing is not None:
                        detail += f" (first missing expert: {missing})"
                    raise ValidationError(
                        detail, path=f"ratings[{alt}][{crit.id}]"
                    )

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(c.weight for c in self.criteria)

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)


def aggregate_ratings(
    ratings: Sequence[TriangularFuzzyNumber],
) -> TriangularFuzzyNumber:
    """Aggregate K expert TFNs: (min lower, geometric mean of modes, max upper).

    The geometric mean requires strictly positive modes. Aggregating K copies
    of one TFN returns it unchanged.
    """
    if not ratings:
        raise ValueError("need at least one rating to aggregate")
    modes = [r.mode for r in ratings]
    if any(m <= 0 for m in modes):
        raise NonPositiveMode(
            f"geometric mean needs positive modes, got {modes}"
        )
    first = modes[0]
    if all(m == first for m in modes):
        mode = first  # keep idempotence bit-exact
    else:
        mode = math.prod(modes) ** (1.0 / len(modes))
    return TriangularFuzzyNumber(
        min(r.lower for r in ratings), mode, max(r.upper for r in ratings)
    )


def build_decision_matrix(
    problem: DecisionProblem, scale: LinguisticScale = DEFAULT_SCALE
) -> FuzzyMatrix:
    """Resolve terms through the scale and aggregate experts into a p x q matrix."""
    rows = []
    for alt in problem.alternatives:
        row = []
        for crit in problem.criteria:
            resolved = []
            for k, entry in enumerate(problem.ratings[alt][crit.id]):
                if isinstance(entry, TriangularFuzzyNumber):
                    resolved.append(entry)
                    continue
                try:
                    resolved.append(scale.lookup(entry))
                except UnknownTerm as exc:
                    raise UnknownTerm(
                        f"cell ({alt}, {crit.id}), expert {problem.experts[k]}: {exc}"
                    ) from None
            try:
                row.append(aggregate_ratings(resolved))
            except NonPositiveMode as exc:
                raise NonPositiveMode(f"cell ({alt}, {crit.id}): {exc}") from None
        rows.append(tuple(row))
    return FuzzyMatrix(
        rows=tuple(problem.alternatives),
        cols=problem.criterion_ids,
        cells=tuple(rows),
    )
