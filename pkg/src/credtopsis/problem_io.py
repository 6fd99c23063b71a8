"""Reading and writing decision problems and scenario sets.

Documents are JSON. A problem file holds::

    {
      "scale":        {"TERM": [l, m, u], ...},        # optional overrides
      "criteria":     [{"id", "name", "kind", "weight"}, ...],
      "alternatives": ["A1", ...],
      "experts":      ["DM1", ...],
      "ratings":      {alt: {criterion: [entry per expert, ...]}}
    }

where each rating entry is either a term code from the scale or an explicit
``[l, m, u]`` triple; the two may be mixed freely within a cell. A scenario
file holds ``{"scenarios": [{"name": ..., "weights": [...]}, ...]}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .engine import RankingResult, evaluate
from .errors import DimensionMismatch, ParseError, ValidationError
from .model import (
    Criterion,
    DecisionProblem,
    DEFAULT_SCALE,
    LinguisticScale,
    Rating,
)
from .tfn import TriangularFuzzyNumber

_PROBLEM_FIELDS = {"scale", "criteria", "alternatives", "experts", "ratings"}
_CRITERION_FIELDS = {"id", "name", "kind", "weight"}


@dataclass(frozen=True)
class ScenarioSet:
    """Named weight vectors to evaluate one problem under."""

    names: tuple[str, ...]
    vectors: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.names) != len(self.vectors):
            raise ValidationError("names and weight vectors differ in length")
        for name, vector in zip(self.names, self.vectors):
            if any(w < 0 for w in vector) or not any(w > 0 for w in vector):
                raise ValidationError(
                    "weights must be nonnegative with at least one positive entry",
                    path=f"scenarios[{name}]",
                )


def _parse_triple(raw, path: str) -> TriangularFuzzyNumber:
    if (
        not isinstance(raw, (list, tuple))
        or len(raw) != 3
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
    ):
        raise ValidationError(f"expected [l, m, u] triple, got {raw!r}", path=path)
    return TriangularFuzzyNumber(*raw)


def _parse_rating(raw, path: str) -> Rating:
    if isinstance(raw, str):
        return raw
    return _parse_triple(raw, path)


def problem_from_dict(doc: dict) -> tuple[DecisionProblem, LinguisticScale]:
    """Validate a parsed document into a problem plus its effective scale."""
    if not isinstance(doc, dict):
        raise ValidationError(f"top level must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _PROBLEM_FIELDS
    if unknown:
        raise ValidationError(f"unknown fields {sorted(unknown)}")
    for required in ("criteria", "alternatives", "experts", "ratings"):
        if required not in doc:
            raise ValidationError("missing required field", path=required)
    for array_field in ("criteria", "alternatives", "experts"):
        if not isinstance(doc[array_field], list):
            raise ValidationError("must be an array", path=array_field)

    scale = DEFAULT_SCALE
    if "scale" in doc:
        if not isinstance(doc["scale"], dict):
            raise ValidationError("scale must map term codes to triples", path="scale")
        overrides = {
            term: _parse_triple(raw, path=f"scale[{term}]")
            for term, raw in doc["scale"].items()
        }
        scale = scale.with_overrides(overrides)

    criteria = []
    for i, raw in enumerate(doc["criteria"]):
        if not isinstance(raw, dict):
            raise ValidationError("criterion must be an object", path=f"criteria[{i}]")
        unknown = set(raw) - _CRITERION_FIELDS
        if unknown:
            raise ValidationError(
                f"unknown fields {sorted(unknown)}", path=f"criteria[{i}]"
            )
        missing = _CRITERION_FIELDS - set(raw)
        if missing:
            raise ValidationError(
                f"missing fields {sorted(missing)}", path=f"criteria[{i}]"
            )
        if not isinstance(raw["weight"], (int, float)) or isinstance(raw["weight"], bool):
            raise ValidationError(
                "weight must be a number", path=f"criteria[{raw['id']}].weight"
            )
        criteria.append(
            Criterion(
                id=str(raw["id"]),
                name=str(raw["name"]),
                kind=str(raw["kind"]),
                weight=float(raw["weight"]),
            )
        )

    alternatives = [str(a) for a in doc["alternatives"]]
    experts = [str(e) for e in doc["experts"]]
    for label, seq in (
        ("alternatives", alternatives),
        ("experts", experts),
        ("criteria", [c.id for c in criteria]),
    ):
        dupes = {x for x in seq if seq.count(x) > 1}
        if dupes:
            raise ValidationError(f"duplicate ids {sorted(dupes)}", path=label)

    if not isinstance(doc["ratings"], dict):
        raise ValidationError("ratings must map alternatives to cells", path="ratings")
    known_criteria = {c.id for c in criteria}
    ratings: dict[str, dict[str, tuple[Rating, ...]]] = {}
    for alt, cells in doc["ratings"].items():
        if alt not in alternatives:
            raise ValidationError("unknown alternative", path=f"ratings[{alt}]")
        if not isinstance(cells, dict):
            raise ValidationError("must map criteria to entries", path=f"ratings[{alt}]")
        row: dict[str, tuple[Rating, ...]] = {}
        for crit_id, entries in cells.items():
            if crit_id not in known_criteria:
                raise ValidationError(
                    "unknown criterion", path=f"ratings[{alt}][{crit_id}]"
                )
            if not isinstance(entries, list):
                raise ValidationError(
                    "must be a list with one entry per expert",
                    path=f"ratings[{alt}][{crit_id}]",
                )
            row[crit_id] = tuple(
                _parse_rating(raw, path=f"ratings[{alt}][{crit_id}][{k}]")
                for k, raw in enumerate(entries)
            )
        ratings[alt] = row

    problem = DecisionProblem(
        alternatives=tuple(alternatives),
        criteria=tuple(criteria),
        experts=tuple(experts),
        ratings=ratings,
    )
    return problem, scale


def load_problem(path: str | Path) -> tuple[DecisionProblem, LinguisticScale]:
    """Load and validate a problem file; returns the problem and its scale."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return problem_from_dict(doc)


def problem_to_dict(
    problem: DecisionProblem, scale: LinguisticScale | None = None
) -> dict:
    """Inverse of :func:`problem_from_dict`, suitable for ``json.dump``."""
    doc: dict = {}
    if scale is not None and scale.terms != DEFAULT_SCALE.terms:
        doc["scale"] = {
            term: list(tfn.as_tuple())
            for term, tfn in scale.terms.items()
            if DEFAULT_SCALE.terms.get(term) != tfn
        }
    doc["criteria"] = [
        {"id": c.id, "name": c.name, "kind": c.kind, "weight": c.weight}
        for c in problem.criteria
    ]
    doc["alternatives"] = list(problem.alternatives)
    doc["experts"] = list(problem.experts)
    doc["ratings"] = {
        alt: {
            crit.id: [
                entry if isinstance(entry, str) else list(entry.as_tuple())
                for entry in problem.ratings[alt][crit.id]
            ]
            for crit in problem.criteria
        }
        for alt in problem.alternatives
    }
    return doc


def load_scenarios(path: str | Path) -> ScenarioSet:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    if not isinstance(doc, dict) or "scenarios" not in doc:
        raise ValidationError("missing required field", path="scenarios")
    names = []
    vectors = []
    for i, raw in enumerate(doc["scenarios"]):
        if not isinstance(raw, dict) or set(raw) != {"name", "weights"}:
            raise ValidationError(
                "scenario needs exactly the fields name and weights",
                path=f"scenarios[{i}]",
            )
        names.append(str(raw["name"]))
        weights = raw["weights"]
        if not isinstance(weights, list) or not all(
            isinstance(w, (int, float)) and not isinstance(w, bool) for w in weights
        ):
            raise ValidationError(
                "weights must be a list of numbers", path=f"scenarios[{i}].weights"
            )
        vectors.append(tuple(float(w) for w in weights))
    return ScenarioSet(names=tuple(names), vectors=tuple(vectors))


def run_sensitivity(
    problem: DecisionProblem,
    scenarios: ScenarioSet,
    scale: LinguisticScale = DEFAULT_SCALE,
) -> list[tuple[str, RankingResult]]:
    """Evaluate the problem once per scenario, in scenario order."""
    q = len(problem.criteria)
    for name, vector in zip(scenarios.names, scenarios.vectors):
        if len(vector) != q:
            raise DimensionMismatch(
                f"scenario {name!r} has {len(vector)} weights for {q} criteria"
            )
    return [
        (name, evaluate(problem, scale=scale, weights=vector))
        for name, vector in zip(scenarios.names, scenarios.vectors)
    ]
