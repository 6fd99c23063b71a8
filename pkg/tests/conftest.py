import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from credtopsis import evaluate, waste_disposal_problem


@pytest.fixture(scope="session")
def case_study():
    problem, scale = waste_disposal_problem()
    return problem, scale


@pytest.fixture(scope="session")
def case_result(case_study):
    problem, scale = case_study
    return evaluate(problem, scale=scale)


def make_problem(cells, kinds, weights, alternatives=None, criteria_ids=None):
    """Build a K=1 problem from raw (l, m, u) cells."""
    from credtopsis import Criterion, DecisionProblem, TriangularFuzzyNumber

    p, q = len(cells), len(cells[0])
    alternatives = alternatives or [f"X{i}" for i in range(p)]
    criteria_ids = criteria_ids or [f"K{j}" for j in range(q)]
    criteria = tuple(
        Criterion(id=criteria_ids[j], name=criteria_ids[j], kind=kinds[j], weight=weights[j])
        for j in range(q)
    )
    ratings = {
        alternatives[i]: {
            criteria_ids[j]: (TriangularFuzzyNumber(*cells[i][j]),) for j in range(q)
        }
        for i in range(p)
    }
    return DecisionProblem(
        alternatives=tuple(alternatives),
        criteria=criteria,
        experts=("E1",),
        ratings=ratings,
    )


def random_problem(rng, p=4, q=10):
    """Random positive-support problem for invariance checks."""
    cells = [
        [tuple(sorted(rng.uniform(0.5, 10.0, 3))) for _ in range(q)] for _ in range(p)
    ]
    kinds = [("benefit" if rng.random() < 0.5 else "cost") for _ in range(q)]
    weights = list(rng.uniform(0.05, 1.0, q))
    return cells, kinds, weights
