"""Bundled municipal solid waste disposal case study.

Four disposal methods (A1 landfilling, A2 composting, A3 RDF combustion,
A4 conventional incineration) rated by three experts against ten criteria,
five benefit (technical reliability, feasibility, separation of waste
materials, waste recovery, energy recovery) and five cost (net cost per ton,
air pollution control, emission levels, surface water dispersed releases,
number of employees), plus six alternative weighting scenarios.
"""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .model import DecisionProblem, LinguisticScale
from .problem_io import ScenarioSet, load_problem, load_scenarios


def problem_path() -> Path:
    return Path(resources.files("credtopsis").joinpath("data/msw_problem.json"))


def scenarios_path() -> Path:
    return Path(resources.files("credtopsis").joinpath("data/msw_scenarios.json"))


def waste_disposal_problem() -> tuple[DecisionProblem, LinguisticScale]:
    """The bundled 4-alternative, 10-criterion, 3-expert problem."""
    return load_problem(problem_path())


def waste_disposal_scenarios() -> ScenarioSet:
    """The six bundled weighting scenarios."""
    return load_scenarios(scenarios_path())
