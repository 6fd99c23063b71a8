"""Labeled matrix containers shared by the group model and the ranking engine."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tfn import TriangularFuzzyNumber


@dataclass(frozen=True)
class FuzzyMatrix:
    """Rectangular grid of TFNs with row (alternative) and column (criterion) labels."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[TriangularFuzzyNumber, ...], ...]

    def __post_init__(self):
        if any(len(row) != len(self.cols) for row in self.cells) or len(
            self.cells
        ) != len(self.rows):
            raise ValueError("cell grid does not match labels")

    def cell(self, row: str, col: str) -> TriangularFuzzyNumber:
        return self.cells[self.rows.index(row)][self.cols.index(col)]


@dataclass(frozen=True, eq=False)
class CrispMatrix:
    """Rectangular grid of reals with the same labeling scheme."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.shape != (len(self.rows), len(self.cols)):
            raise ValueError("value grid does not match labels")

    def cell(self, row: str, col: str) -> float:
        return float(self.values[self.rows.index(row), self.cols.index(col)])
