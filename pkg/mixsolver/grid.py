"""
Structured grids and the fields that live on them
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from mixsolver.errors import DataValidationError
from mixsolver.state import Mixture, PrimitiveState, to_primitive
from mixsolver.thermo import sound_speed

MIN_CELLS = 3


@dataclass(frozen=True)
class Grid:
    """Uniform Cartesian grid over [lo, hi] per axis"""

    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    cells: Tuple[int, ...]

    def __post_init__(self):
        if not len(self.lower) == len(self.upper) == len(self.cells):
            raise DataValidationError("Grid extents and cell counts disagree in dimension")
        if self.ndim not in (1, 2):
            raise DataValidationError(f"Only 1D and 2D grids are supported, got {self.ndim}D")
        for count in self.cells:
            if int(count) != count or count < MIN_CELLS:
                raise DataValidationError(f"Cell counts must be integers >= {MIN_CELLS}, got {count}")
        for lo, hi in zip(self.lower, self.upper):
            if not hi > lo:
                raise DataValidationError(f"Empty extent [{lo}, {hi}]")

    @property
    def ndim(self) -> int:
        """Number of spatial dimensions"""
        return len(self.cells)

    @property
    def shape(self) -> Tuple[int, ...]:
        """Cell counts as an array shape"""
        return tuple(self.cells)

    @property
    def spacing(self) -> Tuple[float, ...]:
        """Cell sizes per axis"""
        return tuple((hi - lo) / n for lo, hi, n in zip(self.lower, self.upper, self.cells))

    @property
    def cell_volume(self) -> float:
        """Length (1D) or area (2D) of one cell"""
        return float(np.prod(self.spacing))

    def centers(self, axis: int = 0) -> np.ndarray:
        """Cell-center coordinates along one axis"""
        lo, n = self.lower[axis], self.cells[axis]
        return lo + (np.arange(n) + 0.5) * self.spacing[axis]

    def mesh(self) -> Tuple[np.ndarray, ...]:
        """Cell-center coordinates broadcast to the grid shape"""
        return tuple(np.meshgrid(*(self.centers(d) for d in range(self.ndim)), indexing="ij"))


@dataclass(frozen=True)
class Field:
    """Conserved cell averages of shape (nvar, *grid.shape)"""

    cons: np.ndarray
    mixture: Mixture

    def __post_init__(self):
        ndim = self.cons.ndim - 1
        if ndim not in (1, 2) or self.cons.shape[0] != self.mixture.n_vars(ndim):
            raise DataValidationError(
                f"Field of shape {self.cons.shape} does not match a "
                f"{self.mixture.model.value} state"
            )

    @property
    def ndim(self) -> int:
        """Number of spatial dimensions"""
        return self.cons.ndim - 1

    @cached_property
    def primitive(self) -> PrimitiveState:
        """Primitive view, computed once"""
        return to_primitive(self.cons, self.mixture)

    @cached_property
    def sound_speed(self) -> np.ndarray:
        """Sound speed per cell, computed once"""
        prim = self.primitive
        return sound_speed(prim.rho, prim.p, prim.thermo)

    def totals(self, grid: Grid) -> np.ndarray:
        """Domain integral of every conserved entry"""
        return self.cons.reshape(self.cons.shape[0], -1).sum(axis=1) * grid.cell_volume
