"""
Test case registry

Every problem is a CaseSpec: a mixture, a domain, an ordered list of
regions with their primitive states, and the run settings. Regions are
matched against cell centers in order and the first match wins, so a
background region placed last makes the layout a partition.

Cases can also be written to and read from JSON so users can run their
own problems through the same pipeline.
"""
import json
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from mixsolver.config import DEFAULT_CFL
from mixsolver.errors import DataValidationError, UnknownCaseError
from mixsolver.grid import Field, Grid
from mixsolver.state import (
    GammaForm,
    Mixture,
    ModelKind,
    PrimitiveState,
    to_conserved,
    validate_primitive,
)
from mixsolver.thermo import GasComponent

logger = logging.getLogger("mixsolver")


class RegionShape(Enum):
    """Enumeration of region predicates"""

    INTERVAL = "interval"
    DISK = "disk"
    BACKGROUND = "background"


@dataclass(frozen=True)
class Region:
    """A part of the domain holding one constant state

    INTERVAL is lo <= x < hi along x (either bound may be open-ended),
    DISK is the open disk |r - center| < radius.
    """

    state: PrimitiveState
    shape: RegionShape = RegionShape.BACKGROUND
    lo: Optional[float] = None
    hi: Optional[float] = None
    center: Optional[Tuple[float, float]] = None
    radius: Optional[float] = None

    def contains(self, coords: Tuple[np.ndarray, ...]) -> np.ndarray:
        """Mask of the cell centers inside the region"""
        x = coords[0]
        if self.shape is RegionShape.INTERVAL:
            mask = np.ones(x.shape, dtype=bool)
            if self.lo is not None:
                mask &= x >= self.lo
            if self.hi is not None:
                mask &= x < self.hi
            return mask
        if self.shape is RegionShape.DISK:
            if len(coords) != 2:
                raise DataValidationError("Disk regions need a 2D grid")
            dx = coords[0] - self.center[0]
            dy = coords[1] - self.center[1]
            return dx * dx + dy * dy < self.radius**2
        return np.ones(x.shape, dtype=bool)

    def serialize(self) -> dict:
        """Serializes a Region into a dictionary"""
        data = {"shape": self.shape.value, "state": self.state.serialize()}
        if self.shape is RegionShape.INTERVAL:
            data["lo"] = self.lo
            data["hi"] = self.hi
        elif self.shape is RegionShape.DISK:
            data["center"] = list(self.center)
            data["radius"] = self.radius
        return data

    @classmethod
    def deserialize(cls, data: dict) -> "Region":
        """Builds a Region from a dictionary"""
        try:
            shape = RegionShape(data.get("shape", RegionShape.BACKGROUND.value))
            region = cls(state=PrimitiveState.deserialize(data["state"]), shape=shape)
            if shape is RegionShape.INTERVAL:
                lo, hi = data.get("lo"), data.get("hi")
                region = replace(
                    region,
                    lo=None if lo is None else float(lo),
                    hi=None if hi is None else float(hi),
                )
            elif shape is RegionShape.DISK:
                region = replace(
                    region,
                    center=tuple(float(c) for c in data["center"]),
                    radius=float(data["radius"]),
                )
            return region
        except KeyError as error:
            raise DataValidationError("Invalid region: missing " + error.args[0]) from error
        except (TypeError, ValueError) as error:
            raise DataValidationError("Invalid region: bad data " + str(error)) from error


@dataclass(frozen=True)
class CaseSpec:
    """A named initial-value problem

    ``t_end`` None marks a steady case, marched until the residual
    vanishes. ``exact_pressure`` and ``exact_velocity`` are set when the
    exact solution keeps p and u uniform.
    """

    name: str
    mixture: Mixture
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    cells: Tuple[int, ...]
    regions: Tuple[Region, ...]
    t_end: Optional[float]
    cfl: float = DEFAULT_CFL
    description: str = ""
    exact_pressure: Optional[float] = None
    exact_velocity: Optional[Tuple[float, ...]] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.regions:
            raise DataValidationError(f"Case '{self.name}' has no regions")
        if not 0.0 < self.cfl <= 1.0:
            raise DataValidationError(f"CFL must lie in (0, 1], got {self.cfl}")
        if self.t_end is not None and not self.t_end >= 0.0:
            raise DataValidationError(f"t_end must be >= 0, got {self.t_end}")
        for region in self.regions:
            if region.state.ndim != self.ndim:
                raise DataValidationError(
                    f"Case '{self.name}' is {self.ndim}D but a region state has "
                    f"{region.state.ndim} velocity components"
                )
            validate_primitive(region.state, self.mixture)

    @property
    def ndim(self) -> int:
        """Number of spatial dimensions"""
        return len(self.cells)

    @property
    def steady(self) -> bool:
        """True when the case marches to a steady state"""
        return self.t_end is None

    def grid(self, cells: Optional[Tuple[int, ...]] = None) -> Grid:
        """The case grid, optionally with other cell counts"""
        cells = self.cells if cells is None else tuple(cells)
        if len(cells) != self.ndim:
            raise DataValidationError(
                f"Case '{self.name}' is {self.ndim}D but {len(cells)} cell counts were given"
            )
        return Grid(self.lower, self.upper, cells)

    def serialize(self) -> dict:
        """Serializes a CaseSpec into a dictionary"""
        return {
            "name": self.name,
            "description": self.description,
            "mixture": self.mixture.serialize(),
            "lower": list(self.lower),
            "upper": list(self.upper),
            "cells": list(self.cells),
            "cfl": self.cfl,
            "t_end": self.t_end,
            "regions": [region.serialize() for region in self.regions],
            "exact_pressure": self.exact_pressure,
            "exact_velocity": None if self.exact_velocity is None else list(self.exact_velocity),
            "notes": list(self.notes),
        }

    @classmethod
    def deserialize(cls, data: dict) -> "CaseSpec":
        """Builds a CaseSpec from a dictionary"""
        try:
            t_end = data.get("t_end")
            exact_velocity = data.get("exact_velocity")
            exact_pressure = data.get("exact_pressure")
            return cls(
                name=str(data["name"]),
                description=str(data.get("description", "")),
                mixture=Mixture.deserialize(data["mixture"]),
                lower=tuple(float(v) for v in data["lower"]),
                upper=tuple(float(v) for v in data["upper"]),
                cells=tuple(int(n) for n in data["cells"]),
                cfl=float(data.get("cfl", DEFAULT_CFL)),
                t_end=None if t_end is None else float(t_end),
                regions=tuple(Region.deserialize(r) for r in data["regions"]),
                exact_pressure=None if exact_pressure is None else float(exact_pressure),
                exact_velocity=(
                    None if exact_velocity is None else tuple(float(v) for v in exact_velocity)
                ),
                notes=tuple(str(n) for n in data.get("notes", [])),
            )
        except KeyError as error:
            raise DataValidationError("Invalid case: missing " + error.args[0]) from error
        except (TypeError, ValueError) as error:
            raise DataValidationError("Invalid case: bad data " + str(error)) from error


######################################################################
#  R E G I S T R Y
######################################################################
def _gas(gamma: float, p_inf: float = 0.0) -> GasComponent:
    return GasComponent(gamma=gamma, p_inf=p_inf)


def _y_state(rho, u, p, y1) -> PrimitiveState:
    return PrimitiveState(rho=rho, velocity=(u,), p=p, y1=y1)


def _g_state(rho, u, p, gamma, p_inf=0.0) -> PrimitiveState:
    return PrimitiveState(rho=rho, velocity=(u,), p=p, gamma=gamma, p_inf=p_inf)


def _shock_tube(name, mixture, left, right, t_end, diaphragm=0.5, cells=100, **kwargs) -> CaseSpec:
    return CaseSpec(
        name=name,
        mixture=mixture,
        lower=(0.0,),
        upper=(1.0,),
        cells=(cells,),
        regions=(
            Region(left, RegionShape.INTERVAL, hi=diaphragm),
            Region(right),
        ),
        t_end=t_end,
        **kwargs,
    )


def _mass_fraction(gamma1: float, gamma2: float) -> Mixture:
    return Mixture(ModelKind.MASS_FRACTION, _gas(gamma1), _gas(gamma2))


def _gamma_based(form: GammaForm) -> Mixture:
    return Mixture(ModelKind.GAMMA_BASED, gamma_form=form)


def _build_registry() -> dict:
    quasi = _gamma_based(GammaForm.QUASI_CONSERVATIVE)
    conservative = _gamma_based(GammaForm.CONSERVATIVE)
    sod_left = _y_state(1.0, 0.0, 1000.0, 1.0)
    sod_right = _y_state(0.125, 0.0, 1.0, 0.0)
    cases = [
        _shock_tube(
            "steady_contact",
            _mass_fraction(1.4, 1.6),
            _y_state(1.0, 0.0, 1.0, 1.0),
            _y_state(0.125, 0.0, 1.0, 0.0),
            t_end=None,
            description="Steady contact discontinuity with a jump in density and gamma",
            exact_pressure=1.0,
            exact_velocity=(0.0,),
            notes=("Both sides start at p = 1 so the contact stays put.",),
        ),
        _shock_tube(
            "isolated_front",
            _mass_fraction(1.4, 1.4),
            _y_state(1.0, -1.0, 1.0, 1.0),
            _y_state(1.0, 1.0, 5.0, 0.0),
            t_end=0.21,
            description="Isolated material front, mass fraction positivity test",
        ),
        _shock_tube(
            "sod_unequal_gamma",
            _mass_fraction(1.6, 1.4),
            sod_left,
            sod_right,
            t_end=0.21,
            description="Sod shock tube with two gases, gamma_L = 1.6 and gamma_R = 1.4",
        ),
        _shock_tube(
            "sod_unequal_gamma_figvariant",
            _mass_fraction(1.6, 1.2),
            sod_left,
            sod_right,
            t_end=0.21,
            description="Sod shock tube with gamma_L = 1.6 and gamma_R = 1.2",
            notes=("Same tube with a softer right gas, gamma_R = 1.2.",),
        ),
        _shock_tube(
            "stiff_shock_tube",
            _mass_fraction(1.4, 1.4),
            sod_left,
            sod_right,
            t_end=0.21,
            description="Stiff shock tube with equal gamma = 1.4 and a pressure ratio of 1000",
        ),
        _shock_tube(
            "interface_only_perfect",
            quasi,
            _g_state(1.0, 1.0, 1.0, 1.4),
            _g_state(0.125, 1.0, 1.0, 1.2),
            t_end=0.12,
            diaphragm=0.2,
            description="Interface only problem between two perfect gases",
            exact_pressure=1.0,
            exact_velocity=(1.0,),
        ),
        _shock_tube(
            "interface_only_stiff",
            quasi,
            _g_state(1.0, 1.0, 1.0, 1.4),
            _g_state(0.125, 1.0, 1.0, 4.0, 1.0),
            t_end=0.12,
            diaphragm=0.2,
            description="Interface only problem between a perfect and a stiffened gas",
            exact_pressure=1.0,
            exact_velocity=(1.0,),
        ),
        _shock_tube(
            "liquid_gas_rp",
            conservative,
            _g_state(1.241, 0.0, 2.753, 1.4),
            _g_state(1.0, 0.0, 3.059e-4, 5.5, 1.505),
            t_end=0.1,
            description="Gas-liquid Riemann problem",
        ),
        CaseSpec(
            name="shock_contact_interaction",
            mixture=conservative,
            lower=(0.0,),
            upper=(1.0,),
            cells=(200,),
            regions=(
                Region(_g_state(1.0, 0.0, 1.0, 1.4), RegionShape.INTERVAL, hi=0.5),
                Region(_g_state(5.0, 0.0, 1.0, 4.0, 1.0), RegionShape.INTERVAL, lo=0.5, hi=0.6),
                Region(_g_state(7.093, -0.7288, 10.0, 4.0, 1.0)),
            ),
            t_end=0.2,
            description="Shock wave hitting a liquid-gas interface",
        ),
        CaseSpec(
            name="moving_interface_2d",
            mixture=quasi,
            lower=(0.0, 0.0),
            upper=(1.0, 1.0),
            cells=(100, 100),
            regions=(
                Region(
                    PrimitiveState(1.0, (1.0, 1.0), 1.0, gamma=1.4, p_inf=0.0),
                    RegionShape.DISK,
                    center=(0.25, 0.25),
                    radius=0.16,
                ),
                Region(PrimitiveState(0.125, (1.0, 1.0), 1.0, gamma=4.0, p_inf=1.0)),
            ),
            t_end=0.36,
            description="Bubble advected by the uniform velocity field (1, 1)",
            exact_pressure=1.0,
            exact_velocity=(1.0, 1.0),
        ),
        CaseSpec(
            name="bubble_explosion_2d",
            mixture=conservative,
            lower=(0.0, 0.0),
            upper=(1.0, 1.0),
            cells=(100, 100),
            regions=(
                Region(
                    PrimitiveState(1.241, (0.0, 0.0), 2.753, gamma=1.4, p_inf=0.0),
                    RegionShape.DISK,
                    center=(0.5, 0.5),
                    radius=0.2,
                ),
                Region(PrimitiveState(0.991, (0.0, 0.0), 3.059e-4, gamma=5.5, p_inf=1.505)),
            ),
            t_end=0.058,
            description="Underwater gas bubble explosion",
        ),
    ]
    return {case.name: case for case in cases}


REGISTRY = _build_registry()


def case_names() -> list:
    """Registered case names, sorted"""
    return sorted(REGISTRY)


def get_case(name: str) -> CaseSpec:
    """Returns the registered case with that name"""
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownCaseError(name, REGISTRY) from None


######################################################################
#  S A M P L I N G
######################################################################
def sample_initial(case: CaseSpec, grid: Grid) -> Field:
    """Cell-centered sampling of the case regions onto a grid"""
    if grid.ndim != case.ndim:
        raise DataValidationError(
            f"Case '{case.name}' is {case.ndim}D, the grid is {grid.ndim}D"
        )
    coords = grid.mesh()
    nvar = case.mixture.n_vars(case.ndim)
    cons = np.zeros((nvar,) + grid.shape)
    assigned = np.zeros(grid.shape, dtype=bool)
    for region in case.regions:
        mask = region.contains(coords) & ~assigned
        vector = to_conserved(region.state, case.mixture)
        cons[:, mask] = vector[:, None]
        assigned |= mask
    if not np.all(assigned):
        raise DataValidationError(f"Regions of case '{case.name}' do not cover the domain")
    logger.debug("Sampled %s onto %s cells", case.name, grid.shape)
    return Field(cons, case.mixture)


######################################################################
#  C O N F I G   F I L E S
######################################################################
def load_case_config(path) -> CaseSpec:
    """Reads a CaseSpec from a JSON file"""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as error:
            raise DataValidationError(f"Invalid case file {path}: {error}") from error
    return CaseSpec.deserialize(data)


def dump_case_config(case: CaseSpec, path) -> None:
    """Writes a CaseSpec to a JSON file"""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(case.serialize(), handle, indent=2)
        handle.write("\n")
