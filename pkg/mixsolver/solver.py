"""
Finite volume time marching

First-order explicit update on structured 1D/2D grids with transmissive
boundaries:

    U_i <- U_i - dt/dx (F_{i+1/2} - F_{i-1/2}) - dt/dy (G_{j+1/2} - G_{j-1/2})

Both directions use fluxes of the same time level (unsplit). The
quasi-conservative gamma-based form adds the non-conservative correction
of its advected pair. Each step carries a conservation ledger.
"""
import logging
import dataclasses
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from mixsolver import config
from mixsolver.cases import CaseSpec, sample_initial
from mixsolver.errors import DataValidationError, UnphysicalStateError
from mixsolver.flux import (
    CellStates,
    SchemeKind,
    check_compatibility,
    face_fluxes,
    face_slices,
)
from mixsolver.grid import Field, Grid
from mixsolver.state import ModelKind, extra_index
from mixsolver.thermo import first_failure

logger = logging.getLogger("mixsolver")

# Marker for "use the case end time"
CASE_DEFAULT = object()


@dataclass
class StepReport:
    """What one explicit step did, including its conservation ledger

    ``boundary_flux`` is the net outflow through the domain boundary per
    unit time, so totals_after - totals_before = -dt * boundary_flux.
    """

    dt: float
    max_wave_speed: float
    totals_before: np.ndarray
    totals_after: np.ndarray
    boundary_flux: np.ndarray
    conservation_residual: float
    residual: float
    p_min: float
    y_min: Optional[float] = None
    y_max: Optional[float] = None

    @property
    def imbalance(self) -> np.ndarray:
        """Ledger mismatch per conserved entry"""
        return self.totals_after - self.totals_before + self.dt * self.boundary_flux


@dataclass
class RunResult:
    """Final field of a run with its per-step reports"""

    case: CaseSpec
    scheme: SchemeKind
    grid: Grid
    initial: Field
    final: Field
    time: float
    reports: List[StepReport] = dataclasses.field(default_factory=list)
    converged: bool = True
    capped: bool = False
    history: Optional[List[Field]] = None

    @property
    def steps(self) -> int:
        """Number of steps taken"""
        return len(self.reports)

    @property
    def conservation_residual(self) -> float:
        """Worst per-step ledger residual"""
        return max((r.conservation_residual for r in self.reports), default=0.0)


######################################################################
#  T I M E   S T E P
######################################################################
def compute_dt(field: Field, grid: Grid, cfl: float) -> float:
    """CFL limited time step over every cell and direction"""
    if not 0.0 < cfl <= 1.0:
        raise DataValidationError(f"CFL must lie in (0, 1], got {cfl}")
    prim, a = field.primitive, field.sound_speed
    dt = np.inf
    for axis, spacing in enumerate(grid.spacing):
        dt = min(dt, float(np.min(spacing / (np.abs(prim.velocity[axis]) + a))))
    dt *= cfl
    if not (np.isfinite(dt) and dt > 0.0):
        raise UnphysicalStateError(f"Time step {dt} is not positive and finite")
    return dt


def max_wave_speed(field: Field) -> float:
    """max(|V_n| + a) over cells and directions"""
    prim, a = field.primitive, field.sound_speed
    return float(max(np.max(np.abs(v) + a) for v in prim.velocity))


######################################################################
#  B O U N D A R I E S
######################################################################
def apply_boundary(field: Field, grid: Grid) -> CellStates:
    """The field with one layer of transmissive ghost cells on every side"""
    if field.cons.shape[1:] != grid.shape:
        raise DataValidationError(
            f"Field of shape {field.cons.shape[1:]} does not live on a {grid.shape} grid"
        )
    return CellStates(field.cons, field.primitive, field.sound_speed).pad(1)


######################################################################
#  U P D A T E
######################################################################
def _face_area(grid: Grid, axis: int) -> float:
    """Product of the spacings of the other axes"""
    return float(np.prod([h for d, h in enumerate(grid.spacing) if d != axis]))


def _boundary_outflow(fluxes, grid: Grid) -> np.ndarray:
    """Net flux out of the domain per unit time"""
    outflow = 0.0
    for axis, flux in enumerate(fluxes):
        along = 1 + axis
        difference = np.take(flux, -1, axis=along) - np.take(flux, 0, axis=along)
        outflow = outflow + difference.reshape(difference.shape[0], -1).sum(axis=1) * _face_area(grid, axis)
    return np.asarray(outflow)


def _flux_magnitude(fluxes, grid: Grid) -> np.ndarray:
    """Sum of |F| times face area over every face, per variable"""
    total = 0.0
    for axis, flux in enumerate(fluxes):
        total = total + np.abs(flux).reshape(flux.shape[0], -1).sum(axis=1) * _face_area(grid, axis)
    return np.asarray(total)


def step(field: Field, grid: Grid, scheme: SchemeKind, dt: float) -> Tuple[Field, StepReport]:
    """Advance the field by one explicit step of size dt"""
    mixture = field.mixture
    ndim = grid.ndim
    check_compatibility(scheme, mixture, ndim)
    padded = apply_boundary(field, grid)

    fluxes = []
    change = np.zeros_like(field.cons)
    normal_velocity_jumps = []
    for axis in range(ndim):
        flux = face_fluxes(padded, scheme, mixture, axis).flux
        fluxes.append(flux)
        ratio = dt / grid.spacing[axis]
        change = change + ratio * np.diff(flux, axis=1 + axis)
        if mixture.quasi_conservative:
            lower, upper = face_slices(ndim, axis)
            velocity = padded.prim.velocity[axis]
            face_velocity = 0.5 * (velocity[lower] + velocity[upper])
            normal_velocity_jumps.append(ratio * np.diff(face_velocity, axis=axis))

    cons = field.cons - change
    if mixture.quasi_conservative:
        x = extra_index(ndim)
        cons[x:] += field.cons[x:] * sum(normal_velocity_jumps)

    bad = ~np.all(np.isfinite(cons), axis=0)
    if np.any(bad):
        raise UnphysicalStateError("Non-finite update", first_failure(bad))
    updated = Field(cons, mixture)
    # validates the new cells and primes the caches for the next step
    prim = updated.primitive
    _ = updated.sound_speed

    totals_before = field.totals(grid)
    totals_after = updated.totals(grid)
    outflow = _boundary_outflow(fluxes, grid)
    mask = mixture.conserved_mask(ndim)
    # round-off of the update is relative to the fluxes moved, not to totals near zero
    scale = np.maximum(
        np.abs(field.cons).reshape(field.cons.shape[0], -1).sum(axis=1) * grid.cell_volume,
        dt * _flux_magnitude(fluxes, grid),
    )
    imbalance = totals_after - totals_before + dt * outflow
    with np.errstate(divide="ignore", invalid="ignore"):
        relative = np.where(scale > 0.0, np.abs(imbalance) / scale, np.abs(imbalance))

    report = StepReport(
        dt=dt,
        max_wave_speed=max_wave_speed(field),
        totals_before=totals_before,
        totals_after=totals_after,
        boundary_flux=outflow,
        conservation_residual=float(np.max(relative[mask])),
        residual=float(np.max(np.abs(cons - field.cons)) / dt),
        p_min=float(np.min(prim.p)),
    )
    if mixture.model is ModelKind.MASS_FRACTION:
        report.y_min = float(np.min(prim.y1))
        report.y_max = float(np.max(prim.y1))
    return updated, report


######################################################################
#  R U N
######################################################################
def run(
    case: CaseSpec,
    scheme: SchemeKind,
    cells: Optional[Tuple[int, ...]] = None,
    cfl: Optional[float] = None,
    t_end=CASE_DEFAULT,
    keep_history: bool = False,
    max_steps: Optional[int] = None,
    steady_tol: Optional[float] = None,
) -> RunResult:
    """March a case to its end time, or to a steady state

    ``t_end`` None forces a steady run. Steady runs stop once the residual
    max|U^{n+1} - U^n|/dt drops below ``steady_tol`` or after ``max_steps``
    steps; the latter is flagged in the result, not raised.
    """
    grid = case.grid(cells)
    cfl = case.cfl if cfl is None else cfl
    t_end = case.t_end if t_end is CASE_DEFAULT else t_end
    max_steps = config.STEADY_MAX_STEPS if max_steps is None else max_steps
    steady_tol = config.STEADY_TOL if steady_tol is None else steady_tol
    check_compatibility(scheme, case.mixture, grid.ndim)

    initial = sample_initial(case, grid)
    result = RunResult(
        case=case,
        scheme=scheme,
        grid=grid,
        initial=initial,
        final=initial,
        time=0.0,
        history=[initial] if keep_history else None,
    )
    logger.info(
        "Running %s with %s on %s cells (cfl=%s, t_end=%s)",
        case.name, scheme.value, "x".join(str(n) for n in grid.cells), cfl,
        "steady" if t_end is None else t_end,
    )

    current = initial
    time = 0.0
    while True:
        if t_end is not None and time >= t_end:
            break
        if t_end is None and result.steps >= max_steps:
            result.converged = False
            result.capped = True
            logger.warning("%s did not converge within %d steps", case.name, max_steps)
            break
        dt = compute_dt(current, grid, cfl)
        if t_end is not None and time + dt >= t_end:
            dt = t_end - time
        current, report = step(current, grid, scheme, dt)
        time = t_end if t_end is not None and time + dt >= t_end else time + dt
        result.reports.append(report)
        if keep_history:
            result.history.append(current)
        logger.debug("step %d t=%.6e dt=%.3e residual=%.3e", result.steps, time, dt, report.residual)
        if t_end is None and report.residual < steady_tol:
            break

    result.final = current
    result.time = time
    logger.info("%s finished after %d steps at t=%s", case.name, result.steps, time)
    return result
