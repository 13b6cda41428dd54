"""
Diagnostics

Mass fraction bounds, pressure and velocity oscillation metrics, L1 errors
against fine-grid references, and the cached generation of those
references.
"""
import dataclasses
import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from mixsolver import __version__, config
from mixsolver.cases import CaseSpec, get_case
from mixsolver.common import writers
from mixsolver.errors import DataValidationError, ResolutionMismatchError
from mixsolver.flux import SchemeKind
from mixsolver.grid import Field, Grid
from mixsolver.state import ModelKind
from mixsolver.solver import CASE_DEFAULT, RunResult, run

logger = logging.getLogger("mixsolver")

# case entries that do not change a reference solution
DIGEST_IGNORED = ("description", "notes", "cells")


@dataclass
class Metrics:
    """Verification numbers of one run; None where a metric does not apply"""

    y_min: Optional[float] = None
    y_max: Optional[float] = None
    p_osc: Optional[float] = None
    u_osc: Optional[float] = None
    l1_rho: Optional[float] = None
    l1_p: Optional[float] = None
    cons_residual: Optional[float] = None

    def serialize(self) -> dict:
        """Serializes Metrics into a dictionary in the fixed key order"""
        return {key: getattr(self, key) for key in writers.METRIC_KEYS}


@dataclass
class ReferenceSolution:
    """Fine-grid solution stored as the columns of the CSV output format"""

    case_name: str
    scheme: SchemeKind
    cells: int
    cfl: float
    grid: Grid
    columns: Dict[str, np.ndarray]
    t_end: Optional[float] = None

    def variable(self, name: str) -> np.ndarray:
        """One column of the reference"""
        try:
            return self.columns[name]
        except KeyError:
            raise DataValidationError(
                f"Reference has no variable '{name}' (has {', '.join(self.columns)})"
            ) from None


######################################################################
#  M E T R I C S
######################################################################
def check_mass_fraction_bounds(history: Iterable[Field]) -> Tuple[float, float]:
    """Extremes of the raw (rho Y1)/rho over every cell of every field"""
    y_min, y_max = np.inf, -np.inf
    for field in history:
        if field.mixture.model is not ModelKind.MASS_FRACTION:
            raise DataValidationError("Mass fraction bounds need the mass fraction model")
        y1 = field.primitive.y1
        y_min = min(y_min, float(np.min(y1)))
        y_max = max(y_max, float(np.max(y1)))
    if not np.isfinite(y_min):
        raise DataValidationError("No fields to measure")
    return y_min, y_max


def pressure_oscillation_metric(field: Field, exact_p: float, exact_u) -> Tuple[float, float]:
    """Largest deviation of p and of the velocity from a uniform exact solution

    Both are normalised by max(|exact|, 1).
    """
    prim = field.primitive
    p_osc = float(np.max(np.abs(prim.p - exact_p)) / max(abs(exact_p), 1.0))
    exact_u = np.atleast_1d(np.asarray(exact_u, dtype=float))
    if exact_u.size == 1 and prim.ndim > 1:
        exact_u = np.full(prim.ndim, exact_u[0])
    deviation = np.sqrt(sum((v - e) ** 2 for v, e in zip(prim.velocity, exact_u)))
    u_osc = float(np.max(deviation) / max(float(np.linalg.norm(exact_u)), 1.0))
    return p_osc, u_osc


def field_variable(field: Field, name: str) -> np.ndarray:
    """A primitive variable by its CSV column name"""
    prim = field.primitive
    variables = {
        "rho": lambda: prim.rho,
        "u": lambda: prim.velocity[0],
        "v": lambda: prim.velocity[1],
        "p": lambda: prim.p,
        "Y": lambda: prim.y1,
        "gamma": lambda: prim.gamma,
        "p_inf": lambda: prim.p_inf,
    }
    if name not in variables or (name == "v" and prim.ndim < 2) or (
        name == "Y" and prim.y1 is None
    ):
        raise DataValidationError(f"Unknown variable '{name}'")
    return np.asarray(variables[name](), dtype=float)


def restrict(values: np.ndarray, cells: int) -> np.ndarray:
    """Cell averages of a fine 1D array on a coarser grid"""
    values = np.asarray(values, dtype=float)
    if cells <= 0 or values.size % cells:
        raise ResolutionMismatchError(
            f"A {values.size}-cell reference cannot be restricted onto {cells} cells"
        )
    return values.reshape(cells, values.size // cells).mean(axis=1)


def l1_error(field: Field, reference: ReferenceSolution, variable: str = "rho") -> float:
    """(1/N) sum |q_i - restricted reference q_i|"""
    if field.ndim != 1:
        raise ResolutionMismatchError("L1 errors are measured on 1D fields")
    values = field_variable(field, variable)
    coarse = restrict(reference.variable(variable), values.size)
    return float(np.mean(np.abs(values - coarse)))


######################################################################
#  R E F E R E N C E   S O L U T I O N S
######################################################################
def case_digest(case: CaseSpec) -> str:
    """Short hash of what the solution depends on: mixture, domain, states, end time"""
    data = {key: value for key, value in case.serialize().items() if key not in DIGEST_IGNORED}
    text = json.dumps(data, sort_keys=True)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def reference_path(
    case: CaseSpec, cells: int, cfl: float, cache_dir, scheme: SchemeKind = SchemeKind.RUSANOV
) -> str:
    """Cache file of a reference, keyed by case contents, scheme, cells, CFL and code version"""
    name = f"{case.name}_{scheme.value}_n{cells}_cfl{cfl!r}_{case_digest(case)}_v{__version__}.csv"
    return os.path.join(os.fspath(cache_dir), name)


def generate_reference(
    case,
    cells: Optional[int] = None,
    cache_dir=None,
    cfl: Optional[float] = None,
    scheme: SchemeKind = SchemeKind.RUSANOV,
    t_end=CASE_DEFAULT,
) -> ReferenceSolution:
    """Fine-grid Rusanov solution of a 1D case (name or CaseSpec), cached on disk

    ``t_end`` overrides the end time of the case, as ``run`` does.
    """
    case = get_case(case) if isinstance(case, str) else case
    if t_end is not CASE_DEFAULT:
        case = dataclasses.replace(case, t_end=t_end)
    if case.ndim != 1:
        raise DataValidationError("References are only generated for 1D cases")
    cells = config.REFERENCE_CELLS if cells is None else int(cells)
    cfl = case.cfl if cfl is None else float(cfl)
    cache_dir = config.REF_CACHE if cache_dir is None else cache_dir
    grid = case.grid((cells,))
    path = reference_path(case, cells, cfl, cache_dir, scheme)

    if os.path.exists(path):
        logger.info("Using cached reference %s", path)
        return ReferenceSolution(case.name, scheme, cells, cfl, grid, writers.read_csv(path), case.t_end)

    logger.info("Generating %s reference on %d cells", case.name, cells)
    result = run(case, scheme, cells=(cells,), cfl=cfl)
    columns = writers.field_columns(result.final, grid)
    os.makedirs(cache_dir, exist_ok=True)
    # single writer: write aside, then atomically move into place
    handle, temporary = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    os.close(handle)
    try:
        writers.write_columns(columns, temporary)
        os.replace(temporary, path)
    finally:
        if os.path.exists(temporary):
            os.remove(temporary)
    return ReferenceSolution(case.name, scheme, cells, cfl, grid, writers.read_csv(path), case.t_end)


def collect_metrics(result: RunResult, reference: Optional[ReferenceSolution] = None) -> Metrics:
    """Metrics of a finished run"""
    case: CaseSpec = result.case
    metrics = Metrics(cons_residual=result.conservation_residual)
    if case.mixture.model is ModelKind.MASS_FRACTION:
        fields = result.history if result.history else [result.initial, result.final]
        metrics.y_min, metrics.y_max = check_mass_fraction_bounds(fields)
        for report in result.reports:
            metrics.y_min = min(metrics.y_min, report.y_min)
            metrics.y_max = max(metrics.y_max, report.y_max)
    if case.exact_pressure is not None and case.exact_velocity is not None:
        metrics.p_osc, metrics.u_osc = pressure_oscillation_metric(
            result.final, case.exact_pressure, case.exact_velocity
        )
    if reference is not None:
        metrics.l1_rho = l1_error(result.final, reference, "rho")
        metrics.l1_p = l1_error(result.final, reference, "p")
    return metrics
