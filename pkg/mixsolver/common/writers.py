"""
Output writers

CSV tables of cell values (1D fields or a row of a 2D field), legacy
ASCII VTK structured points for 2D fields, and key=value metric files.
Numbers are printed with 17 significant digits so files reproduce
doubles exactly.
"""
import logging
import os
from typing import Dict, Optional

import numpy as np

from mixsolver.errors import DataValidationError
from mixsolver.grid import Field, Grid
from mixsolver.state import ModelKind

logger = logging.getLogger("mixsolver")

NUMBER_FORMAT = "%.16e"
METRIC_KEYS = ("y_min", "y_max", "p_osc", "u_osc", "l1_rho", "l1_p", "cons_residual")


def _ensure_directory(path) -> str:
    filepath = os.path.abspath(os.path.expanduser(os.fspath(path)))
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    return filepath


def slice_index(grid: Grid, y: float) -> int:
    """Row of cells whose centers are nearest y

    A y half-way between two rows selects the upper one, so y = 0.5 on an
    even grid gives row n/2.
    """
    if grid.ndim != 2:
        raise DataValidationError("Slices are only defined on 2D grids")
    distance = np.abs(grid.centers(1) - y)
    nearest = np.flatnonzero(distance <= distance.min() + 1.0e-12 * grid.spacing[1])
    return int(nearest[-1])


def field_columns(field: Field, grid: Grid, slice_y: Optional[float] = None) -> Dict[str, np.ndarray]:
    """Named columns in output order"""
    prim = field.primitive
    if grid.ndim == 2:
        if slice_y is None:
            raise DataValidationError("A 2D field needs a slice (y=VALUE) to be written as CSV")
        row = slice_index(grid, slice_y)

        def pick(values):
            return np.asarray(values)[:, row]

    else:

        def pick(values):
            return np.asarray(values)

    columns = {
        "x": grid.centers(0),
        "rho": pick(prim.rho),
        "u": pick(prim.velocity[0]),
    }
    if grid.ndim == 2:
        columns["v"] = pick(prim.velocity[1])
    columns["p"] = pick(prim.p)
    if field.mixture.model is ModelKind.MASS_FRACTION:
        columns["Y"] = pick(prim.y1)
    else:
        columns["gamma"] = pick(prim.gamma)
        columns["p_inf"] = pick(prim.p_inf)
    return columns


def write_columns(columns: Dict[str, np.ndarray], path) -> None:
    """Writes named columns as a CSV table"""
    filepath = _ensure_directory(path)
    table = np.column_stack([np.asarray(v, dtype=float) for v in columns.values()])
    np.savetxt(
        filepath, table, fmt=NUMBER_FORMAT, delimiter=",", header=",".join(columns), comments=""
    )


def write_csv(field: Field, grid: Grid, path, slice_y: Optional[float] = None) -> None:
    """Writes a 1D field, or the row of a 2D field nearest slice_y, as CSV"""
    write_columns(field_columns(field, grid, slice_y), path)
    logger.info("Wrote %s", path)


def read_csv(path) -> Dict[str, np.ndarray]:
    """Reads a CSV table written by write_columns"""
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().strip().split(",")
        table = np.loadtxt(handle, delimiter=",", ndmin=2)
    return {name: table[:, i] for i, name in enumerate(header)}


def write_vtk(field: Field, grid: Grid, path, title: str = "mixsolver output") -> None:
    """Writes a 2D field as legacy ASCII VTK structured points with cell data"""
    if grid.ndim != 2:
        raise DataValidationError("VTK output is only available for 2D fields")
    prim = field.primitive
    arrays = [
        ("rho", prim.rho),
        ("p", prim.p),
        ("u", prim.velocity[0]),
        ("v", prim.velocity[1]),
    ]
    if field.mixture.model is ModelKind.MASS_FRACTION:
        arrays.append(("Y", prim.y1))
    else:
        arrays.append(("gamma", prim.gamma))

    nx, ny = grid.cells
    dx, dy = grid.spacing
    filepath = _ensure_directory(path)
    with open(filepath, "w", encoding="utf-8") as handle:
        handle.write("# vtk DataFile Version 3.0\n")
        handle.write(title.replace("\n", " ")[:255] + "\n")
        handle.write("ASCII\nDATASET STRUCTURED_POINTS\n")
        handle.write(f"DIMENSIONS {nx + 1} {ny + 1} 1\n")
        handle.write(f"ORIGIN {grid.lower[0]!r} {grid.lower[1]!r} 0.0\n")
        handle.write(f"SPACING {dx!r} {dy!r} 1.0\n")
        handle.write(f"CELL_DATA {nx * ny}\n")
        for name, values in arrays:
            handle.write(f"SCALARS {name} double 1\nLOOKUP_TABLE default\n")
            # x varies fastest
            for value in np.asarray(values, dtype=float).ravel(order="F"):
                handle.write(NUMBER_FORMAT % value + "\n")
    logger.info("Wrote %s", path)


def write_metrics(metrics, path) -> None:
    """Writes metrics as key=value lines in a fixed key order"""
    filepath = _ensure_directory(path)
    values = metrics.serialize()
    with open(filepath, "w", encoding="utf-8") as handle:
        for key in METRIC_KEYS:
            value = values.get(key)
            value = float("nan") if value is None else float(value)
            handle.write(f"{key}={NUMBER_FORMAT % value}\n")
    logger.info("Wrote %s", path)


def read_metrics(path) -> Dict[str, float]:
    """Reads a key=value metrics file"""
    values = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                key, _, value = line.partition("=")
                values[key] = float(value)
    return values
