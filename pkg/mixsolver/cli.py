"""
Command line interface

    python -m mixsolver run --case sod_unequal_gamma --scheme ricca --cells 100 --out sod.csv
    python -m mixsolver sweep --case sod_unequal_gamma --scheme ricca --scheme movers_plus \
        --cells 50 --cells 100 --out-dir sweep/ --jobs 4
    python -m mixsolver reference --case sod_unequal_gamma
    python -m mixsolver list-cases
    python -m mixsolver list-schemes
    python -m mixsolver show-case bubble_explosion_2d

Exit codes: 0 on success, 1 on a runtime failure, 2 on a usage error.
"""
import contextlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import click

from mixsolver import __version__, config
from mixsolver.cases import CaseSpec, case_names, get_case, load_case_config
from mixsolver.common import error_handlers, status, writers
from mixsolver.common.log_handlers import init_logging
from mixsolver.diagnostics import collect_metrics, generate_reference
from mixsolver.errors import DataValidationError, MixSolverError
from mixsolver.flux import SchemeKind
from mixsolver.solver import CASE_DEFAULT, run as run_case

logger = logging.getLogger("mixsolver")


######################################################################
#  P A R A M E T E R   T Y P E S
######################################################################
class CellsType(click.ParamType):
    """N for 1D or NXxNY for 2D"""

    name = "cells"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            cells = tuple(int(part) for part in str(value).lower().split("x"))
        except ValueError:
            self.fail(f"{value!r} is not N or NXxNY", param, ctx)
        if len(cells) not in (1, 2) or min(cells) < 1:
            self.fail(f"{value!r} is not N or NXxNY", param, ctx)
        return cells


class SliceType(click.ParamType):
    """y=VALUE"""

    name = "slice"

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            return value
        axis, _, coordinate = str(value).partition("=")
        if axis.strip() != "y":
            self.fail(f"{value!r} is not y=VALUE", param, ctx)
        try:
            return float(coordinate)
        except ValueError:
            self.fail(f"{value!r} is not y=VALUE", param, ctx)


CELLS = CellsType()
SLICE = SliceType()
SCHEMES = click.Choice(SchemeKind.names())


@dataclass
class RunConfig:
    """Everything a single run needs"""

    case: CaseSpec
    scheme: SchemeKind
    cells: Optional[Tuple[int, ...]] = None
    cfl: float = config.DEFAULT_CFL
    t_end: object = CASE_DEFAULT
    out: Optional[Path] = None
    output_format: str = "csv"
    slice_y: Optional[float] = None
    metrics: bool = False
    reference: bool = False
    ref_cache: str = config.REF_CACHE


@contextlib.contextmanager
def handled_errors():
    """Turns package and I/O errors into click exits with our exit codes"""
    try:
        yield
    except (MixSolverError, OSError) as error:
        code = error_handlers.handle_error(error)
        if code == status.EXIT_USAGE_ERROR:
            raise click.UsageError(str(error)) from error
        click.echo(f"Error: {error}", err=True)
        raise click.exceptions.Exit(code) from error


def _resolve_case(case_name: Optional[str], config_path: Optional[str]) -> CaseSpec:
    if (case_name is None) == (config_path is None):
        raise click.UsageError("Give exactly one of --case or --config")
    if config_path is not None:
        return load_case_config(config_path)
    return get_case(case_name)


######################################################################
#  C O M M A N D S
######################################################################
@click.group()
@click.version_option(__version__, prog_name="mixsolver")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
def cli(log_level):
    """Two-component compressible flow solver"""
    level = None if log_level is None else getattr(logging, log_level.upper(), None)
    init_logging("mixsolver", level)
    logger.debug(70 * "*")
    logger.debug("  M I X S O L V E R   %s  ".center(70, "*"), __version__)
    logger.debug(70 * "*")


def run_options(function):
    """Options shared by run and parse_args"""
    options = [
        click.option("--case", "case_name", help="Registered case name"),
        click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Case JSON file"),
        click.option("--scheme", type=SCHEMES, required=True),
        click.option("--cells", type=CELLS, default=None, help="N or NXxNY"),
        click.option("--cfl", type=float, default=None, help="Defaults to the case CFL"),
        click.option("--t-end", "t_end", type=float, default=None, help="Defaults to the case end time"),
        click.option("--out", type=click.Path(dir_okay=False), default=None),
        click.option("--format", "output_format", type=click.Choice(["csv", "vtk"]), default="csv"),
        click.option("--slice", "slice_y", type=SLICE, default=None, help="y=VALUE row of a 2D field"),
        click.option("--metrics", is_flag=True, default=False, help="Write a .metrics file"),
        click.option(
            "--reference", is_flag=True, default=False, help="L1 errors against the reference, implies --metrics"
        ),
        click.option("--ref-cache", default=None, help="Reference cache directory"),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def build_config(params: dict) -> RunConfig:
    """RunConfig from parsed options; case defaults fill what is missing"""
    case = _resolve_case(params.get("case_name"), params.get("config_path"))
    cfl = params.get("cfl")
    t_end = params.get("t_end")
    out = params.get("out")
    return RunConfig(
        case=case,
        scheme=SchemeKind(params["scheme"]),
        cells=params.get("cells"),
        cfl=case.cfl if cfl is None else cfl,
        t_end=CASE_DEFAULT if t_end is None else t_end,
        out=None if out is None else Path(out),
        output_format=params.get("output_format", "csv"),
        slice_y=params.get("slice_y"),
        metrics=bool(params.get("metrics") or params.get("reference")),
        reference=bool(params.get("reference")),
        ref_cache=params.get("ref_cache") or config.REF_CACHE,
    )


@dataclass
class SubcommandConfig:
    """A parsed command other than run; a sweep lists the runs it will make"""

    name: str
    params: dict
    runs: List[RunConfig] = field(default_factory=list)


def parse_args(args) -> Union[RunConfig, SubcommandConfig]:
    """Parses a command line without running it

    Options alone are read as the run command, so ``parse_args(["--case",
    ...])`` and ``parse_args(["run", "--case", ...])`` agree.
    """
    args = list(args)
    name = "run" if not args or args[0].startswith("-") else args.pop(0)
    command = cli.commands.get(name)
    if command is None:
        raise click.UsageError(f"No such command '{name}'")
    with command.make_context(name, args) as ctx:
        params = dict(ctx.params)
    if name == "run":
        return build_config(params)
    parsed = SubcommandConfig(name, params)
    if name == "sweep":
        case = _resolve_case(params["case_name"], params["config_path"])
        parsed.runs = [build_config(job) for job in _sweep_jobs(case, params)]
    return parsed


def execute(cfg: RunConfig):
    """Runs one configuration and writes its outputs"""
    if cfg.output_format == "vtk" and cfg.case.ndim != 2:
        raise DataValidationError("VTK output is only available for 2D cases")
    if cfg.out is not None and cfg.output_format == "csv" and cfg.case.ndim == 2 and cfg.slice_y is None:
        raise DataValidationError("CSV output of a 2D case needs --slice y=VALUE")

    result = run_case(cfg.case, cfg.scheme, cells=cfg.cells, cfl=cfg.cfl, t_end=cfg.t_end)
    if cfg.out is not None:
        if cfg.output_format == "vtk":
            writers.write_vtk(result.final, result.grid, cfg.out,
                              title=f"{cfg.case.name} {cfg.scheme.value} t={result.time!r}")
            if cfg.slice_y is not None:
                writers.write_csv(result.final, result.grid, cfg.out.with_suffix(".csv"), cfg.slice_y)
        else:
            writers.write_csv(result.final, result.grid, cfg.out, cfg.slice_y)

    metrics = None
    if cfg.metrics:
        reference = None
        if cfg.reference:
            reference = generate_reference(cfg.case, cache_dir=cfg.ref_cache, cfl=cfg.cfl, t_end=cfg.t_end)
        metrics = collect_metrics(result, reference)
        if cfg.out is not None:
            writers.write_metrics(metrics, cfg.out.with_suffix(".metrics"))
    return result, metrics


@cli.command()
@run_options
def run(**params):
    """Run one case with one scheme"""
    with handled_errors():
        cfg = build_config(params)
        result, metrics = execute(cfg)
        click.echo(
            f"{cfg.case.name} {cfg.scheme.value}: {result.steps} steps, t={result.time:.6g}"
            + (" (step cap reached)" if result.capped else "")
        )
        if metrics is not None and cfg.out is None:
            for key, value in metrics.serialize().items():
                click.echo(f"{key}={writers.NUMBER_FORMAT % (float('nan') if value is None else value)}")


def _sweep_jobs(case: CaseSpec, params: dict) -> List[dict]:
    """build_config parameters of every scheme and grid of a sweep"""
    jobs = []
    for scheme in params["schemes"]:
        for cells in params["cells_list"]:
            label = "x".join(str(n) for n in cells)
            jobs.append(
                {
                    "case_name": params["case_name"],
                    "config_path": params["config_path"],
                    "scheme": scheme,
                    "cells": cells,
                    "cfl": params["cfl"],
                    "t_end": params["t_end"],
                    "out": os.path.join(params["out_dir"], f"{case.name}_{scheme}_{label}.csv"),
                    "slice_y": params["slice_y"],
                    "metrics": params["metrics"],
                    "reference": params["reference"],
                    "ref_cache": params["ref_cache"],
                }
            )
    return jobs


def _sweep_job(job: dict) -> str:
    """Worker of the sweep command; runs in its own process"""
    init_logging("mixsolver", logging.WARNING)
    cfg = build_config(job)
    execute(cfg)
    return str(cfg.out)


@cli.command()
@click.option("--case", "case_name", help="Registered case name")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Case JSON file")
@click.option("--scheme", "schemes", type=SCHEMES, multiple=True, required=True)
@click.option("--cells", "cells_list", type=CELLS, multiple=True, required=True)
@click.option("--cfl", type=float, default=None)
@click.option("--t-end", "t_end", type=float, default=None)
@click.option("--out-dir", type=click.Path(file_okay=False), default=".")
@click.option("--slice", "slice_y", type=SLICE, default=None)
@click.option("--metrics", is_flag=True, default=False)
@click.option("--reference", is_flag=True, default=False, help="L1 errors against the reference, implies --metrics")
@click.option("--ref-cache", default=None, help="Reference cache directory")
@click.option("--jobs", type=click.IntRange(min=1), default=1)
def sweep(jobs, **params):
    """Run every scheme on every grid of one case"""
    with handled_errors():
        case = _resolve_case(params["case_name"], params["config_path"])
        if case.ndim == 2 and params["slice_y"] is None:
            raise DataValidationError("Sweeps of a 2D case need --slice y=VALUE")
        job_list = _sweep_jobs(case, params)
        if params["reference"]:
            # built once here so the workers only read the cache
            first = build_config(job_list[0])
            generate_reference(case, cache_dir=first.ref_cache, cfl=first.cfl, t_end=first.t_end)
        os.makedirs(params["out_dir"], exist_ok=True)
        if jobs == 1:
            outputs = [_sweep_job(job) for job in job_list]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                outputs = list(pool.map(_sweep_job, job_list))
        for output in outputs:
            click.echo(output)


@cli.command()
@click.option("--case", "case_list", multiple=True, required=True)
@click.option("--cells", type=click.IntRange(min=3), default=None)
@click.option("--cfl", type=float, default=None)
@click.option("--t-end", "t_end", type=float, default=None, help="Defaults to the case end time")
@click.option("--ref-cache", default=None)
def reference(case_list, cells, cfl, t_end, ref_cache):
    """Build fine-grid Rusanov references into the cache"""
    with handled_errors():
        for case_name in case_list:
            solution = generate_reference(
                case_name,
                cells=cells,
                cache_dir=ref_cache,
                cfl=cfl,
                t_end=CASE_DEFAULT if t_end is None else t_end,
            )
            click.echo(f"{solution.case_name}: {solution.cells} cells, cfl={solution.cfl}")


@cli.command("list-cases")
def list_cases():
    """Print the registered cases, one per line"""
    for name in case_names():
        click.echo(name)


@cli.command("list-schemes")
def list_schemes():
    """Print the available schemes, one per line"""
    for name in SchemeKind.names():
        click.echo(name)


@cli.command("show-case")
@click.argument("name")
def show_case(name):
    """Print a registered case as JSON, ready to edit and run with --config"""
    with handled_errors():
        click.echo(json.dumps(get_case(name).serialize(), indent=2))


def main():
    """Console entry point"""
    cli(prog_name="mixsolver")  # pylint: disable=no-value-for-parameter
