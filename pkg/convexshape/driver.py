"""
Runs the optimize/refine cycles of one configuration and writes every level's artifacts.
"""

import logging
import time
from pathlib import Path
from typing import List

import humanize
import numpy as np

from .config import RunConfig
from .exception import ConvexShapeException
from .export import (
    FAILED_MARKER, SUMMARY_FILE, ExportFormat, LevelSummary, atomic_write, export_mesh, shape_diagnostics,
    write_summary, write_trace_csv
)
from .fem import solve_state
from .mesh import SimplicialMesh, uniform_refine
from .optimize import OptTrace, StopReason, run

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_FAILURE = 2

_FAILURE_REASONS = (StopReason.STEP_FAILURE, StopReason.DESCENT_FAILURE, StopReason.QP_FAILURE)

# numerical failures inside scipy and numpy abort a level the same way package errors do
_LEVEL_ERRORS = (ConvexShapeException, ArithmeticError, RuntimeError, np.linalg.LinAlgError)


def check_config(config: RunConfig) -> float:
    """Build the problem and initial mesh and check the integrand partials; returns the max FD deviation."""
    problem = config.problem_spec()
    mesh = config.initial_mesh()
    problem.check_mesh(mesh)
    deviation = problem.integrand.check_consistency(np.random.default_rng(config.seed))
    _LOGGER.info(f'{config.source}: {config.problem.stringify()} on {humanize.intcomma(mesh.num_cells)} cells, '
                 f'{config.cycles} cycles; integrand partials agree to {deviation:.1e}')
    return deviation


def _write_level(config: RunConfig, out: Path, level: int, mesh: SimplicialMesh, trace: OptTrace, state_values):
    formats = config.output.formats
    stem = f'level_{level}'
    if 'vtk' in formats:
        fields = {'u': state_values} if state_values is not None else {}
        export_mesh(mesh, fields, ExportFormat.VTK_LEGACY, out / f'{stem}.vtk')
    if 'svg' in formats and mesh.dim == 2:
        export_mesh(mesh, {'u': state_values} if state_values is not None else {}, ExportFormat.SVG2D,
                    out / f'{stem}.svg')
    if 'csv' in formats:
        write_trace_csv(trace, out / f'{stem}_trace.csv')


def _mark_failed(out: Path, level: int, message: str):
    atomic_write(out / FAILED_MARKER, f'level {level}: {message}\n')


def _describe(err: Exception) -> str:
    return str(err) if isinstance(err, ConvexShapeException) else f'{type(err).__name__}: {err}'


def run_config(config: RunConfig) -> int:
    """Optimize, export and refine for config.cycles levels. Returns the process exit status."""
    out = Path(config.output.directory)
    problem = config.problem_spec()
    mesh = config.initial_mesh()
    summaries: List[LevelSummary] = []
    failed = False
    started = time.monotonic()

    def summarize(level, mesh, trace, elapsed, error=None, diagnostics=None):
        summaries.append(LevelSummary(
            level=level,
            num_vertices=mesh.num_vertices,
            num_cells=mesh.num_cells,
            iterations=trace.iterations,
            stop_reason=trace.stop_reason.value if trace.stop_reason else None,
            objective=trace.final_objective,
            penalty=trace.final_penalty,
            diagnostics=diagnostics,
            elapsed=elapsed,
            error=error,
        ))

    for level in range(config.cycles):
        trace = OptTrace()
        level_start = time.monotonic()
        try:
            if level:
                mesh = uniform_refine(mesh)
            _LOGGER.info(f'Level {level}: {humanize.intcomma(mesh.num_vertices)} vertices, '
                         f'{humanize.intcomma(mesh.num_cells)} cells')
            mesh, trace = run(mesh, problem, config.algorithm, trace, config.hold_all)
            state = solve_state(mesh, problem, config.algorithm.state_tol)
            diagnostics = shape_diagnostics(mesh)
            _write_level(config, out, level, mesh, trace, state.values)
        except _LEVEL_ERRORS as err:
            _LOGGER.exception(f'Level {level} aborted')
            message = _describe(err)
            try:
                _mark_failed(out, level, message)
                _write_level(config, out, level, mesh, trace, None)
            except _LEVEL_ERRORS:
                _LOGGER.error(f'Could not write the partial artifacts of level {level}')
            summarize(level, mesh, trace, time.monotonic() - level_start, error=message)
            failed = True
            break

        elapsed = time.monotonic() - level_start
        summarize(level, mesh, trace, elapsed, diagnostics=diagnostics)
        _LOGGER.info(f'Level {level} finished in {humanize.naturaldelta(elapsed)}: {trace.stop_reason.stringify()} '
                     f'after {trace.iterations} steps, J = {trace.final_objective:.10g}, '
                     f'max C = {diagnostics.max_constraint:.3e}{"" if diagnostics.convex else " (non-convex)"}')
        if trace.stop_reason in _FAILURE_REASONS:
            _LOGGER.error(f'Level {level} stopped early: {trace.diagnostic}')
            _mark_failed(out, level, trace.diagnostic)
            failed = True
            break

    try:
        write_summary(out / SUMMARY_FILE, config.problem.value, summaries, failed, seed=config.seed,
                      f=config.f, j=config.j, bc=config.bc.value)
    except ConvexShapeException:
        _LOGGER.exception('Could not write the run summary')
        return EXIT_RUNTIME_FAILURE

    _LOGGER.info(f'Run {"failed" if failed else "finished"} after {humanize.naturaldelta(time.monotonic() - started)}; '
                 f'artifacts in {out}')
    return EXIT_RUNTIME_FAILURE if failed else EXIT_OK
