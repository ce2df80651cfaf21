"""Test the bundled example runs end to end."""
from pathlib import Path

import numpy as np
import pytest

from convexshape.config import load_config
from convexshape.convexity import constraint_values, violation_threshold
from convexshape.export import asymmetry, rotational_defect
from convexshape.mesh import uniform_refine
from convexshape.optimize import OptTrace, StopReason, run

pytestmark = pytest.mark.slow

CONFIGS = Path(__file__).resolve().parent.parent / 'configs'


def _levels(name, cycles=None):
    """Optimize and refine like the driver does; returns (mesh, trace) per level"""
    config = load_config(CONFIGS / f'{name}.yaml')
    problem = config.problem_spec()
    mesh = config.initial_mesh()
    levels = []
    for level in range(cycles or config.cycles):
        if level:
            mesh = uniform_refine(mesh)
        mesh, trace = run(mesh, problem, config.algorithm, OptTrace(), config.hold_all)
        levels.append((mesh, trace))
    return config, levels


def test_quartic_source_reaches_stationarity():
    config, levels = _levels('example1', 3)
    objectives = []
    for mesh, trace in levels:
        assert trace.stop_reason == StopReason.STATIONARY, trace.diagnostic
        assert trace.iterations <= config.algorithm.max_outer
        objectives.append(trace.final_objective)
    assert all(a > b for a, b in zip(objectives, objectives[1:]))


def test_iterates_stay_convex():
    config, levels = _levels('example1', 2)
    sigma = config.algorithm.sigma
    for mesh, trace in levels:
        threshold = violation_threshold(mesh)
        for record in trace.records:
            assert record.max_constraint <= threshold
            if record.accepted:
                assert record.max_constraint_after <= threshold
                assert record.phi_accepted <= record.phi0 + sigma * record.step * record.slope
                assert record.quality.passed
                assert 0.5 <= record.quality.min_det and record.quality.max_det <= 2.0
                assert record.quality.max_norm <= 0.3
        assert constraint_values(mesh).max_value <= threshold


def test_five_fold_source_gives_five_fold_shape():
    _, levels = _levels('example2', 3)
    mesh, trace = levels[-1]
    assert trace.stop_reason not in (StopReason.STEP_FAILURE, StopReason.DESCENT_FAILURE, StopReason.QP_FAILURE)
    assert rotational_defect(mesh, 5) <= 0.05 * mesh.diameter


def test_cube_convexity_breaks_symmetry():
    _, convex = _levels('example3_convex', 2)
    _, free = _levels('example3_unconstrained', 2)
    convex_mesh, free_mesh = convex[-1][0], free[-1][0]
    assert asymmetry(convex_mesh) >= 2 * asymmetry(free_mesh)
    assert np.any(constraint_values(free_mesh).values > 0)
