"""Test run configuration parsing, example problems and source formulas."""
import math
from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose

from convexshape.config import (
    ProblemKind, RunConfig, example_problem, five_fold_points, five_fold_source, load_config, parse_config,
    source_function
)
from convexshape.exception import ConfigError, DimensionMismatchError, InvalidParameterError
from convexshape.fem import BoundaryCondition
from convexshape.mesh import PrimitiveKind
from convexshape.qp import QpSettings

CONFIGS = Path(__file__).parent.parent / 'configs'


def _custom(**overrides):
    data = {'problem': 'custom', 'custom': {'f': '1', 'j': 'u'}, 'mesh': {'level': 0}, 'cycles': 1}
    data.update(overrides)
    return data


def test_five_fold_points():
    y, z = five_fold_points()
    assert y.shape == z.shape == (5, 2)
    assert_allclose(z[0], [0.0, 1.2], atol=1e-15)
    assert_allclose(y[0], [math.sin(math.pi / 5), math.cos(math.pi / 5)])
    assert_allclose(np.linalg.norm(y, axis=1), 1.0)
    assert_allclose(np.linalg.norm(z, axis=1), 1.2)
    with pytest.raises(InvalidParameterError):
        five_fold_points(0)


def test_five_fold_source_is_symmetric():
    f, _ = source_function(five_fold_source(), 2)
    points = np.array([[0.3, 0.5], [0.0, 0.8]])
    angle = 2 * math.pi / 5
    rotation = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    assert_allclose(f(points @ rotation.T), f(points), atol=1e-12)


def test_five_fold_bumps_sit_on_repelling_points():
    f, _ = source_function(five_fold_source(), 2)
    y, z = five_fold_points()
    # u grows with f: the raised y_i keep the boundary away, the lowered z_i draw it in
    assert f(y).min() > 2.0
    assert f(z).max() < 0.0


def test_source_function():
    f, grad = source_function('x1^2 + 3*x2', 2)
    points = np.array([[1.0, 2.0], [-0.5, 0.0]])
    assert_allclose(f(points), [7.0, 0.25])
    assert_allclose(grad(points), [[2.0, 3.0], [-1.0, 3.0]])
    assert_allclose(source_function('1', 2)[0](points), [1.0, 1.0])
    with pytest.raises(DimensionMismatchError):
        source_function('x3', 2)


def test_examples():
    first = example_problem(ProblemKind.EXAMPLE1)
    assert first.dim == 2
    assert first.bc == BoundaryCondition.DIRICHLET_ZERO
    third = example_problem(ProblemKind.EXAMPLE3_UNCONSTRAINED)
    assert third.dim == 3
    assert third.bc == BoundaryCondition.NEUMANN_REACTION
    assert not third.convexity
    assert example_problem(ProblemKind.EXAMPLE3_CONVEX).convexity
    with pytest.raises(InvalidParameterError):
        example_problem(ProblemKind.CUSTOM)


def test_parse_custom():
    config = parse_config(_custom(algorithm={'max_outer': 7, 'qp': {'strategy': 'reduced', 'tol': 1e-6}}))
    assert config.problem == ProblemKind.CUSTOM
    assert config.dim == 2
    assert config.mesh.primitive == PrimitiveKind.UNIT_DISK
    assert config.algorithm.max_outer == 7
    assert config.algorithm.qp == QpSettings(tol=1e-6)
    assert config.algorithm.strategy.value == 'reduced'
    assert config.initial_mesh().num_vertices == 19
    problem = config.problem_spec()
    assert problem.dim == 2


def test_parse_elasticity_names():
    config = parse_config(_custom(algorithm={'elasticity': {'mu': 2.0, 'lambda': 0.5, 'delta': 0.1}}))
    assert config.algorithm.elasticity.lam == 0.5
    assert config.algorithm.elasticity.mu == 2.0


@pytest.mark.parametrize('data, message', [
    (_custom(extra=1), "unknown key in 'top level': extra"),
    (_custom(algorithm={'tau': 1, 'gamma': 2}), "unknown keys in 'algorithm': gamma, tau"),
    ({'cycles': 1}, "missing required key 'problem'"),
    ({'problem': 'example4'}, "'problem' must be one of"),
    ({'problem': 'example1', 'custom': {'f': '1'}}, "'custom' is only allowed"),
    (_custom(cycles=0), "'cycles' must be at least 1"),
    (_custom(mesh={'level': 9}), "'mesh.level' must be in [0, 8]"),
    (_custom(mesh={'primitive': 'unit_cube_centered'}), 'does not match a 2D problem'),
    (_custom(custom={'f': '1 +', 'j': 'u'}), 'Expected a number'),
    (_custom(custom={'f': '1', 'j': 'u', 'dim': 4}), "'custom.dim' must be 2 or 3"),
    (_custom(algorithm={'beta': 2.0}), 'beta must be in (0, 1)'),
    (_custom(hold_all={'lower': [0, 0], 'upper': [1]}), "'hold_all' bounds must have 2 entries"),
    ([1, 2], 'configuration must be a mapping'),
])
def test_invalid_configs(data, message):
    with pytest.raises(ConfigError) as info:
        parse_config(data, 'bad.yaml')
    assert info.value.path == 'bad.yaml'
    assert message in info.value.message


def test_unconstrained_example_drops_convexity():
    config = parse_config({'problem': 'example3_unconstrained', 'algorithm': {'convexity': True}})
    assert not config.algorithm.convexity
    assert config.mesh.primitive == PrimitiveKind.UNIT_CUBE_CENTERED


def test_load_config(tmp_path):
    path = tmp_path / 'run.yaml'
    path.write_text('problem: custom\ncustom: {f: "x1", j: "u^2"}\nseed: 4\nhold_all: {lower: [-2, -2], upper: [2, 2]}\n')
    config = load_config(path)
    assert isinstance(config, RunConfig)
    assert config.seed == 4
    assert config.hold_all == ((-2.0, -2.0), (2.0, 2.0))
    assert config.source == str(path)


def test_load_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / 'missing.yaml')
    broken = tmp_path / 'broken.yaml'
    broken.write_text('problem: [custom\n')
    with pytest.raises(ConfigError) as info:
        load_config(broken)
    assert 'invalid YAML' in info.value.message


def test_mesh_file_is_relative_to_config(tmp_path):
    (tmp_path / 'square.mesh').write_text('2 4 2\n0 0\n1 0\n1 1\n0 1\n0 1 2\n0 2 3\n')
    path = tmp_path / 'run.yaml'
    path.write_text('problem: custom\ncustom: {f: "1", j: "u"}\nmesh: {file: square.mesh}\n')
    mesh = load_config(path).initial_mesh()
    assert mesh.num_cells == 2
    assert mesh.total_volume == pytest.approx(1.0)


def test_overrides():
    config = parse_config(_custom())
    changed = config.with_overrides('elsewhere', 2, 9)
    assert changed.output.directory == 'elsewhere'
    assert (changed.cycles, changed.seed) == (2, 9)
    assert config.with_overrides() == config
    with pytest.raises(ConfigError):
        config.with_overrides(cycles=0)


@pytest.mark.parametrize('path', sorted(CONFIGS.glob('*.yaml')), ids=lambda p: p.stem)
def test_shipped_configs_load(path):
    config = load_config(path)
    assert config.cycles >= 1
    assert config.problem_spec().dim == config.dim
