import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import yaml

from ..deform import ElasticityParams, QpStrategy
from ..exception import ConfigError, ConvexShapeException
from ..fem import BoundaryCondition, ProblemSpec
from ..mesh import MAX_REFINEMENT_LEVEL, PrimitiveKind, SimplicialMesh, generate_primitive, load_mesh
from ..optimize import AlgorithmParams
from ..qp import QpSettings
from .const import (
    DEFAULT_CYCLES, DEFAULT_LEVEL_2D, DEFAULT_LEVEL_3D, DEFAULT_OUTPUT_DIRECTORY, DEFAULT_SEED, OUTPUT_FORMATS
)
from .examples import ExampleProblem, build_problem, example_problem
from .problem_kind import ProblemKind

_LOGGER = logging.getLogger(__name__)

_TOP_KEYS = {'problem', 'custom', 'mesh', 'cycles', 'algorithm', 'output', 'hold_all', 'seed'}
_CUSTOM_KEYS = {'f', 'j', 'bc', 'dim'}
_MESH_KEYS = {'primitive', 'level', 'file'}
_OUTPUT_KEYS = {'directory', 'formats'}
_ALGORITHM_KEYS = {'t0', 'beta', 'sigma', 'M', 'beta_M', 'eps_tol', 'max_outer', 'max_backtracks', 'state_tol',
                   'convexity', 'elasticity', 'qp'}
_ELASTICITY_KEYS = {'mu': 'mu', 'lambda': 'lam', 'delta': 'delta'}
_QP_KEYS = {'tol', 'max_iter', 'strategy', 'rho', 'alpha', 'sigma', 'scaling_iter', 'polish'}


@dataclass(frozen=True)
class MeshConfig:
    primitive: PrimitiveKind
    level: int = 0
    file: Optional[str] = None

    def build(self, base: Optional[Path] = None) -> SimplicialMesh:
        if self.file is not None:
            path = Path(self.file)
            if base is not None and not path.is_absolute():
                path = base / path
            return load_mesh(path.read_text())
        return generate_primitive(self.primitive, self.level)


@dataclass(frozen=True)
class OutputConfig:
    directory: str = DEFAULT_OUTPUT_DIRECTORY
    formats: Tuple[str, ...] = OUTPUT_FORMATS


@dataclass(frozen=True)
class RunConfig:
    problem: ProblemKind
    f: str
    j: str
    bc: BoundaryCondition
    dim: int
    mesh: MeshConfig
    cycles: int = DEFAULT_CYCLES
    algorithm: AlgorithmParams = field(default_factory=AlgorithmParams)
    output: OutputConfig = field(default_factory=OutputConfig)
    hold_all: Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]] = None
    seed: int = DEFAULT_SEED
    source: str = '<config>'

    def problem_spec(self) -> ProblemSpec:
        return build_problem(self.f, self.j, self.bc, self.dim)

    def initial_mesh(self) -> SimplicialMesh:
        base = Path(self.source).parent if self.source != '<config>' else None
        return self.mesh.build(base)

    def with_overrides(
        self,
        output_directory: Optional[str] = None,
        cycles: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> "RunConfig":
        config = self
        if output_directory is not None:
            config = replace(config, output=replace(config.output, directory=output_directory))
        if cycles is not None:
            if cycles < 1:
                raise ConfigError(self.source, f'levels must be at least 1, got {cycles}')
            config = replace(config, cycles=cycles)
        if seed is not None:
            config = replace(config, seed=seed)
        return config


def _section(data: Any, name: str, allowed: Sequence[str], path: str) -> Dict[str, Any]:
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(path, f"'{name}' must be a mapping")
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        plural = 's' if len(unknown) > 1 else ''
        raise ConfigError(path, f"unknown key{plural} in '{name}': {', '.join(map(str, unknown))}")
    return data


def _enum(cls, value: Any, name: str, path: str):
    try:
        return cls(value)
    except ValueError:
        choices = ', '.join(member.value for member in cls)
        raise ConfigError(path, f"'{name}' must be one of {choices}, got {value!r}") from None


def _number(value: Any, name: str, path: str, kind=float):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"'{name}' must be a number, got {value!r}")
    if kind is int and int(value) != value:
        raise ConfigError(path, f"'{name}' must be an integer, got {value!r}")
    return kind(value)


def _algorithm(data: Any, path: str) -> AlgorithmParams:
    section = _section(data, 'algorithm', _ALGORITHM_KEYS, path)
    kwargs: Dict[str, Any] = {}
    for key in ('t0', 'beta', 'sigma', 'M', 'beta_M', 'eps_tol', 'state_tol'):
        if key in section:
            kwargs[key] = _number(section[key], f'algorithm.{key}', path)
    for key in ('max_outer', 'max_backtracks'):
        if key in section:
            kwargs[key] = _number(section[key], f'algorithm.{key}', path, int)
    if 'convexity' in section:
        if not isinstance(section['convexity'], bool):
            raise ConfigError(path, "'algorithm.convexity' must be true or false")
        kwargs['convexity'] = section['convexity']

    if 'elasticity' in section:
        elasticity = _section(section['elasticity'], 'algorithm.elasticity', _ELASTICITY_KEYS, path)
        kwargs['elasticity'] = ElasticityParams(**{
            _ELASTICITY_KEYS[key]: _number(value, f'algorithm.elasticity.{key}', path)
            for key, value in elasticity.items()
        })

    if 'qp' in section:
        qp = dict(_section(section['qp'], 'algorithm.qp', _QP_KEYS, path))
        if 'strategy' in qp:
            kwargs['strategy'] = _enum(QpStrategy, qp.pop('strategy'), 'algorithm.qp.strategy', path)
        settings: Dict[str, Any] = {}
        for key, value in qp.items():
            if key == 'polish':
                settings[key] = bool(value)
            elif key in ('max_iter', 'scaling_iter'):
                settings[key] = _number(value, f'algorithm.qp.{key}', path, int)
            else:
                settings[key] = _number(value, f'algorithm.qp.{key}', path)
        kwargs['qp'] = QpSettings(**settings)

    return AlgorithmParams(**kwargs)


def _bounds(data: Any, dim: int, path: str) -> Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]]:
    if data is None:
        return None
    section = _section(data, 'hold_all', ('lower', 'upper'), path)
    try:
        lower = tuple(_number(v, 'hold_all.lower', path) for v in section['lower'])
        upper = tuple(_number(v, 'hold_all.upper', path) for v in section['upper'])
    except (KeyError, TypeError):
        raise ConfigError(path, "'hold_all' needs 'lower' and 'upper' lists") from None
    if len(lower) != dim or len(upper) != dim:
        raise ConfigError(path, f"'hold_all' bounds must have {dim} entries")
    if any(lo >= hi for lo, hi in zip(lower, upper)):
        raise ConfigError(path, "'hold_all' lower bounds must be below upper bounds")
    return lower, upper


def _problem(data: Dict[str, Any], path: str) -> Tuple[ProblemKind, str, str, BoundaryCondition, int, PrimitiveKind]:
    if 'problem' not in data:
        raise ConfigError(path, "missing required key 'problem'")
    kind = _enum(ProblemKind, data['problem'], 'problem', path)
    custom = _section(data.get('custom'), 'custom', _CUSTOM_KEYS, path)
    if kind != ProblemKind.CUSTOM:
        if custom:
            raise ConfigError(path, "'custom' is only allowed with problem: custom")
        example: ExampleProblem = example_problem(kind)
        return kind, example.f, example.j, example.bc, example.dim, example.primitive

    if 'f' not in custom or 'j' not in custom:
        raise ConfigError(path, "custom problems need 'f' and 'j'")
    bc = _enum(BoundaryCondition, custom.get('bc', BoundaryCondition.DIRICHLET_ZERO.value), 'custom.bc', path)
    dim = _number(custom.get('dim', 2), 'custom.dim', path, int)
    if dim not in (2, 3):
        raise ConfigError(path, f"'custom.dim' must be 2 or 3, got {dim}")
    primitive = PrimitiveKind.UNIT_DISK if dim == 2 else PrimitiveKind.UNIT_CUBE_CENTERED
    return kind, str(custom['f']), str(custom['j']), bc, dim, primitive


def _mesh(data: Any, primitive: PrimitiveKind, dim: int, path: str) -> MeshConfig:
    section = _section(data, 'mesh', _MESH_KEYS, path)
    if 'primitive' in section:
        primitive = _enum(PrimitiveKind, section['primitive'], 'mesh.primitive', path)
    if (primitive == PrimitiveKind.UNIT_CUBE_CENTERED) != (dim == 3):
        raise ConfigError(path, f"primitive {primitive.value} does not match a {dim}D problem")
    level = _number(section.get('level', DEFAULT_LEVEL_3D if dim == 3 else DEFAULT_LEVEL_2D), 'mesh.level', path, int)
    if not 0 <= level <= MAX_REFINEMENT_LEVEL:
        raise ConfigError(path, f"'mesh.level' must be in [0, {MAX_REFINEMENT_LEVEL}], got {level}")
    file = section.get('file')
    return MeshConfig(primitive, level, None if file is None else str(file))


def _output(data: Any, path: str) -> OutputConfig:
    section = _section(data, 'output', _OUTPUT_KEYS, path)
    formats = section.get('formats', list(OUTPUT_FORMATS))
    if not isinstance(formats, list) or any(f not in OUTPUT_FORMATS for f in formats):
        raise ConfigError(path, f"'output.formats' must be a list drawn from {', '.join(OUTPUT_FORMATS)}")
    return OutputConfig(str(section.get('directory', DEFAULT_OUTPUT_DIRECTORY)), tuple(formats))


def parse_config(data: Any, path: str = '<config>') -> RunConfig:
    """Validate a decoded YAML document and build the run configuration."""
    if not isinstance(data, dict):
        raise ConfigError(path, 'configuration must be a mapping')
    _section(data, 'top level', _TOP_KEYS, path)

    kind, f, j, bc, dim, primitive = _problem(data, path)
    cycles = _number(data.get('cycles', DEFAULT_CYCLES), 'cycles', path, int)
    if cycles < 1:
        raise ConfigError(path, f"'cycles' must be at least 1, got {cycles}")

    try:
        algorithm = _algorithm(data.get('algorithm'), path)
        if kind == ProblemKind.EXAMPLE3_UNCONSTRAINED:
            algorithm = replace(algorithm, convexity=False)
        config = RunConfig(
            problem=kind,
            f=f,
            j=j,
            bc=bc,
            dim=dim,
            mesh=_mesh(data.get('mesh'), primitive, dim, path),
            cycles=cycles,
            algorithm=algorithm,
            output=_output(data.get('output'), path),
            hold_all=_bounds(data.get('hold_all'), dim, path),
            seed=_number(data.get('seed', DEFAULT_SEED), 'seed', path, int),
            source=path,
        )
        # parse f and j now so that errors surface before a run starts
        config.problem_spec()
    except ConfigError:
        raise
    except ConvexShapeException as err:
        raise ConfigError(path, str(err)) from err

    _LOGGER.debug(f'Loaded {kind.value} configuration from {path}')
    return config


def load_config(path) -> RunConfig:
    path = str(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except OSError as err:
        raise ConfigError(path, f'cannot read file: {err.strerror}') from err
    except yaml.YAMLError as err:
        raise ConfigError(path, f'invalid YAML: {err}') from err
    return parse_config(data, path)
