"""Initial meshes of the experiments"""

import logging
from typing import Union

import numpy as np

from ..exception import InvalidParameterError, UnsupportedOperationError
from .const import MAX_REFINEMENT_LEVEL
from .primitive_kind import PrimitiveKind
from .refinement import uniform_refine
from .simplicial_mesh import SimplicialMesh, orient_cells

_LOGGER = logging.getLogger(__name__)


def _unit_square() -> SimplicialMesh:
    vertices = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    cells = [(0, 1, 2), (0, 2, 3)]
    return SimplicialMesh(vertices, cells)


def _unit_disk() -> SimplicialMesh:
    """Center, a ring of 6 vertices at radius 1/2 and 12 vertices on the unit circle."""
    inner = 6
    outer = 2 * inner
    a_in = 2 * np.pi * np.arange(inner) / inner
    a_out = 2 * np.pi * np.arange(outer) / outer
    vertices = np.vstack([
        [[0.0, 0.0]],
        0.5 * np.column_stack([np.cos(a_in), np.sin(a_in)]),
        np.column_stack([np.cos(a_out), np.sin(a_out)]),
    ])

    def ring_in(k):
        return 1 + k % inner

    def ring_out(k):
        return 1 + inner + k % outer

    cells = []
    for k in range(inner):
        cells.append((0, ring_in(k), ring_in(k + 1)))
        cells.append((ring_in(k), ring_out(2 * k), ring_out(2 * k + 1)))
        cells.append((ring_in(k), ring_out(2 * k + 1), ring_in(k + 1)))
        cells.append((ring_in(k + 1), ring_out(2 * k + 1), ring_out(2 * k + 2)))
    return SimplicialMesh(vertices, cells)


def _unit_cube_centered() -> SimplicialMesh:
    """Kuhn decomposition of [-1/2, 1/2]^3 into 6 tetrahedra sharing the main diagonal."""
    vertices = np.array([[(v >> 0) & 1, (v >> 1) & 1, (v >> 2) & 1] for v in range(8)], dtype=float) - 0.5
    cells = [
        (0, 1, 3, 7),
        (0, 1, 5, 7),
        (0, 2, 3, 7),
        (0, 2, 6, 7),
        (0, 4, 5, 7),
        (0, 4, 6, 7),
    ]
    return SimplicialMesh(vertices, orient_cells(vertices, cells))


_BUILDERS = {
    PrimitiveKind.UNIT_SQUARE: _unit_square,
    PrimitiveKind.UNIT_DISK: _unit_disk,
    PrimitiveKind.UNIT_CUBE_CENTERED: _unit_cube_centered,
}


def reproject_to_circle(mesh: SimplicialMesh, radius: float = 1.0) -> SimplicialMesh:
    """Move the boundary vertices radially onto the circle of the given radius."""
    vertices = np.array(mesh.vertices)
    ids = mesh.boundary.boundary_vertices
    r = np.linalg.norm(vertices[ids], axis=1)
    vertices[ids] *= (radius / r)[:, None]
    return mesh.with_vertices(vertices)


def generate_primitive(kind: Union[PrimitiveKind, str], refinement_level: int = 0) -> SimplicialMesh:
    try:
        kind = PrimitiveKind(kind)
    except ValueError:
        raise UnsupportedOperationError(f'unknown primitive {kind!r}')
    if not 0 <= refinement_level <= MAX_REFINEMENT_LEVEL:
        raise InvalidParameterError(f'refinement level must be in [0, {MAX_REFINEMENT_LEVEL}], got {refinement_level}')

    mesh = _BUILDERS[kind]()
    for _ in range(refinement_level):
        mesh = uniform_refine(mesh)
        if kind == PrimitiveKind.UNIT_DISK:
            mesh = reproject_to_circle(mesh)
    _LOGGER.debug(f'Generated {kind.value} at level {refinement_level}: {mesh!r}')
    return mesh
