"""
Native mesh text format.

    dim nv nc
    nv lines of dim reals
    nc lines of dim+1 zero-based vertex indices

Lines starting with '#' and blank lines are ignored.
"""

import logging
from typing import Iterator, List, Tuple

import numpy as np

from ..exception import MeshParseError
from .simplicial_mesh import SimplicialMesh, orient_cells

_LOGGER = logging.getLogger(__name__)

# (line number, [(column, token), ...])
_Line = Tuple[int, List[Tuple[int, str]]]


def _tokenize(text: str) -> Iterator[_Line]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = []
        column = 0
        for token in raw.split():
            column = raw.index(token, column)
            tokens.append((column + 1, token))
            column += len(token)
        yield lineno, tokens


def _convert(lineno: int, column: int, token: str, kind: type, what: str):
    try:
        return kind(token)
    except ValueError:
        raise MeshParseError(lineno, column, f"expected {what}, found '{token}'")


def _read_row(lines: Iterator[_Line], count: int, kind: type, what: str, last: _Line) -> Tuple[list, _Line]:
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise MeshParseError(last[0] + 1, 1, f'unexpected end of file, expected {count} {what}s')
    if len(tokens) != count:
        column = tokens[count][0] if len(tokens) > count else tokens[-1][0] + len(tokens[-1][1])
        raise MeshParseError(lineno, column, f'expected {count} {what}s, found {len(tokens)}')
    return [_convert(lineno, c, t, kind, what) for c, t in tokens], (lineno, tokens)


def load_mesh(text: str) -> SimplicialMesh:
    """Parse mesh text; negatively oriented cells are reordered, the result is validated."""
    lines = _tokenize(text)
    header, last = _read_row(lines, 3, int, 'integer', (0, []))
    dim, nv, nc = header
    if dim not in (2, 3):
        raise MeshParseError(last[0], last[1][0][0], f'dimension must be 2 or 3, found {dim}')
    if nv <= 0 or nc <= 0:
        raise MeshParseError(last[0], last[1][1][0], 'vertex and cell counts must be positive')

    vertices = np.empty((nv, dim))
    for i in range(nv):
        row, last = _read_row(lines, dim, float, 'real', last)
        vertices[i] = row

    cells = np.empty((nc, dim + 1), dtype=np.int64)
    for i in range(nc):
        row, last = _read_row(lines, dim + 1, int, 'integer', last)
        for (column, _), index in zip(last[1], row):
            if not 0 <= index < nv:
                raise MeshParseError(last[0], column, f'vertex index {index} out of range [0, {nv})')
        cells[i] = row

    extra = next(lines, None)
    if extra is not None:
        raise MeshParseError(extra[0], extra[1][0][0], 'unexpected data after the last cell')

    mesh = SimplicialMesh(vertices, orient_cells(vertices, cells))
    _LOGGER.debug(f'Loaded {mesh!r}')
    return mesh


def dump_mesh(mesh: SimplicialMesh) -> str:
    """Native text with 17 significant digits, the round-trip partner of load_mesh."""
    out = [f'{mesh.dim} {mesh.num_vertices} {mesh.num_cells}']
    out.extend(' '.join(f'{x:.17g}' for x in row) for row in mesh.vertices)
    out.extend(' '.join(str(int(i)) for i in row) for row in mesh.cells)
    return '\n'.join(out) + '\n'
