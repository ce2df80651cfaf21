"""Test the VTK, SVG, CSV and JSON writers."""
import json

import numpy as np
import pytest
from lxml import etree

from convexshape.exception import ExportError
from convexshape.export import (
    ExportFormat, LevelSummary, asymmetry, atomic_write, export_mesh, ramp_color, render_summary, render_svg,
    render_trace_csv, render_vtk, rotational_defect, shape_diagnostics
)
from convexshape.fem import ScalarFieldP1
from convexshape.mesh import PrimitiveKind, generate_primitive, load_mesh
from convexshape.optimize import TRACE_COLUMNS, IterationRecord, OptTrace, StopReason
from convexshape.qp import QpStatus


def _trace():
    trace = OptTrace()
    trace.append(IterationRecord(1, 0.5, 0.5, -2.0, 0.25, 2, -0.1, 1.5, 1e-9, QpStatus.SOLVED))
    trace.append(IterationRecord(2, 0.25, 0.25, None, None, None, -0.1, float('nan'), 1e-9, QpStatus.MAX_ITER))
    trace.stop(StopReason.QP_FAILURE, 'direction QP max iter')
    return trace


def test_vtk_square():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    text = render_vtk(mesh, {'u': np.arange(4.0)})
    lines = text.splitlines()
    assert lines[0] == '# vtk DataFile Version 3.0'
    assert 'POINTS 4 double' in lines
    assert 'CELLS 2 8' in lines
    assert lines[lines.index('CELL_TYPES 2') + 1:lines.index('CELL_TYPES 2') + 3] == ['5', '5']
    assert lines.count('SCALARS u double 1') == 1
    assert lines[-4:] == ['0', '1', '2', '3']
    assert lines[lines.index('POINTS 4 double') + 3] == '1 1 0'


def test_vtk_cube_and_field_checks():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED)
    text = render_vtk(mesh, {})
    assert 'CELLS 6 30' in text
    assert 'POINT_DATA' not in text
    assert text.splitlines()[-1] == '10'
    with pytest.raises(ExportError):
        render_vtk(mesh, {'u': np.zeros(3)})
    with pytest.raises(ExportError):
        render_vtk(mesh, {'bad name': np.zeros(8)})


def test_export_is_reproducible(tmp_path):
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    u = ScalarFieldP1.interpolate(mesh, lambda x: 1 - (x ** 2).sum(axis=1))
    export_mesh(mesh, {'u': u}, ExportFormat.VTK_LEGACY, tmp_path / 'a.vtk')
    export_mesh(mesh, {'u': u}, 'vtk_legacy', tmp_path / 'b.vtk')
    assert (tmp_path / 'a.vtk').read_bytes() == (tmp_path / 'b.vtk').read_bytes()


def test_native_export(tmp_path):
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    export_mesh(mesh, None, ExportFormat.NATIVE, tmp_path / 'disk.mesh')
    assert load_mesh((tmp_path / 'disk.mesh').read_text()).is_same(mesh)


def test_export_errors(tmp_path):
    square = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    with pytest.raises(ExportError):
        export_mesh(generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED), None, ExportFormat.SVG2D, tmp_path / 'c.svg')
    with pytest.raises(ExportError):
        export_mesh(square, None, 'obj', tmp_path / 'c.obj')
    other = ScalarFieldP1.interpolate(generate_primitive(PrimitiveKind.UNIT_SQUARE, 1), lambda x: x[:, 0])
    with pytest.raises(ExportError):
        export_mesh(square, {'u': other}, ExportFormat.VTK_LEGACY, tmp_path / 'c.vtk')
    assert not list(tmp_path.iterdir())


def test_svg():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 1)
    root = etree.fromstring(render_svg(mesh, mesh.vertices[:, 0]))
    ns = {'svg': 'http://www.w3.org/2000/svg'}
    polygons = root.findall('svg:g/svg:polygon', ns)
    assert len(polygons) == mesh.num_cells
    fills = {p.get('fill') for p in polygons}
    assert ramp_color(0.0) in fills
    assert root.find("svg:polygon[@id='boundary']", ns).get('points').count(',') == 8
    with pytest.raises(ExportError):
        render_svg(mesh, np.zeros(3))


def test_ramp_color():
    assert ramp_color(0.0) == '#2c7bb6'
    assert ramp_color(1.0) == '#d7191c'
    assert ramp_color(5.0) == ramp_color(1.0)


def test_trace_csv():
    lines = render_trace_csv(_trace()).splitlines()
    assert lines[0] == ','.join(TRACE_COLUMNS)
    assert lines[1] == '1,0.5,0.5,-2,0.25,2,-0.10000000000000001,1.5,1.0000000000000001e-09,solved'
    assert lines[2].split(',')[3:6] == ['', '', '']
    assert lines[2].split(',')[7] == ''
    assert len(lines) == 3


def test_summary():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    level = LevelSummary(0, mesh.num_vertices, mesh.num_cells, 3, 'stationary', 0.1, 1e-9, shape_diagnostics(mesh),
                         1.5)
    failed = LevelSummary(1, 10, 12, 0, None, float('inf'), None, None, 0.1, 'boom')
    data = json.loads(render_summary('custom', [level, failed], True, seed=3))
    assert data['failed'] is True
    assert data['seed'] == 3
    assert data['levels'][0]['diagnostics']['convex'] is True
    assert data['levels'][0]['stop_reason'] == 'stationary'
    assert data['levels'][1]['objective'] is None
    assert data['levels'][1]['error'] == 'boom'


def test_diagnostics():
    disk = generate_primitive(PrimitiveKind.UNIT_DISK, 2)
    report = shape_diagnostics(disk)
    assert report.convex
    assert report.diameter == pytest.approx(2.0)
    assert asymmetry(disk) < 1e-2
    # the boundary is a regular 48-gon
    assert rotational_defect(disk) > 1e-3
    assert rotational_defect(disk, 6) == pytest.approx(0.0, abs=1e-12)
    assert shape_diagnostics(generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED)).five_fold_defect is None


def test_atomic_write(tmp_path):
    target = tmp_path / 'nested' / 'out.txt'
    atomic_write(target, 'first')
    atomic_write(target, b'second')
    assert target.read_text() == 'second'
    assert [p.name for p in target.parent.iterdir()] == ['out.txt']
    blocker = tmp_path / 'file'
    blocker.write_text('x')
    with pytest.raises(ExportError):
        atomic_write(blocker / 'out.txt', 'data')
