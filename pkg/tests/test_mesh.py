"""Test mesh construction, I/O, refinement and deformation."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from convexshape.exception import (
    BoundaryTopologyError, DegenerateCellError, InvalidParameterError, MeshParseError, MeshQualityError,
    NonConformingMeshError, UnsupportedOperationError
)
from convexshape.mesh import (
    PrimitiveKind, SimplicialMesh, VectorFieldP1, apply_deformation, deformation_quality, dump_mesh,
    generate_primitive, load_mesh, uniform_refine
)

SQUARE_TEXT = """\
# unit square
2 4 2
0 0
1 0
1 1
0 1
0 1 2
0 2 3
"""


def identity_field(mesh):
    return VectorFieldP1.from_function(mesh, lambda x: x)


def test_load_square():
    mesh = load_mesh(SQUARE_TEXT)
    assert mesh.dim == 2
    assert mesh.num_cells == 2
    assert mesh.boundary.num_facets == 4
    assert mesh.total_volume == pytest.approx(1.0)


def test_load_reorients_clockwise_cell():
    mesh = load_mesh("2 3 1\n0 0\n1 0\n0 1\n0 2 1\n")
    assert mesh.signed_volumes[0] == pytest.approx(0.5)
    assert sorted(mesh.cells[0]) == [0, 1, 2]


def test_load_rejects_facet_in_three_cells():
    text = "2 5 3\n0 0\n1 0\n0 1\n0 -1\n0.5 2\n0 1 2\n0 1 3\n0 1 4\n"
    with pytest.raises(NonConformingMeshError):
        load_mesh(text)


def test_load_reports_position():
    with pytest.raises(MeshParseError) as info:
        load_mesh("2 3 1\n0 0\n1 x\n0 1\n0 1 2\n")
    assert info.value.line == 3
    assert info.value.column == 3


def test_load_rejects_truncated_file():
    with pytest.raises(MeshParseError):
        load_mesh("2 3 1\n0 0\n1 0\n")


def test_load_rejects_out_of_range_index():
    with pytest.raises(MeshParseError):
        load_mesh("2 3 1\n0 0\n1 0\n0 1\n0 1 3\n")


def test_load_rejects_degenerate_cell():
    with pytest.raises(DegenerateCellError):
        load_mesh("2 3 1\n0 0\n1 0\n2 0\n0 1 2\n")


def test_dump_round_trip():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    again = load_mesh(dump_mesh(mesh))
    assert_array_equal(again.vertices, mesh.vertices)
    assert_array_equal(again.cells, mesh.cells)


def test_unit_square_primitive():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 0)
    assert mesh.num_cells == 2
    assert mesh.total_volume == pytest.approx(1.0)


def test_unit_cube_primitive():
    mesh = generate_primitive('unit_cube_centered', 0)
    assert mesh.num_cells == 6
    assert mesh.total_volume == pytest.approx(1.0, abs=1e-15)
    lower, upper = mesh.bounds
    assert_allclose(lower, -0.5)
    assert_allclose(upper, 0.5)


def test_disk_area_converges():
    deficits = []
    for level in range(4):
        mesh = generate_primitive(PrimitiveKind.UNIT_DISK, level)
        n = mesh.boundary.num_boundary_vertices
        assert n == 12 * 2 ** level
        assert mesh.total_volume == pytest.approx(0.5 * n * math.sin(2 * math.pi / n), abs=1e-12)
        h = 2 * math.sin(math.pi / n)
        deficit = math.pi - mesh.total_volume
        assert 0 < deficit <= h ** 2
        deficits.append(deficit)
    assert deficits == sorted(deficits, reverse=True)


def test_disk_boundary_on_circle():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 3)
    radii = np.linalg.norm(mesh.vertices[mesh.boundary.loop], axis=1)
    assert_allclose(radii, 1.0, atol=1e-12)


def test_primitive_errors():
    with pytest.raises(UnsupportedOperationError):
        generate_primitive('unit_torus')
    with pytest.raises(InvalidParameterError):
        generate_primitive(PrimitiveKind.UNIT_SQUARE, 9)


def test_square_boundary():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    boundary = mesh.boundary
    assert_array_equal(boundary.loop, [0, 1, 2, 3])
    expected = {(0.0, -1.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)}
    assert {tuple(np.round(n, 12) + 0.0) for n in boundary.facet_normals} == expected
    assert boundary.boundary_index.inverse[2] == 2


@pytest.mark.parametrize('kind, level', [
    (PrimitiveKind.UNIT_SQUARE, 2),
    (PrimitiveKind.UNIT_DISK, 2),
    (PrimitiveKind.UNIT_CUBE_CENTERED, 1),
])
def test_normals_close_up(kind, level):
    boundary = generate_primitive(kind, level).boundary
    total = (boundary.facet_measures[:, None] * boundary.facet_normals).sum(axis=0)
    assert_allclose(total, 0.0, atol=1e-12)
    assert_allclose(np.linalg.norm(boundary.facet_normals, axis=1), 1.0)


def test_normals_point_outward():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED, 1)
    boundary = mesh.boundary
    centers = mesh.vertices[boundary.facets].mean(axis=1)
    cell_centers = mesh.vertices[mesh.cells[boundary.facet_cells]].mean(axis=1)
    assert np.all(np.einsum('ij,ij->i', centers - cell_centers, boundary.facet_normals) > 0)


def test_cube_boundary():
    boundary = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED).boundary
    assert boundary.num_facets == 12
    assert boundary.loop is None
    assert_allclose(np.abs(boundary.facet_normals).max(axis=1), 1.0)
    assert_allclose(np.abs(boundary.facet_normals).sum(axis=1), 1.0)
    assert boundary.outer_edges.shape == (18, 4)


def test_annulus_is_rejected():
    outer = [(-2, -2), (2, -2), (2, 2), (-2, 2)]
    inner = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    cells = []
    for k in range(4):
        o0, o1, i0, i1 = k, (k + 1) % 4, 4 + k, 4 + (k + 1) % 4
        cells += [(o0, o1, i1), (o0, i1, i0)]
    mesh = SimplicialMesh(outer + inner, cells)
    with pytest.raises(BoundaryTopologyError):
        mesh.boundary


def test_refine_square():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    fine = uniform_refine(mesh)
    assert fine.num_cells == 8
    assert fine.num_vertices == 4 + 5
    assert fine.total_volume == pytest.approx(1.0)
    assert np.all(fine.signed_volumes > 0)
    fine.validate()


def test_refine_vertex_count():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK)
    fine = uniform_refine(mesh)
    edges = mesh.num_vertices + mesh.num_cells - 1
    assert fine.num_vertices == mesh.num_vertices + edges
    assert fine.num_cells == 4 * mesh.num_cells


def test_refine_cube():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED)
    fine = uniform_refine(mesh)
    assert fine.num_cells == 48
    assert fine.total_volume == pytest.approx(1.0)
    assert np.all(fine.signed_volumes > 0)
    fine.validate()
    assert fine.boundary.num_facets == 48


def _cut_pairs(cells):
    """Per cell, the vertex pairs {0, 2} and {1, 3}; their midpoints span the next octahedron cut"""
    return {frozenset([frozenset((c[0], c[2])), frozenset((c[1], c[3]))]) for c in cells}


def test_refined_tetrahedra_keep_local_order():
    mesh = SimplicialMesh([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 2, 3)])
    fine = uniform_refine(mesh)

    def at(*point):
        return int(np.flatnonzero(np.all(np.isclose(fine.vertices, point), axis=1))[0])

    x01, x02, x03 = at(0.5, 0, 0), at(0, 0.5, 0), at(0, 0, 0.5)
    x12, x13, x23 = at(0.5, 0.5, 0), at(0.5, 0, 0.5), at(0, 0.5, 0.5)
    bey = [
        (0, x01, x02, x03), (x01, 1, x12, x13), (x02, x12, 2, x23), (x03, x13, x23, 3),
        (x01, x02, x03, x13), (x01, x02, x12, x13), (x02, x03, x13, x23), (x02, x12, x13, x23),
    ]
    assert np.all(fine.signed_volumes > 0)
    assert [tuple(c) for c in fine.cells.tolist()[:4]] == bey[:4]
    assert _cut_pairs(fine.cells.tolist()) == _cut_pairs(bey)
    # every octahedral child contains the x02-x13 diagonal
    assert all({x02, x13} <= set(c) for c in fine.cells.tolist()[4:])

    twice = uniform_refine(fine)
    assert np.all(twice.signed_volumes > 0)
    assert twice.total_volume == pytest.approx(1 / 6)


def test_refined_loop_keeps_order():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK)
    fine = uniform_refine(mesh)
    assert_array_equal(fine.boundary.loop[::2], mesh.boundary.loop)


def test_deformation_identity_step():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    assert apply_deformation(mesh, identity_field(mesh), 0.0) is mesh


def test_translation_keeps_volumes():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    V = VectorFieldP1.from_function(mesh, lambda x: np.array([0.3, -0.2]))
    moved = apply_deformation(mesh, V, 1.0)
    assert_allclose(moved.volumes, mesh.volumes, rtol=1e-12)
    assert_allclose(moved.vertices, mesh.vertices + [0.3, -0.2])


def test_homothety():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 1)
    moved = apply_deformation(mesh, identity_field(mesh), 0.1)
    assert_allclose(moved.vertices, 1.1 * mesh.vertices)
    assert_allclose(moved.volumes, 1.21 * mesh.volumes)
    assert_array_equal(moved.cells, mesh.cells)


def test_quality_report():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 1)
    V = identity_field(mesh)

    report = deformation_quality(mesh, V, 0.0)
    assert (report.min_det, report.max_det, report.max_norm, report.passed) == (1.0, 1.0, 0.0, True)

    report = deformation_quality(mesh, V, 0.2)
    assert report.min_det == pytest.approx(1.44)
    assert report.max_norm == pytest.approx(0.2)
    assert report.passed

    report = deformation_quality(mesh, V, 1.0)
    assert report.max_det == pytest.approx(4.0)
    assert not report.passed


def test_apply_deformation_refuses_bad_step():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    with pytest.raises(MeshQualityError):
        apply_deformation(mesh, identity_field(mesh), 1.0)


def test_vector_field_jacobian_of_linear_map():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED, 1)
    B = np.array([[1.0, 2.0, 0.0], [0.0, -1.0, 3.0], [0.5, 0.0, 2.0]])
    V = VectorFieldP1.from_function(mesh, lambda x: x @ B.T)
    assert_allclose(V.jacobians(), np.broadcast_to(B, (mesh.num_cells, 3, 3)), atol=1e-12)
    assert_allclose(V.divergence(), np.trace(B), atol=1e-12)
