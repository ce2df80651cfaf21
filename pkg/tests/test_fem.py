"""Test P1 assembly, quadrature, the state solver and its convergence."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from convexshape.exception import DimensionMismatchError, IntegrandEvaluationError, SolverConvergenceError
from convexshape.fem import (
    BoundaryCondition, ProblemSpec, ScalarFieldP1, SparseSymmetricOperator, assemble_load, assemble_mass,
    assemble_stiffness, cg_solve, h1_seminorm_error, integrate, l2_error, local_mass, local_stiffness,
    quadrature_points, solve_state
)
from convexshape.mesh import PrimitiveKind, SimplicialMesh, generate_primitive
from convexshape.shapecalc import Integrand

PI = np.pi


def _sine(x):
    return np.sin(PI * x[:, 0]) * np.sin(PI * x[:, 1])


def _sine_grad(x):
    return PI * np.column_stack([
        np.cos(PI * x[:, 0]) * np.sin(PI * x[:, 1]),
        np.sin(PI * x[:, 0]) * np.cos(PI * x[:, 1]),
    ])


def _cosine(x):
    return np.cos(PI * x[:, 0]) * np.cos(PI * x[:, 1])


def _problem(rhs, bc=BoundaryCondition.DIRICHLET_ZERO, dim=2):
    return ProblemSpec(rhs=rhs, integrand=Integrand.from_expression('u', dim), bc=bc, dim=dim)


@pytest.mark.parametrize('kind', list(PrimitiveKind))
def test_assembly_identities(kind):
    mesh = generate_primitive(kind, 1)
    K = assemble_stiffness(mesh)
    M = assemble_mass(mesh)
    ones = np.ones(mesh.num_vertices)

    assert K.is_symmetric()
    assert M.is_symmetric()
    assert_allclose(K @ ones, 0.0, atol=1e-12)
    assert M.quadratic_form(ones) == pytest.approx(mesh.total_volume)
    assert assemble_load(mesh, lambda x: np.ones(len(x))).sum() == pytest.approx(mesh.total_volume)


def test_stiffness_energy_of_linear_function():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 2)
    K = assemble_stiffness(mesh)
    u = 2 * mesh.vertices[:, 0] - mesh.vertices[:, 1]
    assert K.quadratic_form(u) == pytest.approx(5.0)


def test_quadrature_is_exact_for_quadratics():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 1)
    points = quadrature_points(mesh)
    assert integrate(mesh, points[:, :, 0] ** 2) == pytest.approx(1 / 3)
    assert integrate(mesh, points[:, :, 0] * points[:, :, 1]) == pytest.approx(1 / 4)

    cube = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED, 1)
    points = quadrature_points(cube)
    assert integrate(cube, points[:, :, 2] ** 2) == pytest.approx(1 / 12)


def test_constant_reaction_solution():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    u = solve_state(mesh, _problem(lambda x: np.ones(len(x)), BoundaryCondition.NEUMANN_REACTION))
    assert_allclose(u.values, 1.0, rtol=1e-8)


def test_dirichlet_boundary_is_zero():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 1)
    u = solve_state(mesh, _problem(lambda x: np.ones(len(x))))
    assert_allclose(u.values[mesh.boundary.boundary_vertices], 0.0)
    assert u.values.max() > 0


def test_dirichlet_convergence():
    f = _problem(lambda x: 2 * PI ** 2 * _sine(x))
    l2, h1 = [], []
    for level in range(3, 8):
        mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, level)
        u = solve_state(mesh, f)
        l2.append(l2_error(mesh, u, _sine))
        h1.append(h1_seminorm_error(mesh, u, _sine_grad))
    # the mesh size halves with every level
    assert np.all(np.log2(np.divide(l2[:-1], l2[1:])) >= 1.9)
    assert np.all(np.log2(np.divide(h1[:-1], h1[1:])) >= 0.95)


def test_reaction_convergence():
    f = _problem(lambda x: (2 * PI ** 2 + 1) * _cosine(x), BoundaryCondition.NEUMANN_REACTION)
    errors = []
    for level in (3, 4):
        mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, level)
        errors.append(l2_error(mesh, solve_state(mesh, f), _cosine))
    assert errors[0] / errors[1] > 3.0


def test_warm_start_gives_same_state():
    mesh = generate_primitive(PrimitiveKind.UNIT_DISK, 2)
    problem = _problem(lambda x: 1 + x[:, 0])
    cold = solve_state(mesh, problem)
    warm = solve_state(mesh, problem, x0=cold.values, jacobi=True)
    assert_allclose(warm.values, cold.values, atol=1e-8)


def test_dimension_mismatch():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED)
    with pytest.raises(DimensionMismatchError):
        solve_state(mesh, _problem(lambda x: np.ones(len(x))))


def test_non_finite_source_names_cell():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE)
    with pytest.raises(IntegrandEvaluationError):
        assemble_load(mesh, lambda x: np.log(x[:, 0] - x[:, 1]))


def test_cg_reports_failure():
    mesh = generate_primitive(PrimitiveKind.UNIT_SQUARE, 4)
    K = assemble_stiffness(mesh) + assemble_mass(mesh)
    b = np.random.default_rng(0).standard_normal(mesh.num_vertices)
    with pytest.raises(SolverConvergenceError):
        cg_solve(K, b, tol=1e-30)


def test_reference_triangle_matrices():
    mesh = SimplicialMesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert_allclose(local_stiffness(mesh)[0], 0.5 * np.array([[2, -1, -1], [-1, 1, 0], [-1, 0, 1]]), atol=1e-15)
    assert_allclose(local_mass(mesh)[0], np.array([[2, 1, 1], [1, 2, 1], [1, 1, 2]]) / 24, atol=1e-15)
    assert_allclose(assemble_stiffness(mesh).matrix.toarray(), local_stiffness(mesh)[0], atol=1e-15)


@pytest.mark.parametrize('kind', [PrimitiveKind.UNIT_DISK, PrimitiveKind.UNIT_CUBE_CENTERED])
def test_mass_is_positive_definite(kind):
    M = assemble_mass(generate_primitive(kind, 1)).matrix.toarray()
    assert np.linalg.eigvalsh(M).min() > 0


def test_cg_on_small_systems():
    assert_allclose(cg_solve(SparseSymmetricOperator(np.eye(3)), [1.0, -2.0, 3.0], tol=1e-12), [1.0, -2.0, 3.0])
    assert_allclose(cg_solve(SparseSymmetricOperator(np.diag([1.0, 4.0])), [1.0, 4.0], tol=1e-12), [1.0, 1.0])
    assert_allclose(cg_solve(SparseSymmetricOperator(np.eye(2)), np.zeros(2), tol=1e-12), 0.0)

    rng = np.random.default_rng(5)
    B = rng.standard_normal((12, 12))
    A = B.T @ B + np.eye(12)
    b = rng.standard_normal(12)
    for jacobi in (False, True):
        x = cg_solve(SparseSymmetricOperator(A), b, tol=1e-12, jacobi=jacobi)
        assert_allclose(x, np.linalg.solve(A, b), rtol=1e-9, atol=1e-10)


def test_scalar_field_gradient():
    mesh = generate_primitive(PrimitiveKind.UNIT_CUBE_CENTERED, 1)
    u = ScalarFieldP1.interpolate(mesh, lambda x: x @ np.array([1.0, -2.0, 3.0]))
    assert_allclose(u.cell_gradients(), np.broadcast_to([1.0, -2.0, 3.0], (mesh.num_cells, 3)), atol=1e-12)
