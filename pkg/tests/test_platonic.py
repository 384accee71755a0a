"""
Тетраэдр и куб: раскраска рёбер, замкнутые формулы S_tot и формулы по секторам
"""

from itertools import product

import numpy as np
import pytest

from backend.internal.entity.colouring import Colouring
from backend.internal.entity.errors import NonRegularColouringError, UnknownSolidError
from backend.internal.usecase.spectral_usecase import CUBE_SIGNS, TETRAHEDRON_SIGNS

# Вещественные импульсы вдали от zeta = +-1, где формулы по секторам вырождены
MOMENTA = np.concatenate((np.linspace(0.1, 3.0, 32), np.linspace(3.3, 6.1, 32)))


def colour_matrices(generators, solid):
    _, colouring = generators.platonic(solid)
    return generators.commuting_colour_matrices(colouring).matrices


def projector(matrices, signs):
    n = matrices[0].shape[0]
    result = np.eye(n)
    for matrix, sign in zip(matrices, signs):
        result = result @ (np.eye(n) + sign * matrix) / 2
    return result


def sector_eigenvalue(local, zeta, signs):
    if local == "kirchhoff":
        q = sum(1 / (1 + zeta * s) for s in signs)
        return (q - 1) / (2 - q)
    q = sum(1 / (zeta * s - 1) for s in signs)
    return (q - 3) / (q + 6)


def group_elements(matrices):
    """I, E1, E2, E3, E1E2, E1E3, E2E3, E1E2E3"""
    e1, e2, e3 = matrices
    n = e1.shape[0]
    return [np.eye(n), e1, e2, e3, e1 @ e2, e1 @ e3, e2 @ e3, e1 @ e2 @ e3]


@pytest.mark.parametrize("solid, size", [("tetrahedron", 4), ("cube", 8)])
def test_colour_matrices_commute(generators, solid, size):
    _, colouring = generators.platonic(solid)
    result = generators.commuting_colour_matrices(colouring)

    assert colouring.is_regular()
    assert len(result.matrices) == 3
    assert result.matrices[0].shape == (size, size)
    assert result.symmetric_involutive
    assert result.commute


def test_tetrahedron_colour_product_is_identity(generators):
    e1, e2, e3 = colour_matrices(generators, "tetrahedron")
    np.testing.assert_array_equal(e1 @ e2 @ e3, np.eye(4))


@pytest.mark.parametrize("solid, signs", [("tetrahedron", TETRAHEDRON_SIGNS), ("cube", CUBE_SIGNS)])
def test_sector_signs_are_joint_eigenvalues(generators, solid, signs):
    matrices = colour_matrices(generators, solid)

    assert len(set(signs)) == len(signs)
    for chi in signs:
        assert np.trace(projector(matrices, chi)) == pytest.approx(1.0)
    total = sum(projector(matrices, chi) for chi in signs)
    np.testing.assert_allclose(total, np.eye(matrices[0].shape[0]), atol=1e-14)


@pytest.mark.parametrize("solid", ["octahedron", "dodecahedron"])
def test_networkx_solids_get_a_proper_colouring(generators, solid):
    graph, colouring = generators.platonic(solid)

    assert colouring is not None
    assert colouring.is_regular()
    for vertex in graph.vertices():
        neighbours = {colouring.neighbour(vertex, a) for a in range(1, colouring.colours + 1)}
        assert len(neighbours) == graph.nu(vertex)


def test_unknown_solid(generators):
    with pytest.raises(UnknownSolidError):
        generators.platonic("hexagon")


def test_partial_colouring_is_rejected(generators):
    path = Colouring(neighbours=((1, None), (0, 2), (None, 1)))
    with pytest.raises(NonRegularColouringError):
        generators.commuting_colour_matrices(path)


def test_tetrahedron_case1_closed_form(generators, stot):
    system = generators.platonic_fixture("tetrahedron", 1.0, "kirchhoff").system
    adjacency = np.ones((4, 4)) - np.eye(4)

    for p in MOMENTA:
        zeta = np.exp(-1j * p)
        numerator = -2 * (zeta**3 + zeta - 1) * np.eye(4) + zeta * (zeta + 1) * adjacency
        expected = numerator / ((2 * zeta**2 + zeta + 1) * (2 * zeta - 1))
        np.testing.assert_allclose(stot(system, p), expected, atol=1e-9, rtol=0)


def test_tetrahedron_case1_at_zero_momentum(generators, stot):
    system = generators.platonic_fixture("tetrahedron", 1.0, "kirchhoff").system
    adjacency = np.ones((4, 4)) - np.eye(4)

    np.testing.assert_allclose(stot(system, 1e-5), (adjacency - np.eye(4)) / 2, atol=1e-4)


@pytest.mark.parametrize("solid", ["tetrahedron", "cube"])
@pytest.mark.parametrize("local", ["kirchhoff", "tetra2"])
def test_sector_formula(generators, stot, solid, local):
    system = generators.platonic_fixture(solid, 1.0, local).system
    matrices = colour_matrices(generators, solid)

    for p in MOMENTA[::4]:
        zeta = np.exp(-1j * p)
        expected = sum(
            sector_eigenvalue(local, zeta, chi) * projector(matrices, chi)
            for chi in product((1, -1), repeat=3)
        )
        np.testing.assert_allclose(stot(system, p), expected, atol=1e-9, rtol=0)


@pytest.mark.parametrize("local", ["kirchhoff", "tetra2"])
def test_cube_lies_in_colour_group_algebra(generators, stot, local):
    system = generators.platonic_fixture("cube", 1.0, local).system
    elements = group_elements(colour_matrices(generators, "cube"))

    for p in MOMENTA[::8]:
        matrix = stot(system, p)
        zeta = np.exp(-1j * p)
        coefficients = [np.trace(matrix @ g.T) / 8 for g in elements]
        np.testing.assert_allclose(
            sum(a * g for a, g in zip(coefficients, elements)), matrix, atol=1e-10
        )

        # коэффициент a_T зависит только от числа цветов в T
        assert coefficients[1] == pytest.approx(coefficients[2], abs=1e-10)
        assert coefficients[2] == pytest.approx(coefficients[3], abs=1e-10)
        assert coefficients[4] == pytest.approx(coefficients[5], abs=1e-10)
        assert coefficients[5] == pytest.approx(coefficients[6], abs=1e-10)

        subsets = [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
        for a, subset in zip(coefficients, subsets):
            transform = sum(
                sector_eigenvalue(local, zeta, chi) * np.prod([chi[k] for k in subset])
                for chi in CUBE_SIGNS
            ) / 8
            assert a == pytest.approx(transform, abs=1e-10)


def printed_cube_case1(z):
    d6 = 4 * (-1 + z**2 + 8 * z**4 + 16 * z**6)
    a0 = (8 + z - 8 * z**2 - 5 * z**3 - 40 * z**4 + 4 * z**5 - 32 * z**6) / d6
    a1 = (-5 * z + z**3 - 20 * z**5) / d6
    a23 = 3 * z / (4 - 16 * z**2)
    a45 = -z * (1 - 9 * z + 2 * z**2) / (4 * (-1 + z + 2 * z**2 - 4 * z**3 + 8 * z**4))
    a6 = z * (1 + 9 * z + 2 * z**2) / (4 * (-1 - z + 2 * z**2 + 4 * z**3 + 8 * z**4))
    a7 = -(z + 19 * z**3 + 4 * z**5) / d6
    return [a0, a1, a23, a23, a45, a45, a6, a7]


def printed_cube_case2(z):
    d6 = 4 * (-9 + 73 * z**2 - 184 * z**4 + 144 * z**6)
    a0 = (72 + 9 * z - 440 * z**2 - 45 * z**3 + 728 * z**4 + 36 * z**5 - 288 * z**6) / d6
    a1 = -3 * z * (15 - 67 * z**2 + 60 * z**4) / d6
    a23 = 3 * z / (4 - 16 * z**2)
    a45 = -3 * z * (-1 + 3 * z + 2 * z**2) / (4 * (3 - z - 18 * z**2 + 4 * z**3 + 24 * z**4))
    a6 = 3 * z * (-1 - 3 * z + 2 * z**2) / (4 * (3 + z - 18 * z**2 - 4 * z**3 + 24 * z**4))
    a7 = 3 * z * (3 - 7 * z**2 + 12 * z**4) / (4 * (9 - 73 * z**2 + 184 * z**4 - 144 * z**6))
    return [a0, a1, a23, a23, a45, a45, a6, a7]


@pytest.mark.parametrize(
    "coefficients, expected",
    [
        (printed_cube_case1, [-0.75, -0.25, -0.25, -0.25, 0.25, 0.25, 0.25, -0.25]),
        (printed_cube_case2, [0.75, -0.25, -0.25, -0.25, -0.25, -0.25, -0.25, -0.25]),
    ],
)
def test_printed_cube_forms_are_unitary_at_zero_momentum(generators, coefficients, expected):
    elements = group_elements(colour_matrices(generators, "cube"))
    values = coefficients(1.0)
    np.testing.assert_allclose(values, expected, atol=1e-15)

    matrix = sum(a * g for a, g in zip(values, elements))
    np.testing.assert_allclose(matrix.T @ matrix, np.eye(8), atol=1e-14)
