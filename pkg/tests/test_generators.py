import numpy as np
import pytest

from backend.internal.entity.errors import (
    RunConfigError,
    ShapeMismatchError,
    UnknownFixtureError,
    UnserializableLocalError,
)
from backend.internal.entity.system import ScatteringSystem
from backend.pkg.validator.matrix_validator import MatrixValidator


def test_fixture_names_cover_every_generator(generators):
    names = generators.fixture_names()

    for name in ("tetrahedron", "cube", "line2", "tadpole", "triangle", "star_loops", "star"):
        assert name in names
    with pytest.raises(UnknownFixtureError):
        generators.generate("moebius")


def test_generate_each_fixture(generators):
    for name in generators.fixture_names():
        if name in ("dodecahedron", "icosahedron"):
            continue
        fixture = generators.generate(name)
        assert fixture.name == name
        assert len(fixture.system.locals) == fixture.system.graph.vertex_count


def test_triangle_star_permutation(generators, local_usecase):
    kirchhoff = local_usecase.kirchhoff_local(0, 3).matrix
    pair = generators.triangle_and_star_pair(1.0, 1.3, 0.7, [kirchhoff] * 3)

    # строки: слоты звезды (1,2), (2,1), (2,3), (3,2), (1,3), (3,1);
    # столбцы: слоты треугольника 1->2, 1->3, 2->1, 2->3, 3->1, 3->2
    expected = np.array(
        [
            [1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ]
    )
    np.testing.assert_array_equal(pair.permutation, expected)
    assert pair.star.graph.vertex_count == 1
    assert pair.star.graph.internal_count() == 3
    assert all(e.is_loop for e in pair.star.graph.internal_edges)


def test_triangle_star_internal_modes_are_permuted(generators, solver, rng):
    triangle_locals = [generators._random_involution(rng, 3, True) for _ in range(3)]
    pair = generators.triangle_and_star_pair(0.8, 1.1, 1.4, triangle_locals)
    a = np.array([1.0, 0.5j, -0.25])
    p = 0.9

    triangle = pair.triangle
    star = pair.star
    b_triangle = solver.internal_modes(triangle.graph, triangle.locals, triangle.index, p, a)
    b_star = solver.internal_modes(star.graph, star.locals, star.index, p, a)
    np.testing.assert_allclose(b_star, pair.permutation @ b_triangle, atol=1e-10)


def test_triangle_star_pair_needs_three_locals(generators, local_usecase):
    kirchhoff = local_usecase.kirchhoff_local(0, 3).matrix
    with pytest.raises(ShapeMismatchError):
        generators.triangle_and_star_pair(1.0, 1.0, 1.0, [kirchhoff] * 2)


def test_coloured_locals_follow_neighbour_order(generators):
    graph, colouring = generators.platonic("tetrahedron")
    matrix = np.diag([1.0, 1.0, -1.0, -1.0])

    locals_ = generators.coloured_locals(graph, colouring, matrix)
    system = generators.system_from_graph(graph, locals_)
    heads = {h.key: h.head for h in system.index.half_edges}
    for vertex, local in enumerate(locals_):
        for slot, key in enumerate(system.index.local_keys(vertex)[1:], start=1):
            colour = next(
                a for a in (1, 2, 3) if colouring.neighbour(vertex, a) == heads[key]
            )
            assert local.matrix[slot, slot] == matrix[colour, colour]

    closed = generators.canonical("interval_compact").system.graph
    with pytest.raises(ShapeMismatchError):
        generators.coloured_locals(graph, colouring, np.eye(3))
    with pytest.raises(ShapeMismatchError):
        generators.coloured_locals(closed, colouring, matrix)


@pytest.mark.parametrize(
    "name, params",
    [
        ("fabry_perot", {"r": 1.5}),
        ("star", {"n": 0}),
    ],
)
def test_canonical_parameter_checks(generators, name, params):
    with pytest.raises(RunConfigError):
        generators.canonical(name, **params)


def test_random_fixtures_are_valid(generators, rng):
    for _ in range(40):
        system = generators.random_fixture(rng).system
        graph = system.graph
        assert 1 <= graph.vertex_count <= 6
        assert graph.internal_count() <= 8
        assert graph.external_count() >= 1
        for local in system.locals:
            assert MatrixValidator.involution_defect(local.matrix) < 1e-10
            assert local.unitary


def test_random_fixture_without_loops_or_unitarity(generators, rng):
    for _ in range(20):
        system = generators.random_fixture(rng, unitary=False, loops=False).system
        assert not any(e.is_loop for e in system.graph.internal_edges)


def test_graph_spec_round_trip_keeps_scattering(generators, spec_repo, stot):
    for name, params in [("cube", {"local": "tetra2"}), ("fabry_perot", {"r": 0.3, "d": 0.75})]:
        original = generators.generate(name, **params).system
        text = spec_repo.dumps(generators.to_graph_spec(original))
        restored = generators.build_system(spec_repo.loads(text))

        for p in (0.4, 1.7, 2.9):
            np.testing.assert_array_equal(stot(restored, p), stot(original, p))


def test_momentum_dependent_locals_cannot_be_serialised(generators, local_usecase):
    line = generators.canonical("line2").system
    moving = local_usecase.momentum_local(
        0, lambda p: np.array([[0, 1], [1, 0]], dtype=complex), size=2
    )
    system = ScatteringSystem(line.graph, (moving, line.locals[1]), line.index)
    with pytest.raises(UnserializableLocalError):
        generators.to_graph_spec(system)
