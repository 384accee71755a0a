import numpy as np
import pytest

from backend.internal.entity.colouring import Colouring
from backend.internal.entity.graph import EdgeSpec, GraphSpec
from backend.pkg.validator import (
    ColouringValidator,
    GraphSpecValidator,
    MatrixValidator,
    RunConfigValidator,
)


def test_graph_spec_validator():
    good = GraphSpec(vertices=2, internal_edges=(EdgeSpec(1, 2, 1.0),), external_edges=(1,))
    assert GraphSpecValidator.validate_vertex_references(good) == (True, "")
    assert GraphSpecValidator.validate_lengths(good) == (True, "")
    assert GraphSpecValidator.validate_connectivity(good) == (True, "")

    ok, message = GraphSpecValidator.validate_vertex_references(GraphSpec(vertices=0))
    assert not ok and message

    split = GraphSpec(vertices=3, internal_edges=(EdgeSpec(1, 2, 1.0),))
    ok, message = GraphSpecValidator.validate_connectivity(split)
    assert not ok
    assert "2" in message


def test_matrix_validator():
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert MatrixValidator.validate_square(swap, 2) == (True, "")
    assert not MatrixValidator.validate_square(swap, 3)[0]
    assert not MatrixValidator.validate_square(np.ones((2, 3)), 2)[0]

    assert MatrixValidator.involution_defect(swap) == 0.0
    assert MatrixValidator.unitarity_defect(2 * swap) == pytest.approx(3.0)
    assert MatrixValidator.validate_involution(swap, 1e-12)[0]
    assert not MatrixValidator.validate_involution(2 * swap, 1e-12)[0]

    ok, message = MatrixValidator.validate_sampled_involution(
        lambda p: np.array([[1.0 + p]]), [0.5], 1, 1e-10
    )
    assert not ok
    assert "p=0.5" in message


def test_colouring_validator():
    square = Colouring(neighbours=((1, 3), (0, 2), (3, 1), (2, 0)))
    assert ColouringValidator.validate(square) == (True, "")
    assert ColouringValidator.validate_regular(square) == (True, "")

    not_reciprocal = Colouring(neighbours=((1, 3), (2, 0), (3, 1), (2, 0)))
    assert not ColouringValidator.validate(not_reciprocal)[0]

    loop = Colouring(neighbours=((0,),))
    assert not ColouringValidator.validate(loop)[0]

    partial = Colouring(neighbours=((1, None), (0, None)))
    assert ColouringValidator.validate(partial)[0]
    assert not ColouringValidator.validate_regular(partial)[0]


@pytest.mark.parametrize(
    "p_min, p_max, steps, p_list, valid",
    [
        (0.0, 1.0, 10, None, True),
        (0.0, 1.0, 1, None, True),
        (1.0, 1.0, 10, None, False),
        (2.0, 1.0, 10, None, False),
        (0.0, 1.0, 0, None, False),
        (None, 1.0, 10, None, False),
        (None, None, None, (0.5, 1.5), True),
        (None, None, None, (0.5, float("nan")), False),
    ],
)
def test_run_config_grid(p_min, p_max, steps, p_list, valid):
    ok, message = RunConfigValidator.validate_grid(p_min, p_max, steps, p_list)
    assert ok is valid
    assert bool(message) is not valid


def test_run_config_scalars():
    assert RunConfigValidator.validate_tolerance(1e-8)[0]
    assert not RunConfigValidator.validate_tolerance(0.0)[0]
    assert not RunConfigValidator.validate_workers(0)[0]
    assert RunConfigValidator.validate_format("csv")[0]
    assert not RunConfigValidator.validate_format("xlsx")[0]


def test_lengths_must_be_finite():
    for length in (float("inf"), float("nan"), 0.0, -1.0):
        spec = GraphSpec(vertices=2, internal_edges=(EdgeSpec(1, 2, length),))
        ok, message = GraphSpecValidator.validate_lengths(spec)
        assert not ok
        assert message


def test_nan_matrix_is_not_an_involution():
    broken = np.array([[np.nan, 1.0], [1.0, 0.0]])
    assert not MatrixValidator.validate_involution(broken, 1e-10)[0]
