import numpy as np
import pytest

from backend.internal.entity.errors import (
    DanglingVertexReferenceError,
    DisconnectedGraphError,
    NonPositiveLengthError,
    SizeMismatchError,
)
from backend.internal.entity.graph import EdgeSpec, GraphSpec
from backend.internal.entity.mode_index import ModeVector, SlotKey


def multigraph_spec():
    # двойное ребро 1-2, петля в 2, внешние рёбра в 1 и 2
    return GraphSpec(
        vertices=3,
        internal_edges=(
            EdgeSpec(1, 2, 1.0),
            EdgeSpec(2, 1, 2.0),
            EdgeSpec(2, 2, 0.5),
            EdgeSpec(2, 3, 1.5),
        ),
        external_edges=(2, 1),
    )


def test_derived_counts(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())

    assert graph.external_count() == 2
    assert graph.internal_count() == 4
    assert graph.nu(0) == 2
    assert graph.nu(1) == 5
    assert graph.nu(2) == 1
    assert graph.degree(1) == 6
    assert graph.multiplicity(0, 1) == graph.multiplicity(1, 0) == 2
    assert [e.j for e in graph.internal_edges] == [1, 2, 1, 1]
    assert graph.min_length() == 0.5
    assert graph.total_length() == pytest.approx(5.0)
    assert not graph.is_compact()


def test_mode_index_is_lexicographic(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())
    index = graph_usecase.mode_index(graph)

    orders = [h.order() for h in index.half_edges]
    assert orders == sorted(orders)
    assert index.internal_size() == 8
    assert index.external_slots == {0: 0, 1: 1}

    # 1->2 (j=1), 1->2 (j=2), 2->1 (j=1), 2->1 (j=2), петля, 2->3, 3->2
    assert [h.key for h in index.half_edges] == [
        SlotKey("int", 0, 0),
        SlotKey("int", 1, 1),
        SlotKey("int", 0, 1),
        SlotKey("int", 1, 0),
        SlotKey("int", 2, 0),
        SlotKey("int", 2, 1),
        SlotKey("int", 3, 0),
        SlotKey("int", 3, 1),
    ]


def test_partners_pair_directions_and_loop_halves(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())
    index = graph_usecase.mode_index(graph)

    for slot in range(index.internal_size()):
        partner = index.partner(slot)
        assert partner != slot
        assert index.partner(partner) == slot
        assert index.half_edges[partner].key.ident == index.half_edges[slot].key.ident

    loop = [i for i, h in enumerate(index.half_edges) if h.key.ident == 2]
    assert index.partner(loop[0]) == loop[1]


def test_local_ordering_puts_externals_first(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())
    index = graph_usecase.mode_index(graph)

    keys = index.local_keys(1)
    assert keys[0] == SlotKey("ext", 0)
    assert len(keys) == graph.degree(1)
    internal = [index.slot_of(k) for k in keys[1:]]
    assert internal == sorted(internal)


@pytest.mark.parametrize(
    "spec, error",
    [
        (GraphSpec(vertices=2, internal_edges=(EdgeSpec(1, 3, 1.0),)), DanglingVertexReferenceError),
        (GraphSpec(vertices=2, internal_edges=(EdgeSpec(1, 2, 0.0),)), NonPositiveLengthError),
        (GraphSpec(vertices=2, internal_edges=(EdgeSpec(1, 2, -1.0),)), NonPositiveLengthError),
        (GraphSpec(vertices=2, external_edges=(1, 2)), DisconnectedGraphError),
        (GraphSpec(vertices=1, external_edges=(2,)), DanglingVertexReferenceError),
    ],
)
def test_build_graph_rejects_invalid_specs(graph_usecase, spec, error):
    with pytest.raises(error):
        graph_usecase.build_graph(spec)


def test_permutation_matrices(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())

    swap = graph_usecase.external_permutation(graph, [1, 0])
    np.testing.assert_array_equal(swap, [[0.0, 1.0], [1.0, 0.0]])

    with pytest.raises(SizeMismatchError):
        graph_usecase.external_permutation(graph, [0])
    with pytest.raises(SizeMismatchError):
        graph_usecase.internal_permutation(graph, [0] * 8)


def test_relabel_keeps_edge_keys(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())
    relabelled = graph_usecase.relabel(graph, [2, 0, 1], [1, 0])
    old_index = graph_usecase.mode_index(graph)
    new_index = graph_usecase.mode_index(relabelled)

    assert relabelled.degree(0) == graph.degree(1)
    assert graph_usecase.induced_external_permutation(old_index, new_index, [1, 0]) == [1, 0]

    perm = graph_usecase.induced_internal_permutation(old_index, new_index)
    assert sorted(perm) == list(range(8))
    for old_slot, new_slot in enumerate(perm):
        assert old_index.half_edges[old_slot].key == new_index.half_edges[new_slot].key


def test_mode_vector_checks_lengths(graph_usecase):
    graph = graph_usecase.build_graph(multigraph_spec())

    vector = ModeVector.from_parts(graph, [1, 0], np.zeros(8))
    assert vector.internal_part.dtype == complex

    with pytest.raises(SizeMismatchError):
        ModeVector.from_parts(graph, [1, 0, 0], np.zeros(8))
    with pytest.raises(SizeMismatchError):
        ModeVector.from_parts(graph, [1, 0], np.zeros(7))
