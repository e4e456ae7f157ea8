#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Unit tests for the MultiGraph container and its free functions.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wgeo.core.multigraph import (
    MultiGraph,
    VertexLabel,
    contract_edge,
    delete_vertex,
    is_regular,
    parse_label,
    valence,
)
from wgeo.core.word import Letter


def test_rejects_loops():
    with pytest.raises(ValueError, match="loops"):
        MultiGraph.from_edges(2, [(0, 0)])


def test_rejects_unknown_endpoint():
    with pytest.raises(KeyError):
        MultiGraph.from_edges(2, [(0, 5)])


def test_rejects_duplicate_labels():
    label = VertexLabel(1, 1)
    with pytest.raises(ValueError, match="unique"):
        MultiGraph([(0, label), (1, label)])


def test_rejects_duplicate_ids():
    with pytest.raises(ValueError):
        MultiGraph([(0, VertexLabel(1, 1)), (0, VertexLabel(2, 1))])


def test_parallel_edges_counted(square):
    g = MultiGraph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
    assert g.valence(0) == 3
    assert g.multiplicity(0, 1) == 3
    assert g.neighbors(0) == [1]
    assert square.is_regular() == 2


def test_builders(k33, k4):
    assert (k33.number_of_vertices(), k33.number_of_edges()) == (6, 9)
    assert k33.is_regular() == 3
    assert k4.number_of_edges() == 6
    assert MultiGraph.path(3).valences() == {0: 1, 1: 2, 2: 1}
    assert MultiGraph.cycle(2).multiplicity(0, 1) == 2


def test_is_regular_none_and_empty():
    assert MultiGraph.path(3).is_regular() is None
    with pytest.raises(ValueError):
        MultiGraph([]).is_regular()


def test_unknown_lookups_raise(square):
    with pytest.raises(KeyError):
        square.label(9)
    with pytest.raises(KeyError):
        square.endpoints(9)
    with pytest.raises(KeyError):
        square.valence(9)
    with pytest.raises(KeyError):
        square.vertex_of(VertexLabel(9, 1))


def test_delete_vertex_keeps_ids(square):
    g = square.delete_vertex(1)
    assert g.vertex_ids() == [0, 2, 3]
    assert g.edge_ids() == [2, 3]
    assert g.is_connected()


def test_delete_edges(square):
    g = square.delete_edges([0, 2])
    assert g.number_of_vertices() == 4
    assert g.components() == [[0, 3], [1, 2]]
    with pytest.raises(KeyError):
        square.delete_edges([7])


def test_contract_edge_drops_parallel_edges():
    g = MultiGraph.from_edges(3, [(0, 1), (0, 1), (1, 2)])
    h = g.contract_edge(0)
    assert h.vertex_ids() == [0, 2]
    assert h.edges == ((2, (0, 2)),)


def test_contract_square_gives_triangle(square):
    h = contract_edge(square, 0)
    assert h.number_of_vertices() == 3
    assert h.is_regular() == 2


def test_induced_subgraph(k4):
    h = k4.induced_subgraph([0, 1, 2])
    assert h.number_of_edges() == 3
    assert h.label(2) == k4.label(2)


def test_disjoint_union_renumbers(square):
    other = MultiGraph.cycle(3).with_copy(1)
    g = MultiGraph.disjoint_union([square, other])
    assert g.vertex_ids() == list(range(7))
    assert g.number_of_edges() == 7
    assert len(g.components()) == 2
    assert g.label(4) == VertexLabel(1, 1, 1)


def test_disjoint_union_rejects_label_clash(square):
    with pytest.raises(ValueError):
        MultiGraph.disjoint_union([square, square])


def test_relabel_and_vertex_of(square):
    g = square.relabel({0: VertexLabel(9, -1)})
    assert g.vertex_of(VertexLabel(9, -1)) == 0
    assert g.label(1) == square.label(1)


def test_empty_graph_is_not_connected():
    assert not MultiGraph([]).is_connected()


def test_to_dot_is_stable():
    g = MultiGraph.from_edges(2, [(0, 1), (1, 0)])
    assert g.to_dot() == (
        'graph W {\n'
        '  "a";\n'
        '  "b";\n'
        '  "a" -- "b";\n'
        '  "b" -- "a";\n'
        '}\n'
    )


def test_to_dot_names_copies():
    g = MultiGraph.path(2).with_copy(2)
    assert '"a_2" -- "b_2";' in g.to_dot("G")
    assert g.to_dot("G").startswith("graph G {")


def test_dict_reload(k33):
    g = k33.relabel({0: VertexLabel(1, -1, 3)})
    data = g.to_dict()
    assert data["vertices"][0] == {"id": 0, "label": "A_3"}
    assert data["edges"][0] == {"id": 0, "ends": [0, 3]}
    assert MultiGraph.from_dict(data) == g


def test_from_dict_missing_key():
    with pytest.raises(KeyError):
        MultiGraph.from_dict({"vertices": []})


def test_underlying_simple_carries_capacity():
    g = MultiGraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    simple = g.underlying_simple()
    assert simple.number_of_edges() == 2
    assert simple[0][1]["capacity"] == 2
    assert g.edge_multiset() == {(0, 1): 2, (1, 2): 1}


def test_to_networkx_keys_edges(square):
    nxg = square.to_networkx()
    assert nxg.number_of_edges() == 4
    assert nxg.has_edge(3, 0, key=3)


def test_parse_label():
    assert parse_label("a") == VertexLabel(1, 1)
    assert parse_label("A_2") == VertexLabel(1, -1, 2)
    assert parse_label("x27_1") == VertexLabel(27, 1, 1)
    with pytest.raises(ValueError):
        parse_label("a_b")


def test_vertex_label_helpers():
    lab = VertexLabel.of(Letter(2, -1), 1)
    assert lab.name() == "B_1"
    assert lab.inverse() == VertexLabel(2, 1, 1)
    assert lab.letter == Letter(2, -1)


def test_free_functions(k33):
    assert valence(k33, 0) == 3
    assert is_regular(k33) == 3
    assert delete_vertex(k33, 0).number_of_edges() == 6


def test_equality_and_hash(square):
    assert square == MultiGraph.cycle(4)
    assert hash(square) == hash(MultiGraph.cycle(4))
    assert square != MultiGraph.path(4)
    assert len(square) == 4
    assert 3 in square


@st.composite
def loop_free_multigraphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pairs = []
    if n > 1:
        pairs = draw(
            st.lists(
                st.tuples(
                    st.integers(0, n - 1), st.integers(0, n - 1)
                ).filter(lambda uv: uv[0] != uv[1]),
                max_size=20,
            )
        )
    return MultiGraph.from_edges(n, pairs)


@settings(max_examples=200, deadline=None)
@given(loop_free_multigraphs())
def test_valences_sum_to_twice_the_edges(g):
    total = 2 * g.number_of_edges()
    assert sum(g.valences().values()) == total
    assert sum(valence(g, v) for v in g.vertex_ids()) == total
    if g.number_of_vertices() > 1:
        h = delete_vertex(g, 0)
        assert sum(h.valences().values()) == 2 * h.number_of_edges()
