#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Unit tests for splicing, the cover simulator and simulation trials.
"""

import numpy as np
import pytest

from wgeo.core.connectivity import edge_connectivity
from wgeo.core.isomorphism import is_isomorphic
from wgeo.core.minor import contains_minor
from wgeo.core.multigraph import MultiGraph, VertexLabel
from wgeo.core.planarity import is_planar
from wgeo.core.splice import (
    SimulationError,
    SpliceInstruction,
    TrialResult,
    cover_trial,
    deletion_bound,
    deletion_connectivity,
    random_regular_connected_graph,
    random_sigma,
    simulate_cover,
    splice,
    splice_trial,
)
from wgeo.core.whitehead import build_whitehead_graph
from wgeo.core.word import Alphabet, parse_collection


def identity_sigma(g1: MultiGraph, v1: int, g2: MultiGraph, v2: int):
    return tuple(zip(g1.incident_edges(v1), g2.incident_edges(v2)))


def test_two_squares_give_a_hexagon(square):
    other = MultiGraph.cycle(4).with_copy(1)
    g = splice(
        SpliceInstruction(
            square, 0, other, 0, identity_sigma(square, 0, other, 0)
        )
    )
    assert (g.number_of_vertices(), g.number_of_edges()) == (6, 6)
    assert is_isomorphic(g, MultiGraph.cycle(6))[0]


def test_single_edges_splice_to_one_edge():
    first = MultiGraph.path(2)
    second = MultiGraph.path(2).with_copy(1)
    g = splice(SpliceInstruction(first, 0, second, 0, ((0, 0),)))
    assert g.number_of_vertices() == 2
    assert g.number_of_edges() == 1
    assert [lab for _, lab in g.vertices] == [
        VertexLabel(2, 1), VertexLabel(2, 1, 1)
    ]


def test_two_k33_splice(k33):
    other = k33.with_copy(1)
    g = splice(
        SpliceInstruction(k33, 0, other, 3, identity_sigma(k33, 0, other, 3))
    )
    assert (g.number_of_vertices(), g.number_of_edges()) == (10, 15)
    assert g.is_regular() == 3
    assert edge_connectivity(g)[0] == 3
    assert not is_planar(g)[0]
    assert contains_minor(g, k33)[0]


def test_splice_shifts_second_graph(square):
    other = MultiGraph.cycle(4).with_copy(1)
    g = splice(
        SpliceInstruction(
            square, 1, other, 2, identity_sigma(square, 1, other, 2)
        )
    )
    assert g.vertex_ids() == [0, 2, 3, 4, 5, 7]


def test_splice_bumps_colliding_copies(square):
    g = splice(
        SpliceInstruction(
            square, 0, square, 0, identity_sigma(square, 0, square, 0)
        )
    )
    copies = sorted(lab.copy for _, lab in g.vertices)
    assert copies == [0, 0, 0, 1, 1, 1]


def test_splice_instruction_checks_valence(square):
    path = MultiGraph.path(3).with_copy(1)
    with pytest.raises(ValueError, match="Valence mismatch"):
        SpliceInstruction(square, 0, path, 0, ((0, 0),))


def test_splice_instruction_checks_sigma(square):
    other = MultiGraph.cycle(4).with_copy(1)
    with pytest.raises(ValueError, match="bijection"):
        SpliceInstruction(square, 0, other, 0, ((0, 0), (0, 3)))
    with pytest.raises(KeyError):
        SpliceInstruction(square, 9, other, 0, ())


def test_random_sigma_is_a_bijection():
    rng = np.random.default_rng(1)
    sigma = random_sigma([4, 2, 7], [1, 5, 9], rng)
    assert sorted(e for e, _ in sigma) == [2, 4, 7]
    assert sorted(f for _, f in sigma) == [1, 5, 9]
    with pytest.raises(ValueError):
        random_sigma([1], [2, 3], rng)


def test_simulate_cover_of_a_square():
    """Three spliced 4-cycles form a single 8-cycle."""
    base = build_whitehead_graph(
        parse_collection("abAB", Alphabet(2)), Alphabet(2)
    )
    for seed in range(5):
        g = simulate_cover(base, 3, seed)
        assert g.number_of_vertices() == 8
        assert g.number_of_edges() == 8
        assert g.is_regular() == 2
        assert g.is_connected()


@pytest.mark.parametrize("d", [2, 3, 4])
def test_simulate_cover_edge_count(k33_words, commutator_words, d):
    """Each splice trades the 2k edges at a vertex pair for k."""
    for collection in (k33_words, commutator_words):
        base = build_whitehead_graph(collection, Alphabet(3))
        k = base.is_regular()
        for seed in range(5):
            g = simulate_cover(base, d, seed)
            assert g.number_of_edges() == (
                d * base.number_of_edges() - (d - 1) * k
            )


def test_simulate_cover_is_reproducible(k33_words):
    base = build_whitehead_graph(k33_words, Alphabet(3))
    assert simulate_cover(base, 3, 42) == simulate_cover(base, 3, 42)


def test_simulate_cover_labels_copies(k33_words):
    base = build_whitehead_graph(k33_words, Alphabet(3))
    g = simulate_cover(base, 2, 0)
    assert {lab.copy for _, lab in g.vertices} == {1, 2}
    assert g.number_of_vertices() == 10


def test_simulate_cover_degree_one(square):
    assert simulate_cover(square, 1, 0) is square
    with pytest.raises(ValueError):
        simulate_cover(square, 0, 0)


def test_simulate_cover_label_matching():
    """Default labels are all positive letters, so nothing matches."""
    g = MultiGraph.path(2)
    with pytest.raises(SimulationError):
        simulate_cover(g, 2, 0)
    assert simulate_cover(g, 2, 0, label_matched=False).is_connected()


def test_simulate_cover_without_edges():
    with pytest.raises(SimulationError, match="No admissible"):
        simulate_cover(MultiGraph.from_edges(2, []), 2, 0, False)


@pytest.mark.parametrize("n, k", [(4, 3), (6, 3), (5, 4), (8, 4)])
def test_random_regular_connected_graph(n, k):
    g = random_regular_connected_graph(n, k, seed=n * k)
    assert g.number_of_vertices() == n
    assert g.is_regular() == k
    assert edge_connectivity(g)[0] >= k


@pytest.mark.parametrize("n, k", [(5, 3), (3, 3), (4, 0)])
def test_random_regular_rejects_impossible_sizes(n, k):
    with pytest.raises(ValueError):
        random_regular_connected_graph(n, k, seed=0)


def test_random_regular_budget():
    with pytest.raises(RuntimeError):
        random_regular_connected_graph(6, 3, seed=0, attempts=0)


def test_deletion_connectivity(k33):
    assert deletion_connectivity(k33) == 2
    assert deletion_connectivity(MultiGraph.complete(5)) == 3
    assert deletion_bound(3) == 2
    assert deletion_bound(4) == 2
    assert deletion_bound(5) == 3


def test_trial_result_dict_reload():
    result = TrialResult(
        3, 3, False, True, trial=2, seed=99, vertices=10, edges=15,
        deletion_connectivity=2, violations=("planar",),
    )
    data = result.to_dict()
    assert data["violations"] == ["planar"]
    assert TrialResult.from_dict(data) == result
    assert not result.ok


def test_trial_result_requires_observations():
    with pytest.raises(KeyError):
        TrialResult.from_dict({"valence": 3})


@pytest.mark.parametrize("k, n", [(3, 4), (3, 6), (4, 5)])
def test_splice_trial_passes(k, n):
    result = splice_trial(k, n, n, seed=k * 100 + n, trial=1)
    assert result.ok, result.violations
    assert result.valence == k
    assert result.edge_connectivity >= k
    assert result.vertices == 2 * n - 2
    assert result.deletion_connectivity >= deletion_bound(k)
    assert result.trial == 1


def test_splice_trial_is_reproducible():
    assert splice_trial(3, 6, 6, seed=5) == splice_trial(3, 6, 6, seed=5)


def test_cover_trial_on_k33(k33_words):
    base = build_whitehead_graph(k33_words, Alphabet(3))
    result = cover_trial(base, 2, seed=3)
    assert result.ok, result.violations
    assert result.valence == 3
    assert not result.planar
    assert result.minor_found is True
    assert (result.vertices, result.edges) == (10, 15)


def test_cover_trial_on_planar_base():
    base = build_whitehead_graph(
        parse_collection("abAB", Alphabet(2)), Alphabet(2)
    )
    result = cover_trial(base, 3, seed=8, trial=4)
    assert result.ok
    assert result.minor_found is None
    assert result.trial == 4
