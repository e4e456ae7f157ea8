#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Edge cuts and edge connectivity of multigraphs.

Minimum s-t cuts are computed as maximum flows on the underlying simple
graph, with each vertex pair given a capacity equal to the number of
parallel edges joining it. Every cut comes with a `CutWitness` that
can be checked without rerunning the flow.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable

import networkx as nx
from networkx.algorithms.flow import minimum_cut

from .multigraph import MultiGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutWitness:
    """A set of edges together with the vertex partition it separates.

    Attributes:
        edges (frozenset[int]): Ids of the cut edges.
        source_side (frozenset[int]): Vertices on the source side.
        sink_side (frozenset[int]): Vertices on the sink side.
    """

    edges: frozenset[int]
    source_side: frozenset[int]
    sink_side: frozenset[int]

    @property
    def size(self) -> int:
        """Number of cut edges."""
        return len(self.edges)

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a JSON-friendly dict with sorted id lists."""
        return {
            "edges": sorted(self.edges),
            "source_side": sorted(self.source_side),
            "sink_side": sorted(self.sink_side),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CutWitness:
        """
        Deserialize a dict produced by `to_dict`.

        Raises:
            KeyError: If a required key is missing.
        """
        return cls(
            frozenset(int(e) for e in data["edges"]),
            frozenset(int(v) for v in data["source_side"]),
            frozenset(int(v) for v in data["sink_side"]),
        )


def crossing_edges(g: MultiGraph, side: Iterable[int]) -> frozenset[int]:
    """Ids of the edges with exactly one endpoint in `side`."""
    s = set(side)
    return frozenset(
        e for e, (a, b) in g.edges if (a in s) != (b in s)
    )


def min_edge_cut(g: MultiGraph, s: int, t: int) -> tuple[int, CutWitness]:
    """
    Compute a minimum set of edges separating s from t.

    Args:
        g (MultiGraph): The graph.
        s (int): Source vertex.
        t (int): Sink vertex.

    Returns:
        tuple[int, CutWitness]: The cut size and a witness whose source
            side contains s and whose sink side contains t. The size is
            0, with no edges, when s and t lie in different components.

    Raises:
        ValueError: If s == t.
        KeyError: If s or t is not a vertex.
    """
    g.label(s)
    g.label(t)
    if s == t:
        raise ValueError("Source and sink of a cut must differ")
    simple = g.underlying_simple()
    value, (reachable, rest) = minimum_cut(simple, s, t, capacity="capacity")
    witness = CutWitness(
        crossing_edges(g, reachable), frozenset(reachable), frozenset(rest)
    )
    if witness.size != value:
        raise RuntimeError(
            f"Flow value {value} disagrees with cut of size {witness.size}"
        )
    return int(value), witness


def edge_connectivity(g: MultiGraph) -> tuple[int, CutWitness]:
    """
    Compute the edge connectivity of a multigraph.

    The minimum of min_edge_cut(s0, t) over every t other than a fixed
    vertex s0, which is the global minimum since s0 lies on one side of
    any cut.

    Args:
        g (MultiGraph): The graph.

    Returns:
        tuple[int, CutWitness]: The connectivity and a minimum cut; 0
            for a disconnected graph.

    Raises:
        ValueError: If g has fewer than 2 vertices.
    """
    ids = g.vertex_ids()
    if len(ids) < 2:
        raise ValueError(
            "Edge connectivity is undefined for fewer than 2 vertices"
        )
    s0 = ids[0]
    best: tuple[int, CutWitness] | None = None
    for t in ids[1:]:
        size, witness = min_edge_cut(g, s0, t)
        if best is None or size < best[0]:
            best = (size, witness)
            if size == 0:
                break
    assert best is not None
    logger.debug("Edge connectivity of %r is %d", g, best[0])
    return best


def is_k_edge_connected(g: MultiGraph, k: int) -> bool:
    """
    Check whether no k - 1 or fewer edges disconnect g.

    Raises:
        ValueError: If k < 1 or g has fewer than 2 vertices.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return edge_connectivity(g)[0] >= k


def verify_cut(g: MultiGraph, witness: CutWitness) -> bool:
    """
    Check a cut witness directly against a graph.

    The sides must be nonempty, disjoint and cover every vertex, the
    witness edges must be exactly the edges crossing the partition, and
    no component of g minus those edges may meet both sides.

    Args:
        g (MultiGraph): The graph.
        witness (CutWitness): The claimed cut.

    Returns:
        bool: True if the witness is valid.
    """
    src, snk = witness.source_side, witness.sink_side
    if not src or not snk or src & snk:
        return False
    if src | snk != set(g.vertex_ids()):
        return False
    if not witness.edges <= set(g.edge_ids()):
        return False
    if crossing_edges(g, src) != witness.edges:
        return False
    rest = g.delete_edges(witness.edges).to_networkx()
    for comp in nx.connected_components(rest):
        if comp & src and comp & snk:
            return False
    return True
