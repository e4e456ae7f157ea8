#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Planarity testing with self-checking witnesses.

A planar graph is certified by a rotation system (the clockwise order of
neighbors around each vertex) whose face count satisfies Euler's formula
on every component. A non-planar graph is certified by a Kuratowski
subgraph, i.e. a subdivision of K5 or K3,3. Both witnesses are checked
by code that does not depend on the planarity test itself.

Parallel edges never affect planarity of a loop-free multigraph, so all
tests run on the underlying simple graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterable

import networkx as nx

from .multigraph import MultiGraph

logger = logging.getLogger(__name__)

K5 = "K5"
K33 = "K3,3"


@dataclass(frozen=True)
class PlanarityWitness:
    """Proof of planarity or of non-planarity.

    Attributes:
        planar (bool): Which of the two is proved.
        rotation (dict[int, tuple[int, ...]]): Clockwise neighbor order
            around each vertex; empty when non-planar.
        faces (int): Number of faces of the embedding, counted per
            component; 0 when non-planar.
        kuratowski_edges (tuple[tuple[int, int], ...]): Edges of a K5 or
            K3,3 subdivision; empty when planar.
        kind (str | None): "K5" or "K3,3" when non-planar.
    """

    planar: bool
    rotation: dict[int, tuple[int, ...]] = field(default_factory=dict)
    faces: int = 0
    kuratowski_edges: tuple[tuple[int, int], ...] = ()
    kind: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a JSON-friendly dict."""
        if self.planar:
            return {
                "planar": True,
                "rotation": {
                    str(v): list(order)
                    for v, order in sorted(self.rotation.items())
                },
                "faces": self.faces,
            }
        return {
            "planar": False,
            "kind": self.kind,
            "kuratowski_edges": [list(e) for e in self.kuratowski_edges],
        }


def count_faces(rotation: dict[int, tuple[int, ...]]) -> int:
    """
    Count the faces traced by a rotation system.

    The half-edge (u, v) is followed by (v, w), where w comes after u in
    the cyclic order around v. An isolated vertex counts as one face.

    Args:
        rotation (dict[int, tuple[int, ...]]): Cyclic neighbor orders.

    Returns:
        int: The number of face boundaries.

    Raises:
        KeyError: If the rotation is not symmetric.
    """
    position = {
        v: {u: i for i, u in enumerate(order)}
        for v, order in rotation.items()
    }
    seen: set[tuple[int, int]] = set()
    faces = sum(1 for order in rotation.values() if not order)
    for v, order in rotation.items():
        for u in order:
            if (v, u) in seen:
                continue
            faces += 1
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                around = rotation[b]
                a, b = b, around[(position[b][a] + 1) % len(around)]
    return faces


def _rotation_is_planar(
    simple: nx.Graph, rotation: dict[int, tuple[int, ...]]
) -> bool:
    """Check that a rotation system describes a plane embedding."""
    if set(rotation) != set(simple.nodes):
        return False
    for v, order in rotation.items():
        if len(set(order)) != len(order):
            return False
        if set(order) != set(simple.neighbors(v)):
            return False
    comps = nx.number_connected_components(simple)
    try:
        faces = count_faces(rotation)
    except KeyError:
        return False
    # Euler's formula, one outer face per component.
    n, m = simple.number_of_nodes(), simple.number_of_edges()
    return n - m + faces == 2 * comps


def _suppress_degree_two(graph: nx.Graph) -> nx.Graph | None:
    """
    Replace every path through degree-2 vertices by a single edge.

    Returns:
        nx.Graph | None: The reduced graph, or None if suppression
            would create a parallel edge or a loop.
    """
    h = nx.Graph(graph)
    while True:
        x = next((v for v in h.nodes if h.degree(v) == 2), None)
        if x is None:
            return h
        y, z = list(h.neighbors(x))
        if h.has_edge(y, z):
            return None
        h.remove_node(x)
        h.add_edge(y, z)


def kuratowski_kind(edges: Iterable[tuple[int, int]]) -> str | None:
    """
    Classify an edge set as a subdivision of K5 or K3,3.

    Args:
        edges (Iterable[tuple[int, int]]): Edges of a simple graph.

    Returns:
        str | None: "K5", "K3,3", or None if the edges form neither.
    """
    graph = nx.Graph()
    for u, v in edges:
        if u == v or graph.has_edge(u, v):
            return None
        graph.add_edge(u, v)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        return None
    core = _suppress_degree_two(graph)
    if core is None:
        return None
    if nx.is_isomorphic(core, nx.complete_graph(5)):
        return K5
    if nx.is_isomorphic(core, nx.complete_bipartite_graph(3, 3)):
        return K33
    return None


def is_kuratowski_subdivision(edges: Iterable[tuple[int, int]]) -> bool:
    """True if the edges form a subdivision of K5 or K3,3."""
    return kuratowski_kind(edges) is not None


def is_planar(g: MultiGraph) -> tuple[bool, PlanarityWitness]:
    """
    Decide planarity and return a verifying witness either way.

    Args:
        g (MultiGraph): The graph.

    Returns:
        tuple[bool, PlanarityWitness]: The answer and its proof.
    """
    simple = g.underlying_simple()
    planar, certificate = nx.check_planarity(simple, counterexample=True)
    if planar:
        rotation = {
            v: tuple(certificate.neighbors_cw_order(v))
            for v in sorted(simple.nodes)
        }
        witness = PlanarityWitness(
            True, rotation=rotation, faces=count_faces(rotation)
        )
    else:
        kedges = tuple(
            sorted(tuple(sorted(e)) for e in certificate.edges())
        )
        witness = PlanarityWitness(
            False, kuratowski_edges=kedges, kind=kuratowski_kind(kedges)
        )
    logger.debug("Planarity of %r: %s", g, planar)
    return planar, witness


def verify_planarity_witness(g: MultiGraph, witness: PlanarityWitness) -> bool:
    """
    Check a planarity witness against a graph.

    Args:
        g (MultiGraph): The graph.
        witness (PlanarityWitness): The claimed proof.

    Returns:
        bool: True if the witness proves its claim about g.
    """
    simple = g.underlying_simple()
    if witness.planar:
        return _rotation_is_planar(simple, witness.rotation)
    edges = witness.kuratowski_edges
    if any(not simple.has_edge(u, v) for u, v in edges):
        return False
    return is_kuratowski_subdivision(edges)
