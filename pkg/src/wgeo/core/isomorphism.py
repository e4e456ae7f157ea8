#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Isomorphism of small multigraphs, respecting edge multiplicities.
"""

from __future__ import annotations

from collections import Counter

from networkx.algorithms.isomorphism import GraphMatcher

from .. import config
from .multigraph import MultiGraph


def same_multiplicity(a: dict, b: dict) -> bool:
    """Edge matcher comparing the number of parallel edges."""
    return bool(a["multiplicity"] == b["multiplicity"])


def is_isomorphic(
    g: MultiGraph, h: MultiGraph, cap: int = config.ISOMORPHISM_CAP
) -> tuple[bool, dict[int, int] | None]:
    """
    Decide whether two multigraphs are isomorphic.

    Args:
        g (MultiGraph): First graph.
        h (MultiGraph): Second graph.
        cap (int): Largest vertex count accepted.

    Returns:
        tuple[bool, dict[int, int] | None]: The answer and, if true, a
            bijection from the vertex ids of g to those of h preserving
            the number of edges between every pair.

    Raises:
        ValueError: If either graph has more than `cap` vertices.
    """
    for graph in (g, h):
        if graph.number_of_vertices() > cap:
            raise ValueError(
                f"Isomorphism test limited to {cap} vertices, got "
                f"{graph.number_of_vertices()}"
            )
    if (
        g.number_of_vertices() != h.number_of_vertices()
        or g.number_of_edges() != h.number_of_edges()
        or Counter(g.valences().values()) != Counter(h.valences().values())
    ):
        return False, None
    matcher = GraphMatcher(
        g.underlying_simple(),
        h.underlying_simple(),
        edge_match=same_multiplicity,
    )
    if not matcher.is_isomorphic():
        return False, None
    return True, dict(sorted(matcher.mapping.items()))


def is_isomorphism(
    g: MultiGraph, h: MultiGraph, mapping: dict[int, int]
) -> bool:
    """Check that a vertex bijection carries g onto h exactly."""
    if sorted(mapping) != g.vertex_ids():
        return False
    if sorted(mapping.values()) != h.vertex_ids():
        return False
    image = Counter(
        tuple(sorted((mapping[u], mapping[v])))
        for u, v in g.edge_multiset().elements()
    )
    return image == h.edge_multiset()
