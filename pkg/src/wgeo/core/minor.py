#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Minor containment for small pattern graphs.

A model of a pattern h in a host g assigns to every vertex x of h a
branch set B(x) of host vertices such that the branch sets are disjoint,
each induces a connected subgraph of g, and for every pair x, y of h at
least as many host edges join B(x) to B(y) as h has edges joining x to
y. h is a minor of g exactly when such a model exists.

The search tries cheap constructions first and falls back to an
exhaustive search over edge contractions:

1. Counting: h cannot have more vertices or edges than g.
2. Kuratowski: a K5 or K3,3 pattern is read off the Kuratowski subgraph
   of a non-planar host; a planar host contains neither.
3. One large branch set: h minus a vertex p is mapped into g by a
   monomorphism and p takes a whole component of what is left.
4. Contractions: every sequence of contractions is explored, up to
   isomorphism, checking for a monomorphic copy of h at each step.
"""

from __future__ import annotations

import itertools
import logging

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .. import config
from .multigraph import MultiGraph
from .planarity import K5, K33, is_planar

logger = logging.getLogger(__name__)

MinorModel = dict[int, frozenset[int]]

# Monomorphisms examined per pattern vertex by the one-large-branch-set
# construction.
_MONOMORPHISM_LIMIT = 5000


def _covers(host_edge: dict, pattern_edge: dict) -> bool:
    return bool(host_edge["multiplicity"] >= pattern_edge["multiplicity"])


def _hashable(simple: nx.Graph) -> nx.Graph:
    """Copy of a simple graph with string edge labels for WL hashing."""
    out = nx.Graph()
    out.add_nodes_from(simple.nodes)
    for u, v, m in simple.edges(data="multiplicity"):
        out.add_edge(u, v, label=str(m))
    return out


def verify_minor_model(
    g: MultiGraph, h: MultiGraph, model: MinorModel
) -> bool:
    """
    Check a branch-set model of h in g.

    Args:
        g (MultiGraph): The host.
        h (MultiGraph): The pattern.
        model (MinorModel): Branch set of every pattern vertex.

    Returns:
        bool: True if the model proves that h is a minor of g.
    """
    if sorted(model) != h.vertex_ids():
        return False
    used: set[int] = set()
    for branch in model.values():
        if not branch or used & branch:
            return False
        if any(not g.has_vertex(v) for v in branch):
            return False
        if not g.induced_subgraph(branch).is_connected():
            return False
        used |= branch
    owner = {v: x for x, branch in model.items() for v in branch}
    between: dict[tuple[int, int], int] = {}
    for _, (a, b) in g.edges:
        if a in owner and b in owner and owner[a] != owner[b]:
            key = tuple(sorted((owner[a], owner[b])))
            between[key] = between.get(key, 0) + 1  # type: ignore[index]
    return all(
        between.get(pair, 0) >= m for pair, m in h.edge_multiset().items()
    )


def _kuratowski_model(g: MultiGraph, h: MultiGraph) -> MinorModel | None:
    """Read a K5 or K3,3 model off the Kuratowski subgraph of g."""
    simple_h = h.underlying_simple()
    if any(m > 1 for _, _, m in simple_h.edges(data="multiplicity")):
        return None
    if nx.is_isomorphic(simple_h, nx.complete_graph(5)):
        kind = K5
    elif nx.is_isomorphic(simple_h, nx.complete_bipartite_graph(3, 3)):
        kind = K33
    else:
        return None
    planar, witness = is_planar(g)
    if planar or witness.kind != kind:
        return None
    sub = nx.Graph(list(witness.kuratowski_edges))
    branch_vertices = [v for v in sorted(sub.nodes) if sub.degree(v) > 2]
    core = nx.Graph()
    core.add_nodes_from(branch_vertices)
    sets = {b: {b} for b in branch_vertices}
    for b in branch_vertices:
        for first in sub.neighbors(b):
            prev, cur, internal = b, first, []
            while sub.degree(cur) == 2:
                internal.append(cur)
                prev, cur = cur, next(
                    w for w in sub.neighbors(cur) if w != prev
                )
            if b < cur:
                sets[b].update(internal)
                core.add_edge(b, cur)
    matcher = GraphMatcher(core, simple_h)
    if not matcher.is_isomorphic():
        return None
    return {
        matcher.mapping[b]: frozenset(sets[b]) for b in branch_vertices
    }


def _edges_into(g: MultiGraph, v: int, targets: set[int]) -> int:
    """Number of edges from v to a vertex of `targets`."""
    return sum(
        1 for e in g.incident_edges(v) if g.other_end(e, v) in targets
    )


def _single_branch_model(g: MultiGraph, h: MultiGraph) -> MinorModel | None:
    """Model where every branch set but one is a single vertex."""
    g_simple = g.underlying_simple()
    h_multi = h.edge_multiset()
    for p in h.vertex_ids():
        rest = h.delete_vertex(p)
        matcher = GraphMatcher(
            g_simple, rest.underlying_simple(), edge_match=_covers
        )
        demands = {
            q: h_multi[tuple(sorted((p, q)))] for q in h.neighbors(p)
        }
        for mapping in itertools.islice(
            matcher.subgraph_monomorphisms_iter(), _MONOMORPHISM_LIMIT
        ):
            image = {q: v for v, q in mapping.items()}
            leftover = g.induced_subgraph(
                v for v in g.vertex_ids() if v not in mapping
            )
            for comp in leftover.components():
                cset = set(comp)
                if all(
                    _edges_into(g, image[q], cset) >= m
                    for q, m in demands.items()
                ):
                    model = {q: frozenset({v}) for q, v in image.items()}
                    model[p] = frozenset(comp)
                    return model
    return None


class _ContractionSearch:
    """Exhaustive search over contractions, deduplicated by isomorphism."""

    def __init__(self, h: MultiGraph) -> None:
        self.pattern = h.underlying_simple()
        self.pattern_vertices = h.number_of_vertices()
        self.pattern_edges = h.number_of_edges()
        self.seen: dict[str, list[nx.Graph]] = {}
        self.states = 0

    def _visited(self, simple: nx.Graph) -> bool:
        key = nx.weisfeiler_lehman_graph_hash(
            _hashable(simple), edge_attr="label"
        )
        bucket = self.seen.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(
                simple,
                other,
                edge_match=lambda a, b: a["multiplicity"]
                == b["multiplicity"],
            ):
                return True
        bucket.append(simple)
        return False

    def run(
        self, g: MultiGraph, branches: dict[int, frozenset[int]]
    ) -> MinorModel | None:
        if (
            g.number_of_vertices() < self.pattern_vertices
            or g.number_of_edges() < self.pattern_edges
        ):
            return None
        simple = g.underlying_simple()
        if self._visited(simple):
            return None
        self.states += 1
        matcher = GraphMatcher(simple, self.pattern, edge_match=_covers)
        mapping = next(matcher.subgraph_monomorphisms_iter(), None)
        if mapping is not None:
            return {q: branches[v] for v, q in mapping.items()}
        if g.number_of_vertices() == self.pattern_vertices:
            return None
        for u, v in sorted(g.edge_multiset()):
            merged = dict(branches)
            merged[u] = branches[u] | merged.pop(v)
            found = self.run(g.merge_vertices(u, v), merged)
            if found is not None:
                return found
        return None


def contains_minor(
    g: MultiGraph,
    h: MultiGraph,
    pattern_cap: int = config.MINOR_PATTERN_CAP,
    host_cap: int = config.MINOR_HOST_CAP,
) -> tuple[bool, MinorModel | None]:
    """
    Decide whether h is a minor of g.

    Args:
        g (MultiGraph): The host.
        h (MultiGraph): The pattern.
        pattern_cap (int): Largest pattern vertex count accepted.
        host_cap (int): Largest host vertex count accepted.

    Returns:
        tuple[bool, MinorModel | None]: The answer and, if true, branch
            sets keyed by the vertex ids of h.

    Raises:
        ValueError: If h or g exceeds its size cap.
    """
    if h.number_of_vertices() > pattern_cap:
        raise ValueError(
            f"Minor pattern limited to {pattern_cap} vertices, got "
            f"{h.number_of_vertices()}"
        )
    if g.number_of_vertices() > host_cap:
        raise ValueError(
            f"Minor host limited to {host_cap} vertices, got "
            f"{g.number_of_vertices()}"
        )
    if (
        h.number_of_vertices() > g.number_of_vertices()
        or h.number_of_edges() > g.number_of_edges()
    ):
        return False, None
    if h.number_of_vertices() == 0:
        return True, {}

    model = _kuratowski_model(g, h)
    if model is not None:
        logger.debug("Minor found from the Kuratowski subgraph")
        return True, model
    simple_h = h.underlying_simple()
    if (
        all(m == 1 for _, _, m in simple_h.edges(data="multiplicity"))
        and (
            nx.is_isomorphic(simple_h, nx.complete_graph(5))
            or nx.is_isomorphic(simple_h, nx.complete_bipartite_graph(3, 3))
        )
        and is_planar(g)[0]
    ):
        return False, None

    model = _single_branch_model(g, h)
    if model is not None:
        logger.debug("Minor found with a single large branch set")
        return True, model

    search = _ContractionSearch(h)
    model = search.run(g, {v: frozenset({v}) for v in g.vertex_ids()})
    logger.debug("Contraction search visited %d states", search.states)
    if model is None:
        return False, None
    return True, model
