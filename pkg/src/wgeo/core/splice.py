#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Splicing multigraphs and simulating the graphs of finite covers.

Splicing G1 and G2 at vertices v1, v2 of equal valence deletes both
vertices and joins the severed edge-ends in pairs given by a bijection
sigma from the edges at v1 to the edges at v2.

A cover of degree d is modeled by d labeled copies of a Whitehead graph
joined by d - 1 random splices, each between two distinct components.
The simulator samples splice sequences; it does not decide which of
them come from actual covers.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from numpy.random import Generator

from .. import config
from ..utils.rng import SeedLike, make_rng
from .connectivity import edge_connectivity
from .minor import contains_minor
from .multigraph import MultiGraph
from .planarity import is_planar

logger = logging.getLogger(__name__)

Sigma = tuple[tuple[int, int], ...]


class SimulationError(RuntimeError):
    """Raised when no admissible splice can be chosen."""


def _check_sigma(
    sigma: Sequence[tuple[int, int]],
    first_edges: Sequence[int],
    second_edges: Sequence[int],
) -> None:
    if len(first_edges) != len(second_edges):
        raise ValueError(
            f"Valence mismatch: {len(first_edges)} != {len(second_edges)}"
        )
    if sorted(e for e, _ in sigma) != sorted(first_edges) or sorted(
        f for _, f in sigma
    ) != sorted(second_edges):
        raise ValueError("Sigma is not a bijection of the incident edges")


@dataclass(frozen=True)
class SpliceInstruction:
    """Where and how to splice two graphs.

    Attributes:
        first (MultiGraph): G1.
        v1 (int): Vertex of G1.
        second (MultiGraph): G2.
        v2 (int): Vertex of G2, of the same valence as v1.
        sigma (Sigma): (edge at v1, edge at v2) pairs.
    """

    first: MultiGraph
    v1: int
    second: MultiGraph
    v2: int
    sigma: Sigma

    def __post_init__(self) -> None:
        """
        Check valences and sigma.

        Raises:
            KeyError: If v1 or v2 is not a vertex of its graph.
            ValueError: If the valences differ or sigma is not a
                bijection between the incident edges.
        """
        _check_sigma(
            self.sigma,
            self.first.incident_edges(self.v1),
            self.second.incident_edges(self.v2),
        )


def random_sigma(
    v1_edges: Sequence[int], v2_edges: Sequence[int], rng: Generator
) -> Sigma:
    """
    Draw a uniformly random bijection between two edge lists.

    Raises:
        ValueError: If the lists have different lengths.
    """
    if len(v1_edges) != len(v2_edges):
        raise ValueError(
            f"Valence mismatch: {len(v1_edges)} != {len(v2_edges)}"
        )
    order = rng.permutation(len(v2_edges))
    return tuple(
        (e, v2_edges[int(i)]) for e, i in zip(sorted(v1_edges), order)
    )


def _splice_within(
    g: MultiGraph, v1: int, v2: int, sigma: Sequence[tuple[int, int]]
) -> MultiGraph:
    """Delete v1 and v2 from one graph and join their edges by sigma."""
    _check_sigma(sigma, g.incident_edges(v1), g.incident_edges(v2))
    gone = set(g.incident_edges(v1)) | set(g.incident_edges(v2))
    edges = [uv for e, uv in g.edges if e not in gone]
    for e, f in sorted(sigma):
        edges.append((g.other_end(e, v1), g.other_end(f, v2)))
    return MultiGraph(
        [(v, lab) for v, lab in g.vertices if v not in (v1, v2)],
        enumerate(edges),
    )


def splice(instr: SpliceInstruction) -> MultiGraph:
    """
    Splice two graphs.

    The vertices of G1 keep their ids; those of G2 are shifted past the
    largest id of G1. If a label of G2 already occurs in G1, every copy
    index of G2 is shifted past the largest copy index of G1.

    Args:
        instr (SpliceInstruction): The splice.

    Returns:
        MultiGraph: |V1| + |V2| - 2 vertices and |E1| + |E2| - k edges.
    """
    g1, g2 = instr.first, instr.second
    shift = max(g1.vertex_ids(), default=-1) + 1
    labels1 = {lab for _, lab in g1.vertices}
    labels2 = [lab for _, lab in g2.vertices]
    if labels1 & set(labels2):
        bump = max(lab.copy for lab in labels1) + 1
        labels2 = [lab.with_copy(lab.copy + bump) for lab in labels2]
    vertices = list(g1.vertices) + [
        (v + shift, lab) for (v, _), lab in zip(g2.vertices, labels2)
    ]
    eshift = max(g1.edge_ids(), default=-1) + 1
    edges = list(g1.edges) + [
        (e + eshift, (a + shift, b + shift)) for e, (a, b) in g2.edges
    ]
    union = MultiGraph(vertices, edges)
    sigma = [(e, f + eshift) for e, f in instr.sigma]
    return _splice_within(union, instr.v1, instr.v2 + shift, sigma)


def _admissible_pairs(
    g: MultiGraph, label_matched: bool
) -> list[tuple[int, int]]:
    """Vertex pairs in distinct components with equal positive valence."""
    component = {
        v: i for i, comp in enumerate(g.components()) for v in comp
    }
    valences = g.valences()
    pairs = []
    ids = g.vertex_ids()
    for i, u in enumerate(ids):
        if valences[u] == 0:
            continue
        for v in ids[i + 1:]:
            if component[u] == component[v] or valences[v] != valences[u]:
                continue
            if label_matched and (
                g.label(u).letter != g.label(v).letter.inverse()
            ):
                continue
            pairs.append((u, v))
    return pairs


def simulate_cover(
    w_graph: MultiGraph,
    d: int,
    seed: SeedLike,
    label_matched: bool = True,
) -> MultiGraph:
    """
    Model the Whitehead graph of a degree-d cover by splicing copies.

    Copy i (1..d) of every vertex label gets copy index i. Then d - 1
    splices are performed, each at a uniformly chosen admissible vertex
    pair in two distinct components with a uniformly random sigma.

    Args:
        w_graph (MultiGraph): A Whitehead graph.
        d (int): Number of copies, at least 1.
        seed (SeedLike): Seed or generator for every random choice.
        label_matched (bool): Only splice x^e in one component with
            x^-e in another.

    Returns:
        MultiGraph: w_graph itself when d == 1, otherwise the spliced
            graph.

    Raises:
        ValueError: If d < 1.
        SimulationError: If at some step no admissible pair exists.
    """
    if d < 1:
        raise ValueError(f"Number of copies must be >= 1, got {d}")
    if d == 1:
        return w_graph
    rng = make_rng(seed)
    g = MultiGraph.disjoint_union(
        w_graph.with_copy(i) for i in range(1, d + 1)
    )
    for step in range(d - 1):
        pairs = _admissible_pairs(g, label_matched)
        if not pairs:
            raise SimulationError(
                f"No admissible vertex pair at splice {step + 1} of {d - 1}"
            )
        v1, v2 = pairs[int(rng.integers(len(pairs)))]
        sigma = random_sigma(
            g.incident_edges(v1), g.incident_edges(v2), rng
        )
        logger.debug(
            "Splice %d: %s with %s", step + 1, g.label(v1), g.label(v2)
        )
        g = _splice_within(g, v1, v2, sigma)
    return g


def random_regular_connected_graph(
    n: int,
    k: int,
    seed: SeedLike,
    attempts: int = config.REGULAR_GRAPH_ATTEMPTS,
) -> MultiGraph:
    """
    Sample a k-valent, k-edge-connected loop-free multigraph.

    Uses the pairing model: k half-edges per vertex are matched
    uniformly at random; samples with a loop or that are not
    k-edge-connected are rejected.

    Args:
        n (int): Number of vertices.
        k (int): Valence.
        seed (SeedLike): Seed or generator.
        attempts (int): Rejection budget.

    Returns:
        MultiGraph: Vertices 0..n-1 labeled a, b, c, ...

    Raises:
        ValueError: If k < 1, n * k is odd or n < k + 1.
        RuntimeError: If every attempt is rejected.
    """
    if k < 1 or n * k % 2 or n < k + 1:
        raise ValueError(
            f"No {k}-regular graph on {n} vertices can be generated"
        )
    rng = make_rng(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    for attempt in range(attempts):
        order = rng.permutation(len(stubs))
        ends = [stubs[int(i)] for i in order]
        pairs = list(zip(ends[0::2], ends[1::2]))
        if any(u == v for u, v in pairs):
            continue
        g = MultiGraph.from_edges(n, pairs)
        if edge_connectivity(g)[0] >= k:
            logger.debug("Accepted sample after %d attempts", attempt + 1)
            return g
    raise RuntimeError(
        f"No {k}-edge-connected {k}-regular graph on {n} vertices "
        f"found in {attempts} attempts"
    )


def deletion_connectivity(g: MultiGraph) -> int:
    """Smallest edge connectivity of g with one vertex deleted."""
    return min(edge_connectivity(g.delete_vertex(v))[0] for v in g)


def deletion_bound(k: int) -> int:
    """Edge connectivity guaranteed after deleting a vertex of a
    k-valent, k-edge-connected graph."""
    return (k - 1) // 2 + 1


@dataclass(frozen=True)
class TrialResult:
    """Observations on one spliced graph.

    Attributes:
        valence (int | None): Common valence, or None if not regular.
        edge_connectivity (int): Edge connectivity.
        planar (bool): Planarity.
        minor_found (bool | None): Whether the pattern was found as a
            minor; None when the check does not apply.
        trial (int): Index in the batch.
        seed (int): Seed reproducing this trial alone.
        vertices (int): Vertex count.
        edges (int): Edge count.
        deletion_connectivity (int | None): Minimum edge connectivity of
            the input graphs after a vertex deletion, if measured.
        violations (tuple[str, ...]): Properties that failed.
    """

    valence: int | None
    edge_connectivity: int
    planar: bool
    minor_found: bool | None
    trial: int = 0
    seed: int = 0
    vertices: int = 0
    edges: int = 0
    deletion_connectivity: int | None = None
    violations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        """True if no property failed."""
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        """Serialize with the observed properties first."""
        data = asdict(self)
        data["violations"] = list(self.violations)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> TrialResult:
        """
        Deserialize a dict produced by `to_dict`.

        Raises:
            KeyError: If an observed property is missing.
        """
        return cls(
            valence=data["valence"],
            edge_connectivity=int(data["edge_connectivity"]),
            planar=bool(data["planar"]),
            minor_found=data["minor_found"],
            trial=int(data.get("trial", 0)),
            seed=int(data.get("seed", 0)),
            vertices=int(data.get("vertices", 0)),
            edges=int(data.get("edges", 0)),
            deletion_connectivity=data.get("deletion_connectivity"),
            violations=tuple(data.get("violations", ())),
        )


def _observe(
    g: MultiGraph,
    pattern: MultiGraph | None,
    expected_k: int | None,
    expect_nonplanar: bool,
    expect_connected: bool = True,
) -> tuple[int | None, int, bool, bool | None, list[str]]:
    valence = g.is_regular()
    connectivity = edge_connectivity(g)[0]
    planar = is_planar(g)[0]
    minor: bool | None = None
    if (
        pattern is not None
        and pattern.number_of_vertices() <= config.MINOR_PATTERN_CAP
        and g.number_of_vertices() <= config.MINOR_HOST_CAP
    ):
        minor = contains_minor(g, pattern)[0]
    problems = []
    if expect_connected and not g.is_connected():
        problems.append("disconnected")
    if expected_k is not None:
        if valence != expected_k:
            problems.append(f"not {expected_k}-regular")
        if connectivity < expected_k:
            problems.append(f"not {expected_k}-edge-connected")
    if expect_nonplanar and planar:
        problems.append("planar")
    if minor is False:
        problems.append("minor missing")
    return valence, connectivity, planar, minor, problems


def splice_trial(
    k: int, n1: int, n2: int, seed: int, trial: int = 0
) -> TrialResult:
    """
    Splice two random k-valent, k-edge-connected graphs and check it.

    G1 on n1 vertices and G2 on n2 vertices are spliced at random
    vertices with a random sigma. The result must be k-valent and
    k-edge-connected; when G2 minus v2 is connected it must contain G1
    as a minor; and deleting any vertex of G1 or G2 must leave a
    ((k - 1) // 2 + 1)-edge-connected graph.

    Args:
        k (int): Valence.
        n1 (int): Vertices of G1 (the minor pattern, at most 8).
        n2 (int): Vertices of G2.
        seed (int): Trial seed.
        trial (int): Index recorded in the result.

    Returns:
        TrialResult: The observations and any violated property.
    """
    rng = make_rng(seed)
    g1 = random_regular_connected_graph(n1, k, rng)
    g2 = random_regular_connected_graph(n2, k, rng).with_copy(1)
    v1 = int(rng.integers(n1))
    v2 = int(rng.integers(n2))
    sigma = random_sigma(g1.incident_edges(v1), g2.incident_edges(v2), rng)
    g = splice(SpliceInstruction(g1, v1, g2, v2, sigma))

    pattern = g1 if g2.delete_vertex(v2).is_connected() else None
    valence, connectivity, planar, minor, problems = _observe(
        g, pattern, k, False
    )
    deletion = min(deletion_connectivity(g1), deletion_connectivity(g2))
    if deletion < deletion_bound(k):
        problems.append("vertex deletion below bound")
    return TrialResult(
        valence,
        connectivity,
        planar,
        minor,
        trial=trial,
        seed=seed,
        vertices=g.number_of_vertices(),
        edges=g.number_of_edges(),
        deletion_connectivity=deletion,
        violations=tuple(problems),
    )


def cover_trial(
    w_graph: MultiGraph,
    d: int,
    seed: int,
    trial: int = 0,
    label_matched: bool = True,
) -> TrialResult:
    """
    Simulate one cover and check what the base graph guarantees.

    If the base graph is k-valent and k-edge-connected, so must the
    result be; if the base is non-planar, the result must be non-planar
    and contain the base as a minor (when within the minor search caps).

    Args:
        w_graph (MultiGraph): The base Whitehead graph.
        d (int): Number of copies.
        seed (int): Trial seed.
        trial (int): Index recorded in the result.
        label_matched (bool): Passed to `simulate_cover`.

    Returns:
        TrialResult: The observations and any violated property.
    """
    g = simulate_cover(w_graph, d, seed, label_matched)
    base_k = w_graph.is_regular()
    expected_k = (
        base_k
        if base_k and edge_connectivity(w_graph)[0] >= base_k
        else None
    )
    base_nonplanar = not is_planar(w_graph)[0]
    pattern = (
        w_graph
        if base_nonplanar
        and w_graph.number_of_vertices() <= config.MINOR_PATTERN_CAP
        else None
    )
    valence, connectivity, planar, minor, problems = _observe(
        g, pattern, expected_k, base_nonplanar, w_graph.is_connected()
    )
    return TrialResult(
        valence,
        connectivity,
        planar,
        minor,
        trial=trial,
        seed=seed,
        vertices=g.number_of_vertices(),
        edges=g.number_of_edges(),
        violations=tuple(problems),
    )

