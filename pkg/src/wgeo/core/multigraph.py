#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Module for loop-free multigraphs with labeled vertices.

This module defines the `MultiGraph` class used for Whitehead graphs,
spliced graphs and cover simulations. Multiple edges may join a pair of
vertices, but no edge joins a vertex to itself. Graphs are immutable:
every operation returns a new graph.

Vertex labels are (generator, sign, copy) triples so that cover
simulations and splices keep track of where each vertex came from.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

import networkx as nx

from .word import Letter, letter_from_name


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Provenance of a vertex: a letter and the copy it belongs to.

    Attributes:
        generator (int): Generator index of the letter.
        sign (int): +1 for x, -1 for x^-1.
        copy (int): Copy index; 0 for an unspliced Whitehead graph.
    """

    generator: int
    sign: int
    copy: int = 0

    @classmethod
    def of(cls, letter: Letter, copy: int = 0) -> VertexLabel:
        """Label for a letter in a given copy."""
        return cls(letter.generator, letter.sign, copy)

    @property
    def letter(self) -> Letter:
        """The letter this vertex stands for."""
        return Letter(self.generator, self.sign)

    def inverse(self) -> VertexLabel:
        """Label of the inverse letter in the same copy."""
        return VertexLabel(self.generator, -self.sign, self.copy)

    def with_copy(self, copy: int) -> VertexLabel:
        """Same letter, another copy."""
        return VertexLabel(self.generator, self.sign, copy)

    def name(self) -> str:
        """Display name, e.g. `a`, `A_2`."""
        base = self.letter.name()
        return f"{base}_{self.copy}" if self.copy else base

    def __str__(self) -> str:
        return self.name()


class MultiGraph:
    """An immutable loop-free multigraph with labeled vertices.

    Attributes:
        vertices (tuple[tuple[int, VertexLabel], ...]): (id, label) pairs
            in ascending id order.
        edges (tuple[tuple[int, tuple[int, int]], ...]): (edge id,
            endpoint pair) in ascending edge id order.
    """

    def __init__(
        self,
        vertices: Iterable[tuple[int, VertexLabel]],
        edges: Iterable[tuple[int, tuple[int, int]]] = (),
    ) -> None:
        """Initialize a MultiGraph.

        Args:
            vertices (Iterable[tuple[int, VertexLabel]]): Vertex ids with
                their labels. Ids and labels must be unique.
            edges (Iterable[tuple[int, tuple[int, int]]]): Edge ids with
                their endpoints. Parallel edges are allowed.

        Raises:
            ValueError: On duplicate ids or labels, or a loop.
            KeyError: If an edge endpoint is not a vertex.
        """
        self._labels: dict[int, VertexLabel] = {}
        for vid, label in sorted(vertices, key=lambda p: p[0]):
            if vid in self._labels:
                raise ValueError(f"Duplicate vertex id {vid}")
            self._labels[vid] = label
        if len(set(self._labels.values())) != len(self._labels):
            raise ValueError("Vertex labels must be unique")

        self._edges: dict[int, tuple[int, int]] = {}
        self._incident: dict[int, list[int]] = {v: [] for v in self._labels}
        for eid, (u, v) in sorted(edges, key=lambda p: p[0]):
            if eid in self._edges:
                raise ValueError(f"Duplicate edge id {eid}")
            if u == v:
                raise ValueError(
                    f"Edge {eid} joins vertex {u} to itself; loops are "
                    "not allowed"
                )
            for end in (u, v):
                if end not in self._labels:
                    raise KeyError(f"Edge {eid} has unknown endpoint {end}")
            self._edges[eid] = (u, v)
            self._incident[u].append(eid)
            self._incident[v].append(eid)
        self._by_label = {lab: vid for vid, lab in self._labels.items()}

    # --- builders ---------------------------------------------------------

    @classmethod
    def from_edges(
        cls, n: int, pairs: Iterable[tuple[int, int]]
    ) -> MultiGraph:
        """
        Build a graph on vertices 0..n-1 with default labels.

        Vertex i is labeled with generator i + 1, so vertices print as
        a, b, c, ...

        Args:
            n (int): Number of vertices.
            pairs (Iterable[tuple[int, int]]): Endpoints, one per edge.

        Returns:
            MultiGraph: The graph; edge ids follow the order of `pairs`.
        """
        vertices = [(i, VertexLabel(i + 1, 1)) for i in range(n)]
        return cls(vertices, enumerate(pairs))

    @classmethod
    def complete(cls, n: int) -> MultiGraph:
        """K_n."""
        return cls.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n)]
        )

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> MultiGraph:
        """K_{m,n}; the first m vertices form one side."""
        return cls.from_edges(
            m + n, [(i, m + j) for i in range(m) for j in range(n)]
        )

    @classmethod
    def cycle(cls, n: int) -> MultiGraph:
        """The cycle C_n (n >= 2; C_2 is a doubled edge)."""
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> MultiGraph:
        """The path on n vertices."""
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def disjoint_union(cls, graphs: Iterable[MultiGraph]) -> MultiGraph:
        """
        Disjoint union; ids are renumbered consecutively, labels kept.

        Raises:
            ValueError: If two graphs share a vertex label.
        """
        vertices: list[tuple[int, VertexLabel]] = []
        edges: list[tuple[int, tuple[int, int]]] = []
        for g in graphs:
            remap = {}
            for vid, label in g.vertices:
                remap[vid] = len(vertices)
                vertices.append((len(vertices), label))
            for _, (u, v) in g.edges:
                edges.append((len(edges), (remap[u], remap[v])))
        return cls(vertices, edges)

    # --- accessors --------------------------------------------------------

    @property
    def vertices(self) -> tuple[tuple[int, VertexLabel], ...]:
        return tuple(self._labels.items())

    @property
    def edges(self) -> tuple[tuple[int, tuple[int, int]], ...]:
        return tuple(self._edges.items())

    def vertex_ids(self) -> list[int]:
        """Vertex ids in ascending order."""
        return list(self._labels)

    def edge_ids(self) -> list[int]:
        """Edge ids in ascending order."""
        return list(self._edges)

    def number_of_vertices(self) -> int:
        return len(self._labels)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._labels

    def label(self, v: int) -> VertexLabel:
        """
        Return the label of a vertex.

        Raises:
            KeyError: If v is not a vertex.
        """
        try:
            return self._labels[v]
        except KeyError as e:
            raise KeyError(f"Unknown vertex {v}") from e

    def vertex_of(self, label: VertexLabel) -> int:
        """
        Return the id of the vertex carrying a label.

        Raises:
            KeyError: If no vertex carries the label.
        """
        try:
            return self._by_label[label]
        except KeyError as e:
            raise KeyError(f"No vertex labeled {label}") from e

    def endpoints(self, e: int) -> tuple[int, int]:
        """
        Return the endpoints of an edge.

        Raises:
            KeyError: If e is not an edge.
        """
        try:
            return self._edges[e]
        except KeyError as e_:
            raise KeyError(f"Unknown edge {e}") from e_

    def incident_edges(self, v: int) -> list[int]:
        """Edge ids incident to v, ascending."""
        self.label(v)
        return list(self._incident[v])

    def other_end(self, e: int, v: int) -> int:
        """The endpoint of e that is not v."""
        a, b = self.endpoints(e)
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors of v, ascending."""
        return sorted({self.other_end(e, v) for e in self.incident_edges(v)})

    def multiplicity(self, u: int, v: int) -> int:
        """Number of edges joining u and v."""
        return sum(1 for e in self.incident_edges(u) if v in self._edges[e])

    def valence(self, v: int) -> int:
        """
        Return the number of edges incident to v, with multiplicity.

        Raises:
            KeyError: If v is not a vertex.
        """
        return len(self.incident_edges(v))

    def valences(self) -> dict[int, int]:
        """Valence of every vertex."""
        return {v: len(es) for v, es in self._incident.items()}

    def is_regular(self) -> int | None:
        """
        Return k if every vertex has valence k, else None.

        Raises:
            ValueError: If the graph has no vertices.
        """
        if not self._labels:
            raise ValueError("Regularity of the empty graph is undefined")
        values = set(self.valences().values())
        return values.pop() if len(values) == 1 else None

    # --- operations -------------------------------------------------------

    def delete_vertex(self, v: int) -> MultiGraph:
        """
        Remove a vertex and every edge incident to it.

        Raises:
            KeyError: If v is not a vertex.
        """
        gone = set(self.incident_edges(v))
        return MultiGraph(
            [(u, lab) for u, lab in self._labels.items() if u != v],
            [(e, uv) for e, uv in self._edges.items() if e not in gone],
        )

    def delete_edges(self, edge_ids: Iterable[int]) -> MultiGraph:
        """
        Remove some edges, keeping every vertex.

        Raises:
            KeyError: If some id is not an edge.
        """
        gone = set(edge_ids)
        for e in gone:
            self.endpoints(e)
        return MultiGraph(
            self.vertices,
            [(e, uv) for e, uv in self._edges.items() if e not in gone],
        )

    def contract_edge(self, e: int) -> MultiGraph:
        """
        Contract an edge, merging its second endpoint into the first.

        Every edge parallel to e would become a loop and is discarded;
        the merged vertex keeps the id and label of the first endpoint.

        Raises:
            KeyError: If e is not an edge.
        """
        u, v = self.endpoints(e)
        return self.merge_vertices(u, v)

    def merge_vertices(self, u: int, v: int) -> MultiGraph:
        """Identify v with u, dropping edges that would become loops."""
        self.label(u)
        self.label(v)
        edges = []
        for eid, (a, b) in self._edges.items():
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                edges.append((eid, (a2, b2)))
        return MultiGraph(
            [(w, lab) for w, lab in self._labels.items() if w != v], edges
        )

    def induced_subgraph(self, keep: Iterable[int]) -> MultiGraph:
        """Subgraph induced on a vertex set."""
        ks = set(keep)
        return MultiGraph(
            [(v, lab) for v, lab in self._labels.items() if v in ks],
            [
                (e, (a, b))
                for e, (a, b) in self._edges.items()
                if a in ks and b in ks
            ],
        )

    def relabel(self, mapping: dict[int, VertexLabel]) -> MultiGraph:
        """Replace the labels of some vertices."""
        return MultiGraph(
            [(v, mapping.get(v, lab)) for v, lab in self._labels.items()],
            self.edges,
        )

    def with_copy(self, copy: int) -> MultiGraph:
        """Same graph with every label moved to another copy."""
        return MultiGraph(
            [(v, lab.with_copy(copy)) for v, lab in self._labels.items()],
            self.edges,
        )

    # --- structure --------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as ascending id lists, by smallest id."""
        comps = [
            sorted(c) for c in nx.connected_components(self.to_networkx())
        ]
        return sorted(comps, key=lambda c: c[0])

    def is_connected(self) -> bool:
        """True if the graph is nonempty and connected."""
        return bool(self._labels) and len(self.components()) == 1

    def to_networkx(self) -> nx.MultiGraph:
        """Convert to a networkx MultiGraph keyed by edge id."""
        g = nx.MultiGraph()
        for v, lab in self._labels.items():
            g.add_node(v, label=lab)
        for e, (a, b) in self._edges.items():
            g.add_edge(a, b, key=e)
        return g

    def underlying_simple(self) -> nx.Graph:
        """
        Return the underlying simple graph.

        Each edge carries its multiplicity as both `multiplicity` and
        `capacity`, so the result also serves as a flow network.
        """
        g = nx.Graph()
        g.add_nodes_from(self._labels)
        counts = Counter(tuple(sorted(uv)) for uv in self._edges.values())
        for (a, b), m in sorted(counts.items()):
            g.add_edge(a, b, multiplicity=m, capacity=m)
        return g

    def edge_multiset(self) -> Counter[tuple[int, int]]:
        """Multiplicity of every adjacent vertex pair (sorted pairs)."""
        return Counter(tuple(sorted(uv)) for uv in self._edges.values())

    # --- output -----------------------------------------------------------

    def to_dot(self, name: str = "W") -> str:
        """
        Emit Graphviz DOT, byte-stable for a given graph.

        One node per vertex named by its label, in vertex id order, then
        one line per edge in edge id order.

        Args:
            name (str): Graph name.

        Returns:
            str: The DOT document, newline terminated.
        """
        lines = [f"graph {name} {{"]
        for v, lab in self._labels.items():
            lines.append(f'  "{lab.name()}";')
        for e, (a, b) in self._edges.items():
            lines.append(
                f'  "{self._labels[a].name()}" -- "{self._labels[b].name()}";'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a JSON-friendly dict."""
        return {
            "vertices": [
                {"id": v, "label": lab.name()}
                for v, lab in self._labels.items()
            ],
            "edges": [
                {"id": e, "ends": [a, b]} for e, (a, b) in self._edges.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> MultiGraph:
        """
        Deserialize a dict produced by `to_dict`.

        Raises:
            KeyError: If a required key is missing.
            ValueError: If a label or edge is invalid.
        """
        vertices = []
        for item in data["vertices"]:
            vertices.append((int(item["id"]), parse_label(item["label"])))
        edges = [
            (int(item["id"]), (int(item["ends"][0]), int(item["ends"][1])))
            for item in data["edges"]
        ]
        return cls(vertices, edges)

    # --- dunder -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self._labels)

    def __contains__(self, v: object) -> bool:
        return v in self._labels

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (
            self._labels == other._labels and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"vertices={len(self._labels)}, edges={len(self._edges)})"
        )


def parse_label(name: str) -> VertexLabel:
    """
    Parse a label name such as `a`, `A_2` or `x27_1`.

    Raises:
        ValueError: If the name is malformed.
    """
    base, _, copy = name.partition("_")
    try:
        letter = letter_from_name(base)
        copy_index = int(copy) if copy else 0
    except ValueError as e:
        raise ValueError(f"Invalid vertex label: {name!r}") from e
    return VertexLabel.of(letter, copy_index)


def valence(g: MultiGraph, v: int) -> int:
    """Number of edges incident to v, counted with multiplicity."""
    return g.valence(v)


def is_regular(g: MultiGraph) -> int | None:
    """Common valence of every vertex, or None."""
    return g.is_regular()


def delete_vertex(g: MultiGraph, v: int) -> MultiGraph:
    """Remove v and its incident edges."""
    return g.delete_vertex(v)


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Contract e, discarding edges that would become loops."""
    return g.contract_edge(e)
