#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Brute-force reference implementations used to check the library.

Everything here is exhaustive enumeration over edge subsets, vertex
assignments, paths and rotations. Nothing is shared with the modules
under test beyond the MultiGraph container.
"""

import itertools
from collections import deque
from typing import Iterable, Iterator

import networkx as nx

from wgeo.core.multigraph import MultiGraph


def stack_reduce(ints: Iterable[int]) -> list[int]:
    """Free reduction of signed generator indices with a stack."""
    stack: list[int] = []
    for x in ints:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return stack


def strip_cyclic(ints: list[int]) -> list[int]:
    """Remove inverse first/last pairs until none is left."""
    out = list(ints)
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return out


def _code(x: int) -> int:
    return 2 * abs(x) + (0 if x > 0 else 1)


def least_rotation_codes(ints: list[int]) -> list[int]:
    """Lexicographically least rotation, compared by letter code."""
    rotations = [ints[i:] + ints[:i] for i in range(len(ints))]
    return min(rotations, key=lambda r: [_code(x) for x in r])


def cyclic_int_words(rank: int, length: int) -> list[list[int]]:
    """Least rotations of every cyclically reduced word of one length."""
    letters = [s * g for g in range(1, rank + 1) for s in (1, -1)]
    found = set()
    for seq in itertools.product(letters, repeat=length):
        ints = list(seq)
        if strip_cyclic(stack_reduce(ints)) == ints:
            found.add(tuple(least_rotation_codes(ints)))
    ordered = sorted(found, key=lambda r: [_code(x) for x in r])
    return [list(w) for w in ordered]


def short_int_collections(
    rank: int, max_total: int
) -> Iterator[list[list[int]]]:
    """One- and two-word collections, up to order, of total length at
    most max_total."""
    pool = [
        w
        for n in range(1, max_total + 1)
        for w in cyclic_int_words(rank, n)
    ]
    for i, w in enumerate(pool):
        yield [w]
        for v in pool[i:]:
            if len(w) + len(v) > max_total:
                break
            yield [w, v]


def _connected_after_removal(g: MultiGraph, removed: set[int]) -> bool:
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertex_ids())
    for e, (a, b) in g.edges:
        if e not in removed:
            graph.add_edge(a, b)
    return nx.is_connected(graph)


def brute_edge_connectivity(g: MultiGraph) -> int:
    """Smallest number of edges whose removal disconnects g."""
    if not _connected_after_removal(g, set()):
        return 0
    edges = g.edge_ids()
    for size in range(1, len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            if not _connected_after_removal(g, set(subset)):
                return size
    return len(edges)


def brute_min_cut(g: MultiGraph, s: int, t: int) -> int:
    """Smallest number of edges separating s from t."""
    edges = g.edge_ids()
    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            graph = nx.MultiGraph()
            graph.add_nodes_from(g.vertex_ids())
            graph.add_edges_from(
                uv for e, uv in g.edges if e not in set(subset)
            )
            if not nx.has_path(graph, s, t):
                return size
    return len(edges)


def brute_has_minor(g: MultiGraph, h: MultiGraph) -> bool:
    """
    Decide minor containment by trying every assignment of host
    vertices to pattern vertices or to "deleted". Tiny graphs only.
    """
    hv = h.vertex_ids()
    gv = g.vertex_ids()
    need = h.edge_multiset()
    for choice in itertools.product([None, *hv], repeat=len(gv)):
        branches: dict[int, set[int]] = {x: set() for x in hv}
        for v, x in zip(gv, choice):
            if x is not None:
                branches[x].add(v)
        if any(not b for b in branches.values()):
            continue
        if any(
            not g.induced_subgraph(b).is_connected()
            for b in branches.values()
        ):
            continue
        owner = {v: x for v, x in zip(gv, choice) if x is not None}
        have: dict[tuple[int, int], int] = {}
        for _, (a, b) in g.edges:
            if a in owner and b in owner and owner[a] != owner[b]:
                key = (min(owner[a], owner[b]), max(owner[a], owner[b]))
                have[key] = have.get(key, 0) + 1
        if all(have.get(pair, 0) >= m for pair, m in need.items()):
            return True
    return False


def brute_is_nonplanar(simple: nx.Graph) -> bool:
    """
    Search for a K5 or K3,3 subdivision by routing paths.

    Branch vertices are chosen among vertices of degree >= 3 (>= 4 for
    K5); the required branch edges are then routed one at a time along
    internally disjoint paths, trying every simple path in turn.
    """

    def route(
        pairs: list[tuple[int, int]], used: set[int], branch: set[int]
    ) -> bool:
        if not pairs:
            return True
        (u, v), rest = pairs[0], pairs[1:]
        blocked = (used | branch) - {u, v}
        allowed = simple.subgraph(n for n in simple.nodes if n not in blocked)
        for path in nx.all_simple_paths(allowed, u, v):
            inner = set(path[1:-1])
            if route(rest, used | inner, branch):
                return True
        return False

    nodes = sorted(simple.nodes)
    deg = dict(simple.degree())
    for five in itertools.combinations(
        [n for n in nodes if deg[n] >= 4], 5
    ):
        pairs = list(itertools.combinations(five, 2))
        if route(pairs, set(), set(five)):
            return True
    big = [n for n in nodes if deg[n] >= 3]
    for six in itertools.combinations(big, 6):
        for left in itertools.combinations(six, 3):
            if six[0] not in left:
                continue
            right = [n for n in six if n not in left]
            pairs = [(a, b) for a in left for b in right]
            if route(pairs, set(), set(six)):
                return True
    return False


def bounded_orbit_minimum(
    start: tuple, moves: list, apply, limit: int
) -> int:
    """
    Smallest total length reachable from `start` through collections of
    total length at most `limit`.

    Args:
        start (tuple): A collection key.
        moves (list): Automorphisms.
        apply: Callable (phi, collection) -> collection key.
        limit (int): Length bound.
    """
    seen = {start}
    queue = deque([start])
    best = sum(len(w) for w in start)
    while queue:
        current = queue.popleft()
        for phi in moves:
            image = apply(phi, current)
            length = sum(len(w) for w in image)
            if length > limit or image in seen:
                continue
            seen.add(image)
            best = min(best, length)
            queue.append(image)
    return best


def random_multigraph(rng, max_vertices: int, max_edges: int) -> MultiGraph:
    """A random connected loop-free multigraph."""
    n = int(rng.integers(2, max_vertices + 1))
    pairs = []
    order = [int(i) for i in rng.permutation(n)]
    for i in range(1, n):
        pairs.append((order[int(rng.integers(i))], order[i]))
    extra = int(rng.integers(0, max_edges - len(pairs) + 1))
    for _ in range(extra):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        pairs.append((u, v))
    return MultiGraph.from_edges(n, pairs)


def random_simple_graph(rng, max_vertices: int) -> MultiGraph:
    """A random simple graph with edge probability drawn per sample."""
    n = int(rng.integers(1, max_vertices + 1))
    p = float(rng.uniform(0.2, 0.9))
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return MultiGraph.from_edges(n, pairs)
