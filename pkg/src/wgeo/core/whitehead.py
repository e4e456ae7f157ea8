#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Whitehead graphs of cyclic words and their minimization.

The Whitehead graph of a collection of cyclic words over a rank-n
alphabet has one vertex per letter (2n in all) and one edge from x^-1 to
y for every cyclic two-letter subword xy. A collection is minimal when
no automorphism shortens it; on the graph side this means no generator
x admits a cut of fewer than valence(x) edges separating x from x^-1.

Minimization runs on words, minimality is tested on graphs, and the two
are kept in agreement: `automorphism_from_cut` turns a small cut into
the automorphism that shortens the words by exactly the saving.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .. import config
from .automorphism import (
    WhiteheadAutomorphism,
    apply_automorphism,
    automorphism_from_cut,
    iter_whitehead_automorphisms,
)
from .connectivity import CutWitness, min_edge_cut, verify_cut
from .multigraph import MultiGraph, VertexLabel
from .word import (
    Alphabet,
    CyclicWord,
    Letter,
    check_alphabet,
    collection_key,
    total_length,
)

logger = logging.getLogger(__name__)

STRATEGIES = ("enumerate", "cut")

Collection = tuple[CyclicWord, ...]


class ReduciblePair(NamedTuple):
    """A generator whose vertex pair admits a cut smaller than its valence.

    Attributes:
        generator (int): The generator index.
        valence (int): The common valence k of x and x^-1.
        cut (CutWitness): A minimum cut of size s < k whose source side
            contains x.
    """

    generator: int
    valence: int
    cut: CutWitness


@dataclass(frozen=True)
class OrbitMember:
    """A collection in the minimal orbit and how it was reached.

    Attributes:
        words (Collection): The collection.
        path (tuple[WhiteheadAutomorphism, ...]): Automorphisms taking
            the starting collection to this one, first to last.
    """

    words: Collection
    path: tuple[WhiteheadAutomorphism, ...] = ()


class MinimalOrbit(NamedTuple):
    """Result of `minimal_orbit`.

    Attributes:
        members (frozenset[Collection]): Collections reached, each in
            canonical (sorted) order.
        truncated (bool): True if the cap stopped the search.
    """

    members: frozenset[Collection]
    truncated: bool


def _alphabet_for(
    words: Sequence[CyclicWord], alphabet: Alphabet | None
) -> Alphabet:
    if alphabet is None:
        return Alphabet(max((w.max_generator for w in words), default=1))
    check_alphabet(words, alphabet)
    return alphabet


def used_generators(words: Iterable[CyclicWord]) -> list[int]:
    """Generators occurring in some word, ascending."""
    return sorted({x.generator for w in words for x in w})


def vertex_id(letter: Letter) -> int:
    """Id of the vertex of a letter in a Whitehead graph (a=0, A=1...)."""
    return letter.code - 2


def build_whitehead_graph(
    words: Iterable[CyclicWord], alphabet: Alphabet
) -> MultiGraph:
    """
    Build the Whitehead graph of a collection of cyclic words.

    Edges are numbered in reading order: word by word, and within a word
    by the position of the first letter of the two-letter subword. A
    word of length one, x, contributes the single edge x^-1 - x.

    Args:
        words (Iterable[CyclicWord]): The collection.
        alphabet (Alphabet): Alphabet of the words.

    Returns:
        MultiGraph: Graph on the 2n letters with total_length(words)
            edges.

    Raises:
        ValueError: If a word leaves the alphabet.
    """
    ws = list(words)
    check_alphabet(ws, alphabet)
    vertices = [
        (vertex_id(x), VertexLabel.of(x)) for x in alphabet.letters()
    ]
    edges = []
    for w in ws:
        for i in range(len(w)):
            x, y = w[i], w[i + 1]
            edges.append(
                (len(edges), (vertex_id(x.inverse()), vertex_id(y)))
            )
    return MultiGraph(vertices, edges)


def _pair_vertices(g: MultiGraph, generator: int) -> tuple[int, int]:
    try:
        return (
            g.vertex_of(VertexLabel(generator, 1)),
            g.vertex_of(VertexLabel(generator, -1)),
        )
    except KeyError as e:
        raise ValueError(
            f"Graph has no vertex pair for generator {generator}"
        ) from e


def _generators(g: MultiGraph) -> list[int]:
    """Generators of a Whitehead graph, checking its labels."""
    labels = [lab for _, lab in g.vertices]
    gens = sorted({lab.generator for lab in labels})
    expected = {
        VertexLabel(x, s) for x in gens for s in (1, -1)
    }
    if set(labels) != expected:
        raise ValueError("Graph is not labeled as a Whitehead graph")
    return gens


def reducible_pair(g: MultiGraph) -> ReduciblePair | None:
    """
    Find the first generator whose vertices are joined by a small cut.

    Generators are scanned in ascending order; valence-0 pairs are
    skipped.

    Args:
        g (MultiGraph): A Whitehead graph.

    Returns:
        ReduciblePair | None: The first generator x with a cut of size
            s < k = valence(x) separating x from x^-1, or None.

    Raises:
        ValueError: If the labels are not those of a Whitehead graph.
    """
    for gen in _generators(g):
        x, inv = _pair_vertices(g, gen)
        k = g.valence(x)
        if k == 0:
            continue
        s, cut = min_edge_cut(g, x, inv)
        if s < k:
            logger.debug("Generator %d reducible: k=%d, s=%d", gen, k, s)
            return ReduciblePair(gen, k, cut)
    return None


def is_minimal(
    words: Sequence[CyclicWord], alphabet: Alphabet | None = None
) -> bool:
    """True if the Whitehead graph of the words has no reducible pair."""
    alphabet = _alphabet_for(words, alphabet)
    return reducible_pair(build_whitehead_graph(words, alphabet)) is None


def _reduce_step_enumerate(
    words: list[CyclicWord], moves: Iterable[WhiteheadAutomorphism]
) -> tuple[list[CyclicWord], WhiteheadAutomorphism] | None:
    length = total_length(words)
    for phi in moves:
        image = apply_automorphism(phi, words)
        if total_length(image) < length:
            return image, phi
    return None


def _reduce_step_cut(
    words: list[CyclicWord], alphabet: Alphabet
) -> tuple[list[CyclicWord], WhiteheadAutomorphism] | None:
    g = build_whitehead_graph(words, alphabet)
    pair = reducible_pair(g)
    if pair is None:
        return None
    vertex = Letter(pair.generator, 1)
    side = {g.label(v).letter for v in pair.cut.source_side}
    phi = automorphism_from_cut(vertex, side, alphabet)
    image = apply_automorphism(phi, words)
    saving = pair.valence - pair.cut.size
    if total_length(image) != total_length(words) - saving:
        raise RuntimeError(
            f"{phi.encode()} changed length by "
            f"{total_length(image) - total_length(words)}, expected "
            f"{-saving}"
        )
    return image, phi


def whitehead_reduce(
    words: Sequence[CyclicWord],
    alphabet: Alphabet | None = None,
    strategy: str = "enumerate",
) -> tuple[list[CyclicWord], list[WhiteheadAutomorphism]]:
    """
    Shorten a collection by Whitehead automorphisms until minimal.

    With the "enumerate" strategy the first automorphism, in the fixed
    order of `iter_whitehead_automorphisms` over the generators that
    occur in the words, that strictly shortens the collection is
    applied, and the search starts over. With "cut"
    the automorphism comes from the first reducible pair of the
    Whitehead graph.

    Args:
        words (Sequence[CyclicWord]): A nonempty collection.
        alphabet (Alphabet | None): Alphabet; inferred from the words
            when omitted.
        strategy (str): "enumerate" or "cut".

    Returns:
        tuple[list[CyclicWord], list[WhiteheadAutomorphism]]: The
            minimal collection, in input order, and the automorphisms
            applied, first to last.

    Raises:
        ValueError: If the collection is empty or the strategy unknown.
    """
    if not words:
        raise ValueError("Cannot reduce an empty collection")
    if strategy not in STRATEGIES:
        raise ValueError(
            f"Unknown strategy {strategy!r}; expected one of {STRATEGIES}"
        )
    alphabet = _alphabet_for(words, alphabet)
    gens = used_generators(words)
    current = list(words)
    applied: list[WhiteheadAutomorphism] = []
    while True:
        if strategy == "cut":
            step = _reduce_step_cut(current, alphabet)
        else:
            moves = iter_whitehead_automorphisms(
                alphabet, generators=gens, cyclic=True
            )
            step = _reduce_step_enumerate(current, moves)
        if step is None:
            break
        current, phi = step
        applied.append(phi)
        logger.debug(
            "Applied %s, length now %d", phi.encode(), total_length(current)
        )
    return current, applied


def _orbit_moves(
    words: Sequence[CyclicWord], alphabet: Alphabet
) -> list[WhiteheadAutomorphism]:
    return [
        phi
        for phi in iter_whitehead_automorphisms(
            alphabet,
            include_permutations=True,
            generators=used_generators(words),
            cyclic=True,
        )
        if not phi.is_trivial()
    ]


class OrbitSearch:
    """Lazy breadth-first search of the minimal orbit of a collection.

    Iterating yields `OrbitMember`s, starting with the collection
    itself, until the closure under length-preserving automorphisms is
    exhausted or `cap` members have been produced. The counters remain
    readable after iteration stops, whether or not the caller stopped
    early.

    Attributes:
        cap (int): Largest number of members produced.
        explored (int): Members produced so far.
        truncated (bool): True once the cap is reached.
    """

    def __init__(
        self,
        words: Sequence[CyclicWord],
        alphabet: Alphabet | None = None,
        cap: int = config.DEFAULT_ORBIT_CAP,
    ) -> None:
        """
        Initialize an OrbitSearch.

        Raises:
            ValueError: If cap < 1 or the collection is empty.
        """
        if cap < 1:
            raise ValueError(f"Orbit cap must be >= 1, got {cap}")
        if not words:
            raise ValueError("Cannot search the orbit of no words")
        self.words = tuple(words)
        self.alphabet = _alphabet_for(self.words, alphabet)
        self.cap = cap
        self.explored = 0
        self.truncated = False

    def __iter__(self) -> Iterator[OrbitMember]:
        moves = _orbit_moves(self.words, self.alphabet)
        length = total_length(self.words)
        start = OrbitMember(self.words)
        seen = {collection_key(self.words)}
        queue: deque[OrbitMember] = deque([start])
        self.explored = 1
        yield start
        if self.explored >= self.cap:
            self.truncated = True
            return
        while queue:
            member = queue.popleft()
            for phi in moves:
                image = tuple(apply_automorphism(phi, member.words))
                if total_length(image) != length:
                    continue
                key = collection_key(image)
                if key in seen:
                    continue
                seen.add(key)
                found = OrbitMember(image, member.path + (phi,))
                queue.append(found)
                self.explored += 1
                yield found
                if self.explored >= self.cap:
                    self.truncated = True
                    logger.debug("Orbit search stopped at cap %d", self.cap)
                    return


def iter_minimal_orbit(
    words: Sequence[CyclicWord],
    alphabet: Alphabet | None = None,
    cap: int = config.DEFAULT_ORBIT_CAP,
) -> OrbitSearch:
    """Return a lazy search over the minimal orbit of a collection."""
    return OrbitSearch(words, alphabet, cap)


def minimal_orbit(
    words: Sequence[CyclicWord],
    cap: int = config.DEFAULT_ORBIT_CAP,
    alphabet: Alphabet | None = None,
) -> MinimalOrbit:
    """
    Close a minimal collection under length-preserving automorphisms.

    The moves are the Whitehead automorphisms and signed permutations
    of the generators occurring in `words`, less those that fix every
    cyclic word; an image is kept when its total length equals that of
    `words`. Relabelings onto unused generators are not followed, as
    they only rename the Whitehead graph. Collections are
    deduplicated up to order and rotation.

    Args:
        words (Sequence[CyclicWord]): A minimal collection.
        cap (int): Largest number of collections to produce.
        alphabet (Alphabet | None): Alphabet; inferred when omitted.

    Returns:
        MinimalOrbit: The collections reached and whether the cap was
            hit.

    Raises:
        ValueError: If cap < 1.
    """
    search = OrbitSearch(words, alphabet, cap)
    members = frozenset(collection_key(m.words) for m in search)
    return MinimalOrbit(members, search.truncated)


def strand_pairing(
    words: Iterable[CyclicWord], generator: int
) -> list[tuple[int, int]]:
    """
    Pair the edge-ends that each occurrence of a generator joins.

    In the Whitehead graph built by `build_whitehead_graph`, an
    occurrence of x or x^-1 in a word is where an edge ending at x meets
    an edge ending at x^-1.

    Args:
        words (Iterable[CyclicWord]): The collection the graph was
            built from.
        generator (int): The generator index.

    Returns:
        list[tuple[int, int]]: (edge at x, edge at x^-1) id pairs, one
            per occurrence, in reading order.
    """
    pairs = []
    offset = 0
    for w in words:
        n = len(w)
        for i in range(n):
            if w[i].generator != generator:
                continue
            before, after = offset + (i - 1) % n, offset + i
            if w[i].sign > 0:
                pairs.append((before, after))
            else:
                pairs.append((after, before))
        offset += n
    return pairs


def graph_whitehead_move(
    g: MultiGraph,
    generator: int,
    cut: CutWitness,
    pairing: Sequence[tuple[int, int]] | None = None,
) -> MultiGraph:
    """
    Replace the vertex pair of a generator by one dual to a cut.

    The pair x, x^-1 is unspliced: each edge-end at x is joined to an
    edge-end at x^-1 according to `pairing`, merging edges into strands.
    A new pair is then spliced in across the cut: every cut edge is
    split, its part on the side of x ending at the new x^-1 and its
    other part at the new x. The new vertices keep the ids and labels of
    the old ones and have valence s = |cut|.

    Args:
        g (MultiGraph): A Whitehead graph.
        generator (int): The generator whose pair is replaced.
        cut (CutWitness): A cut separating x from x^-1.
        pairing (Sequence[tuple[int, int]] | None): (edge at x, edge at
            x^-1) pairs forming a bijection between the two incidence
            lists; see `strand_pairing`. Defaults to matching both lists
            in ascending edge id order.

    Returns:
        MultiGraph: A graph with |E| - k + s edges.

    Raises:
        ValueError: If the cut does not separate the pair or the
            pairing is not a bijection.
    """
    x, inv = _pair_vertices(g, generator)
    if not verify_cut(g, cut):
        raise ValueError("Cut witness does not verify against the graph")
    if x in cut.source_side and inv in cut.sink_side:
        side_of_x = cut.source_side
    elif x in cut.sink_side and inv in cut.source_side:
        side_of_x = cut.sink_side
    else:
        raise ValueError(
            f"Cut does not separate the vertices of generator {generator}"
        )

    at_x, at_inv = g.incident_edges(x), g.incident_edges(inv)
    if pairing is None:
        pairing = list(zip(at_x, at_inv))
    jump_from_x = {e: f for e, f in pairing}
    jump_from_inv = {f: e for e, f in pairing}
    if sorted(jump_from_x) != at_x or sorted(jump_from_inv) != at_inv:
        raise ValueError("Pairing is not a bijection of the incident edges")
    if len(pairing) != len(at_x):
        raise ValueError("Pairing is not a bijection of the incident edges")

    new_edges: list[tuple[int, int]] = []
    used: set[int] = set()

    def trace(here: int, e: int, closing: int | None = None) -> None:
        """Follow a strand leaving `here` along e, splitting cut edges."""
        tail: int | None = here if closing is None else None
        while True:
            if e == closing and tail is not None:
                new_edges.append((tail, inv if here in side_of_x else x))
                return
            used.add(e)
            there = g.other_end(e, here)
            if e in cut.edges:
                end, after = (inv, x) if here in side_of_x else (x, inv)
                if tail is not None:
                    new_edges.append((tail, end))
                tail = after
            if there == x:
                here, e = inv, jump_from_x[e]
            elif there == inv:
                here, e = x, jump_from_inv[e]
            else:
                assert tail is not None
                new_edges.append((tail, there))
                return

    pair = (x, inv)
    for e, (a, b) in g.edges:
        if e not in used and not (a in pair and b in pair):
            trace(b if a in pair else a, e)
    # What is left are closed strands through edges joining x to x^-1.
    for e in at_x:
        if e not in used:
            trace(x, e, closing=e)

    logger.debug(
        "Whitehead move on generator %d: %d -> %d edges",
        generator,
        g.number_of_edges(),
        len(new_edges),
    )
    return MultiGraph(g.vertices, enumerate(new_edges))
