#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Certificates that a collection of words is not virtually geometric.

A collection is certified NotVirtuallyGeometric when some collection in
its minimal orbit has a Whitehead graph that is regular of valence
k >= 3, k-edge-connected and non-planar. Failing that, a minimal
collection with a non-planar Whitehead graph shows the words are not
geometric. Otherwise the result is Inconclusive; no positive verdict
is ever given.

Certificates are self-contained JSON documents: `verify_certificate`
re-derives every claim from the words and witnesses they carry.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Sequence

from .. import config
from .automorphism import WhiteheadAutomorphism, apply_sequence
from .connectivity import (
    CutWitness,
    edge_connectivity,
    min_edge_cut,
    verify_cut,
)
from .multigraph import MultiGraph, VertexLabel
from .planarity import is_kuratowski_subdivision, is_planar
from .whitehead import (
    OrbitMember,
    OrbitSearch,
    build_whitehead_graph,
    is_minimal,
    used_generators,
    whitehead_reduce,
)
from .word import (
    Alphabet,
    CyclicWord,
    Letter,
    format_word,
    parse_formatted,
    total_length,
)

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Outcome of `certify`."""

    NOT_VIRTUALLY_GEOMETRIC = "NotVirtuallyGeometric"
    NOT_GEOMETRIC = "NotGeometric"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class Certificate:
    """Evidence for a verdict, in the shape of its JSON document.

    Words are stored as text; vertices as label names (`a`, `B`); edges
    of `cuts` by their id in the Whitehead graph of the representative.

    Attributes:
        alphabet_rank (int): Rank of the free group.
        input_words (list[str]): The words certified.
        verdict (Verdict): The outcome.
        k (int | None): Common valence of the representative's graph.
        minimizing_automorphisms (list[str]): Encoded automorphisms
            taking the input to the minimal words.
        minimal_words (list[str]): Result of minimization.
        cuts (list[dict[str, Any]]): For every generator x of nonzero
            valence, a minimum cut separating x from x^-1 in the
            representative's graph: generator, size, edges, side.
        kuratowski_edges (list[list[str]]): Edges of a K5 or K3,3
            subdivision in the representative's graph.
        orbit (dict[str, Any]): explored, cap and truncated.
        representative_words (list[str]): The collection whose graph
            carries the evidence.
        orbit_path (list[str]): Encoded automorphisms taking the minimal
            words to the representative.
        edge_connectivity (int | None): Of the representative's graph.
        version (int): Certificate schema version.
    """

    alphabet_rank: int
    input_words: list[str]
    verdict: Verdict
    k: int | None
    minimizing_automorphisms: list[str]
    minimal_words: list[str]
    cuts: list[dict[str, Any]]
    kuratowski_edges: list[list[str]]
    orbit: dict[str, Any]
    representative_words: list[str] = field(default_factory=list)
    orbit_path: list[str] = field(default_factory=list)
    edge_connectivity: int | None = None
    version: int = config.CERTIFICATE_VERSION

    @property
    def exit_code(self) -> int:
        """CLI exit code of the verdict."""
        return EXIT_CODES[self.verdict]

    def to_dict(self) -> dict[str, Any]:
        """Serialize in the fixed key order of the JSON document."""
        return {
            "version": self.version,
            "alphabet_rank": self.alphabet_rank,
            "input_words": list(self.input_words),
            "verdict": self.verdict.value,
            "k": self.k,
            "minimizing_automorphisms": list(self.minimizing_automorphisms),
            "minimal_words": list(self.minimal_words),
            "cuts": [dict(c) for c in self.cuts],
            "kuratowski_edges": [list(e) for e in self.kuratowski_edges],
            "orbit": dict(self.orbit),
            "representative_words": list(self.representative_words),
            "orbit_path": list(self.orbit_path),
            "edge_connectivity": self.edge_connectivity,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Certificate:
        """
        Deserialize a dict produced by `to_dict`.

        Raises:
            KeyError: If a required key is missing.
            ValueError: If the verdict is unknown.
        """
        return cls(
            version=int(data["version"]),
            alphabet_rank=int(data["alphabet_rank"]),
            input_words=list(data["input_words"]),
            verdict=Verdict(data["verdict"]),
            k=data["k"],
            minimizing_automorphisms=list(data["minimizing_automorphisms"]),
            minimal_words=list(data["minimal_words"]),
            cuts=[dict(c) for c in data["cuts"]],
            kuratowski_edges=[list(e) for e in data["kuratowski_edges"]],
            orbit=dict(data["orbit"]),
            representative_words=list(
                data.get("representative_words", data["minimal_words"])
            ),
            orbit_path=list(data.get("orbit_path", [])),
            edge_connectivity=data.get("edge_connectivity"),
        )


EXIT_CODES = {
    Verdict.NOT_VIRTUALLY_GEOMETRIC: 0,
    Verdict.NOT_GEOMETRIC: 3,
    Verdict.INCONCLUSIVE: 4,
}


@dataclass(frozen=True)
class Verification:
    """Result of `verify_certificate`; truthy iff the check passed.

    Attributes:
        ok (bool): Whether every claim re-verified.
        reason (str): The first failure, or "ok".
    """

    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _texts(words: Sequence[CyclicWord]) -> list[str]:
    return [format_word(w) for w in words]


def _generator_cuts(g: MultiGraph) -> list[dict[str, Any]]:
    """A minimum cut between x and x^-1 for every used generator x."""
    cuts = []
    gens = sorted({lab.generator for _, lab in g.vertices})
    for gen in gens:
        x = g.vertex_of(VertexLabel(gen, 1))
        inv = g.vertex_of(VertexLabel(gen, -1))
        if g.valence(x) == 0:
            continue
        size, witness = min_edge_cut(g, x, inv)
        cuts.append(
            {
                "generator": Letter(gen, 1).name(),
                "size": size,
                "edges": sorted(witness.edges),
                "side": [
                    g.label(v).name() for v in sorted(witness.source_side)
                ],
            }
        )
    return cuts


def _kuratowski_names(
    g: MultiGraph, edges: Sequence[tuple[int, int]]
) -> list[list[str]]:
    return [[g.label(u).name(), g.label(v).name()] for u, v in edges]


@dataclass
class _Examined:
    member: OrbitMember
    graph: MultiGraph
    k: int | None
    kuratowski: tuple[tuple[int, int], ...]


def _examine(
    members: Iterator[OrbitMember], alphabet: Alphabet
) -> Iterator[tuple[_Examined, bool]]:
    """Test representatives; the flag marks a NotVirtuallyGeometric hit."""
    for member in members:
        g = build_whitehead_graph(member.words, alphabet)
        k = g.is_regular()
        planar, witness = is_planar(g)
        found = _Examined(member, g, k, witness.kuratowski_edges)
        if planar:
            yield found, False
            continue
        hit = k is not None and k >= 3 and edge_connectivity(g)[0] >= k
        logger.debug(
            "Representative %s: k=%s, non-planar, trigger=%s",
            _texts(member.words),
            k,
            hit,
        )
        yield found, hit


def certify(
    words: Sequence[CyclicWord],
    orbit_cap: int = config.DEFAULT_ORBIT_CAP,
    alphabet: Alphabet | None = None,
) -> Certificate:
    """
    Run the certification pipeline on a collection of cyclic words.

    1. Minimize the collection with `whitehead_reduce`, taking each
       shortening automorphism from a reducible pair of the graph.
    2. Walk the minimal orbit, at most `orbit_cap` collections.
    3. Stop at the first collection whose graph is k-regular with
       k >= 3, k-edge-connected and non-planar: NotVirtuallyGeometric.
    4. Otherwise, if some examined graph is non-planar: NotGeometric,
       with the first such collection as representative. When the
       words leave a generator unused no graph in the orbit is
       regular, so the walk stops there.
    5. Otherwise Inconclusive, with the minimal words as representative.

    Args:
        words (Sequence[CyclicWord]): A nonempty collection.
        orbit_cap (int): Largest number of orbit members examined.
        alphabet (Alphabet | None): Alphabet; inferred when omitted.

    Returns:
        Certificate: The verdict with its evidence.

    Raises:
        ValueError: If the collection is empty, orbit_cap < 1, or a word
            leaves the alphabet.
    """
    if not words:
        raise ValueError("Cannot certify an empty collection")
    if alphabet is None:
        alphabet = Alphabet(max(w.max_generator for w in words))
    minimal, applied = whitehead_reduce(words, alphabet, strategy="cut")
    search = OrbitSearch(minimal, alphabet, orbit_cap)
    # Orbit moves never bring in an unused generator, whose isolated
    # vertices rule out a regular graph.
    can_trigger = len(used_generators(minimal)) == alphabet.rank

    chosen: _Examined | None = None
    verdict = Verdict.INCONCLUSIVE
    for found, hit in _examine(iter(search), alphabet):
        if hit:
            chosen, verdict = found, Verdict.NOT_VIRTUALLY_GEOMETRIC
            break
        if found.kuratowski and chosen is None:
            chosen, verdict = found, Verdict.NOT_GEOMETRIC
            if not can_trigger:
                logger.debug("Unused generators, no regular member")
                break
    if chosen is None:
        g = build_whitehead_graph(minimal, alphabet)
        chosen = _Examined(OrbitMember(tuple(minimal)), g, g.is_regular(), ())

    g = chosen.graph
    connectivity = (
        edge_connectivity(g)[0] if g.number_of_vertices() >= 2 else None
    )
    logger.debug("Verdict %s after %d members", verdict.value, search.explored)
    return Certificate(
        alphabet_rank=alphabet.rank,
        input_words=_texts(words),
        verdict=verdict,
        k=chosen.k,
        minimizing_automorphisms=[phi.encode() for phi in applied],
        minimal_words=_texts(minimal),
        cuts=_generator_cuts(g),
        kuratowski_edges=_kuratowski_names(g, chosen.kuratowski),
        orbit={
            "explored": search.explored,
            "cap": orbit_cap,
            "truncated": search.truncated,
        },
        representative_words=_texts(chosen.member.words),
        orbit_path=[phi.encode() for phi in chosen.member.path],
        edge_connectivity=connectivity,
    )


class _Failed(Exception):
    """A certificate claim that does not hold."""


def _check(condition: bool, reason: str) -> None:
    if not condition:
        raise _Failed(reason)


def _replay(
    start: list[CyclicWord], encoded: Sequence[str], expected: list[str]
) -> list[CyclicWord]:
    phis = [WhiteheadAutomorphism.decode(t) for t in encoded]
    image = apply_sequence(phis, start)
    return image if _texts(image) == expected else []


def _verify(cert: Certificate) -> None:
    _check(cert.version == config.CERTIFICATE_VERSION, "unknown version")
    alphabet = Alphabet(cert.alphabet_rank)
    inputs = [parse_formatted(t) for t in cert.input_words]
    _check(bool(inputs), "no input words")

    minimal = _replay(
        inputs, cert.minimizing_automorphisms, cert.minimal_words
    )
    _check(bool(minimal), "minimizing automorphisms do not replay")
    _check(is_minimal(minimal, alphabet), "minimal words are reducible")
    rep = _replay(minimal, cert.orbit_path, cert.representative_words)
    _check(bool(rep), "orbit path does not replay")
    _check(
        total_length(rep) == total_length(minimal),
        "representative is not in the minimal orbit",
    )

    g = build_whitehead_graph(rep, alphabet)
    _check(g.is_regular() == cert.k, "valence k misreported")

    by_name = {lab.name(): v for v, lab in g.vertices}
    used = [
        gen
        for gen in sorted({lab.generator for _, lab in g.vertices})
        if g.valence(by_name[Letter(gen, 1).name()]) > 0
    ]
    _check(
        [c["generator"] for c in cert.cuts]
        == [Letter(gen, 1).name() for gen in used],
        "cuts do not cover every generator",
    )
    for entry in cert.cuts:
        x = by_name[entry["generator"]]
        inv = by_name[Letter(g.label(x).generator, -1).name()]
        side = frozenset(by_name[n] for n in entry["side"])
        witness = CutWitness(
            frozenset(int(e) for e in entry["edges"]),
            side,
            frozenset(g.vertex_ids()) - side,
        )
        _check(
            x in side and inv not in side and verify_cut(g, witness),
            f"cut for {entry['generator']} does not separate",
        )
        size = min_edge_cut(g, x, inv)[0]
        _check(
            entry["size"] == size == witness.size,
            f"cut for {entry['generator']} is not minimum",
        )
        _check(
            size >= g.valence(x),
            f"generator {entry['generator']} is reducible",
        )

    kedges = []
    for pair in cert.kuratowski_edges:
        _check(len(pair) == 2, "malformed Kuratowski edge")
        kedges.append((by_name[pair[0]], by_name[pair[1]]))
    if kedges:
        simple = g.underlying_simple()
        _check(
            all(simple.has_edge(u, v) for u, v in kedges),
            "Kuratowski edges are not in the graph",
        )
        _check(
            is_kuratowski_subdivision(kedges),
            "Kuratowski edges do not subdivide K5 or K3,3",
        )

    if cert.verdict is Verdict.INCONCLUSIVE:
        _check(not kedges, "inconclusive certificate carries a witness")
        return
    _check(bool(kedges), "missing Kuratowski witness")
    if cert.verdict is Verdict.NOT_VIRTUALLY_GEOMETRIC:
        _check(cert.k is not None and cert.k >= 3, "valence below 3")
        connectivity = edge_connectivity(g)[0]
        _check(
            cert.k is not None and connectivity >= cert.k,
            f"graph is not {cert.k}-edge-connected",
        )
        _check(
            cert.edge_connectivity == connectivity,
            "edge connectivity misreported",
        )


def verify_certificate(cert: Certificate | dict[str, Any]) -> Verification:
    """
    Re-check every claim of a certificate without searching.

    Replays the automorphisms from the input words to the minimal words
    and on to the representative, checks that the minimal words admit
    no reducible pair, recomputes valences and every generator cut
    (verifying each witness), and checks that the Kuratowski edges
    subdivide K5 or K3,3. A NotVirtuallyGeometric certificate must
    further show k >= 3 and k-edge-connectivity.

    Args:
        cert (Certificate | dict[str, Any]): The certificate or its
            JSON document.

    Returns:
        Verification: ok, or the first failure. Never raises.
    """
    try:
        if not isinstance(cert, Certificate):
            cert = Certificate.from_dict(cert)
        _verify(cert)
    except _Failed as e:
        return Verification(False, str(e))
    except (KeyError, ValueError, TypeError, AttributeError) as e:
        return Verification(False, f"malformed certificate: {e!r}")
    return Verification(True)


def enumerate_cyclic_words(rank: int, length: int) -> Iterator[CyclicWord]:
    """
    Yield every cyclic word of a rank and length once, in code order.

    Raises:
        ValueError: If length < 1.
    """
    if length < 1:
        raise ValueError(f"Length must be >= 1, got {length}")
    letters = Alphabet(rank).letters()
    seen: set[CyclicWord] = set()
    for combo in itertools.product(letters, repeat=length):
        if any(a == b.inverse() for a, b in zip(combo, combo[1:])):
            continue
        if length > 1 and combo[0] == combo[-1].inverse():
            continue
        w = CyclicWord(combo)
        if w not in seen:
            seen.add(w)
            yield w


def scan_words(
    rank: int, length: int, orbit_cap: int = config.DEFAULT_ORBIT_CAP
) -> Iterator[tuple[CyclicWord, Certificate]]:
    """
    Certify every cyclic word of a given rank and length.

    Args:
        rank (int): Alphabet rank.
        length (int): Word length.
        orbit_cap (int): Passed to `certify`.

    Yields:
        tuple[CyclicWord, Certificate]: Each word with its certificate.
    """
    alphabet = Alphabet(rank)
    for w in enumerate_cyclic_words(rank, length):
        yield w, certify([w], orbit_cap, alphabet)

