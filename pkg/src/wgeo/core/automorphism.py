#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Whitehead automorphisms of a free group and their action on words.

Four variants are supported:

- Inversion(i): x_i -> x_i^-1.
- Transvection(i, j): x_i -> x_i x_j (or x_i x_j^-1 for its inverse).
- Permutation: generators are sent to signed generators.
- TypeII(A, a): for every generator x other than a, a^-1,
  x -> x a if x in A and x^-1 not in A; x -> a^-1 x if only x^-1 in A;
  x -> a^-1 x a if both; x is fixed if neither. a itself is fixed.

Every automorphism encodes to a short string (`inv(a)`, `tv(a,B)`,
`perm(b,A)`, `wh(a;a,B)`) used in certificates and CLI output.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .word import (
    Alphabet,
    CyclicWord,
    EmptyCyclicWordError,
    Letter,
    Word,
    cyclic_reduce,
    format_word,
    free_reduce,
    letter_from_name,
)

_ENCODED = re.compile(r"^(inv|tv|perm|wh)\((.*)\)$")


class AutomorphismKind(Enum):
    """The four variants of WhiteheadAutomorphism."""

    INVERSION = "inv"
    TRANSVECTION = "tv"
    PERMUTATION = "perm"
    TYPE_II = "wh"


@dataclass(frozen=True)
class WhiteheadAutomorphism:
    """A Nielsen or Whitehead automorphism of a free group.

    Use the `inversion`, `transvection`, `permutation` and `type_ii`
    constructors rather than building instances field by field.

    Attributes:
        kind (AutomorphismKind): Which variant this is.
        generator (int): Inverted or transvected generator index.
        target (Letter | None): Transvection factor x_j^{+-1}.
        images (tuple[Letter, ...]): Permutation images of x_1..x_n.
        multiplier (Letter | None): TypeII multiplier a.
        side (frozenset[Letter]): TypeII side set A.
    """

    kind: AutomorphismKind
    generator: int = 0
    target: Letter | None = None
    images: tuple[Letter, ...] = ()
    multiplier: Letter | None = None
    side: frozenset[Letter] = frozenset()

    def __post_init__(self) -> None:
        if self.kind is AutomorphismKind.TRANSVECTION:
            if self.target is None or self.target.generator == self.generator:
                raise ValueError("Transvection requires i != j")
        elif self.kind is AutomorphismKind.PERMUTATION:
            gens = sorted(x.generator for x in self.images)
            if gens != list(range(1, len(self.images) + 1)):
                raise ValueError(
                    "Permutation images must use every generator once"
                )
        elif self.kind is AutomorphismKind.TYPE_II:
            a = self.multiplier
            if a is None or a not in self.side or a.inverse() in self.side:
                raise ValueError(
                    "TypeII side set must contain the multiplier and not "
                    "its inverse"
                )

    @classmethod
    def inversion(cls, generator: int) -> WhiteheadAutomorphism:
        """x_i -> x_i^-1."""
        return cls(AutomorphismKind.INVERSION, generator=generator)

    @classmethod
    def transvection(
        cls, generator: int, other: int, sign: int = 1
    ) -> WhiteheadAutomorphism:
        """x_i -> x_i x_j^sign."""
        return cls(
            AutomorphismKind.TRANSVECTION,
            generator=generator,
            target=Letter(other, sign),
        )

    @classmethod
    def permutation(cls, images: Sequence[Letter]) -> WhiteheadAutomorphism:
        """x_g -> images[g - 1] for every generator g."""
        return cls(AutomorphismKind.PERMUTATION, images=tuple(images))

    @classmethod
    def type_ii(
        cls, multiplier: Letter, side: Iterable[Letter]
    ) -> WhiteheadAutomorphism:
        """The Whitehead automorphism (A, a) with A = side, a = multiplier."""
        return cls(
            AutomorphismKind.TYPE_II,
            multiplier=multiplier,
            side=frozenset(side),
        )

    @property
    def rank_needed(self) -> int:
        """Smallest rank whose alphabet this automorphism is defined on."""
        if self.kind is AutomorphismKind.INVERSION:
            return self.generator
        if self.kind is AutomorphismKind.TRANSVECTION:
            assert self.target is not None
            return max(self.generator, self.target.generator)
        if self.kind is AutomorphismKind.PERMUTATION:
            return len(self.images)
        assert self.multiplier is not None
        return max(x.generator for x in self.side | {self.multiplier})

    def image(self, letter: Letter) -> tuple[Letter, ...]:
        """
        Return the image of a single letter.

        Args:
            letter (Letter): Any letter.

        Returns:
            tuple[Letter, ...]: The (freely reduced) image word.
        """
        return _image(self, letter)

    def apply_word(self, word: Word | Iterable[Letter]) -> Word:
        """Substitute letter images into a word and freely reduce."""
        return free_reduce(
            itertools.chain.from_iterable(_image(self, x) for x in word)
        )

    def __call__(self, word: CyclicWord) -> CyclicWord:
        """
        Apply the automorphism to a cyclic word.

        Raises:
            EmptyCyclicWordError: If the image is trivial, which only an
                ill-formed automorphism can produce.
        """
        reduced = self.apply_word(word.letters)
        try:
            return cyclic_reduce(reduced)
        except EmptyCyclicWordError as e:
            raise EmptyCyclicWordError(
                f"{self.encode()} sends {word} to the empty cyclic word"
            ) from e

    def inverse(self) -> WhiteheadAutomorphism:
        """Return the inverse automorphism, again one of the variants."""
        if self.kind is AutomorphismKind.INVERSION:
            return self
        if self.kind is AutomorphismKind.TRANSVECTION:
            assert self.target is not None
            return WhiteheadAutomorphism.transvection(
                self.generator, self.target.generator, -self.target.sign
            )
        if self.kind is AutomorphismKind.PERMUTATION:
            inv: list[Letter | None] = [None] * len(self.images)
            for g, img in enumerate(self.images, start=1):
                inv[img.generator - 1] = Letter(g, img.sign)
            return WhiteheadAutomorphism.permutation(
                [x for x in inv if x is not None]
            )
        assert self.multiplier is not None
        a = self.multiplier
        return WhiteheadAutomorphism.type_ii(
            a.inverse(), (self.side - {a}) | {a.inverse()}
        )

    def is_trivial(self) -> bool:
        """True for TypeII automorphisms acting as the identity."""
        if self.kind is AutomorphismKind.TYPE_II:
            return len(self.side) == 1
        if self.kind is AutomorphismKind.PERMUTATION:
            return all(
                img == Letter(g, 1)
                for g, img in enumerate(self.images, start=1)
            )
        return False

    def encode(self) -> str:
        """
        Encode the automorphism as a short string.

        Returns:
            str: e.g. `inv(a)`, `tv(a,b)`, `perm(b,A)`, `wh(a;a,B)`.
        """
        if self.kind is AutomorphismKind.INVERSION:
            return f"inv({Letter(self.generator, 1).name()})"
        if self.kind is AutomorphismKind.TRANSVECTION:
            assert self.target is not None
            src = Letter(self.generator, 1).name()
            return f"tv({src},{self.target.name()})"
        if self.kind is AutomorphismKind.PERMUTATION:
            return f"perm({','.join(x.name() for x in self.images)})"
        assert self.multiplier is not None
        side = ",".join(x.name() for x in sorted(self.side))
        return f"wh({self.multiplier.name()};{side})"

    @classmethod
    def decode(cls, text: str) -> WhiteheadAutomorphism:
        """
        Parse a string produced by `encode`.

        Args:
            text (str): The encoded automorphism.

        Returns:
            WhiteheadAutomorphism: The decoded automorphism.

        Raises:
            ValueError: If the text is not a valid encoding.
        """
        m = _ENCODED.match(text.strip())
        if m is None:
            raise ValueError(f"Invalid automorphism encoding: {text!r}")
        kind, body = m.group(1), m.group(2)
        try:
            if kind == "inv":
                return cls.inversion(letter_from_name(body).generator)
            if kind == "tv":
                src, dst = (letter_from_name(t) for t in body.split(","))
                return cls.transvection(
                    src.generator, dst.generator, dst.sign
                )
            if kind == "perm":
                return cls.permutation(
                    [letter_from_name(t) for t in body.split(",")]
                )
            mult, _, side = body.partition(";")
            return cls.type_ii(
                letter_from_name(mult),
                [letter_from_name(t) for t in side.split(",")],
            )
        except ValueError as e:
            raise ValueError(f"Invalid automorphism encoding: {text!r}") from e

    def __str__(self) -> str:
        return self.encode()


@lru_cache(maxsize=65536)
def _image(phi: WhiteheadAutomorphism, letter: Letter) -> tuple[Letter, ...]:
    if letter.sign < 0:
        return tuple(
            x.inverse() for x in reversed(_image(phi, letter.inverse()))
        )
    g = letter.generator
    if phi.kind is AutomorphismKind.INVERSION:
        return (letter.inverse(),) if g == phi.generator else (letter,)
    if phi.kind is AutomorphismKind.TRANSVECTION:
        assert phi.target is not None
        return (letter, phi.target) if g == phi.generator else (letter,)
    if phi.kind is AutomorphismKind.PERMUTATION:
        return (phi.images[g - 1],) if g <= len(phi.images) else (letter,)
    a = phi.multiplier
    assert a is not None
    if g == a.generator:
        return (letter,)
    out: list[Letter] = []
    if letter.inverse() in phi.side:
        out.append(a.inverse())
    out.append(letter)
    if letter in phi.side:
        out.append(a)
    return tuple(out)


def apply_automorphism(
    phi: WhiteheadAutomorphism, words: Iterable[CyclicWord]
) -> list[CyclicWord]:
    """
    Apply an automorphism to every word of a collection.

    Args:
        phi (WhiteheadAutomorphism): The automorphism.
        words (Iterable[CyclicWord]): The collection, in order.

    Returns:
        list[CyclicWord]: Images in the same order, each freely and
            cyclically reduced and canonically rotated.

    Raises:
        EmptyCyclicWordError: If some image is trivial.

    Examples:
        >>> phi = WhiteheadAutomorphism.transvection(1, 2)
        >>> words = [CyclicWord.from_ints([1, 2])]
        >>> [str(w) for w in apply_automorphism(phi, words)]
        ['abb']
    """
    return [phi(w) for w in words]


def apply_sequence(
    phis: Iterable[WhiteheadAutomorphism], words: Iterable[CyclicWord]
) -> list[CyclicWord]:
    """Apply automorphisms one after another, first to last."""
    current = list(words)
    for phi in phis:
        current = apply_automorphism(phi, current)
    return current


def _generator_list(
    alphabet: Alphabet, generators: Iterable[int] | None
) -> list[int]:
    if generators is None:
        return list(range(1, alphabet.rank + 1))
    gens = sorted(set(generators))
    if any(g < 1 or g > alphabet.rank for g in gens):
        raise ValueError(
            f"Generators {gens} leave the rank {alphabet.rank} alphabet"
        )
    return gens


def iter_type_ii(
    alphabet: Alphabet,
    generators: Iterable[int] | None = None,
    cyclic: bool = False,
) -> Iterator[WhiteheadAutomorphism]:
    """
    Yield TypeII automorphisms over some generators of an alphabet.

    For each multiplier letter a, each other generator x is assigned
    one of: neither x nor x^-1 in A, only x, only x^-1, both. Over m
    generators this gives 2m * 4^(m-1) automorphisms.

    Args:
        alphabet (Alphabet): The alphabet.
        generators (Iterable[int] | None): Generators to use, all of
            them when None.
        cyclic (bool): Skip the maps that fix every cyclic word over the
            generators: side {a}, and conjugation by a.

    Yields:
        WhiteheadAutomorphism: In a fixed, stable order.

    Raises:
        ValueError: If a generator leaves the alphabet.
    """
    gens = _generator_list(alphabet, generators)
    for a in alphabet.letters():
        if a.generator not in gens:
            continue
        others = [g for g in gens if g != a.generator]
        for choice in itertools.product(range(4), repeat=len(others)):
            if cyclic and (
                all(c == 0 for c in choice) or all(c == 3 for c in choice)
            ):
                continue
            side = {a}
            for g, c in zip(others, choice):
                if c in (1, 3):
                    side.add(Letter(g, 1))
                if c in (2, 3):
                    side.add(Letter(g, -1))
            yield WhiteheadAutomorphism.type_ii(a, side)


def enumerate_type_ii(alphabet: Alphabet) -> list[WhiteheadAutomorphism]:
    """
    List every TypeII automorphism of an alphabet, the identity-acting
    ones included: 2n * 4^(n-1) in all.
    """
    return list(iter_type_ii(alphabet))


def iter_permutation_automorphisms(
    alphabet: Alphabet, generators: Iterable[int] | None = None
) -> Iterator[WhiteheadAutomorphism]:
    """
    Yield the signed permutations of some generators, identity excluded.

    Generators outside `generators` are fixed.
    """
    gens = _generator_list(alphabet, generators)
    width = max(gens, default=0)
    for perm in itertools.permutations(gens):
        for signs in itertools.product((1, -1), repeat=len(gens)):
            images = [Letter(g, 1) for g in range(1, width + 1)]
            for g, h, s in zip(gens, perm, signs):
                images[g - 1] = Letter(h, s)
            phi = WhiteheadAutomorphism.permutation(images)
            if not phi.is_trivial():
                yield phi


def enumerate_permutation_automorphisms(
    alphabet: Alphabet,
) -> list[WhiteheadAutomorphism]:
    """List all signed generator permutations, identity excluded."""
    return list(iter_permutation_automorphisms(alphabet))


def iter_whitehead_automorphisms(
    alphabet: Alphabet,
    include_permutations: bool = False,
    generators: Iterable[int] | None = None,
    cyclic: bool = False,
) -> Iterator[WhiteheadAutomorphism]:
    """
    Yield the automorphisms used for minimization, lazily.

    The order is fixed: inversions, then transvections x_i -> x_i x_j
    (i, j ascending), then TypeII automorphisms as produced by
    `iter_type_ii`, then (optionally) signed generator permutations.

    Generators that occur in no word can be left out through
    `generators`: an automorphism touching only such generators fixes
    the words, and one that multiplies by them lengthens the words.

    Args:
        alphabet (Alphabet): The alphabet.
        include_permutations (bool): Append the signed permutations.
        generators (Iterable[int] | None): Generators to use, all of
            them when None.
        cyclic (bool): Passed to `iter_type_ii`.

    Yields:
        WhiteheadAutomorphism: Duplicate-free, stable order.

    Raises:
        ValueError: If a generator leaves the alphabet.
    """
    gens = _generator_list(alphabet, generators)
    for i in gens:
        yield WhiteheadAutomorphism.inversion(i)
    for i in gens:
        for j in gens:
            if i != j:
                yield WhiteheadAutomorphism.transvection(i, j)
    yield from iter_type_ii(alphabet, gens, cyclic)
    if include_permutations:
        yield from iter_permutation_automorphisms(alphabet, gens)


def enumerate_whitehead_automorphisms(
    alphabet: Alphabet, include_permutations: bool = False
) -> list[WhiteheadAutomorphism]:
    """
    List the automorphisms of `iter_whitehead_automorphisms` over every
    generator of an alphabet.
    """
    return list(iter_whitehead_automorphisms(alphabet, include_permutations))


def automorphism_from_cut(
    vertex: Letter, side: Iterable[Letter], alphabet: Alphabet
) -> WhiteheadAutomorphism:
    """
    Return the TypeII automorphism realizing a Whitehead graph cut.

    For a vertex set S of the Whitehead graph containing `vertex` but
    not its inverse, the automorphism (S^-1, vertex^-1) changes the
    total length of the words by |cut(S)| - valence(vertex).

    Args:
        vertex (Letter): The vertex on the source side of the cut.
        side (Iterable[Letter]): The source side S.
        alphabet (Alphabet): The alphabet.

    Returns:
        WhiteheadAutomorphism: The TypeII automorphism.

    Raises:
        ValueError: If S does not separate vertex from its inverse or
            leaves the alphabet.
    """
    s = frozenset(side)
    if vertex not in s or vertex.inverse() in s:
        raise ValueError(
            f"Side set does not separate {vertex} from {vertex.inverse()}"
        )
    if any(x not in alphabet for x in s):
        raise ValueError("Side set leaves the alphabet")
    return WhiteheadAutomorphism.type_ii(
        vertex.inverse(), {x.inverse() for x in s}
    )


def describe(phis: Iterable[WhiteheadAutomorphism]) -> list[str]:
    """Encode a sequence of automorphisms."""
    return [phi.encode() for phi in phis]


def format_images(phi: WhiteheadAutomorphism, alphabet: Alphabet) -> str:
    """Return `a -> ab, b -> b, ...` for the generators of an alphabet."""
    parts = []
    for g in range(1, alphabet.rank + 1):
        x = Letter(g, 1)
        parts.append(f"{x.name()} -> {format_word(phi.image(x)) or '1'}")
    return ", ".join(parts)
