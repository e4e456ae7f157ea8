#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Letters, words and cyclic words over a free group alphabet.

This module defines the value types every other part of wgeo is built
from: an `Alphabet` of rank n, signed `Letter`s, freely reduced `Word`s
and canonically rotated `CyclicWord`s, together with the parsing,
formatting and reduction functions that move between them.

Letters follow the usual convention: lowercase `a` is the generator
x_1, uppercase `A` is its inverse. Cyclic words are stored in their
least rotation under the order a < A < b < B < ...
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

from .. import config


class WordParseError(ValueError):
    """Raised when word text contains a character outside the alphabet.

    Attributes:
        position (int): 0-based index of the offending character.
        character (str): The offending character.
    """

    def __init__(self, message: str, position: int, character: str) -> None:
        super().__init__(message)
        self.position = position
        self.character = character


class UnsupportedSyntaxError(ValueError):
    """Raised when the letter syntax cannot express the requested rank."""


class EmptyCyclicWordError(ValueError):
    """Raised when a word is trivial up to conjugacy."""


@dataclass(frozen=True, slots=True)
class Alphabet:
    """The generators x_1..x_n of a free group and their inverses.

    Attributes:
        rank (int): Number of free generators, at least 1.
    """

    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(
                f"Alphabet rank must be >= 1, got {self.rank!r}"
            )

    def letters(self) -> list[Letter]:
        """Return all 2n letters in the fixed order a, A, b, B, ..."""
        out: list[Letter] = []
        for g in range(1, self.rank + 1):
            out.append(Letter(g, 1))
            out.append(Letter(g, -1))
        return out

    def __contains__(self, letter: object) -> bool:
        return isinstance(letter, Letter) and letter.generator <= self.rank

    def uses_letter_syntax(self) -> bool:
        """True if every generator has a single-character name."""
        return self.rank <= config.CLI_MAX_RANK


@total_ordering
@dataclass(frozen=True, slots=True)
class Letter:
    """A generator or the inverse of a generator.

    Attributes:
        generator (int): 1-based generator index.
        sign (int): +1 for the generator, -1 for its inverse.
    """

    generator: int
    sign: int

    def __post_init__(self) -> None:
        if self.generator < 1:
            raise ValueError(
                f"Generator index must be >= 1, got {self.generator}"
            )
        if self.sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, value: int) -> Letter:
        """Build a letter from its signed index (3 -> c, -3 -> C)."""
        if value == 0:
            raise ValueError("0 is not a letter")
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        """Return the signed index of the letter."""
        return self.generator * self.sign

    @property
    def code(self) -> int:
        """Position in the order a < A < b < B < ..."""
        return 2 * self.generator + (0 if self.sign > 0 else 1)

    def inverse(self) -> Letter:
        """Return the inverse letter."""
        return Letter(self.generator, -self.sign)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Letter):
            return NotImplemented
        return self.code < other.code

    def name(self) -> str:
        """Return the display name (`a`, `A`, or `x27`, `X27`)."""
        if self.generator <= config.CLI_MAX_RANK:
            ch = string.ascii_lowercase[self.generator - 1]
            return ch if self.sign > 0 else ch.upper()
        return f"{'x' if self.sign > 0 else 'X'}{self.generator}"

    def __str__(self) -> str:
        return self.name()


def _cancels(x: Letter, y: Letter) -> bool:
    return x.generator == y.generator and x.sign != y.sign


def _is_freely_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not _cancels(letters[i], letters[i + 1])
        for i in range(len(letters) - 1)
    )


class Word:
    """A freely reduced word.

    Attributes:
        letters (tuple[Letter, ...]): The letters, no adjacent inverse pair.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        """Initialize a Word from already reduced letters.

        Args:
            letters (Iterable[Letter]): Letters of the word.

        Raises:
            ValueError: If two adjacent letters cancel.
        """
        seq = tuple(letters)
        if not _is_freely_reduced(seq):
            raise ValueError("Word is not freely reduced")
        self.letters: tuple[Letter, ...] = seq

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> Word:
        """Freely reduce a sequence of signed generator indices."""
        return free_reduce(Letter.from_int(v) for v in values)

    def to_ints(self) -> list[int]:
        """Return the signed generator indices of the letters."""
        return [x.to_int() for x in self.letters]

    def inverse(self) -> Word:
        """Return the inverse word."""
        return Word(x.inverse() for x in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self.letters)!r})"

    def __str__(self) -> str:
        return format_word(self.letters)


@total_ordering
class CyclicWord:
    """A nonempty cyclically reduced word, stored in canonical rotation.

    Indices are read modulo the length, so the letter after the last one
    is the first one. Two cyclic words are equal iff they are rotations
    of each other.

    Attributes:
        letters (tuple[Letter, ...]): The least rotation of the word.
    """

    __slots__ = ("letters", "_key")

    def __init__(self, letters: Iterable[Letter]) -> None:
        """Initialize a CyclicWord from any rotation of its letters.

        Args:
            letters (Iterable[Letter]): A cyclically reduced letter
                sequence, in any rotation.

        Raises:
            EmptyCyclicWordError: If the sequence is empty.
            ValueError: If the sequence is not cyclically reduced.
        """
        seq = tuple(letters)
        if not seq:
            raise EmptyCyclicWordError("empty cyclic word")
        if not _is_freely_reduced(seq) or (
            len(seq) > 1 and _cancels(seq[-1], seq[0])
        ):
            raise ValueError(
                f"{format_word(seq)!r} is not cyclically reduced"
            )
        self.letters: tuple[Letter, ...] = least_rotation(seq)
        self._key: tuple[int, ...] = tuple(x.code for x in self.letters)

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> CyclicWord:
        """Cyclically reduce a sequence of signed generator indices."""
        return cyclic_reduce(Word.from_ints(values))

    @property
    def max_generator(self) -> int:
        """Highest generator index occurring in the word."""
        return max(x.generator for x in self.letters)

    def rotations(self) -> list[tuple[Letter, ...]]:
        """Return every rotation of the letter sequence."""
        n = len(self.letters)
        return [self.letters[i:] + self.letters[:i] for i in range(n)]

    def to_ints(self) -> list[int]:
        """Return the signed indices of the canonical rotation."""
        return [x.to_int() for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index % len(self.letters)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return (len(self), self._key) < (len(other), other._key)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CyclicWord({format_word(self.letters)!r})"

    def __str__(self) -> str:
        return format_word(self.letters)


def least_rotation(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """
    Return the lexicographically least rotation of a letter sequence.

    Letters compare as a < A < b < B < ... The naive quadratic scan is
    adequate for the word lengths this package handles.

    Args:
        letters (Sequence[Letter]): Letters to rotate.

    Returns:
        tuple[Letter, ...]: The least rotation.
    """
    seq = tuple(letters)
    n = len(seq)
    if n == 0:
        return seq
    codes = [x.code for x in seq]
    best = min(range(n), key=lambda i: codes[i:] + codes[:i])
    return seq[best:] + seq[:best]


def free_reduce(letters: Iterable[Letter]) -> Word:
    """
    Freely reduce a letter sequence.

    Args:
        letters (Iterable[Letter]): Arbitrary letters.

    Returns:
        Word: The unique free reduction.

    Examples:
        >>> str(free_reduce(parse_letters("aAa")))
        'a'
    """
    stack: list[Letter] = []
    for x in letters:
        if stack and _cancels(stack[-1], x):
            stack.pop()
        else:
            stack.append(x)
    w = Word.__new__(Word)
    w.letters = tuple(stack)
    return w


def cyclic_reduce(word: Word) -> CyclicWord:
    """
    Cyclically reduce a word and put it in canonical rotation.

    Args:
        word (Word): A freely reduced word.

    Returns:
        CyclicWord: The conjugacy class representative.

    Raises:
        EmptyCyclicWordError: If the word is trivial up to conjugacy.
    """
    seq = word.letters
    i, j = 0, len(seq) - 1
    while i < j and _cancels(seq[i], seq[j]):
        i += 1
        j -= 1
    core = seq[i : j + 1]
    if not core:
        raise EmptyCyclicWordError("empty cyclic word")
    return CyclicWord(core)


_TOKEN = re.compile(r"^(?:[A-Za-z]|[xX][0-9]+)$")


def letter_from_name(name: str) -> Letter:
    """
    Parse one letter name: `a`, `A`, `x27` or `X27`.

    Raises:
        ValueError: If the name is malformed.
    """
    name = name.strip()
    if not _TOKEN.match(name):
        raise ValueError(f"Invalid letter name: {name!r}")
    if len(name) == 1:
        sign = 1 if name.islower() else -1
        return Letter(ord(name.lower()) - ord("a") + 1, sign)
    return Letter(int(name[1:]), 1 if name[0] == "x" else -1)


_FORMATTED_TOKEN = re.compile(r"[xX][0-9]+|[A-Za-z]")


def parse_formatted(text: str) -> CyclicWord:
    """
    Parse the output of `format_word` back into a cyclic word.

    Accepts the letter syntax, `x27` tokens and any mix of the two, with
    or without separating spaces, so words of any rank survive a round
    trip through JSON.

    Raises:
        ValueError: If a token is malformed or the word is trivial.

    Examples:
        >>> str(parse_formatted("x27"))
        'x27'
    """
    compact = "".join(text.split())
    tokens = _FORMATTED_TOKEN.findall(compact)
    if "".join(tokens) != compact:
        raise ValueError(f"Invalid formatted word: {text!r}")
    return cyclic_reduce(free_reduce(letter_from_name(t) for t in tokens))


def parse_letters(text: str, alphabet: Alphabet | None = None) -> list[Letter]:
    """
    Parse letter text without reducing it.

    Args:
        text (str): Letters a-z / A-Z.
        alphabet (Alphabet | None): If given, every letter must lie in it.

    Returns:
        list[Letter]: The parsed letters, as written.

    Raises:
        UnsupportedSyntaxError: If the alphabet rank exceeds 26.
        WordParseError: On the first character outside the alphabet.
    """
    if alphabet is not None and not alphabet.uses_letter_syntax():
        raise UnsupportedSyntaxError(
            f"Rank {alphabet.rank} exceeds the {config.CLI_MAX_RANK} "
            "generators expressible with letters a-z"
        )
    out: list[Letter] = []
    for pos, ch in enumerate(text):
        if ch not in string.ascii_letters:
            raise WordParseError(
                f"Invalid character {ch!r} at position {pos}", pos, ch
            )
        gen = string.ascii_lowercase.index(ch.lower()) + 1
        if alphabet is not None and gen > alphabet.rank:
            raise WordParseError(
                f"Letter {ch!r} at position {pos} is outside the rank "
                f"{alphabet.rank} alphabet",
                pos,
                ch,
            )
        out.append(Letter(gen, 1 if ch.islower() else -1))
    return out


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """
    Parse word text and freely reduce it.

    Args:
        text (str): Letters a-z / A-Z; uppercase letters are inverses.
        alphabet (Alphabet): Alphabet of rank at most 26.

    Returns:
        Word: The free reduction of the parsed letters.

    Raises:
        UnsupportedSyntaxError: If the alphabet rank exceeds 26.
        WordParseError: On a character outside the alphabet.

    Examples:
        >>> len(parse_word("bbaaccabc", Alphabet(3)))
        9
        >>> len(parse_word("abBA", Alphabet(2)))
        0
    """
    return free_reduce(parse_letters(text, alphabet))


def parse_cyclic_word(text: str, alphabet: Alphabet) -> CyclicWord:
    """Parse word text straight to its cyclic word."""
    return cyclic_reduce(parse_word(text, alphabet))


def parse_collection(text: str, alphabet: Alphabet) -> list[CyclicWord]:
    """
    Parse a comma-separated collection of cyclic words.

    Args:
        text (str): e.g. "abAB,a".
        alphabet (Alphabet): Alphabet of rank at most 26.

    Returns:
        list[CyclicWord]: One cyclic word per comma-separated item.

    Raises:
        WordParseError: With the position counted in the full text.
        EmptyCyclicWordError: If an item is trivial.
    """
    words: list[CyclicWord] = []
    offset = 0
    for item in text.split(","):
        try:
            words.append(parse_cyclic_word(item, alphabet))
        except WordParseError as e:
            pos = offset + e.position
            raise WordParseError(
                f"Invalid character {e.character!r} at position {pos}",
                pos,
                e.character,
            ) from e
        offset += len(item) + 1
    return words


def infer_rank(texts: Iterable[str]) -> int:
    """
    Return the highest generator index used by some letter texts.

    Args:
        texts (Iterable[str]): Word texts, possibly comma-separated.

    Returns:
        int: The inferred rank, at least 1.
    """
    rank = 1
    for text in texts:
        for ch in text:
            if ch in string.ascii_letters:
                gen = string.ascii_lowercase.index(ch.lower()) + 1
                rank = max(rank, gen)
    return rank


def format_word(letters: Iterable[Letter]) -> str:
    """
    Format letters as text.

    Generators up to 26 are written as single letters; higher ones as
    space-separated `x27` / `X27` tokens.

    Args:
        letters (Iterable[Letter]): Letters to format.

    Returns:
        str: The formatted word.
    """
    seq = list(letters)
    if all(x.generator <= config.CLI_MAX_RANK for x in seq):
        return "".join(x.name() for x in seq)
    return " ".join(x.name() for x in seq)


def total_length(words: Iterable[CyclicWord]) -> int:
    """Return the sum of the lengths of a collection of cyclic words."""
    return sum(len(w) for w in words)


def check_alphabet(words: Iterable[CyclicWord], alphabet: Alphabet) -> None:
    """
    Ensure every word of a collection lies over an alphabet.

    Raises:
        ValueError: If some letter's generator exceeds the rank.
    """
    for w in words:
        if w.max_generator > alphabet.rank:
            raise ValueError(
                f"Word {w} uses generator {w.max_generator}, outside the "
                f"rank {alphabet.rank} alphabet"
            )


def collection_key(words: Iterable[CyclicWord]) -> tuple[CyclicWord, ...]:
    """Return an order-independent key for a collection of cyclic words."""
    return tuple(sorted(words))
