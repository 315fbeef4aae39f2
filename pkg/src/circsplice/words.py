"""Words, circular words and conversions between linear and circular languages.

Words are plain ``str`` values whose characters are letters of an
:class:`Alphabet`.  The empty word is ``""`` in memory and ``"1"`` when
serialized, so ``"1"`` is never a letter.

A circular word is the conjugacy class of a word (``xy ~ yx``).  It is
represented by its lexicographically least rotation, found in linear time
with Booth's algorithm.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable

from .errors import AlphabetError, AlphabetMismatchError

EMPTY_SYMBOL = "1"
LETTER_POOL = string.ascii_lowercase + string.ascii_uppercase + string.digits.replace(EMPTY_SYMBOL, "")


@dataclass(frozen=True)
class Alphabet:
    """A finite, totally ordered set of single-character letters.

    Letters are kept in code-point order whatever order they were given in,
    so canonical forms never depend on how an alphabet was spelled.
    """

    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise AlphabetError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"repeated letters in alphabet {letters!r}")
        for letter in letters:
            if len(letter) != 1 or not (letter.isascii() and letter.isalnum()):
                raise AlphabetError(f"letter {letter!r} is not a single ASCII alphanumeric")
            if letter == EMPTY_SYMBOL:
                raise AlphabetError(f"{EMPTY_SYMBOL!r} is reserved for the empty word")
        object.__setattr__(self, "letters", tuple(sorted(letters)))

    @classmethod
    def of(cls, letters: Iterable[str]) -> "Alphabet":
        return cls(tuple(letters))

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Alphabet":
        return cls(tuple(alph(words)))

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, letter):
        return letter in self.letters

    def __str__(self):
        return " ".join(self.letters)

    def accepts(self, word: str) -> bool:
        return set(word) <= set(self.letters)

    def check(self, word: str, what: str = "word") -> str:
        """Return ``word`` unchanged, or raise if it leaves the alphabet."""
        stray = sorted(set(word) - set(self.letters))
        if stray:
            raise AlphabetMismatchError(
                f"{what} {serialize_word(word)!r} uses letters {''.join(stray)!r} "
                f"outside the alphabet {{{', '.join(self.letters)}}}"
            )
        return word

    def fresh_letters(self, count: int, avoid: Iterable[str] = ()) -> list[str]:
        """Pick ``count`` letters from the letter pool that are not in this alphabet."""
        taken = set(self.letters) | set(avoid)
        pool = [c for c in LETTER_POOL if c not in taken]
        if count > len(pool):
            raise AlphabetError(f"cannot draw {count} fresh letters")
        return pool[:count]


def alph(words) -> frozenset[str]:
    """Letters occurring in a word, or in any word of an iterable of words."""
    if isinstance(words, str):
        return frozenset(words)
    letters = set()
    for w in words:
        letters.update(w.canonical if isinstance(w, CircularWord) else w)
    return frozenset(letters)


def serialize_word(w: str) -> str:
    return w if w else EMPTY_SYMBOL


def parse_word(token: str) -> str:
    return "" if token == EMPTY_SYMBOL else token


def least_rotation(w: str) -> int:
    """Start index of the lexicographically least rotation of ``w`` (Booth)."""
    n = len(w)
    if n < 2:
        return 0
    ww = w + w
    failure = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ww[j]
        i = failure[j - k - 1]
        while i != -1 and c != ww[k + i + 1]:
            if c < ww[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if c != ww[k + i + 1]:
            # here i == -1
            if c < ww[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k


@lru_cache(maxsize=1 << 18)
def canonicalize(w: str) -> str:
    """Lexicographically least rotation of ``w``."""
    k = least_rotation(w)
    return w[k:] + w[:k]


def rotate(w: str, k: int) -> str:
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def conjugates(w: str) -> set[str]:
    """All distinct rotations of ``w``; ``{""}`` for the empty word."""
    if not w:
        return {""}
    return {w[i:] + w[:i] for i in range(len(w))}


@total_ordering
@dataclass(frozen=True, eq=True)
class CircularWord:
    """Conjugacy class of a word, stored as its least rotation.

    ``CircularWord("caba") == CircularWord("abac")``.  Ordering is by length
    and then lexicographically, which is the order used for printed output.
    """

    canonical: str

    def __post_init__(self):
        if not isinstance(self.canonical, str):
            raise TypeError(f"expected str, got {type(self.canonical).__name__}")
        object.__setattr__(self, "canonical", canonicalize(self.canonical))

    def __len__(self):
        return len(self.canonical)

    def __str__(self):
        return serialize_word(self.canonical)

    def __repr__(self):
        return f"~{serialize_word(self.canonical)}"

    def __lt__(self, other):
        if not isinstance(other, CircularWord):
            return NotImplemented
        return (len(self.canonical), self.canonical) < (len(other.canonical), other.canonical)

    def count(self, letter: str) -> int:
        return self.canonical.count(letter)

    def alph(self) -> frozenset[str]:
        return frozenset(self.canonical)

    def linearizations(self) -> set[str]:
        return conjugates(self.canonical)

    def is_empty(self) -> bool:
        return not self.canonical


EMPTY = CircularWord("")

CircularLanguage = frozenset  # frozenset[CircularWord]


def as_circular(w) -> CircularWord:
    return w if isinstance(w, CircularWord) else CircularWord(w)


def circularize(words: Iterable[str]) -> frozenset[CircularWord]:
    """The set of classes of the given words, duplicates merged."""
    return frozenset(CircularWord(w) for w in words)


def full_linearization(language: Iterable[CircularWord]) -> set[str]:
    """Every word whose class lies in ``language``."""
    out: set[str] = set()
    for cw in language:
        out |= as_circular(cw).linearizations()
    return out


def sort_words(words: Iterable[str]) -> list[str]:
    """Sort linear words by length, then lexicographically."""
    return sorted(words, key=lambda w: (len(w), w))
