"""From a one-rule (1,3) simple system to an equivalent complete system.

With the single rule ``(a, a)`` every product is ``~ha ka`` for classes
``~ha`` and ``~ka``, so words can be cut after each ``a``.  The pieces form a
prefix code ``F``; renaming each piece to a fresh letter turns the system
into a complete one over those letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, UnsupportedSystemError
from .splicing import SplicingSystem
from .words import EMPTY, LETTER_POOL, Alphabet, CircularWord, as_circular, conjugates, sort_words


@dataclass(frozen=True)
class PrefixCode:
    """Words ending in ``anchor`` with no other occurrence of it."""

    anchor: str
    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(sort_words(set(self.elements)))
        for w in elements:
            if not w.endswith(self.anchor) or w.count(self.anchor) != 1:
                raise PreconditionError(
                    f"code word {w!r} must end with {self.anchor!r} and contain it exactly once"
                )
        object.__setattr__(self, "elements", elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def factorize(self, word: str) -> list[str] | None:
        """The unique factorization of ``word`` over the code, or ``None``."""
        pieces = []
        start = 0
        members = set(self.elements)
        while start < len(word):
            end = word.find(self.anchor, start)
            if end == -1:
                return None
            piece = word[start:end + 1]
            if piece not in members:
                return None
            pieces.append(piece)
            start = end + 1
        return pieces


@dataclass(frozen=True)
class CodingMorphism:
    """Injective letter-to-code-word substitution ``A' -> F``."""

    source_alphabet: Alphabet
    code: PrefixCode
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self):
        letters = [x for x, _ in self.mapping]
        images = [w for _, w in self.mapping]
        if sorted(letters) != list(self.source_alphabet.letters):
            raise PreconditionError("mapping must cover the source alphabet exactly")
        if sorted(images) != sorted(self.code.elements) or len(set(images)) != len(images):
            raise PreconditionError("mapping must be a bijection onto the code")

    @property
    def images(self) -> dict[str, str]:
        return dict(self.mapping)

    @property
    def preimages(self) -> dict[str, str]:
        return {w: x for x, w in self.mapping}

    def __call__(self, word: str) -> str:
        images = self.images
        self.source_alphabet.check(word)
        return "".join(images[x] for x in word)

    def __str__(self):
        return "map = " + " ".join(f"{x}:{w}" for x, w in self.mapping)

    def preimage(self, word: str) -> str | None:
        """Linear preimage of ``word``, or ``None`` if it does not factor over the code."""
        pieces = self.code.factorize(word)
        if pieces is None:
            return None
        back = self.preimages
        return "".join(back[p] for p in pieces)


def extract_prefix_code(initial: Iterable, anchor: str) -> PrefixCode:
    """Smallest code whose star holds every ``anchor``-terminated rotation of ``I``."""
    pieces = set()
    for cw in initial:
        cw = as_circular(cw)
        if anchor not in cw.canonical:
            raise PreconditionError(
                f"initial word {cw} does not contain {anchor!r}; split it off with split_initial first"
            )
        for rot in conjugates(cw.canonical):
            if not rot.endswith(anchor):
                continue
            start = 0
            for i, c in enumerate(rot):
                if c == anchor:
                    pieces.add(rot[start:i + 1])
                    start = i + 1
    return PrefixCode(anchor, tuple(pieces))


def coding_morphism(code: PrefixCode, names: Sequence[str] | None = None, avoid: Iterable[str] = ()) -> CodingMorphism:
    """Name each code word with a fresh letter, in the sorted order of the code.

    Without ``names``, letters are drawn from a-z, A-Z, digits, skipping
    ``avoid`` and every letter used by the code.
    """
    if names is None:
        taken = set(avoid).union(*code.elements)
        names = [c for c in LETTER_POOL if c not in taken][: len(code)]
    names = list(names)
    if len(names) != len(code):
        raise PreconditionError(f"need {len(code)} letter names, got {len(names)}")
    alphabet = Alphabet.of(names)
    return CodingMorphism(alphabet, code, tuple(zip(names, code.elements)))


def rule_anchor(system: SplicingSystem) -> str:
    """The letter ``a`` when the rule set is exactly ``{(a, a)}``."""
    rules = system.rules
    if len(rules) == 1:
        (r,) = rules
        if r.u2 == "" and r.u4 == "" and len(r.u1) == 1 and r.u1 == r.u3:
            return r.u1
    listing = ", ".join(sorted(str(r) for r in rules))
    raise UnsupportedSystemError(
        f"expected a one-rule (1,3) simple system with R = {{(a, a)}}, got R = {{{listing}}}"
    )


def split_initial(system: SplicingSystem) -> tuple[SplicingSystem, frozenset[CircularWord]]:
    """Separate the initial words that contain the rule letter from those that do not.

    Words without the letter never take part in splicing, so
    ``L(S) = L(S1) | leftovers``.
    """
    a = rule_anchor(system)
    kept = frozenset(w for w in system.initial if a in w.canonical)
    leftovers = system.initial - kept
    return SplicingSystem(system.alphabet, kept, system.rules), leftovers


def simple_to_complete(system: SplicingSystem, names: Sequence[str] | None = None) -> tuple[SplicingSystem, CodingMorphism]:
    """The complete system ``S'`` over the code letters and the morphism ``phi``.

    ``phi`` maps ``L(S')`` onto ``L(S)``.  Every initial word must contain the
    rule letter.
    """
    a = rule_anchor(system)
    if not system.initial:
        raise PreconditionError("the initial language is empty; there is no code to extract")
    code = extract_prefix_code(system.initial, a)
    phi = coding_morphism(code, names, avoid=system.alphabet.letters)
    new_initial = set()
    for cw in system.initial:
        pre = invert_morphism(phi, cw)
        if pre is None:  # pragma: no cover - every initial word factors by construction
            raise PreconditionError(f"initial word {cw} does not factor over the code")
        new_initial.add(pre)
    return SplicingSystem.complete(phi.source_alphabet, new_initial), phi


def apply_morphism(phi: CodingMorphism, w) -> CircularWord:
    """``phi(~w) = ~phi(w)``; independent of the representative."""
    return CircularWord(phi(as_circular(w).canonical))


def invert_morphism(phi: CodingMorphism, w) -> CircularWord | None:
    """Preimage class of ``~w`` under ``phi``, or ``None`` when ``~w`` is not an image."""
    w = as_circular(w)
    if w == EMPTY:
        return EMPTY
    a = phi.code.anchor
    for rot in sorted(conjugates(w.canonical)):
        if not rot.endswith(a):
            continue
        pre = phi.preimage(rot)
        if pre is not None:
            return CircularWord(pre)
    return None


def morphism_image(phi: CodingMorphism, language: Iterable) -> frozenset[CircularWord]:
    return frozenset(apply_morphism(phi, w) for w in language)
