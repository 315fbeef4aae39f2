"""Paun circular splicing: rules, systems, the splicing operator and bounded closure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import CompletenessError, InvalidBoundError
from .words import (
    EMPTY,
    Alphabet,
    CircularWord,
    alph,
    as_circular,
    canonicalize,
    conjugates,
    parse_word,
    serialize_word,
)

GENERAL = "general"
CSSH13 = "cssh13"
CSSH23 = "cssh23"
CSSH24 = "cssh24"
SIMPLE13 = "simple13"
SIMPLE23 = "simple23"
SIMPLE24 = "simple24"
COMPLETE = "complete"
CLASSIFICATIONS = (GENERAL, CSSH13, CSSH23, CSSH24, SIMPLE13, SIMPLE23, SIMPLE24, COMPLETE)


@dataclass(frozen=True, order=True)
class Rule:
    """A splicing rule ``u1#u2$u3#u4``; any component may be empty."""

    u1: str
    u2: str
    u3: str
    u4: str

    @classmethod
    def pair(cls, a: str, b: str) -> "Rule":
        """The (1,3) rule ``a#1$b#1``, written ``(a, b)`` in the literature."""
        return cls(a, "", b, "")

    @classmethod
    def parse(cls, text: str) -> "Rule":
        left, sep, right = text.partition("$")
        if not sep or left.count("#") != 1 or right.count("#") != 1:
            raise ValueError(f"rule {text!r} is not of the form u1#u2$u3#u4")
        u1, u2 = left.split("#")
        u3, u4 = right.split("#")
        parts = [parse_word(p) for p in (u1, u2, u3, u4)]
        for raw in (u1, u2, u3, u4):
            if raw == "":
                raise ValueError(f"rule {text!r} has an empty component; write 1 for the empty word")
        return cls(*parts)

    def __str__(self):
        s = serialize_word
        return f"{s(self.u1)}#{s(self.u2)}${s(self.u3)}#{s(self.u4)}"

    @property
    def sites(self) -> tuple[str, str]:
        return self.u1 + self.u2, self.u3 + self.u4

    def swapped(self) -> "Rule":
        return Rule(self.u3, self.u4, self.u1, self.u2)

    def letters(self) -> frozenset[str]:
        return frozenset(self.u1 + self.u2 + self.u3 + self.u4)

    def shape(self) -> str | None:
        """Position pattern ``"13"``, ``"14"``, ``"23"`` or ``"24"`` of a semi-simple rule.

        ``None`` when either site is not a single letter.
        """
        if len(self.u1) + len(self.u2) != 1 or len(self.u3) + len(self.u4) != 1:
            return None
        return ("1" if self.u1 else "2") + ("3" if self.u3 else "4")


def symmetrize(rules: Iterable[Rule]) -> frozenset[Rule]:
    """Close a rule set under ``u1#u2$u3#u4 -> u3#u4$u1#u2`` (the language is unchanged)."""
    rules = frozenset(rules)
    return rules | {r.swapped() for r in rules}


def _left_matches(rule: Rule, rotations: Iterable[str]) -> list[str]:
    # rotations of the form u2 x u1
    need = len(rule.u1) + len(rule.u2)
    return [r for r in rotations if len(r) >= need and r.startswith(rule.u2) and r.endswith(rule.u1)]


def _right_matches(rule: Rule, rotations: Iterable[str]) -> list[str]:
    # rotations of the form u4 y u3
    need = len(rule.u3) + len(rule.u4)
    return [r for r in rotations if len(r) >= need and r.startswith(rule.u4) and r.endswith(rule.u3)]


def apply_rule(rule: Rule, w1, w2, alphabet: Alphabet | None = None) -> frozenset[CircularWord]:
    """All classes ``~u2 x u1 u4 y u3`` with ``~w1 = ~u2 x u1`` and ``~w2 = ~u4 y u3``.

    Every rotation of both words and every occurrence of the sites is tried.
    When ``alphabet`` is given, the rule and both words are checked against it.
    """
    w1, w2 = as_circular(w1), as_circular(w2)
    if alphabet is not None:
        alphabet.check(rule.u1 + rule.u2 + rule.u3 + rule.u4, what=f"rule {rule}")
        alphabet.check(w1.canonical)
        alphabet.check(w2.canonical)
    lefts = _left_matches(rule, conjugates(w1.canonical))
    if not lefts:
        return frozenset()
    rights = _right_matches(rule, conjugates(w2.canonical))
    return frozenset(CircularWord(x + y) for x in lefts for y in rights)


class SplicingSystem:
    """A finite Paun circular splicing system ``(A, I, R)``.

    ``rules`` is stored symmetrized.  Use :meth:`complete` to build a
    complete system from an alphabet and an initial language.
    """

    def __init__(self, alphabet, initial, rules):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.of(alphabet)
        initial = frozenset(as_circular(w) for w in initial)
        rules = frozenset(rules)
        for w in initial:
            alphabet.check(w.canonical, what="initial word")
        for r in rules:
            alphabet.check(r.u1 + r.u2 + r.u3 + r.u4, what=f"rule {r}")
        self.alphabet = alphabet
        self.initial = initial
        self.rules = symmetrize(rules)

    @classmethod
    def complete(cls, alphabet, initial) -> "SplicingSystem":
        """Build the complete system with ``R = A x A`` after validating ``I``."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.of(alphabet)
        rules = [Rule.pair(a, b) for a in alphabet for b in alphabet]
        system = cls(alphabet, initial, rules)
        system.validate_complete()
        return system

    def __repr__(self):
        initial = " ".join(str(w) for w in sorted(self.initial))
        return f"SplicingSystem(A={{{self.alphabet}}}, I=~{{{initial}}}, |R|={len(self.rules)})"

    def __eq__(self, other):
        if not isinstance(other, SplicingSystem):
            return NotImplemented
        return (self.alphabet, self.initial, self.rules) == (other.alphabet, other.initial, other.rules)

    def __hash__(self):
        return hash((self.alphabet, self.initial, self.rules))

    def completeness_violations(self) -> list[str]:
        """Clauses of the complete-system definition that this system breaks."""
        problems = []
        full = {Rule.pair(a, b) for a in self.alphabet for b in self.alphabet}
        if self.rules != full:
            problems.append("R = A x A: the rule set must be exactly every (a, b) = a#1$b#1 over A")
        if alph(self.initial) != set(self.alphabet):
            missing = "".join(sorted(set(self.alphabet) - alph(self.initial)))
            problems.append(f"alph(I) = A: letters {missing!r} never occur in the initial language")
        if EMPTY in self.initial:
            problems.append("1 not in I: the empty circular word is in the initial language")
        return problems

    def validate_complete(self):
        problems = self.completeness_violations()
        if problems:
            raise CompletenessError("not a complete system; violated clause " + "; ".join(problems))

    @cached_property
    def classification(self) -> str:
        return classify(self)

    @property
    def is_complete(self) -> bool:
        return self.classification == COMPLETE


def classify(system: SplicingSystem) -> str:
    """Most specific class label of ``system``.

    Precedence: complete > simple > CSSH > general.  Since rules are
    symmetric, a ``1#a$b#1`` rule comes with ``b#1$1#a``; both count as the
    (2,3) type.  Systems mixing rule types, or with no rules, are general.
    """
    if not system.rules:
        return GENERAL
    kinds = set()
    simple = True
    for r in system.rules:
        shape = r.shape()
        if shape is None:
            return GENERAL
        kinds.add({"13": "13", "24": "24", "23": "23", "14": "23"}[shape])
        if r.u1 + r.u2 != r.u3 + r.u4:
            simple = False
    if len(kinds) != 1:
        return GENERAL
    (kind,) = kinds
    if kind == "13" and not system.completeness_violations():
        return COMPLETE
    return ("simple" if simple else "cssh") + kind


def sigma_prime(language, system: SplicingSystem) -> frozenset[CircularWord]:
    """One splicing step: every product of an ordered pair from ``language`` under some rule."""
    language = [as_circular(w) for w in language]
    out: set[CircularWord] = set()
    for w1 in language:
        for w2 in language:
            for r in system.rules:
                out |= apply_rule(r, w1, w2)
    return frozenset(out)


@dataclass(frozen=True)
class ClosureFragment:
    """The classes of ``L(S)`` of length at most ``bound``."""

    bound: int
    words: frozenset[CircularWord]
    system: SplicingSystem = field(repr=False, compare=False)

    def __contains__(self, w):
        return as_circular(w) in self.words

    def __iter__(self):
        return iter(sorted(self.words))

    def __len__(self):
        return len(self.words)

    def listing(self) -> list[str]:
        return [str(w) for w in sorted(self.words)]


class _Matches:
    """Per-class cache of rotations matching each distinct site pattern."""

    def __init__(self, canonical: str):
        self.rotations = sorted(conjugates(canonical))
        self._cache: dict[tuple[str, str], list[str]] = {}

    def get(self, prefix: str, suffix: str) -> list[str]:
        key = (prefix, suffix)
        hit = self._cache.get(key)
        if hit is None:
            need = len(prefix) + len(suffix)
            hit = [r for r in self.rotations if len(r) >= need and r.startswith(prefix) and r.endswith(suffix)]
            self._cache[key] = hit
        return hit


def closure_bounded(system: SplicingSystem, n: int) -> ClosureFragment:
    """Exactly the classes of ``L(S)`` whose length is at most ``n``.

    A product has length ``|w'| + |w''|``, so every ancestor of a short
    class is itself short and truncating at ``n`` loses nothing.
    Worklist: each newly found class is spliced against every class known
    at the time it is dequeued, including itself.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidBoundError(f"length bound must be a positive integer, got {n!r}")
    rules = sorted(system.rules)
    known: dict[str, _Matches] = {}
    by_length: list[list[str]] = [[] for _ in range(n + 1)]
    queue: deque[str] = deque()

    def discover(word: str):
        if word not in known:
            known[word] = _Matches(word)
            by_length[len(word)].append(word)
            queue.append(word)

    for w in sorted(system.initial):
        if len(w) <= n:
            discover(w.canonical)

    while queue:
        current = queue.popleft()
        cm = known[current]
        room = n - len(current)
        # R is symmetric, so (k, current) under r gives the same class as
        # (current, k) under the swapped rule; one order suffices.
        for length in range(room + 1):
            for other in list(by_length[length]):
                om = known[other]
                for r in rules:
                    lefts = cm.get(r.u2, r.u1)
                    if not lefts:
                        continue
                    rights = om.get(r.u4, r.u3)
                    for x in lefts:
                        for y in rights:
                            discover(canonicalize(x + y))
    words = frozenset(CircularWord(w) for w in known)
    return ClosureFragment(n, words, system)
