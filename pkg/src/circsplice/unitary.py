"""Pure unitary languages: insertion, iterated insertion, membership and unavoidability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidBoundError, PreconditionError
from .words import Alphabet, conjugates, serialize_word, sort_words


@dataclass(frozen=True)
class InsertionBase:
    """A finite set ``Y`` of nonempty words over an alphabet."""

    alphabet: Alphabet
    words: frozenset[str]

    def __post_init__(self):
        if not isinstance(self.alphabet, Alphabet):
            object.__setattr__(self, "alphabet", Alphabet.of(self.alphabet))
        words = frozenset(self.words)
        if "" in words:
            raise PreconditionError("an insertion base may not contain the empty word")
        for y in words:
            self.alphabet.check(y, what="base word")
        object.__setattr__(self, "words", words)

    @classmethod
    def of(cls, words: Iterable[str], alphabet=None) -> "InsertionBase":
        words = frozenset(words)
        if alphabet is None:
            alphabet = Alphabet.from_words(words)
        return cls(alphabet, words)

    def __iter__(self):
        return iter(sort_words(self.words))

    def __len__(self):
        return len(self.words)


def _as_base(y) -> InsertionBase:
    return y if isinstance(y, InsertionBase) else InsertionBase.of(y)


def insert(z: Iterable[str], y) -> set[str]:
    """``{z1 y z2 : z1 z2 in Z, y in Y}`` over every split point."""
    ys = _as_base(y).words
    out = set()
    for w in z:
        for i in range(len(w) + 1):
            head, tail = w[:i], w[i:]
            for piece in ys:
                out.add(head + piece + tail)
    return out


def iterated_insertion_bounded(y, n: int) -> set[str]:
    """Every word of ``Y^{<-*}`` of length at most ``n`` (always includes the empty word)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidBoundError(f"length bound must be a non-negative integer, got {n!r}")
    base = _as_base(y)
    seen = {""}
    layer = {""}
    while layer:
        # every insertion lengthens the word, so layers never revisit
        layer = {w for w in insert(layer, base) if len(w) <= n} - seen
        seen |= layer
    return seen


@dataclass(frozen=True)
class PureUnitaryGrammar:
    """Single-nonterminal grammar ``X -> 1 | X a1 X a2 ... X ah X`` for each ``a1...ah`` in ``Y``."""

    base: InsertionBase
    productions: tuple[tuple[str, str], ...]

    nonterminal = "X"

    def __str__(self):
        return "\n".join(f"{lhs} -> {serialize_word(rhs)}" for lhs, rhs in self.productions)


def build_grammar(y) -> PureUnitaryGrammar:
    base = _as_base(y)
    x = PureUnitaryGrammar.nonterminal
    productions = [(x, "")]
    for w in sort_words(base.words):
        productions.append((x, x + x.join(w) + x))
    return PureUnitaryGrammar(base, tuple(productions))


def member(y, w: str) -> bool:
    """Decide ``w in Y^{<-*}`` by deleting factor occurrences from ``w``.

    ``w`` is a member iff it is empty or some occurrence of some ``y`` can be
    removed leaving a member.  Results are memoized per call.
    """
    base = _as_base(y)
    base.alphabet.check(w)
    ys = sort_words(base.words)

    @lru_cache(maxsize=None)
    def reducible(s: str) -> bool:
        if not s:
            return True
        for piece in ys:
            start = s.find(piece)
            while start != -1:
                if reducible(s[:start] + s[start + len(piece):]):
                    return True
                start = s.find(piece, start + 1)
        return False

    return reducible(w)


def is_conjugacy_closed(y) -> bool:
    words = _as_base(y).words
    return all(conjugates(w) <= words for w in words)


def conjugacy_closure(words: Iterable[str]) -> frozenset[str]:
    out = set()
    for w in words:
        out |= conjugates(w)
    return frozenset(out)


class FactorAutomaton:
    """Aho-Corasick matcher for a finite set of patterns, completed over an alphabet.

    States are the prefixes of the patterns.  Reading a word from the root
    ends in the longest suffix of that word that is a pattern prefix; a state
    is accepting when some suffix of it is a pattern.
    """

    def __init__(self, alphabet: Alphabet, patterns: Iterable[str]):
        self.alphabet = alphabet
        self.patterns = frozenset(patterns)
        prefixes = {p[:i] for p in self.patterns for i in range(len(p) + 1)}
        self.states = sort_words(prefixes)
        self.index = {s: i for i, s in enumerate(self.states)}
        size = len(self.states)
        self.fail = [0] * size
        self.accepting = [s in self.patterns for s in self.states]
        self.delta: list[dict[str, int]] = [dict() for _ in range(size)]

        root = self.index[""]
        order = deque([root])
        while order:
            state = order.popleft()
            word = self.states[state]
            for a in alphabet:
                child = self.index.get(word + a)
                if child is not None:
                    # a trie edge: the failure of the child is delta(fail(state), a)
                    self.fail[child] = self.delta[self.fail[state]][a] if state != root else root
                    self.accepting[child] = self.accepting[child] or self.accepting[self.fail[child]]
                    self.delta[state][a] = child
                    order.append(child)
                else:
                    self.delta[state][a] = self.delta[self.fail[state]][a] if state != root else root
        self.root = root

    def run(self, word: str) -> int:
        state = self.root
        for a in word:
            state = self.delta[state][a]
        return state

    def avoids(self, word: str) -> bool:
        state = self.root
        if self.accepting[state]:
            return False
        for a in word:
            state = self.delta[state][a]
            if self.accepting[state]:
                return False
        return True


@dataclass(frozen=True)
class UnavoidabilityVerdict:
    """Outcome of the unavoidability test with a checkable witness.

    ``bound_k`` is the least ``k`` such that every word of length ``k``
    contains a factor from ``Y``.  Otherwise ``avoider_prefix`` followed by
    any power of ``avoider_cycle`` avoids ``Y``, and so do the powers alone.
    """

    unavoidable: bool
    bound_k: int | None = None
    avoider_cycle: str | None = None
    avoider_prefix: str | None = None

    def __str__(self):
        if self.unavoidable:
            return f"unavoidable k={self.bound_k}"
        return f"avoidable cycle={self.avoider_cycle}"


def unavoidable(y) -> UnavoidabilityVerdict:
    """Decide whether every long enough word over the base alphabet has a factor in ``Y``.

    Builds the factor automaton, removes the accepting states and looks for a
    cycle reachable from the root.  With no cycle, the longest remaining path
    is the longest avoiding word.
    """
    base = _as_base(y)
    if not base.words:
        return UnavoidabilityVerdict(False, avoider_cycle=base.alphabet.letters[0], avoider_prefix="")
    fa = FactorAutomaton(base.alphabet, base.words)
    letters = base.alphabet.letters

    white, grey, black = 0, 1, 2
    colour = [white] * len(fa.states)
    longest = [0] * len(fa.states)
    # iterative DFS; the stack holds (state, next letter index) and path letters run parallel
    stack = [(fa.root, 0)]
    path_letters: list[str] = []
    path_states = [fa.root]
    colour[fa.root] = grey
    while stack:
        state, i = stack[-1]
        if i == len(letters):
            stack.pop()
            path_states.pop()
            if path_letters:
                path_letters.pop()
            colour[state] = black
            best = 0
            for a in letters:
                t = fa.delta[state][a]
                if not fa.accepting[t]:
                    best = max(best, 1 + longest[t])
            longest[state] = best
            continue
        stack[-1] = (state, i + 1)
        a = letters[i]
        target = fa.delta[state][a]
        if fa.accepting[target]:
            continue
        if colour[target] == grey:
            start = path_states.index(target)
            prefix = "".join(path_letters[:start])
            cycle = "".join(path_letters[start:]) + a
            return UnavoidabilityVerdict(False, avoider_cycle=cycle, avoider_prefix=prefix)
        if colour[target] == white:
            colour[target] = grey
            stack.append((target, 0))
            path_states.append(target)
            path_letters.append(a)
    return UnavoidabilityVerdict(True, bound_k=longest[fa.root] + 1)
