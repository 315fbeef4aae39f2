"""Regularity decisions for complete and one-rule simple systems, and the
splicing-versus-insertion cross-check for complete systems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ClassificationError
from .morphism import CodingMorphism, rule_anchor, simple_to_complete, split_initial
from .splicing import COMPLETE, SplicingSystem, closure_bounded
from .unitary import InsertionBase, UnavoidabilityVerdict, iterated_insertion_bounded, member, unavoidable
from .words import CircularWord, circularize, full_linearization

DIRECT_COMPLETE = "direct-complete"
VIA_MORPHISM = "via-morphism"
FINITE = "finite"


@dataclass(frozen=True)
class RegularityVerdict:
    """Regular iff ``witness.unavoidable``; ``witness`` is ``None`` only for finite languages."""

    regular: bool
    witness: UnavoidabilityVerdict | None
    provenance: str
    leftovers: frozenset[CircularWord] = frozenset()
    morphism: CodingMorphism | None = field(default=None, compare=False)

    def __str__(self):
        if self.witness is None:
            return "regular finite"
        if self.regular:
            return f"regular k={self.witness.bound_k}"
        return f"non-regular avoider={self.witness.avoider_cycle}"


def decide_regular_complete(system: SplicingSystem) -> RegularityVerdict:
    """``L(S)`` is regular iff ``Lin(I)`` is subword unavoidable over ``A``."""
    if system.classification != COMPLETE:
        problems = "; ".join(system.completeness_violations()) or system.classification
        raise ClassificationError(
            f"system is {system.classification}, not complete ({problems}); "
            "one-rule simple systems go through decide_regular_simple_one_rule, "
            "other systems cannot be decided by this tool"
        )
    base = InsertionBase(system.alphabet, frozenset(full_linearization(system.initial)))
    witness = unavoidable(base)
    return RegularityVerdict(witness.unavoidable, witness, DIRECT_COMPLETE)


def decide_regular_simple_one_rule(system: SplicingSystem) -> RegularityVerdict:
    """Decide regularity of a system with the single rule ``(a, a)``.

    Initial words without ``a`` are a finite union and do not change the verdict;
    they are reported in ``leftovers``.
    """
    rule_anchor(system)
    s1, leftovers = split_initial(system)
    if not s1.initial:
        return RegularityVerdict(True, None, FINITE, leftovers)
    converted, phi = simple_to_complete(s1)
    inner = decide_regular_complete(converted)
    return RegularityVerdict(inner.regular, inner.witness, VIA_MORPHISM, leftovers, phi)


def decide_regular(system: SplicingSystem) -> RegularityVerdict:
    """Dispatch to the complete or the one-rule simple procedure."""
    if system.classification == COMPLETE:
        return decide_regular_complete(system)
    return decide_regular_simple_one_rule(system)


@dataclass(frozen=True)
class CrosscheckReport:
    bound: int
    splicing_side: frozenset[CircularWord]
    insertion_side: frozenset[CircularWord]

    @property
    def equal(self) -> bool:
        return self.splicing_side == self.insertion_side

    @property
    def only_splicing(self) -> list[CircularWord]:
        return sorted(self.splicing_side - self.insertion_side)

    @property
    def only_insertion(self) -> list[CircularWord]:
        return sorted(self.insertion_side - self.splicing_side)

    def __str__(self):
        if self.equal:
            return f"OK n={self.bound} size={len(self.splicing_side)}"
        lines = [f"MISMATCH n={self.bound}"]
        lines += [f"- {w}  (splicing only)" for w in self.only_splicing]
        lines += [f"+ {w}  (insertion only)" for w in self.only_insertion]
        return "\n".join(lines)


def crosscheck_mr1(system: SplicingSystem, n: int) -> CrosscheckReport:
    """Compare the bounded splicing closure with iterated insertion from ``Lin(I)``."""
    if system.classification != COMPLETE:
        raise ClassificationError(f"cross-check needs a complete system, got {system.classification}")
    fragment = closure_bounded(system, n)
    base = InsertionBase(system.alphabet, frozenset(full_linearization(system.initial)))
    inserted = iterated_insertion_bounded(base, n) - {""}
    return CrosscheckReport(n, fragment.words, circularize(inserted))


def splicing_member(system: SplicingSystem, w) -> bool:
    """Decide ``~w in L(S)``.

    Complete systems use iterated-insertion membership on ``Lin(I)``; other
    systems use the bounded closure at ``|w|``, which is exact.
    """
    w = w.canonical if isinstance(w, CircularWord) else w
    system.alphabet.check(w)
    if system.classification == COMPLETE:
        if not w:
            return False
        base = InsertionBase(system.alphabet, frozenset(full_linearization(system.initial)))
        return member(base, w)
    return CircularWord(w) in closure_bounded(system, max(len(w), 1)).words
