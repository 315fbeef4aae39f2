"""Circular splicing systems, pure unitary languages and regularity decisions."""

from .errors import (
    AlphabetError,
    AlphabetMismatchError,
    CircspliceError,
    ClassificationError,
    CompletenessError,
    InvalidBoundError,
    ParseError,
    PreconditionError,
    UnsupportedSystemError,
)
from .formats import dump_system, load_base, load_system, parse_base, parse_system
from .morphism import (
    CodingMorphism,
    PrefixCode,
    apply_morphism,
    coding_morphism,
    extract_prefix_code,
    invert_morphism,
    simple_to_complete,
    split_initial,
)
from .regularity import (
    CrosscheckReport,
    RegularityVerdict,
    crosscheck_mr1,
    decide_regular,
    decide_regular_complete,
    decide_regular_simple_one_rule,
    splicing_member,
)
from .splicing import ClosureFragment, Rule, SplicingSystem, apply_rule, classify, closure_bounded, sigma_prime
from .unitary import (
    FactorAutomaton,
    InsertionBase,
    PureUnitaryGrammar,
    UnavoidabilityVerdict,
    build_grammar,
    insert,
    is_conjugacy_closed,
    iterated_insertion_bounded,
    member,
    unavoidable,
)
from .words import Alphabet, CircularWord, canonicalize, circularize, conjugates, full_linearization

__version__ = "0.1.0"
