"""
One-rule simple systems
=======================

With the single rule ``(a, a)`` a word can be cut after each ``a``.  The
pieces form a prefix code; renaming them gives an equivalent complete
system, and regularity carries over.
"""

from circsplice import (
    Rule,
    SplicingSystem,
    apply_morphism,
    closure_bounded,
    decide_regular_simple_one_rule,
    simple_to_complete,
)
from circsplice.formats import dump_system

system = SplicingSystem("abc", ["baca"], [Rule.pair("a", "a")])
print(system.classification)

converted, phi = simple_to_complete(system)
print(phi)
print(dump_system(converted))

# Images of the converted language are the original language.
image = sorted(apply_morphism(phi, w) for w in closure_bounded(converted, 6).words)
print([str(w) for w in image if len(w) <= 12])
print(closure_bounded(system, 12).listing())

# The converted system is the balanced one, so this language is not regular
# either, although the rule set has a single rule.
print(decide_regular_simple_one_rule(system))
