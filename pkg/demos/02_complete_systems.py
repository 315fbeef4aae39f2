"""
Complete splicing systems
=========================

A complete system over ``A`` has every rule ``a#1$b#1``.  Splicing
``~xa`` with ``~yb`` then yields ``~xayb``: concatenation followed by
rotation.  Its language is obtained by iterated insertion from the words
of the initial language, which gives both a fast membership test and a
regularity test.
"""

from circsplice import (
    SplicingSystem,
    closure_bounded,
    crosscheck_mr1,
    decide_regular_complete,
    splicing_member,
)

# I = ~{ab}: every product keeps as many a's as b's.
balanced = SplicingSystem.complete("ab", ["ab"])
print(balanced.classification)
print(closure_bounded(balanced, 6).listing())

# The same language from the insertion side, compared up to length 8.
print(crosscheck_mr1(balanced, 8))

# Membership without enumerating the language.
print(splicing_member(balanced, "aabbab"), splicing_member(balanced, "aab"))

# Powers of a never contain ab or ba, so the language is not regular.
print(decide_regular_complete(balanced))

# Adding aa and bb: every word of length 2 is now a site, so the language
# is all even lengths and it is regular.
even = SplicingSystem.complete("ab", ["ab", "aa", "bb"])
print(closure_bounded(even, 4).listing())
print(decide_regular_complete(even))
