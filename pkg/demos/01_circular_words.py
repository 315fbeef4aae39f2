"""
Circular words
==============

A circular word is a word read around a circle: ``caba``, ``abac``,
``baca`` and ``acab`` are the same object.  circsplice stores each class
by its least rotation.
"""

from circsplice import CircularWord, canonicalize, circularize, conjugates, full_linearization

# The canonical representative is the least rotation.
print(canonicalize("caba"))
print(sorted(conjugates("baca")))

# Equal classes compare equal whatever representative built them.
print(CircularWord("caba") == CircularWord("acab"))

# A periodic word has fewer distinct rotations than letters.
print(sorted(conjugates("abab")))

# Circularization merges conjugates; full linearization expands them back.
language = circularize(["ab", "ba", "aa", "bb"])
print(sorted(language))
print(sorted(full_linearization(language)))

# The empty word prints as 1.
print(CircularWord(""))
