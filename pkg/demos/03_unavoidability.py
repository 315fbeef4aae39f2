"""
Unavoidable sets of words
=========================

A finite set ``Y`` is unavoidable when every long enough word has a
factor in ``Y``.  The verdict carries a witness: the least such length,
or a cycle whose powers avoid ``Y``.
"""

from itertools import product

from circsplice import InsertionBase, iterated_insertion_bounded, member, unavoidable

for words in (["a", "b"], ["ab", "ba"], ["ab", "ba", "aa", "bb"], ["aa", "bb", "aba"]):
    print(words, unavoidable(InsertionBase.of(words, "ab")))

# Check the k=4 verdict for {aa, bb, aba} by hand.
ys = ["aa", "bb", "aba"]
avoiding = ["".join(p) for n in range(5) for p in product("ab", repeat=n) if not any(y in "".join(p) for y in ys)]
print(avoiding)

# Iterated insertion of ab and ba gives the balanced words.
y = InsertionBase.of(["ab", "ba"])
print(sorted(iterated_insertion_bounded(y, 4), key=lambda w: (len(w), w)))
print(member(y, "abbaab"), member(y, "abbaa"))
