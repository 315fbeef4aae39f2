import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from circsplice import CircularWord, Rule, SplicingSystem, apply_rule, classify, closure_bounded, sigma_prime
from circsplice.errors import AlphabetMismatchError, CompletenessError, InvalidBoundError
from circsplice.splicing import COMPLETE, CSSH13, CSSH23, GENERAL, SIMPLE13, SIMPLE23, SIMPLE24, symmetrize
from circsplice.words import EMPTY, circularize, full_linearization

import oracles

cw = CircularWord


def complete(alphabet, initial):
    return SplicingSystem.complete(alphabet, initial)


class TestRule:
    def test_parse_and_print(self):
        r = Rule.parse("a#1$b#1")
        assert r == Rule("a", "", "b", "") == Rule.pair("a", "b")
        assert str(r) == "a#1$b#1"
        assert r.sites == ("a", "b")
        assert r.swapped() == Rule("b", "", "a", "")

    @pytest.mark.parametrize("text", ["a#1b#1", "a#1$b", "a##1$b#1", "#1$b#1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Rule.parse(text)

    @pytest.mark.parametrize(
        "rule, shape",
        [(Rule("a", "", "b", ""), "13"), (Rule("a", "", "", "b"), "14"), (Rule("", "a", "b", ""), "23"),
         (Rule("", "a", "", "b"), "24"), (Rule("ab", "", "b", ""), None), (Rule("", "", "a", ""), None)],
    )
    def test_shape(self, rule, shape):
        assert rule.shape() == shape


class TestApplyRule:
    def test_paun_product_of_ba_and_ca(self):
        assert apply_rule(Rule.pair("a", "a"), cw("ba"), cw("ca")) == {cw("baca")}
        assert cw("baca") == cw("caba")

    def test_mixed_letters(self):
        # only "ba" ends in a and only "ab" ends in b: one product, ~baab = ~aabb
        assert apply_rule(Rule.pair("a", "b"), cw("ab"), cw("ab")) == {cw("aabb")}

    def test_no_site(self):
        assert apply_rule(Rule.pair("a", "a"), cw("b"), cw("b")) == frozenset()

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            apply_rule(Rule.pair("a", "c"), cw("ab"), cw("ab"), alphabet=SplicingSystem("ab", [], []).alphabet)

    def test_site_longer_than_word_never_matches(self):
        assert apply_rule(Rule("ab", "a", "a", ""), cw("ab"), cw("a")) == frozenset()

    @settings(max_examples=150, suppress_health_check=[HealthCheck.too_slow])
    @given(
        st.tuples(*[st.text("ab", max_size=2)] * 4),
        st.text("ab", max_size=5),
        st.text("ab", max_size=5),
    )
    def test_matches_definition(self, rule, w1, w2):
        expected = {cw(w) for w in oracles.splice(rule, w1, w2, "ab")}
        assert apply_rule(Rule(*rule), cw(w1), cw(w2)) == expected


class TestSigmaPrime:
    def test_complete_on_ab(self):
        assert sigma_prime({cw("ab")}, complete("ab", ["ab"])) == {cw("abab"), cw("aabb")}

    def test_empty_language(self):
        assert sigma_prime(set(), complete("ab", ["ab"])) == frozenset()

    def test_absent_site(self):
        s = SplicingSystem("ab", ["b"], [Rule.pair("a", "a")])
        assert sigma_prime({cw("b")}, s) == frozenset()


class TestClosure:
    def test_balanced_example(self):
        frag = closure_bounded(complete("ab", ["ab"]), 4)
        assert frag.words == {cw("ab"), cw("abab"), cw("aabb")}
        assert frag.listing() == ["ab", "aabb", "abab"]

    def test_even_length_example(self):
        frag = closure_bounded(complete("ab", ["ab", "aa", "bb"]), 4)
        even = oracles.classes(w for w in oracles.words_up_to("ab", 4, 1) if len(w) % 2 == 0)
        assert {w.canonical for w in frag.words} == even
        assert len(even) == 9

    def test_nothing_short_enough(self):
        assert closure_bounded(complete("ab", ["ab"]), 1).words == frozenset()

    @pytest.mark.parametrize("n", [0, -3, 2.5, True])
    def test_bad_bound(self, n):
        with pytest.raises(InvalidBoundError):
            closure_bounded(complete("ab", ["ab"]), n)

    def test_fragment_container_protocol(self):
        frag = closure_bounded(complete("ab", ["ab"]), 4)
        assert "baab" in frag and len(frag) == 3
        assert list(frag) == sorted(frag.words)


rule_parts = st.sampled_from(["", "a", "b", "ab"])
general_rules = st.tuples(rule_parts, rule_parts, rule_parts, rule_parts)


@st.composite
def small_systems(draw):
    initial = draw(st.lists(st.text("ab", max_size=3), min_size=0, max_size=3))
    rules = draw(st.lists(general_rules, min_size=0, max_size=3))
    return initial, rules


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_systems(), st.integers(1, 6))
def test_closure_matches_sigma_iteration(data, n):
    initial, rules = data
    system = SplicingSystem("ab", initial, [Rule(*r) for r in rules])
    got = {w.canonical for w in closure_bounded(system, n).words}
    assert got == oracles.closure("ab", initial, rules, n)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_systems(), st.integers(1, 6))
def test_symmetrization_preserves_language(data, n):
    initial, rules = data
    system = SplicingSystem("ab", initial, [Rule(*r) for r in rules])
    unsym = oracles.closure("ab", initial, rules, n, symmetrize=False)
    assert {w.canonical for w in closure_bounded(system, n).words} == unsym


@settings(max_examples=40, deadline=None)
@given(small_systems(), st.integers(1, 6))
def test_closure_invariants(data, n):
    initial, rules = data
    system = SplicingSystem("ab", initial, [Rule(*r) for r in rules])
    small = closure_bounded(system, n).words
    big = closure_bounded(system, n + 1).words
    assert small <= big
    assert all(len(w) <= n for w in small)
    assert {w for w in system.initial if len(w) <= n} <= small
    assert (EMPTY in small) == (EMPTY in system.initial)
    lin = full_linearization(small)
    assert all(w[i:] + w[:i] in lin for w in lin for i in range(len(w)))
    # closed under one more splicing step inside the bound
    assert {w for w in sigma_prime(small, system) if len(w) <= n} <= small


@pytest.mark.parametrize("initial", [["ab"], ["ab", "aa", "bb"], ["aab"], ["a", "bb"], ["abb", "ba"]])
def test_complete_closure_closed_under_concatenation(initial):
    n = 8
    frag = closure_bounded(complete("ab", initial), n).words
    lin = full_linearization(frag)
    for u in lin:
        for v in lin:
            if len(u) + len(v) <= n:
                assert cw(u + v) in frag


def test_symmetrize():
    r = Rule.pair("a", "b")
    assert symmetrize([r]) == {r, r.swapped()}


class TestSystem:
    def test_complete_builds_a_times_a(self):
        s = complete("ab", ["ab"])
        assert s.rules == {Rule.pair(x, y) for x in "ab" for y in "ab"}
        assert s.is_complete

    @pytest.mark.parametrize(
        "initial, clause",
        [(["ab", ""], "1 not in I"), (["aa"], "alph(I) = A")],
    )
    def test_complete_validation_names_clause(self, initial, clause):
        with pytest.raises(CompletenessError, match=clause.replace("(", r"\(").replace(")", r"\)")):
            complete("ab", initial)

    def test_rejects_foreign_letters(self):
        with pytest.raises(AlphabetMismatchError):
            SplicingSystem("ab", ["abc"], [])
        with pytest.raises(AlphabetMismatchError):
            SplicingSystem("ab", ["ab"], [Rule.pair("a", "c")])

    def test_equality(self):
        assert complete("ab", ["ab"]) == SplicingSystem("ab", ["ba"], [Rule.pair(x, y) for x in "ab" for y in "ab"])


class TestClassify:
    def test_example_complete(self):
        s = SplicingSystem("ab", ["ab"], [Rule.pair("a", "a"), Rule.pair("b", "b"), Rule.pair("a", "b")])
        assert classify(s) == COMPLETE

    def test_example_simple13(self):
        assert classify(SplicingSystem("abc", ["baca"], [Rule.pair("a", "a")])) == SIMPLE13

    def test_example_24(self):
        assert classify(SplicingSystem("a", ["a"], [Rule("", "a", "", "a")])) == SIMPLE24

    def test_cssh13_not_complete(self):
        # R = A x A but a letter is missing from I
        assert classify(SplicingSystem("ab", ["aa"], [Rule.pair(x, y) for x in "ab" for y in "ab"])) == CSSH13
        assert classify(SplicingSystem("ab", ["ab"], [Rule.pair("a", "b")])) == CSSH13

    def test_23_family(self):
        assert classify(SplicingSystem("ab", ["ab"], [Rule("", "a", "b", "")])) == CSSH23
        assert classify(SplicingSystem("ab", ["ab"], [Rule("", "a", "a", "")])) == SIMPLE23

    def test_general(self):
        assert classify(SplicingSystem("ab", ["ab"], [])) == GENERAL
        assert classify(SplicingSystem("ab", ["ab"], [Rule("ab", "", "a", "")])) == GENERAL
        assert classify(SplicingSystem("ab", ["ab"], [Rule.pair("a", "a"), Rule("", "a", "", "b")])) == GENERAL

    def test_empty_word_blocks_complete(self):
        s = SplicingSystem("ab", ["ab", ""], [Rule.pair(x, y) for x in "ab" for y in "ab"])
        assert classify(s) == CSSH13
        assert s.completeness_violations() == ["1 not in I: the empty circular word is in the initial language"]
