import pytest

from apwords.automata import (are_equivalent, empty_automaton, universal_automaton,
                              word_set_automaton)
from apwords.errors import EmptyPeriod, LetterNotInAlphabet
from apwords.factors import (build_factor_automaton, build_periodic_factor_automaton,
                             is_closed, is_factor_of_language, superword_automaton)
from apwords.regex import compile_regex

from oracles import all_words, brute_factors, language, nfa_accepts, random_automata


def rx(text, alphabet="ab"):
    return compile_regex(text, alphabet)


def alternating(max_len):
    """Factors of the powers of ab, cut to max_len."""
    return {w for w in brute_factors(["ab" * (max_len // 2 + 1)]) if len(w) <= max_len}


def test_factor_automaton_of_single_word():
    sub = build_factor_automaton(word_set_automaton(["ab"], "ab"))
    assert language(sub, 4) == {"", "a", "b", "ab"}


def test_factor_automaton_of_abstar():
    sub = build_factor_automaton(rx("(ab)*"))
    assert language(sub, 8) == alternating(8)


def test_factor_automaton_of_empty():
    assert build_factor_automaton(empty_automaton("ab")).states == 0


def test_factor_automaton_matches_brute_force_random():
    for a in random_automata(80, seed=20):
        members = language(a, 7)
        sub = build_factor_automaton(a)
        assert brute_factors(members) <= language(sub, 7)


def test_factor_membership_cross_oracle():
    for a in random_automata(60, seed=21):
        sub = build_factor_automaton(a)
        for x in all_words("ab", 5):
            assert nfa_accepts(sub, x) == is_factor_of_language(x, a)


def test_sub_is_idempotent_and_closed():
    for a in random_automata(100, seed=22):
        sub = build_factor_automaton(a)
        assert are_equivalent(build_factor_automaton(sub), sub)
        assert is_closed(sub)


def test_language_contained_in_factors():
    for a in random_automata(100, seed=23):
        sub = build_factor_automaton(a)
        assert all(nfa_accepts(sub, w) for w in language(a, 6))


def test_is_closed_examples():
    assert is_closed(rx("a*b*"))
    d = is_closed(word_set_automaton(["ab"], "ab"))
    assert not d and d.counterexample == ""
    assert is_closed(rx("(a|b)*"))


def test_is_closed_astar_bstar_brute_force():
    members = language(rx("a*b*"), 6)
    assert brute_factors(members) == members


def test_is_closed_counterexample_is_shortlex_least():
    for a in random_automata(80, seed=24):
        d = is_closed(a)
        members = language(a, 9)
        missing = sorted((w for w in brute_factors(members) if w not in members),
                         key=lambda w: (len(w), w))
        if missing and len(missing[0]) <= 4:
            assert not d
            assert d.counterexample == missing[0]
        if d:
            assert not missing


def test_superword_automaton_examples():
    assert language(superword_automaton("", "ab"), 4) == set(all_words("ab", 4))
    sw = superword_automaton("ab", "ab")
    assert language(sw, 6) == {w for w in all_words("ab", 6) if "ab" in w}
    assert not sw.accepts("ba") and not sw.accepts("bbaa")
    sw = superword_automaton("aa", "ab")
    assert sw.accepts("baab") and not sw.accepts("abab")
    assert language(sw, 6) == {w for w in all_words("ab", 6) if "aa" in w}


def test_superword_automaton_all_patterns():
    for x in all_words("ab", 4):
        sw = superword_automaton(x, "ab")
        assert language(sw, 7) == {w for w in all_words("ab", 7) if x in w}


def test_superword_monotone():
    words = list(all_words("ab", 3))
    for x in words:
        for y in words:
            if x in y:
                assert language(superword_automaton(y, "ab"), 6) <= \
                    language(superword_automaton(x, "ab"), 6)


def test_superword_rejects_foreign_letter():
    with pytest.raises(LetterNotInAlphabet):
        superword_automaton("c", "ab")
    with pytest.raises(LetterNotInAlphabet):
        is_factor_of_language("c", rx("a"))


def test_is_factor_of_language_examples():
    assert is_factor_of_language("ba", rx("(ab)*"))
    assert not is_factor_of_language("aa", rx("(ab)*"))


def test_periodic_factor_automaton_examples():
    assert are_equivalent(build_periodic_factor_automaton("a", "ab"), rx("a*"))
    assert language(build_periodic_factor_automaton("ab"), 8) == alternating(8)
    assert are_equivalent(build_periodic_factor_automaton("aa", "ab"),
                          build_periodic_factor_automaton("a", "ab"))
    with pytest.raises(EmptyPeriod):
        build_periodic_factor_automaton("")


def test_periodic_factor_automaton_properties():
    for w in all_words("ab", 5, min_len=1):
        p = build_periodic_factor_automaton(w, "ab")
        assert is_closed(p)
        assert all(p.accepts(w * n) for n in range(1, 6))
        expected = {f for f in brute_factors([w * 8]) if len(f) <= 6}
        assert language(p, 6) == expected


def test_universal_is_closed():
    assert is_closed(universal_automaton("abc"))
