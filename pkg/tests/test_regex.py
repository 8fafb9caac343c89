from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apwords.errors import LetterNotInAlphabet, RegexParseError
from apwords.regex import (Concat, EmptySet, Epsilon, Literal, Star, Union, compile_regex,
                           parse_regex, regex_to_automaton)

from oracles import all_words, language


def matches(node, word):
    """Direct interpreter over the AST (exponential, fine for short words)."""

    @lru_cache(maxsize=None)
    def m(n, w):
        if isinstance(n, EmptySet):
            return False
        if isinstance(n, Epsilon):
            return w == ""
        if isinstance(n, Literal):
            return w == n.letter
        if isinstance(n, Union):
            return any(m(i, w) for i in n.items)
        if isinstance(n, Concat):
            head, rest = n.items[0], n.items[1:]
            if not rest:
                return m(head, w)
            tail = rest[0] if len(rest) == 1 else Concat(rest)
            return any(m(head, w[:k]) and m(tail, w[k:]) for k in range(len(w) + 1))
        if isinstance(n, Star):
            return w == "" or any(m(n.child, w[:k]) and m(n, w[k:])
                                  for k in range(1, len(w) + 1))
        raise TypeError(n)

    return m(node, word)


def test_parse_examples():
    a, b = Literal("a"), Literal("b")
    assert parse_regex("(ab)*", "ab") == Star(Concat((a, b)))
    assert parse_regex("a*b*", "ab") == Concat((Star(a), Star(b)))
    assert parse_regex(" a | b ", "ab") == Union((a, b))
    assert parse_regex("()", "ab") == Epsilon()
    assert parse_regex("[]", "ab") == EmptySet()


@pytest.mark.parametrize("text, position", [("a**|", 2), ("a|", 2), ("(a", 2), ("", 0),
                                            ("a)", 1), ("|a", 0), ("[a]", 1), ("*", 0)])
def test_parse_errors(text, position):
    with pytest.raises(RegexParseError) as info:
        parse_regex(text, "ab")
    assert info.value.position == position


def test_foreign_letter():
    with pytest.raises(LetterNotInAlphabet):
        parse_regex("ac", "ab")


def test_small_languages():
    assert language(compile_regex("()", "ab"), 3) == {""}
    assert language(compile_regex("[]", "ab"), 3) == set()
    assert language(compile_regex("(a|b)*", "ab"), 6) == set(all_words("ab", 6))
    assert language(compile_regex("[]*", "ab"), 3) == {""}


leaves = st.sampled_from([Literal("a"), Literal("b"), Epsilon(), EmptySet()])
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.builds(Star, kids),
        st.lists(kids, min_size=2, max_size=3).map(lambda xs: Union(tuple(xs))),
        st.lists(kids, min_size=2, max_size=3).map(lambda xs: Concat(tuple(xs))),
    ),
    max_leaves=7,
)


@settings(max_examples=150, deadline=None)
@given(trees)
def test_automaton_matches_interpreter(tree):
    a = regex_to_automaton(tree, "ab")
    assert language(a, 6) == {w for w in all_words("ab", 6) if matches(tree, w)}


def show(node):
    if isinstance(node, EmptySet):
        return "[]"
    if isinstance(node, Epsilon):
        return "()"
    if isinstance(node, Literal):
        return node.letter
    if isinstance(node, Star):
        return f"({show(node.child)})*"
    if isinstance(node, Union):
        return "(" + "|".join(show(i) for i in node.items) + ")"
    return "(" + "".join(show(i) for i in node.items) + ")"


@settings(max_examples=100, deadline=None)
@given(trees)
def test_printed_text_parses_to_same_language(tree):
    again = compile_regex(show(tree), "ab")
    assert language(again, 5) == language(regex_to_automaton(tree, "ab"), 5)
