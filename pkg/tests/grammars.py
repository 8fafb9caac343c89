"""Contextual grammar fixtures shared by the unit and acceptance suites."""

from apwords.automata import universal_automaton, word_set_automaton
from apwords.contextual import ContextualGrammar, Mode
from apwords.regex import compile_regex

EXT, INT = Mode.EXTERNAL, Mode.INTERNAL


def unary_astar():
    return ContextualGrammar("a", [""], [("a", "")], EXT)


def dyck():
    return ContextualGrammar("ab", ["ab"], [("a", "b")], INT)


FIXTURES = {
    "unary a* (external)": unary_astar(),
    "unary a* (internal)": ContextualGrammar("a", [""], [("a", "")], INT),
    "unary even a's": ContextualGrammar("a", [""], [("aa", "")], EXT),
    "a* inside a binary alphabet": ContextualGrammar("ab", ["", "a"], [("a", "")], INT),
    "dyck words": dyck(),
    "ab-wrapped letters": ContextualGrammar("ab", ["a", "b"], [("ab", "ab")], INT),
    "(ab)* external": ContextualGrammar("ab", [""], [("ab", "")], EXT),
    "all words": ContextualGrammar("ab", ["", "a", "b"], [("a", ""), ("b", "")], INT),
    "a^n b^n": ContextualGrammar("ab", [""], [("a", "b")], EXT),
    "b^n a b^n": ContextualGrammar("ab", ["a"], [("b", "b")], EXT),
    "ab/ba internal": ContextualGrammar("ab", [""], [("ab", "ba")], INT),
    "selector: b only before a*": ContextualGrammar(
        "ab", [""], [("a", ""), ("b", "")], EXT,
        selector={1: compile_regex("a*", "ab")}),
    "selector: ab around the empty factor": ContextualGrammar(
        "ab", ["", "a", "b"], [("a", "b")], INT,
        selector={0: word_set_automaton([""], "ab")}),
    "selector: unrestricted": ContextualGrammar(
        "ab", ["a"], [("b", "a")], INT, selector={0: universal_automaton("ab")}),
}
