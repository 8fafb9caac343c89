"""A minimal regular-expression dialect and its position automaton.

Grammar (whitespace ignored)::

    union  := concat ('|' concat)*
    concat := star+
    star   := atom '*'?
    atom   := letter | '(' union ')' | '()' | '[]'

``()`` is the empty word and ``[]`` the empty set.  Letters are single
characters from an explicit alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Automaton, make_alphabet
from .errors import LetterNotInAlphabet, RegexParseError

SPECIAL = set("()|*[]")


class Regex:
    """Base class of the AST nodes."""


@dataclass(frozen=True)
class EmptySet(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Literal(Regex):
    letter: str


@dataclass(frozen=True)
class Concat(Regex):
    items: tuple[Regex, ...]


@dataclass(frozen=True)
class Union(Regex):
    items: tuple[Regex, ...]


@dataclass(frozen=True)
class Star(Regex):
    child: Regex


class _Parser:
    def __init__(self, text, alphabet):
        self.tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0
        self.end = len(text)
        self.alphabet = set(alphabet)

    def peek(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def where(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else self.end

    def take(self, expected=None):
        c = self.peek()
        if c is None or (expected is not None and c != expected):
            what = "end of input" if c is None else repr(c)
            raise RegexParseError(f"expected {expected or 'a token'!r}, found {what}",
                                  self.where())
        self.pos += 1
        return c

    def parse(self):
        if not self.tokens:
            raise RegexParseError("empty expression", 0)
        node = self.union()
        if self.peek() is not None:
            raise RegexParseError(f"unexpected {self.peek()!r}", self.where())
        return node

    def union(self):
        items = [self.concat()]
        while self.peek() == "|":
            self.take()
            items.append(self.concat())
        return items[0] if len(items) == 1 else Union(tuple(items))

    def concat(self):
        items = []
        while self.peek() is not None and self.peek() not in ")|*]":
            items.append(self.star())
        if not items:
            what = "end of input" if self.peek() is None else repr(self.peek())
            raise RegexParseError(f"expected an expression, found {what}", self.where())
        return items[0] if len(items) == 1 else Concat(tuple(items))

    def star(self):
        node = self.atom()
        if self.peek() == "*":
            self.take()
            node = Star(node)
        return node

    def atom(self):
        at, c = self.where(), self.take()
        if c == "(":
            if self.peek() == ")":
                self.take()
                return Epsilon()
            node = self.union()
            self.take(")")
            return node
        if c == "[":
            self.take("]")
            return EmptySet()
        if c in SPECIAL:
            raise RegexParseError(f"unexpected {c!r}", at)
        if c not in self.alphabet:
            raise LetterNotInAlphabet(f"letter {c!r} at position {at} is not in the alphabet")
        return Literal(c)


def parse_regex(text: str, alphabet) -> Regex:
    return _Parser(text, make_alphabet(alphabet)).parse()


# Glushkov construction: one state per letter occurrence plus a start state.

def _positions(node, letters):
    """Number the literals; returns (nullable, first, last, follow pairs)."""
    if isinstance(node, EmptySet):
        return False, set(), set(), set()
    if isinstance(node, Epsilon):
        return True, set(), set(), set()
    if isinstance(node, Literal):
        letters.append(node.letter)
        p = len(letters)
        return False, {p}, {p}, set()
    if isinstance(node, Star):
        _, first, last, follow = _positions(node.child, letters)
        return True, first, last, follow | {(p, q) for p in last for q in first}
    if isinstance(node, Union):
        nullable, first, last, follow = False, set(), set(), set()
        for item in node.items:
            n, f, l, fo = _positions(item, letters)
            nullable |= n
            first |= f
            last |= l
            follow |= fo
        return nullable, first, last, follow
    if isinstance(node, Concat):
        nullable, first, last, follow = True, set(), set(), set()
        for item in node.items:
            n, f, l, fo = _positions(item, letters)
            follow |= fo | {(p, q) for p in last for q in f}
            if nullable:
                first |= f
            last = last | l if n else l
            nullable = nullable and n
        return nullable, first, last, follow
    raise TypeError(f"not a regex node: {node!r}")


def regex_to_automaton(node: Regex, alphabet) -> Automaton:
    letters: list[str] = []
    nullable, first, last, follow = _positions(node, letters)
    transitions = {(0, letters[q - 1], q) for q in first}
    transitions |= {(p, letters[q - 1], q) for p, q in follow}
    accepting = set(last) | ({0} if nullable else set())
    return Automaton(tuple(alphabet), len(letters) + 1, {0}, accepting, transitions)


def compile_regex(text: str, alphabet) -> Automaton:
    return regex_to_automaton(parse_regex(text, alphabet), alphabet)
