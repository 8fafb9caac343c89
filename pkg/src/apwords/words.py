"""Combinatorics on finite words: borders, periods, primitive roots."""

from __future__ import annotations

from typing import NamedTuple

from .errors import EmptyWord


class RootDecomposition(NamedTuple):
    root: str
    exponent: int


def border_table(w: str) -> list[int]:
    """``table[i]`` is the length of the longest proper border of ``w[:i+1]``."""
    table = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = table[k - 1]
        if w[i] == w[k]:
            k += 1
        table[i] = k
    return table


def smallest_period(w: str) -> int:
    if not w:
        raise EmptyWord("the empty word has no period")
    return len(w) - border_table(w)[-1]


def primitive_root(w: str) -> RootDecomposition:
    """Write ``w`` as ``root ** exponent`` with ``root`` primitive.

    >>> primitive_root("ababab")
    RootDecomposition(root='ab', exponent=3)
    """
    if not w:
        raise EmptyWord("the empty word has no primitive root")
    p = smallest_period(w)
    if len(w) % p == 0:
        return RootDecomposition(w[:p], len(w) // p)
    return RootDecomposition(w, 1)


def is_primitive(w: str) -> bool:
    return primitive_root(w).exponent == 1


def commute(u: str, v: str) -> bool:
    return u + v == v + u


def is_factor(x: str, y: str) -> bool:
    return x in y


def prefixes(w: str) -> list[str]:
    """All prefixes of ``w`` from the empty word up to ``w`` itself."""
    return [w[:i] for i in range(len(w) + 1)]


def suffixes(w: str) -> list[str]:
    """All suffixes of ``w`` from the empty word up to ``w`` itself."""
    return [w[len(w) - i:] for i in range(len(w) + 1)]


def factors(w: str, length: int | None = None) -> set[str]:
    if length is not None:
        return {w[i:i + length] for i in range(len(w) - length + 1)}
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}
