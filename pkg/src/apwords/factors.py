"""The factor order on words lifted to regular languages.

``Sub(L)`` is the set of factors (contiguous subwords) of members of ``L``.
"""

from __future__ import annotations

from .automata import (Automaton, check_word, complement, intersect, is_empty,
                       make_alphabet, shortest_word, trim)
from .errors import EmptyPeriod
from .verdict import Decision, no, yes
from .words import border_table, primitive_root


def build_factor_automaton(a: Automaton) -> Automaton:
    """Acceptor for Sub(L): trim, then make every state initial and accepting."""
    t = trim(a)
    everything = range(t.states)
    return Automaton(t.alphabet, t.states, everything, everything, t.transitions)


def is_closed(a: Automaton) -> Decision:
    """Is ``L`` closed under taking factors?

    A NO carries the shortlex-least factor of ``L`` that ``L`` misses.
    """
    missing = shortest_word(intersect(build_factor_automaton(a), complement(a)))
    if missing is None:
        return yes()
    return no(counterexample=missing,
              notes=(f"{missing!r} is a factor of the language but not a member",))


def superword_automaton(x: str, alphabet) -> Automaton:
    """Deterministic acceptor of all words having ``x`` as a factor.

    State ``i`` means the longest suffix read so far that is a prefix of
    ``x`` has length ``i``; state ``len(x)`` is absorbing.
    """
    alphabet = make_alphabet(alphabet)
    check_word(x, alphabet)
    m = len(x)
    border = border_table(x)
    transitions = set()
    for i in range(m):
        for c in alphabet:
            k = i
            while k and x[k] != c:
                k = border[k - 1]
            transitions.add((i, c, k + 1 if x[k] == c else 0))
    for c in alphabet:
        transitions.add((m, c, m))
    return Automaton(alphabet, m + 1, {0}, {m}, transitions)


def is_factor_of_language(x: str, a: Automaton) -> bool:
    return not is_empty(intersect(a, superword_automaton(x, a.alphabet)))


def build_periodic_factor_automaton(w: str, alphabet=None) -> Automaton:
    """Acceptor for Sub({w^n : n >= 1}) as a cycle on the primitive root of ``w``.

    ``alphabet`` defaults to the letters of ``w``; pass the ambient alphabet
    when the result is compared with another automaton.
    """
    if not w:
        raise EmptyPeriod("a periodic factor language needs a nonempty period")
    alphabet = make_alphabet(set(w) if alphabet is None else alphabet)
    check_word(w, alphabet)
    root = primitive_root(w).root
    p = len(root)
    everything = range(p)
    return Automaton(alphabet, p, everything, everything,
                     {(i, root[i], (i + 1) % p) for i in range(p)})
