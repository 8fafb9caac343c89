"""Decision procedures for almost periodicity and factor languages of regular sets.

For a regular language ``L`` the central test is: if ``L`` is closed and
infinite, take any nonempty ``w`` all of whose powers are factors of ``L``
(a pumping word, read off a cycle of the automaton).  ``L`` is almost
periodic exactly when ``L == Sub(w*)``, and that identity does not depend on
which pumping word is chosen.

Confluence (any two members share a common superword in ``L``) is decided
exactly for a given pair by an emptiness test, and checked for all pairs of
factors up to a length bound.  The universal question is not settled here,
so those answers carry ``Status.BOUNDED``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import (Automaton, check_word, determinize_minimize, distinguishing_word,
                       enumerate_shortlex, intersect, is_empty, is_finite, shortest_word,
                       trim)
from .errors import FiniteLanguage
from .factors import (build_factor_automaton, build_periodic_factor_automaton, is_closed,
                      superword_automaton)
from .verdict import Decision, Status, no, yes
from .words import primitive_root

DEFAULT_CONFLUENCE_BOUND = 6


@dataclass(frozen=True)
class PumpingWitness:
    word: str
    cycle_states: tuple[int, ...]
    entry_path_len: int


def _shortest_cycle(t: Automaton, start: int):
    """Shortlex-least nonempty label of a cycle through ``start``, with its states."""
    parent: dict[int, tuple[int, str]] = {}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for c in t.alphabet:
            for v in t.successors(u, c):
                if v == start:
                    letters, states = [c], [u]
                    while u != start:
                        u, letter = parent[u]
                        letters.append(letter)
                        states.append(u)
                    return "".join(reversed(letters)), tuple(reversed(states))
                if v not in parent and v != start:
                    parent[v] = (u, c)
                    queue.append(v)
    return None


def _distances_from_initial(t: Automaton) -> dict[int, int]:
    dist = {s: 0 for s in t.initial}
    queue = deque(sorted(t.initial))
    while queue:
        u = queue.popleft()
        for c in t.alphabet:
            for v in t.successors(u, c):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
    return dist


def extract_pumping_word(a: Automaton) -> PumpingWitness:
    """Label of a shortest cycle in the trimmed minimal DFA of ``a``.

    Ties go to the shortlex-least label, then to the smaller state number.
    Every power of the returned word is a factor of the language.
    """
    t = trim(determinize_minimize(a))
    if is_finite(t):
        raise FiniteLanguage("a finite language has no pumping word")
    best = None
    for s in range(t.states):
        found = _shortest_cycle(t, s)
        if found is None:
            continue
        key = (len(found[0]), found[0], s)
        if best is None or key < best[0]:
            best = (key, found)
    (_, _, s), (label, states) = best
    return PumpingWitness(label, states, _distances_from_initial(t)[s])


def _is_degenerate(a: Automaton) -> bool:
    # Only valid for closed languages: a closed language with no letter is {} or {λ}.
    return enumerate_shortlex(a, 1) in ([], [""])


def almost_periodic_with_pumping_word(a: Automaton, w: str) -> Decision:
    """Compare a closed infinite ``L`` with ``Sub(w*)`` for a given pumping word ``w``."""
    root = primitive_root(w).root
    periodic = build_periodic_factor_automaton(root, a.alphabet)
    diff = distinguishing_word(a, periodic)
    if diff is None:
        return yes(witness=root,
                   notes=(f"language equals the factors of ({root})^n",))
    if a.accepts(diff):
        reason = (f"{diff!r} is a member, yet arbitrarily long members avoid it "
                  f"(they are factors of powers of {root!r})")
    else:
        reason = f"{diff!r} is a factor of powers of {root!r} but not a member"
    return no(counterexample=diff, notes=("not redundant", reason))


def is_almost_periodic(a: Automaton) -> Decision:
    """Is ``L`` closed under factors and redundant?

    Finite closed languages count as almost periodic (redundancy holds
    vacuously); the verdict notes say so.
    """
    closed = is_closed(a)
    if not closed:
        return no(counterexample=closed.counterexample,
                  notes=("not closed under factors",) + closed.notes)
    if is_finite(a):
        notes = ("finite closed language, redundancy vacuous",)
        if _is_degenerate(a):
            notes += ("degenerate: empty language or only the empty word",)
        return yes(notes=notes)
    return almost_periodic_with_pumping_word(a, extract_pumping_word(a).word)


def is_factor_language_of_almost_periodic_word(a: Automaton) -> Decision:
    """Is ``L = Sub(alpha)`` for some almost periodic infinite word ``alpha``?"""
    if is_finite(a):
        return no(notes=("finite language: the factor set of an infinite word is infinite",))
    ap = is_almost_periodic(a)
    if not ap:
        return ap
    root = ap.witness
    return yes(witness=root, notes=ap.notes + (
        f"one-sided word: alpha = ({root})^omega",
        f"two-sided word: alpha = ...{root}{root}.{root}{root}...",
    ))


def _pair_decision(a: Automaton, x: str, y: str, sw_x: Automaton, sw_y: Automaton) -> Decision:
    z = shortest_word(intersect(intersect(a, sw_x), sw_y))
    if z is None:
        return no(counterexample=(x, y),
                  notes=(f"no member contains both {x!r} and {y!r}",))
    return yes(witness=z)


def pair_has_common_superword(a: Automaton, x: str, y: str) -> Decision:
    """Exact test for a member of ``L`` containing both ``x`` and ``y``.

    On YES the witness is the shortlex-least such member.
    """
    check_word(x, a.alphabet)
    check_word(y, a.alphabet)
    return _pair_decision(a, x, y, superword_automaton(x, a.alphabet),
                          superword_automaton(y, a.alphabet))


def bounded_confluence(a: Automaton, k: int = DEFAULT_CONFLUENCE_BOUND) -> Decision:
    """Check common superwords for every pair of factors of ``L`` up to length ``k``.

    A failing pair refutes confluence outright (EXACT).  If every pair
    passes the answer is YES but only BOUNDED by ``k``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if is_empty(a):
        return yes(status=Status.BOUNDED, bound=k,
                   notes=("empty language: confluent vacuously",))
    base = trim(determinize_minimize(a))
    subs = enumerate_shortlex(build_factor_automaton(a), k)
    automata = {x: superword_automaton(x, a.alphabet) for x in subs}
    checked = 0
    for i, x in enumerate(subs):
        for y in subs[i + 1:]:
            # a factor of L containing both already has a superword in L
            if x in y or y in x:
                continue
            checked += 1
            pair = _pair_decision(base, x, y, automata[x], automata[y])
            if not pair:
                return no(counterexample=(x, y),
                          notes=("not confluent",) + pair.notes)
    return yes(status=Status.BOUNDED, bound=k,
               notes=(f"every pair of the {len(subs)} factors of length <= {k} has a "
                      f"common superword ({checked} pairs tested by emptiness)",))


def is_biinfinite_factor_language(a: Automaton, k: int = DEFAULT_CONFLUENCE_BOUND) -> Decision:
    """Is ``L = Sub(alpha)`` for some two-sided infinite word ``alpha``?

    That holds iff ``L`` is infinite, closed and confluent.  The first two
    are decided exactly; confluence only up to factor length ``k``.
    """
    if is_finite(a):
        return no(notes=("finite language",))
    closed = is_closed(a)
    if not closed:
        return no(counterexample=closed.counterexample,
                  notes=("not closed under factors",) + closed.notes)
    confluence = bounded_confluence(a, k)
    if not confluence:
        return confluence
    return yes(status=Status.BOUNDED, bound=k,
               notes=("infinite and closed (exact)",) + confluence.notes)
