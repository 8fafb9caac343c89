"""Finite automata over single-character alphabets.

An :class:`Automaton` is a nondeterministic automaton without epsilon moves.
States are dense integers ``0 .. states-1``.  Every automaton is immutable and
every function here returns a new object.

Alphabets are stored sorted, so shortlex order (length first, then letter
order) is the same everywhere in the package.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import AlphabetMismatch, LetterNotInAlphabet


def make_alphabet(letters: Iterable[str]) -> tuple[str, ...]:
    letters = list(letters)
    for c in letters:
        if not isinstance(c, str) or len(c) != 1:
            raise ValueError(f"alphabet letters must be single characters, got {c!r}")
    if len(set(letters)) != len(letters):
        raise ValueError(f"duplicate letters in alphabet {letters!r}")
    return tuple(sorted(letters))


def check_word(word: str, alphabet: Iterable[str]) -> str:
    allowed = set(alphabet)
    for i, c in enumerate(word):
        if c not in allowed:
            raise LetterNotInAlphabet(
                f"letter {c!r} at position {i} of {word!r} is not in alphabet "
                f"{''.join(sorted(allowed))!r}")
    return word


def shortlex_key(word: str):
    return (len(word), word)


@dataclass(frozen=True)
class Automaton:
    alphabet: tuple[str, ...]
    states: int
    initial: frozenset[int] = frozenset()
    accepting: frozenset[int] = frozenset()
    transitions: frozenset[tuple[int, str, int]] = field(default=frozenset())

    def __post_init__(self):
        alphabet = make_alphabet(self.alphabet)
        initial = frozenset(self.initial)
        accepting = frozenset(self.accepting)
        transitions = frozenset((int(p), c, int(q)) for p, c, q in self.transitions)
        if self.states < 0:
            raise ValueError("state count must be nonnegative")
        for s in initial | accepting:
            if not 0 <= s < self.states:
                raise ValueError(f"state {s} out of range for {self.states} states")
        letters = set(alphabet)
        for p, c, q in transitions:
            if not (0 <= p < self.states and 0 <= q < self.states):
                raise ValueError(f"transition {(p, c, q)} uses a state out of range")
            if c not in letters:
                raise LetterNotInAlphabet(f"transition letter {c!r} not in alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "accepting", accepting)
        object.__setattr__(self, "transitions", transitions)

    @cached_property
    def _delta(self) -> dict[tuple[int, str], tuple[int, ...]]:
        table: dict[tuple[int, str], list[int]] = {}
        for p, c, q in self.transitions:
            table.setdefault((p, c), []).append(q)
        return {k: tuple(sorted(v)) for k, v in table.items()}

    def successors(self, state: int, letter: str) -> tuple[int, ...]:
        return self._delta.get((state, letter), ())

    def step(self, states: Iterable[int], letter: str) -> frozenset[int]:
        delta = self._delta
        out: set[int] = set()
        for s in states:
            out.update(delta.get((s, letter), ()))
        return frozenset(out)

    def accepts(self, word: str) -> bool:
        check_word(word, self.alphabet)
        current = self.initial
        for c in word:
            current = self.step(current, c)
            if not current:
                return False
        return bool(current & self.accepting)

    def __repr__(self):
        return (f"Automaton(alphabet={''.join(self.alphabet)!r}, states={self.states}, "
                f"initial={sorted(self.initial)}, accepting={sorted(self.accepting)}, "
                f"transitions={len(self.transitions)})")

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.states,
            "initial": sorted(self.initial),
            "accepting": sorted(self.accepting),
            "transitions": [list(t) for t in sorted(self.transitions)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Automaton":
        try:
            return cls(
                alphabet=tuple(data["alphabet"]),
                states=int(data["states"]),
                initial=frozenset(data["initial"]),
                accepting=frozenset(data["accepting"]),
                transitions=frozenset(tuple(t) for t in data["transitions"]),
            )
        except KeyError as exc:
            raise ValueError(f"automaton file is missing field {exc.args[0]!r}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Automaton":
        return cls.from_dict(json.loads(text))


# -- small constructors ------------------------------------------------

def empty_automaton(alphabet) -> Automaton:
    """The canonical automaton for the empty language (no states)."""
    return Automaton(tuple(alphabet), 0)


def universal_automaton(alphabet) -> Automaton:
    alphabet = make_alphabet(alphabet)
    return Automaton(alphabet, 1, {0}, {0}, {(0, c, 0) for c in alphabet})


def word_set_automaton(words: Iterable[str], alphabet) -> Automaton:
    """Trie acceptor for a finite set of words."""
    alphabet = make_alphabet(alphabet)
    nodes = {"": 0}
    transitions = set()
    accepting = set()
    for w in sorted(set(words), key=shortlex_key):
        check_word(w, alphabet)
        for i in range(len(w)):
            head, nxt = w[:i], w[:i + 1]
            if nxt not in nodes:
                nodes[nxt] = len(nodes)
            transitions.add((nodes[head], w[i], nodes[nxt]))
        accepting.add(nodes[w])
    return Automaton(alphabet, len(nodes), {0}, accepting, transitions)


def _require_same_alphabet(a: Automaton, b: Automaton):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {''.join(a.alphabet)!r} vs {''.join(b.alphabet)!r}")


# -- reachability and trimming -----------------------------------------

def _forward_closure(a: Automaton, starts: Iterable[int]) -> set[int]:
    seen = set(starts)
    stack = list(seen)
    while stack:
        s = stack.pop()
        for c in a.alphabet:
            for t in a.successors(s, c):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return seen


def _backward_closure(a: Automaton, targets: Iterable[int]) -> set[int]:
    preds: dict[int, set[int]] = {}
    for p, _, q in a.transitions:
        preds.setdefault(q, set()).add(p)
    seen = set(targets)
    stack = list(seen)
    while stack:
        s = stack.pop()
        for p in preds.get(s, ()):
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def useful_states(a: Automaton) -> frozenset[int]:
    """States lying on some initial-to-accepting path."""
    return frozenset(_forward_closure(a, a.initial) & _backward_closure(a, a.accepting))


def _restrict(a: Automaton, keep: Iterable[int]) -> Automaton:
    order = sorted(keep)
    index = {s: i for i, s in enumerate(order)}
    return Automaton(
        a.alphabet,
        len(order),
        {index[s] for s in a.initial if s in index},
        {index[s] for s in a.accepting if s in index},
        {(index[p], c, index[q]) for p, c, q in a.transitions if p in index and q in index},
    )


def trim(a: Automaton) -> Automaton:
    """Drop every state that is unreachable or cannot reach acceptance.

    Surviving states keep their relative order.  The empty language comes
    back as the zero-state automaton.
    """
    return _restrict(a, useful_states(a))


# -- determinization and minimization ----------------------------------

def determinize(a: Automaton) -> Automaton:
    """Complete subset construction; the empty subset becomes the sink."""
    start = frozenset(a.initial)
    index = {start: 0}
    order = [start]
    transitions = set()
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for c in a.alphabet:
            target = a.step(subset, c)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            transitions.add((index[subset], c, index[target]))
    accepting = {i for i, subset in enumerate(order) if subset & a.accepting}
    return Automaton(a.alphabet, len(order), {0}, accepting, transitions)


def _dfa_table(d: Automaton) -> list[dict[str, int]]:
    table: list[dict[str, int]] = [dict() for _ in range(d.states)]
    for p, c, q in d.transitions:
        table[p][c] = q
    return table


def _canonical_renumber(alphabet, table, start, accepting) -> Automaton:
    index = {start: 0}
    queue = deque([start])
    transitions = set()
    while queue:
        s = queue.popleft()
        for c in alphabet:
            t = table[s][c]
            if t not in index:
                index[t] = len(index)
                queue.append(t)
            transitions.add((index[s], c, index[t]))
    return Automaton(alphabet, len(index), {0},
                     {index[s] for s in accepting if s in index}, transitions)


def determinize_minimize(a: Automaton) -> Automaton:
    """Canonical minimal complete DFA of ``a``.

    States are numbered in breadth-first order from the initial state,
    following letters in alphabet order, so two automata accept the same
    language exactly when their canonical forms are equal.
    """
    d = determinize(a)
    table = _dfa_table(d)
    # Moore refinement: split blocks by (block, successor blocks) until stable.
    block = [1 if s in d.accepting else 0 for s in range(d.states)]
    while True:
        signatures = {}
        new_block = []
        for s in range(d.states):
            sig = (block[s],) + tuple(block[table[s][c]] for c in d.alphabet)
            new_block.append(signatures.setdefault(sig, len(signatures)))
        stable = len(signatures) == len(set(block))
        block = new_block
        if stable:
            break
    n_blocks = len(set(block))
    quotient = [dict() for _ in range(n_blocks)]
    for s in range(d.states):
        for c in d.alphabet:
            quotient[block[s]][c] = block[table[s][c]]
    accepting = {block[s] for s in d.accepting}
    return _canonical_renumber(d.alphabet, quotient, block[0], accepting)


def are_equivalent(a: Automaton, b: Automaton) -> bool:
    _require_same_alphabet(a, b)
    return determinize_minimize(a) == determinize_minimize(b)


# -- emptiness, witnesses, enumeration ---------------------------------

def shortest_word(a: Automaton) -> str | None:
    """Shortlex-least accepted word, or None for the empty language."""
    start = frozenset(a.initial)
    if not start:
        return None
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        subset, word = queue.popleft()
        if subset & a.accepting:
            return word
        for c in a.alphabet:
            target = a.step(subset, c)
            if target and target not in seen:
                seen.add(target)
                queue.append((target, word + c))
    return None


def is_empty(a: Automaton) -> bool:
    return not (_forward_closure(a, a.initial) & a.accepting)


def is_finite(a: Automaton) -> bool:
    """True iff the language is finite (no cycle among useful states)."""
    t = trim(a)
    colour = [0] * t.states  # 0 new, 1 on stack, 2 done
    for root in range(t.states):
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(sorted({q for c in t.alphabet for q in t.successors(root, c)})))]
        while stack:
            s, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[s] = 2
                stack.pop()
            elif colour[nxt] == 1:
                return False
            elif colour[nxt] == 0:
                colour[nxt] = 1
                stack.append((nxt, iter(sorted({q for c in t.alphabet
                                                for q in t.successors(nxt, c)}))))
    return True


def enumerate_shortlex(a: Automaton, max_len: int, max_count: int | None = None) -> list[str]:
    """Accepted words of length <= max_len in shortlex order."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if max_count is not None and max_count <= 0:
        return []
    d = determinize_minimize(a)
    table = _dfa_table(d)
    live = _backward_closure(d, d.accepting)
    words: list[str] = []
    frontier = [("", 0)] if 0 in live else []
    for length in range(max_len + 1):
        for w, q in frontier:
            if q in d.accepting:
                words.append(w)
                if max_count is not None and len(words) >= max_count:
                    return words
        if length == max_len:
            break
        frontier = [(w + c, table[q][c]) for w, q in frontier for c in d.alphabet
                    if table[q][c] in live]
        if not frontier:
            break
    return words


# -- boolean operations ------------------------------------------------

def intersect(a: Automaton, b: Automaton) -> Automaton:
    """Product automaton restricted to reachable pairs."""
    _require_same_alphabet(a, b)
    starts = sorted((p, q) for p in a.initial for q in b.initial)
    index = {pair: i for i, pair in enumerate(starts)}
    queue = deque(starts)
    transitions = set()
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        for c in a.alphabet:
            for p2 in a.successors(p, c):
                for q2 in b.successors(q, c):
                    pair = (p2, q2)
                    if pair not in index:
                        index[pair] = len(index)
                        queue.append(pair)
                    transitions.add((src, c, index[pair]))
    accepting = {i for (p, q), i in index.items() if p in a.accepting and q in b.accepting}
    return Automaton(a.alphabet, len(index), set(range(len(starts))), accepting, transitions)


def union(a: Automaton, b: Automaton) -> Automaton:
    """Disjoint sum: the states of ``b`` are shifted past those of ``a``."""
    _require_same_alphabet(a, b)
    k = a.states
    return Automaton(
        a.alphabet,
        a.states + b.states,
        set(a.initial) | {s + k for s in b.initial},
        set(a.accepting) | {s + k for s in b.accepting},
        set(a.transitions) | {(p + k, c, q + k) for p, c, q in b.transitions},
    )


def complement(a: Automaton) -> Automaton:
    d = determinize_minimize(a)
    return Automaton(d.alphabet, d.states, d.initial,
                     set(range(d.states)) - set(d.accepting), d.transitions)


def difference(a: Automaton, b: Automaton) -> Automaton:
    return intersect(a, complement(b))


def distinguishing_word(a: Automaton, b: Automaton) -> str | None:
    """Shortlex-least word accepted by exactly one of ``a`` and ``b``."""
    _require_same_alphabet(a, b)
    candidates = [w for w in (shortest_word(difference(a, b)), shortest_word(difference(b, a)))
                  if w is not None]
    return min(candidates, key=shortlex_key) if candidates else None
