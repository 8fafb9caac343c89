"""Bounded generation for Marcus contextual grammars.

A grammar ``(V, B, C)`` starts from base words ``B`` and repeatedly adjoins
a context ``(u, v)`` from ``C``:

* external mode wraps the whole word, ``x -> u x v``;
* internal mode wraps any factor, ``x1 z x2 -> x1 u z v x2``.

An optional selector restricts a context to words (external) or factors
(internal) accepted by an automaton.  The four families are encoded as

==========  ========  ========
family      mode      selector
==========  ========  ========
C           external  no
G           external  yes
I           internal  no
IS          internal  yes
==========  ========  ========
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .automata import Automaton, check_word, make_alphabet, shortlex_key
from .errors import NoContexts
from .words import factors


class Mode(str, Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"


@dataclass(frozen=True)
class ContextualGrammar:
    alphabet: tuple[str, ...]
    base: tuple[str, ...]
    contexts: tuple[tuple[str, str], ...]
    mode: Mode = Mode.INTERNAL
    # context index -> automaton; contexts without an entry are unrestricted
    selector: Mapping[int, Automaton] | None = None

    def __post_init__(self):
        alphabet = make_alphabet(self.alphabet)
        base = tuple(sorted(set(self.base), key=shortlex_key))
        contexts = tuple((u, v) for u, v in self.contexts)
        for w in base:
            check_word(w, alphabet)
        for u, v in contexts:
            check_word(u, alphabet)
            check_word(v, alphabet)
        selector = None
        if self.selector:
            selector = {int(i): aut for i, aut in self.selector.items()}
            for i, aut in selector.items():
                if not 0 <= i < len(contexts):
                    raise ValueError(f"selector refers to missing context {i}")
                if aut.alphabet != alphabet:
                    raise ValueError(f"selector {i} has a different alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "contexts", contexts)
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "selector", selector)

    @property
    def family(self) -> str:
        if self.mode is Mode.EXTERNAL:
            return "G" if self.selector else "C"
        return "IS" if self.selector else "I"

    def _allows(self, index: int, word: str) -> bool:
        if not self.selector or index not in self.selector:
            return True
        return self.selector[index].accepts(word)

    @classmethod
    def from_dict(cls, data: dict) -> "ContextualGrammar":
        selector = data.get("selector")
        if selector:
            selector = {int(k): Automaton.from_dict(v) for k, v in selector.items()}
        return cls(
            alphabet=tuple(data["alphabet"]),
            base=tuple(data["base"]),
            contexts=tuple(tuple(c) for c in data["contexts"]),
            mode=Mode(data.get("mode", "internal")),
            selector=selector,
        )

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "base": list(self.base),
            "contexts": [list(c) for c in self.contexts],
            "mode": self.mode.value,
            "selector": None if not self.selector else
            {str(k): v.to_dict() for k, v in sorted(self.selector.items())},
        }

    @classmethod
    def from_json(cls, text: str) -> "ContextualGrammar":
        return cls.from_dict(json.loads(text))


def derive_step(g: ContextualGrammar, x: str) -> set[str]:
    """All words obtained from ``x`` by one context adjunction."""
    out = set()
    for index, (u, v) in enumerate(g.contexts):
        if g.mode is Mode.EXTERNAL:
            if g._allows(index, x):
                out.add(u + x + v)
            continue
        for i in range(len(x) + 1):
            for j in range(i, len(x) + 1):
                z = x[i:j]
                if g._allows(index, z):
                    out.add(x[:i] + u + z + v + x[j:])
    return out


@dataclass
class GenerationReport:
    words: list[str]
    max_len: int
    truncated: bool = False


def generate(g: ContextualGrammar, max_len: int, max_words: int | None = None) -> GenerationReport:
    """Breadth-first closure of the base words, keeping words up to ``max_len``.

    When ``max_words`` is reached the partial set is returned with
    ``truncated=True``.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    seen = {w for w in g.base if len(w) <= max_len}
    truncated = max_words is not None and len(seen) > max_words
    queue = deque(sorted(seen, key=shortlex_key))
    while queue and not truncated:
        x = queue.popleft()
        for y in sorted(derive_step(g, x), key=shortlex_key):
            if len(y) <= max_len and y not in seen:
                if max_words is not None and len(seen) >= max_words:
                    truncated = True
                    break
                seen.add(y)
                queue.append(y)
    return GenerationReport(sorted(seen, key=shortlex_key), max_len, truncated)


def min_context_growth(g: ContextualGrammar) -> int:
    if not g.contexts:
        raise NoContexts("grammar has no contexts")
    return min(len(u) + len(v) for u, v in g.contexts)


CONSISTENT = "CONSISTENT"
FALSIFYING = "FALSIFYING_OBSERVATION"


@dataclass
class ProbeReport:
    """Bounded audit of a generated language against the letter-star claim.

    ``closed_up_to_k``: every factor of length <= k of a generated word is
    generated.  ``redundant_up_to_k``: every generated word of length <= k
    occurs in every generated word of length >= ``max_len - k``; False when
    no such long word was generated.  ``letter_star``: the generated set is
    ``{a^i : i <= max_len}`` for one letter ``a`` (reported in ``letter``).
    """

    max_len: int
    k: int
    word_count: int
    closed_up_to_k: bool
    redundant_up_to_k: bool
    letter_star: bool
    letter: str | None
    consistency: str
    truncated: bool = False
    missing_factor: str | None = None
    redundancy_gap: tuple[str, str] | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len, "k": self.k, "word_count": self.word_count,
            "closed_up_to_k": self.closed_up_to_k,
            "redundant_up_to_k": self.redundant_up_to_k,
            "letter_star": self.letter_star, "letter": self.letter,
            "consistency": self.consistency, "truncated": self.truncated,
            "missing_factor": self.missing_factor,
            "redundancy_gap": list(self.redundancy_gap) if self.redundancy_gap else None,
            "warnings": list(self.warnings),
        }


def letter_star_probe(g: ContextualGrammar, max_len: int = 12, k: int = 4,
                   max_words: int | None = None) -> ProbeReport:
    """Generate up to ``max_len`` and test closure, redundancy and the a* shape.

    An infinite almost periodic language of one of these families is always
    ``a*`` for a single letter, so a sample that looks closed and redundant
    but is not ``a*`` is flagged FALSIFYING_OBSERVATION.
    """
    if k > max_len - 2:
        raise ValueError("need k <= max_len - 2")
    report = generate(g, max_len, max_words)
    words = report.words
    present = set(words)
    warnings = []
    if g.contexts and min_context_growth(g) < 2:
        warnings.append(f"minimum context growth is {min_context_growth(g)} (< 2); "
                        "the letter-star argument assumes growth of at least 2")
    if report.truncated:
        warnings.append("generation truncated; audits cover a partial set")

    missing_factor = None
    for w in words:
        gap = min((f for f in factors(w) if len(f) <= k and f not in present),
                  key=shortlex_key, default=None)
        if gap is not None:
            missing_factor = gap if missing_factor is None else min(
                missing_factor, gap, key=shortlex_key)
    closed = missing_factor is None

    short = [w for w in words if len(w) <= k]
    long = [w for w in words if len(w) >= max_len - k]
    redundancy_gap = next(((x, z) for x in short for z in long if x not in z), None)
    redundant = bool(long) and redundancy_gap is None
    if not long:
        warnings.append(f"no generated word reaches length {max_len - k}; redundancy unobserved")

    letter = None
    for a in g.alphabet:
        if present == {a * i for i in range(max_len + 1)}:
            letter = a
    letter_star = letter is not None

    consistency = FALSIFYING if (closed and redundant and not letter_star) else CONSISTENT
    return ProbeReport(max_len, k, len(words), closed, redundant, letter_star, letter,
                       consistency, report.truncated, missing_factor, redundancy_gap, warnings)
