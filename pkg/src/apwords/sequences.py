"""Infinite words at desk scale: periodic words and fixed points of morphisms.

Everything here works on a finite prefix of the infinite word, so recurrence
values are lower bounds (``exactness == "ESTIMATE"``); a longer prefix can
only raise them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Union

from .automata import make_alphabet
from .errors import EmptyPeriod, FactorNotFound, NotProlongable, SequenceTooLong
from .verdict import Decision, Status, no, yes
from .words import is_primitive

DEFAULT_PREFIX_LEN = 4096
MAX_MORPHIC_LENGTH = 1 << 20


@dataclass(frozen=True)
class Morphism:
    images: Mapping[str, str]
    alphabet: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        alphabet = make_alphabet(self.images)
        for letter, image in self.images.items():
            if not image:
                raise ValueError(f"image of {letter!r} is empty")
            stray = set(image) - set(alphabet)
            if stray:
                raise ValueError(f"image of {letter!r} uses letters outside the alphabet: "
                                 f"{''.join(sorted(stray))}")
        object.__setattr__(self, "images", dict(self.images))
        object.__setattr__(self, "alphabet", alphabet)

    def __call__(self, word: str) -> str:
        return "".join(self.images[c] for c in word)

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse ``"0:01,1:10"``."""
        images = {}
        for item in text.split(","):
            letter, sep, image = item.strip().partition(":")
            if not sep or len(letter) != 1:
                raise ValueError(f"bad morphism rule {item!r}; expected letter:image")
            images[letter] = image
        return cls(images)


@dataclass(frozen=True)
class Periodic:
    word: str

    def __post_init__(self):
        if not self.word:
            raise EmptyPeriod("a periodic sequence needs a nonempty period")

    @property
    def alphabet(self):
        return make_alphabet(set(self.word))


@dataclass(frozen=True)
class MorphicFixedPoint:
    morphism: Morphism
    seed: str

    def __post_init__(self):
        image = self.morphism.images.get(self.seed)
        if image is None or not image.startswith(self.seed) or len(image) < 2:
            raise NotProlongable(
                f"morphism is not prolongable at {self.seed!r}: its image must start "
                f"with {self.seed!r} and have length at least 2")

    @property
    def alphabet(self):
        return self.morphism.alphabet


SequenceSpec = Union[Periodic, MorphicFixedPoint]


def thue_morse() -> MorphicFixedPoint:
    return MorphicFixedPoint(Morphism({"0": "01", "1": "10"}), "0")


def fibonacci_word() -> MorphicFixedPoint:
    return MorphicFixedPoint(Morphism({"0": "01", "1": "0"}), "0")


def prefix(s: SequenceSpec, n: int) -> str:
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    if isinstance(s, Periodic):
        reps = -(-n // len(s.word))
        return (s.word * reps)[:n]
    if n > MAX_MORPHIC_LENGTH:
        raise SequenceTooLong(f"morphic prefixes are capped at {MAX_MORPHIC_LENGTH} letters")
    word = s.seed
    while len(word) < n:
        # the image of a prefix of the fixed point is again a prefix of it
        word = s.morphism(word)[:n]
    return word[:n]


def factors_of_length(s: SequenceSpec, n: int, prefix_len: int = DEFAULT_PREFIX_LEN) -> list[str]:
    """Sorted distinct length-``n`` windows of the prefix.

    Exact for periodic words once ``prefix_len >= n + period``; for morphic
    words a subset of the true factor set.
    """
    if not 0 <= n <= prefix_len:
        raise ValueError("need 0 <= n <= prefix_len")
    p = prefix(s, prefix_len)
    return sorted({p[i:i + n] for i in range(prefix_len - n + 1)})


@dataclass(frozen=True)
class RecurrenceReport:
    """``value`` is None when the prefix shows no bound (UNBOUNDED_IN_PREFIX)."""

    n: int
    value: int | None
    prefix_len: int
    exactness: str = "ESTIMATE"

    @property
    def unbounded(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict:
        return {"n": self.n,
                "value": "UNBOUNDED_IN_PREFIX" if self.value is None else self.value,
                "prefix_len": self.prefix_len, "exactness": self.exactness}


def _window_bound(text: str, w: str) -> int:
    """Smallest m such that every length-m window of ``text`` contains ``w``."""
    size, k = len(text), len(w)
    # gap[i]: shortest window starting at i that contains w
    gap = [0] * (size + 1)
    nxt = None
    for i in range(size - k, -1, -1):
        if text.startswith(w, i):
            nxt = i
        gap[i] = size + 1 if nxt is None else nxt - i + k
    for i in range(size - k + 1, size + 1):
        gap[i] = size + 1
    running = [0] * (size + 1)
    best = 0
    for i in range(size + 1):
        best = max(best, gap[i])
        running[i] = best
    for m in range(k, size + 1):
        if running[size - m] <= m:
            return m
    return size + 1


def _report(n: int, m: int, prefix_len: int) -> RecurrenceReport:
    # needing the whole prefix is no evidence of a bound
    if m > prefix_len or (m == prefix_len and m > n):
        return RecurrenceReport(n, None, prefix_len)
    return RecurrenceReport(n, m, prefix_len)


def recurrence_for_factor(s: SequenceSpec, w: str,
                          prefix_len: int = DEFAULT_PREFIX_LEN) -> RecurrenceReport:
    """Smallest window length that always contains ``w``, measured on the prefix."""
    text = prefix(s, prefix_len)
    if w not in text:
        raise FactorNotFound(f"{w!r} does not occur in the first {prefix_len} letters")
    return _report(len(w), _window_bound(text, w), prefix_len)


def recurrence_function(s: SequenceSpec, n: int,
                        prefix_len: int = DEFAULT_PREFIX_LEN) -> RecurrenceReport:
    """Smallest window length containing every length-``n`` factor of the prefix."""
    if not 0 <= n <= prefix_len:
        raise ValueError("need 0 <= n <= prefix_len")
    text = prefix(s, prefix_len)
    m = max(_window_bound(text, w) for w in factors_of_length(s, n, prefix_len))
    return _report(n, m, prefix_len)


def recurrence_table(s: SequenceSpec, lengths, prefix_len: int = DEFAULT_PREFIX_LEN):
    return [recurrence_function(s, n, prefix_len) for n in lengths]


def _periodic_factors(root: str, n: int) -> set[str]:
    text = root * (n // len(root) + 2)
    return {text[i:i + n] for i in range(len(root))}


def eventual_periodicity_probe(s: SequenceSpec, max_period: int, n: int,
                               prefix_len: int = DEFAULT_PREFIX_LEN) -> Decision:
    """Do the length-``n`` factors fit inside Sub(w*) for some short ``w``?

    Candidates are the primitive words of length at most ``max_period``
    over the sequence's alphabet, in shortlex order.  On NO, ``details``
    maps each candidate to the least observed factor it cannot produce.
    """
    if max_period < 1 or n < 1:
        raise ValueError("max_period and n must be positive")
    observed = factors_of_length(s, n, prefix_len)
    missing = {}
    for length in range(1, max_period + 1):
        for letters in product(s.alphabet, repeat=length):
            w = "".join(letters)
            if not is_primitive(w):
                continue
            allowed = _periodic_factors(w, n)
            gap = next((f for f in observed if f not in allowed), None)
            if gap is None:
                return yes(status=Status.BOUNDED, bound=max_period, witness=w,
                           notes=(f"all {len(observed)} factors of length {n} in the "
                                  f"first {prefix_len} letters are factors of ({w})^n",))
            missing[w] = gap
    first = next(iter(missing.items()))
    return no(status=Status.BOUNDED, bound=max_period, counterexample=first, details=missing,
              notes=(f"no primitive period of length <= {max_period} produces the "
                     f"{len(observed)} observed factors of length {n}",
                     f"{len(missing)} candidate periods refuted"))
