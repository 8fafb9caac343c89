"""Verdict records returned by every decision procedure."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"


class Status(str, Enum):
    EXACT = "EXACT"
    BOUNDED = "BOUNDED"


@dataclass(frozen=True)
class Decision:
    """Outcome of a decision procedure.

    ``status`` is EXACT when the answer holds for the whole
    language, BOUNDED when only objects up to ``bound`` were examined.
    ``witness`` and ``counterexample`` are a word, a pair of words, or None.
    ``details`` carries per-candidate data for probes that report many
    counterexamples at once.
    """

    verdict: Verdict
    status: Status = Status.EXACT
    bound: int | None = None
    witness: Any = None
    counterexample: Any = None
    notes: tuple[str, ...] = ()
    details: dict[str, str] = field(default_factory=dict)

    def __bool__(self):
        return self.verdict is Verdict.YES

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"verdict": self.verdict.value, "status": self.status.value}
        if self.bound is not None:
            out["bound"] = self.bound
        out["witness"] = _plain(self.witness)
        out["counterexample"] = _plain(self.counterexample)
        out["notes"] = list(self.notes)
        if self.details:
            out["details"] = dict(self.details)
        return out


def _plain(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def yes(**kwargs) -> Decision:
    return Decision(Verdict.YES, **kwargs)


def no(**kwargs) -> Decision:
    return Decision(Verdict.NO, **kwargs)
