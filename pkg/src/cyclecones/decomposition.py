"""Shared decomposition record: input = positive + negative, with receipts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from .rationals import rat_str
from .vectors import ClassVector


@dataclass(frozen=True)
class Certificate:
    """A named verified fact plus the exact witness data backing it."""

    fact: str
    data: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Decomposition:
    """An exact splitting input = positive + negative.

    The split itself is re-checkable from the vectors alone; everything
    else a producer wants to promise (memberships, optimality, uniqueness)
    rides along as certificates and metadata.
    """

    input: ClassVector
    positive: ClassVector
    negative: ClassVector
    certificates: tuple[Certificate, ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert (self.positive + self.negative).coords == self.input.coords

    def certificate(self, fact: str) -> Certificate | None:
        return next((c for c in self.certificates if c.fact == fact), None)

    def to_json(self) -> dict:
        return {
            "basis": self.input.basis,
            "input": [rat_str(c) for c in self.input.coords],
            "positive": [rat_str(c) for c in self.positive.coords],
            "negative": [rat_str(c) for c in self.negative.coords],
            "certificates": [
                {"fact": c.fact, **_jsonable(c.data)} for c in self.certificates
            ],
            "metadata": _jsonable(self.metadata),
        }


def _jsonable(value):
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, ClassVector):
        return [rat_str(c) for c in value.coords]
    from fractions import Fraction

    if isinstance(value, Fraction):
        return rat_str(value)
    return value
