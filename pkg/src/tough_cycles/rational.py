"""Exact rational numbers with an infinity sentinel.

Toughness is a ratio of two small integers and the theorems hinge on
exact comparisons like "tau > 1", so floating point is banned from every
comparison in this package.  Finite values are backed by
:class:`fractions.Fraction`; complete graphs get the dedicated infinite
value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class ExactRational:
    """A non-negative exact rational, or positive infinity.

    Stored in lowest terms.  Infinity compares greater than every finite
    value and equal to itself.
    """

    __slots__ = ("_frac", "_infinite")

    def __init__(self, numerator=0, denominator=1, *, infinite=False):
        if infinite:
            self._frac = None
            self._infinite = True
            return
        frac = Fraction(numerator, denominator)
        if frac < 0:
            raise ValueError("ExactRational is non-negative")
        self._frac = frac
        self._infinite = False

    @classmethod
    def infinity(cls) -> "ExactRational":
        return cls(infinite=True)

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "ExactRational":
        return cls(frac.numerator, frac.denominator)

    @property
    def is_infinite(self) -> bool:
        return self._infinite

    @property
    def numerator(self) -> int:
        if self._infinite:
            raise ValueError("infinity has no numerator")
        return self._frac.numerator

    @property
    def denominator(self) -> int:
        if self._infinite:
            raise ValueError("infinity has no denominator")
        return self._frac.denominator

    def as_fraction(self) -> Fraction:
        if self._infinite:
            raise ValueError("infinity is not a Fraction")
        return self._frac

    def _coerce(self, other):
        if isinstance(other, ExactRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactRational(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._infinite or other._infinite:
            return self._infinite and other._infinite
        return self._frac == other._frac

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._infinite:
            return False
        if other._infinite:
            return True
        return self._frac < other._frac

    def __hash__(self):
        return hash("inf") if self._infinite else hash(self._frac)

    def __repr__(self):
        if self._infinite:
            return "ExactRational(infinite=True)"
        return f"ExactRational({self._frac.numerator}, {self._frac.denominator})"

    def __str__(self):
        if self._infinite:
            return "inf"
        return f"{self._frac.numerator}/{self._frac.denominator}"

    def to_json(self) -> dict:
        """Serialize as ``{num, den, infinite}`` (num/den zeroed for infinity)."""
        if self._infinite:
            return {"num": 0, "den": 0, "infinite": True}
        return {"num": self._frac.numerator, "den": self._frac.denominator,
                "infinite": False}

    @classmethod
    def from_json(cls, obj: dict) -> "ExactRational":
        if obj.get("infinite"):
            return cls.infinity()
        return cls(obj["num"], obj["den"])
