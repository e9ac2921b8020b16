"""Exact nonnegative quantities with an adjoined +infinity.

Every measure, distance and weight in this package is an
:class:`ExtendedQuantity`: an exact nonnegative ``Fraction`` or the single
infinite value.  There is no floating point anywhere; operations that would
leave the domain (a negative difference, ``inf - inf``) raise
:class:`~measurext.errors.UndefinedArithmetic` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InputError, UndefinedArithmetic

RationalLike = Union[int, str, Fraction, "ExtendedQuantity"]


@dataclass(frozen=True, slots=True)
class ExtendedQuantity:
    """An exact value in [0, inf].  ``finite is None`` encodes +infinity."""

    finite: Fraction | None

    def __post_init__(self) -> None:
        if self.finite is not None and self.finite < 0:
            raise InputError(f"quantities must be nonnegative, got {self.finite}")

    @staticmethod
    def of(value: RationalLike) -> "ExtendedQuantity":
        """Coerce an int, Fraction, "p/q"/"inf" string, or quantity."""
        if isinstance(value, ExtendedQuantity):
            return value
        if isinstance(value, str):
            text = value.strip()
            if text == "inf":
                return INFINITY
            try:
                return ExtendedQuantity(Fraction(text))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"cannot parse quantity {value!r}") from exc
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InputError(f"cannot coerce {value!r} to a quantity")
        return ExtendedQuantity(Fraction(value))

    def is_infinite(self) -> bool:
        return self.finite is None

    def is_finite(self) -> bool:
        return self.finite is not None

    def __add__(self, other: "ExtendedQuantity") -> "ExtendedQuantity":
        if not isinstance(other, ExtendedQuantity):
            return NotImplemented
        if self.finite is None or other.finite is None:
            return INFINITY
        return ExtendedQuantity(self.finite + other.finite)

    def __radd__(self, other):
        # lets plain sum() work with its integer 0 start value
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: "ExtendedQuantity") -> "ExtendedQuantity":
        if not isinstance(other, ExtendedQuantity):
            return NotImplemented
        if other.finite is None:
            raise UndefinedArithmetic("cannot subtract an infinite quantity")
        if self.finite is None:
            return INFINITY
        if self.finite < other.finite:
            raise UndefinedArithmetic(
                f"difference {self.finite} - {other.finite} would be negative"
            )
        return ExtendedQuantity(self.finite - other.finite)

    def _key(self) -> tuple[int, Fraction]:
        return (1, Fraction(0)) if self.finite is None else (0, self.finite)

    def __lt__(self, other: "ExtendedQuantity") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "ExtendedQuantity") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "ExtendedQuantity") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "ExtendedQuantity") -> bool:
        return self._key() >= other._key()

    def __str__(self) -> str:
        return "inf" if self.finite is None else str(self.finite)

    def __repr__(self) -> str:
        return f"ExtendedQuantity({self})"


INFINITY = ExtendedQuantity(None)
ZERO = ExtendedQuantity(Fraction(0))


def qsum(values: Iterable[ExtendedQuantity]) -> ExtendedQuantity:
    """Exact sum of quantities (empty sum is 0)."""
    total = ZERO
    for v in values:
        total = total + v
    return total
