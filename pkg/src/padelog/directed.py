"""Directed-rounded big floats and outward intervals (MPFR via gmpy2).

Two layers:

* Enclosure: an outward-rounded interval [lo, hi] guaranteed to contain
  the exact real value. All transcendental evaluation (exp, log, sqrt)
  goes through enclosures; binary operations take the worst case over
  endpoint combinations with the matching rounding direction.

* DirectedFloat: a single float tagged "up" or "down", used for report
  fields that are one-sided bounds. Operations check direction algebra
  at run time (an upper bound may only be added to an upper bound,
  divided by a lower bound, and so on), so a pipeline cannot silently
  round the wrong way.

Enclosures collapse to DirectedFloat views via .upper / .lower.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2

UP = "up"
DOWN = "down"

DEFAULT_PRECISION = 192

Exact = Union[int, Fraction]


def _ctx(precision_bits: int, direction: str):
    return gmpy2.context(
        precision=precision_bits,
        round=gmpy2.RoundUp if direction == UP else gmpy2.RoundDown,
    )


def _exact_to_mpq(x: Exact):
    if isinstance(x, int):
        return gmpy2.mpq(x)
    return gmpy2.mpq(x.numerator, x.denominator)


def _exact_to_mpfr(x: Exact, precision_bits: int, direction: str):
    # the mpfr constructor honors the context rounding; context method
    # arguments that are all exact types would stay exact instead
    return gmpy2.mpfr(_exact_to_mpq(x), precision_bits,
                      _ctx(precision_bits, direction))


def _check(value) -> None:
    if gmpy2.is_nan(value):
        raise ArithmeticError("NaN in a directed-rounding pipeline")


@dataclass(frozen=True)
class DirectedFloat:
    """An MPFR value that is a certified one-sided bound."""

    value: object
    rounding: str
    precision_bits: int

    def __post_init__(self):
        if self.rounding not in (UP, DOWN):
            raise ValueError("rounding must be 'up' or 'down'")
        _check(self.value)

    @classmethod
    def from_exact(cls, x: Exact, rounding: str,
                   precision_bits: int = DEFAULT_PRECISION) -> "DirectedFloat":
        return cls(_exact_to_mpfr(x, precision_bits, rounding),
                   rounding, precision_bits)

    def _ctx(self):
        return _ctx(self.precision_bits, self.rounding)

    def _same(self, other: "DirectedFloat") -> None:
        if not isinstance(other, DirectedFloat) or other.rounding != self.rounding:
            raise ValueError("rounding direction mismatch")

    def _opposite(self, other: "DirectedFloat") -> None:
        if not isinstance(other, DirectedFloat) or other.rounding == self.rounding:
            raise ValueError("rounding direction mismatch")

    def _wrap(self, value) -> "DirectedFloat":
        _check(value)
        return DirectedFloat(value, self.rounding, self.precision_bits)

    # -- arithmetic with direction checks ---------------------------------
    def add(self, other: "DirectedFloat") -> "DirectedFloat":
        self._same(other)
        return self._wrap(self._ctx().add(self.value, other.value))

    def add_exact(self, x: Exact) -> "DirectedFloat":
        return self._wrap(self._ctx().add(self.value, _exact_to_mpq(x)))

    def sub(self, other: "DirectedFloat") -> "DirectedFloat":
        # (upper) - (lower) stays an upper bound, and vice versa
        self._opposite(other)
        return self._wrap(self._ctx().sub(self.value, other.value))

    def neg(self) -> "DirectedFloat":
        # unary minus must run in the full-precision context; the global
        # default would re-round the mantissa to 53 bits
        flipped = DOWN if self.rounding == UP else UP
        value = _ctx(self.precision_bits, flipped).minus(self.value)
        return DirectedFloat(value, flipped, self.precision_bits)

    def mul(self, other: "DirectedFloat") -> "DirectedFloat":
        """Product of two nonnegative bounds in the same direction."""
        self._same(other)
        if self.value < 0 or other.value < 0:
            raise ValueError("directed mul requires nonnegative operands")
        return self._wrap(self._ctx().mul(self.value, other.value))

    def div(self, other: "DirectedFloat") -> "DirectedFloat":
        """Quotient of nonnegative self by a positive opposite-direction bound."""
        self._opposite(other)
        if self.value < 0 or other.value <= 0:
            raise ValueError("directed div requires nonnegative/positive operands")
        return self._wrap(self._ctx().div(self.value, other.value))

    def scale_exact(self, x: Exact) -> "DirectedFloat":
        """Multiply by an exact nonnegative rational."""
        if x < 0:
            raise ValueError("scale factor must be nonnegative")
        return self._wrap(self._ctx().mul(self.value, _exact_to_mpq(x)))

    def exp(self) -> "DirectedFloat":
        return self._wrap(self._ctx().exp(self.value))

    def log(self) -> "DirectedFloat":
        if self.value <= 0:
            raise ValueError("log of a nonpositive bound")
        return self._wrap(self._ctx().log(self.value))

    def sqrt(self) -> "DirectedFloat":
        if self.value < 0:
            raise ValueError("sqrt of a negative bound")
        return self._wrap(self._ctx().sqrt(self.value))

    # -- views -------------------------------------------------------------
    def is_finite(self) -> bool:
        return gmpy2.is_finite(self.value)

    def as_fraction(self) -> Fraction:
        """Exact value (MPFR numbers are dyadic rationals)."""
        if not gmpy2.is_finite(self.value):
            raise OverflowError("non-finite directed float")
        num, den = self.value.as_integer_ratio()
        return Fraction(int(num), int(den))

    def mantissa_exponent(self) -> tuple:
        m, e = self.value.as_mantissa_exp()
        return int(m), int(e)

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self) -> str:
        return f"DirectedFloat({self.value!r}, {self.rounding}, {self.precision_bits})"


class Enclosure:
    """Outward-rounded interval arithmetic."""

    __slots__ = ("lo", "hi", "precision_bits")

    def __init__(self, lo, hi, precision_bits: int):
        _check(lo)
        _check(hi)
        if lo > hi:
            raise ValueError("inverted enclosure")
        self.lo = lo
        self.hi = hi
        self.precision_bits = precision_bits

    @classmethod
    def from_exact(cls, x: Exact, precision_bits: int = DEFAULT_PRECISION) -> "Enclosure":
        return cls(
            _exact_to_mpfr(x, precision_bits, DOWN),
            _exact_to_mpfr(x, precision_bits, UP),
            precision_bits,
        )

    def _down(self):
        return _ctx(self.precision_bits, DOWN)

    def _up(self):
        return _ctx(self.precision_bits, UP)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "Enclosure") -> "Enclosure":
        other = self._coerce(other)
        return Enclosure(
            self._down().add(self.lo, other.lo),
            self._up().add(self.hi, other.hi),
            self.precision_bits,
        )

    def __sub__(self, other: "Enclosure") -> "Enclosure":
        other = self._coerce(other)
        return Enclosure(
            self._down().sub(self.lo, other.hi),
            self._up().sub(self.hi, other.lo),
            self.precision_bits,
        )

    def __neg__(self) -> "Enclosure":
        return Enclosure(self._down().minus(self.hi), self._up().minus(self.lo),
                         self.precision_bits)

    def __mul__(self, other) -> "Enclosure":
        other = self._coerce(other)
        down, up = self._down(), self._up()
        pairs = [(self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi)]
        return Enclosure(
            min(down.mul(a, b) for a, b in pairs),
            max(up.mul(a, b) for a, b in pairs),
            self.precision_bits,
        )

    def __truediv__(self, other) -> "Enclosure":
        other = self._coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("division by an enclosure containing zero")
        down, up = self._down(), self._up()
        pairs = [(self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi)]
        return Enclosure(
            min(down.div(a, b) for a, b in pairs),
            max(up.div(a, b) for a, b in pairs),
            self.precision_bits,
        )

    def _coerce(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            if other.precision_bits != self.precision_bits:
                raise ValueError("mixed enclosure precisions")
            return other
        if isinstance(other, (int, Fraction)):
            return Enclosure.from_exact(other, self.precision_bits)
        raise TypeError(f"cannot coerce {type(other)!r} into an enclosure")

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "Enclosure":
        return self._coerce(other) - self

    def __rtruediv__(self, other) -> "Enclosure":
        return self._coerce(other) / self

    # -- monotone transcendentals --------------------------------------------
    def exp(self) -> "Enclosure":
        return Enclosure(self._down().exp(self.lo), self._up().exp(self.hi),
                         self.precision_bits)

    def log(self) -> "Enclosure":
        if self.lo <= 0:
            raise ValueError("log of an enclosure touching zero")
        return Enclosure(self._down().log(self.lo), self._up().log(self.hi),
                         self.precision_bits)

    def sqrt(self) -> "Enclosure":
        if self.lo < 0:
            raise ValueError("sqrt of a negative enclosure")
        return Enclosure(self._down().sqrt(self.lo), self._up().sqrt(self.hi),
                         self.precision_bits)

    def abs(self) -> "Enclosure":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        zero = _exact_to_mpfr(0, self.precision_bits, DOWN)
        return Enclosure(zero, max(self._up().minus(self.lo), self.hi),
                         self.precision_bits)

    def pow_int(self, k: int) -> "Enclosure":
        if k < 0:
            return 1 / self.pow_int(-k)
        acc = Enclosure.from_exact(1, self.precision_bits)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def pow_frac(self, q: Fraction) -> "Enclosure":
        """x^q for positive enclosures via exp(q*log x)."""
        if q.denominator == 1:
            return self.pow_int(q.numerator)
        return (self.log() * q).exp()

    # -- predicates and views -------------------------------------------------
    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def width(self):
        return self._up().sub(self.hi, self.lo)

    def rel_width(self):
        up = self._up()
        scale = max(up.abs(self.lo), up.abs(self.hi))
        if scale == 0:
            return gmpy2.mpfr(0)
        return self._up().div(self.width(), scale)

    def certainly_lt(self, other: "Enclosure") -> bool:
        return self.hi < self._coerce(other).lo

    def certainly_le(self, other: "Enclosure") -> bool:
        return self.hi <= self._coerce(other).lo

    @property
    def upper(self) -> DirectedFloat:
        return DirectedFloat(self.hi, UP, self.precision_bits)

    @property
    def lower(self) -> DirectedFloat:
        return DirectedFloat(self.lo, DOWN, self.precision_bits)

    def __repr__(self) -> str:
        return f"Enclosure[{self.lo!r}, {self.hi!r}]"


def log1p_enclosure(alpha: Fraction, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Enclosure of log(1 + alpha) for exact rational alpha > -1."""
    if alpha <= -1:
        raise ValueError("need alpha > -1")
    return Enclosure.from_exact(1 + alpha, precision_bits).log()
