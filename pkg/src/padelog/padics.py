"""Finite-precision p-adic arithmetic with explicit valuation bookkeeping.

A PAdicNumber is p^valuation * unit with the unit known modulo p^digits.
Addition tracks the worst-case absolute precision floor of its operands,
so a reported valuation is exact whenever it lies strictly below that
floor; when cancellation eats the whole window the operation raises
PrecisionExhausted instead of guessing (the exception carries the
certified floor, callers either retry at doubled precision or use the
floor as a lower bound on the valuation).

The logarithm series sum_{k>=1} (-1)^(k+1) alpha^k / k converges for
v_p(alpha) >= 1; truncation keeps every omitted term above the target
precision with a two-digit guard. p = 2 is gated at v >= 2 so division
by k never outruns the bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

DEFAULT_DIGITS = 64
MAX_DIGITS = 4096


class PrecisionExhausted(ArithmeticError):
    """Cancellation pushed the certified valuation window to its floor.

    `floor` is a certified lower bound for the true valuation of the
    result (possibly +infinity if the result is exactly zero).
    """

    def __init__(self, floor: int):
        super().__init__(f"precision exhausted: valuation >= {floor} uncertified")
        self.floor = floor


def valuation(x: int, p: int) -> int:
    """v_p(x) for a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _ilog(p: int, k: int) -> int:
    """floor(log_p(k)) for k >= 1."""
    v = 0
    q = p
    while q <= k:
        q *= p
        v += 1
    return v


@dataclass(frozen=True)
class PAdicNumber:
    """p^valuation * unit, unit coprime to p, known mod p^digits."""

    p: int
    valuation: int
    unit: int
    digits: int
    exact_zero: bool = False

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("need at least one digit")
        if self.exact_zero:
            if self.valuation != 0 or self.unit != 0:
                raise ValueError("malformed zero")
        else:
            if not 0 < self.unit < self.p ** self.digits:
                raise ValueError("unit out of range")
            if self.unit % self.p == 0:
                raise ValueError("unit not coprime to p")

    @classmethod
    def zero(cls, p: int, digits: int = DEFAULT_DIGITS) -> "PAdicNumber":
        return cls(p=p, valuation=0, unit=0, digits=digits, exact_zero=True)

    @property
    def precision_floor(self) -> int:
        """Absolute precision: the value is known modulo p^precision_floor."""
        return self.valuation + self.digits

    def is_zero(self) -> bool:
        return self.exact_zero

    def abs_value(self) -> Fraction:
        """|x|_p = p^(-valuation); zero for the certified zero."""
        if self.exact_zero:
            return Fraction(0)
        return Fraction(1, self.p) ** self.valuation

    def truncate(self, digits: int) -> "PAdicNumber":
        if digits >= self.digits or self.exact_zero:
            return self
        # the reduced unit stays nonzero: it is coprime to p
        return PAdicNumber(self.p, self.valuation,
                           self.unit % self.p ** digits, digits)

    def _check_peer(self, other: "PAdicNumber") -> None:
        if self.p != other.p:
            raise ValueError("mixed primes")

    def __add__(self, other: "PAdicNumber") -> "PAdicNumber":
        self._check_peer(other)
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        floor = min(self.precision_floor, other.precision_floor)
        v0 = min(self.valuation, other.valuation)
        window = floor - v0
        if window <= 0:
            raise PrecisionExhausted(floor)
        p = self.p
        mod = p ** window
        s = (self.unit * pow(p, self.valuation - v0)
             + other.unit * pow(p, other.valuation - v0)) % mod
        if s == 0:
            raise PrecisionExhausted(floor)
        shift = valuation(s, p)
        val = v0 + shift
        digits = floor - val
        if digits <= 0:
            raise PrecisionExhausted(floor)
        unit = (s // p ** shift) % p ** digits
        return PAdicNumber(p, val, unit, digits)

    def __neg__(self) -> "PAdicNumber":
        if self.exact_zero:
            return self
        mod = self.p ** self.digits
        return PAdicNumber(self.p, self.valuation, mod - self.unit, self.digits)

    def __sub__(self, other: "PAdicNumber") -> "PAdicNumber":
        return self + (-other)

    def __mul__(self, other: "PAdicNumber") -> "PAdicNumber":
        self._check_peer(other)
        if self.exact_zero or other.exact_zero:
            return PAdicNumber.zero(self.p, min(self.digits, other.digits))
        digits = min(self.digits, other.digits)
        unit = (self.unit * other.unit) % self.p ** digits
        return PAdicNumber(self.p, self.valuation + other.valuation, unit, digits)

    def pow_int(self, k: int) -> "PAdicNumber":
        if k < 0:
            raise ValueError("negative powers unsupported")
        if k == 0:
            return PAdicNumber(self.p, 0, 1, self.digits)
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def div_exact_int(self, k: int) -> "PAdicNumber":
        """Divide by a nonzero integer (exact p-adic division)."""
        if k == 0:
            raise ZeroDivisionError("division by zero")
        if self.exact_zero:
            return self
        p = self.p
        sign = 1 if k > 0 else -1
        k = abs(k)
        vk = valuation(k, p)
        ku = k // p ** vk
        mod = p ** self.digits
        inv = pow(ku, -1, mod)
        unit = (self.unit * inv * sign) % mod
        return PAdicNumber(p, self.valuation - vk, unit, self.digits)


def padic_from_rational(c: int, d: int, p: int,
                        digits: int = DEFAULT_DIGITS) -> PAdicNumber:
    """Exact embedding of c/d into Q_p at the given working precision."""
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if p < 2:
        raise ValueError("p must be a prime")
    if c == 0:
        return PAdicNumber.zero(p, digits)
    vc = valuation(c, p)
    vd = valuation(d, p)
    cu = c // p ** vc
    du = d // p ** vd
    mod = p ** digits
    unit = (cu * pow(du, -1, mod)) % mod
    return PAdicNumber(p, vc - vd, unit, digits)


def padic_from_fraction(x: Fraction, p: int,
                        digits: int = DEFAULT_DIGITS) -> PAdicNumber:
    return padic_from_rational(x.numerator, x.denominator, p, digits)


@dataclass(frozen=True)
class PAdicLogResult:
    """Truncated log value plus a certified tail bound."""

    value: PAdicNumber
    tail_valuation_floor: int
    terms_used: int


def _log_convergence_gate(alpha: PAdicNumber) -> None:
    if alpha.exact_zero:
        return
    if alpha.valuation <= 0:
        raise ValueError("outside convergence disk: need v_p(alpha) >= 1")
    if alpha.p == 2 and alpha.valuation < 2:
        raise ValueError("p-adic smallness violated: p = 2 needs v_2(alpha) >= 2")


def padic_log1p(alpha: PAdicNumber, digits: Optional[int] = None) -> PAdicLogResult:
    """log_p(1 + alpha) = sum_{k>=1} (-1)^(k+1) alpha^k / k.

    The result has valuation v = v_p(alpha), so its last reported digit
    sits at valuation v + digits - 1. The cut K is minimal with
    (K+1) v - floor(log_p(K+1)) >= v + digits + 1, which certifies every
    omitted term below that window since v_p(alpha^k / k) >= k v -
    floor(log_p k) is nondecreasing in k for v >= 1. No cancellation can
    occur: term valuations are dominated by the first term's valuation v.
    """
    _log_convergence_gate(alpha)
    if alpha.exact_zero:
        return PAdicLogResult(alpha, digits or alpha.digits, 0)
    if digits is None:
        digits = alpha.digits
    v = alpha.valuation
    target = v + digits + 1
    K = 1
    while (K + 1) * v - _ilog(alpha.p, K + 1) < target:
        K += 1
    tail_floor = (K + 1) * v - _ilog(alpha.p, K + 1)

    term = alpha  # alpha^k as k walks up
    acc = alpha
    for k in range(2, K + 1):
        term = term * alpha
        contrib = term.div_exact_int(k if k % 2 else -k)
        acc = acc + contrib
    return PAdicLogResult(acc.truncate(digits), tail_floor, K)


def padic_log_powers(alpha: PAdicNumber, count: int,
                     digits: Optional[int] = None) -> list:
    """[1, log(1+alpha), log^2(1+alpha), ...] with `count` entries."""
    if count < 1:
        raise ValueError("need at least one power")
    log_value = padic_log1p(alpha, digits).value
    powers = [PAdicNumber(alpha.p, 0, 1, log_value.digits)]
    for _ in range(count - 1):
        powers.append(powers[-1] * log_value)
    return powers


def padic_linear_form(coeffs: Sequence[Fraction], logs: Sequence[PAdicNumber],
                      digits: int = DEFAULT_DIGITS) -> PAdicNumber:
    """sum_j coeffs[j] * logs[j] with certified valuation.

    Raises PrecisionExhausted if cancellation prevents certifying the
    valuation within the working window; callers double `digits`.
    """
    if len(coeffs) != len(logs):
        raise ValueError("coefficient/log length mismatch")
    if not logs:
        raise ValueError("empty form")
    p = logs[0].p
    acc = PAdicNumber.zero(p, digits)
    for coeff, logpow in zip(coeffs, logs):
        if coeff == 0:
            continue
        acc = acc + padic_from_fraction(coeff, p, digits) * logpow
    return acc


def stable_under_refinement(make_result, digits: int) -> bool:
    """True iff the certified valuation agrees at digits and 2*digits.

    `make_result` maps a working precision to a PAdicNumber.
    """
    a = make_result(digits)
    b = make_result(2 * digits)
    if a.is_zero() != b.is_zero():
        return False
    if a.is_zero():
        return True
    return a.valuation == b.valuation and (
        b.unit % a.p ** min(a.digits, b.digits)
        == a.unit % a.p ** min(a.digits, b.digits)
    )
