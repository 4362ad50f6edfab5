"""Exact arithmetic substrate: polynomials, truncated power series and
rational matrices over Q, plus the kernel route to Pade approximants.

Every coefficient is a `fractions.Fraction`, so gcd-reduced exactness is
structural. Matrix elimination is fraction-free (Bareiss) over integer
rows obtained by clearing denominators; pivoting is first-nonzero in
column order, which makes every result deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rat = Union[int, Fraction]

_ZERO = Fraction(0)


def _frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Dense univariate polynomial over Q.

    Coefficient index equals degree; trailing zeros are stripped, so the
    zero polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rat] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def monomial(cls, k: int, c: Rat = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: Rat) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * _frac(x) + c
        return acc

    def divexact(self, other: "Polynomial") -> "Polynomial":
        """Exact division; raises ArithmeticError if a remainder survives."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        if len(rem) < len(other.coeffs):
            if self.is_zero():
                return Polynomial()
            raise ArithmeticError("inexact polynomial division")
        out = [_ZERO] * (len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        for k in range(len(out) - 1, -1, -1):
            q = rem[k + other.degree] / lead
            out[k] = q
            if q != 0:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        if any(c != 0 for c in rem):
            raise ArithmeticError("inexact polynomial division")
        return Polynomial(out)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{c}*z^{k}" if k else f"{c}")
        return "Polynomial(" + " + ".join(terms) + ")"


class TruncatedSeries:
    """Power series over Q known exactly through z^truncation_order.

    Arithmetic never reads past the truncation order; binary operations
    require matching truncation orders (callers pick one T per context).
    """

    __slots__ = ("coeffs", "truncation_order")

    def __init__(self, coeffs: Sequence[Rat], truncation_order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if truncation_order is None:
            truncation_order = len(cs) - 1
        if truncation_order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) > truncation_order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([_ZERO] * (truncation_order + 1 - len(cs)))
        self.coeffs = cs
        self.truncation_order = truncation_order

    @classmethod
    def from_polynomial(cls, poly: Polynomial, truncation_order: int) -> "TruncatedSeries":
        return cls(poly.coeffs[: truncation_order + 1], truncation_order)

    def coefficient(self, k: int) -> Fraction:
        if k > self.truncation_order:
            raise IndexError("coefficient beyond truncation order")
        return self.coeffs[k]

    def order(self) -> int | None:
        """Index of the first nonzero coefficient; None if zero through T."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def _matched(self, other: "TruncatedSeries") -> None:
        if self.truncation_order != other.truncation_order:
            raise ValueError("mismatched truncation orders")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return (self.truncation_order == other.truncation_order
                    and self.coeffs == other.coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.truncation_order, tuple(self.coeffs)))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._matched(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.truncation_order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._matched(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.truncation_order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.truncation_order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.truncation_order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._matched(other)
        T = self.truncation_order
        out = [_ZERO] * (T + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(T + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, T)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r}, T={self.truncation_order})"


def log_power_series(j: int, truncation_order: int) -> TruncatedSeries:
    """log^j(1+z) mod z^(T+1); j = 0 gives the constant series 1."""
    if j < 0:
        raise ValueError("power must be nonnegative")
    T = truncation_order
    if j == 0:
        return TruncatedSeries([1], T)
    base = TruncatedSeries(
        [_ZERO] + [Fraction((-1) ** (k + 1), k) for k in range(1, T + 1)], T)
    out = base
    for _ in range(j - 1):
        out = out * base
    return out


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major dense matrix over Q."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rat]]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(_frac(x) for x in row)
        return cls(r, c, tuple(flat))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols: (i + 1) * self.cols])


def _integer_rows(matrix: RationalMatrix) -> list:
    """Clear denominators row by row (kernel and rank are unaffected)."""
    rows = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        scale = math.lcm(*(c.denominator for c in row)) if row else 1
        rows.append([int(c * scale) for c in row])
    return rows


def _bareiss_echelon(rows: list) -> tuple:
    """Fraction-free row echelon form; returns (rows, pivot column list).

    Pivot choice is the first row with a nonzero entry in column order,
    so the output is deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    prev = 1
    for c in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pc = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            # the rescale by pc/prev applies even when ric == 0
            for j in range(n):
                rows[i][j] = (pc * rows[i][j] - ric * rows[r][j]) // prev
            rows[i][c] = 0
        prev = pc
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(matrix: RationalMatrix) -> int:
    _, pivots = _bareiss_echelon(_integer_rows(matrix))
    return len(pivots)


def nullspace(matrix: RationalMatrix) -> list:
    """Basis of the right kernel over Q.

    Each basis vector is scaled so its first nonzero coordinate is 1.
    Empty list iff the matrix has full column rank.
    """
    n = matrix.cols
    if matrix.rows == 0:
        ech, pivots = [], []
    else:
        ech, pivots = _bareiss_echelon(_integer_rows(matrix))
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [_ZERO] * n
        v[fc] = Fraction(1)
        # back-substitute pivot coordinates bottom-up
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = _ZERO
            row = ech[r]
            for c in range(pc + 1, n):
                if row[c] != 0 and v[c] != 0:
                    s += row[c] * v[c]
            v[pc] = -s / row[pc]
        first = next(c for c in v if c != 0)
        if first != 1:
            v = [c / first for c in v]
        basis.append(v)
    return basis


def coefficient_matrix(f: Sequence[TruncatedSeries], weights: Sequence[int],
                       order: int) -> RationalMatrix:
    """Matrix of the linear map (A_1..A_m) -> coefficients 0..order of
    sum A_j f_j, with columns indexed by (series j, monomial power k<=n_j).
    """
    if len(f) != len(weights):
        raise ValueError("weights must match the series tuple")
    for s in f:
        if s.truncation_order < order:
            raise ValueError("series truncated below the requested order")
    rows = []
    for t in range(order + 1):
        row = []
        for j, nj in enumerate(weights):
            for k in range(nj + 1):
                row.append(f[j].coeffs[t - k] if 0 <= t - k else _ZERO)
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def pade_from_kernel(f: Sequence[TruncatedSeries],
                     weights: Sequence[int]) -> list:
    """One weight-n Pade family for the series tuple f.

    Solves for polynomials (A_1..A_m), deg A_j <= n_j, not all zero, with
    ord(sum A_j f_j) >= N-1 where N = sum(n_j + 1), by taking the first
    kernel basis vector of the coefficient matrix through order N-2.
    The N-1 coefficient conditions on N unknowns leave a nonzero kernel.
    """
    N = sum(nj + 1 for nj in weights)
    basis = nullspace(coefficient_matrix(f, weights, N - 2))
    if not basis:
        raise RuntimeError("empty kernel: truncation bug, the system is underdetermined by construction")
    v = basis[0]
    polys = []
    pos = 0
    for nj in weights:
        polys.append(Polynomial(v[pos: pos + nj + 1]))
        pos += nj + 1
    return polys
