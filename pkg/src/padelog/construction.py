"""Explicit simultaneous Pade systems for (1, log(1+z), ..., log^(m-1)(1+z)).

For base weight n and family index i in 1..m, set
Q(x) = [prod_{h=0}^{n} (x-h)^m] * (x-n-1)^i. The partial fractions of
1/Q give a table a[h][j]; resumming column j+1 in the basis (1+z)^h and
dividing by j! yields polynomials A[i][j] such that

    R_i(z) = sum_j A[i][j](z) * log^j(1+z)

vanishes to order m(n+1)+i-1 exactly with leading coefficient
1/(m(n+1)+i-1)!. The m x m polynomial matrix A[i][j] has determinant
gamma * z^((n+1)m) with gamma != 0, which is what makes the families a
basis of small linear forms.

Two independent routes compute the tables: a cleared-denominator linear
system (primary) and truncated local expansions at each pole (oracle).
They are cross-checked in the test suite and the verify CLI mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .series import (
    Polynomial,
    RationalMatrix,
    TruncatedSeries,
    coefficient_matrix,
    log_power_series,
    nullspace,
    pade_from_kernel,
    rank,
)

_ZERO = Fraction(0)

REMAINDER_GUARD = 4  # extra truncated terms beyond the largest certified order


class ConstructionError(RuntimeError):
    pass


class OrderDefectError(ConstructionError):
    """A remainder failed its exact vanishing-order contract."""


class DeterminantError(ConstructionError):
    """The family determinant is not a nonzero monomial of the right degree."""


@dataclass(frozen=True)
class ConstructionParams:
    """Problem size: m series (1 and m-1 log powers), base weight n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("need m >= 2")
        if self.n < 0:
            raise ValueError("need n >= 0")

    def family_order(self, i: int) -> int:
        """Exact vanishing order of R_i: m(n+1)+i-1."""
        self._check_family(i)
        return self.m * (self.n + 1) + i - 1

    def weight_vector(self, i: int) -> tuple:
        """Degree caps for family i: n+1 on the first i coordinates, n after."""
        self._check_family(i)
        return tuple(self.n + 1 if j < i else self.n for j in range(self.m))

    def pole_order(self, i: int, h: int) -> int:
        """Multiplicity of the pole of 1/Q at x = h (0 <= h <= n+1)."""
        self._check_family(i)
        if not 0 <= h <= self.n + 1:
            raise ValueError("pole index out of range")
        return self.m if h <= self.n else i

    def _check_family(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise ValueError("family index must be in 1..m")


@dataclass(frozen=True)
class PartialFractionTable:
    """Coefficients a[h][j] of 1/Q = sum_{h,j} a[h][j] / (x-h)^j.

    Stored zero-padded: values[h] has m entries, entry j-1 belongs to the
    pole power j; powers above the pole order are zero.
    """

    family_index: int
    values: tuple  # values[h][j-1], h in 0..n+1

    def value(self, h: int, j: int) -> Fraction:
        return self.values[h][j - 1]


def q_polynomial(params: ConstructionParams, i: int) -> Polynomial:
    """Q(x) = [prod_{h=0}^{n} (x-h)^m] (x-n-1)^i."""
    params._check_family(i)
    q = Polynomial([1])
    for h in range(params.n + 1):
        factor = Polynomial([-h, 1])
        for _ in range(params.m):
            q = q * factor
    top = Polynomial([-(params.n + 1), 1])
    for _ in range(i):
        q = q * top
    return q


def _pole_orders(params: ConstructionParams, i: int) -> list:
    return [params.pole_order(i, h) for h in range(params.n + 2)]


def partial_fractions(params: ConstructionParams, i: int) -> PartialFractionTable:
    """Partial-fraction table of 1/Q via the cleared-denominator system.

    Multiplying the ansatz by Q turns it into the polynomial identity
    sum_{h,j} a[h][j] * Q/(x-h)^j = 1, one exact linear equation per
    coefficient of x^0..x^(deg Q - 1).
    """
    orders = _pole_orders(params, i)
    q = q_polynomial(params, i)
    deg = q.degree

    # cofactor polynomials Q/(x-h)^j, unknowns ordered by (h, j)
    columns = []
    for h, order in enumerate(orders):
        base = Polynomial([1])
        for hh, oo in enumerate(orders):
            if hh == h:
                continue
            factor = Polynomial([-hh, 1])
            for _ in range(oo):
                base = base * factor
        shifted = base
        for j in range(order, 0, -1):
            columns.append(shifted)  # j = order first, see reorder below
            shifted = shifted * Polynomial([-h, 1])
        # columns for this pole were appended j = order..1; flip to j = 1..order
        tail = columns[-order:]
        columns[-order:] = tail[::-1]

    # augmented homogeneous system: [M | -rhs] * (a; 1) = 0
    rows = []
    for t in range(deg):
        row = [col.coefficient(t) for col in columns]
        row.append(Fraction(-1) if t == 0 else _ZERO)
        rows.append(row)
    basis = nullspace(RationalMatrix.from_rows(rows))
    solutions = [v for v in basis if v[-1] != 0]
    if len(basis) != 1 or not solutions:
        raise ConstructionError("partial-fraction system is singular")
    v = solutions[0]
    scale = v[-1]
    flat = [c / scale for c in v[:-1]]

    values = []
    pos = 0
    for order in orders:
        row = flat[pos: pos + order] + [_ZERO] * (params.m - order)
        values.append(tuple(row))
        pos += order
    return PartialFractionTable(family_index=i, values=tuple(values))


def _inverse_power_series(exponent: int, c: Fraction, T: int) -> TruncatedSeries:
    """(1 + c*u)^(-exponent) truncated at u^T, exponent >= 1."""
    coeffs = [
        Fraction(math.comb(exponent + k - 1, k)) * (-c) ** k for k in range(T + 1)
    ]
    return TruncatedSeries(coeffs, T)


def partial_fractions_local(params: ConstructionParams, i: int) -> PartialFractionTable:
    """Independent route: Laurent data of 1/Q at each pole.

    Writing x = lam + u and factoring Q(lam + u) leaves an explicit
    prefactor times a product of (1 + c*u)^(-e) series whose low-order
    coefficients are exactly the a[lam][j].
    """
    m, n = params.m, params.n
    params._check_family(i)
    values = []
    for lam in range(n + 2):
        row = [_ZERO] * m
        if lam <= n:
            T = m - 1
            g = TruncatedSeries([1], T)
            for delta in range(1, lam + 1):
                g = g * _inverse_power_series(m, Fraction(1, delta), T)
            for nu in range(1, n - lam + 1):
                g = g * _inverse_power_series(m, Fraction(-1, nu), T)
            g = g * _inverse_power_series(i, Fraction(-1, n + 1 - lam), T)
            pref = Fraction(
                (-1) ** ((n - lam) * m + i),
                math.factorial(lam) ** m
                * math.factorial(n - lam) ** m
                * (n + 1 - lam) ** i,
            )
            for j in range(1, m + 1):
                row[j - 1] = pref * g.coefficient(m - j)
        else:
            T = i - 1
            g = TruncatedSeries([1], T)
            for delta in range(1, n + 2):
                g = g * _inverse_power_series(m, Fraction(1, delta), T)
            pref = Fraction(1, math.factorial(n + 1) ** m)
            for j in range(1, i + 1):
                row[j - 1] = pref * g.coefficient(i - j)
        values.append(tuple(row))
    return PartialFractionTable(family_index=i, values=tuple(values))


def reconstructs_unity(params: ConstructionParams, table: PartialFractionTable) -> bool:
    """Check sum_{h,j} a[h][j] * Q/(x-h)^j == 1 as polynomials."""
    i = table.family_index
    orders = _pole_orders(params, i)
    acc = Polynomial([-1])
    for h, order in enumerate(orders):
        base = Polynomial([1])
        for hh, oo in enumerate(orders):
            if hh == h:
                continue
            factor = Polynomial([-hh, 1])
            for _ in range(oo):
                base = base * factor
        shifted = base
        for j in range(order, 0, -1):
            a = table.value(h, j)
            if a != 0:
                acc = acc + a * shifted
            shifted = shifted * Polynomial([-h, 1])
    return acc.is_zero()


@dataclass(frozen=True)
class PadeSystem:
    """All m families for one (m, n): tables, polynomials, remainders."""

    params: ConstructionParams
    tables: tuple  # PartialFractionTable, index i-1
    polys: tuple  # polys[i-1][j], Polynomial, 1<=i<=m, 0<=j<=m-1
    remainders: tuple  # TruncatedSeries, index i-1
    truncation_order: int

    def poly(self, i: int, j: int) -> Polynomial:
        return self.polys[i - 1][j]

    def remainder(self, i: int) -> TruncatedSeries:
        return self.remainders[i - 1]

    def table(self, i: int) -> PartialFractionTable:
        return self.tables[i - 1]


def build_system(
    params: ConstructionParams,
    validate: bool = True,
    perturb: Optional[tuple] = None,
) -> PadeSystem:
    """Construct all m families for (m, n).

    `perturb`, a test-only hook, adds a given rational to one table entry
    (family i, pole h, power j) before the polynomials are formed, so
    downstream checks must fail: perturb = (i, h, j, delta).

    With validate=True an order defect raises OrderDefectError; callers
    that want to record failures instead pass validate=False and check
    via order/degree/determinant predicates.
    """
    m, n = params.m, params.n
    tables = []
    for i in range(1, m + 1):
        table = partial_fractions(params, i)
        if perturb is not None and perturb[0] == i:
            _, h, j, delta = perturb
            rows = [list(r) for r in table.values]
            rows[h][j - 1] += delta
            table = PartialFractionTable(i, tuple(tuple(r) for r in rows))
        tables.append(table)

    T = m * (n + 1) + m + REMAINDER_GUARD
    one_plus_z = [Polynomial([1])]
    for _ in range(n + 1):
        one_plus_z.append(one_plus_z[-1] * Polynomial([1, 1]))

    logs = [log_power_series(j, T) for j in range(m)]
    all_polys = []
    remainders = []
    for i in range(1, m + 1):
        table = tables[i - 1]
        family = []
        for j in range(m):
            acc = Polynomial()
            for h in range(n + 2):
                a = table.value(h, j + 1)
                if a != 0:
                    acc = acc + a * one_plus_z[h]
            family.append(acc * Fraction(1, math.factorial(j)))
        all_polys.append(tuple(family))

        rem = TruncatedSeries([0], T)
        for j in range(m):
            rem = rem + TruncatedSeries.from_polynomial(family[j], T) * logs[j]
        remainders.append(rem)

        if validate:
            want = params.family_order(i)
            if rem.order() != want or rem.coefficient(want) != Fraction(
                1, math.factorial(want)
            ):
                raise OrderDefectError(
                    f"order defect in family i={i} at (m={m}, n={n})")

    return PadeSystem(
        params=params,
        tables=tuple(tables),
        polys=tuple(all_polys),
        remainders=tuple(remainders),
        truncation_order=T,
    )


def order_check(system: PadeSystem, i: int) -> bool:
    """Exact vanishing order and leading coefficient of R_i."""
    want = system.params.family_order(i)
    rem = system.remainder(i)
    return rem.order() == want and rem.coefficient(want) == Fraction(
        1, math.factorial(want)
    )


def degree_check(system: PadeSystem) -> bool:
    """Degree caps hold and the incremented coordinate attains n+1."""
    params = system.params
    for i in range(1, params.m + 1):
        caps = params.weight_vector(i)
        for j in range(params.m):
            if system.poly(i, j).degree > caps[j]:
                return False
        if system.poly(i, i - 1).degree != params.n + 1:
            return False
    return True


def _det_cofactor(rows: list) -> Polynomial:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    acc = Polynomial()
    sign = 1
    for c in range(k):
        top = rows[0][c]
        if not top.is_zero():
            minor = [[row[cc] for cc in range(k) if cc != c] for row in rows[1:]]
            term = top * _det_cofactor(minor)
            acc = acc + (term if sign > 0 else -term)
        sign = -sign
    return acc


def _det_bareiss(rows: list) -> Polynomial:
    k = len(rows)
    rows = [list(r) for r in rows]
    sign = 1
    prev = Polynomial([1])
    for r in range(k - 1):
        if rows[r][r].is_zero():
            swap = next(
                (x for x in range(r + 1, k) if not rows[x][r].is_zero()), None)
            if swap is None:
                return Polynomial()
            rows[r], rows[swap] = rows[swap], rows[r]
            sign = -sign
        for x in range(r + 1, k):
            for y in range(r + 1, k):
                num = rows[r][r] * rows[x][y] - rows[x][r] * rows[r][y]
                rows[x][y] = num.divexact(prev)
            rows[x][r] = Polynomial()
        prev = rows[r][r]
    det = rows[k - 1][k - 1]
    return det if sign > 0 else -det


def determinant(system: PadeSystem) -> tuple:
    """det(A[i][j]) asserted to be gamma * z^((n+1)m); returns (gamma, (n+1)m).

    Cofactor expansion for m <= 4, fraction-free elimination above.
    """
    params = system.params
    rows = [[system.poly(i, j) for j in range(params.m)]
            for i in range(1, params.m + 1)]
    det = _det_cofactor(rows) if params.m <= 4 else _det_bareiss(rows)
    exponent = (params.n + 1) * params.m
    if det.is_zero() or det.coefficient(exponent) == 0:
        raise DeterminantError("gamma zero")
    if det.degree != exponent or any(
        det.coefficient(k) != 0 for k in range(exponent)
    ):
        raise DeterminantError("not a monomial")
    return det.coefficient(exponent), exponent


def normality_check(f: Sequence[TruncatedSeries], weights: Sequence[int]) -> bool:
    """True iff the square coefficient matrix through order N-1 is invertible."""
    N = sum(w + 1 for w in weights)
    return rank(coefficient_matrix(f, weights, N - 1)) == N


def kernel_family(params: ConstructionParams, i: int) -> list:
    """Kernel-route approximants for the weight vector of family i (oracle)."""
    weights = params.weight_vector(i)
    N = sum(w + 1 for w in weights)
    T = N - 1 + REMAINDER_GUARD
    f = tuple(log_power_series(j, T) for j in range(params.m))
    return pade_from_kernel(f, weights)


def proportional(family_a: Sequence[Polynomial], family_b: Sequence[Polynomial]) -> bool:
    """True iff family_a = scalar * family_b with one global nonzero scalar."""
    scale = None
    for pa, pb in zip(family_a, family_b):
        if pa.is_zero() != pb.is_zero():
            return False
        if pa.is_zero():
            continue
        if pa.degree != pb.degree:
            return False
        if scale is None:
            scale = pa.coeffs[-1] / pb.coeffs[-1]
            if scale == 0:
                return False
        if [c * scale for c in pb.coeffs] != pa.coeffs:
            return False
    return scale is not None
