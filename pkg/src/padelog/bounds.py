"""Quantitative bounds and effective linear-independence constants.

Contents:

* lcm growth: exact d_n = lcm(1..n) and its analytic envelope
  exp(n - g(n)) <= d_n <= exp(n + g(n)) with
  g(n) = n sqrt(log n) exp(-sqrt(log n / R)), R = 515/(sqrt546 - sqrt322)^2.
* integrality scalers d_{n+1}^m (n+1)!^m (m-1)! for the approximant data.
* size bounds for the coefficient polynomials (archimedean), the
  remainders (archimedean, saddle-point form), and the scaled remainders
  (p-adic).
* the constants (L, A-script, A, T, T1, nu, delta) of the archimedean
  and p-adic independence criteria, with conservative directed rounding
  (nu rounded up, delta rounded down), and the search for the smallest n
  satisfying the criterion inequalities, which yields the height
  threshold H0 = exp(delta n)/2 and the final exponent nu/delta + eps/2.

Every inequality decision is taken on outward intervals with the
rounding adverse to acceptance; decisions within 2^-32 relative slack
trigger automatic precision doubling (up to 8x the base precision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .directed import (
    DEFAULT_PRECISION,
    DOWN,
    UP,
    DirectedFloat,
    Enclosure,
    log1p_enclosure,
)
from .padics import valuation

# Guard for the admissible-n search. The search brackets by doubling, so
# its cost tracks log2 of the answer, not of the cap; the cap only stops
# a delta barely above zero from spinning forever. Small epsilon pushes
# the answer fast: the envelope-defect inequality alone forces
# log n ~ (log(1/epsilon))^2, about 10^3600 at epsilon = 1e-6.
SEARCH_CAP = 10 ** 100_000
_THIN_MARGIN_BITS = 32
_MAX_ESCALATION = 8


class HypothesisError(ValueError):
    """An input violates a stated hypothesis of a bound or criterion."""


def lcm_upto(n: int) -> int:
    """Exact lcm(1..n)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return math.lcm(*range(1, n + 1))


def lcm_sequence(n_max: int) -> list:
    """[lcm(1..1), ..., lcm(1..n_max)] built incrementally."""
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    out = [1]
    for k in range(2, n_max + 1):
        out.append(math.lcm(out[-1], k))
    return out


def _defect_enclosure(n: int, precision_bits: int) -> Enclosure:
    """sqrt(log n) * exp((sqrt322 - sqrt546) sqrt(log n) / sqrt515).

    This is the n-dependent factor of both the envelope gap g(n)/n and
    the first criterion inequality; the argument of exp equals
    -sqrt(log n / R).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    root = Enclosure.from_exact(n, precision_bits).log().sqrt()
    coeff = (
        Enclosure.from_exact(322, precision_bits).sqrt()
        - Enclosure.from_exact(546, precision_bits).sqrt()
    ) / Enclosure.from_exact(515, precision_bits).sqrt()
    return root * (coeff * root).exp()


def rosser_schoenfeld_envelope(
    n: int, precision_bits: int = DEFAULT_PRECISION
) -> tuple:
    """(exp(n - g(n)) rounded down, exp(n + g(n)) rounded up)."""
    if n < 2:
        raise ValueError("need n >= 2")
    g = Enclosure.from_exact(n, precision_bits) * _defect_enclosure(n, precision_bits)
    lower = (Enclosure.from_exact(n, precision_bits) - g).exp().lower
    upper = (Enclosure.from_exact(n, precision_bits) + g).exp().upper
    return lower, upper


def table_scaler(m: int, n: int) -> int:
    """d_{n+1}^m (n+1)!^m; clears every partial-fraction table entry."""
    if m < 2 or n < 0:
        raise ValueError("need m >= 2, n >= 0")
    return lcm_upto(n + 1) ** m * math.factorial(n + 1) ** m


def integrality_scaler(m: int, n: int) -> int:
    """d_{n+1}^m (n+1)!^m (m-1)!; multiply by den(alpha)^(n+1) for values."""
    return table_scaler(m, n) * math.factorial(m - 1)


def coeff_bound(
    m: int,
    n: int,
    abs_alpha: Fraction,
    precision_bits: int = DEFAULT_PRECISION,
) -> DirectedFloat:
    """Upper bound for |A[i][j](alpha)|:
    2^m (1+|a|)/|a| * (n+1)^m ((1+|a|) 2^m)^(n+1) / n!^m, rounded up.
    """
    if abs_alpha <= 0:
        raise ValueError("need |alpha| > 0")
    a = Fraction(abs_alpha)
    exact = (
        Fraction(2 ** m) * (1 + a) / a
        * Fraction(n + 1) ** m
        * ((1 + a) * 2 ** m) ** (n + 1)
        / Fraction(math.factorial(n)) ** m
    )
    return DirectedFloat.from_exact(exact, UP, precision_bits)


def remainder_bound_arch(m: int, n: int, log_abs: Enclosure) -> DirectedFloat:
    """Saddle-point upper bound for |R_i(alpha)|, any i, rounded up.

    With L = |log(1+alpha)| and s = sqrt(1+4L):
    exp(2L/(1+s)) * [exp(m(1+s)/2 + 2L/(1+s)) (L/m)^m]^(n+1) * (n+1)^(-m(n+1)).
    Requires m/L >= 2, certified on the interval; the enclosure's
    precision governs the result's.
    """
    L = log_abs
    if L.lo <= 0:
        raise ValueError("need a positive enclosure for |log(1+alpha)|")
    if not 2 * L.hi <= m:
        raise HypothesisError("hypothesis violated: need m/|log(1+alpha)| >= 2")
    one = Enclosure.from_exact(1, L.precision_bits)
    s = (one + 4 * L).sqrt()
    edge = 2 * L / (one + s)
    inner = (m * (one + s) / 2 + edge).exp() * (L / m).pow_int(m)
    tail = Fraction(1, (n + 1) ** (m * (n + 1)))
    return (edge.exp() * inner.pow_int(n + 1) * tail).upper


def remainder_bound_padic_exact(m: int, n: int, p: int, v: int) -> Fraction:
    """(m(n+1)+m-2)^(m-1) * p^(-v(m(n+1)-1)) as an exact rational."""
    return Fraction(
        (m * (n + 1) + m - 2) ** (m - 1), p ** (v * (m * (n + 1) - 1))
    )


def padic_threshold_holds(m: int, n: int, p: int, v: int,
                          precision_bits: int = DEFAULT_PRECISION) -> bool:
    """Certified check of 1/log(p^v) + 1/m <= n (natural log)."""
    lhs = 1 / (v * Enclosure.from_exact(p, precision_bits).log()) + Fraction(1, m)
    return lhs.hi <= n


def remainder_bound_padic(
    m: int,
    n: int,
    p: int,
    v: int,
    enforce_threshold: bool = True,
    precision_bits: int = DEFAULT_PRECISION,
) -> DirectedFloat:
    """p-adic bound for the scaled remainders, rounded up.

    Valid for n >= 1/(v log p) + 1/m; below that the formula is returned
    only with enforce_threshold=False (diagnostic use).
    """
    if v < 1:
        raise HypothesisError("p-adic smallness violated: need v_p(alpha) >= 1")
    if n < 1:
        raise ValueError("need n >= 1")
    if enforce_threshold and not padic_threshold_holds(m, n, p, v, precision_bits):
        raise HypothesisError("n too small: need n >= 1/(v log p) + 1/m")
    return DirectedFloat.from_exact(
        remainder_bound_padic_exact(m, n, p, v), UP, precision_bits)


@dataclass(frozen=True)
class AlphaInput:
    """Rational alpha = c/d in lowest terms, nonzero, != -1."""

    c: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need d >= 1")
        if self.c == 0:
            raise ValueError("alpha must be nonzero")
        if math.gcd(abs(self.c), self.d) != 1:
            raise ValueError("c/d must be in lowest terms")
        if self.c == -self.d:
            raise ValueError("alpha must not be -1")

    @classmethod
    def parse(cls, text: str) -> "AlphaInput":
        frac = Fraction(text.strip())
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def from_fraction(cls, x: Fraction) -> "AlphaInput":
        return cls(x.numerator, x.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.c, self.d)

    @property
    def abs_fraction(self) -> Fraction:
        return Fraction(abs(self.c), self.d)

    @property
    def den(self) -> int:
        return self.d

    @property
    def height(self) -> int:
        return max(abs(self.c), self.d)

    def __str__(self) -> str:
        return f"{self.c}/{self.d}"


def _growth_enclosure(m: int, alpha: AlphaInput, precision_bits: int) -> Enclosure:
    """A-script = m(1+log 2) + log den + log(1+|alpha|)."""
    log2 = Enclosure.from_exact(2, precision_bits).log()
    out = m * (1 + log2)
    out = out + Enclosure.from_exact(alpha.den, precision_bits).log()
    return out + log1p_enclosure(alpha.abs_fraction, precision_bits)


@dataclass(frozen=True)
class MeasureConstants:
    """Archimedean criterion constants for (m, alpha), K = Q specialization.

    Enclosures are kept for searching; the DirectedFloat views expose the
    contracted one-sided bounds (nu up, delta down).
    """

    m: int
    alpha: AlphaInput
    precision_bits: int
    variant: str  # "statement" (canonical) or "proof"
    log_abs: Enclosure  # L = |log(1+alpha)|
    growth: Enclosure  # A-script
    decay: Enclosure  # A
    prefactor_t: Enclosure  # T
    prefactor_t1: Enclosure  # T1 (exact rational)
    nu_enc: Enclosure
    delta_enc: Enclosure

    @property
    def poly_power(self) -> Fraction:
        """Power of n multiplying T in the second criterion inequality."""
        return Fraction(self.m, 2)

    @property
    def L(self) -> DirectedFloat:
        return self.log_abs.upper

    @property
    def cal_a(self) -> DirectedFloat:
        return self.growth.upper

    @property
    def a_decay(self) -> DirectedFloat:
        return self.decay.lower

    @property
    def t(self) -> DirectedFloat:
        return self.prefactor_t.upper

    @property
    def t1(self) -> DirectedFloat:
        return self.prefactor_t1.upper

    @property
    def nu(self) -> DirectedFloat:
        return self.nu_enc.upper

    @property
    def delta(self) -> DirectedFloat:
        return self.delta_enc.lower

    @property
    def applicable(self) -> bool:
        """True iff delta > 0 is certified (criterion applies)."""
        return self.delta_enc.lo > 0

    @property
    def delta_sign(self) -> int:
        if self.delta_enc.lo > 0:
            return 1
        if self.delta_enc.hi < 0:
            return -1
        return 0

    def exponent(self, epsilon: Fraction) -> DirectedFloat:
        """mu(eps) = nu/delta + eps/2, rounded up; needs delta > 0."""
        if not self.applicable:
            raise HypothesisError("criterion inapplicable: delta <= 0")
        return (self.nu_enc / self.delta_enc + Fraction(epsilon) / 2).upper

    def eps_tilde(self, epsilon: Fraction) -> Enclosure:
        """eps~ = eps delta^2 / (2 nu + eps delta)."""
        if not self.applicable:
            raise HypothesisError("criterion inapplicable: delta <= 0")
        eps = Fraction(epsilon)
        return (eps * self.delta_enc.pow_int(2)) / (
            2 * self.nu_enc + eps * self.delta_enc)


def constants_arch(
    m: int,
    alpha: AlphaInput,
    precision_bits: int = DEFAULT_PRECISION,
    variant: str = "statement",
) -> MeasureConstants:
    """Criterion constants for rational alpha (archimedean place).

    variant="statement" uses A = m log(m/L) (the citable form);
    variant="proof" uses A = (m/2) log(m/L) (the form the derivation
    actually supports). Both are exposed; nothing is guessed.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if variant not in ("statement", "proof"):
        raise ValueError("variant must be 'statement' or 'proof'")
    pb = precision_bits
    L = log1p_enclosure(alpha.fraction, pb).abs()
    if L.lo <= 0:
        raise ArithmeticError("cannot certify L > 0, raise the precision")
    if not 4 * L.hi <= m:
        raise HypothesisError("hypothesis violated: need m/|log(1+alpha)| >= 4")

    one = Enclosure.from_exact(1, pb)
    s = (one + 4 * L).sqrt()
    edge = 2 * L / (one + s)

    growth = _growth_enclosure(m, alpha, pb)
    factor = Fraction(m) if variant == "statement" else Fraction(m, 2)
    decay = (
        factor * (Enclosure.from_exact(m, pb) / L).log()
        - (m * (one + s) / 2 + edge)
        - Enclosure.from_exact(alpha.den, pb).log()
    )
    prefactor_t = edge.exp() * math.factorial(m - 1)
    t1_exact = (Fraction(2 ** m) * (1 + alpha.abs_fraction)
                * math.factorial(m - 1) / alpha.abs_fraction)
    nu_enc = decay + growth
    delta_enc = decay - (m - 2) * growth
    return MeasureConstants(
        m=m,
        alpha=alpha,
        precision_bits=pb,
        variant=variant,
        log_abs=L,
        growth=growth,
        decay=decay,
        prefactor_t=prefactor_t,
        prefactor_t1=Enclosure.from_exact(t1_exact, pb),
        nu_enc=nu_enc,
        delta_enc=delta_enc,
    )


@dataclass(frozen=True)
class PAdicConstants:
    """p-adic criterion constants for (m, alpha, p), K = Q specialization."""

    m: int
    alpha: AlphaInput
    p: int
    v: int  # v_p(alpha) >= 1
    precision_bits: int
    growth: Enclosure  # A-script (archimedean growth of the same alpha)
    a_p: Enclosure  # A_p = m v log p
    nu_enc: Enclosure  # nu_p = A_p
    delta_enc: Enclosure  # delta_p = A_p - (m-1) A-script
    prefactor_t1: Enclosure

    @property
    def t_p(self) -> int:
        """T_p = (2m)^(m-1) p^v exactly."""
        return (2 * self.m) ** (self.m - 1) * self.p ** self.v

    @property
    def c_p(self) -> int:
        return self.m - 1

    @property
    def cal_a(self) -> DirectedFloat:
        return self.growth.upper

    @property
    def nu(self) -> DirectedFloat:
        return self.nu_enc.upper

    @property
    def delta(self) -> DirectedFloat:
        return self.delta_enc.lower

    @property
    def applicable(self) -> bool:
        return self.delta_enc.lo > 0

    @property
    def delta_sign(self) -> int:
        if self.delta_enc.lo > 0:
            return 1
        if self.delta_enc.hi < 0:
            return -1
        return 0

    def exponent(self, epsilon: Fraction) -> DirectedFloat:
        if not self.applicable:
            raise HypothesisError("criterion inapplicable: delta_p <= 0")
        return (self.nu_enc / self.delta_enc + Fraction(epsilon) / 2).upper

    def eps_tilde(self, epsilon: Fraction) -> Enclosure:
        if not self.applicable:
            raise HypothesisError("criterion inapplicable: delta_p <= 0")
        eps = Fraction(epsilon)
        return (eps * self.delta_enc.pow_int(2)) / (
            2 * self.nu_enc + eps * self.delta_enc)


def constants_padic(
    m: int,
    alpha: AlphaInput,
    p: int,
    precision_bits: int = DEFAULT_PRECISION,
) -> PAdicConstants:
    if m < 2:
        raise ValueError("need m >= 2")
    if p < 2:
        raise ValueError("p must be a prime")
    v = valuation(alpha.c, p) - valuation(alpha.d, p)
    if v < 1:
        raise HypothesisError("p-adic smallness violated: need v_p(alpha) >= 1")
    pb = precision_bits
    growth = _growth_enclosure(m, alpha, pb)
    a_p = m * v * Enclosure.from_exact(p, pb).log()
    t1_exact = (Fraction(2 ** m) * (1 + alpha.abs_fraction)
                * math.factorial(m - 1) / alpha.abs_fraction)
    return PAdicConstants(
        m=m,
        alpha=alpha,
        p=p,
        v=v,
        precision_bits=pb,
        growth=growth,
        a_p=a_p,
        nu_enc=a_p,
        delta_enc=a_p - (m - 1) * growth,
        prefactor_t1=Enclosure.from_exact(t1_exact, pb),
    )


@dataclass(frozen=True)
class AdmissibleResult:
    """Outcome of the smallest-admissible-n search."""

    kind: str  # "arch" or "padic"
    n_star: int
    h0: DirectedFloat  # (1/2) exp(delta n*), rounded up (may saturate to +inf)
    log_h0: DirectedFloat  # delta n* - log 2, rounded up (always finite)
    exponent: DirectedFloat  # nu/delta + eps/2, rounded up
    eps_tilde_hi: DirectedFloat
    eps_tilde_lo: DirectedFloat
    epsilon: Fraction
    predecessor_fails: bool  # minimality re-check result


def _thin(lhs_hi, rhs_lo) -> bool:
    # escalation heuristic only; verdicts always compare the mpfr
    # endpoints exactly
    gap = abs(lhs_hi - rhs_lo)
    scale = max(abs(lhs_hi), abs(rhs_lo))
    if scale == 0:
        return False
    return gap <= scale * (2.0 ** -_THIN_MARGIN_BITS)


class _ConditionSet:
    """Criterion inequalities as certified predicates of n.

    Rebuilds the constants at escalated precision when a decision is
    within 2^-32 relative slack; the final verdict uses the adverse
    rounding (upper LHS against lower RHS).
    """

    def __init__(self, rebuild: Callable, epsilon: Fraction, base_bits: int):
        self._rebuild = rebuild
        self._eps = Fraction(epsilon)
        self._base_bits = base_bits
        self._cache = {}

    def _constants(self, bits: int):
        if bits not in self._cache:
            self._cache[bits] = self._rebuild(bits)
        return self._cache[bits]

    def conditions(self, consts, n: int) -> list:
        raise NotImplementedError

    def holds(self, n: int) -> bool:
        bits = self._base_bits
        while True:
            consts = self._constants(bits)
            verdicts = []
            thin = False
            for lhs, rhs, strict in self.conditions(consts, n):
                ok = lhs.hi < rhs.lo if strict else lhs.hi <= rhs.lo
                verdicts.append(ok)
                if _thin(lhs.hi, rhs.lo):
                    thin = True
            if not thin or bits >= self._base_bits * _MAX_ESCALATION:
                return all(verdicts)
            bits *= 2


class _ArchConditions(_ConditionSet):
    def conditions(self, consts: MeasureConstants, n: int) -> list:
        eps = self._eps
        pb = consts.precision_bits
        m = consts.m
        defect = _defect_enclosure(n, pb)
        delta2 = consts.delta_enc.pow_int(2)
        mix = 2 * consts.nu_enc + eps * consts.delta_enc
        c1_lhs = m * defect
        c1_rhs = (eps * delta2) / (2 * (m - 1) * mix)
        log_n = Enclosure.from_exact(n, pb).log()
        c2_lhs = (
            consts.prefactor_t.log()
            + consts.poly_power * log_n
            + Enclosure.from_exact(math.factorial(m), pb).log()
            + (m - 1) * consts.prefactor_t1.log()
            + (2 * m * (m - 1)) * log_n
        )
        c2_rhs = (eps * delta2 * n) / (4 * mix)
        return [(c1_lhs, c1_rhs, True), (c2_lhs, c2_rhs, False)]


class _PAdicConditions(_ConditionSet):
    def conditions(self, consts: PAdicConstants, n: int) -> list:
        eps = self._eps
        pb = consts.precision_bits
        m = consts.m
        defect = _defect_enclosure(n, pb)
        delta2 = consts.delta_enc.pow_int(2)
        mix = 2 * consts.nu_enc + eps * consts.delta_enc
        c1_lhs = 1 / (consts.v * Enclosure.from_exact(consts.p, pb).log()) \
            + Fraction(1, m)
        c1_rhs = Enclosure.from_exact(n, pb)
        c2_lhs = m * n * defect
        c2_rhs = (eps * delta2 * n) / (2 * (m - 1) * mix)
        log_n = Enclosure.from_exact(n, pb).log()
        c3_lhs = (
            Enclosure.from_exact(consts.t_p, pb).log()
            + (m - 1) * log_n
            + Enclosure.from_exact(math.factorial(m), pb).log()
            + (m - 1) * consts.prefactor_t1.log()
            + (2 * m * (m - 1)) * log_n
        )
        c3_rhs = (eps * delta2 * n) / (4 * mix)
        return [(c1_lhs, c1_rhs, False), (c2_lhs, c2_rhs, False),
                (c3_lhs, c3_rhs, False)]


def _condition_set(constants, epsilon: Fraction, kind: str) -> _ConditionSet:
    if kind == "arch":
        rebuild = lambda bits: constants_arch(
            constants.m, constants.alpha, bits, constants.variant)
        conds = _ArchConditions(rebuild, epsilon, constants.precision_bits)
    elif kind == "padic":
        rebuild = lambda bits: constants_padic(
            constants.m, constants.alpha, constants.p, bits)
        conds = _PAdicConditions(rebuild, epsilon, constants.precision_bits)
    else:
        raise ValueError("kind must be 'arch' or 'padic'")
    conds._cache[constants.precision_bits] = constants
    return conds


def _infer_kind(constants) -> str:
    return "padic" if isinstance(constants, PAdicConstants) else "arch"


def admissible_n(
    constants,
    epsilon,
    kind: Optional[str] = None,
    cap: int = SEARCH_CAP,
    linear_scan_limit: int = 64,
) -> AdmissibleResult:
    """Smallest n satisfying every criterion inequality, plus H0 and mu.

    Strategy: short linear scan, then a doubling bracket followed by
    bisection (the acceptance region is empirically an up-set;
    minimality is re-verified explicitly at the end, with a downward
    fallback scan if the boundary is not clean).
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("need epsilon > 0")
    kind = kind or _infer_kind(constants)
    if not constants.applicable:
        raise HypothesisError("criterion inapplicable: delta <= 0")
    conds = _condition_set(constants, eps, kind)

    n_star = None
    for n in range(1, min(linear_scan_limit, cap) + 1):
        if conds.holds(n):
            n_star = n
            break
    if n_star is None:
        lo = min(linear_scan_limit, cap)  # holds(lo) is false
        hi = None
        probe = lo
        while probe < cap:
            probe = min(2 * probe, cap)
            if conds.holds(probe):
                hi = probe
                break
            lo = probe
        if hi is None:
            raise HypothesisError(f"no admissible n below cap 10^"
                                  f"{len(str(cap)) - 1}")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if conds.holds(mid):
                hi = mid
            else:
                lo = mid
        n_star = hi

    # explicit minimality re-check (the search is only a heuristic bracket)
    if not conds.holds(n_star):
        raise HypothesisError("search returned a non-admissible n")
    guard = 0
    while n_star > 1 and conds.holds(n_star - 1):
        n_star -= 1
        guard += 1
        if guard > 100000:
            raise RuntimeError("runaway minimality scan")
    predecessor_fails = n_star == 1 or not conds.holds(n_star - 1)

    pb = constants.precision_bits
    delta_up = constants.delta_enc.upper
    h0 = delta_up.scale_exact(n_star).exp().scale_exact(Fraction(1, 2))
    log2_down = Enclosure.from_exact(2, pb).log().lower
    log_h0 = delta_up.scale_exact(n_star).sub(log2_down)
    tilde = constants.eps_tilde(eps)
    return AdmissibleResult(
        kind=kind,
        n_star=n_star,
        h0=h0,
        log_h0=log_h0,
        exponent=constants.exponent(eps),
        eps_tilde_hi=tilde.upper,
        eps_tilde_lo=tilde.lower,
        epsilon=eps,
        predecessor_fails=predecessor_fails,
    )


def admissibility_is_monotone(constants, epsilon, start: int, count: int,
                              kind: Optional[str] = None) -> bool:
    """Empirical check that acceptance at n implies acceptance at n+1
    on the window [start, start+count]."""
    conds = _condition_set(constants, Fraction(epsilon),
                           kind or _infer_kind(constants))
    prev = None
    for n in range(start, start + count + 1):
        cur = conds.holds(n)
        if prev and not cur:
            return False
        prev = cur
    return True
