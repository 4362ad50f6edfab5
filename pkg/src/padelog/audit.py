"""Verification suites, linear-form evaluation, and box audits.

Three kinds of run: `verify_suite` re-checks every exact identity of the
construction on a desk-scale grid; `dn_suite` brackets the lcm sequence
by its analytic envelope; `exhaustive_audit` walks every integer vector
of bounded height, evaluates |sum_i b_i log^i(1+alpha)| rigorously
(archimedean or p-adic), and compares the observations against the
criterion's formula floor.

The theorems guarantee their floor only for heights above H0, which is
astronomically large for every worked instance, so the box comparisons
are diagnostics: rows report margins, never refutations. H0 is computed
and reported alongside.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import (
    AlphaInput,
    HypothesisError,
    admissible_n,
    coeff_bound,
    constants_arch,
    constants_padic,
    integrality_scaler,
    lcm_sequence,
    remainder_bound_arch,
    rosser_schoenfeld_envelope,
    table_scaler,
)
from .construction import (
    ConstructionError,
    ConstructionParams,
    build_system,
    degree_check,
    determinant,
    kernel_family,
    partial_fractions_local,
    proportional,
    reconstructs_unity,
)
from .directed import DEFAULT_PRECISION, Enclosure, log1p_enclosure
from .padics import (
    MAX_DIGITS,
    PrecisionExhausted,
    padic_from_fraction,
    padic_linear_form,
    padic_log_powers,
    valuation,
)
from .report import (
    FAIL,
    IMPRECISE,
    INFO,
    PASS,
    AuditReport,
    CheckRecord,
    directed_float_dict,
    enclosure_dict,
    fraction_str,
)

BOX_CAP = 10**8  # on (2H+1)^m
ROW_CAP = 200_000  # on emitted rows, keeps reports reviewable
_EVAL_ESCALATIONS = 8
_NW_CONSTANT = 105500

VERIFY_ALPHAS = (
    AlphaInput(1, 10),
    AlphaInput(-1, 10),
    AlphaInput(3, 7),
)

MODES = ("construct", "verify", "constants", "audit", "padic-audit", "dn")


@dataclass(frozen=True)
class AuditConfig:
    """One CLI invocation's worth of settings."""

    mode: str
    m: int = 2
    alpha: Optional[AlphaInput] = None
    p: Optional[int] = None
    epsilon: Fraction = Fraction(1)
    height_max: int = 10
    precision_bits: int = DEFAULT_PRECISION
    n: int = 0
    n_max: int = 8
    output_path: Optional[str] = None
    variant: str = "statement"
    inject_fault: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.height_max < 1:
            raise ValueError("need height_max >= 1")
        if self.m < 2:
            raise ValueError("need m >= 2")
        if self.epsilon <= 0:
            raise ValueError("need epsilon > 0")
        if self.mode == "padic-audit" and self.p is None:
            raise ValueError("padic-audit needs p")
        if self.p is not None:
            if self.mode not in ("padic-audit", "constants"):
                raise ValueError("p only applies to padic-audit and constants")
            if self.p < 2:
                raise ValueError("need p >= 2")
        if self.mode in ("constants", "audit", "padic-audit") and self.alpha is None:
            raise ValueError(f"mode {self.mode} needs alpha")

    def echo(self) -> dict:
        out = {
            "mode": self.mode,
            "m": self.m,
            "epsilon": fraction_str(self.epsilon),
            "height_max": self.height_max,
            "precision_bits": self.precision_bits,
            "n": self.n,
            "n_max": self.n_max,
            "variant": self.variant,
        }
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.p is not None:
            out["p"] = self.p
        if self.inject_fault:
            out["inject_fault"] = True
        return out


# -- rigorous linear-form evaluation ------------------------------------------

def eval_linear_form_arch(
    coeffs: Sequence,
    alpha: Fraction,
    precision_bits: int = DEFAULT_PRECISION,
):
    """Outward interval for |sum_i coeffs[i] log^i(1+alpha)|.

    Coefficients may be ints or Fractions. Precision escalates (doubling,
    capped) until the interval excludes zero and its relative width drops
    under 2^(-precision_bits/2); if the cap is hit first the wide interval
    is returned with status "imprecise". The interval is always valid.
    """
    exact = [Fraction(c) for c in coeffs]
    if not exact or all(c == 0 for c in exact):
        raise ValueError("need a nonzero coefficient vector")
    target = 2.0 ** -(precision_bits // 2)
    result = None
    for level in range(_EVAL_ESCALATIONS + 1):
        bits = precision_bits << level
        L = log1p_enclosure(alpha, bits)
        acc = Enclosure.from_exact(exact[-1], bits)
        for c in reversed(exact[:-1]):
            acc = acc * L + c
        result = acc.abs()
        if not result.contains_zero() and result.rel_width() <= target:
            return result, "ok"
    return result, "imprecise"


def eval_remainder_arch(system, i: int, alpha: Fraction,
                        precision_bits: int = DEFAULT_PRECISION):
    """|R_i(alpha)| = |sum_j A_ij(alpha) log^j(1+alpha)| as an interval."""
    coeffs = [system.poly(i, j)(alpha) for j in range(system.params.m)]
    return eval_linear_form_arch(coeffs, alpha, precision_bits)


class _ArchRowEvaluator:
    """Row evaluation with the log-power table shared across the box."""

    def __init__(self, m: int, alpha: Fraction, precision_bits: int):
        self.m = m
        self.alpha = alpha
        self.base_bits = precision_bits
        self.target = 2.0 ** -(precision_bits // 2)
        self._powers = {}

    def powers(self, level: int) -> list:
        if level not in self._powers:
            bits = self.base_bits << level
            L = log1p_enclosure(self.alpha, bits)
            row = [Enclosure.from_exact(1, bits)]
            for _ in range(self.m - 1):
                row.append(row[-1] * L)
            self._powers[level] = row
        return self._powers[level]

    def eval(self, b: Sequence[int]):
        result = None
        for level in range(_EVAL_ESCALATIONS + 1):
            powers = self.powers(level)
            acc = powers[0] * b[0]
            for coeff, power in zip(b[1:], powers[1:]):
                if coeff:
                    acc = acc + power * coeff
            result = acc.abs()
            if not result.contains_zero() and result.rel_width() <= self.target:
                return result, "ok"
        return result, "imprecise"


def eval_linear_form_padic(
    coeffs: Sequence,
    alpha: Fraction,
    p: int,
    digits: int = 64,
):
    """sum_i coeffs[i] log_p^i(1+alpha) with digit-doubling escalation."""
    exact = [Fraction(c) for c in coeffs]
    if not exact or all(c == 0 for c in exact):
        raise ValueError("need a nonzero coefficient vector")
    working = digits
    while True:
        try:
            a = padic_from_fraction(alpha, p, working + 8)
            powers = padic_log_powers(a, len(exact), working)
            return padic_linear_form(exact, powers, working), "ok"
        except PrecisionExhausted:
            if working >= MAX_DIGITS:
                return None, "imprecise"
            working = min(2 * working, MAX_DIGITS)


class _PAdicRowEvaluator:
    """Row evaluation with the log-power table shared across the box."""

    def __init__(self, m: int, alpha: Fraction, p: int, digits: int = 64):
        self.m = m
        self.alpha = alpha
        self.p = p
        self.base = digits
        self._powers = {}

    def powers(self, digits: int) -> list:
        if digits not in self._powers:
            a = padic_from_fraction(self.alpha, self.p, digits + 8)
            self._powers[digits] = padic_log_powers(a, self.m, digits)
        return self._powers[digits]

    def eval(self, b: Sequence[int]):
        working = self.base
        while True:
            try:
                coeffs = [Fraction(x) for x in b]
                return padic_linear_form(coeffs, self.powers(working),
                                         working), "ok"
            except PrecisionExhausted:
                if working >= MAX_DIGITS:
                    return None, "imprecise"
                working = min(2 * working, MAX_DIGITS)


def padic_remainder_magnitude(system, i: int, alpha: AlphaInput, p: int,
                              digits: int = 64) -> Fraction:
    """|E R_i(alpha)|_p with E the full integrality scaler (den included)."""
    params = system.params
    coeffs = [system.poly(i, j)(alpha.fraction) for j in range(params.m)]
    form, status = eval_linear_form_padic(coeffs, alpha.fraction, p, digits)
    if status != "ok":
        raise PrecisionExhausted(digits)
    scaler = integrality_scaler(params.m, params.n) * alpha.den ** (params.n + 1)
    total = valuation(scaler, p) + form.valuation
    return Fraction(1, p**total) if total >= 0 else Fraction(p**-total)


# -- verification suites --------------------------------------------------------

def _record(report, name, anchor, ok, lhs=None, rhs=None, detail=None):
    report.add(CheckRecord(
        name=name,
        anchor=anchor,
        status=PASS if ok else FAIL,
        lhs=lhs,
        rhs=rhs,
        detail=detail,
    ))


def verify_suite(
    m_values: Sequence[int] = (2, 3),
    n_max: int = 8,
    alphas: Sequence[AlphaInput] = VERIFY_ALPHAS,
    precision_bits: int = DEFAULT_PRECISION,
    inject_fault: bool = False,
    kernel_m_max: int = 3,
    kernel_n_max: int = 5,
) -> AuditReport:
    """One record per exact identity per instance on the grid."""
    report = AuditReport(
        mode="verify",
        config={
            "m_list": list(m_values),
            "n_max": n_max,
            "alphas": [str(a) for a in alphas],
            "precision_bits": precision_bits,
            "inject_fault": bool(inject_fault),
        },
    )
    log_abs = {}
    for alpha in alphas:
        log_abs[alpha] = log1p_enclosure(alpha.fraction, precision_bits).abs()

    for m in m_values:
        for n in range(n_max + 1):
            params = ConstructionParams(m, n)
            perturb = (1, 0, 1, Fraction(1)) if inject_fault else None
            system = build_system(params, validate=False, perturb=perturb)
            tag = f"m={m} n={n}"
            t_scale = table_scaler(m, n)
            v_scale = integrality_scaler(m, n)

            for i in range(1, m + 1):
                want = params.family_order(i)
                rem = system.remainder(i)
                got = rem.order()
                lead_ok = (
                    got == want
                    and rem.coefficient(want) == Fraction(1, math.factorial(want))
                )
                _record(report, f"order {tag} i={i}", "order-vanishing",
                        lead_ok, lhs=f"ord={got}", rhs=f"ord={want}")

                entries_ok = all(
                    (t_scale * v).denominator == 1
                    for row in system.table(i).values
                    for v in row
                )
                _record(report, f"table-integrality {tag} i={i}",
                        "table-integrality", entries_ok,
                        lhs="d^m (n+1)!^m a[h][j]", rhs="integer")

                _record(report, f"unity {tag} i={i}", "unity-reconstruction",
                        reconstructs_unity(params, system.table(i)),
                        lhs="sum a[h][j] Q/(x-h)^j", rhs="1")

                if n <= 3:
                    agree = (partial_fractions_local(params, i).values
                             == system.table(i).values)
                    _record(report, f"local-table {tag} i={i}",
                            "local-table-agreement", agree,
                            lhs="contour route", rhs="linear-solve route")

                for alpha in alphas:
                    scale = v_scale * alpha.den ** (n + 1)
                    vals_ok = all(
                        (scale * system.poly(i, j)(alpha.fraction)).denominator == 1
                        for j in range(m)
                    )
                    _record(report,
                            f"value-integrality {tag} i={i} alpha={alpha}",
                            "value-integrality", vals_ok,
                            lhs="E den^(n+1) A_ij(alpha)", rhs="integer")

                alpha0 = alphas[0]
                bound = coeff_bound(m, n, alpha0.abs_fraction,
                                    precision_bits).as_fraction()
                worst = max(
                    abs(system.poly(i, j)(alpha0.fraction)) for j in range(m)
                )
                _record(report, f"coeff-size {tag} i={i} alpha={alpha0}",
                        "coeff-size", worst <= bound,
                        lhs=fraction_str(worst), rhs=fraction_str(bound))

                if 2 * log_abs[alpha0].hi <= m:
                    rbound = remainder_bound_arch(m, n, log_abs[alpha0])
                    enc, status = eval_remainder_arch(
                        system, i, alpha0.fraction, precision_bits)
                    ok = (status == "ok"
                          and enc.upper.as_fraction() <= rbound.as_fraction())
                    _record(report, f"remainder-size {tag} i={i} alpha={alpha0}",
                            "remainder-size-arch", ok,
                            lhs=repr(float(enc.upper)), rhs=repr(float(rbound)))

            _record(report, f"degrees {tag}", "degree-caps",
                    degree_check(system), lhs="deg A_ij", rhs="caps")

            try:
                gamma, power = determinant(system)
                _record(report, f"determinant {tag}", "determinant-monomial",
                        power == (n + 1) * m and gamma != 0,
                        lhs=f"gamma={fraction_str(gamma)} power={power}",
                        rhs=f"power={(n + 1) * m}")
            except ConstructionError as err:
                _record(report, f"determinant {tag}", "determinant-monomial",
                        False, detail=str(err))

            if m <= kernel_m_max and n <= kernel_n_max:
                for i in range(1, m + 1):
                    explicit = [system.poly(i, j) for j in range(m)]
                    _record(report, f"kernel {tag} i={i}", "kernel-equivalence",
                            proportional(kernel_family(params, i), explicit),
                            lhs="kernel basis", rhs="explicit family")
    return report


def dn_suite(n_max: int = 1000,
             precision_bits: int = DEFAULT_PRECISION) -> AuditReport:
    """exp(n-g(n)) <= lcm(1..n) <= exp(n+g(n)) over 2..n_max."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    report = AuditReport(
        mode="dn",
        config={"n_max": n_max, "precision_bits": precision_bits},
    )
    seq = lcm_sequence(n_max)
    failures = []
    for n in range(2, n_max + 1):
        lower, upper = rosser_schoenfeld_envelope(n, precision_bits)
        d_n = seq[n - 1]
        if not lower.as_fraction() <= d_n <= upper.as_fraction():
            failures.append(n)
    _record(report, f"envelope n=2..{n_max}", "lcm-envelope",
            not failures,
            lhs=f"{n_max - 1} instances",
            rhs="exp(n-g(n)) <= d_n <= exp(n+g(n))",
            detail=None if not failures else f"failed at n={failures[:12]}")
    report.summary["checked"] = n_max - 1
    report.summary["failures"] = len(failures)
    return report


# -- box audits ----------------------------------------------------------------

def _box_vectors(m: int, height: int):
    """All b in Z^m, 0 < H(b) <= height, one per sign class (first
    nonzero positive), in lexicographic order."""
    for b in itertools.product(range(-height, height + 1), repeat=m):
        lead = next((x for x in b if x != 0), 0)
        if lead <= 0:
            continue
        yield b


def _check_box_caps(m: int, height: int) -> int:
    total = (2 * height + 1) ** m
    if total > BOX_CAP:
        raise HypothesisError(
            f"combinatorial cap exceeded: (2*{height}+1)^{m} > {BOX_CAP}")
    rows = (total - 1) // 2
    if rows > ROW_CAP:
        raise HypothesisError(
            f"combinatorial cap exceeded: {rows} rows > {ROW_CAP}")
    return rows


def _floor_logs(mu_enc: Enclosure, height: int, box_height: int, pb: int):
    """Conservative lower bounds for log|Lambda| under both normalizations:
    the theorem binds the box bound H, the natural per-row reading binds
    H(b). Returned rounded down (the claim is 'log > this')."""
    log_b = Enclosure.from_exact(height, pb).log()
    log_box = Enclosure.from_exact(box_height, pb).log()
    return (-(mu_enc * log_b)).lower, (-(mu_enc * log_box)).lower


def exhaustive_audit(config: AuditConfig) -> AuditReport:
    if config.mode == "audit":
        return _exhaustive_audit_arch(config)
    if config.mode == "padic-audit":
        return _exhaustive_audit_padic(config)
    raise ValueError(f"not a box-audit mode: {config.mode!r}")


def _exhaustive_audit_arch(config: AuditConfig) -> AuditReport:
    m, alpha, pb = config.m, config.alpha, config.precision_bits
    _check_box_caps(m, config.height_max)
    constants = constants_arch(m, alpha, pb, config.variant)
    if not constants.applicable:
        raise HypothesisError("criterion inapplicable: delta <= 0")
    eps = config.epsilon
    result = admissible_n(constants, eps)
    mu_enc = constants.nu_enc / constants.delta_enc + eps / 2

    # Comparison expression for the generic linear-forms-in-logs bound:
    # the other result's exponent is at least 105500 e^{H(alpha)} (m-1)^2,
    # so its least-negative possible claim uses exactly that floor.
    nw_exp = (Enclosure.from_exact(alpha.height, pb).exp()
              * (_NW_CONSTANT * (m - 1) ** 2))
    improves = float(mu_enc.upper) < float(nw_exp.lower)

    evaluator = _ArchRowEvaluator(m, alpha.fraction, pb)
    report = AuditReport(mode="audit", config=config.echo())
    rows = []
    imprecise = 0
    zero_free = True
    min_index = None
    min_enc = None
    mins_by_height = {}
    for b in _box_vectors(m, config.height_max):
        enc, status = evaluator.eval(b)
        height = max(abs(x) for x in b)
        floor_b, floor_box = _floor_logs(mu_enc, height, config.height_max, pb)
        nw_floor = (-(nw_exp * Enclosure.from_exact(height, pb).log())).upper
        if status != "ok":
            imprecise += 1
        if enc.contains_zero():
            zero_free = False
        rows.append({
            "b": list(b),
            "height": height,
            "abs": enclosure_dict(enc),
            "floor_log_height_b": directed_float_dict(floor_b),
            "floor_log_height_box": directed_float_dict(floor_box),
            "nw_log_floor": directed_float_dict(nw_floor),
            "h0_applies": _exceeds_h0(height, result),
            "status": status,
        })
        if min_enc is None or _hi_less(enc, min_enc):
            min_enc = enc
            min_index = len(rows) - 1
        prev = mins_by_height.get(height)
        if prev is None or _hi_less(enc, prev):
            mins_by_height[height] = enc

    running = None
    cumulative = []
    for h in range(1, config.height_max + 1):
        enc = mins_by_height.get(h)
        if enc is not None and (running is None or _hi_less(enc, running)):
            running = enc
        if running is not None:
            cumulative.append({
                "height": h,
                "min_abs_hi": directed_float_dict(running.upper),
            })

    min_row = rows[min_index]

    report.tables["rows"] = rows
    report.tables["min_abs_by_height"] = cumulative
    report.summary.update({
        "rows": len(rows),
        "constants": _arch_constants_dict(constants),
        "epsilon": fraction_str(eps),
        "mu": directed_float_dict(mu_enc.upper),
        "n_star": str(result.n_star),
        "h0": directed_float_dict(result.h0),
        "log_h0": directed_float_dict(result.log_h0),
        "nw_exponent_floor": directed_float_dict(nw_exp.lower),
        "improves_nw_floor": improves,
        "min_row": {"b": min_row["b"], "height": min_row["height"],
                    "abs": min_row["abs"]},
    })
    _record(report, "all intervals exclude zero", "linear-form-floor",
            zero_free, lhs="0", rhs="outside every |Lambda| interval")
    report.add(CheckRecord(
        name="precision sufficiency", anchor="linear-form-floor",
        status=PASS if imprecise == 0 else IMPRECISE,
        lhs=f"{imprecise} imprecise rows", rhs="0"))
    report.add(CheckRecord(
        name="guarantee scope", anchor="height-threshold", status=INFO,
        detail=(f"the floor is guaranteed only for H(b) > H0 ~ exp("
                f"{_df_str(result.log_h0)}); box heights up to "
                f"{config.height_max} are diagnostics")))
    report.add(CheckRecord(
        name="exponent comparison", anchor="nw-comparison",
        status=PASS if improves else INFO,
        lhs=repr(float(mu_enc.upper)), rhs=repr(float(nw_exp.lower)),
        detail="mu versus the generic-bound exponent floor"))
    return report


def _exhaustive_audit_padic(config: AuditConfig) -> AuditReport:
    m, alpha, p, pb = config.m, config.alpha, config.p, config.precision_bits
    _check_box_caps(m, config.height_max)
    constants = constants_padic(m, alpha, p, pb)
    if not constants.applicable:
        raise HypothesisError("criterion inapplicable: delta_p <= 0")
    eps = config.epsilon
    result = admissible_n(constants, eps)
    mu_enc = constants.nu_enc / constants.delta_enc + eps / 2

    evaluator = _PAdicRowEvaluator(m, alpha.fraction, p)
    report = AuditReport(mode="padic-audit", config=config.echo())
    rows = []
    imprecise = 0
    zero_free = True
    min_index = None
    min_abs = None
    for b in _box_vectors(m, config.height_max):
        form, status = evaluator.eval(b)
        height = max(abs(x) for x in b)
        floor_b, floor_box = _floor_logs(mu_enc, height, config.height_max, pb)
        if status != "ok":
            imprecise += 1
            zero_free = False
            row_abs = None
        else:
            row_abs = form.abs_value()
        row = {
            "b": list(b),
            "height": height,
            "abs": fraction_str(row_abs) if row_abs is not None else None,
            "valuation": form.valuation if status == "ok" else None,
            "floor_log_height_b": directed_float_dict(floor_b),
            "floor_log_height_box": directed_float_dict(floor_box),
            "h0_applies": _exceeds_h0(height, result),
            "status": status,
        }
        rows.append(row)
        if row_abs is not None and (min_abs is None or row_abs < min_abs):
            min_abs = row_abs
            min_index = len(rows) - 1

    report.tables["rows"] = rows
    report.summary.update({
        "rows": len(rows),
        "constants": _padic_constants_dict(constants),
        "epsilon": fraction_str(eps),
        "mu": directed_float_dict(mu_enc.upper),
        "n_star": str(result.n_star),
        "h0": directed_float_dict(result.h0),
        "log_h0": directed_float_dict(result.log_h0),
    })
    if min_index is not None:
        report.summary["min_row"] = {
            "b": rows[min_index]["b"],
            "height": rows[min_index]["height"],
            "abs": rows[min_index]["abs"],
        }
    _record(report, "all magnitudes certified nonzero", "linear-form-floor",
            zero_free, lhs="0", rhs="excluded by certified valuations")
    report.add(CheckRecord(
        name="precision sufficiency", anchor="linear-form-floor",
        status=PASS if imprecise == 0 else IMPRECISE,
        lhs=f"{imprecise} imprecise rows", rhs="0"))
    report.add(CheckRecord(
        name="guarantee scope", anchor="height-threshold", status=INFO,
        detail=(f"the floor is guaranteed only for H(b) > H0 ~ exp("
                f"{_df_str(result.log_h0)}); box heights up to "
                f"{config.height_max} are diagnostics")))
    return report


def _hi_less(a: Enclosure, b: Enclosure) -> bool:
    return a.hi < b.hi


def _df_str(x) -> str:
    return directed_float_dict(x)["approx"]


def _exceeds_h0(height: int, result) -> bool:
    if not result.h0.is_finite():
        return False
    return Fraction(height) > result.h0.as_fraction()


def _arch_constants_dict(constants) -> dict:
    return {
        "kind": "arch",
        "m": constants.m,
        "alpha": str(constants.alpha),
        "variant": constants.variant,
        "L": directed_float_dict(constants.L),
        "growth": directed_float_dict(constants.cal_a),
        "decay": directed_float_dict(constants.a_decay),
        "t": directed_float_dict(constants.t),
        "t1": directed_float_dict(constants.t1),
        "nu": directed_float_dict(constants.nu),
        "delta": directed_float_dict(constants.delta),
        "delta_sign": constants.delta_sign,
        "applicable": constants.applicable,
    }


def _padic_constants_dict(constants) -> dict:
    return {
        "kind": "padic",
        "m": constants.m,
        "alpha": str(constants.alpha),
        "p": constants.p,
        "v": constants.v,
        "t_p": str(constants.t_p),
        "growth": directed_float_dict(constants.cal_a),
        "nu": directed_float_dict(constants.nu),
        "delta": directed_float_dict(constants.delta),
        "delta_sign": constants.delta_sign,
        "applicable": constants.applicable,
    }


def constants_report(config: AuditConfig) -> AuditReport:
    """Criterion constants plus, when applicable, the admissible-n search.

    delta <= 0 is an answer here, not an error: the report carries the
    sign and exits clean.
    """
    pb = config.precision_bits
    if config.p is not None:
        constants = constants_padic(config.m, config.alpha, config.p, pb)
        anchor = "criterion-constants-padic"
        summary = _padic_constants_dict(constants)
    else:
        constants = constants_arch(config.m, config.alpha, pb, config.variant)
        anchor = "criterion-constants-arch"
        summary = _arch_constants_dict(constants)
    report = AuditReport(mode="constants", config=config.echo())
    report.summary["constants"] = summary
    report.add(CheckRecord(
        name="criterion constants", anchor=anchor, status=INFO,
        lhs=f"delta_sign={constants.delta_sign}",
        rhs="applicable" if constants.applicable else "inapplicable"))
    if constants.applicable:
        result = admissible_n(constants, config.epsilon)
        tilde = constants.eps_tilde(config.epsilon)
        report.summary.update({
            "epsilon": fraction_str(config.epsilon),
            "n_star": str(result.n_star),
            "n_star_digits": len(str(result.n_star)),
            "mu": directed_float_dict(result.exponent),
            "h0": directed_float_dict(result.h0),
            "log_h0": directed_float_dict(result.log_h0),
            "eps_tilde": enclosure_dict(tilde),
        })
        report.add(CheckRecord(
            name="smallest admissible n", anchor="admissible-n",
            status=PASS if result.predecessor_fails else FAIL,
            lhs=f"n* with {len(str(result.n_star))} digits",
            rhs="predecessor fails at least one inequality"))
        report.add(CheckRecord(
            name="height threshold", anchor="height-threshold", status=INFO,
            lhs="H0 = exp(delta n*)/2",
            rhs=_df_str(result.log_h0) + " (log scale)"))
    return report
