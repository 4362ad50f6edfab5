"""Exact simultaneous approximants to powers of log(1+z), with effective
linear-independence measures and audit tooling.

The construction lives in `construction` (exact rational arithmetic
throughout), certified numerics in `directed` (outward-rounded MPFR
intervals) and `padics` (truncated p-adic numbers with certified
valuations), the size bounds and criterion constants in `bounds`, and
the check suites plus JSON reporting in `audit` and `report`.
"""

from .bounds import (
    AlphaInput,
    HypothesisError,
    MeasureConstants,
    PAdicConstants,
    admissible_n,
    coeff_bound,
    constants_arch,
    constants_padic,
    integrality_scaler,
    lcm_sequence,
    lcm_upto,
    remainder_bound_arch,
    remainder_bound_padic,
    rosser_schoenfeld_envelope,
    table_scaler,
)
from .construction import (
    ConstructionError,
    ConstructionParams,
    PadeSystem,
    build_system,
    determinant,
    kernel_family,
    normality_check,
)
from .directed import DirectedFloat, Enclosure, log1p_enclosure
from .padics import (
    PAdicNumber,
    PrecisionExhausted,
    padic_from_fraction,
    padic_linear_form,
    padic_log1p,
    padic_log_powers,
)
from .audit import (
    AuditConfig,
    constants_report,
    dn_suite,
    eval_linear_form_arch,
    eval_linear_form_padic,
    exhaustive_audit,
    verify_suite,
)
from .report import AuditReport, CheckRecord, canonical_json_bytes, system_dict

__version__ = "0.1.0"

__all__ = [
    "AlphaInput",
    "AuditConfig",
    "AuditReport",
    "CheckRecord",
    "ConstructionError",
    "ConstructionParams",
    "DirectedFloat",
    "Enclosure",
    "HypothesisError",
    "MeasureConstants",
    "PAdicConstants",
    "PAdicNumber",
    "PadeSystem",
    "PrecisionExhausted",
    "admissible_n",
    "build_system",
    "canonical_json_bytes",
    "coeff_bound",
    "constants_arch",
    "constants_padic",
    "constants_report",
    "determinant",
    "dn_suite",
    "eval_linear_form_arch",
    "eval_linear_form_padic",
    "exhaustive_audit",
    "integrality_scaler",
    "kernel_family",
    "lcm_sequence",
    "lcm_upto",
    "log1p_enclosure",
    "normality_check",
    "padic_from_fraction",
    "padic_linear_form",
    "padic_log1p",
    "padic_log_powers",
    "remainder_bound_arch",
    "remainder_bound_padic",
    "rosser_schoenfeld_envelope",
    "system_dict",
    "table_scaler",
    "verify_suite",
    "__version__",
]
