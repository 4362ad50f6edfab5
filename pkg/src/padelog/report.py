"""Deterministic JSON reports.

Two schema families: check reports ("padelog-report/1") aggregate named
pass/fail records plus optional search tables; system dumps
("padelog-system/1") serialize a constructed approximant family exactly.

Determinism contract: same config and same build give byte-identical
output. Exact numbers are carried as "num/den" strings, binary floats as
mantissa/exponent pairs with their rounding direction and precision, and
the JSON encoder fixes key order and separators.
"""

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .directed import DirectedFloat, Enclosure

REPORT_SCHEMA = "padelog-report/1"
SYSTEM_SCHEMA = "padelog-system/1"

# controlled vocabulary for check records; reports referencing an unknown
# anchor are a bug, not a new feature
ANCHORS = frozenset({
    "order-vanishing",
    "degree-caps",
    "determinant-monomial",
    "table-integrality",
    "value-integrality",
    "unity-reconstruction",
    "local-table-agreement",
    "kernel-equivalence",
    "coeff-size",
    "remainder-size-arch",
    "remainder-size-padic",
    "lcm-envelope",
    "criterion-constants-arch",
    "criterion-constants-padic",
    "admissible-n",
    "height-threshold",
    "linear-form-floor",
    "nw-comparison",
})

PASS = "pass"
FAIL = "fail"
INFO = "info"
IMPRECISE = "imprecise"
_STATUSES = (PASS, FAIL, INFO, IMPRECISE)


def fraction_str(x) -> str:
    q = Fraction(x)
    return f"{q.numerator}/{q.denominator}"


def _approx_str(mant: int, exp: int) -> str:
    """Scientific-notation digest of mant * 2^exp when float() overflows."""
    if mant == 0:
        return "0.0"
    log10 = math.log10(abs(mant)) + exp * math.log10(2)
    e10 = math.floor(log10)
    lead = 10.0 ** (log10 - e10)
    sign = "-" if mant < 0 else ""
    return f"{sign}{lead:.12g}e{e10:+d}"


def directed_float_dict(x: DirectedFloat) -> dict:
    out = {
        "rounding": x.rounding,
        "precision_bits": x.precision_bits,
    }
    if x.is_finite():
        mant, exp = x.mantissa_exponent()
        value = float(x)
        out["approx"] = (repr(value) if math.isfinite(value)
                         else _approx_str(mant, exp))
        out["mantissa_hex"] = hex(mant)
        out["exponent"] = exp
    else:
        out["approx"] = repr(float(x))
        out["special"] = repr(float(x))
    return out


def enclosure_dict(x: Enclosure) -> dict:
    return {"lo": directed_float_dict(x.lower), "hi": directed_float_dict(x.upper)}


@dataclass(frozen=True)
class CheckRecord:
    """One named verification outcome with its comparison operands."""

    name: str
    anchor: str
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    margin: Optional[str] = None
    detail: Optional[str] = None

    def __post_init__(self):
        if self.anchor not in ANCHORS:
            raise ValueError(f"unknown anchor {self.anchor!r}")
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_dict(self) -> dict:
        out = {"name": self.name, "anchor": self.anchor, "status": self.status}
        for key in ("lhs", "rhs", "margin", "detail"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass
class AuditReport:
    """Aggregated records plus optional tabular search output."""

    mode: str
    config: dict
    records: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def counts(self) -> dict:
        out = {}
        for r in self.records:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def as_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "mode": self.mode,
            "config": self.config,
            "status": self.status,
            "counts": self.counts(),
            "records": [r.as_dict() for r in self.records],
            "tables": self.tables,
            "summary": self.summary,
        }

    def to_bytes(self) -> bytes:
        return canonical_json_bytes(self.as_dict())


def canonical_json_bytes(obj) -> bytes:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True, allow_nan=False)
    return text.encode("ascii") + b"\n"


def polynomial_list(poly) -> list:
    return [fraction_str(c) for c in poly.coeffs]


def system_dict(system) -> dict:
    """Exact serialization of a constructed family set."""
    params = system.params
    out = {
        "schema": SYSTEM_SCHEMA,
        "m": params.m,
        "n": params.n,
        "truncation_order": system.truncation_order,
        "families": [],
    }
    for i in range(1, params.m + 1):
        table = system.table(i)
        remainder = system.remainder(i)
        family = {
            "i": i,
            "expected_order": params.family_order(i),
            "table": [
                [fraction_str(v) for v in row] for row in table.values
            ],
            "polys": [
                polynomial_list(system.poly(i, j)) for j in range(params.m)
            ],
            "remainder_head": [
                fraction_str(remainder.coefficient(k))
                for k in range(params.family_order(i),
                               min(params.family_order(i) + 4,
                                   system.truncation_order + 1))
            ],
        }
        out["families"].append(family)
    return out


def write_bytes(data: bytes, path: Optional[str]) -> None:
    if path is None:
        import sys

        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def summarize_records(records: Sequence[CheckRecord], limit: int = 12) -> str:
    """Human-oriented digest used by the CLI when --json is not given."""
    lines = []
    fails = [r for r in records if r.status == FAIL]
    for r in fails[:limit]:
        if r.lhs is not None or r.rhs is not None:
            lines.append(f"FAIL {r.name}: {r.lhs} vs {r.rhs}")
        else:
            lines.append(f"FAIL {r.name}: {r.detail or 'no detail'}")
    if len(fails) > limit:
        lines.append(f"... and {len(fails) - limit} more failures")
    return "\n".join(lines)
