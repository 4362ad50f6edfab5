"""Command-line front end.

Subcommands
    construct    build one approximant family set and dump it exactly
    verify       re-check every exact identity on a grid of (m, n)
    constants    criterion constants, admissible n, height threshold
    audit        box search over integer vectors, archimedean magnitudes
    padic-audit  box search with p-adic magnitudes
    dn           lcm-of-1..n envelope sweep

Exit codes: 0 every check passed (or constants mode ran, applicable or
not), 1 at least one check failed, 2 bad input or an unmet hypothesis.

A config file replaces flags with `key = value` lines (strings quoted,
integers bare, booleans true/false, # comments). Flags given on the
command line win over the file.
"""

import argparse
import sys
from fractions import Fraction

from .audit import (
    AuditConfig,
    constants_report,
    dn_suite,
    exhaustive_audit,
    verify_suite,
)
from .bounds import AlphaInput, HypothesisError
from .construction import ConstructionError, ConstructionParams, build_system
from .directed import DEFAULT_PRECISION
from .report import (
    AuditReport,
    canonical_json_bytes,
    summarize_records,
    system_dict,
    write_bytes,
)


def _parse_config_text(text: str) -> dict:
    """Flat key = value subset of TOML; no tables, no multiline values."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ValueError(f"config line {lineno}: empty key or value")
        hash_pos = value.find("#")
        if hash_pos >= 0 and not value.startswith(('"', "'")):
            value = value[:hash_pos].strip()
        if value.startswith('"') and value.endswith('"') and len(value) >= 2:
            out[key] = value[1:-1]
        elif value.startswith("'") and value.endswith("'") and len(value) >= 2:
            out[key] = value[1:-1]
        elif value in ("true", "false"):
            out[key] = value == "true"
        else:
            try:
                out[key] = int(value)
            except ValueError:
                raise ValueError(
                    f"config line {lineno}: cannot parse {value!r}; "
                    "quote strings, use bare integers, true/false"
                ) from None
    return out


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _alpha_arg(text: str) -> AlphaInput:
    try:
        return AlphaInput.parse(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padelog",
        description="exact simultaneous approximants to powers of log(1+z) "
                    "and effective irrationality audits",
    )
    sub = parser.add_subparsers(dest="mode", required=True, metavar="mode")

    def common(p):
        p.add_argument("--config", metavar="FILE",
                       help="key = value file supplying defaults for flags")
        p.add_argument("--out", metavar="FILE",
                       help="write the canonical JSON report here")
        p.add_argument("--json", action="store_true",
                       help="print the canonical JSON to stdout")
        p.add_argument("--precision-bits", type=int,
                       default=DEFAULT_PRECISION, metavar="BITS",
                       help="working precision for directed rounding")

    p = sub.add_parser("construct", help="build and dump one family set")
    common(p)
    p.add_argument("--m", type=int, default=2, help="number of log powers")
    p.add_argument("--n", type=int, default=2, help="weight parameter")

    p = sub.add_parser("verify", help="re-check exact identities on a grid")
    common(p)
    p.add_argument("--m", type=int, action="append", dest="m_list",
                   metavar="M", help="repeatable; default 2 and 3")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--inject-fault", action="store_true",
                   help="perturb one table entry; the suite must go red")

    p = sub.add_parser("constants", help="criterion constants and admissible n")
    common(p)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--alpha", type=_alpha_arg, default=None,
                   metavar="C/D", help="rational argument, e.g. 1/10 or -3/7")
    p.add_argument("--p", type=int, default=None,
                   help="prime; switches to the p-adic constants")
    p.add_argument("--epsilon", type=_fraction_arg, default=Fraction(1))
    p.add_argument("--variant", choices=("statement", "proof"),
                   default="statement")

    p = sub.add_parser("audit", help="archimedean box search")
    common(p)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--alpha", type=_alpha_arg, default=None, metavar="C/D")
    p.add_argument("--epsilon", type=_fraction_arg, default=Fraction(1))
    p.add_argument("--height-max", type=int, default=10)
    p.add_argument("--variant", choices=("statement", "proof"),
                   default="statement")

    p = sub.add_parser("padic-audit", help="p-adic box search")
    common(p)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--alpha", type=_alpha_arg, default=None, metavar="C/D")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--epsilon", type=_fraction_arg, default=Fraction(1))
    p.add_argument("--height-max", type=int, default=10)

    p = sub.add_parser("dn", help="lcm(1..n) envelope sweep")
    common(p)
    p.add_argument("--n-max", type=int, default=1000)

    return parser


_CONFIG_CASTS = {
    "alpha": lambda v: AlphaInput.parse(str(v)),
    "epsilon": lambda v: Fraction(str(v)),
    "m": int,
    "n": int,
    "n_max": int,
    "p": int,
    "height_max": int,
    "precision_bits": int,
    "variant": str,
    "out": str,
    "json": bool,
    "inject_fault": bool,
}


def _apply_config(args: argparse.Namespace, argv: list) -> None:
    """Fill unset flags from the config file.

    A flag counts as set when it appears in argv, so config values never
    silently override what the user typed.
    """
    if not args.config:
        return
    with open(args.config, "r", encoding="ascii") as handle:
        values = _parse_config_text(handle.read())
    given = {a.split("=")[0] for a in argv if a.startswith("--")}
    for key, value in values.items():
        if "--" + key.replace("_", "-") in given:
            continue
        attr = key
        if key == "m" and hasattr(args, "m_list"):
            attr = "m_list"
        if not hasattr(args, attr):
            raise ValueError(f"config key {key!r} does not apply to "
                             f"mode {args.mode!r}")
        if attr == "m_list":
            setattr(args, attr, [int(value)])
        else:
            setattr(args, attr, _CONFIG_CASTS.get(key, str)(value))


def _make_config(args: argparse.Namespace) -> AuditConfig:
    kwargs = {
        "mode": args.mode,
        "precision_bits": args.precision_bits,
    }
    for attr in ("m", "alpha", "p", "epsilon", "height_max", "n", "n_max",
                 "variant", "inject_fault"):
        if hasattr(args, attr) and getattr(args, attr) is not None:
            kwargs[attr] = getattr(args, attr)
    kwargs["output_path"] = args.out
    return AuditConfig(**kwargs)


def _emit(report: AuditReport, args: argparse.Namespace) -> None:
    payload = report.to_bytes()
    if args.out:
        write_bytes(payload, args.out)
    if args.json:
        write_bytes(payload, None)
    else:
        _print_digest(report)


def _print_digest(report: AuditReport) -> None:
    counts = report.counts()
    parts = [f"{v} {k}" for k, v in sorted(counts.items())]
    print(f"[{report.mode}] {report.status}: " + ", ".join(parts))
    digest = summarize_records(report.records)
    if digest:
        print(digest)
    for key in ("n_star_digits", "mu", "log_h0", "min_row",
                "improves_nw_floor", "rows", "checked", "failures"):
        if key not in report.summary:
            continue
        value = report.summary[key]
        if key == "min_row":
            mag = value["abs"]
            if isinstance(mag, dict):
                mag = mag["hi"]["approx"]
            print(f"  min_row = b={value['b']} |form| = {mag}")
            continue
        if isinstance(value, dict) and "approx" in value:
            value = value["approx"]
        print(f"  {key} = {value}")


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        _apply_config(args, list(argv))

        if args.mode == "construct":
            params = ConstructionParams(args.m, args.n)
            system = build_system(params, validate=True)
            payload = canonical_json_bytes(system_dict(system))
            if args.out:
                write_bytes(payload, args.out)
                if args.json:
                    write_bytes(payload, None)
                else:
                    print(f"[construct] m={args.m} n={args.n}: built, "
                          f"validated, written to {args.out}")
            else:
                write_bytes(payload, None)
            return 0

        if args.mode == "verify":
            m_list = tuple(args.m_list) if args.m_list else (2, 3)
            report = verify_suite(
                m_values=m_list,
                n_max=args.n_max,
                precision_bits=args.precision_bits,
                inject_fault=args.inject_fault,
            )
        elif args.mode == "dn":
            report = dn_suite(args.n_max, args.precision_bits)
        elif args.mode == "constants":
            report = constants_report(_make_config(args))
        else:
            report = exhaustive_audit(_make_config(args))

        _emit(report, args)
        return 0 if report.passed else 1

    except (HypothesisError, ConstructionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
