"""Command-line front end.

Subcommands: inverse, carry, audit, analyze, catalog.  Output is
deterministic text or JSON (--format json); JSON documents have a fixed
field order and render residues as decimal plus an MSB-first bit
string, so byte-identical round-trips hold.

Exit codes: 0 success, 2 not invertible, 3 bad parameters, 4 the
carry congruence fails, 5 an audit sweep found a discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Any

from .carry import (
    CongruenceError,
    canonical_form,
    carry_constraints_check,
    signed_form,
    solve_carries,
)
from .closed_form import (
    InverseResult,
    bl_inverse,
    gold_inverse,
    gold_invertible,
    kasami_inverse,
    kasami_invertible,
)
from .orderings import RMatrix, matrix_of_sequence
from .residues import (
    ExponentFamily,
    NotInvertibleError,
    Residue,
    binary_weight,
    cyclotomic_canonical,
    ext_euclid_inverse,
    family_exponent,
    to_bits,
)
from .sbox import FieldContext, catalog_lookup, differential_uniformity

__all__ = ["main", "entry", "run_audit"]

EXIT_OK = 0
EXIT_NOT_INVERTIBLE = 2
EXIT_BAD_PARAMS = 3
EXIT_CONGRUENCE = 4
EXIT_AUDIT_MISMATCH = 5


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the bad-parameter code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_PARAMS)


def _int_arg(text: str) -> int:
    """Accept decimal, hex (0x...) and binary (0b...) integers."""
    try:
        return int(text, 0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc


def _residue_doc(value: int, n: int) -> dict[str, Any]:
    return {"dec": value, "bits": f"0b{value:0{n}b}"}


def _matrix_doc(m: RMatrix) -> list[list[int]]:
    return [list(row) for row in m.entries]


def _rows_text(rows: list[list[int]]) -> str:
    width = max(len(str(v)) for row in rows for v in row)
    return "\n".join(
        "  " + " ".join(f"{v:>{width}}" for v in row) for row in rows
    )


def _parse_l_spec(spec: str) -> tuple[Any, int | None, str]:
    """Parse an exponent spec for the carry command.

    Accepts family shorthands gold<r>, kasami<r>, bl<r>, raw<l>, or an
    explicit signed term list like '6:1,3:-1,0:1' (exponent:coefficient
    pairs).  Returns (form, r-or-None, echo string).
    """
    spec = spec.strip().lower()
    for prefix, kind in (
        ("gold", "gold"),
        ("kasami", "kasami"),
        ("bl", "bracken_leander"),
        ("raw", "raw"),
    ):
        if spec.startswith(prefix) and spec[len(prefix) :].isdigit():
            param = int(spec[len(prefix) :])
            fam = ExponentFamily(kind, param)
            r = None if kind == "raw" else param
            return canonical_form(fam), r, spec
    if ":" in spec:
        terms: dict[int, int] = {}
        for part in spec.split(","):
            j_text, _, t_text = part.partition(":")
            terms[int(j_text, 0)] = int(t_text, 0)
        return signed_form(terms), None, spec
    raise ValueError(
        f"cannot parse exponent spec {spec!r}; use e.g. kasami3, raw5 "
        "or '6:1,3:-1,0:1'"
    )


def run_audit(n_min: int, n_max: int) -> dict[str, Any]:
    """Closed forms vs the extended-Euclid oracle over a range of n.

    Sweeps every invertible gold/kasami instance with 1 <= r < n (n >= 2
    for gold, n >= 4 for kasami) and every bracken-leander instance with
    4r in range, checking value and weight-formula agreement.
    """
    checked = 0
    failures: list[dict[str, Any]] = []

    def check(family: str, r: int, n: int, result: InverseResult, raw: int) -> None:
        nonlocal checked
        checked += 1
        expected = ext_euclid_inverse(raw, n)
        if result.inverse != expected:
            failures.append(
                {
                    "family": family,
                    "r": r,
                    "n": n,
                    "got": result.inverse.value,
                    "expected": expected.value,
                    "kind": "value",
                }
            )
        if result.weight != binary_weight(result.inverse):
            failures.append(
                {
                    "family": family,
                    "r": r,
                    "n": n,
                    "got": result.weight,
                    "expected": binary_weight(result.inverse),
                    "kind": "weight",
                }
            )

    for n in range(max(2, n_min), n_max + 1):
        for r in range(1, n):
            if gold_invertible(r, n):
                check("gold", r, n, gold_inverse(r, n), (1 << r) + 1)
    for n in range(max(4, n_min), n_max + 1):
        for r in range(1, n):
            if kasami_invertible(r, n):
                check(
                    "kasami",
                    r,
                    n,
                    kasami_inverse(r, n),
                    (1 << (2 * r)) - (1 << r) + 1,
                )
    r = 1
    while 4 * r <= n_max:
        if 4 * r >= n_min:
            check("bl", r, 4 * r, bl_inverse(r), (1 << (2 * r)) + (1 << r) + 1)
        r += 2
    return {
        "checked": checked,
        "passed": checked - len(failures),
        "failed": len(failures),
        "failures": failures,
    }


def _cmd_inverse(args: argparse.Namespace) -> dict[str, Any]:
    family = args.family
    if family == "raw":
        if args.l is None:
            raise ValueError("raw needs --l")
        if args.n is None:
            raise ValueError("raw needs --n")
        inv = ext_euclid_inverse(args.l, args.n)
        result = {
            "inverse": _residue_doc(inv.value, args.n),
            "weight": binary_weight(inv),
            "r_matrix": None,
            "carry_matrix": None,
        }
        return {
            "command": "inverse",
            "inputs": {"family": "raw", "l": args.l, "n": args.n},
            "result": result,
            "case_label": None,
            "warnings": [],
        }
    if args.r is None:
        raise ValueError(f"{family} needs --r")
    if family == "gold":
        if args.n is None:
            raise ValueError("gold needs --n")
        res = gold_inverse(args.r, args.n)
    elif family == "kasami":
        if args.n is None:
            raise ValueError("kasami needs --n")
        res = kasami_inverse(args.r, args.n)
    else:  # bl
        if args.n is not None and args.n != 4 * args.r:
            raise ValueError(
                f"bracken-leander fixes n = 4r = {4 * args.r}, got n={args.n}"
            )
        res = bl_inverse(args.r)
    n = res.inverse.n
    inputs: dict[str, Any] = {"family": family, "r": args.r, "n": n}
    return {
        "command": "inverse",
        "inputs": inputs,
        "result": {
            "inverse": _residue_doc(res.inverse.value, n),
            "weight": res.weight,
            "r_matrix": _matrix_doc(res.r_matrix),
            "carry_matrix": _matrix_doc(res.carry_matrix),
        },
        "case_label": res.case_label,
        "warnings": list(res.warnings),
    }


def _cmd_carry(args: argparse.Namespace) -> dict[str, Any]:
    n = args.n
    form, r, echo = _parse_l_spec(args.l_spec)
    a = to_bits(Residue(n, args.a))
    s = to_bits(Residue(n, args.s))
    carries = solve_carries(form, a, s)
    result: dict[str, Any] = {
        "carries": list(reversed(carries.carries)),
        "weight": carries.weight(),
        "carry_matrix": None,
        "constraint_checks": None,
    }
    if r is not None:
        result["carry_matrix"] = _matrix_doc(
            matrix_of_sequence(carries.carries, n, r)
        )
        if form.as_dict() == {2 * r: 1, r: -1, 0: 1}:
            report = carry_constraints_check(carries, form, r, a, s)
            result["constraint_checks"] = {
                "pair_bound_ok": report.pair_bound_ok,
                "half_weight_ok": report.half_weight_ok,
                "weight_identity": report.weight_identity,
            }
    return {
        "command": "carry",
        "inputs": {"l": echo, "a": args.a, "s": args.s, "n": n},
        "result": result,
        "case_label": None,
        "warnings": [],
    }


def _cmd_audit(args: argparse.Namespace) -> dict[str, Any]:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise ValueError("need 2 <= n-min <= n-max")
    summary = run_audit(args.n_min, args.n_max)
    return {
        "command": "audit",
        "inputs": {"n_min": args.n_min, "n_max": args.n_max},
        "result": summary,
        "case_label": None,
        "warnings": [],
    }


def _cmd_analyze(args: argparse.Namespace) -> dict[str, Any]:
    ctx = FieldContext(args.n)
    uniformity = differential_uniformity(args.l, ctx)
    x = Residue(args.n, args.l % ((1 << args.n) - 1))
    invertible = gcd(args.l, (1 << args.n) - 1) == 1
    return {
        "command": "analyze",
        "inputs": {"l": args.l, "n": args.n},
        "result": {
            "uniformity": uniformity,
            "apn": uniformity == 2,
            "degree": binary_weight(x),
            "invertible": invertible,
            "canonical": _residue_doc(
                cyclotomic_canonical(x).value, args.n
            ),
        },
        "case_label": None,
        "warnings": [],
    }


def _cmd_catalog(args: argparse.Namespace) -> dict[str, Any]:
    entries = []
    for entry in catalog_lookup(args.n):
        inverse_doc = None
        if entry.invertible:
            fam = entry.family
            try:
                if fam.kind == "gold":
                    inverse_doc = _residue_doc(
                        gold_inverse(fam.param, args.n).inverse.value, args.n
                    )
                elif fam.kind == "kasami":
                    inverse_doc = _residue_doc(
                        kasami_inverse(fam.param, args.n).inverse.value, args.n
                    )
                elif fam.kind == "bracken_leander":
                    inverse_doc = _residue_doc(
                        bl_inverse(fam.param).inverse.value, args.n
                    )
            except ValueError:
                inverse_doc = None
        entries.append(
            {
                "family": entry.family.kind,
                "param": entry.family.param,
                "exponent": _residue_doc(entry.exponent.value, args.n),
                "claimed_degree": entry.claimed_degree,
                "claimed_uniformity": entry.claimed_uniformity,
                "source_table": entry.source_table,
                "invertible": entry.invertible,
                "inverse": inverse_doc,
            }
        )
    return {
        "command": "catalog",
        "inputs": {"n": args.n},
        "result": {"entries": entries},
        "case_label": None,
        "warnings": [],
    }


def _render_text(doc: dict[str, Any], quiet: bool) -> str:
    cmd = doc["command"]
    lines: list[str] = []
    res = doc["result"]
    if cmd == "inverse":
        inv = res["inverse"]
        lines.append(f"inverse: {inv['dec']}  ({inv['bits']})")
        lines.append(f"weight:  {res['weight']}")
        if doc["case_label"]:
            lines.append(f"case:    {doc['case_label']}")
        if not quiet and res["r_matrix"] is not None:
            lines.append("r-matrix of the inverse:")
            lines.append(_rows_text(res["r_matrix"]))
            lines.append("r-matrix of the carry word:")
            lines.append(_rows_text(res["carry_matrix"]))
    elif cmd == "carry":
        lines.append(
            "carries (c[n-1] .. c[0]): "
            + " ".join(str(c) for c in res["carries"])
        )
        lines.append(f"weight: {res['weight']}")
        if not quiet and res["carry_matrix"] is not None:
            lines.append("r-matrix view:")
            lines.append(_rows_text(res["carry_matrix"]))
        if res["constraint_checks"] is not None:
            checks = res["constraint_checks"]
            lines.append(
                "constraints: pair bound "
                + ("ok" if checks["pair_bound_ok"] else "VIOLATED")
                + ", half-weight "
                + ("ok" if checks["half_weight_ok"] else "VIOLATED")
                + ", weight identity "
                + ("ok" if checks["weight_identity"] else "VIOLATED")
            )
    elif cmd == "audit":
        if not quiet and res["failures"]:
            for f in res["failures"]:
                lines.append(
                    f"MISMATCH {f['family']} r={f['r']} n={f['n']} "
                    f"{f['kind']}: got {f['got']}, expected {f['expected']}"
                )
        lines.append(
            f"audit: {res['checked']} checked, {res['passed']} passed, "
            f"{res['failed']} failed"
        )
    elif cmd == "analyze":
        lines.append(f"uniformity: {res['uniformity']}")
        lines.append(f"apn:        {'yes' if res['apn'] else 'no'}")
        lines.append(f"degree:     {res['degree']}")
        lines.append(f"invertible: {'yes' if res['invertible'] else 'no'}")
        lines.append(
            f"canonical:  {res['canonical']['dec']}  "
            f"({res['canonical']['bits']})"
        )
    else:  # catalog
        if not res["entries"]:
            lines.append("no table rows apply at this n")
        for e in res["entries"]:
            inv = (
                str(e["inverse"]["dec"]) if e["inverse"] is not None else "-"
            )
            param = f"({e['param']})" if e["family"] != "inverse" else ""
            lines.append(
                f"table {e['source_table']}  {e['family']}{param}: "
                f"exponent {e['exponent']['dec']}, degree "
                f"{e['claimed_degree']}, uniformity "
                f"{e['claimed_uniformity']}, "
                + (
                    f"invertible, inverse {inv}"
                    if e["invertible"]
                    else "not invertible"
                )
            )
    return "\n".join(lines)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="mersexp",
        description=(
            "Closed-form inverses modulo 2^n - 1 for gold, kasami and "
            "bracken-leander exponents, carry certificates, and monomial "
            "S-box analysis over GF(2^n)."
        ),
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="omit matrices and per-case detail in text output",
    )
    # the same flags are accepted after the subcommand; SUPPRESS keeps
    # the subparser from clobbering values parsed at the top level
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default=argparse.SUPPRESS
    )
    common.add_argument(
        "--quiet", action="store_true", default=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser(
        "inverse",
        parents=[common],
        help="closed-form inverse of a family exponent",
    )
    p_inv.add_argument(
        "family", choices=("gold", "kasami", "bl", "raw"),
        help="exponent family; raw uses the extended-Euclid oracle",
    )
    p_inv.add_argument("--r", type=_int_arg, help="family parameter r")
    p_inv.add_argument("--l", type=_int_arg, help="raw exponent (family raw)")
    p_inv.add_argument("--n", type=_int_arg, help="ring parameter n")
    p_inv.set_defaults(func=_cmd_inverse)

    p_carry = sub.add_parser(
        "carry",
        parents=[common],
        help="solve the add-with-carry recurrence for s = l*a",
    )
    p_carry.add_argument(
        "l_spec",
        help="exponent: gold3, kasami2, bl1, raw5, or terms '6:1,3:-1,0:1'",
    )
    p_carry.add_argument("--a", type=_int_arg, required=True)
    p_carry.add_argument("--s", type=_int_arg, required=True)
    p_carry.add_argument("--n", type=_int_arg, required=True)
    p_carry.set_defaults(func=_cmd_carry)

    p_audit = sub.add_parser(
        "audit",
        parents=[common],
        help="sweep closed forms against the inversion oracle",
    )
    p_audit.add_argument("--n-min", type=_int_arg, required=True)
    p_audit.add_argument("--n-max", type=_int_arg, required=True)
    p_audit.set_defaults(func=_cmd_audit)

    p_an = sub.add_parser(
        "analyze",
        parents=[common],
        help="differential uniformity and degree of x^l on GF(2^n)",
    )
    p_an.add_argument("--l", type=_int_arg, required=True)
    p_an.add_argument("--n", type=_int_arg, required=True)
    p_an.set_defaults(func=_cmd_analyze)

    p_cat = sub.add_parser(
        "catalog",
        parents=[common],
        help="known-exponent table rows instantiated at n",
    )
    p_cat.add_argument("--n", type=_int_arg, required=True)
    p_cat.set_defaults(func=_cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse funnels --help through SystemExit(0) as well
        return int(exc.code or 0)
    try:
        doc = args.func(args)
    except NotInvertibleError as exc:
        print(f"not invertible: {exc}", file=sys.stderr)
        return EXIT_NOT_INVERTIBLE
    except CongruenceError as exc:
        print(f"congruence fails: {exc}", file=sys.stderr)
        return EXIT_CONGRUENCE
    except (ValueError, OverflowError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(_render_text(doc, args.quiet))
    if doc["command"] == "audit" and doc["result"]["failed"] > 0:
        return EXIT_AUDIT_MISMATCH
    return EXIT_OK


def entry() -> None:
    """Console-script entry point."""
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
