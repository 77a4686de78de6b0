"""Command-line interface: membership, enumeration, extremal tables,
witnesses, and bound certification.

Conventions shared by every subcommand:

  * exit 0 = success / all checks pass; exit 1 = mathematically negative
    answer (non-member, failed verification, failed bound); exit 2 =
    usage or parse error, including m = 1 (excluded by the A != 1
    convention) and ranges beyond the computation caps.
  * --format text|json|csv. JSON payloads wrap results in an envelope
    {command, parameters, result, format}; every numeric value is a
    decimal string, so consumers never truncate big integers. CSV is
    only offered where the payload is a table. Output is deterministic:
    identical invocations produce byte-identical bytes.
  * ranges are written a..b (inclusive); a bare integer means a..a.

Setting the environment variable SPTORSION_CACHE_DIR enables a small
JSON-lines cache of extremal records keyed by genus and stamped with the
package version; stale-version lines are ignored. --oracle bypasses the
cache entirely, since its whole point is an independent recomputation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import (
    CHECK_NAMES,
    GENUS_CHECKS,
    default_range,
    report_to_dict,
    run_check,
)
from .criterion import (
    DEFAULT_ENUMERATION_CAP,
    GenusCapError,
    MembershipDecision,
    enumerate_orders,
    membership,
)
from .extremal import (
    DEFAULT_GENUS_CAP,
    DEFAULT_ORACLE_CAP,
    ExtremalRecord,
    brute_force_extremal,
    extremal_table,
)
from .numtheory import Factorization
from .witness import (
    NotRealizableError,
    build_witness,
    verify_witness,
    witness_from_json,
    witness_to_json,
)

CACHE_ENV = "SPTORSION_CACHE_DIR"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad arguments discovered after argparse; maps to exit 2."""


def _parse_range(text: str) -> tuple[int, int]:
    """a..b inclusive; a bare value v means v..v."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError:
        raise UsageError(
            f"cannot parse range {text!r}; expected an integer or a..b"
        ) from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}: upper end below lower end")
    return lo, hi


def _emit_json(command: str, parameters: dict, result: object) -> None:
    envelope = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "format": "json",
    }
    sys.stdout.write(json.dumps(envelope, indent=2) + "\n")


def _factorization_pairs(fact: Factorization) -> list[list[str]]:
    return [[str(p), str(a)] for p, a in fact]


def _factorization_pretty(fact: Factorization) -> str:
    return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in fact)


# ---------------------------------------------------------------------------
# member


def _decision_result(decision: MembershipDecision) -> dict:
    report = decision.report
    return {
        "m": str(decision.m),
        "genus": str(decision.g),
        "member": decision.member,
        "budget": str(decision.budget),
        "total_cost": str(report.total),
        "deficit": str(decision.deficit),
        "exemption_applied": report.exemption_applied,
        "terms": [
            {"prime": str(t.prime), "exponent": str(t.exponent), "cost": str(t.cost)}
            for t in report.terms
        ],
    }


def _print_decision_text(decision: MembershipDecision) -> None:
    report = decision.report
    print(f"m = {decision.m}, genus = {decision.g}, budget = {decision.budget}")
    print("prime  exponent  cost")
    for t in report.terms:
        print(f"{t.prime:>5}  {t.exponent:>8}  {t.cost:>4}")
    if report.exemption_applied:
        print("(m == 2 mod 4: the prime-2 term is free)")
    print(f"total cost {report.total} <= budget {decision.budget}: {decision.member}")
    verdict = "member" if decision.member else f"not a member (over by {decision.deficit})"
    print(f"=> {decision.m} is {verdict} of S({decision.g})")


def cmd_member(args: argparse.Namespace) -> int:
    decision = membership(args.m, args.genus)
    if args.format == "json":
        _emit_json(
            "member",
            {"m": str(args.m), "genus": str(args.genus)},
            _decision_result(decision),
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["prime", "exponent", "cost"])
        for t in decision.report.terms:
            writer.writerow([t.prime, t.exponent, t.cost])
    else:
        _print_decision_text(decision)
    return EXIT_OK if decision.member else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# orders


def cmd_orders(args: argparse.Namespace) -> int:
    orders = enumerate_orders(args.genus, cap=args.cap)
    if args.format == "json":
        _emit_json(
            "orders",
            {"genus": str(args.genus), "cap": str(args.cap)},
            {"count": str(len(orders)), "orders": [str(m) for m in orders]},
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m"])
        for m in orders:
            writer.writerow([m])
    else:
        print(f"S({args.genus}) has {len(orders)} elements:")
        print(" ".join(str(m) for m in orders))
    return EXIT_OK


# ---------------------------------------------------------------------------
# extremal


def _cache_path() -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    path = Path(root)
    path.mkdir(parents=True, exist_ok=True)
    return path / "extremal.jsonl"


def _load_cached_records(path: Path) -> dict[int, ExtremalRecord]:
    records: dict[int, ExtremalRecord] = {}
    if not path.exists():
        return records
    for line in path.read_text().splitlines():
        try:
            payload = json.loads(line)
            if payload.get("version") != __version__:
                continue
            fact = Factorization(
                tuple((int(p), int(a)) for p, a in payload["h_factorization"])
            )
            record = ExtremalRecord(
                int(payload["g"]), int(payload["f"]), int(payload["h"]), fact
            )
        except (ValueError, KeyError, TypeError):
            continue  # unreadable lines never poison a run
        records[record.g] = record
    return records


def _append_cached_records(path: Path, records: list[ExtremalRecord]) -> None:
    with path.open("a") as handle:
        for record in records:
            handle.write(
                json.dumps(
                    {
                        "version": __version__,
                        "g": str(record.g),
                        "f": str(record.f),
                        "h": str(record.h),
                        "h_factorization": _factorization_pairs(record.h_factorization),
                    }
                )
                + "\n"
            )


def _gather_records(
    g_from: int, g_to: int, genus_cap: int | None, jobs: int, use_cache: bool
) -> list[ExtremalRecord]:
    cache_file = _cache_path() if use_cache else None
    cached = _load_cached_records(cache_file) if cache_file else {}
    missing = [g for g in range(g_from, g_to + 1) if g not in cached]
    fresh: dict[int, ExtremalRecord] = {}
    if missing:
        # contiguous runs keep extremal_table's signature simple
        runs: list[list[int]] = []
        for g in missing:
            if runs and runs[-1][-1] == g - 1:
                runs[-1].append(g)
            else:
                runs.append([g])
        computed: list[ExtremalRecord] = []
        for run in runs:
            computed.extend(extremal_table(run[0], run[-1], genus_cap, jobs))
        fresh = {record.g: record for record in computed}
        if cache_file:
            _append_cached_records(cache_file, computed)
    return [cached[g] if g in cached else fresh[g] for g in range(g_from, g_to + 1)]


def _record_row(record: ExtremalRecord, show_f: bool, show_h: bool) -> dict:
    row: dict = {"g": str(record.g)}
    if show_f:
        row["f"] = str(record.f)
    if show_h:
        row["h"] = str(record.h)
        row["h_factorization"] = _factorization_pairs(record.h_factorization)
    return row


def cmd_extremal(args: argparse.Namespace) -> int:
    g_from, g_to = _parse_range(args.genus)
    if g_from < 1:
        raise UsageError("genus range must start at 1 or above")
    # column selection: either flag narrows the table, neither means both
    show_f = args.count or not args.max
    show_h = args.max or not args.count
    genus_cap = None if args.allow_large else DEFAULT_GENUS_CAP
    records = _gather_records(
        g_from, g_to, genus_cap, args.jobs, use_cache=not args.oracle
    )
    mismatches = []
    if args.oracle:
        for record in records:
            reference = brute_force_extremal(record.g)
            if (reference.f, reference.h) != (record.f, record.h):
                mismatches.append((record, reference))
    if args.format == "json":
        result = {
            "records": [_record_row(r, show_f, show_h) for r in records],
            "oracle_checked": bool(args.oracle),
            "oracle_mismatches": [
                {"g": str(rec.g), "dp": [str(rec.f), str(rec.h)], "oracle": [str(ref.f), str(ref.h)]}
                for rec, ref in mismatches
            ],
        }
        parameters = {
            "genus": args.genus,
            "jobs": str(args.jobs),
            "oracle": bool(args.oracle),
            "allow_large": bool(args.allow_large),
        }
        _emit_json("extremal", parameters, result)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["g"] + (["f"] if show_f else []) + (["h", "h_factorization"] if show_h else [])
        writer.writerow(header)
        for record in records:
            row: list = [record.g]
            if show_f:
                row.append(record.f)
            if show_h:
                row.extend([record.h, _factorization_pretty(record.h_factorization)])
            writer.writerow(row)
    else:
        for record in records:
            parts = [f"g={record.g}"]
            if show_f:
                parts.append(f"f={record.f}")
            if show_h:
                pretty = _factorization_pretty(record.h_factorization)
                parts.append(f"h={record.h} = {pretty}")
            print("  ".join(parts))
        if args.oracle and not mismatches:
            print(f"oracle cross-check passed for g in {g_from}..{g_to}")
    if mismatches:
        for rec, ref in mismatches:
            print(
                f"oracle mismatch at g = {rec.g}: dp (f, h) = ({rec.f}, {rec.h}), "
                f"enumeration (f, h) = ({ref.f}, {ref.h})",
                file=sys.stderr,
            )
        return EXIT_NEGATIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# witness / verify


def _certificate_result(witness, certificate) -> dict:
    return {
        "size": str(witness.matrix.rows),
        "genus": str(witness.genus),
        "claimed_order": str(witness.claimed_order),
        "all_passed": certificate.all_passed,
        "failing_checks": certificate.failing_checks(),
        "certificate": {
            "symplectic": certificate.symplectic,
            "power_identity": certificate.power_identity,
            "proper_powers": [
                {
                    "prime": str(c.prime),
                    "exponent": str(c.exponent),
                    "identity": c.identity,
                }
                for c in certificate.proper_powers
            ],
        },
    }


def cmd_witness(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("witness output is not tabular; use text or json")
    try:
        witness = build_witness(args.m, args.genus)
    except NotRealizableError as exc:
        decision = exc.decision
        if args.format == "json":
            _emit_json(
                "witness",
                {"m": str(args.m), "genus": str(args.genus)},
                {"built": False, "reason": str(exc), "membership": _decision_result(decision)},
            )
        else:
            _print_decision_text(decision)
        return EXIT_NEGATIVE
    document = witness_to_json(witness)
    if args.output:
        try:
            Path(args.output).write_text(document)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    if args.format == "json":
        result = {
            "built": True,
            "witness": json.loads(document),
            "path": args.output or None,
        }
        _emit_json("witness", {"m": str(args.m), "genus": str(args.genus)}, result)
    else:
        n = witness.matrix.rows
        print(f"order-{args.m} witness in Sp({n},Z):")
        for i in range(n):
            print("  [" + " ".join(f"{x:>4}" for x in witness.matrix.row(i)) + "]")
        print(f"certificate: all checks passed = {witness.certificate.all_passed}")
        if args.output:
            print(f"written to {args.output}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("verification output is not tabular; use text or json")
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    witness = witness_from_json(text)  # ValueError on malformed -> exit 2
    certificate = verify_witness(witness, witness.genus)
    result = _certificate_result(witness, certificate)
    if args.format == "json":
        _emit_json("verify", {"path": args.path}, result)
    else:
        print(f"claimed order {witness.claimed_order}, size {witness.matrix.rows}")
        print(f"  symplectic (A^T J A = J): {'pass' if certificate.symplectic else 'FAIL'}")
        print(f"  A^m = I: {'pass' if certificate.power_identity else 'FAIL'}")
        for check in certificate.proper_powers:
            status = "pass" if check.passed else "FAIL"
            print(f"  A^(m/{check.prime}) != I: {status}")
        print(f"verdict: {'valid' if certificate.all_passed else 'INVALID'}")
    if not certificate.all_passed:
        failing = ", ".join(certificate.failing_checks())
        print(f"failed checks: {failing}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds


def _reports_for_genus(task: tuple[str, int, int | None]) -> list:
    name, g, genus_cap = task
    return list(run_check(name, g, g, genus_cap))


def _bounds_reports(name: str, lo: int, hi: int, genus_cap: int | None, jobs: int):
    """Stream reports; genus sweeps fan out per point when jobs > 1."""
    if jobs <= 1 or name not in GENUS_CHECKS or hi == lo:
        yield from run_check(name, lo, hi, genus_cap)
        return
    import concurrent.futures

    tasks = ((name, g, genus_cap) for g in range(lo, hi + 1))
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_reports_for_genus, tasks):
            yield from chunk


def cmd_bounds(args: argparse.Namespace) -> int:
    name = args.check
    if args.range:
        lo, hi = _parse_range(args.range)
    else:
        stated = default_range(name)
        if stated is None:
            raise UsageError(
                f"check {name!r} has no default range (any genus satisfying its "
                "precondition is a large computation); pass --range a..b"
            )
        lo, hi = stated
    genus_cap = None if args.allow_large else DEFAULT_GENUS_CAP
    reports = _bounds_reports(name, lo, hi, genus_cap, args.jobs)
    failures = 0
    unmet = 0
    total = 0
    if args.format == "json":
        rows = []
        for report in reports:
            rows.append(report_to_dict(report))
            total += 1
            failures += report.passed is False
            unmet += report.passed is None
        _emit_json(
            "bounds",
            {
                "check": name,
                "range": f"{lo}..{hi}",
                "jobs": str(args.jobs),
                "allow_large": bool(args.allow_large),
            },
            {
                "reports": rows,
                "total": str(total),
                "failures": str(failures),
                "precondition_unmet": str(unmet),
            },
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["name", "point", "lhs", "rhs", "margin", "pass", "note"])
        for report in reports:
            row = report_to_dict(report)
            status = "" if report.passed is None else str(report.passed).lower()
            writer.writerow(
                [row["name"], row["point"], row["lhs"], row["rhs"], row["margin"], status, row["note"]]
            )
            total += 1
            failures += report.passed is False
            unmet += report.passed is None
    else:
        for report in reports:
            row = report_to_dict(report)
            status = "unmet" if report.passed is None else ("pass" if report.passed else "FAIL")
            note = f"  ({row['note']})" if row["note"] else ""
            print(
                f"{row['name']}  point={row['point']}  lhs={row['lhs']}  "
                f"rhs={row['rhs']}  margin={row['margin']}  {status}{note}"
            )
            total += 1
            failures += report.passed is False
            unmet += report.passed is None
        print(f"{total} rows: {total - failures - unmet} pass, {failures} fail, {unmet} precondition-unmet")
    return EXIT_NEGATIVE if failures else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sptorsion",
        description="Exact computations with finite-order integer symplectic matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", help="decide whether some element has order m")
    p.add_argument("m", type=int, help="candidate order (>= 2)")
    p.add_argument("-g", "--genus", type=int, required=True, help="genus g >= 1")
    _add_format(p)
    p.set_defaults(handler=cmd_member)

    p = sub.add_parser("orders", help="enumerate all of S(g)")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ENUMERATION_CAP,
        help=f"genus cap for full enumeration (default {DEFAULT_ENUMERATION_CAP})",
    )
    _add_format(p)
    p.set_defaults(handler=cmd_orders)

    p = sub.add_parser("extremal", help="f(g) and h(g), exactly")
    p.add_argument("-g", "--genus", required=True, help="genus or range a..b")
    p.add_argument("--count", action="store_true", help="(kept for symmetry; f is always reported)")
    p.add_argument("--max", action="store_true", help="(kept for symmetry; h is always reported)")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for ranges")
    p.add_argument("--allow-large", action="store_true", help="lift the genus cap")
    _add_format(p)
    p.set_defaults(handler=cmd_extremal)

    p = sub.add_parser("witness", help="build an explicit matrix of order m")
    p.add_argument("m", type=int)
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-o", "--output", help="write the witness document to this path")
    _add_format(p)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("verify", help="re-check a stored witness document")
    p.add_argument("path")
    _add_format(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bounds", help="certify one family of inequalities")
    p.add_argument("--check", required=True, choices=sorted(CHECK_NAMES), help="inequality family")
    p.add_argument("--range", help="inclusive range a..b (default: the stated sweep)")
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; sweeps run serially")
    p.add_argument("--allow-large", action="store_true", help="lift the genus cap")
    _add_format(p)
    p.set_defaults(handler=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GenusCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
