"""Command-line verification front end.

Subcommands: degrees, maximals, eliminate, lemmas, all.  Reports are
emitted as JSON or markdown carrying identical information; output is
deterministic (fixed ordering, and the timestamp header can be dropped
with --no-header so that identical configurations yield identical bytes).
Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .elimination import (
    CheckReport,
    TheoremViolationError,
    eta_inertia_check,
    final_degree_check,
    run_elimination,
    solvable_quotient_checks,
    step3_divisibility_check,
)
from .exactmath import divisors, gcd
from .ree import (
    AlmostSimpleSpec,
    cd_superset,
    certified_degrees,
    gcd_identities_check,
    group_order,
    is_isolated,
    max_two_part,
    maximal_index_filter,
    prime_power_degrees,
    ree_degree_table,
    ree_params,
    smallest_even_degree,
)

__all__ = ["main", "build_parser", "RunConfig"]

STATEMENTS = {
    "degree-table-structure": "the eleven degrees are pairwise distinct, all divide the group order, and the tenth equals q^3+1",
    "gcd-identities": "gcd(q-1,q+1) = 2 and the remaining pairwise gcds among q+-1 and q+-theta+1 equal 1",
    "eta-inertia": "no power 3^i with 0 < i < f is congruent to +-1 modulo (q-1)/2",
    "prime-power-uniqueness": "q^3 is the only prime-power member of the degree superset",
    "max-two-part": "the largest 2-part among superset members is exactly 8",
    "smallest-even-degree": "the smallest even superset member is theta*(q^2-1)/3",
    "steinberg-isolated": "no superset member strictly between 1 and q^3 divides q^3, and no member is a proper multiple of q^3",
    "certified-subset": "every certified degree is a superset member",
    "maximal-index-filter": "exactly the parabolic index q^3+1 divides a superset member",
    "elimination-unique-survivor": "exactly one candidate chief factor survives, the Ree group itself with k = 1",
    "solvable-quotient-gallagher": "q^3 times the eleventh degree times any divisor of d is never a superset member",
    "solvable-quotient-frobenius": "3^(3f) exceeds f^2-1",
    "solvable-quotient-small-degree": "every nontrivial superset member exceeds f^2-1",
    "step3-divisibility": "(q^3+1)(q-1)/2 divides no superset member",
    "final-degree": "(q^3+1)*d is certified and (q^3+1)*s is not a superset member for any s > d dividing f",
}

ENUMERATION_NOTE = (
    "candidates beyond the enumeration bounds fail unconditionally: "
    "alternating groups of larger degree keep a character degree divisible "
    "by 16, and larger Lie ranks cannot satisfy the Steinberg exponent "
    "equation"
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    f_values: tuple[int, ...]
    d_policy: str  # "all" or comma list echo
    d_values: tuple[int, ...] | None  # None means all divisors
    output_format: str
    strict_mode: bool
    header: bool
    out_path: str | None


class UsageError(ValueError):
    pass


def _parse_f_list(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..")
            lo, hi = int(lo_s), int(hi_s)
            values = list(range(lo, hi + 1, 2)) if lo % 2 else list(range(lo + 1, hi + 1, 2))
            if not values:
                raise ValueError
        else:
            values = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise UsageError(f"cannot parse f list {text!r}") from None
    if not values:
        raise UsageError("f list is empty")
    for f in values:
        if f < 3 or f % 2 == 0:
            raise UsageError("f must be odd and >= 3")
    return sorted(set(values))


def _parse_d_list(text: str) -> tuple[str, tuple[int, ...] | None]:
    if text == "all":
        return "all", None
    try:
        values = tuple(sorted({int(part) for part in text.split(",") if part != ""}))
    except ValueError:
        raise UsageError(f"cannot parse d list {text!r}") from None
    if not values or any(d < 1 for d in values):
        raise UsageError("d values must be positive integers or 'all'")
    return text, values


def _d_values_for(config: RunConfig, f: int) -> list[int]:
    if config.d_values is None:
        return divisors(f)
    chosen = [d for d in config.d_values if f % d == 0]
    if not chosen:
        raise UsageError(f"none of the requested d values divide f={f}")
    return chosen


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reecd",
        description="Exact verification suite for the character-degree "
        "arithmetic of the small Ree groups and their extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("degrees", "print the 11-line degree table and the degree sets"),
        ("maximals", "maximal subgroup table and the index filter"),
        ("eliminate", "run the candidate chief-factor elimination"),
        ("lemmas", "run the arithmetic lemma checks"),
        ("all", "run every check"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--f", required=True, metavar="LIST|RANGE",
                       help="odd field exponents, e.g. 3,5,7 or 3..9")
        p.add_argument("--d", default="all", metavar="all|LIST",
                       help="extension indices; 'all' means every divisor of f")
        p.add_argument("--format", choices=("json", "md"), default="md")
        p.add_argument("--strict", action="store_true",
                       help="strict 3-part membership mode for the elimination")
        p.add_argument("--no-header", action="store_true",
                       help="omit the timestamp header")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="write the report to PATH instead of stdout")
    return parser


def _report(check: CheckReport) -> dict:
    return {
        "check_id": check.check_id,
        "f": check.f,
        "d": check.d,
        "status": check.status,
        "statement": STATEMENTS[check.check_id],
        "witness": check.witness,
    }


def _check_degree_table(params) -> CheckReport:
    table = ree_degree_table(params)
    values = table.values
    order = group_order(params)
    distinct = len(set(values)) == 11
    identity = table.entry(10).value == params.q**3 + 1
    divide = all(order % v == 0 for v in values)
    ok = distinct and identity and divide
    return CheckReport(
        check_id="degree-table-structure", f=params.f, d=1,
        status="pass" if ok else "fail",
        witness={
            "values": list(values), "group_order": order,
            "distinct": distinct, "line10_identity": identity,
            "all_divide_order": divide,
        },
    )


def _check_gcd_identities(params) -> CheckReport:
    q, th = params.q, params.theta
    pairs = {
        "q-1,q+1": gcd(q - 1, q + 1),
        "q-1,q-theta+1": gcd(q - 1, q - th + 1),
        "q-1,q+theta+1": gcd(q - 1, q + th + 1),
        "q+1,q-theta+1": gcd(q + 1, q - th + 1),
        "q+1,q+theta+1": gcd(q + 1, q + th + 1),
        "q-theta+1,q+theta+1": gcd(q - th + 1, q + th + 1),
    }
    ok = gcd_identities_check(params)
    return CheckReport(
        check_id="gcd-identities", f=params.f, d=1,
        status="pass" if ok else "fail", witness=pairs,
    )


def _check_prime_power(spec) -> CheckReport:
    q3 = spec.params.q**3
    members = list(prime_power_degrees(cd_superset(spec)).members)
    ok = members == [q3]
    return CheckReport(
        check_id="prime-power-uniqueness", f=spec.params.f, d=spec.d,
        status="pass" if ok else "fail",
        witness={"prime_power_members": members, "expected": [q3]},
    )


def _check_max_two_part(spec) -> CheckReport:
    value = max_two_part(cd_superset(spec))
    return CheckReport(
        check_id="max-two-part", f=spec.params.f, d=spec.d,
        status="pass" if value == 8 else "fail",
        witness={"max_two_part": value, "expected": 8},
    )


def _check_smallest_even(spec) -> CheckReport:
    params = spec.params
    expected = params.theta * (params.q**2 - 1) // 3
    value = smallest_even_degree(cd_superset(spec))
    return CheckReport(
        check_id="smallest-even-degree", f=params.f, d=spec.d,
        status="pass" if value == expected else "fail",
        witness={"smallest_even": value, "expected": expected},
    )


def _check_isolated(spec) -> CheckReport:
    q3 = spec.params.q**3
    ok = is_isolated(q3, cd_superset(spec))
    return CheckReport(
        check_id="steinberg-isolated", f=spec.params.f, d=spec.d,
        status="pass" if ok else "fail", witness={"degree": q3},
    )


def _check_certified_subset(spec) -> CheckReport:
    degs = cd_superset(spec)
    missing = [v for v in certified_degrees(spec).members if v not in degs]
    return CheckReport(
        check_id="certified-subset", f=spec.params.f, d=spec.d,
        status="pass" if not missing else "fail",
        witness={"missing": missing},
    )


def _check_maximal_filter(spec) -> CheckReport:
    outcomes = maximal_index_filter(spec)
    survivors = [o.row.tag for o in outcomes if o.surviving]
    ok = survivors == ["parabolic"]
    rows = [
        {"tag": o.row.tag, "index": o.row.index, "surviving": o.surviving,
         "witness": o.witness}
        for o in outcomes
    ]
    return CheckReport(
        check_id="maximal-index-filter", f=spec.params.f, d=spec.d,
        status="pass" if ok else "fail",
        witness={"survivors": survivors, "rows": rows},
    )


def _check_elimination(spec, strict: bool) -> CheckReport:
    try:
        outcomes = run_elimination(spec, strict=strict)
    except TheoremViolationError as exc:
        return CheckReport(
            check_id="elimination-unique-survivor", f=spec.params.f, d=spec.d,
            status="fail", witness={"error": str(exc)},
        )
    survivor = next(o for o in outcomes if o.survives)
    reasons: dict[str, int] = {}
    for o in outcomes:
        if not o.survives:
            reasons[o.reason] = reasons.get(o.reason, 0) + 1
    return CheckReport(
        check_id="elimination-unique-survivor", f=spec.params.f, d=spec.d,
        status="pass",
        witness={
            "candidates": len(outcomes),
            "survivor": {"family": "2G2", "q0": survivor.candidate.q0,
                         "k": survivor.k},
            "ruled_out_by_reason": dict(sorted(reasons.items())),
        },
    )


def _collect_checks(config: RunConfig) -> list[CheckReport]:
    per_f = config.command in ("all",)
    lemmas = config.command in ("lemmas", "all")
    maximals = config.command in ("maximals", "all")
    eliminate = config.command in ("eliminate", "all")
    checks: list[CheckReport] = []
    for f in config.f_values:
        params = ree_params(f)
        if per_f:
            checks.append(_check_degree_table(params))
        if lemmas:
            checks.append(_check_gcd_identities(params))
            checks.append(eta_inertia_check(params))
        for d in _d_values_for(config, f):
            spec = AlmostSimpleSpec(params=params, d=d)
            if lemmas:
                checks.append(_check_prime_power(spec))
                checks.append(_check_max_two_part(spec))
                checks.append(_check_smallest_even(spec))
                checks.append(_check_isolated(spec))
                checks.append(_check_certified_subset(spec))
            if maximals:
                checks.append(_check_maximal_filter(spec))
            if eliminate:
                checks.append(_check_elimination(spec, config.strict_mode))
            if lemmas:
                if d >= 2:
                    checks.extend(solvable_quotient_checks(spec))
                checks.append(step3_divisibility_check(spec))
                checks.append(final_degree_check(spec))
    return checks


def _degrees_payload(config: RunConfig) -> dict:
    tables = []
    degree_sets = []
    for f in config.f_values:
        params = ree_params(f)
        table = ree_degree_table(params)
        tables.append({
            "f": f,
            "q": params.q,
            "theta": params.theta,
            "group_order": group_order(params),
            "lines": [
                {"line": e.line, "value": e.value, "extends": e.extends_to_aut}
                for e in table.entries
            ],
        })
        for d in _d_values_for(config, f):
            spec = AlmostSimpleSpec(params=params, d=d)
            degree_sets.append({
                "f": f,
                "d": d,
                "certified": list(certified_degrees(spec).members),
                "superset": list(cd_superset(spec).members),
            })
    return {"degree_tables": tables, "degree_sets": degree_sets}


def _config_payload(config: RunConfig) -> dict:
    return {
        "command": config.command,
        "f": list(config.f_values),
        "d": config.d_policy,
        "format": config.output_format,
        "strict": config.strict_mode,
    }


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _md_value(value) -> str:
    return json.dumps(value, separators=(",", ":"))


def _render_markdown(payload: dict) -> str:
    lines = ["# reecd verification report", ""]
    if "generated_at" in payload:
        lines += [f"generated: {payload['generated_at']}", ""]
    cfg = payload["config"]
    lines += [
        f"command: {cfg['command']}",
        f"f: {', '.join(str(f) for f in cfg['f'])}",
        f"d: {cfg['d']}",
        f"strict: {str(cfg['strict']).lower()}",
        "",
    ]
    if "degree_tables" in payload:
        for table in payload["degree_tables"]:
            lines += [
                f"## f = {table['f']} (q = {table['q']}, theta = {table['theta']})",
                "",
                f"group order: {table['group_order']}",
                "",
                "| line | degree | extends |",
                "|---|---|---|",
            ]
            for row in table["lines"]:
                flag = "yes" if row["extends"] else ""
                lines.append(f"| {row['line']} | {row['value']} | {flag} |")
            lines.append("")
        for ds in payload["degree_sets"]:
            lines += [
                f"## degree sets for f = {ds['f']}, d = {ds['d']}",
                "",
                f"certified: {', '.join(str(v) for v in ds['certified'])}",
                "",
                f"superset: {', '.join(str(v) for v in ds['superset'])}",
                "",
            ]
    if "checks" in payload:
        lines += [
            "| check | f | d | status | witness |",
            "|---|---|---|---|---|",
        ]
        for check in payload["checks"]:
            lines.append(
                "| {check_id} | {f} | {d} | {status} | {witness} |".format(
                    check_id=check["check_id"], f=check["f"], d=check["d"],
                    status=check["status"], witness=_md_value(check["witness"]),
                )
            )
        lines.append("")
        for check in payload["checks"]:
            if check["status"] == "fail":
                lines.append(
                    f"FAIL {check['check_id']} (f={check['f']}, d={check['d']}): "
                    f"{check['statement']}; witness {_md_value(check['witness'])}"
                )
        lines.append("")
    summary = payload["summary"]
    lines.append(
        f"summary: {summary['total']} checks, {summary['passed']} passed, "
        f"{summary['failed']} failed"
    )
    if "notes" in payload:
        for note in payload["notes"]:
            lines.append(f"note: {note}")
    lines.append("")
    return "\n".join(lines)


def _emit(config: RunConfig, payload: dict) -> None:
    text = (
        _render_json(payload)
        if config.output_format == "json"
        else _render_markdown(payload)
    )
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(config: RunConfig) -> int:
    payload: dict = {}
    if config.header:
        payload["generated_at"] = datetime.now(timezone.utc).isoformat(
            timespec="seconds"
        )
    payload["config"] = _config_payload(config)
    failed = 0
    if config.command == "degrees":
        payload.update(_degrees_payload(config))
        payload["summary"] = {"total": 0, "passed": 0, "failed": 0}
    else:
        checks = _collect_checks(config)
        failed = sum(1 for c in checks if c.status != "pass")
        payload["checks"] = [_report(c) for c in checks]
        payload["summary"] = {
            "total": len(checks),
            "passed": len(checks) - failed,
            "failed": failed,
        }
        if config.command in ("eliminate", "all"):
            payload["notes"] = [ENUMERATION_NOTE]
    _emit(config, payload)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        f_values = _parse_f_list(args.f)
        d_policy, d_values = _parse_d_list(args.d)
        config = RunConfig(
            command=args.command,
            f_values=tuple(f_values),
            d_policy=d_policy,
            d_values=d_values,
            output_format=args.format,
            strict_mode=args.strict,
            header=not args.no_header,
            out_path=args.out,
        )
        return _run(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
