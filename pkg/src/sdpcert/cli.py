"""Command-line front end: coverage reports, certificates, verification suites."""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import coverage as cov
from .checks import all_passed
from .monomial import NotCoveredError, make_certificate, verify_certificate
from .quotient import eps_bar
from .suites import SUITES, run_suites

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_COVERED = 3

_STATUS_TO_EXIT = {
    "ok": EXIT_OK,
    "check-failure": EXIT_CHECK_FAILURE,
    "usage-error": EXIT_USAGE,
    "not-covered": EXIT_NOT_COVERED,
}


class UsageError(ValueError):
    pass


def _coverage_payload(report):
    return {
        "n": report.n,
        "r": report.r,
        "m": report.m,
        "strategy": report.strategy,
        "generators": [
            {"coeffs": list(unit.coeffs), "residue": residue}
            for unit, residue in report.generators
        ],
        "subgroup": list(report.subgroup),
        "is_full": report.is_full,
    }


def cmd_coverage(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if not 1 <= args.r < args.n or gcd(args.r, args.n) != 1:
        raise UsageError(f"--r must lie in [1, {args.n - 1}] and be coprime to --n")
    report = cov.coverage_subgroup(args.n, args.r, args.depth)
    problems = cov.verify_report(report)
    results = {"coverage": _coverage_payload(report)}
    status = "ok" if not problems else "check-failure"
    if problems:
        results["problems"] = sorted(problems)
    if args.exhaustive is not None:
        units = cov.exhaustive_fixed_units(args.n, args.r, args.exhaustive)
        residues = sorted({eps_bar(u) for u in units})
        oracle_subgroup = cov.subgroup_closure(residues, args.n)
        agrees = oracle_subgroup == report.subgroup
        results["oracle"] = {
            "bound": args.exhaustive,
            "residues": residues,
            "subgroup": list(oracle_subgroup),
            "unit_count": len(units),
            "agrees": agrees,
        }
        if not agrees:
            status = "check-failure"
    return {
        "command": "coverage",
        "inputs": {
            "depth": args.depth,
            "exhaustive": args.exhaustive,
            "n": args.n,
            "r": args.r,
            "seed": args.seed,
        },
        "results": results,
        "status": status,
    }


def cmd_certificate(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if not 1 <= args.r < args.n or gcd(args.r, args.n) != 1:
        raise UsageError(f"--r must lie in [1, {args.n - 1}] and be coprime to --n")
    if gcd(args.l, args.n) != 1:
        raise UsageError("--l must be coprime to --n")
    inputs = {
        "depth": args.depth,
        "l": args.l,
        "n": args.n,
        "r": args.r,
        "seed": args.seed,
    }
    try:
        cert = make_certificate(args.n, args.r, args.l, args.depth)
    except NotCoveredError as exc:
        return {
            "command": "certificate",
            "inputs": inputs,
            "results": {"message": str(exc)},
            "status": "not-covered",
        }
    record = verify_certificate(cert)
    return {
        "command": "certificate",
        "inputs": inputs,
        "results": {
            "certificate": {
                "alpha_tilde": list(cert.alpha_tilde.coeffs),
                "beta_tilde": list(cert.beta_tilde.coeffs),
                "k": cert.k,
                "l": cert.l,
                "n": cert.n,
                "r": cert.r,
                "s": cert.s,
            },
            "verification": {
                "checks": [c.as_dict() for c in record.checks],
                "passed": record.passed,
            },
        },
        "status": "ok" if record.passed else "check-failure",
    }


def cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    outcome = run_suites(names, args.seed)
    passed = all(all_passed(checks) for checks in outcome.values())
    return {
        "command": "verify",
        "inputs": {"seed": args.seed, "suite": args.suite},
        "results": {
            "passed": passed,
            "suites": {
                name: [c.as_dict() for c in checks] for name, checks in outcome.items()
            },
        },
        "status": "ok" if passed else "check-failure",
    }


def _render_scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def render_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(item, indent + 1))
            else:
                rendered = "[]" if isinstance(item, list) else "{}" if isinstance(item, dict) else _render_scalar(item)
                lines.append(f"{pad}{key}: {rendered}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_render_scalar(item)}")
    else:
        lines.append(f"{pad}{_render_scalar(value)}")
    return lines


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return "\n".join(render_text(report)) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sdpcert",
        description=(
            "Exact computations for cyclic crossed products: coverage of unit "
            "residues, birational-map certificates, and module verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cov = sub.add_parser("coverage", help="report the covered subgroup of (Z/nZ)*")
    p_cov.add_argument("--n", type=int, required=True, help="cyclic group order")
    p_cov.add_argument("--r", type=int, required=True, help="conjugation exponent, coprime to n")
    p_cov.add_argument("--depth", type=int, default=3, help="generator product depth")
    p_cov.add_argument(
        "--exhaustive",
        type=int,
        default=None,
        metavar="B",
        help="also run the exhaustive oracle with coefficient bound B",
    )
    p_cov.set_defaults(handler=cmd_coverage)

    p_cert = sub.add_parser("certificate", help="build and verify a certificate for residue l")
    p_cert.add_argument("--n", type=int, required=True)
    p_cert.add_argument("--r", type=int, required=True)
    p_cert.add_argument("--l", type=int, required=True, help="target residue, coprime to n")
    p_cert.add_argument("--depth", type=int, default=3)
    p_cert.set_defaults(handler=cmd_certificate)

    p_verify = sub.add_parser("verify", help="run a module property suite")
    p_verify.add_argument(
        "--suite",
        choices=sorted(SUITES) + ["all"],
        required=True,
    )
    p_verify.set_defaults(handler=cmd_verify)

    for p in (p_cov, p_cert, p_verify):
        p.add_argument("--seed", type=int, default=0, help="seed for all randomized checks")
        p.add_argument("--format", choices=["json", "text"], default="text")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(report, args.format))
    return _STATUS_TO_EXIT[report["status"]]


if __name__ == "__main__":
    raise SystemExit(main())
