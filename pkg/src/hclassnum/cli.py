"""Command-line front-end.

Commands: hurwitz, hurwitz-table, qexp, lattice-sum, hsum, cross-check,
verify, ec-traces.  Every command accepts --format text|json; JSON output
is the envelope {"command": ..., "result": ..., "reports": [...]} with all
rationals as canonical Fraction strings, never floats, and with stable key
order so that parse + re-serialize is byte-identical.

Exit codes: 0 on success (for verification commands: all verdicts true),
1 when a verification found mismatches, 2 on usage errors.

The HURWITZ_THREADS environment variable overrides --threads.  Threads fan
the independent verification suites out over a pool; everything in the
library is pure and immutable, and the printed order stays deterministic
regardless of worker count.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import eccount, formulas, verify
from .forms import d_series, e2_series, psi_series, theta_mM
from .hurwitz import hurwitz, table_at_least
from .numtheory import CHI_MINUS3, CHI_MINUS4
from .qseries import QSeries
from .sums import LatticeSumSpec, build_series

__all__ = ["CliConfig", "build_parser", "run", "main"]

# O(p^3) curve sweeps: warn past here ...
_EC_WARN_P = 200
# ... and refuse past here
_EC_MAX_P = 500


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: command, output format, worker count, parameters."""

    command: str
    format: str = "text"
    threads: int | None = None
    params: dict = field(default_factory=dict)


def canonical_json(payload: dict) -> str:
    """Stable serialization; loads() then dumps() reproduces it exactly."""
    return json.dumps(payload, indent=2)


def _emit(config: CliConfig, result, reports: list[dict], text_lines: list[str]) -> None:
    if config.format == "json":
        print(canonical_json(
            {"command": config.command, "result": result, "reports": reports}
        ))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (HURWITZ_THREADS overrides)")

    parser = argparse.ArgumentParser(
        prog="hclassnum",
        description="Exact Hurwitz class numbers, restricted sums, and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hurwitz", parents=[common],
                       help="one Hurwitz class number H(n)")
    p.add_argument("n", type=int, help="argument of H")

    p = sub.add_parser("hurwitz-table", parents=[common],
                       help="H(0..limit-1) as a table")
    p.add_argument("--limit", type=int, required=True,
                   help="tabulate H(n) for n < limit")

    p = sub.add_parser("qexp", parents=[common],
                       help="q-expansion of a named series")
    p.add_argument("--form", required=True,
                   help="psi3 | psi4 | psi2 | D | E2 | theta:m:M")
    p.add_argument("--terms", type=int, required=True,
                   help="number of coefficients to emit")

    p = sub.add_parser("lattice-sum", parents=[common],
                       help="lambda/G/T/mu lattice-sum series")
    p.add_argument("--variant", choices=("lambda", "G", "T", "mu"), required=True)
    p.add_argument("--ell", type=int, required=True, help="moment exponent")
    p.add_argument("--m", type=int, default=0, help="residue class of t")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--terms", type=int, required=True,
                   help="number of coefficients to emit")
    p.add_argument("--a", type=int, default=None, help="t-residue (mu only)")
    p.add_argument("--b", type=int, default=None, help="s-residue (mu only)")

    p = sub.add_parser("hsum", parents=[common],
                       help="closed-form H_{m,M}(p) for M = 6 or 8")
    p.add_argument("--modulus", type=int, choices=(6, 8), required=True)
    p.add_argument("--m", type=int, required=True, help="residue class of t")
    p.add_argument("--p", type=int, required=True, help="prime argument")
    p.add_argument("--explain", action="store_true",
                   help="also print the case row and representation used")

    p = sub.add_parser("cross-check", parents=[common],
                       help="closed forms vs brute force over a prime range")
    p.add_argument("--modulus", type=int, choices=(6, 8), required=True)
    p.add_argument("--pmax", type=int, default=500,
                   help="check all primes up to this bound")

    p = sub.add_parser("verify", parents=[common],
                       help="run verification suites")
    p.add_argument("--suite",
                   choices=("mod6", "mod8", "lemmas", "classical", "ec", "all"),
                   default="all",
                   help="which battery to run (all = mod6+mod8+lemmas+classical)")
    p.add_argument("--pmax", type=int, default=500,
                   help="prime range for classical/ec, coefficient range for lemmas")
    p.add_argument("--overshoot", type=int, default=4,
                   help="check this multiple of each Sturm bound")

    p = sub.add_parser("ec-traces", parents=[common],
                       help="weighted curve counts by trace over F_p")
    p.add_argument("--p", type=int, required=True,
                   help=f"prime field size (3 < p <= {_EC_MAX_P})")

    return parser


def _parse_form(name: str, terms: int) -> QSeries:
    if name == "psi3":
        return psi_series(3, CHI_MINUS3, terms)
    if name == "psi4":
        return psi_series(4, CHI_MINUS4, terms)
    if name == "psi2":
        return psi_series(2, CHI_MINUS4, terms)
    if name == "D":
        return d_series(terms)
    if name == "E2":
        return e2_series(terms)
    if name.startswith("theta:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise UsageError("theta form must look like theta:m:M")
        try:
            m, M = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise UsageError("theta residues must be integers") from exc
        if M < 1:
            raise UsageError("theta modulus must be positive")
        return theta_mM(m, M, terms)
    raise UsageError(f"unknown form {name!r}")


def _series_lines(series: QSeries) -> list[str]:
    return series.to_text().splitlines()


def _cmd_hurwitz(config: CliConfig) -> int:
    value = hurwitz(config.params["n"])
    _emit(config, str(value), [], [str(value)])
    return 0


def _cmd_hurwitz_table(config: CliConfig) -> int:
    limit = config.params["limit"]
    if limit < 1:
        raise UsageError("--limit must be >= 1")
    table = table_at_least(limit)
    values = [Fraction(table.values12[n], 12) for n in range(limit)]
    lines = [f"{n}:{v.numerator}/{v.denominator}" for n, v in enumerate(values)]
    _emit(config, [str(v) for v in values], [], lines)
    return 0


def _cmd_qexp(config: CliConfig) -> int:
    terms = config.params["terms"]
    if terms < 1:
        raise UsageError("--terms must be >= 1")
    series = _parse_form(config.params["form"], terms)
    _emit(config, series.to_strings(), [], _series_lines(series))
    return 0


def _cmd_lattice_sum(config: CliConfig) -> int:
    params = config.params
    if params["terms"] < 1:
        raise UsageError("--terms must be >= 1")
    if params["variant"] == "mu":
        if params["a"] is None or params["b"] is None:
            raise UsageError("the mu variant needs --a and --b")
    elif params["a"] is not None or params["b"] is not None:
        raise UsageError("--a/--b apply to the mu variant only")
    try:
        spec = LatticeSumSpec(ell=params["ell"], m=params["m"],
                              M=params["modulus"], variant=params["variant"],
                              a=params["a"], b=params["b"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    series = build_series(spec, params["terms"])
    _emit(config, series.to_strings(), [], _series_lines(series))
    return 0


def _cmd_hsum(config: CliConfig) -> int:
    params = config.params
    try:
        result = formulas.h_formula(params["modulus"], params["p"], params["m"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = [str(result.value)]
    payload: object = str(result.value)
    if params["explain"]:
        rep = result.representation
        rep_dict = None
        lines.append(f"branch: {result.branch}")
        if rep is not None:
            rep_dict = {"x": rep.x, "y": rep.y, "n": rep.n}
            lines.append(f"representation: p = x^2 + {rep.n}*y^2 with x={rep.x}, y={rep.y}")
        payload = {"value": str(result.value), "branch": result.branch,
                   "representation": rep_dict}
    _emit(config, payload, [], lines)
    return 0


def _report_text(report: dict) -> str:
    status = "ok" if report["verdict"] else "FAILED"
    extra = ""
    if "bound" in report:
        extra = f", bound {report['bound']}"
    return (f"{report['name']}: {status} "
            f"(checked {report['checked']}{extra}, "
            f"mismatches {report['mismatch_count']})")


def _cmd_cross_check(config: CliConfig) -> int:
    params = config.params
    if params["pmax"] < 3:
        raise UsageError("--pmax must be >= 3")
    report = formulas.cross_check(params["modulus"], params["pmax"]).to_dict()
    ok = report["verdict"] and report["details"]["branch_coverage_complete"]
    lines = [_report_text(report),
             "branch coverage: "
             + ("complete" if report["details"]["branch_coverage_complete"]
                else "INCOMPLETE")]
    _emit(config, {"all_verdicts_true": ok}, [report], lines)
    return 0 if ok else 1


def _suite_jobs(suite: str, pmax: int, overshoot: int):
    """Ordered (name, thunk) pairs; each thunk returns a list of report dicts."""
    jobs = []
    if suite in ("mod6", "all"):
        jobs.append(("mod6", lambda: [r.to_dict() for r in verify.verify_mod6(overshoot)]))
    if suite in ("mod8", "all"):
        jobs.append(("mod8", lambda: [r.to_dict() for r in verify.verify_mod8(overshoot)]))
    if suite in ("lemmas", "all"):
        jobs.append(("lemmas", lambda: [verify.verify_lemmas(pmax).to_dict()]))
    if suite in ("classical", "all"):
        jobs.append(("classical", lambda: [verify.verify_classical(pmax).to_dict()]))
    if suite == "ec":
        capped = min(pmax, _EC_MAX_P)
        if capped < pmax:
            print(f"warning: ec suite capped at p <= {_EC_MAX_P}", file=sys.stderr)
        if capped > _EC_WARN_P:
            print(f"warning: curve sweeps are O(p^3); p up to {capped} may be slow",
                  file=sys.stderr)
        jobs.append(("ec", lambda: [eccount.verify_curve_counts(capped).to_dict()]))
    return jobs


def _cmd_verify(config: CliConfig) -> int:
    params = config.params
    if params["pmax"] < 1:
        raise UsageError("--pmax must be >= 1")
    if params["overshoot"] < 1:
        raise UsageError("--overshoot must be >= 1")
    jobs = _suite_jobs(params["suite"], params["pmax"], params["overshoot"])
    workers = config.threads or 1
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: job[1](), jobs))
    else:
        results = [thunk() for _, thunk in jobs]
    reports = [r for chunk in results for r in chunk]
    all_ok = all(r["verdict"] for r in reports)
    lines = [_report_text(r) for r in reports]
    lines.append("all identities verified" if all_ok else "VERIFICATION FAILED")
    _emit(config, {"suite": params["suite"], "all_verdicts_true": all_ok},
          reports, lines)
    return 0 if all_ok else 1


def _cmd_ec_traces(config: CliConfig) -> int:
    p = config.params["p"]
    if p > _EC_MAX_P:
        raise UsageError(f"p is capped at {_EC_MAX_P} (the sweep is O(p^3))")
    if p > _EC_WARN_P:
        print(f"warning: curve sweep at p = {p} is O(p^3); expect a wait",
              file=sys.stderr)
    try:
        dist = eccount.trace_distribution(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    traces = sorted(dist.weights)
    lines = [f"{t}: {dist.weights[t]}" for t in traces]
    lines.append(f"mass: {dist.mass()}")
    result = {
        "p": p,
        "mass": str(dist.mass()),
        "weights": {str(t): str(dist.weights[t]) for t in traces},
    }
    _emit(config, result, [], lines)
    return 0


_HANDLERS = {
    "hurwitz": _cmd_hurwitz,
    "hurwitz-table": _cmd_hurwitz_table,
    "qexp": _cmd_qexp,
    "lattice-sum": _cmd_lattice_sum,
    "hsum": _cmd_hsum,
    "cross-check": _cmd_cross_check,
    "verify": _cmd_verify,
    "ec-traces": _cmd_ec_traces,
}


def _resolve_threads(cli_value: int | None) -> int | None:
    env = os.environ.get("HURWITZ_THREADS")
    value = cli_value
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise UsageError("HURWITZ_THREADS must be an integer") from exc
    if value is not None and value < 1:
        raise UsageError("thread count must be >= 1")
    return value


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 0 if exc.code == 0 else 2
    params = {k: v for k, v in vars(ns).items()
              if k not in ("command", "format", "threads")}
    try:
        config = CliConfig(
            command=ns.command,
            format=ns.format,
            threads=_resolve_threads(ns.threads),
            params=params,
        )
        return _HANDLERS[ns.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
