#!/usr/bin/env python3
"""Run the complete verification battery and print a human-readable summary.

Covers the weight-2 identities for moduli 6 and 8 (with overshoot), the
lattice-sum lemma equivalences, the classical regressions, the closed-form
cross-checks, and the elliptic-curve counting oracle.  Exits nonzero if
anything disagrees.

    python3 scripts/run_verification.py [--pmax 2000] [--overshoot 4]
"""
from __future__ import annotations

import argparse
import sys
import time

from hclassnum.eccount import verify_curve_counts
from hclassnum.formulas import cross_check
from hclassnum.verify import verify_classical, verify_lemmas, verify_mod6, verify_mod8


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=2000,
                        help="prime range for the classical and closed-form checks")
    parser.add_argument("--overshoot", type=int, default=4,
                        help="multiple of each Sturm bound to check")
    parser.add_argument("--ec-pmax", type=int, default=97,
                        help="prime range for the curve-count oracle (O(p^3) per prime)")
    args = parser.parse_args()

    failures = 0

    def show(tag, verdict, extra=""):
        nonlocal failures
        if not verdict:
            failures += 1
        print(f"[{'ok' if verdict else 'FAIL'}] {tag}{extra}")

    t0 = time.perf_counter()
    for report in verify_mod6(args.overshoot) + verify_mod8(args.overshoot):
        show(f"identity {report.name}", report.verdict,
             f" (bound {report.bound}, checked {report.checked})")

    lemmas = verify_lemmas(600)
    show("lattice-sum lemmas", lemmas.verdict, f" ({lemmas.checked} checks)")

    classical = verify_classical(args.pmax)
    show("classical sums", classical.verdict, f" (primes to {args.pmax})")

    for modulus in (6, 8):
        report = cross_check(modulus, args.pmax)
        coverage = report.details["branch_coverage_complete"]
        show(f"closed forms mod {modulus}", report.verdict and coverage,
             f" ({report.checked} values, coverage "
             f"{'complete' if coverage else 'incomplete'})")

    curves = verify_curve_counts(args.ec_pmax)
    show("curve-count oracle", curves.verdict,
         f" (primes to {args.ec_pmax}, {curves.checked} traces)")

    print(f"total time {time.perf_counter() - t0:.2f}s")
    if failures:
        print(f"{failures} check(s) FAILED")
        return 1
    print("everything verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
