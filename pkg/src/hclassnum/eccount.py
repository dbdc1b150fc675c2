"""Automorphism-weighted counts of elliptic curves over F_p by trace.

For p > 3 every curve has a short Weierstrass model y^2 = x^3 + a*x + b
with 4a^3 + 27b^2 != 0, and the isomorphism class of (a, b) is its orbit
under (a, b) -> (u^4 a, u^6 b), whose size is (p - 1) / #Aut.  Counting
raw pairs and dividing by p - 1 therefore yields the weighted count

    N_A(p; t) = sum over classes with trace t of 1 / #Aut

without any j = 0 / j = 1728 casework.  The trace of a pair is

    t = p + 1 - #E,   #E = 1 + sum_x (1 + chi_p(x^3 + a*x + b)),

with chi_p the quadratic character (chi_p(0) = 0), so t = -sum_x chi_p(...).

The (a, b) sweep is O(p^3) character evaluations; numpy does the integer
counting (exactly, in int64) and this stays comfortable for p up to a few
hundred.  These distributions are the independent oracle for the
class-number identity 2 * N_A(p; t) = H(4p - t^2) when p does not divide t.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .hurwitz import hurwitz, table_at_least
from .numtheory import is_prime, primes_up_to
from .reporting import CheckReport

__all__ = ["TraceDistribution", "trace_distribution", "verify_curve_counts"]


@dataclass(frozen=True)
class TraceDistribution:
    """Map t -> N_A(p; t) as exact rationals; absent traces are zero."""

    p: int
    weights: dict[int, Fraction]

    def weight(self, t: int) -> Fraction:
        return self.weights.get(t, Fraction(0))

    def mass(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))


def trace_distribution(p: int) -> TraceDistribution:
    """Weighted curve counts for every trace over F_p, p > 3 prime."""
    if p <= 3 or not is_prime(p):
        raise ValueError("trace counts need a prime p > 3")
    xs = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int64)
    chi[0] = 0
    chi[(xs[1:] * xs[1:]) % p] = 1
    # one square root per quadratic residue, for locating singular pairs
    root = np.zeros(p, dtype=np.int64)
    root[(xs[1:] * xs[1:]) % p] = xs[1:]
    # chi shifted: SHIFT[v, b] = chi(v + b), so counts @ SHIFT sums chi over x
    shift = chi[(xs[:, None] + xs[None, :]) % p]
    x3 = (xs * xs % p) * xs % p
    inv27 = pow(27, -1, p)
    tmax = isqrt(4 * p)
    hist = np.zeros(2 * tmax + 1, dtype=np.int64)  # index t + tmax
    for a in range(p):
        vals = (x3 + a * xs) % p
        counts = np.bincount(vals, minlength=p)
        traces = -(counts @ shift)
        if np.max(np.abs(traces)) > tmax:
            raise AssertionError("trace outside the Hasse range")
        keep = np.ones(p, dtype=bool)
        rhs = (-4 * pow(a, 3, p) * inv27) % p  # b^2 = rhs marks singular pairs
        if rhs == 0:
            keep[0] = False
        elif chi[rhs] == 1:
            r = int(root[rhs])
            keep[r] = False
            keep[p - r] = False
        hist += np.bincount(traces[keep] + tmax, minlength=2 * tmax + 1)
    weights = {
        int(t - tmax): Fraction(int(c), p - 1)
        for t, c in enumerate(hist)
        if c
    }
    return TraceDistribution(p=p, weights=weights)


def verify_curve_counts(p_max: int) -> CheckReport:
    """2 * N_A(p; t) = H(4p - t^2) for p not dividing t, plus the mass law.

    For every prime 5 <= p <= p_max the identity is checked at every t in
    the Hasse range with p not dividing t (for these p that means t != 0),
    and the total mass sum_t N_A(p; t) is compared against p.
    """
    table_at_least(4 * p_max + 1)
    mismatches: list[tuple] = []
    checked = 0
    for p in primes_up_to(p_max):
        if p <= 3:
            continue
        dist = trace_distribution(p)
        if dist.mass() != p:
            mismatches.append(("mass", p, dist.mass(), p))
        tmax = isqrt(4 * p)
        for t in range(-tmax, tmax + 1):
            if t % p == 0:
                continue
            checked += 1
            lhs = 2 * dist.weight(t)
            rhs = hurwitz(4 * p - t * t)
            if lhs != rhs:
                mismatches.append(("trace", p, t, lhs, rhs))
    return CheckReport(
        name="curve counts vs class numbers",
        checked=checked,
        mismatches=mismatches,
        details={"p_max": p_max},
    )
