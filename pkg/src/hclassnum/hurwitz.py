"""Hurwitz class numbers and congruence-restricted sums over them.

H(n) is the weighted count of SL2(Z)-classes of positive definite integral
binary quadratic forms of discriminant -n: classes equivalent to a multiple
of x^2 + y^2 count 1/2, classes equivalent to a multiple of x^2 + xy + y^2
count 1/3, every other class counts 1.  By convention H(0) = -1/12, and
H(n) = 0 unless n = 0 or n = 0, 3 (mod 4).

The table builder walks each reduced form (a, b, c), meaning
-a < b <= a <= c with b >= 0 when a = c, exactly once.  That enumeration
hits imprimitive forms too, so no class-number formula fix-ups are needed,
and 12*H(n) is an integer so the table stores the scaled values.

The restricted sums are

    H_{kappa,m,M}(n) = sum over t = m (mod M), t^2 <= 4n of H(4n - t^2) t^kappa,

with H_{m,M} = H_{0,m,M}.  moment_sum computes them by direct t-scans over
the table; restricted_series packages them as a q-expansion, which doubles
as the independent oracle for the operator-built series elsewhere.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .qseries import QSeries

__all__ = [
    "HurwitzTable",
    "build_table",
    "table_at_least",
    "hurwitz",
    "hurwitz_series",
    "moment_sum",
    "restricted_series",
]


@dataclass(frozen=True)
class HurwitzTable:
    """Immutable table of 12*H(n) for 0 <= n < limit."""

    limit: int
    values12: tuple[int, ...]

    def value(self, n: int) -> Fraction:
        if not 0 <= n < self.limit:
            raise IndexError(f"H({n}) not tabulated (limit {self.limit})")
        return Fraction(self.values12[n], 12)


def build_table(limit: int) -> HurwitzTable:
    """Tabulate 12*H(n) for all n < limit in one reduced-form sweep."""
    if limit < 1:
        raise ValueError("table limit must be >= 1")
    v = [0] * limit
    v[0] = -1
    amax = isqrt((limit - 1) // 3) if limit > 1 else 0
    for a in range(1, amax + 1):
        step = 4 * a
        for b in range(a + 1):
            bb = b * b
            n = step * a - bb  # the c = a form
            if n < limit:
                if b == a:
                    v[n] += 4  # a(x^2+xy+y^2), weight 1/3
                elif b == 0:
                    v[n] += 6  # a(x^2+y^2), weight 1/2
                else:
                    v[n] += 12
            # for c > a the forms (a, b, c) and (a, -b, c) are distinct
            # classes unless b = 0 or b = a
            w = 12 if (b == 0 or b == a) else 24
            for n in range(step * (a + 1) - bb, limit, step):
                v[n] += w
    return HurwitzTable(limit=limit, values12=tuple(v))


_lock = threading.Lock()
_table = build_table(1)


def table_at_least(limit: int) -> HurwitzTable:
    """Shared table covering at least [0, limit); grown on demand."""
    global _table
    t = _table
    if t.limit >= limit:
        return t
    with _lock:
        if _table.limit < limit:
            _table = build_table(max(limit, 2 * _table.limit, 1024))
        return _table


def hurwitz(n: int) -> Fraction:
    """The Hurwitz class number H(n)."""
    if n < 0 or n % 4 in (1, 2):
        return Fraction(0)
    return table_at_least(n + 1).value(n)


def hurwitz_series(precision: int) -> QSeries:
    """Generating series sum H(n) q^n to the requested precision."""
    table = table_at_least(precision)
    return QSeries(
        (Fraction(table.values12[n], 12) for n in range(precision)),
        weight_hint=Fraction(3, 2),
    )


def moment_sum(kappa: int, m: int, M: int, n: int) -> Fraction:
    """H_{kappa,m,M}(n), by direct scan over t = m (mod M), t^2 <= 4n."""
    if kappa < 0:
        raise ValueError("moment order must be nonnegative")
    if M < 1:
        raise ValueError("modulus must be positive")
    if n < 0:
        raise ValueError("argument must be nonnegative")
    four_n = 4 * n
    tmax = isqrt(four_n)
    table = table_at_least(four_n + 1)
    v = table.values12
    total = 0
    start = -tmax + ((m + tmax) % M)
    for t in range(start, tmax + 1, M):
        total += v[four_n - t * t] * t**kappa
    return Fraction(total, 12)


def restricted_series(m: int, M: int, precision: int) -> QSeries:
    """sum_n H_{m,M}(n) q^n, computed term by term from moment_sum.

    This is the brute-force construction; the same series also arises as
    (hurwitz_series * theta_{m,M}) under U_4, and the two paths are kept
    independent so that each can check the other.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    table_at_least(4 * (precision - 1) + 1)  # one build instead of many
    return QSeries(
        (moment_sum(0, m, M, n) for n in range(precision)), weight_hint=2
    )
