"""Constructors for the named generating series.

  * theta_mM(m, M): sum of q^(n^2) over all integers n = m (mod M);
  * theta0: the full theta series (theta_mM with M = 1);
  * theta_weighted(chi): (1/2) sum chi(x) x q^(x^2), the weight-3/2 theta
    attached to an odd character;
  * psi_series(k, chi): (1/2) sum_n (sum_{x^2+ky^2=n} chi(x) x) q^n, the
    CM cusp form expansions; psi_series(3, chi_{-3}) is the newform
    36.2.a.a, psi_series(4, chi_{-4}) is 64.2.a.a, and psi_series(2,
    chi_{-4}) is the real combination of the pair 64.2.b.a (LMFDB labels,
    recorded here as documentation; nothing is fetched);
  * d_series: sum sigma(n) q^n;  e2_series: 1 - 24 sum sigma(n) q^n,
    related by D = 1/24 - E2/24.

psi_series is computed by direct lattice-point enumeration and then
cross-checked against the product theta_weighted(chi) * (theta0 | V_k)
before being returned, so a construction bug cannot slip through quietly.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .numtheory import DirichletCharacter
from .qseries import QSeries

__all__ = [
    "theta_mM",
    "theta0",
    "theta_weighted",
    "psi_series",
    "d_series",
    "e2_series",
]


def theta_mM(m: int, M: int, precision: int) -> QSeries:
    """Theta series restricted to the arithmetic progression m mod M."""
    if M < 1:
        raise ValueError("modulus must be positive")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs = [0] * precision
    nmax = isqrt(precision - 1)
    for n in range(-nmax, nmax + 1):
        if (n - m) % M == 0:
            coeffs[n * n] += 1
    return QSeries(coeffs, weight_hint=Fraction(1, 2))


def theta0(precision: int) -> QSeries:
    """The unrestricted theta series: constant 1, coefficient 2 at squares."""
    return theta_mM(0, 1, precision)


def theta_weighted(chi: DirichletCharacter, precision: int) -> QSeries:
    """(1/2) sum over x in Z of chi(x) x q^(x^2)."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs = [Fraction(0)] * precision
    for x in range(-isqrt(precision - 1), isqrt(precision - 1) + 1):
        cx = chi(x)
        if cx:
            coeffs[x * x] += cx * x
    return QSeries((c / 2 for c in coeffs), weight_hint=Fraction(3, 2))


def psi_series(k: int, chi: DirichletCharacter, precision: int) -> QSeries:
    """(1/2) sum_n psi_k(chi, n) q^n with psi_k(chi,n) = sum_{x^2+ky^2=n} chi(x) x.

    The sum runs over all integer pairs (x, y); chi must be odd so the two
    signs of x reinforce instead of cancel, and the leading coefficient
    (at q) is 1.  Enumeration and the theta-product construction must agree
    to the full precision or construction fails loudly.
    """
    if k < 2:
        raise ValueError("form coefficient k must be >= 2")
    if not chi.is_odd():
        raise ValueError("psi_series needs an odd character")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs = [Fraction(0)] * precision
    xmax = isqrt(precision - 1)
    for x in range(-xmax, xmax + 1):
        cx = chi(x) * x
        if not cx:
            continue
        xx = x * x
        ymax = isqrt((precision - 1 - xx) // k)
        for y in range(-ymax, ymax + 1):
            coeffs[xx + k * y * y] += cx
    enumerated = QSeries((c / 2 for c in coeffs), weight_hint=2)
    product = theta_weighted(chi, precision) * theta0(precision).v_operator(k)
    if enumerated.coeffs != product.truncate(precision).coeffs:
        raise RuntimeError("psi_series self-check failed: enumeration != product")
    return enumerated


def _sigma_table(precision: int) -> list[int]:
    sig = [0] * precision
    for d in range(1, precision):
        for n in range(d, precision, d):
            sig[n] += d
    return sig


def d_series(precision: int) -> QSeries:
    """Divisor-sum series sum_{n>=1} sigma(n) q^n."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    return QSeries(_sigma_table(precision), weight_hint=2)


def e2_series(precision: int) -> QSeries:
    """Weight-2 Eisenstein series 1 - 24 sum sigma(n) q^n."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs = [-24 * s for s in _sigma_table(precision)]
    coeffs[0] = 1
    return QSeries(coeffs, weight_hint=2)
