"""Truncated q-expansions over exact rationals, plus the operator calculus.

A QSeries holds the coefficients a(0), ..., a(P-1) of sum a(n) q^n exactly
and claims nothing past its precision P.  Every operation produces the
strongest precision its inputs support and never more, and coefficient
access outside the known range raises instead of padding with zeros.
Silent zeros are the classic way a coefficient comparison quietly stops
comparing anything, so they are banned.

Operators:
  * u_operator(m): b(n) = a(m*n), the index-extraction operator U_m;
  * v_operator(m): dilation q -> q^m, the section of U_m;
  * sieve(M, r): keep exactly the coefficients with n = r (mod M);
  * twist(chi): b(n) = chi(n) * a(n) for a Dirichlet character chi;
  * q_derive(j): b(n) = n^j * a(n), the normalized derivative (q d/dq)^j;
  * rankin_cohen: the bilinear bracket built from normalized derivatives.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Union

from .numtheory import DirichletCharacter

__all__ = ["QSeries", "Rational", "half_binomial", "rankin_cohen"]

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not exact; pass int or Fraction")
    return Fraction(value)


class QSeries:
    """sum_{0 <= n < P} a(n) q^n with exact rational a(n) and precision P.

    Instances are immutable; all operations allocate fresh series.  The
    optional weight_hint is metadata only (picked up by rankin_cohen when
    weights are not passed explicitly).
    """

    __slots__ = ("_coeffs", "weight_hint")

    def __init__(self, coeffs: Iterable[Rational], weight_hint: Rational | None = None):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least one known coefficient")
        self._coeffs = cs
        self.weight_hint = None if weight_hint is None else _as_fraction(weight_hint)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, precision: int, weight_hint: Rational | None = None) -> "QSeries":
        return cls([_ZERO] * precision, weight_hint=weight_hint)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coeff: Rational = 1) -> "QSeries":
        if not 0 <= exponent < precision:
            raise ValueError("monomial exponent outside requested precision")
        cs = [_ZERO] * precision
        cs[exponent] = _as_fraction(coeff)
        return cls(cs)

    # -- basic protocol --------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not isinstance(n, int):
            raise TypeError("coefficient index must be an integer")
        if n < 0 or n >= len(self._coeffs):
            raise IndexError(
                f"coefficient {n} outside known range [0, {len(self._coeffs)})"
            )
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if len(self._coeffs) > 6 else ""
        return f"QSeries([{head}{tail}], precision={len(self._coeffs)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def truncate(self, precision: int) -> "QSeries":
        """Restrict to the first `precision` coefficients (never extend)."""
        if precision < 1 or precision > len(self._coeffs):
            raise ValueError("can only truncate within the known range")
        return QSeries(self._coeffs[:precision], weight_hint=self.weight_hint)

    # -- linear structure -------------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        p = min(len(self._coeffs), len(other._coeffs))
        hint = self.weight_hint if self.weight_hint == other.weight_hint else None
        return QSeries(
            (self._coeffs[n] + other._coeffs[n] for n in range(p)), weight_hint=hint
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries((-c for c in self._coeffs), weight_hint=self.weight_hint)

    def __mul__(self, other: Union["QSeries", Rational]) -> "QSeries":
        if isinstance(other, QSeries):
            return self._cauchy(other)
        return self._scale(other)

    def __rmul__(self, other: Rational) -> "QSeries":
        return self._scale(other)

    def _scale(self, c: Rational) -> "QSeries":
        c = _as_fraction(c)
        return QSeries((c * a for a in self._coeffs), weight_hint=self.weight_hint)

    def _cauchy(self, other: "QSeries") -> "QSeries":
        p = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        # run the sparser factor on the outside; the big products here are
        # theta-like series with O(sqrt(P)) support
        if sum(1 for c in a[:p] if c) > sum(1 for c in b[:p] if c):
            a, b = b, a
        out = [_ZERO] * p
        for i in range(p):
            ci = a[i]
            if not ci:
                continue
            for j in range(p - i):
                cj = b[j]
                if cj:
                    out[i + j] += ci * cj
        hint = None
        if self.weight_hint is not None and other.weight_hint is not None:
            hint = self.weight_hint + other.weight_hint
        return QSeries(out, weight_hint=hint)

    # -- the operator calculus ---------------------------------------------------

    def u_operator(self, m: int) -> "QSeries":
        """Index extraction: b(n) = a(m*n).  Precision ceil(P/m)."""
        if m < 1:
            raise ValueError("U-operator index must be >= 1")
        out_p = -(-len(self._coeffs) // m)
        return QSeries(
            (self._coeffs[n * m] for n in range(out_p)), weight_hint=self.weight_hint
        )

    def v_operator(self, m: int) -> "QSeries":
        """Dilation q -> q^m: b(m*n) = a(n), 0 between.  Precision m*(P-1)+1."""
        if m < 1:
            raise ValueError("V-operator index must be >= 1")
        out = [_ZERO] * (m * (len(self._coeffs) - 1) + 1)
        for n, c in enumerate(self._coeffs):
            out[n * m] = c
        return QSeries(out, weight_hint=self.weight_hint)

    def sieve(self, modulus: int, residue: int) -> "QSeries":
        """Keep exactly the coefficients with n = residue (mod modulus)."""
        if modulus < 1:
            raise ValueError("sieve modulus must be >= 1")
        r = residue % modulus
        return QSeries(
            (c if n % modulus == r else _ZERO for n, c in enumerate(self._coeffs)),
            weight_hint=self.weight_hint,
        )

    def twist(self, chi: DirichletCharacter) -> "QSeries":
        """Coefficientwise twist: b(n) = chi(n) * a(n)."""
        return QSeries(
            (chi(n) * c if c else _ZERO for n, c in enumerate(self._coeffs)),
            weight_hint=self.weight_hint,
        )

    def q_derive(self, order: int = 1) -> "QSeries":
        """Normalized derivative (q d/dq)^order: b(n) = n^order * a(n)."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        hint = None if self.weight_hint is None else self.weight_hint + 2 * order
        return QSeries(
            (c * n**order if c else _ZERO for n, c in enumerate(self._coeffs)),
            weight_hint=hint,
        )

    # -- serialization -------------------------------------------------------------

    def to_text(self) -> str:
        """One line per known coefficient: "n:numerator/denominator"."""
        return "\n".join(
            f"{n}:{c.numerator}/{c.denominator}" for n, c in enumerate(self._coeffs)
        )

    @classmethod
    def from_text(cls, text: str) -> "QSeries":
        entries: dict[int, Fraction] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            idx, _, val = line.partition(":")
            entries[int(idx)] = Fraction(val)
        if not entries or sorted(entries) != list(range(len(entries))):
            raise ValueError("text serialization must cover 0..P-1 exactly")
        return cls(entries[n] for n in range(len(entries)))

    def to_strings(self) -> list[str]:
        """Canonical rational strings: "p/q", or just "p" for integers."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "QSeries":
        return cls(Fraction(s) for s in items)


def half_binomial(alpha: Rational, k: int) -> Fraction:
    """Binomial coefficient with (half-)integral upper entry, exactly.

    alpha * (alpha-1) * ... * (alpha-k+1) / k!, which agrees with the
    Gamma-quotient definition for every rational alpha and integer k >= 0.
    """
    if k < 0:
        raise ValueError("lower entry must be nonnegative")
    num = Fraction(1)
    alpha = _as_fraction(alpha)
    for i in range(k):
        num *= alpha - i
    return num / factorial(k)


def rankin_cohen(
    f1: QSeries,
    k1: Rational | None,
    f2: QSeries,
    k2: Rational | None,
    k: int,
) -> QSeries:
    """k-th Rankin-Cohen bracket of series of weights k1 and k2.

    [f1, f2]_k = sum_{j=0}^{k} (-1)^j C(k1+k-1, k-j) C(k2+k-1, j)
                 * (q d/dq)^j f1 * (q d/dq)^{k-j} f2,
    truncated to the joint precision.  The normalization that removes the
    2*pi*i powers from the classical definition is already folded into the
    q d/dq derivatives, so everything stays rational.  For k = 0 this is
    the plain product.  Weights default to the operands' weight hints.
    """
    if k < 0:
        raise ValueError("bracket order must be nonnegative")
    w1 = f1.weight_hint if k1 is None else _as_fraction(k1)
    w2 = f2.weight_hint if k2 is None else _as_fraction(k2)
    if w1 is None or w2 is None:
        raise ValueError("weights are required when no weight hint is present")
    p = min(f1.precision, f2.precision)
    total = QSeries.zero(p)
    for j in range(k + 1):
        c = half_binomial(w1 + k - 1, k - j) * half_binomial(w2 + k - 1, j)
        if j % 2:
            c = -c
        if not c:
            continue
        total = total + c * (f1.q_derive(j) * f2.q_derive(k - j))
    return QSeries(total.coeffs, weight_hint=w1 + w2 + 2 * k)
