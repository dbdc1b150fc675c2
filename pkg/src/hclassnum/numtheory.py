"""Elementary number theory shared by the rest of the package.

Primality, divisor sums, the extended Kronecker symbol, real Dirichlet
characters, and representations of primes by the forms x^2 + n*y^2.
Everything is exact integer or rational arithmetic; no floats anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "is_prime",
    "primes_up_to",
    "divisors",
    "prime_factors",
    "euler_phi",
    "sigma",
    "kronecker_symbol",
    "DirichletCharacter",
    "char_eval",
    "CHI_MINUS3",
    "CHI_MINUS4",
    "CHI_KRON8",
    "PrimeRepresentation",
    "represent",
]

# Deterministic Miller-Rabin witness set; correct for all n < 3.3 * 10^24,
# comfortably past 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for anything up to 64-bit scale."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, by Eratosthenes sieve."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i in range(limit + 1) if sieve[i]]


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError("prime_factors requires n >= 1")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def euler_phi(n: int) -> int:
    """Euler totient."""
    phi = n
    for p in prime_factors(n):
        phi = phi // p * (p - 1)
    return phi


def sigma(n: int) -> int:
    """Sum of the positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("sigma requires n >= 1")
    return sum(divisors(n))


def kronecker_symbol(a: int, b: int) -> int:
    """Extended Kronecker symbol (a/b), defined for all integers.

    Completely multiplicative in each argument; (a/2) is 0, 1, -1 according
    to a = 0; +-1; +-3 (mod 8).  The pair (0, 0) is rejected.
    """
    if a == 0 and b == 0:
        raise ValueError("kronecker_symbol(0, 0) is undefined")
    if b == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -result
    # strip the even part of b
    twos = (b & -b).bit_length() - 1
    b >>= twos
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd positive b, by quadratic reciprocity
    a %= b
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


@dataclass(frozen=True)
class DirichletCharacter:
    """A real Dirichlet character, evaluated exactly as a Fraction.

    kind is one of:
      * "principal": 1 on residues coprime to the modulus, 0 elsewhere;
      * "kronecker": n -> kronecker_symbol(disc, n), for disc = 0, 1 (mod 4)
        so that the symbol is periodic with period |disc| (e.g. -3, -4, 8);
      * "table": explicit values per residue class.
    """

    modulus: int
    kind: str
    disc: int | None = None
    values: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.kind not in ("principal", "kronecker", "table"):
            raise ValueError(f"unknown character kind {self.kind!r}")
        if self.kind == "kronecker":
            if self.disc is None:
                raise ValueError("kronecker kind needs a discriminant")
            if self.disc % 4 not in (0, 1):
                raise ValueError("kronecker discriminant must be 0 or 1 mod 4")
        if self.kind == "table":
            if self.values is None or len(self.values) != self.modulus:
                raise ValueError("table kind needs one value per residue")
            for r, v in enumerate(self.values):
                if gcd(r, self.modulus) != 1 and v != 0:
                    raise ValueError("table must vanish off the unit group")

    @classmethod
    def principal(cls, modulus: int) -> "DirichletCharacter":
        return cls(modulus=modulus, kind="principal")

    @classmethod
    def from_kronecker(cls, disc: int, modulus: int | None = None) -> "DirichletCharacter":
        return cls(modulus=abs(disc) if modulus is None else modulus,
                   kind="kronecker", disc=disc)

    @classmethod
    def from_table(cls, values) -> "DirichletCharacter":
        vals = tuple(Fraction(v) for v in values)
        return cls(modulus=len(vals), kind="table", values=vals)

    def __call__(self, n: int) -> Fraction:
        if gcd(n, self.modulus) != 1:
            return Fraction(0)
        if self.kind == "principal":
            return Fraction(1)
        if self.kind == "kronecker":
            return Fraction(kronecker_symbol(self.disc, n))
        return self.values[n % self.modulus]

    def is_odd(self) -> bool:
        """True when chi(-1) = -1."""
        return self(-1) == -1


def char_eval(chi: DirichletCharacter, n: int) -> Fraction:
    """Evaluate a character; front-end over DirichletCharacter.__call__."""
    return chi(n)


#: non-principal character mod 3 (odd)
CHI_MINUS3 = DirichletCharacter.from_kronecker(-3)
#: non-principal character mod 4 (odd)
CHI_MINUS4 = DirichletCharacter.from_kronecker(-4)
#: the character (2/.) mod 8 (even)
CHI_KRON8 = DirichletCharacter.from_kronecker(8)


@dataclass(frozen=True)
class PrimeRepresentation:
    """The nonnegative solution of p = x^2 + n*y^2 (unique when n >= 2)."""

    x: int
    y: int
    n: int
    p: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError("representation must use nonnegative x, y")
        if self.x * self.x + self.n * self.y * self.y != self.p:
            raise ValueError("not a representation: x^2 + n*y^2 != p")


def represent(p: int, n: int) -> PrimeRepresentation | None:
    """Search for p = x^2 + n*y^2 with x, y >= 0; None when no solution exists.

    Exhaustive scan over y <= sqrt(p/n); at desk scale this is cheaper to
    trust than Cornacchia.  For n >= 2 the returned pair is the unique one.
    """
    if n < 1:
        raise ValueError("form coefficient n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for y in range(isqrt(p // n) + 1):
        rest = p - n * y * y
        x = isqrt(rest)
        if x * x == rest:
            return PrimeRepresentation(x=x, y=y, n=n, p=p)
    return None
