"""Sturm-bound verification of the restricted class-number-sum identities.

Each identity compares two weight-2 q-expansions coefficient by coefficient:

  LHS = twist by the principal character mod M of (H * theta_{m,M}) | U_4,
        plus a correction equal to 1/2 of the closed form of
        Lambda_{1,m,M} | U_4 twisted the same way (a combination of sieved
        divisor-sum series G and the square-supported series T);
  RHS = a fixed rational combination of sieved copies of D = sum sigma(n) q^n
        and one of the CM series psi_series(3, chi_{-3}), psi_series(4,
        chi_{-4}), psi_series(2, chi_{-4}).

Both sides are modular of weight 2 on the recorded group, so agreement of
the first floor(2 * index / 12) + 1 coefficients forces equality; the
suites check a multiple of that bound (overshoot) to also catch precision
bookkeeping bugs.  Groups are Gamma_0(N1) intersect Gamma_1(N2) with index

    N1 * prod_{p | N1} (1 + 1/p) * phi(N2).

For the cases where the sieved theta forces Gamma_1 level (m = 1, 2, 3 for
M = 6; m = 1, 3 for M = 8) the bound is recomputed from that larger index
rather than reusing the Gamma_0 bound; conservative costs nothing here.

verify_lemmas exercises the lattice-sum layer itself: the literal mu and
Lambda scans against their divisor-sum closed forms.  verify_classical
covers the two classical regressions (the full class-number sum equal to
2p, and the 5-case evaluation of H_{0,5}(p)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .forms import d_series, psi_series, theta_mM
from .hurwitz import hurwitz_series, moment_sum, restricted_series, table_at_least
from .numtheory import (
    CHI_MINUS3,
    CHI_MINUS4,
    DirichletCharacter,
    euler_phi,
    prime_factors,
    primes_up_to,
)
from .qseries import QSeries
from .reporting import CheckReport
from .sums import lambda_series, lambda_u4_twist, mu_closed, mu_coeff

__all__ = [
    "GroupSpec",
    "group_index",
    "sturm_bound",
    "IdentityReport",
    "IdentitySpec",
    "RhsTerm",
    "MOD6_IDENTITIES",
    "MOD8_IDENTITIES",
    "identity_lhs",
    "identity_rhs",
    "verify_identity",
    "verify_mod6",
    "verify_mod8",
    "verify_lemmas",
    "verify_classical",
]


@dataclass(frozen=True)
class GroupSpec:
    """Gamma_0(n1) intersect Gamma_1(n2), with n2 | n1."""

    n1: int
    n2: int = 1

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("levels must be positive")
        if self.n1 % self.n2:
            raise ValueError("n2 must divide n1")

    def label(self) -> str:
        if self.n2 == 1:
            return f"Gamma0({self.n1})"
        return f"Gamma0({self.n1})&Gamma1({self.n2})"


def group_index(group: GroupSpec) -> int:
    """Index of the group in SL2(Z)."""
    idx = group.n1
    for p in prime_factors(group.n1):
        idx = idx // p * (p + 1)
    return idx * euler_phi(group.n2)


def sturm_bound(weight: int, group: GroupSpec) -> int:
    """Agreement of coefficients 0..bound forces equality at this weight."""
    if weight < 2:
        raise ValueError("Sturm bound needs weight >= 2")
    return weight * group_index(group) // 12


@dataclass
class IdentityReport:
    """Result of one coefficientwise identity check."""

    name: str
    group: GroupSpec
    weight: int
    bound: int
    checked: int
    mismatches: list[tuple[int, Fraction, Fraction]]

    @property
    def verdict(self) -> bool:
        return not self.mismatches and self.checked >= self.bound + 1

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "group": {"n1": self.group.n1, "n2": self.group.n2},
            "weight": self.weight,
            "index": group_index(self.group),
            "bound": self.bound,
            "checked": self.checked,
            "mismatch_count": len(self.mismatches),
            "mismatches": [[n, str(a), str(b)] for n, a, b in self.mismatches],
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class RhsTerm:
    """One term of an identity right side.

    kind "D_sieve" takes (modulus, residue), "D_principal" takes (modulus,)
    and twists D by the principal character, "psi" takes (k,) and selects
    psi_series(k, chi_{-3} if k == 3 else chi_{-4}).
    """

    coeff: Fraction
    kind: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class IdentitySpec:
    m: int
    modulus: int
    group: GroupSpec
    rhs: tuple[RhsTerm, ...]

    @property
    def name(self) -> str:
        return f"m={self.m} mod {self.modulus}"


_G144 = GroupSpec(144)
_G144_G1 = GroupSpec(144, 6)
_G256 = GroupSpec(256)
_G256_G1 = GroupSpec(256, 8)

MOD6_IDENTITIES: tuple[IdentitySpec, ...] = (
    IdentitySpec(0, 6, _G144, (
        RhsTerm(Fraction(1, 3), "D_sieve", (6, 1)),
        RhsTerm(Fraction(2, 3), "D_sieve", (6, 5)),
        RhsTerm(Fraction(1, 6), "psi", (3,)),
    )),
    IdentitySpec(1, 6, _G144_G1, (
        RhsTerm(Fraction(1, 4), "D_sieve", (6, 1)),
        RhsTerm(Fraction(1, 6), "D_sieve", (6, 5)),
        RhsTerm(Fraction(1, 12), "psi", (3,)),
    )),
    IdentitySpec(2, 6, _G144_G1, (
        RhsTerm(Fraction(1, 2), "D_sieve", (6, 1)),
        RhsTerm(Fraction(1, 3), "D_sieve", (6, 5)),
        RhsTerm(Fraction(-1, 12), "psi", (3,)),
    )),
    IdentitySpec(3, 6, _G144_G1, (
        RhsTerm(Fraction(1, 6), "D_sieve", (6, 1)),
        RhsTerm(Fraction(1, 3), "D_sieve", (6, 5)),
        RhsTerm(Fraction(-1, 6), "psi", (3,)),
    )),
)

MOD8_IDENTITIES: tuple[IdentitySpec, ...] = (
    IdentitySpec(0, 8, _G256, (
        RhsTerm(Fraction(1, 4), "D_sieve", (4, 1)),
        RhsTerm(Fraction(1, 3), "D_sieve", (8, 3)),
        RhsTerm(Fraction(1, 2), "D_sieve", (8, 7)),
        RhsTerm(Fraction(1, 4), "psi", (4,)),
    )),
    IdentitySpec(1, 8, _G256_G1, (
        RhsTerm(Fraction(1, 6), "D_principal", (8,)),
        RhsTerm(Fraction(1, 6), "psi", (2,)),
    )),
    IdentitySpec(2, 8, _G256, (
        RhsTerm(Fraction(5, 12), "D_sieve", (4, 1)),
        RhsTerm(Fraction(1, 4), "D_sieve", (4, 3)),
    )),
    IdentitySpec(3, 8, _G256_G1, (
        RhsTerm(Fraction(1, 6), "D_principal", (8,)),
        RhsTerm(Fraction(-1, 6), "psi", (2,)),
    )),
    IdentitySpec(4, 8, _G256, (
        RhsTerm(Fraction(1, 4), "D_sieve", (4, 1)),
        RhsTerm(Fraction(1, 2), "D_sieve", (8, 3)),
        RhsTerm(Fraction(1, 3), "D_sieve", (8, 7)),
        RhsTerm(Fraction(-1, 4), "psi", (4,)),
    )),
)


def identity_lhs(spec: IdentitySpec, precision: int, direct: bool = False) -> QSeries:
    """Left side of an identity, to the requested precision.

    The default pipeline multiplies the class-number series by the sieved
    theta and applies U_4; direct=True instead evaluates every restricted
    sum H_{m,M}(n) by brute-force t-scans.  The two must agree, and tests
    hold them to that.
    """
    m, M = spec.m, spec.modulus
    if direct:
        base = restricted_series(m, M, precision)
    else:
        inner = 4 * precision - 3  # U_4 output then has exactly `precision`
        base = (hurwitz_series(inner) * theta_mM(m, M, inner)).u_operator(4)
    chi0 = DirichletCharacter.principal(M)
    correction = Fraction(1, 2) * lambda_u4_twist(1, m, M, precision)
    return base.twist(chi0) + correction


def identity_rhs(spec: IdentitySpec, precision: int) -> QSeries:
    """Right side of an identity, to the requested precision."""
    total = QSeries.zero(precision)
    for term in spec.rhs:
        if term.kind == "D_sieve":
            series = d_series(precision).sieve(*term.params)
        elif term.kind == "D_principal":
            series = d_series(precision).twist(
                DirichletCharacter.principal(term.params[0])
            )
        elif term.kind == "psi":
            k = term.params[0]
            series = psi_series(k, CHI_MINUS3 if k == 3 else CHI_MINUS4, precision)
        else:
            raise ValueError(f"unknown rhs term kind {term.kind!r}")
        total = total + term.coeff * series
    return total


def verify_identity(spec: IdentitySpec, overshoot: int = 4) -> IdentityReport:
    """Check one identity to overshoot times its Sturm bound."""
    if overshoot < 1:
        raise ValueError("overshoot must be >= 1")
    bound = sturm_bound(2, spec.group)
    precision = overshoot * bound + 1
    lhs = identity_lhs(spec, precision)
    rhs = identity_rhs(spec, precision)
    mismatches = [
        (n, lhs[n], rhs[n]) for n in range(precision) if lhs[n] != rhs[n]
    ]
    return IdentityReport(
        name=spec.name,
        group=spec.group,
        weight=2,
        bound=bound,
        checked=precision,
        mismatches=mismatches,
    )


def verify_mod6(overshoot: int = 4) -> list[IdentityReport]:
    """The four identities for modulus 6 (m = 0, 1, 2, 3)."""
    return [verify_identity(spec, overshoot) for spec in MOD6_IDENTITIES]


def verify_mod8(overshoot: int = 4) -> list[IdentityReport]:
    """The five identities for modulus 8 (m = 0, ..., 4)."""
    return [verify_identity(spec, overshoot) for spec in MOD8_IDENTITIES]


def verify_lemmas(n_max: int = 600) -> CheckReport:
    """Literal lattice sums against their closed forms, for M = 6 and 8.

    Two families: the twisted U_4 image of Lambda_{ell,m,M} for every
    residue m and ell in {0, 1, 3}, compared coefficientwise to n_max; and
    mu_{ell,a,b,M}(n) for every residue pair against the divisor-sum
    evaluation, for every n <= n_max coprime to M.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    mismatches: list[tuple] = []
    checked = 0
    for M in (6, 8):
        for ell in (0, 1, 3):
            for m in range(M):
                literal = (
                    lambda_series(ell, m, M, 4 * n_max)
                    .u_operator(4)
                    .twist(DirichletCharacter.principal(M))
                )
                closed = lambda_u4_twist(ell, m, M, n_max)
                if m % 2 and not closed.is_zero():
                    mismatches.append(("lambda-odd-m-nonzero", M, ell, m))
                for n in range(n_max):
                    checked += 1
                    if literal[n] != closed[n]:
                        mismatches.append(
                            ("lambda", M, ell, m, n, literal[n], closed[n])
                        )
    for M in (6, 8):
        for ell in (0, 1, 3):
            for n in range(1, n_max + 1):
                if gcd(n, M) != 1:
                    continue
                for a in range(M):
                    for b in range(M):
                        checked += 1
                        lit = mu_coeff(ell, a, b, M, n)
                        clo = mu_closed(ell, a, b, M, n)
                        if lit != clo:
                            mismatches.append(("mu", M, ell, a, b, n, lit, clo))
    return CheckReport(
        name="lattice-sum lemmas (M=6,8)",
        checked=checked,
        mismatches=mismatches,
        details={"n_max": n_max, "ells": [0, 1, 3]},
    )


def _h05_expected(p: int) -> Fraction:
    """The 3-case evaluation of H_{0,5}(p) for primes p with 5 not dividing p."""
    r = p % 5
    if r == 1:
        return Fraction(p + 1, 2)
    if r in (2, 3):
        return Fraction(p + 1, 3)
    return Fraction(p - 3, 2)


def verify_classical(p_max: int = 2000) -> CheckReport:
    """Classical regressions: sum_t H(4p - t^2) = 2p, and H_{0,5}(p).

    The full class-number sum is checked for every prime p <= p_max; the
    modulus-5 evaluation for primes 7 <= p <= p_max (it has no case for
    p = 5 itself).
    """
    table_at_least(4 * p_max + 1)
    mismatches: list[tuple] = []
    checked = 0
    for p in primes_up_to(p_max):
        checked += 1
        total = moment_sum(0, 0, 1, p)
        if total != 2 * p:
            mismatches.append(("eichler", p, total, 2 * p))
        if p >= 7:
            checked += 1
            got = moment_sum(0, 0, 5, p)
            want = _h05_expected(p)
            if got != want:
                mismatches.append(("h05", p, got, want))
    return CheckReport(
        name="classical sums",
        checked=checked,
        mismatches=mismatches,
        details={"p_max": p_max},
    )
