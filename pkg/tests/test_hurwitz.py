from fractions import Fraction

import pytest

from hclassnum.forms import theta_mM
from hclassnum.hurwitz import (
    build_table,
    hurwitz,
    hurwitz_series,
    moment_sum,
    restricted_series,
    table_at_least,
)
from hclassnum.numtheory import primes_up_to
from oracles import hurwitz_naive


def test_pinned_values():
    assert hurwitz(0) == Fraction(-1, 12)
    assert hurwitz(3) == Fraction(1, 3)
    assert hurwitz(4) == Fraction(1, 2)
    assert hurwitz(23) == 3
    assert hurwitz(-8) == 0
    assert hurwitz(1) == 0 and hurwitz(2) == 0
    assert hurwitz(5) == 0 and hurwitz(6) == 0


def test_against_canonical_reduction_oracle():
    table = table_at_least(2001)
    for n in range(2001):
        assert table.value(n) == hurwitz_naive(n), n


def test_table_scaling_and_positivity():
    table = table_at_least(10**4 + 1)
    for n in range(10**4 + 1):
        v12 = table.values12[n]
        assert isinstance(v12, int)  # 12*H(n) integral by construction
        if n > 0 and n % 4 in (0, 3):
            assert v12 > 0
        elif n > 0:
            assert v12 == 0
    assert (12 * hurwitz(10**4)).denominator == 1


def test_table_bounds():
    with pytest.raises(ValueError):
        build_table(0)
    with pytest.raises(IndexError):
        build_table(5).value(5)


def test_series_prefix():
    h = hurwitz_series(8)
    assert h.precision == 8
    assert h[0] == Fraction(-1, 12)
    assert h[1] == 0 and h[2] == 0
    assert h[3] == Fraction(1, 3)
    assert h[4] == Fraction(1, 2)
    assert h[7] == 1


def test_eichler_sum():
    for p in primes_up_to(500):
        assert moment_sum(0, 0, 1, p) == 2 * p


def test_h05_example():
    assert moment_sum(0, 0, 5, 19) == 8


def test_first_moment_vanishes_by_symmetry():
    for n in range(0, 200):
        assert moment_sum(1, 0, 1, n) == 0


def test_small_restricted_values():
    # t = +-1 both land in the residue class 1 mod 2
    assert moment_sum(0, 1, 2, 1) == Fraction(2, 3)
    # t = 2 contributes H(0) when 4n is t^2
    assert moment_sum(0, 2, 6, 1) == Fraction(-1, 12)


def test_residue_classes_partition_the_full_sum():
    for n in range(501):
        full = moment_sum(0, 0, 1, n)
        for M in range(2, 11):
            parts = sum(moment_sum(0, m, M, n) for m in range(M))
            assert parts == full, (n, M)


def test_restricted_sum_symmetric_in_sign_of_residue():
    for M in (2, 5, 6, 8):
        for m in range(M):
            for n in range(0, 120):
                assert moment_sum(0, m, M, n) == moment_sum(0, -m, M, n)


@pytest.mark.parametrize("m,M", [(0, 2), (1, 2), (0, 6), (1, 6), (2, 6), (0, 8), (3, 8)])
def test_restricted_series_matches_operator_pipeline(m, M):
    prec = 150
    direct = restricted_series(m, M, prec)
    inner = 4 * prec - 3
    built = (hurwitz_series(inner) * theta_mM(m, M, inner)).u_operator(4)
    assert built.precision == prec
    assert direct == built


def test_moment_sum_validates():
    with pytest.raises(ValueError):
        moment_sum(-1, 0, 1, 5)
    with pytest.raises(ValueError):
        moment_sum(0, 0, 0, 5)
    with pytest.raises(ValueError):
        moment_sum(0, 0, 1, -1)
