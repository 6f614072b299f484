from fractions import Fraction

import pytest

from radgen.field import GF, QQ, CoefficientError, is_prime, parse_field


def test_rationals_are_lowest_terms():
    assert QQ(Fraction(4, -6)) == Fraction(-2, 3)
    assert QQ("6/4").denominator == 2


def test_prime_field_reduces():
    F = GF(7)
    assert F(-1) == 6
    assert F(Fraction(1, 3)) == 5  # 3 * 5 = 15 = 1 mod 7
    assert F.mul(F.inv(3), 3) == 1


def test_denominator_divisible_by_p():
    with pytest.raises(CoefficientError):
        GF(5)(Fraction(1, 10))


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        GF(32004)


@pytest.mark.parametrize("text, modulus", [("Q", None), ("Fp:32003", 32003), ("Fp:2", 2)])
def test_parse_field(text, modulus):
    assert parse_field(text).modulus == modulus


@pytest.mark.parametrize("text", ["Z", "Fp:", "Fp:9", "Fp:x"])
def test_parse_field_errors(text):
    with pytest.raises(ValueError):
        parse_field(text)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
