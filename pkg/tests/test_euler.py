from fractions import Fraction
from math import comb

import pytest
import sympy

from padic_euler import (
    DomainError,
    EulerTable,
    euler_number,
    euler_number_multi,
    euler_number_multi_recurrence,
    euler_polynomial_multi,
    series_expand_multi,
)

HALF = Fraction(1, 2)


def test_base_values():
    assert euler_number(0) == 1
    assert euler_number(1) == -HALF
    assert euler_number(2) == 0
    assert euler_number(3) == Fraction(1, 4)


def test_e5_recurrence_oracle():
    # E_5 = -(1/2)(1 + 5 E_1 + 10 E_3) spelled out
    expected = -HALF * (1 + 5 * -HALF + 10 * Fraction(1, 4))
    assert expected == -HALF
    assert euler_number(5) == expected


@pytest.mark.parametrize("k", range(1, 7))
def test_even_indices_vanish(k):
    assert euler_number(2 * k) == 0


def test_sympy_euler_polynomial_oracle():
    x = sympy.symbols("x")
    for n in range(9):
        poly = sympy.euler(n, x)
        for val in (Fraction(0), Fraction(1, 3), Fraction(-2, 7)):
            expected = Fraction(str(poly.subs(x, sympy.Rational(val.numerator, val.denominator))))
            assert euler_polynomial_multi(n, 1, val) == expected


def test_order_two_anchors():
    # convolution by hand: E_1^{(2)} = 2 E_0 E_1, E_2^{(2)} = 2 E_1 E_1
    assert euler_number_multi(1, 2) == 2 * 1 * -HALF == -1
    assert euler_number_multi(2, 2) == 2 * -HALF * -HALF == HALF


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_three_routes_agree(r):
    conv = [euler_number_multi(n, r) for n in range(13)]
    rec = [euler_number_multi_recurrence(n, r) for n in range(13)]
    ser = series_expand_multi(12, r, 0)
    assert conv == rec == ser


def test_order_one_reduction():
    for n in range(10):
        assert euler_number_multi(n, 1) == euler_number(n)


def test_order_zero_rejected():
    with pytest.raises(DomainError):
        euler_number_multi(2, 0)
    with pytest.raises(DomainError):
        euler_number_multi_recurrence(2, 0)


def test_polynomial_values():
    assert euler_polynomial_multi(0, 3, Fraction(7, 5)) == 1
    assert euler_polynomial_multi(1, 1, Fraction(1, 3)) == Fraction(-1, 6)
    # E_2^{(2)}(x) = x^2 - 2x + 1/2
    for x in (Fraction(0), Fraction(2, 3), Fraction(-5)):
        assert euler_polynomial_multi(2, 2, x) == x * x - 2 * x + HALF


def test_series_examples():
    assert series_expand_multi(3, 1, 0) == [1, -HALF, 0, Fraction(1, 4)]
    assert series_expand_multi(2, 2, 0) == [
        euler_number_multi(n, 2) for n in range(3)
    ]
    # reflection at x=1: E_n(1) = -E_n for n >= 1
    at_one = series_expand_multi(6, 1, 1)
    for n in range(1, 7):
        assert at_one[n] == -euler_number(n)


def test_polynomial_matches_series_on_grid():
    xs = [Fraction(0), Fraction(1), Fraction(1, 3), Fraction(2, 3), Fraction(-1, 2)]
    for r in (1, 2, 3):
        for x in xs:
            ser = series_expand_multi(10, r, x)
            for n in range(11):
                assert euler_polynomial_multi(n, r, x) == ser[n]


def test_addition_identity():
    pairs = [
        (Fraction(1, 3), Fraction(1)),
        (Fraction(-1, 2), Fraction(2, 5)),
        (Fraction(3, 7), Fraction(-4, 3)),
    ]
    for r in (1, 2, 3):
        for x, y in pairs:
            for n in range(9):
                rhs = sum(
                    comb(n, k) * euler_polynomial_multi(k, r, x) * y ** (n - k)
                    for k in range(n + 1)
                )
                assert euler_polynomial_multi(n, r, x + y) == rhs


def test_table_memoizes():
    table = EulerTable()
    assert table.get(3, 4) == euler_number_multi(4, 3)
    size = len(table)
    table.get(3, 4)
    assert len(table) == size
