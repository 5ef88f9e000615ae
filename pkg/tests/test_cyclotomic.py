from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_euler import (
    CycElem,
    PadicContext,
    UnsupportedEmbedding,
    cyclotomic_polynomial,
    root_of_unity,
)
from padic_euler.cyclotomic import cyc_embed_padic


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_degenerate_cyclotomics():
    assert cyclotomic_polynomial(1) == (-1, 1)  # x - 1
    assert cyclotomic_polynomial(2) == (1, 1)  # x + 1


def test_phi6_against_explicit_division():
    # oracle: (x^6 - 1) / (Phi_1 Phi_2 Phi_3) computed independently
    x = sympy.symbols("x")
    quotient, rem = sympy.div(x**6 - 1, (x - 1) * (x + 1) * (x**2 + x + 1), x)
    assert rem == 0 and quotient == x**2 - x + 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("m", range(1, 31))
def test_phi_divides_x_m_minus_one(m):
    phi = cyclotomic_polynomial(m)
    x = sympy.symbols("x")
    assert sympy.Poly(list(reversed(phi)), x).as_expr() == sympy.cyclotomic_poly(m, x)
    # product over all divisors reconstructs x^m - 1
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
    expected = [0] * (m + 1)
    expected[0], expected[m] = -1, 1
    assert prod == expected


def test_root_products():
    z2 = CycElem.root_power(2, 1)
    assert z2 * z2 == 1
    z4 = CycElem.root_power(4, 1)
    assert z4 * z4 == -1
    z6 = CycElem.root_power(6, 1)
    assert z6 * CycElem.root_power(6, 5) == 1


def test_mixed_order_rejected():
    with pytest.raises(ValueError):
        CycElem.root_power(4, 1) * CycElem.root_power(6, 1)


def test_inverse():
    a = CycElem(12, [Fraction(1, 2), Fraction(3), Fraction(0), Fraction(-1, 5)])
    assert a * a.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        CycElem.zero(4).inverse()


small_rationals = st.fractions(
    min_value=-3, max_value=3, max_denominator=6
)


def _elems(m):
    from padic_euler.ntheory import euler_phi

    return st.lists(
        small_rationals, min_size=euler_phi(m), max_size=euler_phi(m)
    ).map(lambda cs: CycElem(m, cs))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=12).flatmap(lambda m: st.tuples(_elems(m), _elems(m), _elems(m))))
def test_ring_laws(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_embed_anchors():
    ctx = PadicContext(5, 2)
    root2 = root_of_unity(5, 2, ctx)
    minus_one = cyc_embed_padic(CycElem.from_rational(2, -1), 5, 2, root2)
    assert minus_one.residue() == 24  # -1 mod 25
    one = cyc_embed_padic(CycElem.one(4), 5, 2, root_of_unity(5, 4, ctx))
    assert one.residue() == 1
    # the canonical 4th root at p=5 is the Teichmueller lift of 2: 7 mod 25
    root4 = root_of_unity(5, 4, ctx)
    assert root4.residue(2) == 7
    img = cyc_embed_padic(CycElem.root_power(4, 1), 5, 2, root4)
    assert img.residue(2) == 7
    assert (img * img + 1).residue(2) == 0  # x^2 = -1 mod 25


def test_embed_rejects_wrong_order():
    ctx = PadicContext(7, 4)
    with pytest.raises(UnsupportedEmbedding):
        cyc_embed_padic(CycElem.root_power(4, 1), 7, 4, root_of_unity(7, 2, ctx))


@pytest.mark.parametrize("p,m", [(5, 2), (5, 4), (13, 3), (13, 6)])
def test_embed_is_ring_homomorphism(p, m):
    ctx = PadicContext(p, 6)
    root = root_of_unity(p, m, ctx)
    pairs = [
        (CycElem.root_power(m, 1), CycElem.root_power(m, m - 1)),
        (CycElem(m, [1] * len(CycElem.one(m).coeffs)), CycElem.root_power(m, 1) + 2),
        (CycElem.root_power(m, 1) * Fraction(3, 7), CycElem.one(m) - CycElem.root_power(m, 1)),
    ]
    for a, b in pairs:
        ea = cyc_embed_padic(a, p, 6, root)
        eb = cyc_embed_padic(b, p, 6, root)
        assert cyc_embed_padic(a * b, p, 6, root) == (ea * eb).cap(6)
        assert cyc_embed_padic(a + b, p, 6, root) == (ea + eb).cap(6)
