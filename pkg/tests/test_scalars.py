"""Exact scalar arithmetic: cyclotomic fields, Laurent polynomials, fractions
and the square-root extension."""

from __future__ import annotations

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from yhinv.scalars import (
    Cyclotomic,
    LaurentPoly,
    ParseError,
    RadicandMismatch,
    RatFun,
    SqrtExt,
    cyc_inv,
    cyclotomic_polynomial,
    parse_scalar,
    ratfun_eq,
    sqrtext_mul,
    sqrtext_pow,
    substitute,
    sym,
)

u, z, q, zeta, E, x = (sym(s) for s in ("u", "z", "q", "zeta", "E", "x"))


# -- cyclotomic polynomials ------------------------------------------------------

def test_phi_base_cases():
    assert cyclotomic_polynomial(1) == x - 1
    assert cyclotomic_polynomial(2) == x + 1


def test_phi_6_from_recursion():
    # x^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6 with Phi_3 = x^2 + x + 1
    rest = (x - 1) * (x + 1) * (x**2 + x + 1)
    assert (x**6 - 1).exact_div(rest) == x**2 - x + 1
    assert cyclotomic_polynomial(6) == x**2 - x + 1


@pytest.mark.parametrize("d", range(1, 13))
def test_product_over_divisors_is_x_d_minus_1(d):
    prod = LaurentPoly.const(1)
    for e in range(1, d + 1):
        if d % e == 0:
            prod = prod * cyclotomic_polynomial(e)
    assert prod == x**d - 1


# -- cyclotomic inverses ------------------------------------------------------------

def test_cyc_inv_examples():
    assert cyc_inv(Cyclotomic.rational(5, 1)) == 1
    assert cyc_inv(Cyclotomic.zeta(4)) == -Cyclotomic.zeta(4)
    z3 = Cyclotomic.zeta(3)
    assert cyc_inv(z3) == Cyclotomic(3, (-1, -1))
    assert cyc_inv(z3) == z3**2


def test_cyc_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyc_inv(Cyclotomic(7, (0,)))


def test_zeta_d_has_order_d():
    for d in range(1, 13):
        zd = Cyclotomic.zeta(d)
        assert zd**d == 1
        assert all(zd**k != 1 for k in range(1, d))


def test_mixed_conductors_only_through_rationals():
    assert Cyclotomic.zeta(3) + Cyclotomic.rational(5, 2) == Cyclotomic.zeta(3) + 2
    with pytest.raises(ValueError):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(5)


def test_rendering_uses_zeta_d():
    assert str(Cyclotomic(3, (mpq(1, 2), 1))) == "1/2 + zeta_3"
    assert str(Cyclotomic.zeta(4, 3)) == "-zeta_4"


def cyclotomics(d):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(lambda f: mpq(f.numerator, f.denominator))
    deg = len(Cyclotomic(d, (0,)).coeffs)
    return st.lists(coeff, min_size=deg, max_size=deg).map(lambda cs: Cyclotomic(d, cs))


@st.composite
def cyclotomic_triples(draw):
    d = draw(st.integers(1, 12))
    c = cyclotomics(d)
    return draw(c), draw(c), draw(c)


@given(cyclotomic_triples())
@settings(max_examples=150, deadline=None)
def test_cyclotomic_field_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * cyc_inv(a) == 1


# -- Laurent polynomials and fractions ---------------------------------------------------

def test_ratfun_eq_examples():
    assert ratfun_eq(RatFun(u**2 - 1, u + 1), RatFun(u - 1))
    assert ratfun_eq(RatFun(z), RatFun(z**2, z))
    assert not ratfun_eq(RatFun(z), RatFun(z**2, z + 1))


def test_exact_division_and_simplify():
    assert (u**2 - 1) / (u + 1) == u - 1
    assert isinstance((u**2 - 1) / (u + 1), LaurentPoly)
    mixed = (u * z - z + u * u - u).exact_div(u - 1)
    assert mixed == z + u
    assert (u + 1).exact_div(u - 1) is None


def test_substitute_examples():
    b = 1 + (u - 1) * E + (u - 1) * z
    assert substitute(b, {"u": 1}) == 1
    assert substitute(x, {"x": x}) == x
    lam_y = RatFun(z + (1 - u) * E, u * z)
    assert ratfun_eq(lam_y.substitute({"E": 1, "z": u}), RatFun(1, u * u))


def test_substitution_into_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        RatFun(1, u - 1).substitute({"u": 1})
    with pytest.raises(ZeroDivisionError):
        (u ** -1).substitute({"u": 0})


def test_negative_powers_are_monomial_inverses():
    assert (u**-2) * u**2 == 1
    assert ratfun_eq((u + 1) ** -1, RatFun(1, u + 1))


def test_rendering_is_graded_lex_in_symbol_order():
    assert str(z * u + u**2 + q + 1) == "u^2 + u*z + q + 1"
    assert str(-u + 3) == "-u + 3"
    assert str(LaurentPoly()) == "0"


def test_constant_cyclotomic_coefficients_collapse_to_rationals():
    c = Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2)  # = -1
    p = LaurentPoly.const(c) * u
    assert p == -u
    assert isinstance(p.terms[next(iter(p.terms))], type(mpq(1)))


small = st.integers(-3, 3)
variables = st.sampled_from(["u", "z", "q"])


@st.composite
def laurent(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        mono = {}
        for _ in range(draw(st.integers(0, 2))):
            mono[draw(variables)] = draw(small)
        c = draw(st.integers(-4, 4))
        p = LaurentPoly.const(c)
        for s, e in mono.items():
            p = p * sym(s) ** e
        terms[len(terms)] = p
    out = LaurentPoly()
    for p in terms.values():
        out = out + p
    return out


@st.composite
def ratfuns(draw):
    num = draw(laurent())
    den = draw(laurent())
    if den.is_zero():
        den = LaurentPoly.const(1)
    return RatFun(num, den)


@given(ratfuns(), ratfuns(), ratfuns())
@settings(max_examples=80, deadline=None)
def test_ratfun_equality_is_an_equivalence(a, b, c):
    assert ratfun_eq(a, a)
    assert ratfun_eq(a, b) == ratfun_eq(b, a)
    # rescaled copies are equal, and equality chains
    a2 = RatFun(a.num * (u + 2), a.den * (u + 2))
    a3 = RatFun(a2.num * z, a2.den * z)
    assert ratfun_eq(a, a2) and ratfun_eq(a2, a3) and ratfun_eq(a, a3)
    if ratfun_eq(a, b) and ratfun_eq(b, c):
        assert ratfun_eq(a, c)


@given(laurent(), laurent(), st.integers(2, 9), st.integers(-5, 5))
@settings(max_examples=80, deadline=None)
def test_substitute_is_a_ring_homomorphism(a, b, num, shift):
    binding = {"u": LaurentPoly.const(mpq(num, 7)), "z": q + shift}
    sa, sb = substitute(a, binding), substitute(b, binding)
    assert ratfun_eq(substitute(a * b, binding), RatFun(sa) * sb)
    assert ratfun_eq(substitute(a + b, binding), RatFun(sa) + sb)


@given(laurent(), laurent())
@settings(max_examples=80, deadline=None)
def test_laurent_ring_laws(a, b):
    assert a * b == b * a
    assert a + b == b + a
    assert (a + b) - b == a


# -- square-root extension --------------------------------------------------------------

LAM = RatFun(z + (1 - u) * E, u * z)


def test_sqrtext_examples():
    r = SqrtExt.root(LAM)
    assert r * r == SqrtExt.of(LAM, LAM)
    assert sqrtext_pow(r, 3) == SqrtExt(RatFun(0), LAM, LAM)
    one = SqrtExt.of(1, LAM)
    assert sqrtext_mul(one + r, one - r) == SqrtExt.of(RatFun(1) - LAM, LAM)


def test_sqrtext_inverse_and_errors():
    r = SqrtExt.root(LAM)
    assert r ** -1 * r == 1
    with pytest.raises(RadicandMismatch):
        r * SqrtExt.root(RatFun(u))
    zero = SqrtExt.of(0, LAM)
    with pytest.raises(ZeroDivisionError):
        zero ** -1


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-3, 3), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_sqrtext_power_law(m, k, a, b):
    lam = RatFun(u + 2, z)
    base = SqrtExt(RatFun(u + a), RatFun(b * z), lam)
    assert sqrtext_pow(base, m + k) == sqrtext_mul(sqrtext_pow(base, m), sqrtext_pow(base, k))


# -- parsing ------------------------------------------------------------------------------

def test_parse_round_trips_rendering():
    samples = [
        (u**2 - 1) * z ** -3 + 5,
        LaurentPoly.const(Cyclotomic(3, (mpq(1, 2), 1))) * u + q,
        RatFun(u + 1, z - 2),
    ]
    for s in samples:
        assert ratfun_eq(parse_scalar(str(s)), s)
    value = SqrtExt(RatFun(u), RatFun(z + 1, u), LAM)
    back = parse_scalar(value.render(), radicand=LAM)
    assert back == value


def test_parse_rejects_decimals_and_bare_root():
    with pytest.raises(ParseError):
        parse_scalar("1.5")
    with pytest.raises(ParseError):
        parse_scalar("r + 1")
    with pytest.raises(ParseError):
        parse_scalar("u^z")
