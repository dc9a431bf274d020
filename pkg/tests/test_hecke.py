"""Hecke algebra arithmetic and the Ocneanu trace."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yhinv import symgroup as sg
from yhinv.braid import BraidWord
from yhinv.hecke import HElement, basis_trace, h_from_braid, h_mul, h_mul_gen, h_power, ocneanu_trace
from yhinv.scalars import LaurentPoly, sym

q, zeta = sym("q"), sym("zeta")


def G(i, n, sign=1):
    return HElement.gen(i, n, sign)


def test_quadratic_relation():
    g = G(1, 2)
    assert g * g == g.scale(q - 1) + HElement.unit(2).scale(q)


def test_inverse_formula():
    ginv = G(1, 3, -1)
    assert ginv == G(1, 3).scale(q**-1) + HElement.unit(3).scale(q**-1 - 1)
    assert G(1, 3) * ginv == HElement.unit(3)


def test_braid_relation_and_far_commutation():
    assert G(1, 3) * G(2, 3) * G(1, 3) == G(2, 3) * G(1, 3) * G(2, 3)
    assert G(1, 4) * G(3, 4) == G(3, 4) * G(1, 4)


def test_trace_of_small_elements():
    assert ocneanu_trace(HElement.unit(3)) == 1
    assert ocneanu_trace(G(1, 2)) == zeta
    # tau(G_1^2) = (q-1) zeta + q
    assert ocneanu_trace(G(1, 2) * G(1, 2)) == (q - 1) * zeta + q
    assert ocneanu_trace(G(1, 2, -1)) == q**-1 * zeta + q**-1 - 1


def test_trace_with_bindings():
    val = ocneanu_trace(G(1, 2) * G(1, 2), {"q": 2, "zeta": 3})
    assert val == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_trace_on_class_representatives(n):
    for mu in sg.partitions(n):
        w = sg.w_mu(mu)
        assert basis_trace(w) == zeta ** sg.length(w)


@pytest.mark.parametrize("m", range(0, 9))
def test_power_closed_form_matches_iteration(m):
    it = HElement.unit(3)
    for _ in range(m):
        it = h_mul_gen(it, 2)
    assert h_power(2, m, 3) == it


def test_power_rejects_negative_exponent():
    with pytest.raises(ValueError):
        h_power(1, -1, 2)


def test_embedding_preserves_trace():
    h = h_from_braid(BraidWord(3, (1, -2, 1)))
    assert ocneanu_trace(h.embed(5)) == ocneanu_trace(h)


words = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g])), max_size=6).map(
        lambda ls: BraidWord(n, tuple(ls))
    )
)


@given(words, st.data())
@settings(max_examples=60, deadline=None)
def test_trace_is_tracial(a, data):
    b = data.draw(st.lists(st.integers(1, a.n - 1), max_size=4)).copy()
    hb = h_from_braid(BraidWord(a.n, tuple(b)))
    ha = h_from_braid(a)
    assert ocneanu_trace(h_mul(ha, hb)) == ocneanu_trace(h_mul(hb, ha))


@given(words, st.sampled_from([1, -1]))
@settings(max_examples=60, deadline=None)
def test_markov_property(a, sign):
    h = h_from_braid(a)
    big = h_mul_gen(h.embed(a.n + 1), a.n, sign)
    t = ocneanu_trace(h)
    expected = zeta * t if sign == 1 else (q**-1 * zeta + q**-1 - 1) * t
    assert ocneanu_trace(big) == expected


@given(words)
@settings(max_examples=60, deadline=None)
def test_braid_times_inverse_is_unit(a):
    assert h_mul(h_from_braid(a), h_from_braid(a.inverse())) == HElement.unit(a.n)


def test_coefficients_are_laurent():
    h = h_from_braid(BraidWord(3, (-1, -2, -1, -2)))
    assert all(isinstance(c, LaurentPoly) for c in h.terms.values())
