"""Permutations, reduced words, class representatives and the coset split."""

from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yhinv import symgroup as sg


def test_w_mu_example_431():
    w = sg.w_mu((4, 3, 1))
    assert w == sg.from_word([6, 5, 3, 2, 1], 8)
    assert sg.length(w) == 5
    assert sg.cycle_type(w) == (4, 3, 1)


def test_enumerate_D_small():
    assert sg.enumerate_D(1) == [(1,)]
    assert sorted(sg.enumerate_D(2)) == [(1, 2), (2, 1)]
    d3 = sg.enumerate_D(3)
    assert len(d3) == 4
    assert set(d3) == {(1, 2, 3), (2, 1, 3), (1, 3, 2), sg.from_word([2, 1], 3)}


def test_compose_applies_right_factor_first():
    s1, s2 = sg.simple(1, 3), sg.simple(2, 3)
    assert sg.compose(s1, s2) == sg.from_word([1, 2], 3)
    assert sg.compose(s1, s2)[0] == s1[s2[0] - 1]
    assert sg.mul_simple(s1, 2) == sg.compose(s1, s2)


def test_simple_out_of_range():
    with pytest.raises(ValueError):
        sg.simple(3, 3)


def test_w_mu_rejects_non_partitions():
    with pytest.raises(ValueError):
        sg.w_mu((1, 2))
    with pytest.raises(ValueError):
        sg.w_mu((2, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_w_mu_has_cycle_type_mu_and_length_n_minus_parts(n):
    for mu in sg.partitions(n):
        w = sg.w_mu(mu)
        assert sg.cycle_type(w) == mu
        assert sg.length(w) == n - len(mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_D_elements_are_minimal_in_their_class(n):
    shortest = {}
    for w in permutations(range(1, n + 1)):
        ct = sg.cycle_type(w)
        shortest[ct] = min(shortest.get(ct, n * n), sg.length(w))
    ds = sg.enumerate_D(n)
    assert len(ds) == 2 ** (n - 1)
    for w in ds:
        assert sg.length(w) == shortest[sg.cycle_type(w)]


def test_top_decompose_round_trip_on_S5():
    for w in permutations(range(1, 6)):
        v, i = sg.top_decompose(w)
        assert sg.recompose(v, i) == w
        extra = 0 if i is None else 5 - i
        assert sg.length(w) == sg.length(v) + extra
        if i is not None:
            assert sg.compose(v + (5,), sg.from_word(range(4, i - 1, -1), 5)) == w


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@given(perms)
@settings(max_examples=200, deadline=None)
def test_reduced_word_multiplies_back(w):
    word = sg.reduced_word(w)
    assert len(word) == sg.length(w)
    assert sg.from_word(word, len(w)) == w


@given(perms)
@settings(max_examples=200, deadline=None)
def test_inverse_is_two_sided(w):
    n = len(w)
    assert sg.compose(w, sg.inverse(w)) == sg.identity(n)
    assert sg.compose(sg.inverse(w), w) == sg.identity(n)
    assert sg.length(sg.inverse(w)) == sg.length(w)


@given(perms, st.data())
@settings(max_examples=200, deadline=None)
def test_length_changes_by_one_under_simple(w, data):
    n = len(w)
    if n < 2:
        return
    i = data.draw(st.integers(1, n - 1))
    ws = sg.mul_simple(w, i)
    assert abs(sg.length(ws) - sg.length(w)) == 1
    assert (sg.length(ws) < sg.length(w)) == (w[i - 1] > w[i])
