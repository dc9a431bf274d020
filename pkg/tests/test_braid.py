"""Braid words: parsing, statistics, Markov moves, corpus files and the
positive rewriter."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yhinv import braid as bw
from yhinv.braid import BraidParseError, BraidWord, CaseOne, CaseTwo


def test_parse_examples():
    assert bw.parse("1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))
    assert bw.parse("") == BraidWord(1, ())
    assert bw.parse("  3  ", 5) == BraidWord(5, (3,))


@pytest.mark.parametrize("text,n", [("1 x", None), ("1 0", None), ("1 +", None), ("3", 3), ("1.0", None)])
def test_parse_errors(text, n):
    with pytest.raises(BraidParseError):
        bw.parse(text, n)


def test_parse_error_reports_position():
    with pytest.raises(BraidParseError, match="position 2"):
        bw.parse("1 2 q")


def test_epsilon_and_nu():
    a = bw.parse("1 -2 1 -2")
    assert bw.epsilon(a) == 0
    assert bw.nu(a) == 2
    assert bw.epsilon_k(a, 2) == -2
    assert bw.epsilon(bw.NAMED["trefoil"]) == 3
    assert bw.is_positive(bw.NAMED["showcase"])


def test_stabilize_examples():
    assert bw.markov_stabilize(bw.parse("1 1 1")) == BraidWord(3, (1, 1, 1, 2))
    assert bw.markov_stabilize(BraidWord(1, ()), -1) == BraidWord(2, (-1,))
    with pytest.raises(ValueError):
        bw.markov_stabilize(BraidWord(2, ()), 2)


def test_conjugate_example():
    c = bw.markov_conjugate(bw.parse("1"), bw.parse("2 -1"))
    assert c == BraidWord(3, (2, -1, 1, 1, -2))


def test_closure_components():
    assert bw.closure_components(bw.NAMED["trefoil"]) == 1
    assert bw.closure_components(bw.NAMED["hopf"]) == 2
    assert bw.closure_components(BraidWord(4, ())) == 4
    assert bw.closure_components(bw.NAMED["figure-eight"]) == 1


words = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g])), max_size=12).map(
        lambda ls: BraidWord(n, tuple(ls))
    )
)


@given(words)
@settings(max_examples=200, deadline=None)
def test_exponent_parity_matches_length(a):
    assert bw.epsilon(a) % 2 == len(a) % 2
    assert bw.epsilon(a) == len(a) - 2 * bw.nu(a)
    assert sum(bw.epsilon_k(a, k) for k in range(1, a.n)) == bw.epsilon(a)


@given(words)
@settings(max_examples=100, deadline=None)
def test_text_round_trip(a):
    assert bw.parse_line(a.text()) == a
    assert bw.parse_corpus(bw.write_corpus([a, a.inverse()])) == [a, a.inverse()]


@given(words, words)
@settings(max_examples=100, deadline=None)
def test_moves_preserve_components(a, b):
    b = BraidWord(a.n, tuple(x for x in b.letters if abs(x) < a.n))
    assert bw.closure_components(bw.markov_conjugate(a, b)) == bw.closure_components(a)
    assert bw.closure_components(bw.markov_stabilize(a, 1)) == bw.closure_components(a)


def test_corpus_file(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# header\nn=4; 1 2 -3  # trailing\n\n1 1 1\nn=3;\n")
    assert bw.read_corpus(f) == [BraidWord(4, (1, 2, -3)), BraidWord(2, (1, 1, 1)), BraidWord(3, ())]


def test_corpus_error_has_line_number(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("1 2\nn=2; 2\n")
    with pytest.raises(BraidParseError, match=":2:"):
        bw.read_corpus(f)


def test_builtin_corpus_is_deterministic_and_sized():
    c = bw.builtin_corpus()
    assert len(c) == 100
    assert c == bw.builtin_corpus()
    assert len({(b.n, b.letters) for b in c}) == 100
    assert all(b in c for b in bw.NAMED.values())


# -- rewriter -----------------------------------------------------------------

def _check(a: BraidWord, out):
    n = a.n
    if isinstance(out, CaseOne):
        assert all(1 <= x < n for x in out.alpha1 + out.alpha2)
        word = out.word(n)
    else:
        assert isinstance(out, CaseTwo)
        assert 1 <= out.j <= n
        assert all(1 <= x <= n for x in out.beta1 + out.beta2)
        word = out.word(n)
    # the rewrite is an identity in the positive braid monoid; check images in S_{n+1}
    lhs = BraidWord(n + 1, (n,) + a.letters + (n,))
    rhs = BraidWord(n + 1, word)
    assert len(lhs) == len(rhs)
    assert lhs.permutation() == rhs.permutation()


def test_rewrite_on_B1():
    assert bw.psalidi_rewrite(BraidWord(1, ())) == CaseTwo((), 1, ())


def test_rewrite_without_top_generator():
    a = BraidWord(3, (1, 1))
    assert bw.psalidi_rewrite(a) == CaseTwo((1, 1), 3, ())


def test_rewrite_single_top_generator():
    a = BraidWord(3, (2,))
    assert bw.psalidi_rewrite(a) == CaseOne((2,), (2,))
    _check(a, bw.psalidi_rewrite(a))


def test_rewrite_rejects_negative_words():
    with pytest.raises(ValueError):
        bw.psalidi_rewrite(BraidWord(2, (-1,)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rewrite_all_short_positive_words(n):
    for a in bw.positive_words(n, 5 if n < 4 else 4):
        _check(a, bw.psalidi_rewrite(a))
