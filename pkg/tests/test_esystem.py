"""Solutions of the E-system."""

from __future__ import annotations

import pytest
from gmpy2 import mpq

from yhinv.esystem import ESystemError, all_solutions, all_subsets, e_value, parse_subset, solve, verify
from yhinv.scalars import Cyclotomic


def test_d1_and_d2_solutions():
    assert solve(1, [0]).x == (1,)
    assert solve(2, [0, 1]).x == (1, 0)
    assert solve(2, [1]).x == (1, -1)
    assert e_value(solve(2, [0, 1])) == mpq(1, 2)


def test_d6_pair_has_E_one_half():
    sol = solve(6, [1, 3])
    assert e_value(sol) == mpq(1, 2)
    assert verify(sol.x, 6)


def test_d3_singleton_is_a_power_of_zeta():
    sol = solve(3, [1])
    assert sol.x[1] == Cyclotomic.zeta(3)
    assert sol.x[2] == Cyclotomic.zeta(3, 2)


def test_verify_rejects_bad_vectors():
    assert not verify((1, 5), 2)
    assert not verify((2, 0), 2)
    assert not verify((1,), 2)


@pytest.mark.parametrize("d", range(1, 7))
def test_every_subset_gives_a_solution_with_E_inverse_size(d):
    sols = all_solutions(d)
    assert len(sols) == 2**d - 1
    for sol in sols:
        assert verify(sol.x, d)
        assert e_value(sol) == mpq(1, sol.size)


@pytest.mark.parametrize("d", range(2, 6))
def test_multiplicativity_exactly_for_singletons(d):
    for S in all_subsets(d):
        x = solve(d, S).x
        mult = all(x[(a + b) % d] == x[a] * x[b] for a in range(d) for b in range(d))
        assert mult == (len(S) == 1)


def test_parse_subset():
    assert parse_subset("0, 2,3", 4) == (0, 2, 3)
    assert parse_subset("5", 3) == (2,)
    for bad in ("1,1", "1,", "a", "1,4"):
        with pytest.raises(ESystemError):
            parse_subset(bad, 3)
    with pytest.raises(ESystemError):
        parse_subset("0", 0)


def test_render():
    r = solve(2, [0, 1]).render()
    assert r == {"d": 2, "S": [0, 1], "x": ["0"], "E": "1/2"}


def test_solve_rejects_empty():
    with pytest.raises(ESystemError):
        solve(3, [])
