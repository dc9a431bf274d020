"""Symmetric-group combinatorics on one-line permutations.

A permutation on n points is a tuple ``w`` with ``w[j-1] = w(j)``. The
product ``compose(w, v)`` applies ``v`` first, so right multiplication by the
simple transposition s_i swaps the entries in positions i and i+1.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Permutation = tuple
Partition = tuple


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(w: Permutation, v: Permutation) -> Permutation:
    """The product w.v, with (w.v)(j) = w(v(j))."""
    if len(w) != len(v):
        raise ValueError("permutations on different point sets")
    return tuple(w[j - 1] for j in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for j, image in enumerate(w, start=1):
        out[image - 1] = j
    return tuple(out)


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple transposition of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def mul_simple(w: Permutation, i: int) -> Permutation:
    """w.s_i: swap positions i and i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def from_word(word: Iterable[int], n: int) -> Permutation:
    """The product s_{a_1} s_{a_2} ... of the word (a_1, a_2, ...)."""
    w = identity(n)
    for i in word:
        w = mul_simple(w, abs(i))
    return w


def length(w: Permutation) -> int:
    """Inversion count."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w: Permutation) -> list[int]:
    """A reduced expression for w, always stripping the smallest right descent."""
    w = list(w)
    rev = []
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                w[i - 1], w[i] = w[i], w[i - 1]
                rev.append(i)
                break
        else:
            break
    return rev[::-1]


def cycles(w: Permutation) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = w[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(w: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(w)), reverse=True))


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def w_mu(mu: Partition) -> Permutation:
    """Class representative s_{i_k}...s_{i_1}, the i_j running over {1..n-1}
    minus the partial sums of mu."""
    if any(a < b for a, b in zip(mu, mu[1:])) or any(p <= 0 for p in mu):
        raise ValueError(f"not a partition: {mu!r}")
    n = sum(mu)
    cuts = set()
    acc = 0
    for p in mu:
        acc += p
        cuts.add(acc)
    indices = [i for i in range(1, n) if i not in cuts]
    return from_word(reversed(indices), n)


def enumerate_D(n: int) -> list[Permutation]:
    """Products s_{i_k}...s_{i_1} over strictly increasing index sets of {1..n-1}."""
    out = []
    for k in range(n):
        for idx in combinations(range(1, n), k):
            out.append(from_word(reversed(idx), n))
    return out


def top_decompose(w: Permutation) -> tuple[Permutation, int | None]:
    """Split w on m points as v.(s_{m-1} s_{m-2} ... s_i) with v fixing m.

    Returns (v restricted to m-1 points, i), or (restriction, None) when w
    already fixes m. Lengths add: length(w) = length(v) + (m - i).
    """
    m = len(w)
    if w[-1] == m:
        return w[:-1], None
    i = w.index(m) + 1
    v = w[: i - 1] + w[i:]
    return v, i


def recompose(v: Permutation, i: int | None) -> Permutation:
    """Inverse of top_decompose."""
    m = len(v) + 1
    w = v + (m,)
    if i is None:
        return w
    for j in range(m - 1, i - 1, -1):
        w = mul_simple(w, j)
    return w
