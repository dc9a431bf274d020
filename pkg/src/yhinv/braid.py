"""Braid words: parsing, exponent statistics, Markov moves and the positive
word rewriter used to reduce trace identities to words ending in a square.

Letters are signed integers: ``i`` is sigma_i and ``-i`` its inverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from . import symgroup


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError(f"strand count must be at least 1, got {self.n}")
        for pos, a in enumerate(self.letters):
            if a == 0 or abs(a) >= self.n:
                raise ValueError(f"letter {a} at position {pos} is not a generator of B_{self.n}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(a) for a in self.letters)

    def text(self) -> str:
        """Corpus-line form with an explicit strand count."""
        return f"n={self.n}; {self}".rstrip()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(max(self.n, other.n), self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)

    def permutation(self) -> tuple:
        return symgroup.from_word(self.letters, self.n)


def parse(text: str, n: int | None = None) -> BraidWord:
    """Read whitespace-separated signed integers; n defaults to 1 + max|letter|."""
    letters = []
    offset = 0
    for pos, token in enumerate(text.split()):
        offset = text.index(token, offset)
        try:
            a = int(token, 10)
        except ValueError:
            raise BraidParseError(f"malformed token {token!r} at position {pos} (column {offset})") from None
        if a == 0:
            raise BraidParseError(f"zero letter at position {pos} (column {offset})")
        if n is not None and abs(a) >= n:
            raise BraidParseError(f"letter {a} at position {pos} (column {offset}) exceeds B_{n}")
        letters.append(a)
        offset += len(token)
    if n is None:
        n = 1 + max((abs(a) for a in letters), default=0)
    if n < 1:
        raise BraidParseError(f"strand count must be at least 1, got {n}")
    return BraidWord(n, tuple(letters))


def parse_line(line: str) -> BraidWord:
    """A corpus line: optional ``n=<k>;`` prefix followed by the word."""
    line = line.strip()
    n = None
    if line.startswith("n="):
        head, sep, rest = line.partition(";")
        if not sep:
            raise BraidParseError(f"missing ';' after strand count in {line!r}")
        try:
            n = int(head[2:].strip(), 10)
        except ValueError:
            raise BraidParseError(f"bad strand count in {line!r}") from None
        line = rest
    return parse(line, n)


def read_corpus(path: str | Path) -> list[BraidWord]:
    """One braid per line; blank lines and text after ``#`` are ignored."""
    return parse_corpus(Path(path).read_text(), str(path))


def parse_corpus(text: str, source: str = "<corpus>") -> list[BraidWord]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_line(line))
        except (BraidParseError, ValueError) as exc:
            raise BraidParseError(f"{source}:{lineno}: {exc}") from None
    return out


def write_corpus(braids: Iterable[BraidWord]) -> str:
    return "".join(b.text() + "\n" for b in braids)


# -- exponent statistics ------------------------------------------------------

def epsilon(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def nu(a: BraidWord) -> int:
    return sum(1 for x in a.letters if x < 0)


def epsilon_k(a: BraidWord, k: int) -> int:
    return sum((1 if x > 0 else -1) for x in a.letters if abs(x) == k)


def is_positive(a: BraidWord) -> bool:
    return nu(a) == 0


def closure_components(a: BraidWord) -> int:
    return len(symgroup.cycles(a.permutation()))


# -- Markov moves -------------------------------------------------------------

def markov_conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """b a b^-1 on max(n_a, n_b) strands."""
    n = max(a.n, b.n)
    return BraidWord(n, b.letters + a.letters + b.inverse().letters)


def markov_stabilize(a: BraidWord, sign: int = 1) -> BraidWord:
    """a sigma_n^(+-1) on n+1 strands."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return BraidWord(a.n + 1, a.letters + (sign * a.n,))


# -- positive rewriting -------------------------------------------------------

@dataclass(frozen=True)
class CaseOne:
    """sigma_n alpha sigma_n = alpha1 sigma_n alpha2 with alpha1, alpha2 in B_n^+."""

    alpha1: tuple[int, ...]
    alpha2: tuple[int, ...]

    def word(self, n: int) -> tuple[int, ...]:
        return self.alpha1 + (n,) + self.alpha2


@dataclass(frozen=True)
class CaseTwo:
    """sigma_n alpha sigma_n = beta1 sigma_j^2 beta2 with beta1, beta2 in B_{n+1}^+."""

    beta1: tuple[int, ...]
    j: int
    beta2: tuple[int, ...]

    def word(self, n: int) -> tuple[int, ...]:
        return self.beta1 + (self.j, self.j) + self.beta2


def psalidi_rewrite(a: BraidWord):
    """Rewrite sigma_n a sigma_n for a positive a in B_n^+.

    Follows the induction on n and on the exponent of sigma_{n-1}; whenever
    a factorisation a = a1 s b s a2 is needed it splits at the first two
    occurrences of s = sigma_{n-1}.
    """
    if not is_positive(a):
        raise ValueError("psalidi_rewrite needs a positive braid word")
    return _rewrite(a.letters, a.n)


def _rewrite(alpha: tuple[int, ...], n: int):
    while True:
        if n == 1:
            return CaseTwo((), 1, ())
        s = n - 1
        where = [p for p, x in enumerate(alpha) if x == s]
        if not where:
            return CaseTwo(alpha, n, ())
        if len(where) == 1:
            p = where[0]
            return CaseOne(alpha[: p + 1], alpha[p:])
        p, r = where[0], where[1]
        a1, b, a2 = alpha[:p], alpha[p + 1 : r], alpha[r + 1 :]
        inner = _rewrite(b, n - 1)
        if isinstance(inner, CaseOne):
            alpha = a1 + inner.word(n - 1) + a2
            continue
        return CaseTwo((n,) + a1 + inner.beta1, inner.j, inner.beta2 + a2 + (n,))


# -- built-in corpus ----------------------------------------------------------

CORPUS_SEED = 20240917


def positive_words(n: int, max_len: int) -> Iterator[BraidWord]:
    """All positive words in B_n of length <= max_len, shortest first."""
    gens = list(range(1, n))
    frontier = [()]
    yield BraidWord(n, ())
    for _ in range(max_len):
        frontier = [w + (g,) for w in frontier for g in gens]
        for w in frontier:
            yield BraidWord(n, w)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = []
    for _ in range(length):
        g = rng.randint(1, n - 1)
        letters.append(g if rng.random() < 0.5 else -g)
    return BraidWord(n, tuple(letters))


NAMED = {
    "trefoil": BraidWord(2, (1, 1, 1)),
    "hopf": BraidWord(2, (1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "showcase": BraidWord(3, (1, 2, 2, 1, 2, 2)),
}


def builtin_corpus(random_count: int = 40, seed: int = CORPUS_SEED) -> list[BraidWord]:
    """Deterministic test corpus: every positive word of length <= 5 in B_3,
    a few named braids, and seeded random mixed-sign words."""
    seen = set()
    out = []

    def add(b):
        if (b.n, b.letters) not in seen:
            seen.add((b.n, b.letters))
            out.append(b)

    for b in positive_words(3, 5):
        add(b)
    add(BraidWord(2, (1, 1)))
    add(BraidWord(2, (1, 1, 1)))
    for b in NAMED.values():
        add(b)
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(2, 4)
        add(random_word(rng, n, rng.randint(1, 8)))
    return out
