"""The Iwahori-Hecke algebra H_n(q) on the standard basis {G_w}, and the
Ocneanu trace.

Coefficients are Laurent polynomials in q (and zeta for traces); every
structure constant, including those of G_i^-1, is Laurent in q, so no
fractions are needed until the invariants are normalised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import symgroup
from .braid import BraidWord
from .scalars import LaurentPoly, RatFun, sym

Q = sym("q")
ZETA = sym("zeta")
ONE = LaurentPoly.const(1)


def _accumulate(out: dict, key, c: LaurentPoly):
    prev = out.get(key)
    out[key] = c if prev is None else prev + c


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


@dataclass(frozen=True, eq=False)
class HElement:
    """Sparse element sum c_w G_w of H_n(q), keyed by one-line permutations."""

    n: int
    terms: Mapping[tuple, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def unit(cls, n: int) -> "HElement":
        return cls(n, {symgroup.identity(n): ONE})

    @classmethod
    def zero(cls, n: int) -> "HElement":
        return cls(n, {})

    @classmethod
    def basis(cls, w: tuple, coeff=ONE) -> "HElement":
        return cls(len(w), {tuple(w): LaurentPoly.const(coeff) if not isinstance(coeff, LaurentPoly) else coeff})

    @classmethod
    def gen(cls, i: int, n: int, sign: int = 1) -> "HElement":
        return h_mul_gen(cls.unit(n), i, sign)

    def __add__(self, other: "HElement") -> "HElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return HElement(self.n, _prune(out))

    def __neg__(self):
        return HElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        return HElement(self.n, _prune({w: v * c for w, v in self.terms.items()}))

    def __mul__(self, other):
        if isinstance(other, HElement):
            return h_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    __hash__ = None

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"H_{self.n} and H_{other.n} elements cannot be combined")

    def embed(self, n: int) -> "HElement":
        """Image under the inclusion H_self.n into H_n."""
        if n < self.n:
            raise ValueError("cannot embed into a smaller algebra")
        tail = tuple(range(self.n + 1, n + 1))
        return HElement(n, {w + tail: c for w, c in self.terms.items()})

    def substitute(self, bindings) -> "HElement":
        return HElement(self.n, _prune({w: _as_poly(c.substitute(bindings)) for w, c in self.terms.items()}))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (symgroup.length(w), w)):
            word = symgroup.reduced_word(w)
            basis = "G[" + ",".join(map(str, word)) + "]" if word else "1"
            parts.append(f"({self.terms[w]})*{basis}")
        return " + ".join(parts)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, RatFun):
        s = x.simplify()
        if not isinstance(s, LaurentPoly):
            raise ValueError("substitution left a non-polynomial coefficient")
        return s
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


def _mul_gen_terms(terms: Mapping, i: int, sign: int, q: LaurentPoly = Q) -> dict:
    out: dict = {}
    qm1 = q - 1
    qinv = q ** -1
    qinvm1 = qinv - 1
    for w, c in terms.items():
        ws = symgroup.mul_simple(w, i)
        ascent = w[i - 1] < w[i]
        if sign > 0:
            if ascent:
                _accumulate(out, ws, c)
            else:
                _accumulate(out, ws, c * q)
                _accumulate(out, w, c * qm1)
        else:
            if not ascent:
                _accumulate(out, ws, c)
            else:
                _accumulate(out, ws, c * qinv)
                _accumulate(out, w, c * qinvm1)
    return _prune(out)


def h_mul_gen(h: HElement, i: int, sign: int = 1) -> HElement:
    """Right multiplication by G_i (sign=+1) or G_i^-1 (sign=-1)."""
    if not 1 <= i < h.n:
        raise ValueError(f"G_{i} is not a generator of H_{h.n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return HElement(h.n, _mul_gen_terms(h.terms, i, sign))


def h_mul(a: HElement, b: HElement) -> HElement:
    a._check(b)
    out: dict = {}
    for w, c in b.terms.items():
        part = a.terms
        for i in symgroup.reduced_word(w):
            part = _mul_gen_terms(part, i, 1)
        for v, e in part.items():
            _accumulate(out, v, e * c)
    return HElement(a.n, _prune(out))


def h_from_braid(a: BraidWord) -> HElement:
    """pi(alpha): the left-to-right product of G_i^(+-1)."""
    terms = {symgroup.identity(a.n): ONE}
    for x in a.letters:
        terms = _mul_gen_terms(terms, abs(x), 1 if x > 0 else -1)
    return HElement(a.n, terms)


def h_power(i: int, m: int, n: int) -> HElement:
    """G_i^m from the closed forms."""
    if m < 0:
        raise ValueError("h_power needs m >= 0")
    if m == 0:
        return HElement.unit(n)
    gi = HElement.basis(symgroup.simple(i, n))
    if m % 2 == 0:
        a = (Q ** m - 1).exact_div(Q + 1)
        return gi.scale(a) + HElement.unit(n).scale(a + 1)
    a = (Q ** m + 1).exact_div(Q + 1)
    return gi.scale(a) + HElement.unit(n).scale(a - 1)


# -- Ocneanu trace ------------------------------------------------------------

_TRACE_MEMO: dict[tuple, LaurentPoly] = {}


def basis_trace(w: tuple) -> LaurentPoly:
    """tau(G_w) as a Laurent polynomial in q and zeta."""
    hit = _TRACE_MEMO.get(w)
    if hit is not None:
        return hit
    m = len(w)
    if m <= 1:
        val = ONE
    else:
        v, i = symgroup.top_decompose(w)
        if i is None:
            val = basis_trace(v)
        else:
            # G_w = G_v G_{m-1} (G_{m-2} ... G_i), and tau(x G_{m-1} y) = zeta tau(x y)
            terms = {v: ONE}
            for j in range(m - 2, i - 1, -1):
                terms = _mul_gen_terms(terms, j, 1)
            acc = LaurentPoly()
            for u, c in terms.items():
                acc = acc + c * basis_trace(u)
            val = ZETA * acc
    _TRACE_MEMO[w] = val
    return val


def ocneanu_trace(h: HElement, bindings: Mapping[str, object] | None = None):
    """tau(h); zeta and q stay symbolic unless bound in `bindings`."""
    acc = LaurentPoly()
    for w, c in h.terms.items():
        acc = acc + c * basis_trace(w)
    if bindings:
        return acc.substitute(bindings)
    return acc
