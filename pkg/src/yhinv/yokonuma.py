"""The Yokonuma-Hecke algebra Y_{d,n}(u) on the split basis t^k g_w, the
Juyumaya trace, the map phi and the epimorphism gamma onto H_n.

A basis key is ``(k, w)``: ``k`` a framing vector with entries in Z/dZ and
``w`` a one-line permutation. Coefficients are Laurent polynomials in u
(plus z and framing values once a trace is taken).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Mapping

from gmpy2 import mpq

from . import symgroup
from .braid import BraidWord
from .hecke import HElement
from .scalars import Cyclotomic, LaurentPoly, framing_symbol, sym

U = sym("u")
Z = sym("z")
ONE = LaurentPoly.const(1)


def _accumulate(out: dict, key, c: LaurentPoly):
    prev = out.get(key)
    out[key] = c if prev is None else prev + c


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


@functools.lru_cache(maxsize=None)
def transport(v: tuple, j: int) -> int:
    """Index a with g_v t_j = t_a g_v, found by pushing t_j leftwards through
    g_v one letter at a time with t_j g_i = g_i t_{s_i(j)}."""
    for i in reversed(symgroup.reduced_word(v)):
        if j == i:
            j = i + 1
        elif j == i + 1:
            j = i
    return j


@dataclass(frozen=True, eq=False)
class YElement:
    """Sparse element of Y_{d,n}(u) keyed by (framing vector, permutation)."""

    n: int
    d: int
    terms: Mapping[tuple, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def unit(cls, n: int, d: int) -> "YElement":
        return cls(n, d, {((0,) * n, symgroup.identity(n)): ONE})

    @classmethod
    def zero(cls, n: int, d: int) -> "YElement":
        return cls(n, d, {})

    @classmethod
    def basis(cls, k: tuple, w: tuple, d: int, coeff=ONE) -> "YElement":
        if not isinstance(coeff, LaurentPoly):
            coeff = LaurentPoly.const(coeff)
        return cls(len(w), d, {(tuple(x % d for x in k), tuple(w)): coeff})

    @classmethod
    def gen(cls, i: int, n: int, d: int, sign: int = 1) -> "YElement":
        return y_mul_gen(cls.unit(n, d), i, sign)

    @classmethod
    def framing(cls, j: int, power: int, n: int, d: int) -> "YElement":
        """t_j^power."""
        k = [0] * n
        k[j - 1] = power % d
        return cls(n, d, {(tuple(k), symgroup.identity(n)): ONE})

    def _check(self, other):
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"Y_{{{self.d},{self.n}}} and Y_{{{other.d},{other.n}}} elements cannot be combined")

    def __add__(self, other: "YElement") -> "YElement":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(out, key, c)
        return YElement(self.n, self.d, _prune(out))

    def __neg__(self):
        return YElement(self.n, self.d, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "YElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        return YElement(self.n, self.d, _prune({k: v * c for k, v in self.terms.items()}))

    def __mul__(self, other):
        if isinstance(other, YElement):
            return y_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, YElement):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and dict(self.terms) == dict(other.terms)

    __hash__ = None

    def embed(self, n: int) -> "YElement":
        if n < self.n:
            raise ValueError("cannot embed into a smaller algebra")
        extra = n - self.n
        tail = tuple(range(self.n + 1, n + 1))
        return YElement(n, self.d, {(k + (0,) * extra, w + tail): c for (k, w), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, w in sorted(self.terms, key=lambda kw: (symgroup.length(kw[1]), kw[1], kw[0])):
            fr = "*".join(f"t{j}^{e}" for j, e in enumerate(k, start=1) if e)
            word = symgroup.reduced_word(w)
            g = "g[" + ",".join(map(str, word)) + "]" if word else ""
            basis = "*".join(p for p in (fr, g) if p) or "1"
            parts.append(f"({self.terms[(k, w)]})*{basis}")
        return " + ".join(parts)


# -- multiplication -----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _shifts(k: tuple, a: int, b: int, d: int) -> tuple:
    """Framing vectors of t^k e_{a,b}: k + s(e_a - e_b) for s in Z/dZ."""
    out = []
    for s in range(d):
        kk = list(k)
        kk[a - 1] = (kk[a - 1] + s) % d
        kk[b - 1] = (kk[b - 1] - s) % d
        out.append(tuple(kk))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _consts(d: int):
    inv_d = mpq(1, d)
    up = (U - 1).scale(inv_d)
    um = (U ** -1 - 1).scale(inv_d)
    return up, um


def _mul_gen_terms(terms: Mapping, i: int, sign: int, d: int) -> dict:
    up, um = _consts(d)
    out: dict = {}
    for (k, w), c in terms.items():
        ws = symgroup.mul_simple(w, i)
        ascent = w[i - 1] < w[i]
        if (sign > 0) == ascent:
            _accumulate(out, (k, ws), c)
            continue
        if sign > 0:
            # g_w g_i = g_v g_i^2 with v = w s_i, and g_v e_i = e_{v(i),v(i+1)} g_v
            v = ws
            _accumulate(out, (k, v), c)
            cc = c * up
            for kk in _shifts(k, transport(v, i), transport(v, i + 1), d):
                _accumulate(out, (kk, v), cc)
                _accumulate(out, (kk, w), cc)
        else:
            # g_i^-1 = g_i + (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i
            _accumulate(out, (k, ws), c)
            cc = c * um
            for kk in _shifts(k, transport(w, i), transport(w, i + 1), d):
                _accumulate(out, (kk, w), cc)
                _accumulate(out, (kk, ws), cc)
    return _prune(out)


def _mul_framing_terms(terms: Mapping, fk: tuple, d: int) -> dict:
    """Right multiplication by t^fk: t^k g_w t_j = t^k t_{w(j)} g_w."""
    if not any(fk):
        return dict(terms)
    out: dict = {}
    for (k, w), c in terms.items():
        kk = list(k)
        for j, e in enumerate(fk, start=1):
            if e:
                a = transport(w, j)
                kk[a - 1] = (kk[a - 1] + e) % d
        _accumulate(out, (tuple(kk), w), c)
    return _prune(out)


def y_mul_gen(y: YElement, i: int, sign: int = 1) -> YElement:
    """Right multiplication by g_i (sign=+1) or g_i^-1 (sign=-1)."""
    if not 1 <= i < y.n:
        raise ValueError(f"g_{i} is not a generator of Y_{{{y.d},{y.n}}}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return YElement(y.n, y.d, _mul_gen_terms(y.terms, i, sign, y.d))


def y_mul_framing(y: YElement, j: int, power: int = 1) -> YElement:
    k = [0] * y.n
    k[j - 1] = power % y.d
    return YElement(y.n, y.d, _mul_framing_terms(y.terms, tuple(k), y.d))


def _times_basis(terms: Mapping, k: tuple, w: tuple, d: int) -> dict:
    part = _mul_framing_terms(terms, k, d)
    for i in symgroup.reduced_word(w):
        part = _mul_gen_terms(part, i, 1, d)
    return part


def y_mul(a: YElement, b: YElement) -> YElement:
    a._check(b)
    out: dict = {}
    for (k, w), c in b.terms.items():
        for key, e in _times_basis(a.terms, k, w, a.d).items():
            _accumulate(out, key, e * c)
    return YElement(a.n, a.d, _prune(out))


def y_from_braid(a: BraidWord, d: int) -> YElement:
    """delta(alpha): the left-to-right product of g_i^(+-1)."""
    terms = {((0,) * a.n, symgroup.identity(a.n)): ONE}
    for x in a.letters:
        terms = _mul_gen_terms(terms, abs(x), 1 if x > 0 else -1, d)
    return YElement(a.n, d, terms)


def e_expand(i: int, k: int, n: int, d: int) -> YElement:
    """e_{i,k} = (1/d) sum_s t_i^s t_k^(-s)."""
    if not (1 <= i <= n and 1 <= k <= n):
        raise ValueError(f"e_{{{i},{k}}} is not defined in Y_{{{d},{n}}}")
    if i == k:
        return YElement.unit(n, d)
    c = LaurentPoly.const(mpq(1, d))
    ident = symgroup.identity(n)
    return YElement(n, d, {(kk, ident): c for kk in _shifts((0,) * n, i, k, d)})


def y_power(i: int, m: int, n: int, d: int) -> YElement:
    """g_i^m from the closed forms."""
    if m < 0:
        raise ValueError("y_power needs m >= 0")
    unit = YElement.unit(n, d)
    if m == 0:
        return unit
    gi = YElement.gen(i, n, d)
    ei = e_expand(i, i + 1, n, d)
    eg = y_mul(ei, gi)
    if m % 2 == 0:
        a = (U ** m - 1).exact_div(U + 1)
        return (eg + ei).scale(a) + unit
    a = (U ** m - U).exact_div(U + 1)
    return (eg + ei).scale(a) + gi


# -- framing characters -------------------------------------------------------

@dataclass(frozen=True)
class FramingCharacter:
    """Values x_0 = 1, x_1, ..., x_{d-1} used by tr(a t_{n+1}^m) = x_m tr(a)."""

    d: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.d:
            raise ValueError("a framing character needs exactly d values")
        if self.values[0] != 1:
            raise ValueError("the value at 0 must be 1")

    @classmethod
    def symbolic(cls, d: int) -> "FramingCharacter":
        return cls(d, (ONE,) + tuple(sym(framing_symbol(m)) for m in range(1, d)))

    @classmethod
    def specialized(cls, d: int, values) -> "FramingCharacter":
        vals = tuple(v if isinstance(v, (Cyclotomic, LaurentPoly)) else mpq(v) for v in values)
        return cls(d, vals)

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(v, LaurentPoly) and not v.is_constant() for v in self.values)

    def __call__(self, m: int):
        return self.values[m % self.d]

    def poly(self, m: int) -> LaurentPoly:
        v = self.values[m % self.d]
        return v if isinstance(v, LaurentPoly) else LaurentPoly.const(v)

    def theta(self) -> dict:
        """Bindings x_m -> value, for specialising a symbolic trace."""
        return {framing_symbol(m): self.values[m] for m in range(1, self.d)}

    def e_value(self):
        """(1/d) sum_s x_s x_{d-s}."""
        acc = LaurentPoly()
        for s in range(self.d):
            acc = acc + self.poly(s) * self.poly(-s)
        return acc.scale(mpq(1, self.d))


# -- Juyumaya trace -----------------------------------------------------------

_TRACE_MEMO: dict = {}


def basis_trace(k: tuple, w: tuple, char: FramingCharacter) -> LaurentPoly:
    """tr(t^k g_w), a Laurent polynomial in u, z and the character values."""
    memo = _TRACE_MEMO.setdefault((char.d, char.values), {})
    return _basis_trace(k, w, char, memo)


def _basis_trace(k, w, char, memo) -> LaurentPoly:
    hit = memo.get((k, w))
    if hit is not None:
        return hit
    m = len(w)
    if m == 1:
        val = char.poly(k[0])
    else:
        v, i = symgroup.top_decompose(w)
        if i is None:
            val = char.poly(k[-1]) * _basis_trace(k[:-1], v, char, memo)
        else:
            # t^k g_w = t^k' g_v g_{m-1} (g_{m-2} ... g_i t_i^{k_m}); tr(x g_{m-1} y) = z tr(x y)
            terms = {(k[:-1], v): ONE}
            for j in range(m - 2, i - 1, -1):
                terms = _mul_gen_terms(terms, j, 1, char.d)
            if k[-1]:
                fk = [0] * (m - 1)
                fk[i - 1] = k[-1]
                terms = _mul_framing_terms(terms, tuple(fk), char.d)
            acc = LaurentPoly()
            for (kk, ww), c in terms.items():
                acc = acc + c * _basis_trace(kk, ww, char, memo)
            val = Z * acc
    memo[(k, w)] = val
    return val


def juyumaya_trace(y: YElement, char: FramingCharacter | None = None, bindings: Mapping[str, object] | None = None):
    """tr(y); u and z stay symbolic unless bound. A missing character means
    symbolic framing parameters x_1, ..., x_{d-1}."""
    if char is None:
        char = FramingCharacter.symbolic(y.d)
    if char.d != y.d:
        raise ValueError("framing character and element have different d")
    acc = LaurentPoly()
    for (k, w), c in y.terms.items():
        acc = acc + c * basis_trace(k, w, char)
    if bindings:
        return acc.substitute(bindings)
    return acc


# -- phi and gamma ------------------------------------------------------------

_PHI_MEMO: dict = {}


def phi_map(y: YElement, char: FramingCharacter) -> YElement:
    """The linear map phi, with values in the span of {g_w : w in D}."""
    if char.is_symbolic:
        raise ValueError("phi_map needs a specialised framing character")
    if char.d != y.d:
        raise ValueError("framing character and element have different d")
    memo = _PHI_MEMO.setdefault((char.d, char.values), {})
    out: dict = {}
    for (k, w), c in y.terms.items():
        for key, e in _phi_basis(k, w, char, memo).items():
            _accumulate(out, key, e * c)
    return YElement(y.n, y.d, _prune(out))


def _phi_basis(k, w, char, memo) -> dict:
    hit = memo.get((k, w))
    if hit is not None:
        return hit
    m = len(w)
    if m == 1:
        val = _prune({((0,), (1,)): char.poly(k[0])})
    else:
        v, i = symgroup.top_decompose(w)
        if i is None:
            x = char.poly(k[-1])
            lower = _phi_basis(k[:-1], v, char, memo)
            val = _prune({(kk + (0,), ww + (m,)): c * x for (kk, ww), c in lower.items()})
        else:
            terms = {(k[:-1], v): ONE}
            for j in range(m - 2, i - 1, -1):
                terms = _mul_gen_terms(terms, j, 1, char.d)
            if k[-1]:
                fk = [0] * (m - 1)
                fk[i - 1] = k[-1]
                terms = _mul_framing_terms(terms, tuple(fk), char.d)
            lower: dict = {}
            for (kk, ww), c in terms.items():
                for key, e in _phi_basis(kk, ww, char, memo).items():
                    _accumulate(lower, key, e * c)
            # left multiplication by g_{m-1} is length-additive on permutations fixing m
            s = symgroup.simple(m - 1, m)
            val = {}
            for (kk, ww), c in _prune(lower).items():
                val[(kk + (0,), symgroup.compose(s, ww + (m,)))] = c
    memo[(k, w)] = val
    return val


def gamma_map(y: YElement, char) -> HElement:
    """t^k g_w -> (prod_j x_{k_j}) G_w, with u renamed to q.

    `char` is a FramingCharacter or an ESolution. It is only a homomorphism
    when E = 1, so other characters are rejected.
    """
    from .hecke import _as_poly

    if not isinstance(char, FramingCharacter):
        char = char.character()
    if char.is_symbolic or char.e_value() != 1:
        raise ValueError("gamma_map needs a solution with E = 1 (singleton S)")
    out: dict = {}
    for (k, w), c in y.terms.items():
        x = ONE
        for e in k:
            if e:
                x = x * char.poly(e)
        _accumulate(out, w, _as_poly((c * x).substitute({"u": sym("q")})))
    return HElement(y.n, _prune(out))


def inductive_basis(n: int, d: int) -> list[YElement]:
    """The inductive basis of Y_{d,n}: products w t_m^k and w g_{m-1} ... g_i t_i^k
    built strand by strand from the basis of Y_{d,m-1}."""
    level = [YElement.framing(1, k, 1, d) for k in range(d)]
    for m in range(2, n + 1):
        nxt = []
        for w in level:
            w = w.embed(m)
            for k in range(d):
                nxt.append(y_mul_framing(w, m, k))
            for i in range(m - 1, 0, -1):
                tail = w
                for j in range(m - 1, i - 1, -1):
                    tail = y_mul_gen(tail, j)
                for k in range(d):
                    nxt.append(y_mul_framing(tail, i, k))
        level = nxt
    return level
