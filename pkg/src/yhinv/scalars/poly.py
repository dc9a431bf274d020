"""Sparse multivariate Laurent polynomials and their fraction field.

A monomial is a tuple of ``(symbol_index, exponent)`` pairs sorted by index,
with nonzero (possibly negative) exponents. Coefficients are mpq or
Cyclotomic; a Cyclotomic that happens to be rational is stored as mpq so the
common rational-only path stays cheap.

Symbols live in one process-wide registry whose fixed prefix is the
parameter order ``u, z, q, zeta, E, x_1, x_2, ...``. Rendering sorts
monomials graded-lexicographically on that order.
"""

from __future__ import annotations

import re
import threading
from typing import Iterable, Mapping

from gmpy2 import mpq

from .cyclotomic import Cyclotomic, _pdivmod, cyc_inv, is_rational_scalar

PARAMS = ("u", "z", "q", "zeta", "E")
MAX_FRAMING_SYMBOLS = 64

_names: list[str] = list(PARAMS) + [f"x_{m}" for m in range(1, MAX_FRAMING_SYMBOLS + 1)]
_index: dict[str, int] = {name: i for i, name in enumerate(_names)}
_lock = threading.Lock()

_SYMBOL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def symbol_index(name: str) -> int:
    try:
        return _index[name]
    except KeyError:
        pass
    if not _SYMBOL_RE.match(name) or re.match(r"zeta_\d+\Z", name) or name == "r":
        raise ValueError(f"invalid symbol name {name!r}")
    with _lock:
        if name not in _index:
            _index[name] = len(_names)
            _names.append(name)
    return _index[name]


def symbol_name(index: int) -> str:
    return _names[index]


def framing_symbol(m: int) -> str:
    return f"x_{m}"


def _norm_coeff(c):
    if isinstance(c, Cyclotomic):
        return c.coeffs[0] if c.is_rational() else c
    if isinstance(c, int):
        return mpq(c)
    return c


def is_scalar(x) -> bool:
    return isinstance(x, (int, mpq, Cyclotomic))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    if len(a) == 1 and len(b) == 1:
        (i, e), (j, f) = a[0], b[0]
        if i == j:
            return ((i, e + f),) if e + f else ()
        return (a[0], b[0]) if i < j else (b[0], a[0])
    acc = dict(a)
    for i, f in b:
        e = acc.get(i, 0) + f
        if e:
            acc[i] = e
        else:
            del acc[i]
    return tuple(sorted(acc.items()))


def _mono_inv(a: tuple) -> tuple:
    return tuple((i, -e) for i, e in a)


def _mono_degree(a: tuple) -> int:
    return sum(e for _, e in a)


def _mono_sort_key(a: tuple, nvars: int):
    # graded lex, descending: higher total degree first, then larger exponent
    # on the earliest symbol
    dense = [0] * nvars
    for i, e in a:
        dense[i] = e
    return (-_mono_degree(a), tuple(-e for e in dense))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with mpq/Cyclotomic coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None, *, _clean: bool = False):
        if _clean:
            object.__setattr__(self, "terms", terms)
        else:
            clean = {}
            for m, c in (terms or {}).items():
                c = _norm_coeff(c)
                if c != 0:
                    clean[m] = c
            object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = _norm_coeff(c)
        return cls({(): c} if c != 0 else {}, _clean=True)

    @classmethod
    def symbol(cls, name: str, exp: int = 1) -> "LaurentPoly":
        if exp == 0:
            return cls.const(1)
        return cls({((symbol_index(name), exp),): mpq(1)}, _clean=True)

    @classmethod
    def from_dense(cls, coeffs: Iterable, var: str) -> "LaurentPoly":
        idx = symbol_index(var)
        return cls({(((idx, k),) if k else ()): c for k, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), mpq(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[str]:
        return {symbol_name(i) for m in self.terms for i, _ in m}

    def coefficient(self, exponents: Mapping[str, int]):
        mono = tuple(sorted((symbol_index(s), e) for s, e in exponents.items() if e))
        return self.terms.get(mono, mpq(0))

    def degree_in(self, name: str) -> tuple[int, int]:
        """(lowest, highest) exponent of `name` over all terms."""
        idx = symbol_index(name)
        exps = [dict(m).get(idx, 0) for m in self.terms] or [0]
        return min(exps), max(exps)

    def leading(self):
        """Leading (monomial, coefficient) in graded-lex order."""
        nvars = len(_names)
        m = min(self.terms, key=lambda t: _mono_sort_key(t, nvars))
        return m, self.terms[m]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if is_scalar(other):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            if m in out:
                s = _norm_coeff(out[m] + c)
                if s != 0:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return LaurentPoly(out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly()
        if c == 1:
            return self
        out = {}
        for m, a in self.terms.items():
            v = _norm_coeff(a * c)
            if v != 0:
                out[m] = v
        return LaurentPoly(out, _clean=True)

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly()
        if len(b) == 1 and () in b:
            return self.scale(b[()])
        if len(a) == 1 and () in a:
            return other.scale(a[()])
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return LaurentPoly(out)

    __rmul__ = __mul__

    def mono_shift(self, mono: tuple) -> "LaurentPoly":
        return LaurentPoly({_mono_mul(m, mono): c for m, c in self.terms.items()}, _clean=True)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.is_monomial():
                (m, c), = self.terms.items()
                return LaurentPoly({tuple((i, -e * -k) for i, e in m): _norm_coeff((1 / c if not isinstance(c, Cyclotomic) else cyc_inv(c)) ** -k)}, _clean=True)
            return RatFun(LaurentPoly.const(1), self ** -k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = 1 / mpq(other) if is_rational_scalar(other) else cyc_inv(other)
            return self.scale(inv)
        if isinstance(other, LaurentPoly):
            return RatFun(self, other).simplify()
        return NotImplemented

    def __rtruediv__(self, other):
        if is_scalar(other):
            return RatFun(LaurentPoly.const(other), self).simplify()
        return NotImplemented

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if is_scalar(other):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    # -- substitution -------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object]):
        """Simultaneous substitution of symbols; result is LaurentPoly or RatFun."""
        bound = {symbol_index(k): v for k, v in bindings.items()}
        if not any(i in bound for m in self.terms for i, _ in m):
            return self
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                val = bound[i]
                if is_scalar(val):
                    val = LaurentPoly.const(val)
                if e < 0 and _is_zero(val):
                    raise ZeroDivisionError(f"substitution sends {symbol_name(i)} to zero in a negative power")
                powers[key] = val ** e
            return powers[key]

        # group terms by their bound part so each binding product is built once
        groups: dict = {}
        for m, c in self.terms.items():
            bpart = tuple(p for p in m if p[0] in bound)
            free = tuple(p for p in m if p[0] not in bound)
            groups.setdefault(bpart, {})[free] = c
        acc = LaurentPoly()
        for bpart, rest in groups.items():
            factor = LaurentPoly(rest, _clean=True)
            for i, e in bpart:
                factor = factor * power(i, e)
            acc = acc + factor
        return acc

    # -- exact division -----------------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return self/other when the quotient is a Laurent polynomial, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        if other.is_monomial():
            (m, c), = other.terms.items()
            return self.mono_shift(_mono_inv(m)) / c
        num, num_shift = _to_polynomial(self)
        den, den_shift = _to_polynomial(other)
        nvars = max([i for m in list(num.terms) + list(den.terms) for i, _ in m] + [0]) + 1
        if len({i for m in list(num.terms) + list(den.terms) for i, _ in m}) == 1:
            q = _univariate_exact_div(num, den)
        else:
            q = _lex_exact_div(num, den, nvars)
        if q is None:
            return None
        return q.mono_shift(_mono_mul(num_shift, _mono_inv(den_shift)))

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        nvars = len(_names)
        monos = sorted(self.terms, key=lambda m: _mono_sort_key(m, nvars))
        out = ""
        for k, m in enumerate(monos):
            c = self.terms[m]
            body = "*".join(symbol_name(i) + (f"^{e}" if e != 1 else "") for i, e in m)
            negative = False
            if isinstance(c, Cyclotomic):
                text = "(" + c.render() + ")"
                coef = text if not body else text + "*"
            else:
                negative = c < 0
                a = -c if negative else c
                coef = "" if (a == 1 and body) else str(a) + ("*" if body else "")
            term = coef + body
            if k == 0:
                out = ("-" if negative else "") + term
            else:
                out += (" - " if negative else " + ") + term
        return out

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def _is_zero(v) -> bool:
    if isinstance(v, (LaurentPoly, RatFun)):
        return v.is_zero()
    return v == 0


def _to_polynomial(p: LaurentPoly) -> tuple[LaurentPoly, tuple]:
    """Shift p by a monomial so every variable has minimum exponent 0."""
    variables = {i for m in p.terms for i, _ in m}
    mins = {i: 0 for i in variables}
    for m in p.terms:
        for i, e in m:
            if e < mins[i]:
                mins[i] = e
    shift = tuple(sorted((i, e) for i, e in mins.items() if e))
    if not shift:
        return p, ()
    return p.mono_shift(_mono_inv(shift)), shift


def _coeff_div(a, b):
    if isinstance(b, Cyclotomic):
        return _norm_coeff(a * cyc_inv(b))
    return _norm_coeff(a / b)


def _univariate_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    var = next(i for m in list(num.terms) + list(den.terms) for i, _ in m)

    def dense(p):
        deg = max(dict(m).get(var, 0) for m in p.terms)
        out = [0] * (deg + 1)
        for m, c in p.terms.items():
            out[dict(m).get(var, 0)] = c
        return out

    a, b = dense(num), dense(den)
    if any(isinstance(c, Cyclotomic) for c in a + b):
        return _lex_exact_div(num, den, var + 1)
    q, r = _pdivmod(a, b)
    if r:
        return None
    return LaurentPoly({(((var, k),) if k else ()): c for k, c in enumerate(q)})


def _lex_key(m: tuple, nvars: int) -> tuple:
    dense = [0] * nvars
    for i, e in m:
        dense[i] = e
    return tuple(dense)


def _lex_exact_div(num: LaurentPoly, den: LaurentPoly, nvars: int, max_steps: int = 20000) -> LaurentPoly | None:
    lead_m = max(den.terms, key=lambda m: _lex_key(m, nvars))
    lead_c = den.terms[lead_m]
    lead_dense = _lex_key(lead_m, nvars)
    rem = dict(num.terms)
    quot: dict = {}
    for _ in range(max_steps):
        if not rem:
            return LaurentPoly(quot)
        m = max(rem, key=lambda t: _lex_key(t, nvars))
        dense = _lex_key(m, nvars)
        if any(x < y for x, y in zip(dense, lead_dense)):
            return None
        qm = _mono_mul(m, _mono_inv(lead_m))
        qc = _coeff_div(rem[m], lead_c)
        quot[qm] = qc
        for dm, dc in den.terms.items():
            t = _mono_mul(qm, dm)
            v = _norm_coeff(rem.get(t, 0) - qc * dc)
            if v != 0:
                rem[t] = v
            else:
                rem.pop(t, None)
    return None


class RatFun:
    """Quotient num/den of Laurent polynomials.

    Not kept in lowest terms: equality is decided by cross-multiplication.
    Monomial denominators are absorbed into the numerator, and non-monomial
    denominators are normalised to have leading coefficient 1 and minimum
    exponent 0 in every variable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFun) or isinstance(den, RatFun):
            a = num if isinstance(num, RatFun) else RatFun(num)
            b = RatFun(1) if den is None else (den if isinstance(den, RatFun) else RatFun(den))
            num, den = a.num * b.den, a.den * b.num
        num = _as_poly(num)
        den = LaurentPoly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if den.is_monomial():
            (m, c), = den.terms.items()
            num = num.mono_shift(_mono_inv(m)).scale(1 / c if not isinstance(c, Cyclotomic) else cyc_inv(c))
            den = LaurentPoly.const(1)
        elif num.is_zero():
            den = LaurentPoly.const(1)
        else:
            den, shift = _to_polynomial(den)
            num = num.mono_shift(_mono_inv(shift))
            _, lc = den.leading()
            if lc != 1:
                inv = 1 / lc if not isinstance(lc, Cyclotomic) else cyc_inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    def is_polynomial(self) -> bool:
        return self.den == 1

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def simplify(self):
        """Cancel the denominator when it divides the numerator exactly.

        Returns a LaurentPoly when the denominator cancels, else a RatFun
        (reduced by the univariate gcd where both sides are univariate).
        """
        if self.den == 1:
            return self.num
        q = self.num.exact_div(self.den)
        if q is not None:
            return q
        g = _univariate_gcd(self.num, self.den)
        if g is not None and not g.is_constant():
            return RatFun(self.num.exact_div(g), self.den.exact_div(g))
        return self

    def as_ratfun(self) -> "RatFun":
        return self

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, LaurentPoly) or is_scalar(other):
            return RatFun(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFun(self.den ** -k, self.num ** -k) if not self.num.is_monomial() else RatFun(self.den ** -k) * (self.num ** k)
        return RatFun(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ratfun_eq(self, o)

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def substitute(self, bindings: Mapping[str, object]):
        num = self.num.substitute(bindings)
        den = self.den.substitute(bindings)
        if _is_zero(den):
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return RatFun(num, den)

    def render(self) -> str:
        s = self.simplify()
        if isinstance(s, LaurentPoly):
            return s.render()
        num = s.num.render()
        if len(s.num) > 1:
            num = f"({num})"
        return f"{num}/({s.den.render()})"

    __str__ = render

    def __repr__(self):
        return f"RatFun({self.render()!r})"


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if is_scalar(x):
        return LaurentPoly.const(x)
    raise TypeError(f"expected a Laurent polynomial, got {type(x).__name__}")


def _univariate_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    vars_ = {i for m in list(a.terms) + list(b.terms) for i, _ in m}
    if len(vars_) != 1:
        return None
    if any(isinstance(c, Cyclotomic) for c in list(a.terms.values()) + list(b.terms.values())):
        return None
    var = vars_.pop()
    pa, _ = _to_polynomial(a)
    pb, _ = _to_polynomial(b)

    def dense(p):
        deg = max(dict(m).get(var, 0) for m in p.terms)
        out = [mpq(0)] * (deg + 1)
        for m, c in p.terms.items():
            out[dict(m).get(var, 0)] = c
        return out

    x, y = dense(pa), dense(pb)
    while y:
        _, r = _pdivmod(x, y)
        x, y = y, r
    return LaurentPoly({(((var, k),) if k else ()): c / x[-1] for k, c in enumerate(x)})


def as_ratfun(x) -> RatFun:
    return x if isinstance(x, RatFun) else RatFun(x)


def ratfun_eq(a, b) -> bool:
    """True iff a and b are the same rational function (cross-multiplication)."""
    a, b = as_ratfun(a), as_ratfun(b)
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def substitute(a, bindings: Mapping[str, object]):
    """Simultaneous substitution into a scalar, LaurentPoly, RatFun or SqrtExt."""
    if is_scalar(a):
        return a
    return a.substitute(bindings)


def sym(name: str) -> LaurentPoly:
    return LaurentPoly.symbol(name)
