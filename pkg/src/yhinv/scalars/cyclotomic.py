"""Exact arithmetic in the cyclotomic field Q(zeta_d).

Elements are residues modulo the d-th cyclotomic polynomial Phi_d, stored as
dense coefficient tuples of length deg(Phi_d) over the rationals (gmpy2.mpq).
Working modulo Phi_d rather than x^d - 1 keeps the quotient a field, so every
nonzero element is invertible.
"""

from __future__ import annotations

import functools
from typing import Sequence

from gmpy2 import mpq

Rational = mpq


def is_rational_scalar(x) -> bool:
    return isinstance(x, (int, mpq))


# -- dense polynomial helpers over Q (ascending coefficient lists) ----------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _psub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([mpq(c) for c in out])


def _pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Polynomial long division over Q; b must be nonzero."""
    r = _trim([mpq(c) for c in a])
    b = _trim([mpq(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(r) < len(b):
        return [], r
    q = [mpq(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r.pop()
        _trim(r)
    return _trim(q), r


@functools.lru_cache(maxsize=None)
def _phi(d: int) -> tuple[int, ...]:
    if d < 1:
        raise ValueError(f"conductor must be positive, got {d}")
    # x^d - 1 divided by Phi_e for every proper divisor e of d
    num = [mpq(-1)] + [mpq(0)] * (d - 1) + [mpq(1)]
    for e in range(1, d):
        if d % e == 0:
            num, rem = _pdivmod(num, _phi(e))
            assert not rem
    return tuple(int(c) for c in num)


def cyclotomic_polynomial(d: int, var: str = "x"):
    """Phi_d as a univariate LaurentPoly with integer coefficients."""
    from .poly import LaurentPoly

    return LaurentPoly.from_dense(_phi(d), var)


def phi_degree(d: int) -> int:
    return len(_phi(d)) - 1


@functools.lru_cache(maxsize=None)
def _reduction_table(d: int) -> tuple[tuple[mpq, ...], ...]:
    # row j holds x^j mod Phi_d, for 0 <= j < 2*deg - 1
    deg = phi_degree(d)
    phi = _phi(d)
    rows = []
    cur = [mpq(0)] * deg
    cur[0] = mpq(1)
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
        top = cur[-1]
        cur = [mpq(0)] + cur[:-1]
        if top:
            for k in range(deg):
                cur[k] -= top * phi[k]
    return tuple(rows)


def _reduce(d: int, coeffs: Sequence) -> tuple:
    deg = phi_degree(d)
    if len(coeffs) <= deg:
        out = [mpq(c) for c in coeffs] + [mpq(0)] * (deg - len(coeffs))
        return tuple(out)
    if len(coeffs) < 2 * deg:
        table = _reduction_table(d)
        out = [mpq(0)] * deg
        for j, c in enumerate(coeffs):
            if c:
                row = table[j]
                for k in range(deg):
                    out[k] += c * row[k]
        return tuple(out)
    _, r = _pdivmod(coeffs, _phi(d))
    return tuple(r + [mpq(0)] * (deg - len(r)))


class Cyclotomic:
    """An element of Q(zeta_d), immutable.

    Mixed arithmetic with ints and mpq is supported; combining two elements
    of different conductors is only allowed when one of them is rational.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Sequence = (0,)):
        if d < 1:
            raise ValueError(f"conductor must be positive, got {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", _reduce(d, coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def zeta(cls, d: int, power: int = 1) -> "Cyclotomic":
        """The primitive root zeta_d = exp(2 pi i / d) raised to `power`."""
        power %= d
        coeffs = [0] * (power + 1)
        coeffs[power] = 1
        return cls(d, coeffs)

    @classmethod
    def rational(cls, d: int, value) -> "Cyclotomic":
        return cls(d, (mpq(value),))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.d == self.d:
                return other
            if other.is_rational():
                return Cyclotomic(self.d, (other.coeffs[0],))
            if self.is_rational():
                return None  # caller swaps to the other's field
            raise ValueError(f"cannot mix Q(zeta_{self.d}) and Q(zeta_{other.d})")
        if is_rational_scalar(other):
            return Cyclotomic(self.d, (mpq(other),))
        return NotImplemented

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return op(Cyclotomic(other.d, (self.coeffs[0],)), other)
        return op(self, o)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return self._binary(other, lambda a, b: Cyclotomic(a.d, [x + y for x, y in zip(a.coeffs, b.coeffs)]))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.d, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self._binary(other, lambda a, b: Cyclotomic(a.d, [x - y for x, y in zip(a.coeffs, b.coeffs)]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational_scalar(other):
            return Cyclotomic(self.d, [x * other for x in self.coeffs])
        return self._binary(other, lambda a, b: Cyclotomic(a.d, _pmul(a.coeffs, b.coeffs) or [0]))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        return cyc_inv(self)

    def __truediv__(self, other):
        if is_rational_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return Cyclotomic(self.d, [x / other for x in self.coeffs])
        if isinstance(other, Cyclotomic):
            return self * cyc_inv(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational_scalar(other):
            return cyc_inv(self) * other
        return NotImplemented

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        base = self if m >= 0 else cyc_inv(self)
        result = Cyclotomic(self.d, (1,))
        m = abs(m)
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.d == self.d:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if is_rational_scalar(other):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.d, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def render(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            gen = f"zeta_{self.d}" + (f"^{k}" if k > 1 else "")
            if c == 1:
                parts.append(gen)
            elif c == -1:
                parts.append("-" + gen)
            else:
                parts.append(f"{c}*{gen}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __str__ = render

    def __repr__(self):
        return f"Cyclotomic({self.d}, {self.render()!r})"


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    """Multiplicative inverse via the extended Euclidean algorithm modulo Phi_d."""
    if isinstance(a, Cyclotomic):
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        d = a.d
    elif is_rational_scalar(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Cyclotomic(1, (1 / mpq(a),))
    else:
        raise TypeError(f"not a cyclotomic number: {a!r}")

    # invariant: s0*a == r0 (mod Phi_d)
    r0, r1 = _trim(list(a.coeffs)), [mpq(c) for c in _phi(d)]
    s0, s1 = [mpq(1)], []
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # r0 is a nonzero constant because Phi_d is irreducible
    assert len(r0) == 1, "gcd with Phi_d must be constant"
    c = r0[0]
    return Cyclotomic(d, [x / c for x in s0] or [0])
