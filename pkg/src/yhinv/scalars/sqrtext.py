"""Formal quadratic extension RatFun[r]/(r^2 - radicand)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .poly import LaurentPoly, RatFun, as_ratfun, is_scalar, ratfun_eq


class RadicandMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SqrtExt:
    """even + odd * r, where r is a formal square root of `radicand`."""

    even: RatFun
    odd: RatFun
    radicand: RatFun

    def __post_init__(self):
        object.__setattr__(self, "even", as_ratfun(self.even))
        object.__setattr__(self, "odd", as_ratfun(self.odd))
        object.__setattr__(self, "radicand", as_ratfun(self.radicand))

    @classmethod
    def of(cls, value, radicand) -> "SqrtExt":
        return cls(as_ratfun(value), RatFun(0), radicand)

    @classmethod
    def root(cls, radicand) -> "SqrtExt":
        return cls(RatFun(0), RatFun(1), radicand)

    def _check(self, other: "SqrtExt"):
        if self.radicand is not other.radicand and not ratfun_eq(self.radicand, other.radicand):
            raise RadicandMismatch("square-root extensions with different radicands")

    def _lift(self, other):
        if isinstance(other, SqrtExt):
            self._check(other)
            return other
        if isinstance(other, (RatFun, LaurentPoly)) or is_scalar(other):
            return SqrtExt.of(other, self.radicand)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return SqrtExt(self.even + o.even, self.odd + o.odd, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.even, -self.odd, self.radicand)

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
        return sqrtext_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return sqrtext_pow(self, m)

    def norm(self) -> RatFun:
        return self.even * self.even - self.radicand * self.odd * self.odd

    def inverse(self) -> "SqrtExt":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("square-root extension element is not invertible")
        # (a + b r)^-1 = (a - b r) / (a^2 - lambda b^2)
        return SqrtExt(self.even / n, -self.odd / n, self.radicand)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __eq__(self, other):
        if isinstance(other, SqrtExt):
            self._check(other)
            return ratfun_eq(self.even, other.even) and ratfun_eq(self.odd, other.odd)
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self == o

    __hash__ = None

    def substitute(self, bindings: Mapping[str, object]) -> "SqrtExt":
        return SqrtExt(
            as_ratfun(self.even.substitute(bindings)),
            as_ratfun(self.odd.substitute(bindings)),
            as_ratfun(self.radicand.substitute(bindings)),
        )

    def render(self) -> str:
        """Text form `even + (odd)*r`; the radicand is reported separately."""
        even, odd = self.even.render(), self.odd.render()
        if self.odd.is_zero():
            return even
        odd_part = "r" if odd == "1" else (f"{odd}*r" if " " not in odd else f"({odd})*r")
        if self.even.is_zero():
            return odd_part
        return f"{even} + {odd_part}"

    def render_radicand(self) -> str:
        return self.radicand.render()

    __str__ = render

    def __repr__(self):
        return f"SqrtExt({self.render()!r}; r^2 = {self.render_radicand()!r})"


def sqrtext_mul(a: SqrtExt, b: SqrtExt) -> SqrtExt:
    a._check(b)
    lam = a.radicand
    even = a.even * b.even
    odd = a.even * b.odd + a.odd * b.even
    if not (a.odd.is_zero() or b.odd.is_zero()):
        even = even + a.odd * b.odd * lam
    return SqrtExt(even, odd, lam)


def sqrtext_pow(a: SqrtExt, m: int) -> SqrtExt:
    if m < 0:
        return sqrtext_pow(a.inverse(), -m)
    lam = a.radicand
    if a.even.is_zero():
        # pure root power: (b r)^m = b^m lambda^(m//2) r^(m%2)
        coeff = a.odd ** m * lam ** (m // 2)
        return SqrtExt(RatFun(0), coeff, lam) if m % 2 else SqrtExt(coeff, RatFun(0), lam)
    result = SqrtExt.of(1, lam)
    base = a
    while m:
        if m & 1:
            result = sqrtext_mul(result, base)
        base = sqrtext_mul(base, base)
        m >>= 1
    return result
