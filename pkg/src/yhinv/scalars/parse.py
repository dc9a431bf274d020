"""Parse rendered scalar text back into exact values.

Accepts the grammar produced by the renderers: integers, fractions, symbols,
``zeta_<d>`` cyclotomic generators, ``+ - * / ^`` and parentheses. The name
``r`` stands for the formal square root and is only allowed when a radicand
is supplied.
"""

from __future__ import annotations

import ast
import re

from gmpy2 import mpq

from .cyclotomic import Cyclotomic
from .poly import LaurentPoly, RatFun
from .sqrtext import SqrtExt

_ZETA = re.compile(r"zeta_(\d+)\Z")


class ParseError(ValueError):
    pass


def _simplify(v):
    if isinstance(v, RatFun):
        return v.simplify()
    return v


def parse_scalar(text: str, radicand=None):
    """Evaluate `text` to an mpq, Cyclotomic, LaurentPoly, RatFun or SqrtExt."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _simplify(_eval(tree.body, radicand, text))


def _eval(node, radicand, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return mpq(node.value)
    if isinstance(node, ast.Name):
        name = node.id
        m = _ZETA.match(name)
        if m:
            return Cyclotomic.zeta(int(m.group(1)))
        if name == "r":
            if radicand is None:
                raise ParseError("'r' used without a declared radicand")
            return SqrtExt.root(radicand)
        return LaurentPoly.symbol(name)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, radicand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a = _eval(node.left, radicand, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)) and not (
                isinstance(node.right, ast.UnaryOp) and isinstance(node.right.operand, ast.Constant)
            ):
                raise ParseError(f"exponent must be an integer literal in {text!r}")
            k = _eval(node.right, radicand, text)
            if k.denominator != 1:
                raise ParseError(f"exponent must be an integer in {text!r}")
            return a ** int(k)
        b = _eval(node.right, radicand, text)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return _mul(a, b)
        if isinstance(node.op, ast.Div):
            return _div(a, b)
    raise ParseError(f"unsupported syntax in {text!r}")


def _mul(a, b):
    # keep SqrtExt on the left so its coercion applies
    if isinstance(b, SqrtExt) and not isinstance(a, SqrtExt):
        return b * a
    return a * b


def _div(a, b):
    if isinstance(b, SqrtExt):
        return _mul(a, b.inverse())
    if isinstance(a, SqrtExt):
        inv = 1 / RatFun(b) if not isinstance(b, RatFun) else RatFun(1) / b
        return a * inv
    if isinstance(a, mpq) and isinstance(b, mpq):
        return a / b
    if isinstance(b, (mpq, Cyclotomic)):
        return a / b
    return RatFun(a) / b
