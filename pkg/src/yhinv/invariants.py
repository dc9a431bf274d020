"""HOMFLYPT polynomial P, the invariants Delta_S, and the comparison harness.

Both invariants have the shape D^(n-1) * r^eps * trace, where r^2 = lambda and
D = 1/(c r) for c = zeta or z. Writing k = eps - (n-1), this is
c^-(n-1) * lambda^(k//2) * trace * r^(k%2), which is how values are built.

Comparing P with Delta_S needs a common home for the two square roots. When
zeta^2 lambda_H = z^2 lambda_Y holds identically we identify
r_Y = (zeta/z) r_H, which is the branch making D_H = D_Y; otherwise the two
roots are treated as independent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from gmpy2 import mpq

from . import braid as braidmod
from .braid import BraidWord
from .esystem import ESolution, e_value
from .hecke import h_from_braid, ocneanu_trace
from .scalars import LaurentPoly, RatFun, SqrtExt, as_ratfun, ratfun_eq, sym
from .yokonuma import juyumaya_trace, y_from_braid

q, zeta, u, z, E = (sym(s) for s in ("q", "zeta", "u", "z", "E"))


class CasePairingError(ValueError):
    pass


class TraceVanishes(ZeroDivisionError):
    pass


# -- normalisation ------------------------------------------------------------

def lambda_h(q_=q, zeta_=zeta) -> RatFun:
    return RatFun(zeta_ + 1 - q_) / (q_ * zeta_)


def lambda_y(u_=u, z_=z, E_=E) -> RatFun:
    return RatFun(z_ + (1 - u_) * E_) / (u_ * z_)


def d_h(q_=q, zeta_=zeta) -> SqrtExt:
    """1/(zeta r) = r/(zeta lambda_H)."""
    lam = lambda_h(q_, zeta_)
    return SqrtExt(RatFun(0), RatFun(1) / (lam * zeta_), lam)


def d_y(u_=u, z_=z, E_=E) -> SqrtExt:
    lam = lambda_y(u_, z_, E_)
    return SqrtExt(RatFun(0), RatFun(1) / (lam * z_), lam)


def _bind(x, bindings):
    if not bindings:
        return x
    return x.substitute(bindings)


@dataclass(frozen=True, eq=False)
class InvariantValue:
    """c^-(n-1) lambda^a trace r^b, stored by its parts and as a SqrtExt."""

    kind: str  # "P" or "Delta"
    n: int
    epsilon: int
    scale: RatFun  # rational part: c^-(n-1) * lambda^a * trace
    odd: int  # b, the power of r left over
    radicand: RatFun
    c: RatFun  # zeta for P, z for Delta

    @property
    def value(self) -> SqrtExt:
        if self.odd:
            return SqrtExt(RatFun(0), self.scale, self.radicand)
        return SqrtExt(self.scale, RatFun(0), self.radicand)

    def render(self) -> str:
        return self.value.render()

    def __eq__(self, other):
        if not isinstance(other, InvariantValue):
            return NotImplemented
        return self.value == other.value

    __hash__ = None


def _assemble(kind, a: BraidWord, trace, lam, c) -> InvariantValue:
    eps = braidmod.epsilon(a)
    k = eps - (a.n - 1)
    half, odd = divmod(k, 2)
    scale = as_ratfun(trace) * (as_ratfun(lam) ** half) * (as_ratfun(c) ** -(a.n - 1))
    return InvariantValue(kind, a.n, eps, scale, odd, as_ratfun(lam), as_ratfun(c))


def _as_element(x):
    return x if isinstance(x, (LaurentPoly, RatFun)) else LaurentPoly.const(x)


_H_TRACE_CACHE: dict = {}
_Y_TRACE_CACHE: dict = {}


def hecke_trace(a: BraidWord) -> LaurentPoly:
    key = (a.n, a.letters)
    hit = _H_TRACE_CACHE.get(key)
    if hit is None:
        hit = ocneanu_trace(h_from_braid(a))
        _H_TRACE_CACHE[key] = hit
    return hit


def yokonuma_trace(a: BraidWord, sol: ESolution) -> LaurentPoly:
    key = (a.n, a.letters, sol.d, sol.S)
    hit = _Y_TRACE_CACHE.get(key)
    if hit is None:
        hit = juyumaya_trace(y_from_braid(a, sol.d), sol.character())
        _Y_TRACE_CACHE[key] = hit
    return hit


def homflypt(a: BraidWord, bindings: Mapping[str, object] | None = None) -> InvariantValue:
    """P = D_H^(n-1) (sqrt lambda_H)^eps tau(pi(a)); q and zeta symbolic unless bound."""
    tr = _bind(hecke_trace(a), bindings)
    lam = _bind(lambda_h(), bindings)
    c = _bind(zeta, bindings)
    return _assemble("P", a, tr, lam, _as_element(c))


def delta_s(a: BraidWord, sol: ESolution, bindings: Mapping[str, object] | None = None) -> InvariantValue:
    """Delta_S = D_Y^(n-1) (sqrt lambda_Y)^eps tr_S(delta(a)) with E = 1/|S|."""
    b = dict(bindings or {})
    tr = _bind(yokonuma_trace(a, sol), b)
    lam = _bind(lambda_y(E_=LaurentPoly.const(e_value(sol))), b)
    c = _bind(z, b)
    return _assemble("Delta", a, tr, lam, _as_element(c))


# -- case table ---------------------------------------------------------------

@dataclass(frozen=True)
class CaseSpec:
    case_id: int
    bindings: Mapping[str, object]
    singleton: bool = False  # E = 1 is realised by requiring |S| = 1
    witness_only: bool = False  # rows 15-16, kept for the dismissal test
    note: str = ""

    def resolved(self, sol: ESolution | None = None) -> dict:
        """Bindings with cross-references expanded and E replaced by its value."""
        return resolve_bindings(self.bindings, e_value(sol) if sol is not None else None)


def _half(x):
    return x.scale(mpq(1, 2))


_CASES = {
    1: ({"q": 1, "zeta": z, "u": 1}, False),
    2: ({"q": 1, "zeta": -z, "u": 1}, False),
    3: ({"zeta": q, "u": 1, "z": 1}, False),
    4: ({"zeta": q, "u": 1, "z": -1}, False),
    5: ({"zeta": -1, "u": 1, "z": 1}, False),
    6: ({"zeta": -1, "u": 1, "z": -1}, False),
    7: ({"q": 1, "zeta": E, "z": -E}, False),
    8: ({"q": 1, "zeta": -E, "z": -E}, False),
    9: ({"zeta": q, "z": -1}, True),
    10: ({"zeta": q, "z": u}, True),
    11: ({"zeta": -1, "z": -1}, True),
    12: ({"zeta": -1, "z": u}, True),
    13: ({"q": u, "zeta": z}, True),
    14: ({"q": u ** -1, "zeta": -z * u ** -1}, True),
    15: ({"q": -u, "zeta": -z, "z": _half(1 - E + u + u * E)}, False),
    16: ({"q": -(u ** -1), "zeta": -z * u ** -1, "z": _half(1 - E + u + u * E)}, False),
}


def case_spec(case_id: int) -> CaseSpec:
    if case_id not in _CASES:
        raise ValueError(f"case must be in 1..16, got {case_id}")
    raw, singleton = _CASES[case_id]
    bindings = {k: v if isinstance(v, LaurentPoly) else LaurentPoly.const(v) for k, v in raw.items()}
    return CaseSpec(case_id, bindings, singleton=singleton, witness_only=case_id >= 15)


def resolve_bindings(bindings: Mapping[str, object], e_val=None) -> dict:
    """Expand bindings that mention other bound symbols, then bind E."""
    out = {k: _as_element(v) for k, v in bindings.items()}
    for _ in range(len(out) + 1):
        changed = False
        for k, v in out.items():
            if _vars(v) & (set(out) - {k}):
                out[k] = _simplify(v.substitute({kk: vv for kk, vv in out.items() if kk != k}))
                changed = True
        if not changed:
            break
    else:  # pragma: no cover
        raise ValueError("cyclic bindings")
    if e_val is not None:
        out = {k: _simplify(_as_element(v).substitute({"E": e_val})) for k, v in out.items()}
        out["E"] = LaurentPoly.const(e_val)
    return out


def _vars(v) -> set:
    if isinstance(v, RatFun):
        return v.num.variables() | v.den.variables()
    return v.variables()


def _simplify(v):
    return v.simplify() if isinstance(v, RatFun) else v


# -- comparison ---------------------------------------------------------------

def branch_relation(bindings: Mapping[str, object]) -> bool:
    """zeta^2 lambda_H == z^2 lambda_Y under the bindings; equivalent to D_H^2 = D_Y^2."""
    lhs = _bind(as_ratfun(zeta * zeta) * lambda_h(), bindings)
    rhs = _bind(as_ratfun(z * z) * lambda_y(), bindings)
    return ratfun_eq(lhs, rhs)


def dh_dy_condition(bindings: Mapping[str, object]) -> bool:
    """(u zeta + z^2 - u E z + E z) q == u zeta (zeta + 1) under the bindings."""
    lhs = _bind((u * zeta + z * z - u * E * z + E * z) * q, bindings)
    rhs = _bind(u * zeta * (zeta + 1), bindings)
    return ratfun_eq(lhs, rhs)


def invariants_equal(p: InvariantValue, dl: InvariantValue, related: bool) -> bool:
    """P == Delta in a common extension; `related` says whether r_Y = (zeta/z) r_H."""
    if p.odd != dl.odd:  # pragma: no cover - parity depends only on (n, eps)
        raise ValueError("invariants of the same braid must share parity")
    if not p.odd:
        return ratfun_eq(p.scale, dl.scale)
    if related:
        return ratfun_eq(p.scale * dl.c, dl.scale * p.c)
    return p.scale.is_zero() and dl.scale.is_zero()


def ratio_check(a: BraidWord, bindings: Mapping[str, object], sol: ESolution) -> bool:
    """tau(pi(a)) / tr_S(delta(a)) == (zeta/z)^eps after substitution."""
    b = resolve_bindings(bindings, e_value(sol))
    th = _bind(hecke_trace(a), b)
    ty = _bind(yokonuma_trace(a, sol), b)
    if as_ratfun(ty).is_zero():
        raise TraceVanishes(f"tr_S vanishes on {a} under these bindings")
    eps = braidmod.epsilon(a)
    zz = as_ratfun(_bind(z, b))
    zt = as_ratfun(_bind(zeta, b))
    # cross-multiplied: th * z^eps == ty * zeta^eps
    return ratfun_eq(as_ratfun(th) * zz ** eps, as_ratfun(ty) * zt ** eps)


def check_pairing(spec: CaseSpec, sol: ESolution):
    if spec.singleton and sol.size != 1:
        raise CasePairingError(f"case {spec.case_id} needs E = 1, i.e. a singleton S; got S = {list(sol.S)}")


def compare_one(a: BraidWord, bindings: Mapping[str, object], sol: ESolution, related: bool | None = None, case=None) -> dict:
    if related is None:
        related = branch_relation(bindings)
    p = homflypt(a, bindings)
    dl = delta_s(a, sol, bindings)
    return {
        "braid": str(a),
        "n": a.n,
        "epsilon": braidmod.epsilon(a),
        "case": case,
        "equal": invariants_equal(p, dl, related),
        "P": p.render(),
        "Delta": dl.render(),
        "P_radicand": p.radicand.render(),
        "Delta_radicand": dl.radicand.render(),
    }


def compare(corpus: Iterable[BraidWord], case: int | Mapping[str, object], sol: ESolution, threads: int = 1) -> list[dict]:
    """Report P vs Delta_S for each braid under a table row or raw bindings."""
    if isinstance(case, int):
        spec = case_spec(case)
        check_pairing(spec, sol)
        bindings = spec.resolved(sol)
        label = case
    else:
        bindings = resolve_bindings(case, e_value(sol))
        label = None
    related = branch_relation(bindings)
    corpus = list(corpus)
    if threads > 1 and len(corpus) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda a: compare_one(a, bindings, sol, related, label), corpus))
    return [compare_one(a, bindings, sol, related, label) for a in corpus]


def scalar_diagnostic(bindings: Mapping[str, object], sol: ESolution) -> dict:
    """Can P = c_n Delta_S hold for scalars c_n?

    The 2-strand identity fixes c_2 = D_H/D_Y; sigma_1^-1 then requires the
    ratio identity, which is the equation (u zeta + z^2 - u E z + E z) q =
    u zeta (zeta + 1). That equation gives D_H^2 = D_Y^2, and with the
    matching branch c_n = 1.
    """
    b = resolve_bindings(bindings, e_value(sol))
    s1inv = BraidWord(2, (-1,))
    ratio = ratio_check(s1inv, b, sol)
    dsq = branch_relation(b)
    one = dh_dy_condition(b)
    return {
        "dh_dy_condition": one,
        "ratio_sigma1_inverse": ratio,
        "D_H_squared_equals_D_Y_squared": dsq,
        "scalar_family_possible": ratio and dsq,
        "forced_c_n": "1" if (ratio and dsq) else None,
    }


def report_json(rows) -> str:
    return json.dumps(rows, indent=2, sort_keys=False)


def generic_bindings(seed: int = 7) -> dict:
    """Distinct random rationals for q, zeta, u, z (an inequality pre-filter)."""
    import random

    rng = random.Random(seed)
    vals: list = []
    while len(vals) < 4:
        v = mpq(rng.randint(-40, 40), rng.randint(1, 17))
        if v not in vals and v not in (0, 1, -1):
            vals.append(v)
    return dict(zip(("q", "zeta", "u", "z"), (LaurentPoly.const(v) for v in vals)))
