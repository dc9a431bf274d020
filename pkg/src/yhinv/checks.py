"""Acceptance checks shared by the test suite and ``yhinv selftest``.

Each check returns a CheckResult and never raises on a mathematical failure;
the first counterexample found is reported in ``detail``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import braid as bw
from . import symgroup
from .braid import BraidWord, builtin_corpus
from .esystem import all_solutions, all_subsets, e_value, solve, verify
from .hecke import HElement, h_from_braid, h_mul, h_mul_gen, h_power, ocneanu_trace
from .invariants import case_spec, compare, delta_s, generic_bindings, homflypt, scalar_diagnostic
from .scalars import LaurentPoly, sym
from .yokonuma import (
    FramingCharacter,
    YElement,
    e_expand,
    inductive_basis,
    juyumaya_trace,
    phi_map,
    y_from_braid,
    y_mul,
    y_mul_framing,
    y_mul_gen,
)

u, z, q, zeta = sym("u"), sym("z"), sym("q"), sym("zeta")

MARKOV_SEED = 424242


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] criterion {self.number}: {self.name} [{self.seconds:.1f}s]{extra}"


class _Fail(Exception):
    pass


def _expect(cond: bool, what: str):
    if not cond:
        raise _Fail(what)


def _run(number: int, name: str, body: Callable[[], str]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        detail = body() or ""
        ok = True
    except _Fail as exc:
        detail, ok = str(exc), False
    return CheckResult(number, name, ok, detail, time.perf_counter() - t0)


# -- 1: relation suites ---------------------------------------------------------

def hecke_relations(n: int) -> None:
    unit = HElement.unit(n)
    G = {i: HElement.gen(i, n) for i in range(1, n)}
    Ginv = {i: HElement.gen(i, n, -1) for i in range(1, n)}
    for i in range(1, n):
        _expect(h_mul(G[i], G[i]) == G[i].scale(q - 1) + unit.scale(q), f"H_{n}: quadratic relation at i={i}")
        _expect(h_mul(G[i], Ginv[i]) == unit and h_mul(Ginv[i], G[i]) == unit, f"H_{n}: inverse at i={i}")
        _expect(Ginv[i] == G[i].scale(q ** -1) + unit.scale(q ** -1 - 1), f"H_{n}: inverse formula at i={i}")
        for j in range(1, n):
            if abs(i - j) > 1:
                _expect(h_mul(G[i], G[j]) == h_mul(G[j], G[i]), f"H_{n}: G_{i}G_{j} commute")
            if j == i + 1:
                _expect(
                    h_mul(h_mul(G[i], G[j]), G[i]) == h_mul(h_mul(G[j], G[i]), G[j]),
                    f"H_{n}: braid relation at i={i}",
                )


def yokonuma_relations(n: int, d: int) -> None:
    unit = YElement.unit(n, d)
    g = {i: YElement.gen(i, n, d) for i in range(1, n)}
    ginv = {i: YElement.gen(i, n, d, -1) for i in range(1, n)}
    t = {j: YElement.framing(j, 1, n, d) for j in range(1, n + 1)}
    e = {i: e_expand(i, i + 1, n, d) for i in range(1, n)}
    tag = f"Y_{{{d},{n}}}"

    def E(a, b):
        return e_expand(a, b, n, d)

    for i in range(1, n):
        _expect(y_mul(g[i], g[i]) == unit + e[i].scale(u - 1) + y_mul(e[i], g[i]).scale(u - 1), f"{tag}: quadratic at i={i}")
        _expect(y_mul(g[i], ginv[i]) == unit and y_mul(ginv[i], g[i]) == unit, f"{tag}: inverse at i={i}")
        _expect(
            ginv[i] == g[i] + e[i].scale(u ** -1 - 1) + y_mul(e[i], g[i]).scale(u ** -1 - 1),
            f"{tag}: inverse formula at i={i}",
        )
        _expect(y_mul(e[i], e[i]) == e[i], f"{tag}: e_{i} idempotent")
        for j in range(1, n):
            if abs(i - j) > 1:
                _expect(y_mul(g[i], g[j]) == y_mul(g[j], g[i]), f"{tag}: g_{i}g_{j} commute")
            if j == i + 1:
                _expect(y_mul(y_mul(g[i], g[j]), g[i]) == y_mul(y_mul(g[j], g[i]), g[j]), f"{tag}: braid relation at i={i}")
            _expect(y_mul(e[j], e[i]) == y_mul(e[i], e[j]), f"{tag}: e_{j}e_{i} commute")
            for gg in (g, ginv):
                if j not in (i - 1, i + 1):
                    _expect(y_mul(gg[j], e[i]) == y_mul(e[i], gg[j]), f"{tag}: g_{j} e_{i} commute")
                if j == i - 1:
                    _expect(y_mul(gg[j], e[i]) == y_mul(E(i - 1, i + 1), gg[j]), f"{tag}: g_{{i-1}} e_i rule, i={i}")
                    _expect(y_mul(e[i], gg[j]) == y_mul(gg[j], E(i - 1, i + 1)), f"{tag}: e_i g_{{i-1}} rule, i={i}")
                if j == i + 1:
                    _expect(y_mul(gg[j], e[i]) == y_mul(E(i, i + 2), gg[j]), f"{tag}: g_{{i+1}} e_i rule, i={i}")
                    _expect(y_mul(e[i], gg[j]) == y_mul(gg[j], E(i, i + 2)), f"{tag}: e_i g_{{i+1}} rule, i={i}")
                if abs(i - j) == 1:
                    _expect(
                        y_mul(y_mul(e[j], gg[i]), gg[j]) == y_mul(y_mul(gg[i], gg[j]), e[i]),
                        f"{tag}: e_j g_i g_j = g_i g_j e_i, i={i}, j={j}",
                    )
        for j in range(1, n + 1):
            _expect(y_mul(t[j], e[i]) == y_mul(e[i], t[j]), f"{tag}: t_{j} e_{i} commute")
            sj = i + 1 if j == i else i if j == i + 1 else j
            _expect(y_mul(t[j], g[i]) == y_mul(g[i], t[sj]), f"{tag}: t_{j} g_{i} = g_{i} t_{sj}")
    for j in range(1, n + 1):
        _expect(y_mul_framing(unit, j, d) == unit, f"{tag}: t_{j}^d = 1")
        for k in range(1, n + 1):
            _expect(y_mul(t[j], t[k]) == y_mul(t[k], t[j]), f"{tag}: t_{j} t_{k} commute")
            ejk = E(j, k)
            _expect(ejk == E(k, j) and y_mul(ejk, ejk) == ejk, f"{tag}: e_{{{j},{k}}} symmetric idempotent")
            _expect(y_mul(t[j], ejk) == y_mul(t[k], ejk), f"{tag}: t_{j} e_{{{j},{k}}} = t_{k} e_{{{j},{k}}}")


def check_relations() -> CheckResult:
    def body():
        for n in range(1, 5):
            hecke_relations(n)
            for d in range(1, 4):
                yokonuma_relations(n, d)
        return "H_n and Y_{d,n} for n <= 4, d <= 3"

    return _run(1, "defining relations of H_n(q) and Y_{d,n}(u)", body)


# -- 2: closed-form traces -------------------------------------------------------

def e_symbolic(d: int) -> LaurentPoly:
    return FramingCharacter.symbolic(d).e_value()


def power_trace_closed_form(m: int, E) -> LaurentPoly:
    if m % 2 == 0:
        a = (u ** m - 1).exact_div(u + 1)
        return a * z + a * E + 1
    a = (u ** m + 1).exact_div(u + 1)
    return a * z + a * E - E


def hecke_power_trace_closed_form(m: int) -> LaurentPoly:
    if m % 2 == 0:
        a = (q ** m - 1).exact_div(q + 1)
        return a * zeta + a + 1
    a = (q ** m + 1).exact_div(q + 1)
    return a * zeta + a - 1


def check_power_traces() -> CheckResult:
    def body():
        for m in range(0, 9):
            for n in (2, 3):
                for i in range(1, n):
                    word = BraidWord(n, (i,) * m)
                    _expect(
                        ocneanu_trace(h_from_braid(word)) == hecke_power_trace_closed_form(m),
                        f"tau(G_{i}^{m}) in H_{n}",
                    )
                    _expect(ocneanu_trace(h_power(i, m, n)) == hecke_power_trace_closed_form(m), f"tau(h_power) m={m}")
                    for d in range(1, 4):
                        want = power_trace_closed_form(m, e_symbolic(d))
                        _expect(juyumaya_trace(y_from_braid(word, d)) == want, f"tr(g_{i}^{m}) in Y_{{{d},{n}}}")
        return "m <= 8, symbolic u, z, q, zeta, x_1..x_{d-1}"

    return _run(2, "closed-form traces of generator powers", body)


# -- 3: the showcase braid ----------------------------------------------------------

SHOWCASE = BraidWord(3, (1, 2, 2, 1, 2, 2))


def showcase_tau() -> LaurentPoly:
    return (q**2 * zeta - 2 * q * zeta + zeta) * (q**2 * zeta - q * zeta + zeta + q**2 - q) + (
        2 * q**2 * zeta - 2 * q * zeta + q**2
    ) * (q * zeta - zeta + q)


def showcase_tr(E) -> LaurentPoly:
    b = 1 + (u - 1) * E + (u - 1) * z
    return b * (2 * b - 1) + (u - 1) ** 2 * (E + u * z + z) * (u * E + u * z - z) + u * (u - 1) ** 2 * z**2


def check_showcase() -> CheckResult:
    def body():
        _expect(ocneanu_trace(h_from_braid(SHOWCASE)) == showcase_tau(), "tau(G1 G2^2 G1 G2^2)")
        count = 0
        for d in range(1, 5):
            for sol in all_solutions(d):
                got = juyumaya_trace(y_from_braid(SHOWCASE, d), sol.character())
                _expect(got == showcase_tr(LaurentPoly.const(e_value(sol))), f"tr_S for d={d}, S={list(sol.S)}")
                count += 1
        return f"{count} solutions, d <= 4"

    return _run(3, "trace values of s1 s2^2 s1 s2^2", body)


# -- 4: E-system -------------------------------------------------------------------

def check_esystem() -> CheckResult:
    def body():
        count = 0
        for d in range(1, 9):
            for S in all_subsets(d):
                sol = solve(d, S)
                _expect(verify(sol.x, d), f"verify d={d}, S={list(S)}")
                _expect(e_value(sol) == LaurentPoly.const(1).constant_value() / len(S), f"E for d={d}, S={list(S)}")
                count += 1
        return f"{count} solutions, d <= 8"

    return _run(4, "E-system solutions and E = 1/|S|", body)


# -- 5: phi ------------------------------------------------------------------------

def check_phi() -> CheckResult:
    def body():
        count = 0
        D3 = set(symgroup.enumerate_D(3))
        for d in range(1, 4):
            basis = inductive_basis(3, d)
            for sol in all_solutions(d):
                char = sol.character()
                theta = char.theta()
                for y in basis:
                    image = phi_map(y, char)
                    _expect(all(not any(k) and w in D3 for k, w in image.terms), "phi image leaves span of g_w, w in D")
                    lhs = juyumaya_trace(image)
                    rhs = juyumaya_trace(y).substitute(theta)
                    _expect(lhs == rhs, f"tr(phi(y)) != theta(tr(y)) for d={d}, S={list(sol.S)}, y={y}")
                    count += 1
        return f"{count} basis elements x solutions"

    return _run(5, "tr o phi = theta o tr on the inductive basis of Y_{d,3}", body)


# -- 6: E = 1 -----------------------------------------------------------------------

def check_e_one() -> CheckResult:
    def body():
        count = 0
        for d in range(1, 5):
            for n in range(1, 4):
                basis = inductive_basis(n + 1, d)
                es = [e_expand(j, j + 1, n + 1, d) for j in range(1, n + 1)]
                for k in range(d):
                    char = solve(d, [k]).character()
                    for beta in basis:
                        base = juyumaya_trace(beta, char)
                        for j, e in enumerate(es, start=1):
                            _expect(
                                juyumaya_trace(y_mul(beta, e), char) == base,
                                f"tr_S(beta e_{j}) != tr_S(beta), d={d}, S={{{k}}}, beta={beta}",
                            )
                            count += 1
        return f"{count} identities"

    return _run(6, "tr_S(beta e_j) = tr_S(beta) for singleton S", body)


# -- 7: traces on D ------------------------------------------------------------------

def check_d_traces() -> CheckResult:
    def body():
        count = 0
        for n in range(1, 6):
            for d in range(1, 4):
                for w in symgroup.enumerate_D(n):
                    mu = symgroup.cycle_type(w)
                    want = z ** symgroup.length(symgroup.w_mu(mu))
                    got = juyumaya_trace(YElement.basis((0,) * n, w, d))
                    _expect(got == want, f"tr(g_w) for w={w}, d={d}")
                    count += 1
        return f"{count} elements, n <= 5, d <= 3"

    return _run(7, "tr(g_w) = z^l(w_mu) for w in D", body)


# -- 8: Markov invariance ------------------------------------------------------------

def markov_variants(a: BraidWord, rng: random.Random, conjugations: int = 3) -> list[tuple[str, BraidWord]]:
    out = []
    for _ in range(conjugations):
        if a.n > 1:
            b = bw.random_word(rng, a.n, rng.randint(1, 3))
        else:
            b = BraidWord(1, ())
        out.append((f"conjugate by [{b}]", bw.markov_conjugate(a, b)))
    out.append(("stabilize +", bw.markov_stabilize(a, 1)))
    out.append(("stabilize -", bw.markov_stabilize(a, -1)))
    return out


def markov_report(corpus, sols, seed: int = MARKOV_SEED) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for a in corpus:
        variants = markov_variants(a, rng)
        p = homflypt(a)
        base = {sol.S: delta_s(a, sol) for sol in sols}
        for move, v in variants:
            rows.append(
                {
                    "braid": a.text(),
                    "move": move,
                    "P": homflypt(v) == p,
                    "Delta": all(delta_s(v, sol) == base[sol.S] for sol in sols),
                }
            )
    return rows


def check_markov(corpus=None) -> CheckResult:
    corpus = builtin_corpus() if corpus is None else corpus

    def body():
        _expect(len(corpus) >= 50, "corpus has fewer than 50 braids")
        checked = 0
        for d in range(1, 4):
            rows = markov_report(corpus, all_solutions(d))
            for r in rows:
                _expect(r["P"], f"P changed: {r['braid']} under {r['move']}")
                _expect(r["Delta"], f"Delta_S changed for d={d}: {r['braid']} under {r['move']}")
            checked += len(rows)
        return f"{len(corpus)} braids, {checked} moves over d <= 3"

    return _run(8, "Markov invariance of P and Delta_S", body)


# -- 9: the comparison theorem ---------------------------------------------------------

def check_main_theorem(corpus=None) -> CheckResult:
    corpus = builtin_corpus() if corpus is None else corpus

    def body():
        runs = 0
        for case in range(1, 15):
            spec = case_spec(case)
            for d in range(1, 4):
                for sol in all_solutions(d):
                    if spec.singleton and sol.size != 1:
                        continue
                    for row in compare(corpus, case, sol):
                        _expect(row["equal"], f"case {case}, d={d}, S={list(sol.S)}: P != Delta on [{row['braid']}]")
                    runs += 1
        # generic rational parameters, |S| >= 2
        generic = generic_bindings()
        for d, S in ((2, (0, 1)), (3, (0, 2)), (3, (0, 1, 2))):
            rows = compare(corpus, generic, solve(d, S))
            _expect(any(not r["equal"] for r in rows), f"no inequality witness for generic bindings, d={d}, S={list(S)}")
        # rows 15-16 with E != 1 and u free
        for case in (15, 16):
            for d, S in ((2, (0, 1)), (3, (0, 1)), (3, (0, 1, 2))):
                row = compare([SHOWCASE], case, solve(d, S))[0]
                _expect(not row["equal"], f"case {case} not dismissed by s1 s2^2 s1 s2^2 for S={list(S)}")
        return f"{runs} (case, S) runs equal; witnesses found for generic and cases 15-16"

    return _run(9, "P = Delta_S exactly on cases 1-14, witnesses otherwise", body)


# -- 10: scalar multiples ---------------------------------------------------------------

def check_not_scalar() -> CheckResult:
    def body():
        for d, S in ((2, (0, 1)), (3, (0, 2)), (3, (1,))):
            diag = scalar_diagnostic(generic_bindings(), solve(d, S))
            _expect(not diag["dh_dy_condition"], f"generic bindings satisfy (u zeta + ...) q = u zeta (zeta + 1), S={list(S)}")
            _expect(not diag["ratio_sigma1_inverse"], "sigma_1^-1 ratio holds generically")
            _expect(not diag["scalar_family_possible"], "generic scalar family reported possible")
        for case in range(1, 15):
            spec = case_spec(case)
            for d in range(1, 4):
                for sol in all_solutions(d):
                    if spec.singleton and sol.size != 1:
                        continue
                    diag = scalar_diagnostic(spec.bindings, sol)
                    _expect(diag["forced_c_n"] == "1", f"case {case}, S={list(sol.S)}: c_n not forced to 1")
                    _expect(diag["dh_dy_condition"] == diag["ratio_sigma1_inverse"], "diagnostic inconsistent")
        return "generic: no scalar family; cases 1-14: c_n = 1"

    return _run(10, "scalar-multiple diagnostic forces c_n = 1", body)


# -- 11: degeneration ---------------------------------------------------------------------

def check_degeneration(corpus=None) -> CheckResult:
    corpus = builtin_corpus() if corpus is None else corpus

    def body():
        sol = solve(1, [0])
        rename = {"u": q, "z": zeta}
        for a in corpus:
            p = homflypt(a)
            dl = delta_s(a, sol)
            _expect(
                dl.value.substitute(rename) == p.value,
                f"d=1: Delta != P under u->q, z->zeta on [{a}]",
            )
            _expect(
                juyumaya_trace(y_from_braid(a, 1)).substitute(rename) == ocneanu_trace(h_from_braid(a)),
                f"d=1 trace mismatch on [{a}]",
            )
        for d in range(1, 4):
            for k in range(d):
                for case in (13, 14):
                    for row in compare(corpus, case, solve(d, [k])):
                        _expect(row["equal"], f"case {case}, d={d}, S={{{k}}} fails on [{row['braid']}]")
        return f"{len(corpus)} braids"

    return _run(11, "d = 1 coincidence and q = 1/u, zeta = -z/u", body)


# -- 12: positive rewriting ---------------------------------------------------------------

def check_rewriter() -> CheckResult:
    def body():
        count = 0
        for n in range(1, 4):
            for a in bw.positive_words(n, 6):
                res = bw.psalidi_rewrite(a)
                word = res.word(n)
                target = (n,) + a.letters + (n,)
                _expect(all(x > 0 for x in word), f"non-positive output for [{a}]")
                _expect(len(word) == len(target), f"epsilon changed for [{a}]")
                if isinstance(res, bw.CaseOne):
                    _expect(all(abs(x) < n for x in res.alpha1 + res.alpha2), f"case (i) factors leave B_{n} for [{a}]")
                _expect(
                    y_from_braid(BraidWord(n + 1, word), 2) == y_from_braid(BraidWord(n + 1, target), 2),
                    f"Y_{{2,{n + 1}}} images differ for [{a}]",
                )
                count += 1
        return f"{count} positive words"

    return _run(12, "positive rewriting of s_n a s_n", body)


ALL_CHECKS = (
    check_relations,
    check_power_traces,
    check_showcase,
    check_esystem,
    check_phi,
    check_e_one,
    check_d_traces,
    check_markov,
    check_main_theorem,
    check_not_scalar,
    check_degeneration,
    check_rewriter,
)


def run_all(printer=print) -> list[CheckResult]:
    results = []
    for check in ALL_CHECKS:
        r = check()
        printer(r.line())
        results.append(r)
    return results
