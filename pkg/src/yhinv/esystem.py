"""Solutions of the E-system in Q(zeta_d), one for each non-empty S in Z/dZ.

The equations are sum_s x_{m+s} x_{d-s} = x_m sum_s x_s x_{d-s} for
m = 1, ..., d-1, with x_0 = 1 and indices mod d.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from gmpy2 import mpq

from .scalars import Cyclotomic


class ESystemError(ValueError):
    pass


def _norm(c):
    if isinstance(c, Cyclotomic) and c.is_rational():
        return c.coeffs[0]
    return c


@dataclass(frozen=True)
class ESolution:
    d: int
    S: tuple[int, ...]
    x: tuple

    @property
    def size(self) -> int:
        return len(self.S)

    def character(self):
        from .yokonuma import FramingCharacter

        return FramingCharacter.specialized(self.d, self.x)

    def render(self) -> dict:
        return {
            "d": self.d,
            "S": list(self.S),
            "x": [str(v) for v in self.x[1:]],
            "E": str(e_value(self)),
        }


def parse_subset(text: str, d: int) -> tuple[int, ...]:
    """Comma-separated residues, reduced mod d; duplicates are rejected."""
    if d < 1:
        raise ESystemError(f"d must be positive, got {d}")
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ESystemError(f"empty residue in subset {text!r}")
        try:
            r = int(tok, 10) % d
        except ValueError:
            raise ESystemError(f"malformed residue {tok!r} in subset {text!r}") from None
        if r in out:
            raise ESystemError(f"duplicate residue {r} (mod {d}) in subset {text!r}")
        out.append(r)
    return tuple(sorted(out))


def solve(d: int, S: Iterable[int]) -> ESolution:
    """x_m = (1/|S|) sum_{k in S} zeta_d^(k m), checked against the equations."""
    if d < 1:
        raise ESystemError(f"d must be positive, got {d}")
    S = tuple(sorted({int(k) % d for k in S}))
    if not S:
        raise ESystemError("S must be non-empty")
    inv = mpq(1, len(S))
    x = []
    for m in range(d):
        acc = Cyclotomic(d, (0,))
        for k in S:
            acc = acc + Cyclotomic.zeta(d, k * m)
        x.append(_norm(acc * inv))
    sol = ESolution(d, S, tuple(x))
    if not verify(sol.x, d):
        raise ESystemError(f"candidate for d={d}, S={S} fails the E-system")  # pragma: no cover
    return sol


def _e_sum(x: Sequence, d: int, m: int = 0):
    acc = mpq(0)
    for s in range(d):
        acc = acc + x[(m + s) % d] * x[(d - s) % d]
    return acc


def verify(x: Sequence, d: int) -> bool:
    """True iff x (with x[0] = 1) satisfies every equation of the E-system."""
    if len(x) != d or x[0] != 1:
        return False
    E = _e_sum(x, d)
    return all(_e_sum(x, d, m) == x[m] * E for m in range(1, d))


def e_value(sol: ESolution) -> mpq:
    """E = 1/|S|, cross-checked against (1/d) sum_s x_s x_{d-s}."""
    E = mpq(1, len(sol.S))
    direct = _norm(_e_sum(sol.x, sol.d) * mpq(1, sol.d))
    if direct != E:
        raise ESystemError(f"E mismatch for d={sol.d}, S={sol.S}: {direct} != {E}")  # pragma: no cover
    return E


def all_subsets(d: int) -> list[tuple[int, ...]]:
    return [S for r in range(1, d + 1) for S in combinations(range(d), r)]


def all_solutions(d: int) -> list[ESolution]:
    return [solve(d, S) for S in all_subsets(d)]
