"""Fibonacci-type sequences and the rigid Ulrich classes U_k.

U_k is an extension of O(F-L)^{c_k} by O(-F)^{c_{k-1}}.  Only the numerical
shadow is modelled: classes in the Chow ring and the mutation formulas on them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chow import ChernCharacter, DivisorClass, ch_line, euler_pairing

X_CLASS = ch_line(DivisorClass(-1, 0))   # O(-F)
Y_CLASS = ch_line(DivisorClass(1, -1))   # O(F-L)
MINUS_L = ch_line(DivisorClass(0, -1))   # omega_X(2)


@lru_cache(maxsize=None)
def a_seq(ell: int, k: int) -> int:
    """a_{l,0} = 0, a_{l,1} = 1, a_{l,k+2} = l a_{l,k+1} - a_{l,k}."""
    if ell < 2:
        raise ValueError(f"sequence needs l >= 2, got {ell}")
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    prev, cur = 0, 1
    if k == 0:
        return 0
    for _ in range(k - 1):
        prev, cur = cur, ell * cur - prev
    return cur


def c_seq(k: int) -> int:
    """c_k with c_{k+2} = 3c_{k+1} - c_k, extended by c_{-k} = c_k."""
    return a_seq(3, abs(k))


@dataclass(frozen=True)
class UlrichDatum:
    k: int
    a: int
    b: int

    @property
    def rank(self) -> int:
        return self.a + self.b

    @property
    def cls(self) -> ChernCharacter:
        return X_CLASS.scale(self.a) + Y_CLASS.scale(self.b)

    def chi_self(self) -> int:
        return int(euler_pairing(self.cls, self.cls))

    def expr(self) -> str:
        """A parseable expression for the extension with these multiplicities."""
        def part(m, atom):
            return "" if m == 0 else (atom if m == 1 else f"{m}*{atom}")
        return f"ext({part(self.a, 'O(-F)')}; {part(self.b, 'O(F-L)')})"


def ulrich_class(k: int) -> UlrichDatum:
    return UlrichDatum(k, c_seq(k - 1), c_seq(k))


def _normalize(u: ChernCharacter) -> ChernCharacter:
    # the homological shift only flips the sign of the class
    return -u if u.rank < 0 else u


def left_mutation_class(e: ChernCharacter, f: ChernCharacter) -> ChernCharacter:
    """[L_e f] = chi(e, f) e - f, up to sign."""
    return _normalize(e.scale(euler_pairing(e, f)) - f)


def right_mutation_class(e: ChernCharacter, f: ChernCharacter) -> ChernCharacter:
    """[R_e f] = chi(f, e) e - f, up to sign."""
    return _normalize(e.scale(euler_pairing(f, e)) - f)


def multiplicities(u: ChernCharacter) -> tuple[int, int]:
    """(a, b) with u = a [O(-F)] + b [O(F-L)]; ValueError if u is not of that form."""
    b = -u.c_l
    a = u.r - b
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"class {u} is not an integral combination")
    a, b = int(a), int(b)
    if X_CLASS.scale(a) + Y_CLASS.scale(b) != u:
        raise ValueError(f"class {u} is not in the span of O(-F), O(F-L)")
    return a, b


def index_of(a: int, b: int, bound: int = 64) -> int:
    """The k with (c_{k-1}, c_k) = (a, b)."""
    for m in range(bound + 1):
        for k in (m, 1 - m) if m else (0,):
            if (c_seq(k - 1), c_seq(k)) == (a, b):
                return k
    raise ValueError(f"({a}, {b}) is not an Ulrich multiplicity pair")


def ladder(k_min: int, k_max: int) -> dict[int, ChernCharacter]:
    """Classes of U_k for k_min <= k <= k_max generated from U_0, U_1 alone."""
    out = {0: X_CLASS, 1: Y_CLASS}
    for k in range(2, k_max + 1):
        out[k] = left_mutation_class(out[k - 1], out[k - 2])
    for k in range(-1, k_min - 1, -1):
        out[k] = right_mutation_class(out[k + 1], out[k + 2])
    return {k: v for k, v in sorted(out.items()) if k_min <= k <= k_max}


def serre_involution(u: UlrichDatum) -> UlrichDatum:
    """u -> u^dual (x) O(-L), which sends U_k to U_{1-k}."""
    image = u.cls.dual() * MINUS_L
    a, b = multiplicities(image)
    partner = ulrich_class(1 - u.k)
    if (partner.a, partner.b) != (a, b):
        raise ArithmeticError(f"Serre image of U_{u.k} is ({a}, {b}), not U_{1 - u.k}")
    return partner


def is_numerically_rigid(u: UlrichDatum) -> bool:
    return euler_pairing(u.cls, u.cls) == 1
