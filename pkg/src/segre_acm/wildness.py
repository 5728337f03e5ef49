"""Numerical checkers for non-Ulrich CM-wildness certificates.

The criterion takes a pair of sheaves A, B through their numerical data:
reduced Hilbert polynomials, dim Ext^1(B, A), Ulrich initializations and,
on curves, where H^0(A(t)) and H^1(B(t)) vanish.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .chow import Polynomial, compare_reduced
from .scroll import (
    ScrollDescriptor,
    ScrollDivisor,
    dimext_bound,
    scroll_coh,
    scroll_ell,
    scroll_hilbert_poly,
    wildness_k,
)
from .mutation import a_seq


class Verdict(str, Enum):
    CM_WILD = "CMWild"
    NON_ULRICH_CM_WILD = "NonUlrichCMWild"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TwistVanishing:
    """Where some h^i(G(t)) vanishes: the listed twists inside [lo, hi], plus
    all t < lo when ``below`` and all t > hi when ``above``."""

    lo: int
    hi: int
    vanishing: frozenset = frozenset()
    below: bool = False
    above: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty proof window [{self.lo}, {self.hi}]")
        van = frozenset(int(t) for t in self.vanishing)
        if any(not self.lo <= t <= self.hi for t in van):
            raise ValueError("vanishing twists must lie inside the proof window")
        object.__setattr__(self, "vanishing", van)

    def contains(self, t: int) -> bool:
        if t < self.lo:
            return self.below
        if t > self.hi:
            return self.above
        return t in self.vanishing


def windows_disjoint(x: TwistVanishing, y: TwistVanishing) -> bool:
    """No t lies in both vanishing sets."""
    if x.below and y.below:
        return False
    if x.above and y.above:
        return False
    lo = min(x.lo, y.lo) - 1
    hi = max(x.hi, y.hi) + 1
    # outside [lo, hi] at most one side vanishes, so a finite scan suffices
    return not any(x.contains(t) and y.contains(t) for t in range(lo, hi + 1))


@dataclass(frozen=True)
class WildnessInput:
    n: int
    rpA: Polynomial
    rpB: Polynomial
    ext1_dim: int
    ulrichA: Optional[int] = None
    ulrichB: Optional[int] = None
    h0A_window: Optional[TwistVanishing] = None
    h1B_window: Optional[TwistVanishing] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if self.ext1_dim < 0:
            raise ValueError("ext1_dim must be non-negative")


def cm_wild_criterion(w: WildnessInput) -> Verdict:
    if not (compare_reduced(w.rpB, w.rpA) < 0 and w.ext1_dim >= 3):
        return Verdict.INCONCLUSIVE
    if w.n >= 2:
        same_init = w.ulrichA is not None and w.ulrichA == w.ulrichB
        return Verdict.CM_WILD if same_init else Verdict.NON_ULRICH_CM_WILD
    if w.h0A_window is None or w.h1B_window is None:
        return Verdict.CM_WILD
    if windows_disjoint(w.h0A_window, w.h1B_window):
        return Verdict.NON_ULRICH_CM_WILD
    return Verdict.CM_WILD


# ---------------------------------------------------------------------------
# del Pezzo surfaces


class DelPezzoCase(str, Enum):
    BLOW_UP = "BlowUp"
    QUADRIC = "Quadric"


@dataclass(frozen=True)
class DelPezzoDatum:
    case: DelPezzoCase
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "case", DelPezzoCase(self.case))
        min_a = 2 if self.case is DelPezzoCase.BLOW_UP else 1
        if self.a < min_a:
            raise ValueError(f"{self.case.value} needs a >= {min_a}, got {self.a}")
        if self.b < self.b_a:
            raise ValueError(f"need b >= b_a = {self.b_a}, got {self.b}")
        if dp_form(self.case, self.a, self.b) <= 0:
            raise ValueError(f"D({self.a},{self.b}) must be positive")

    @property
    def b_a(self) -> int:
        return (2 if self.case is DelPezzoCase.BLOW_UP else 3) * self.a


def dp_form(case, a: int, b: int) -> int:
    """D(a, b) without validation; symmetric in a and b."""
    m = 3 if DelPezzoCase(case) is DelPezzoCase.BLOW_UP else 4
    return m * a * b - a * a - b * b + 1


def dp_family_dim(d: DelPezzoDatum) -> int:
    return dp_form(d.case, d.a, d.b)


def dp_kernel_chi(d: DelPezzoDatum) -> int:
    # chi(E) = b chi(O(L)) - a chi(O(M))
    if d.case is DelPezzoCase.BLOW_UP:
        return 3 * (d.b - 2 * d.a)
    return 2 * (d.b - 3 * d.a)


def dp_nonulrich_check(d: DelPezzoDatum, deg: int) -> bool:
    chi = dp_kernel_chi(d)
    return d.b > d.b_a and 0 < chi < deg * (d.b - d.a)


# ---------------------------------------------------------------------------
# Ext table for the pair of sheaves on a quasi-minimal variety


@dataclass(frozen=True)
class ExtTable:
    hom: tuple
    ext1: tuple
    ext_higher: Optional[int]

    def chi(self, i: int, j: int) -> Optional[int]:
        if self.ext_higher is None:
            return None
        return self.hom[i][j] - self.ext1[i][j]

    def to_json(self) -> dict:
        return {
            "hom": [list(r) for r in self.hom],
            "ext1": [list(r) for r in self.ext1],
            "ext_higher": self.ext_higher,
        }


def quasi_minimal_ext_table(N: int, cone: bool = False) -> ExtTable:
    if N < 3:
        raise ValueError(f"need N >= 3, got {N}")
    hom = ((1, 0), (0, 1))
    if cone:
        return ExtTable(hom, ((N + 1, N), (N, N + 1)), None)
    return ExtTable(hom, ((5, 4), (4, 5)), 0)


# ---------------------------------------------------------------------------
# scrolls: A = O, B = U_k


def scroll_ulrich_init(S: ScrollDescriptor, D: ScrollDivisor) -> Optional[int]:
    """Initializing twist of a line bundle on S, searched over a window that
    contains every candidate (a run of n vanishing H-degrees must touch 0 or -n)."""
    n = S.n
    for t in range(-2 * n - 1, n + 2):
        if all(not any(scroll_coh(S, D.twist(t - j))) for j in range(1, n + 1)):
            return t
    return None


def scroll_wildness_input(n: int, d: int, S: Optional[ScrollDescriptor] = None) -> WildnessInput:
    """Certificate data for the pair (O, U_k) on a scroll of dimension n and degree d."""
    k = wildness_k(n, d)
    S = S or ScrollDescriptor.balanced(n, d)
    if (S.n, S.d) != (n, d):
        raise ValueError(f"{S} does not have n={n}, d={d}")
    sub = ScrollDivisor(0, -1)
    quot = ScrollDivisor(-1, d - 1)
    ell = scroll_ell(n, d)
    a, b = a_seq(ell, k), a_seq(ell, k + 1)
    rank = a + b
    P = Polynomial()
    if a:
        P = P + scroll_hilbert_poly(S, sub) * a
    P = P + scroll_hilbert_poly(S, quot) * b
    inits = {scroll_ulrich_init(S, D) for D, m in ((sub, a), (quot, b)) if m}
    init_b = inits.pop() if len(inits) == 1 else None
    return WildnessInput(
        n=n,
        rpA=scroll_hilbert_poly(S, ScrollDivisor(0, 0)),
        rpB=P / rank,
        ext1_dim=dimext_bound(n, d, k),
        ulrichA=scroll_ulrich_init(S, ScrollDivisor(0, 0)),
        ulrichB=init_b,
    )
