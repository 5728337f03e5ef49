"""Cohomology of split building blocks on X = P^1 x P^2.

Every block is an exterior product of a line bundle on P^1 with O(b), Omega(b)
or Omega (x) Omega(b) on P^2, so Kunneth gives its cohomology from the two
factors.  Extensions 0 -> sub -> E -> quot -> 0 are handled through the long
exact sequence: values are exact when every connecting map has zero source or
target, otherwise each degree carries an interval [lo, hi].
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import ClassVar, Iterable, Iterator, Optional, Sequence, Union

from . import bott
from .chow import ChernCharacter, DivisorClass, ch_line, ch_omega_pi


class UndeterminedError(ValueError):
    """The long exact sequence bounds do not decide the question asked."""


# ---------------------------------------------------------------------------
# factor cohomology


def coh_p1(a: int) -> tuple[int, int]:
    return max(a + 1, 0), max(-a - 1, 0)


def coh_p2_line(b: int) -> tuple[int, int, int]:
    h0 = comb(b + 2, 2) if b >= 0 else 0
    h2 = comb(-b - 1, 2) if b <= -3 else 0
    return h0, 0, h2


def coh_p2_omega(b: int) -> tuple[int, int, int]:
    h0 = b * b - 1 if b >= 2 else 0
    h1 = 1 if b == 0 else 0
    h2 = b * b - 1 if b <= -2 else 0
    return h0, h1, h2


def _les_bounds(left: Sequence[int], right: Sequence[int], forward: bool):
    """Bounds for the cokernel/kernel pieces of a three-term resolution.

    With 0 -> K -> P -> M -> 0 (forward=True, left=K, right=P) the middle
    term M has h^q = coker(H^q K -> H^q P) + ker(H^{q+1} K -> H^{q+1} P).
    With 0 -> M -> P -> C -> 0 (forward=False, left=P, right=C) one gets
    h^q = coker(H^{q-1} P -> H^{q-1} C) + ker(H^q P -> H^q C).
    """
    n = len(left)
    get = lambda v, q: v[q] if 0 <= q < n else 0
    lo, hi = [], []
    for q in range(n):
        if forward:
            k0, p0, k1, p1 = get(left, q), get(right, q), get(left, q + 1), get(right, q + 1)
            lo.append(max(0, p0 - k0) + max(0, k1 - p1))
            hi.append(p0 + k1)
        else:
            p0, c0, p1, c1 = get(left, q - 1), get(right, q - 1), get(left, q), get(right, q)
            lo.append(max(0, c0 - p0) + max(0, p1 - c1))
            hi.append(c0 + p1)
    return lo, hi


def p2_omega_omega_bounds(c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Interval bounds for h^q(P^2, Omega (x) Omega(c)) from two Euler sequences."""
    om = coh_p2_omega
    # 0 -> Omega(c-3) -> Omega(c-2)^3 -> Omega(x)Omega(c) -> 0
    lo1, hi1 = _les_bounds(om(c - 3), [3 * x for x in om(c - 2)], forward=True)
    # 0 -> Omega(x)Omega(c) -> Omega(c-1)^3 -> Omega(c) -> 0
    lo2, hi2 = _les_bounds([3 * x for x in om(c - 1)], om(c), forward=False)
    lo = [max(x, y) for x, y in zip(lo1, lo2)]
    hi = [min(x, y) for x, y in zip(hi1, hi2)]
    # chi is additive; with a single live degree it pins that degree
    chi = 3 * _chi3(om(c - 2)) - _chi3(om(c - 3))
    live = [q for q in range(3) if hi[q] > 0]
    if len(live) == 1:
        q = live[0]
        val = chi if q % 2 == 0 else -chi
        lo[q] = max(lo[q], val)
        hi[q] = min(hi[q], val)
    return tuple(lo), tuple(hi)


def _chi3(h: Sequence[int]) -> int:
    return h[0] - h[1] + h[2]


# ---------------------------------------------------------------------------
# cohomology vectors


@dataclass(frozen=True)
class CohVector:
    h: tuple[int, int, int, int]

    def __iter__(self) -> Iterator[int]:
        return iter(self.h)

    def __getitem__(self, i: int) -> int:
        return self.h[i]

    @property
    def chi(self) -> int:
        return self.h[0] - self.h[1] + self.h[2] - self.h[3]

    def is_zero(self) -> bool:
        return not any(self.h)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.h) + ")"


@dataclass(frozen=True)
class CohInterval:
    lo: tuple[int, int, int, int]
    hi: tuple[int, int, int, int]

    def __post_init__(self):
        if any(x > y for x, y in zip(self.lo, self.hi)) or min(self.lo) < 0:
            raise ValueError(f"malformed interval {self.lo} .. {self.hi}")

    @classmethod
    def exact_of(cls, h: Sequence[int]) -> CohInterval:
        return cls(tuple(h), tuple(h))

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def vector(self) -> CohVector:
        if not self.exact:
            raise UndeterminedError(f"cohomology only bounded: {self}")
        return CohVector(self.lo)

    def vanishes(self, i: int) -> Optional[bool]:
        """True/False when h^i is certainly zero/non-zero, None if unknown."""
        if self.hi[i] == 0:
            return True
        if self.lo[i] > 0:
            return False
        return None

    def all_vanish(self) -> Optional[bool]:
        vals = [self.vanishes(i) for i in range(4)]
        if all(v is True for v in vals):
            return True
        if any(v is False for v in vals):
            return False
        return None

    def __add__(self, other: CohInterval) -> CohInterval:
        return CohInterval(
            tuple(x + y for x, y in zip(self.lo, other.lo)),
            tuple(x + y for x, y in zip(self.hi, other.hi)),
        )

    def scale(self, m: int) -> CohInterval:
        return CohInterval(tuple(m * x for x in self.lo), tuple(m * x for x in self.hi))

    def __str__(self) -> str:
        if self.exact:
            return "(" + ",".join(str(x) for x in self.lo) + ")"
        parts = [str(x) if x == y else f"{x}..{y}" for x, y in zip(self.lo, self.hi)]
        return "(" + ",".join(parts) + ")"


ZERO_INTERVAL = CohInterval((0, 0, 0, 0), (0, 0, 0, 0))


# ---------------------------------------------------------------------------
# twist windows: sets of t where h^i can be non-zero, as sorted disjoint
# closed intervals with None standing for an infinite end

Interval = tuple[Optional[int], Optional[int]]
Window = tuple[Interval, ...]


def _meet(x: Interval, y: Interval) -> Optional[Interval]:
    lo = x[0] if y[0] is None else (y[0] if x[0] is None else max(x[0], y[0]))
    hi = x[1] if y[1] is None else (y[1] if x[1] is None else min(x[1], y[1]))
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def window_union(pieces: Iterable[Interval]) -> Window:
    key = lambda iv: (float("-inf") if iv[0] is None else iv[0])
    merged: list[list] = []
    for lo, hi in sorted(pieces, key=key):
        if merged:
            plo, phi = merged[-1]
            if phi is None or lo is None or lo <= phi + 1:
                if phi is not None and (hi is None or hi > phi):
                    merged[-1][1] = hi
                continue
        merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


def window_contains(w: Window, t: int) -> bool:
    return any((lo is None or lo <= t) and (hi is None or t <= hi) for lo, hi in w)


def window_points(w: Window) -> list[int]:
    """Integers of a window with finite ends."""
    out = []
    for lo, hi in w:
        if lo is None or hi is None:
            raise ValueError("window is unbounded")
        out.extend(range(lo, hi + 1))
    return out


def _shift(iv: Interval, s: int) -> Interval:
    return (None if iv[0] is None else iv[0] + s, None if iv[1] is None else iv[1] + s)


_P1_SUPPORT = {0: (0, None), 1: (None, -2)}  # in terms of the P^1 degree
_P2_SUPPORT = {
    "O": {0: [(0, None)], 2: [(None, -3)]},
    "Omega": {0: [(2, None)], 1: [(0, 0)], 2: [(None, -2)]},
    "OmegaOmega": {0: [(3, None)], 1: [(None, 2)], 2: [(None, 0)]},
}


# ---------------------------------------------------------------------------
# building blocks


@dataclass(frozen=True)
class LineBundle:
    """O(D)."""

    D: DivisorClass
    rank: ClassVar[int] = 1
    p2_kind: ClassVar[str] = "O"
    _order: ClassVar[int] = 0

    def twist(self, t: int) -> LineBundle:
        return LineBundle(self.D.twist(t))

    def shift(self, E: DivisorClass) -> LineBundle:
        return LineBundle(self.D + E)

    def dual(self) -> LineBundle:
        return LineBundle(-self.D)

    def ch(self) -> ChernCharacter:
        return ch_line(self.D)

    def __str__(self) -> str:
        return f"O({self.D})"


@dataclass(frozen=True)
class OmegaPi:
    """Omega_pi(D), the pulled-back cotangent bundle of P^2 twisted by D."""

    D: DivisorClass
    rank: ClassVar[int] = 2
    p2_kind: ClassVar[str] = "Omega"
    _order: ClassVar[int] = 1

    def twist(self, t: int) -> OmegaPi:
        return OmegaPi(self.D.twist(t))

    def shift(self, E: DivisorClass) -> OmegaPi:
        return OmegaPi(self.D + E)

    def dual(self) -> OmegaPi:
        # T_pi = Omega_pi(3L)
        return OmegaPi(-self.D + DivisorClass(0, 3))

    def ch(self) -> ChernCharacter:
        return ch_omega_pi(self.D)

    def __str__(self) -> str:
        return f"Omega({self.D})"


@dataclass(frozen=True)
class _OmegaOmega:
    """Omega_pi (x) Omega_pi (D); only arises from tensoring two OmegaPi blocks."""

    D: DivisorClass
    rank: ClassVar[int] = 4
    p2_kind: ClassVar[str] = "OmegaOmega"
    _order: ClassVar[int] = 2

    def twist(self, t: int) -> _OmegaOmega:
        return _OmegaOmega(self.D.twist(t))

    def shift(self, E: DivisorClass) -> _OmegaOmega:
        return _OmegaOmega(self.D + E)

    def ch(self) -> ChernCharacter:
        w = ch_omega_pi()
        return w * w * ch_line(self.D)

    def __str__(self) -> str:
        return f"Omega(x)Omega({self.D})"


BuildingBlock = Union[LineBundle, OmegaPi]


def T_pi(D: DivisorClass = DivisorClass(0, 0)) -> OmegaPi:
    return OmegaPi(D + DivisorClass(0, 3))


def block_key(block) -> tuple:
    return (block._order, block.D.a, block.D.b)


def tensor_blocks(x, y):
    if isinstance(x, LineBundle):
        return y.shift(x.D)
    if isinstance(y, LineBundle):
        return x.shift(y.D)
    if isinstance(x, OmegaPi) and isinstance(y, OmegaPi):
        return _OmegaOmega(x.D + y.D)
    raise NotImplementedError(f"tensor of {x} and {y}")


# ---------------------------------------------------------------------------
# sheaves


@dataclass(frozen=True)
class FormalSheaf:
    """A direct sum of blocks with positive multiplicities (normalized)."""

    terms: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for block, m in self.terms:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            merged[block] = merged.get(block, 0) + m
        ordered = tuple(sorted(merged.items(), key=lambda bm: block_key(bm[0])))
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def of(cls, *blocks, mult: int = 1) -> FormalSheaf:
        return cls(tuple((b, mult) for b in blocks))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def rank(self) -> int:
        return sum(b.rank * m for b, m in self.terms)

    def blocks(self) -> list:
        return [b for b, _ in self.terms]

    def twist(self, t: int) -> FormalSheaf:
        return FormalSheaf(tuple((b.twist(t), m) for b, m in self.terms))

    def tensor(self, block) -> FormalSheaf:
        return FormalSheaf(tuple((tensor_blocks(b, block), m) for b, m in self.terms))

    def ch(self) -> ChernCharacter:
        total = ChernCharacter(0, 0, 0, 0, 0, 0)
        for b, m in self.terms:
            total = total + b.ch().scale(m)
        return total

    def __add__(self, other: FormalSheaf) -> FormalSheaf:
        return FormalSheaf(self.terms + other.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(b) if m == 1 else f"{m}*{b}" for b, m in self.terms)


@dataclass(frozen=True)
class ExtensionSheaf:
    """Any sheaf E with 0 -> sub -> E -> quot -> 0."""

    sub: FormalSheaf
    quot: FormalSheaf

    @property
    def is_zero(self) -> bool:
        return self.sub.is_zero and self.quot.is_zero

    @property
    def rank(self) -> int:
        return self.sub.rank + self.quot.rank

    def blocks(self) -> list:
        return self.sub.blocks() + self.quot.blocks()

    def twist(self, t: int) -> ExtensionSheaf:
        return ExtensionSheaf(self.sub.twist(t), self.quot.twist(t))

    def tensor(self, block) -> ExtensionSheaf:
        return ExtensionSheaf(self.sub.tensor(block), self.quot.tensor(block))

    def ch(self) -> ChernCharacter:
        return self.sub.ch() + self.quot.ch()

    def __str__(self) -> str:
        return f"ext({self.sub}; {self.quot})"


Sheaf = Union[FormalSheaf, ExtensionSheaf]


def as_sheaf(s) -> Sheaf:
    if isinstance(s, (FormalSheaf, ExtensionSheaf)):
        return s
    if isinstance(s, (LineBundle, OmegaPi, _OmegaOmega)):
        return FormalSheaf(((s, 1),))
    raise TypeError(f"not a sheaf: {s!r}")


def _require_nonzero(s: Sheaf) -> None:
    if s.is_zero:
        raise ValueError("the zero sheaf is not a valid input")


# ---------------------------------------------------------------------------
# cohomology


def _p2_exact(kind: str, c: int) -> tuple[int, int, int]:
    if kind == "O":
        return coh_p2_line(c)
    if kind == "Omega":
        return coh_p2_omega(c)
    return bott.omega_omega(c)


def _kunneth(p1: tuple[int, int], lo2, hi2) -> CohInterval:
    lo = [0, 0, 0, 0]
    hi = [0, 0, 0, 0]
    for p, hp in enumerate(p1):
        if hp == 0:
            continue
        for q in range(3):
            lo[p + q] += hp * lo2[q]
            hi[p + q] += hp * hi2[q]
    return CohInterval(tuple(lo), tuple(hi))


def block_interval(block, t: int = 0, exact_omega: bool = False) -> CohInterval:
    """Cohomology of block(tH); Omega(x)Omega factors give intervals unless
    ``exact_omega`` asks for the Borel-Weil-Bott values."""
    p1 = coh_p1(block.D.a + t)
    c = block.D.b + t
    if block.p2_kind == "OmegaOmega" and not exact_omega:
        lo2, hi2 = p2_omega_omega_bounds(c)
    else:
        lo2 = hi2 = _p2_exact(block.p2_kind, c)
    return _kunneth(p1, lo2, hi2)


def coh_block(block: BuildingBlock, t: int = 0) -> CohVector:
    """Exact Kunneth cohomology of a line bundle or Omega_pi block at twist t."""
    if not isinstance(block, (LineBundle, OmegaPi)):
        raise TypeError(f"not a building block: {block!r}")
    return block_interval(block, t).vector()


def _formal_interval(s: FormalSheaf, t: int, exact_omega: bool) -> CohInterval:
    total = ZERO_INTERVAL
    for b, m in s.terms:
        total = total + block_interval(b, t, exact_omega).scale(m)
    return total


def extension_bounds(A: CohInterval, B: CohInterval) -> CohInterval:
    """Long exact sequence bounds for 0 -> A -> E -> B -> 0."""
    get = lambda v, i: v[i] if 0 <= i < 4 else 0
    lo, hi = [], []
    for i in range(4):
        hi.append(A.hi[i] + B.hi[i])
        # coker(H^{i-1}B -> H^i A) + ker(H^i B -> H^{i+1} A)
        lo.append(max(0, A.lo[i] - get(B.hi, i - 1)) + max(0, B.lo[i] - get(A.hi, i + 1)))
    return CohInterval(tuple(lo), tuple(hi))


def coh(s, t: int = 0, exact_omega: bool = False) -> CohInterval:
    """Cohomology of s(tH) for any block, formal sum or extension."""
    s = as_sheaf(s)
    if isinstance(s, FormalSheaf):
        return _formal_interval(s, t, exact_omega)
    A = _formal_interval(s.sub, t, exact_omega)
    B = _formal_interval(s.quot, t, exact_omega)
    return extension_bounds(A, B)


def coh_formal(s: FormalSheaf, t: int = 0) -> CohVector:
    _require_nonzero(s)
    return coh(s, t).vector()


def coh_extension(e: ExtensionSheaf, t: int = 0) -> CohInterval:
    _require_nonzero(e)
    return coh(e, t)


# ---------------------------------------------------------------------------
# windows


def block_window(block, i: int) -> Window:
    a, b = block.D.a, block.D.b
    pieces = []
    for p, p1_iv in _P1_SUPPORT.items():
        q = i - p
        for p2_iv in _P2_SUPPORT[block.p2_kind].get(q, []):
            hit = _meet(_shift(p1_iv, -a), _shift(p2_iv, -b))
            if hit is not None:
                pieces.append(hit)
    return window_union(pieces)


def coh_window(s, i: int) -> Window:
    """Twists t with h^i(s(tH)) possibly non-zero.

    Exact for formal sums; for extensions the union over both sides, which
    over-approximates.
    """
    s = as_sheaf(s)
    return window_union(iv for b in s.blocks() for iv in block_window(b, i))


def _h0_start(blocks) -> int:
    """Least t from which h^0 of some block is non-zero (blocks non-empty)."""
    return min(block_window(b, 0)[0][0] for b in blocks)


def _h3_end(blocks) -> int:
    return max(block_window(b, 3)[-1][1] for b in blocks)


@dataclass(frozen=True)
class AcmResult:
    acm: Optional[bool]
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return bool(self.acm)


def is_acm(s) -> AcmResult:
    """Vanishing of h^1 and h^2 in every twist, with a witness (i, t) when not."""
    s = as_sheaf(s)
    _require_nonzero(s)
    unknown = None
    for i in (1, 2):
        w = coh_window(s, i)
        if not w:
            continue
        for t in window_points(w):
            v = coh(s, t).vanishes(i)
            if v is False:
                return AcmResult(False, (i, t))
            if v is None and unknown is None:
                unknown = (i, t)
    if unknown is not None:
        return AcmResult(None, unknown)
    return AcmResult(True)


def _sub_blocks(s: Sheaf) -> list:
    return s.sub.blocks() if isinstance(s, ExtensionSheaf) and not s.sub.is_zero else s.blocks()


def _quot_blocks(s: Sheaf) -> list:
    return s.quot.blocks() if isinstance(s, ExtensionSheaf) and not s.quot.is_zero else s.blocks()


def ulrich_init(s) -> Optional[int]:
    """The t with H^*(s((t-j)H)) = 0 for j = 1, 2, 3, if any."""
    s = as_sheaf(s)
    _require_nonzero(s)
    # h^0 > 0 from the sub's start on, h^3 > 0 up to the quot's end
    hi_t = _h0_start(_sub_blocks(s)) + 1
    lo_t = _h3_end(_quot_blocks(s)) + 3
    undecided = False
    for t in range(lo_t, hi_t + 1):
        verdicts = [coh(s, t - j).all_vanish() for j in (1, 2, 3)]
        if all(v is True for v in verdicts):
            return t
        if not any(v is False for v in verdicts):
            undecided = True
    if undecided:
        raise UndeterminedError("Ulrich initialization not decided by the LES bounds")
    return None


def h0_nonzero_from(s) -> int:
    """Least t with h^0(s(tH)) > 0; h^0 is non-decreasing in t for bundles."""
    s = as_sheaf(s)
    _require_nonzero(s)
    start = _h0_start(s.blocks())
    stop = _h0_start(_sub_blocks(s))
    for t in range(start, stop + 1):
        v = coh(s, t).vanishes(0)
        if v is False:
            return t
        if v is None:
            raise UndeterminedError(f"h^0 at twist {t} only bounded")
    return stop


# ---------------------------------------------------------------------------
# Ext between blocks


def ext_blocks(A: BuildingBlock, B: BuildingBlock, exact_omega: bool = False) -> CohInterval:
    """Ext^i(A, B) = H^i(A^dual (x) B).

    Omega_pi against Omega_pi goes through Omega (x) Omega on P^2, bounded by
    the Euler sequences and tightened with chi; ``exact_omega`` uses Bott instead.
    """
    return block_interval(tensor_blocks(A.dual(), B), 0, exact_omega)


def ext_sheaves(A, B, exact_omega: bool = False) -> CohInterval:
    """Ext between direct sums, additive in both arguments."""
    A, B = as_sheaf(A), as_sheaf(B)
    if not (isinstance(A, FormalSheaf) and isinstance(B, FormalSheaf)):
        raise TypeError("Ext is only defined here between direct sums of blocks")
    total = ZERO_INTERVAL
    for a, m in A.terms:
        for b, n in B.terms:
            total = total + ext_blocks(a, b, exact_omega).scale(m * n)
    return total
