"""The adapted exceptional collection on P^1 x P^2 and the ACM classifier.

The collection is

    E = (O(-L), O(F-L), O(-F), O(L-F), Omega_pi(L), O)

with left dual (O, O(L), O(1)[1], T_pi(F)[1], O(F+2L)[2], O(2)[2]).  For a
sheaf G the E_1 table of the associated Beilinson spectral sequence has
entries a[i][j] = dim Ext^i(dual_j, G).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .chow import (
    ChernCharacter,
    DivisorClass,
    Polynomial,
    euler_pairing,
    hilbert_poly,
    ch_line,
    ch_omega_pi,
)
from .cohomology import (
    LineBundle,
    OmegaPi,
    UndeterminedError,
    T_pi,
    as_sheaf,
    coh,
    coh_window,
    ext_blocks,
    h0_nonzero_from,
    is_acm,
    window_points,
)

D = DivisorClass

COLLECTION = (
    LineBundle(D(0, -1)),
    LineBundle(D(1, -1)),
    LineBundle(D(-1, 0)),
    LineBundle(D(-1, 1)),
    OmegaPi(D(0, 1)),
    LineBundle(D(0, 0)),
)
DUAL_COLLECTION = (
    LineBundle(D(0, 0)),
    LineBundle(D(0, 1)),
    LineBundle(D(1, 1)),
    T_pi(D(1, 0)),
    LineBundle(D(1, 2)),
    LineBundle(D(2, 2)),
)
SHIFTS = (0, 0, 1, 1, 2, 2)

# Hom vanishings between members of the collection
NO_MAPS = ((0, 2), (0, 3), (1, 0), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4))


def dual_class(j: int) -> ChernCharacter:
    """Class of the shifted dual object, the shift contributing (-1)^s."""
    sign = -1 if SHIFTS[j] % 2 else 1
    return DUAL_COLLECTION[j].ch().scale(sign)


def ext_dual(i: int, j: int, exact_omega: bool = True) -> tuple[list, list]:
    """Ext^l(dual_i, E_j) for l = 0..5 packed by the shift s_i."""
    inner = ext_blocks(DUAL_COLLECTION[i], COLLECTION[j], exact_omega)
    s = SHIFTS[i]
    lo = [0] * 6
    hi = [0] * 6
    for k in range(4):
        lo[k + s] = inner.lo[k]
        hi[k + s] = inner.hi[k]
    return lo, hi


@dataclass
class CheckReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def dual_collection_check() -> CheckReport:
    """Certify exceptionality, semiorthogonality, the duality pairing and the
    Hom vanishings of the collection."""
    rep = CheckReport()
    n = len(COLLECTION)
    for i, E in enumerate(COLLECTION):
        ext = ext_blocks(E, E)
        rep.add(f"exceptional E{i}", ext.exact and ext.lo == (1, 0, 0, 0), str(ext))
    for i in range(n):
        for j in range(i):
            ext = ext_blocks(COLLECTION[i], COLLECTION[j])
            rep.add(f"Ext(E{i},E{j})=0", ext.exact and not any(ext.lo), str(ext))
    for i in range(n):
        for j in range(n):
            expected = (-1) ** i if i + j == n - 1 else 0
            value = euler_pairing(dual_class(i), COLLECTION[j].ch())
            rep.add(f"chi(dE{i},E{j})", value == expected, f"{value} vs {expected}")
            lo, hi = ext_dual(i, j)
            want = [0] * 6
            if i + j == n - 1:
                want[i] = 1
            rep.add(f"Ext(dE{i},E{j})", lo == hi == want, f"{lo}..{hi}")
    for i, j in NO_MAPS:
        ext = ext_blocks(COLLECTION[i], COLLECTION[j])
        rep.add(f"Hom(E{i},E{j})=0", ext.exact and ext.lo[0] == 0, str(ext))
    return rep


# ---------------------------------------------------------------------------
# the E_1 table


@dataclass(frozen=True)
class BeilinsonTable:
    """a[i][j] bounds, rows i = 0..5, columns j = 0..5."""

    lo: tuple
    hi: tuple

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def exact_grid(self) -> list[list[bool]]:
        return [[x == y for x, y in zip(r, s)] for r, s in zip(self.lo, self.hi)]

    @property
    def a(self) -> tuple:
        if not self.exact:
            raise UndeterminedError("table has interval entries")
        return self.lo

    def entry(self, i: int, j: int) -> Optional[int]:
        x, y = self.lo[i][j], self.hi[i][j]
        return x if x == y else None

    def b(self) -> list[list[int]]:
        """The transposed-reversed orientation b[i][j] = a[5-i][5-j] (lower bounds)."""
        return [[self.lo[5 - i][5 - j] for j in range(6)] for i in range(6)]

    def to_json(self) -> dict:
        return {
            "a": [list(r) for r in self.lo],
            "hi": [list(r) for r in self.hi],
            "exact": self.exact_grid(),
        }

    def format(self) -> str:
        rows = []
        for i in range(5, -1, -1):
            cells = []
            for j in range(6):
                x, y = self.lo[i][j], self.hi[i][j]
                cells.append(str(x) if x == y else f"{x}..{y}")
            rows.append(f"i={i} | " + " ".join(f"{c:>5}" for c in cells))
        return "\n".join(rows)


def beilinson_table(s, exact_omega: bool = False) -> BeilinsonTable:
    """a[i][j] = h^{i - s_j}(s (x) dual_j^dual)."""
    s = as_sheaf(s)
    if s.is_zero:
        raise ValueError("the zero sheaf is not a valid input")
    lo = [[0] * 6 for _ in range(6)]
    hi = [[0] * 6 for _ in range(6)]
    for j, G in enumerate(DUAL_COLLECTION):
        v = coh(s.tensor(G.dual()), 0, exact_omega)
        for k in range(4):
            lo[k + SHIFTS[j]][j] = v.lo[k]
            hi[k + SHIFTS[j]][j] = v.hi[k]
    return BeilinsonTable(tuple(map(tuple, lo)), tuple(map(tuple, hi)))


def normalize_twist(s) -> int:
    """The unique t0 with h^0(s(t0)) = 0 and h^0(s(t0 + 1)) != 0."""
    return h0_nonzero_from(s) - 1


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    kind: str
    t: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    witness: Optional[tuple] = None
    reason: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == "Ulrich":
            return f"Ulrich a={self.a} b={self.b} t={self.t}"
        if self.kind == "NotACM":
            i, t = self.witness
            return f"NotACM witness=(i={i}, t={t})"
        if self.kind == "Undetermined":
            return f"Undetermined reason={self.reason}"
        if self.kind == "NotNormalizable":
            return "NotNormalizable"
        return f"{self.kind} t={self.t}"

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        for key in ("t", "a", "b", "reason"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if self.witness is not None:
            out["witness"] = {"i": self.witness[0], "t": self.witness[1]}
        return out


_ULRICH_SLOTS = {(3, 3), (4, 4)}


def classify(s) -> Classification:
    """Decide which case of the classification the (assumed indecomposable)
    ACM sheaf falls into, up to the normalizing twist."""
    s = as_sheaf(s)
    if s.is_zero:
        raise ValueError("the zero sheaf is not a valid input")
    acm = is_acm(s)
    if acm.acm is False:
        return Classification("NotACM", witness=acm.witness)
    if acm.acm is None:
        return Classification("Undetermined", reason=f"ACM status at {acm.witness}")
    try:
        t0 = normalize_twist(s)
    except UndeterminedError as exc:
        return Classification("Undetermined", reason=str(exc))

    # non-vanishing h^1(s(tH - L)) singles out Omega_pi(L)
    shifted = s.tensor(LineBundle(D(0, -1)))
    for t in window_points(coh_window(shifted, 1)):
        v = coh(shifted, t).vanishes(1)
        if v is False:
            return Classification("OmegaPiTwist", t=t0)
        if v is None:
            return Classification("Undetermined", reason=f"h^1(s({t}H-L)) only bounded")

    G = s.twist(t0)
    table = beilinson_table(G)
    others = [
        (i, j) for i in range(6) for j in range(6) if (i, j) not in _ULRICH_SLOTS
    ]
    if all(table.hi[i][j] == 0 for i, j in others):
        a33, a44 = table.entry(3, 3), table.entry(4, 4)
        if a33 is None or a44 is None:
            return Classification("Undetermined", reason="Ulrich multiplicities only bounded")
        return Classification("Ulrich", t=t0, a=a33, b=a44)
    if not any(table.lo[i][j] > 0 for i, j in others):
        return Classification("Undetermined", reason="table entries only bounded")

    v = coh(G.tensor(LineBundle(D(0, 1))), 0).vanishes(0)
    if v is False:
        return Classification("LTwist", t=t0)
    if v is True:
        return Classification("StructureTwist", t=t0)
    return Classification("Undetermined", reason="h^0(s(L)) only bounded")


# ---------------------------------------------------------------------------
# finiteness of semistable ACM types with a given Hilbert polynomial

@dataclass(frozen=True)
class AcmType:
    """A graded object O(-F)^a + O(F-L)^b + Omega_pi(L)^c, or O^r, or O(-L)^r,
    all twisted by s."""

    family: str
    s: int
    a: int = 0
    b: int = 0
    c: int = 0
    r: int = 0

    def ch(self) -> ChernCharacter:
        twist = ch_line(D(self.s, self.s))
        if self.family == "ulrich":
            base = (
                ch_line(D(-1, 0)).scale(self.a)
                + ch_line(D(1, -1)).scale(self.b)
                + ch_omega_pi(D(0, 1)).scale(self.c)
            )
        elif self.family == "structure":
            base = ch_line(D(0, 0)).scale(self.r)
        else:
            base = ch_line(D(0, -1)).scale(self.r)
        return base * twist


_FAMILY_BASE = {
    "ulrich": ch_line(D(-1, 0)),
    "structure": ch_line(D(0, 0)),
    "minus_L": ch_line(D(0, -1)),
}


def semistable_acm_types(P: Polynomial) -> list[AcmType]:
    """All graded ACM types (finitely many) with Hilbert polynomial P.

    Each family has a fixed reduced polynomial q(t); P = r q(t + s) pins the
    rank r from the leading term and s from the next coefficient, after which
    only the multiplicity split remains.
    """
    if P.degree != 3:
        return []
    r = P.leading() * 2
    if r.denominator != 1 or r <= 0:
        return []
    r = int(r)
    out = []
    for family, base in _FAMILY_BASE.items():
        q = hilbert_poly(base)  # rank one representative
        # coefficient of t^2 in r q(t + s) is r (q2 + 3 q3 s)
        s_num = P.coeff(2) / r - q.coeff(2)
        s = s_num / (3 * q.coeff(3))
        if s.denominator != 1:
            continue
        s = int(s)
        if q.shift(s) * r != P:
            continue
        if family == "ulrich":
            for c in range(r // 2 + 1):
                for a in range(r - 2 * c + 1):
                    out.append(AcmType(family, s, a=a, b=r - 2 * c - a, c=c))
        else:
            out.append(AcmType(family, s, r=r))
    return out
