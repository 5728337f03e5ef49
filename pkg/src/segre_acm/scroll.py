"""Line bundles on smooth rational normal scrolls S(a_1, ..., a_n).

S(a) = P(E) over P^1 with E = O(a_1) + ... + O(a_n), H the tautological class
and F a fibre.  Cohomology of xH + yF is pushed forward to P^1:

* x >= 0: pi_* O(xH) = Sym^x E, no higher direct images;
* -n < x < 0: everything vanishes;
* x <= -n: R^{n-1} pi_* O(xH) = Sym^{-x-n}(E^dual) (x) O(-d).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chow import Polynomial
from .mutation import a_seq


@dataclass(frozen=True)
class ScrollDescriptor:
    degrees: tuple

    def __post_init__(self):
        degs = tuple(int(a) for a in self.degrees)
        if not degs:
            raise ValueError("a scroll needs at least one degree")
        if any(a < 1 for a in degs):
            raise ValueError(f"degrees must be positive, got {degs}")
        if list(degs) != sorted(degs):
            raise ValueError(f"degrees must be non-decreasing, got {degs}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def balanced(cls, n: int, d: int) -> ScrollDescriptor:
        """The scroll with n degrees summing to d, as equal as possible."""
        if n < 1 or d < n:
            raise ValueError(f"need d >= n >= 1, got n={n}, d={d}")
        q, r = divmod(d, n)
        return cls(tuple([q] * (n - r) + [q + 1] * r))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def d(self) -> int:
        return sum(self.degrees)

    @property
    def N(self) -> int:
        return self.d + self.n - 1

    @property
    def canonical(self) -> ScrollDivisor:
        return ScrollDivisor(-self.n, self.d - 2)

    def __str__(self) -> str:
        return "S(" + ",".join(map(str, self.degrees)) + ")"


@dataclass(frozen=True)
class ScrollDivisor:
    """xH + yF."""

    x: int
    y: int

    def __add__(self, other: ScrollDivisor) -> ScrollDivisor:
        return ScrollDivisor(self.x + other.x, self.y + other.y)

    def __sub__(self, other: ScrollDivisor) -> ScrollDivisor:
        return ScrollDivisor(self.x - other.x, self.y - other.y)

    def twist(self, t: int) -> ScrollDivisor:
        return ScrollDivisor(self.x + t, self.y)


@lru_cache(maxsize=None)
def sym_weights(degrees: tuple, x: int) -> tuple:
    """Multiset of degrees of the line summands of Sym^x(O(a_1)+...+O(a_n)),
    as sorted (degree, count) pairs."""
    if x < 0:
        return ()
    # dp over summands keyed by (weight, degree used so far)
    table = {(0, 0): 1}
    for a in degrees:
        table = _add_summand(table, a, x)
    return tuple(sorted((w, c) for (w, deg), c in table.items() if deg == x))


def _add_summand(table: dict, a: int, x: int) -> dict:
    out: dict = {}
    for (w, deg), c in table.items():
        for e in range(x - deg + 1):
            k = (w + e * a, deg + e)
            out[k] = out.get(k, 0) + c
    return out


def _p1_sum(weights: tuple, shift: int) -> tuple[int, int]:
    h0 = sum(c * max(w + shift + 1, 0) for w, c in weights)
    h1 = sum(c * max(-w - shift - 1, 0) for w, c in weights)
    return h0, h1


def scroll_coh(S: ScrollDescriptor, D: ScrollDivisor) -> tuple[int, ...]:
    """(h^0, ..., h^n) of O(xH + yF) on S."""
    n = S.n
    h = [0] * (n + 1)
    if D.x >= 0:
        h[0], h[1] = _p1_sum(sym_weights(S.degrees, D.x), D.y)
    elif D.x <= -n:
        dual = tuple(-a for a in reversed(S.degrees))
        lo, hi = _p1_sum(sym_weights(dual, -D.x - n), D.y - S.d)
        h[n - 1] += lo
        h[n] += hi
    return tuple(h)


def scroll_chi(S: ScrollDescriptor, D: ScrollDivisor) -> int:
    return sum((-1) ** i * v for i, v in enumerate(scroll_coh(S, D)))


def scroll_hilbert_poly(S: ScrollDescriptor, D: ScrollDivisor) -> Polynomial:
    """t -> chi(D + tH), interpolated through n + 1 twists."""
    return Polynomial.interpolate([(t, scroll_chi(S, D.twist(t))) for t in range(S.n + 1)])


def _check_range(n: int, d: int) -> None:
    if not (n >= 2 and d >= n):
        raise ValueError(f"need d >= n >= 2, got n={n}, d={d}")


def scroll_ell(n: int, d: int) -> int:
    _check_range(n, d)
    return (n - 1) * d - n


def chi_L_dual(n: int, d: int) -> int:
    """chi of the dual of L = O((d-1)F - H)."""
    _check_range(n, d)
    return 2 * n + (1 - n) * d


def L_dual(S: ScrollDescriptor) -> ScrollDivisor:
    return ScrollDivisor(1, 1 - S.d)


def _a_raw(ell: int, k: int) -> int:
    # the recursion without the l >= 2 guard, for polynomial interpolation
    prev, cur = 0, 1
    if k == 0:
        return 0
    for _ in range(k - 1):
        prev, cur = cur, ell * cur - prev
    return cur


def _dimext(n: int, d: int, k: int, a) -> int:
    ell = (n - 1) * d - n
    return a(ell, k + 1) * ((n - 1) * d - 2 * n) - 2 * a(ell, k)


def dimext_bound(n: int, d: int, k: int) -> int:
    """Lower bound for dim Ext^1(U_k, O) = -chi(U_k^dual)."""
    _check_range(n, d)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return _dimext(n, d, k, a_seq)


def dimext_polynomial(n: int, k: int) -> Polynomial:
    """dimext_bound(n, d, k) as a polynomial in d (degree at most k + 1)."""
    pts = [(d, _dimext(n, d, k, _a_raw)) for d in range(k + 3)]
    return Polynomial.interpolate(pts)


def wildness_k(n: int, d: int) -> int:
    """The index k used for the pair (O, U_k) in each range of (n, d)."""
    if n >= 4 and d >= n:
        return 0
    if n == 3 and d >= 4:
        return 1
    if n == 2 and d >= 5:
        return 3
    raise ValueError(f"(n, d) = ({n}, {d}) is outside the wildness range")


@dataclass(frozen=True)
class WildnessReport:
    n: int
    d: int
    k: int
    ell: int
    bound: int
    mult_sub: int
    mult_quot: int
    ell_from_coh: int
    chi_from_coh: int
    ulrich_at_one: bool

    @property
    def passed(self) -> bool:
        return (
            self.bound >= 3
            and self.ell == self.ell_from_coh
            and self.bound == -self.chi_from_coh
            and self.ulrich_at_one
        )

    def to_json(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__}
        out["passed"] = self.passed
        return out


def verify_wildness_cases(n: int, d: int) -> WildnessReport:
    """Evaluate the Ext^1 bound for (O, U_k) and cross-check it on the
    balanced scroll of the same (n, d) with the pushforward engine."""
    k = wildness_k(n, d)
    ell = scroll_ell(n, d)
    S = ScrollDescriptor.balanced(n, d)
    Ld = L_dual(S)
    ell_coh = -scroll_chi(S, Ld - ScrollDivisor(0, 1))
    sub, quot = a_seq(ell, k), a_seq(ell, k + 1)
    # U_k^dual is an extension of O(F)^sub by (L^dual)^quot
    chi_dual = quot * scroll_chi(S, Ld) + sub * scroll_chi(S, ScrollDivisor(0, 1))
    return WildnessReport(
        n, d, k, ell, dimext_bound(n, d, k), sub, quot, ell_coh, chi_dual,
        ulrich_initialized_at_one(S),
    )


def ulrich_initialized_at_one(S: ScrollDescriptor) -> bool:
    """Both building blocks O(-F) and L of U_k have H^*(B(1 - j)) = 0, j = 1..n."""
    blocks = (ScrollDivisor(0, -1), ScrollDivisor(-1, S.d - 1))
    return all(
        not any(scroll_coh(S, B.twist(1 - j))) for B in blocks for j in range(1, S.n + 1)
    )


def ulrich_reduced_poly(S: ScrollDescriptor) -> Polynomial:
    """Reduced Hilbert polynomial shared by O(-F), L and hence every U_k."""
    return scroll_hilbert_poly(S, ScrollDivisor(0, -1))


def structure_reduced_poly(S: ScrollDescriptor) -> Polynomial:
    return scroll_hilbert_poly(S, ScrollDivisor(0, 0))
