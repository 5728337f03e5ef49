"""Numerical intersection theory on X = P^1 x P^2.

The Chow ring is Q[f, l]/(f^2, l^3) where f is the class of a fibre of the
projection to P^1 and l the pull-back of a line from P^2.  Classes are stored
in the basis (1, f, l, fl, l^2, fl^2); the point class is fl^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """The divisor class a*F + b*L.  H = F + L is the Segre polarization."""

    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def twist(self, t: int) -> DivisorClass:
        """Add t*H."""
        return DivisorClass(self.a + t, self.b + t)

    def __str__(self) -> str:
        return format_divisor(self.a, self.b)


def format_divisor(a: int, b: int) -> str:
    """Render aF+bL compactly, e.g. ``F-L``, ``-2F``, ``0``."""
    parts = []
    for coef, sym in ((a, "F"), (b, "L")):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        sign = "-" if coef < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}{sym}")
    return "".join(parts) or "0"


F = DivisorClass(1, 0)
L = DivisorClass(0, 1)
H = DivisorClass(1, 1)
CANONICAL = DivisorClass(-2, -3)

# dualization multiplies the degree-k part by (-1)^k
_DUAL_SIGNS = (1, -1, -1, 1, 1, -1)


@dataclass(frozen=True)
class ChernCharacter:
    """A class in Q[f,l]/(f^2,l^3), components on (1, f, l, fl, l^2, fl^2)."""

    r: Fraction
    c_f: Fraction
    c_l: Fraction
    c_fl: Fraction
    c_ll: Fraction
    c_fll: Fraction

    def __post_init__(self):
        for name in ("r", "c_f", "c_l", "c_fl", "c_ll", "c_fll"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def from_components(cls, comps: Iterable) -> ChernCharacter:
        return cls(*comps)

    @property
    def components(self) -> tuple[Fraction, ...]:
        return (self.r, self.c_f, self.c_l, self.c_fl, self.c_ll, self.c_fll)

    @property
    def rank(self) -> Fraction:
        return self.r

    def __add__(self, other: ChernCharacter) -> ChernCharacter:
        return ChernCharacter(*(x + y for x, y in zip(self.components, other.components)))

    def __sub__(self, other: ChernCharacter) -> ChernCharacter:
        return ChernCharacter(*(x - y for x, y in zip(self.components, other.components)))

    def __neg__(self) -> ChernCharacter:
        return ChernCharacter(*(-x for x in self.components))

    def scale(self, k) -> ChernCharacter:
        k = _q(k)
        return ChernCharacter(*(k * x for x in self.components))

    def __rmul__(self, k) -> ChernCharacter:
        return self.scale(k)

    def __mul__(self, other):
        if not isinstance(other, ChernCharacter):
            return self.scale(other)
        u0, u1, u2, u3, u4, u5 = self.components
        v0, v1, v2, v3, v4, v5 = other.components
        return ChernCharacter(
            u0 * v0,
            u0 * v1 + u1 * v0,
            u0 * v2 + u2 * v0,
            u0 * v3 + u3 * v0 + u1 * v2 + u2 * v1,
            u0 * v4 + u4 * v0 + u2 * v2,
            u0 * v5 + u5 * v0 + u1 * v4 + u4 * v1 + u2 * v3 + u3 * v2,
        )

    def dual(self) -> ChernCharacter:
        return ChernCharacter(*(s * x for s, x in zip(_DUAL_SIGNS, self.components)))

    def degree(self) -> Fraction:
        """Integral over X, i.e. the fl^2 coefficient."""
        return self.c_fll

    def is_zero(self) -> bool:
        return not any(self.components)

    def __str__(self) -> str:
        return "(" + "; ".join(str(x) for x in self.components) + ")"


ZERO = ChernCharacter(0, 0, 0, 0, 0, 0)
ONE = ChernCharacter(1, 0, 0, 0, 0, 0)
TODD = ChernCharacter(1, 1, Fraction(3, 2), Fraction(3, 2), 1, 1)


def ch_line(D: DivisorClass) -> ChernCharacter:
    """Truncated exponential e^{af+bl}."""
    a, b = Fraction(D.a), Fraction(D.b)
    return ChernCharacter(1, a, b, a * b, b * b / 2, a * b * b / 2)


def ch_omega_pi(D: DivisorClass = DivisorClass(0, 0)) -> ChernCharacter:
    """ch(Omega_pi(D)) from the relative Euler sequence."""
    base = ch_line(DivisorClass(0, -1)).scale(3) - ONE
    return base * ch_line(D)


def euler_pairing(u: ChernCharacter, v: ChernCharacter) -> Fraction:
    """chi(u, v) = integral of u^dual * v * td(X)."""
    return (u.dual() * v * TODD).degree()


def chi(u: ChernCharacter) -> Fraction:
    return euler_pairing(ONE, u)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of t^k; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def linear(cls, a, b) -> Polynomial:
        """a*t + b."""
        return cls([b, a])

    @classmethod
    def interpolate(cls, points: Sequence[tuple]) -> Polynomial:
        """Lagrange interpolation through (x, y) pairs with distinct x."""
        result = cls()
        for i, (xi, yi) in enumerate(points):
            term = cls([yi])
            for j, (xj, _) in enumerate(points):
                if i != j:
                    term = term * cls([-_q(xj), 1]) * cls([Fraction(1) / (_q(xi) - _q(xj))])
            result = result + term
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial([c * _q(other) for c in self.coeffs])
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, k) -> Polynomial:
        k = _q(k)
        return Polynomial([c / k for c in self.coeffs])

    def shift(self, s) -> Polynomial:
        """The polynomial t -> p(t + s)."""
        result = Polynomial()
        step = Polynomial([s, 1])
        for c in reversed(self.coeffs):
            result = result * step + Polynomial([c])
        return result

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = var if k == 1 else (f"{var}^{k}" if k > 1 else "")
            if body and mag == 1:
                text = body
            elif body:
                text = f"{mag} {body}"
            else:
                text = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, text))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


HilbertPolynomial = Polynomial

# H^k / k! for k = 0..3; H^2 = 2fl + l^2 and H^3 = 3fl^2.
_H_POWERS = (
    ONE,
    ChernCharacter(0, 1, 1, 0, 0, 0),
    ChernCharacter(0, 0, 0, 1, Fraction(1, 2), 0),
    ChernCharacter(0, 0, 0, 0, 0, Fraction(1, 2)),
)


def hilbert_poly(u: ChernCharacter) -> Polynomial:
    """P(t) = chi(u . e^{tH}) as an exact polynomial in t."""
    return Polynomial([chi(u * hk) for hk in _H_POWERS])


def reduced(p: Polynomial, rank) -> Polynomial:
    rank = _q(rank)
    if rank == 0:
        raise ValueError("reduced Hilbert polynomial needs non-zero rank")
    return p / rank


def reduced_hilbert_poly(u: ChernCharacter) -> Polynomial:
    return reduced(hilbert_poly(u), u.rank)


def compare_reduced(p: Polynomial, q: Polynomial) -> int:
    """Order p, q by their values for t >> 0.

    Returns -1, 0 or 1 as p precedes, equals or succeeds q.  Coefficients
    are compared from the top degree down, no evaluation involved.
    """
    n = max(len(p.coeffs), len(q.coeffs))
    for k in range(n - 1, -1, -1):
        x, y = p.coeff(k), q.coeff(k)
        if x != y:
            return -1 if x < y else 1
    return 0
