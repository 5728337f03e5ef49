"""Independent reference computations used to check the package.

Nothing here imports the package's cohomology or scroll code.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, product


def cech_pn(n: int, b: int) -> list[int]:
    """h^q(P^n, O(b)) by counting Laurent monomials in the Cech complex.

    H^0 is spanned by monomials with all exponents >= 0 and H^n by those with
    all exponents <= -1 (total degree b); nothing else survives.
    """
    h = [0] * (n + 1)
    # exponent vectors with entries >= 0 summing to b
    if b >= 0:
        h[0] = sum(1 for v in product(range(b + 1), repeat=n) if sum(v) <= b)
    # entries <= -1 summing to b: substitute e = -1 - f with f >= 0
    m = -b - (n + 1)
    if m >= 0:
        h[n] = sum(1 for v in product(range(m + 1), repeat=n) if sum(v) <= m)
    return h


def kunneth_line(a: int, b: int) -> list[int]:
    """h^i(P^1 x P^2, O(aF + bL)) by the product of Cech counts."""
    p1, p2 = cech_pn(1, a), cech_pn(2, b)
    h = [0, 0, 0, 0]
    for p, x in enumerate(p1):
        for q, y in enumerate(p2):
            h[p + q] += x * y
    return h


def chi_line_hrr(a: int, b: int) -> int:
    """chi(O(aF + bL)) = (a + 1)(b + 1)(b + 2)/2."""
    return (a + 1) * (b + 1) * (b + 2) // 2


def scan_acm_line(a: int, b: int, bound: int = 20) -> bool:
    """ACM test by brute-force scanning all twists |t| <= bound."""
    for t in range(-bound, bound + 1):
        h = kunneth_line(a + t, b + t)
        if h[1] or h[2]:
            return False
    return True


def omega_p2_euler(b: int) -> list[int]:
    """h^q(P^2, Omega(b)) from 0 -> Omega(b) -> O(b-1)^3 -> O(b) -> 0,
    using that the map on H^0 is surjective for b >= 1 and H^2 injective
    dually; the only ambiguous twist b = 0 has h^1 = 1 (the Euler class)."""
    x, y = cech_pn(2, b - 1), cech_pn(2, b)
    chi = 3 * (x[0] - x[1] + x[2]) - (y[0] - y[1] + y[2])
    if b == 0:
        return [0, 1, 0]
    if b > 0:
        return [chi, 0, 0]
    return [0, 0, chi]


def sym_line_degrees(degrees, x: int) -> list[int]:
    """Degrees of the summands of Sym^x(O(a_1) + ... + O(a_n)) by enumeration."""
    return [sum(c) for c in combinations_with_replacement(degrees, x)]


def scroll_coh_enum(degrees, x: int, y: int) -> list[int]:
    """Line bundle cohomology on S(degrees) by explicit multiset enumeration."""
    n, d = len(degrees), sum(degrees)
    h = [0] * (n + 1)

    def p1(e):
        return max(e + 1, 0), max(-e - 1, 0)

    if x >= 0:
        for w in sym_line_degrees(degrees, x):
            h0, h1 = p1(w + y)
            h[0] += h0
            h[1] += h1
    elif x <= -n:
        for w in sym_line_degrees([-a for a in degrees], -x - n):
            h0, h1 = p1(w + y - d)
            h[n - 1] += h0
            h[n] += h1
    return h


def hrr_p1p1(a: int, b: int) -> int:
    """chi(O(a, b)) on P^1 x P^1."""
    return (a + 1) * (b + 1)

