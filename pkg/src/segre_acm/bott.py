"""Borel-Weil-Bott on P^2 = Gr(1, 3).

Irreducible homogeneous bundles are S^k Q (x) R^j, with R = O(-1) the
tautological line and Q = T(-1) the universal quotient.  Their cohomology is
concentrated in one degree (or vanishes) and is read off from the weight
(k, 0, j) by Bott's algorithm.  Used to pin exact values for Omega (x) Omega
twists, which long exact sequences only bound.
"""
from __future__ import annotations

from functools import lru_cache

_RHO = (2, 1, 0)


def gl3_dim(weight: tuple[int, int, int]) -> int:
    """Weyl dimension of the GL_3 irreducible with dominant weight."""
    g1, g2, g3 = weight
    num = (g1 - g2 + 1) * (g2 - g3 + 1) * (g1 - g3 + 2)
    return num // 2


@lru_cache(maxsize=None)
def bott(weight: tuple[int, int, int]) -> tuple[int, int] | None:
    """Return (degree, dimension) of the only non-zero cohomology, or None."""
    shifted = [w + r for w, r in zip(weight, _RHO)]
    if len(set(shifted)) < 3:
        return None
    # count inversions = length of the sorting permutation
    length = sum(
        1 for i in range(3) for j in range(i + 1, 3) if shifted[i] < shifted[j]
    )
    ordered = sorted(shifted, reverse=True)
    gamma = tuple(x - r for x, r in zip(ordered, _RHO))
    return length, gl3_dim(gamma)


def _as_vector(res: tuple[int, int] | None) -> tuple[int, int, int]:
    h = [0, 0, 0]
    if res is not None:
        h[res[0]] = res[1]
    return tuple(h)


def line(b: int) -> tuple[int, int, int]:
    """h^q(P^2, O(b)); O(1) = R^{-1}."""
    return _as_vector(bott((0, 0, -b)))


def omega(b: int) -> tuple[int, int, int]:
    """h^q(P^2, Omega(b)); Omega = Q(-2)."""
    return _as_vector(bott((1, 0, 2 - b)))


def sym2_omega(m: int) -> tuple[int, int, int]:
    """h^q(P^2, S^2 Omega(m)) = h^q(S^2 Q (x) R^{4-m})."""
    return _as_vector(bott((2, 0, 4 - m)))


def omega_omega(c: int) -> tuple[int, int, int]:
    """h^q(P^2, Omega (x) Omega(c)) = S^2 Omega(c) + O(c-3)."""
    s = sym2_omega(c)
    o = line(c - 3)
    return tuple(x + y for x, y in zip(s, o))
