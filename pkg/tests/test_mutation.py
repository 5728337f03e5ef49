from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from segre_acm.chow import DivisorClass as D, euler_pairing
from segre_acm.cohomology import ExtensionSheaf, FormalSheaf, LineBundle, coh, ulrich_init
from segre_acm.mutation import (
    X_CLASS,
    Y_CLASS,
    UlrichDatum,
    a_seq,
    c_seq,
    index_of,
    is_numerically_rigid,
    ladder,
    left_mutation_class,
    multiplicities,
    right_mutation_class,
    serre_involution,
    ulrich_class,
)


def test_sequence_values():
    assert [c_seq(k) for k in range(8)] == [0, 1, 3, 8, 21, 55, 144, 377]
    assert [a_seq(2, k) for k in range(6)] == [0, 1, 2, 3, 4, 5]
    assert [a_seq(4, k) for k in range(5)] == [0, 1, 4, 15, 56]
    assert c_seq(-3) == c_seq(3)


def test_sequence_errors():
    with pytest.raises(ValueError):
        a_seq(1, 3)
    with pytest.raises(ValueError):
        a_seq(3, -1)


@given(st.integers(2, 12), st.integers(0, 40))
def test_sequence_recurrence(ell, k):
    assert a_seq(ell, k + 2) == ell * a_seq(ell, k + 1) - a_seq(ell, k)


def test_cassini_and_markov_type_identity():
    for k in range(-15, 16):
        cas = c_seq(k + 1) * c_seq(k - 1) - c_seq(k) ** 2
        assert cas == (1 if k == 0 else -1), k
        a, b = c_seq(k - 1), c_seq(k)
        assert a * a + b * b - 3 * a * b == 1


def test_ulrich_examples():
    u = ulrich_class(3)
    assert (u.a, u.b, u.rank, u.chi_self()) == (3, 8, 11, 1)
    assert u.expr() == "ext(3*O(-F); 8*O(F-L))"
    assert ulrich_class(1).expr() == "ext(; O(F-L))"
    assert ulrich_class(0).expr() == "ext(O(-F); )"


def test_ladder_matches_closed_form():
    lad = ladder(-8, 10)
    assert sorted(lad) == list(range(-8, 11))
    for k, cls in lad.items():
        assert multiplicities(cls) == (c_seq(k - 1), c_seq(k)), k
        assert cls == ulrich_class(k).cls


def test_mutations_are_mutually_inverse():
    for k in range(-6, 7):
        e, f = ulrich_class(k).cls, ulrich_class(k - 1).cls
        g = left_mutation_class(e, f)
        assert g == ulrich_class(k + 1).cls
        assert right_mutation_class(e, g) == f


def test_serre_involution():
    for k in range(-10, 11):
        u = ulrich_class(k)
        v = serre_involution(u)
        assert v.k == 1 - k
        assert serre_involution(v) == u
    with pytest.raises(ArithmeticError):
        serre_involution(UlrichDatum(5, 1, 1))


def test_rigidity():
    for k in range(-8, 9):
        u = ulrich_class(k)
        assert is_numerically_rigid(u)
        assert euler_pairing(u.cls, u.cls) == 1
    # chi(U_2, U_2) = 1 + 9 + 3 chi(O(F-L), O(-F)) + ...
    assert euler_pairing(X_CLASS, Y_CLASS) == 0
    assert euler_pairing(Y_CLASS, X_CLASS) == -3
    assert not is_numerically_rigid(UlrichDatum(0, 1, 1))


def test_index_lookup():
    for k in range(-10, 11):
        u = ulrich_class(k)
        assert index_of(u.a, u.b) == k
    with pytest.raises(ValueError):
        index_of(2, 2)
    with pytest.raises(ValueError):
        multiplicities(Y_CLASS.scale(1) + X_CLASS.scale(0) + Y_CLASS.dual())


def test_ulrich_sheaves_initialize_at_one():
    for k in range(1, 7):
        u = ulrich_class(k)
        sub = FormalSheaf(((LineBundle(D(-1, 0)), u.a),)) if u.a else FormalSheaf()
        e = ExtensionSheaf(sub, FormalSheaf(((LineBundle(D(1, -1)), u.b),)))
        assert ulrich_init(e) == 1
        assert coh(e, 1).lo[0] == 3 * u.rank
