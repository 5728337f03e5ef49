from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from segre_acm.chow import DivisorClass as D
from segre_acm.cohomology import ExtensionSheaf, FormalSheaf, LineBundle, OmegaPi
from segre_acm.expr import ParseError, format_sheaf, parse


def test_examples():
    assert parse("O(-F)") == FormalSheaf.of(LineBundle(D(-1, 0)))
    e = parse("ext(2*O(-F); 5*O(F-L))")
    assert isinstance(e, ExtensionSheaf)
    assert e.sub == FormalSheaf(((LineBundle(D(-1, 0)), 2),))
    assert e.quot == FormalSheaf(((LineBundle(D(1, -1)), 5),))
    assert parse("Omega(L)(1)") == FormalSheaf.of(OmegaPi(D(1, 2)))


def test_atom_forms_agree():
    same = ["O(2F-3L)", "O(2,-3)", "O(-3H+5F)", "O( 2 F - 3 L )", "O(5F)(-3)"]
    assert len({parse(s) for s in same}) == 1
    assert parse("O(3)") == parse("O(3F+3L)") == parse("O(3H)") == parse("O(0)(3)")
    assert parse("L") == parse("O(F-L)")
    assert parse("O(0)(1)(-1)") == parse("O(0)")
    assert parse("O(H-F)") == parse("O(L)")


def test_sums_and_extensions():
    s = parse("O(0) + 2*Omega(L) + O(0)")
    assert s.rank == 1 + 4 + 1
    e = parse("ext(; L)")
    assert e.sub == FormalSheaf() and e.quot == parse("L")
    assert parse("ext(0; L)") == e
    assert parse("ext(O(-F); L)(1)") == ExtensionSheaf(parse("O(-F)(1)"), parse("L(1)"))


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("O(", 2, {"integer", "F", "L", "H"}),
        ("2*", 2, {"O(", "Omega(", "L"}),
        ("O(1,)", 4, {"integer"}),
        ("Omega(F+)", 8, {"F", "L", "H"}),
        ("ext(O(0)", 8, {";"}),
        ("O(0) O(1)", 5, {"+", "end of input"}),
        ("O(0)+ü", 5, {"O(", "Omega(", "L", "multiplicity"}),
        ("ü+ü", 0, {"O(", "Omega(", "L", "multiplicity"}),
        ("0*O(0)", 1, {"atom"}),
        ("O(0)(x)", 5, {"integer"}),
    ],
)
def test_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected == frozenset(expected)
    assert f"offset {offset}" in str(info.value)


def test_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse("O(0)+üü")
    assert info.value.offset == 5
    with pytest.raises(ParseError) as info:
        parse("ü")
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse("O(üF)")
    assert info.value.offset == 2


def test_parse_error_is_value_error():
    assert issubclass(ParseError, ValueError)


ints = st.integers(-9, 9)


@st.composite
def atoms(draw):
    kind = draw(st.sampled_from(["O", "Omega", "L"]))
    if kind == "L":
        return "L"
    style = draw(st.sampled_from(["pair", "k", "lin"]))
    a, b = draw(ints), draw(ints)
    if style == "pair":
        body = f"{a},{b}"
    elif style == "k":
        body = str(a)
    else:
        body = f"{a}F{b:+d}L"
    return f"{kind}({body})"


@st.composite
def terms(draw):
    m = draw(st.integers(1, 4))
    tw = "".join(f"({t})" for t in draw(st.lists(ints, max_size=2)))
    return ("" if m == 1 else f"{m}*") + draw(atoms()) + tw


sums = st.lists(terms(), min_size=1, max_size=3).map(" + ".join)


@st.composite
def expressions(draw):
    if draw(st.booleans()):
        return draw(sums)
    sub = draw(st.one_of(st.just(""), sums))
    quot = draw(sums)
    tw = draw(st.sampled_from(["", "(1)", "(-2)"]))
    return f"ext({sub}; {quot}){tw}"


@settings(max_examples=1000, deadline=None)
@given(expressions())
def test_round_trip(text):
    ast = parse(text)
    printed = format_sheaf(ast)
    assert parse(printed) == ast
    assert format_sheaf(parse(printed)) == printed


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="O()Omega,+-*;FLHext0123 ü", max_size=14))
def test_parse_is_total(text):
    try:
        parse(text)
    except ParseError as err:
        assert 0 <= err.offset <= len(text.encode())
        assert err.expected
    except ValueError:
        # structurally valid but semantically empty (e.g. a zero multiplicity)
        pass
