from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weakhopf.errors import DivisionByZero, FieldMismatch
from weakhopf.scalars import (
    QQ,
    GFElement,
    PrimeField,
    add,
    char_divides,
    div,
    field_from_name,
    field_name,
    mul,
    sub,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


def test_rational_examples():
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    x = Fraction(7, 3)
    assert mul(x, QQ.one()) == x
    assert PrimeField(5).from_int(3) * PrimeField(5).from_int(2) == 1


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * QQ.inv(a) == 1


def test_gf5_field_axioms_exhaustive():
    F = PrimeField(5)
    elems = [F.from_int(i) for i in range(5)]
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert a * (b + c) == a * b + a * c
        if a:
            assert a * F.inv(a) == F.one()


def test_char_divides():
    assert not char_divides(QQ, 6)
    assert char_divides(PrimeField(3), 6)
    assert not char_divides(PrimeField(5), 6)
    with pytest.raises(ValueError):
        char_divides(QQ, 0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        add(PrimeField(5).from_int(1), PrimeField(7).from_int(1))
    with pytest.raises(FieldMismatch):
        add(Fraction(1), PrimeField(5).from_int(1))
    with pytest.raises(FieldMismatch):
        mul(PrimeField(5).from_int(2), Fraction(1, 2))


def test_division():
    assert div(Fraction(1), Fraction(4)) == Fraction(1, 4)
    with pytest.raises(DivisionByZero):
        div(Fraction(1), Fraction(0))
    with pytest.raises(DivisionByZero):
        PrimeField(5).inv(PrimeField(5).zero())


def test_gf_element_canonical_range():
    F = PrimeField(7)
    assert F.from_int(-1).value == 6
    assert (F.from_int(3) - F.from_int(5)).value == 5
    assert repr(F.from_int(3)) == "3 mod 7"


def test_parse_and_fmt_round_trip():
    for s in ["5/6", "-2", "0", "7"]:
        assert QQ.fmt(QQ.parse(s)) == s
    F = PrimeField(5)
    assert F.fmt(F.parse("3")) == "3"
    assert F.parse("3 mod 5") == F.from_int(3)


def test_field_names():
    assert field_name(field_from_name("Q")) == "Q"
    assert field_name(field_from_name("Fp:11")) == "Fp:11"
    assert field_from_name("GF(5)") == PrimeField(5)
    with pytest.raises(ValueError):
        field_from_name("R")
    with pytest.raises(ValueError):
        PrimeField(6)


def test_rational_canonical_form():
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    x = Fraction(3, -6)
    assert x.denominator > 0 and x == Fraction(-1, 2)
