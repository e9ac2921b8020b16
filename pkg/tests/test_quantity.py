"""Exact extended-quantity arithmetic: parsing, ordering, and domain errors."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from measurext import INFINITY, ZERO, ExtendedQuantity, qsum
from measurext.errors import InputError, UndefinedArithmetic

finite_qs = st.fractions(
    min_value=0, max_value=1000, max_denominator=64
).map(ExtendedQuantity)
qs = st.one_of(finite_qs, st.just(INFINITY))


def test_of_parses_strings_ints_fractions():
    assert ExtendedQuantity.of("3/4").finite == Fraction(3, 4)
    assert ExtendedQuantity.of("7").finite == Fraction(7)
    assert ExtendedQuantity.of(" inf ") == INFINITY
    assert ExtendedQuantity.of(5).finite == Fraction(5)
    assert ExtendedQuantity.of(Fraction(2, 3)).finite == Fraction(2, 3)
    assert ExtendedQuantity.of(ExtendedQuantity.of("1/2")).finite == Fraction(1, 2)
    # anything Fraction parses exactly is admitted
    assert ExtendedQuantity.of("1e3").finite == Fraction(1000)
    assert ExtendedQuantity.of("2.25").finite == Fraction(9, 4)


@pytest.mark.parametrize("bad", ["", "1.5x", "1/0", "nan", "inf things"])
def test_of_rejects_garbage_strings(bad):
    with pytest.raises(InputError):
        ExtendedQuantity.of(bad)


def test_of_rejects_floats_and_bools():
    with pytest.raises(InputError):
        ExtendedQuantity.of(0.5)
    with pytest.raises(InputError):
        ExtendedQuantity.of(True)


def test_negative_values_rejected():
    with pytest.raises(InputError):
        ExtendedQuantity(Fraction(-1, 2))
    with pytest.raises(InputError):
        ExtendedQuantity.of("-3")


def test_str_round_trips():
    for text in ("0", "3/4", "17", "inf"):
        assert str(ExtendedQuantity.of(text)) == text


def test_infinity_arithmetic():
    one = ExtendedQuantity.of(1)
    assert one + INFINITY == INFINITY
    assert INFINITY + INFINITY == INFINITY
    assert INFINITY - one == INFINITY
    with pytest.raises(UndefinedArithmetic):
        INFINITY - INFINITY
    with pytest.raises(UndefinedArithmetic):
        ZERO - one


def test_ordering_is_total_with_infinity_on_top():
    vals = [ExtendedQuantity.of(t) for t in ("0", "1/3", "1/2", "2", "inf")]
    assert sorted(vals, reverse=True)[0] == INFINITY
    assert sorted(vals) == vals
    assert ZERO <= vals[1] < INFINITY <= INFINITY


def test_plain_sum_works_from_zero():
    vals = [ExtendedQuantity.of("1/2"), ExtendedQuantity.of("1/3")]
    assert sum(vals) == ExtendedQuantity.of("5/6")
    assert qsum([]) == ZERO
    assert qsum(vals + [INFINITY]) == INFINITY


@given(a=qs, b=qs, c=qs)
def test_addition_commutes_and_associates(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@given(a=finite_qs, b=finite_qs)
def test_subtraction_inverts_addition_on_finites(a, b):
    assert (a + b) - b == a


@given(a=qs, b=qs)
def test_order_respects_addition(a, b):
    assert a <= a + b
