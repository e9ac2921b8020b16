"""Rational interval algebra and the periodic local/global contrast."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from measurext import (
    INFINITY,
    ExtendedQuantity,
    IntervalSet,
    WindowedSet,
    demo_local_approximability,
    global_distance_certificate,
    interval_local_distance,
    parse_interval_set,
    parse_windowed_set,
    window,
)
from measurext.errors import InputError, PreconditionError


def iv(text):
    return parse_interval_set(text)


def q(text):
    return ExtendedQuantity.of(text)


# ---- parsing and canonical form -------------------------------------------


def test_parse_and_format_round_trip():
    for text in ("empty", "(0,1]", "(-inf,0]", "(1/2,3/4],(2,inf]", "(-3,-1],(0,5]"):
        assert str(iv(text)) == text


def test_parse_normalizes():
    assert str(iv("(2,3],(0,1]")) == "(0,1],(2,3]"
    assert str(iv("(0,2],(1,3]")) == "(0,3]"
    assert str(iv("(0,1],(1,2]")) == "(0,2]"  # adjacent halves merge
    assert str(IntervalSet.from_pairs([(0, 0)])) == "empty"


@pytest.mark.parametrize("bad", ["(0,1)", "[0,1]", "(1,0]", "(0;1]", "(0,1] junk", "(,1]"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(InputError):
        iv(bad)


def test_endpoints_must_be_exact():
    with pytest.raises(InputError):
        IntervalSet.from_pairs([(0.25, 1)])
    IntervalSet.from_pairs([(Fraction(1, 4), 1)])  # fine


def test_canonical_constructor_rejects_disorder():
    with pytest.raises(InputError):
        IntervalSet(((Fraction(0), Fraction(2)), (Fraction(1), Fraction(3))))
    with pytest.raises(InputError):
        IntervalSet(((Fraction(1), Fraction(1)),))


# ---- measure and boolean operations ----------------------------------------


def test_measure():
    assert iv("(0,1],(2,3]").measure() == q("2")
    assert iv("(1/3,1/2]").measure() == q("1/6")
    assert iv("(-inf,0]").measure() == INFINITY
    assert IntervalSet.empty().measure() == q("0")
    assert IntervalSet.line().measure() == INFINITY


def test_boolean_ops_exact_cases():
    a, b = iv("(0,2]"), iv("(1,3]")
    assert str(a | b) == "(0,3]"
    assert str(a & b) == "(1,2]"
    assert str(a - b) == "(0,1]"
    assert str(a ^ b) == "(0,1],(2,3]"
    assert str(a.complement()) == "(-inf,0],(2,inf]"
    assert str(iv("(-inf,inf]") - iv("(0,1]")) == "(-inf,0],(1,inf]"


def test_translate():
    assert str(iv("(0,1],(2,3]").translate(Fraction(1, 2))) == "(1/2,3/2],(5/2,7/2]"


grid = st.integers(min_value=-8, max_value=8).map(lambda k: Fraction(k, 2))
pair = st.tuples(grid, grid).map(lambda t: (min(t), max(t)))
isets = st.lists(pair, max_size=4).map(IntervalSet.from_pairs)
points = st.integers(min_value=-35, max_value=35).map(lambda k: Fraction(k, 4))


@given(a=isets, b=isets, x=points)
def test_ops_agree_with_membership(a, b, x):
    assert (a | b).contains(x) == (a.contains(x) or b.contains(x))
    assert (a & b).contains(x) == (a.contains(x) and b.contains(x))
    assert (a - b).contains(x) == (a.contains(x) and not b.contains(x))
    assert (a ^ b).contains(x) == (a.contains(x) != b.contains(x))
    assert a.complement().contains(x) == (not a.contains(x))


@given(a=isets, b=isets)
def test_measure_laws(a, b):
    assert (a | b).measure() + (a & b).measure() == a.measure() + b.measure()
    assert (a ^ b).measure() <= a.measure() + b.measure()


# ---- windowed sets and traces ----------------------------------------------


def test_parse_windowed_set():
    w = parse_windowed_set("periodic 2: (0,1]")
    assert w.is_periodic and w.period == Fraction(2)
    assert str(w) == "periodic 2: (0,1]"
    plain = parse_windowed_set("(0,1]")
    assert not plain.is_periodic


def test_periodic_pattern_must_fit_the_period():
    with pytest.raises(InputError):
        WindowedSet.periodic("2", iv("(1,3]"))
    with pytest.raises(InputError):
        WindowedSet.periodic("2", iv("(-1,0]"))
    with pytest.raises(InputError):
        WindowedSet.periodic("0", iv("(0,1]"))


def test_window_of_periodic_set():
    e = WindowedSet.periodic("2", iv("(0,1]"))
    assert str(window(e, iv("(0,4]"))) == "(0,1],(2,3]"
    assert str(window(e, iv("(-6,6]"))) == "(-6,-5],(-4,-3],(-2,-1],(0,1],(2,3],(4,5]"
    assert str(window(e, iv("(1/2,3/2]"))) == "(1/2,1]"
    assert window(e, IntervalSet.empty()).is_empty()
    with pytest.raises(PreconditionError):
        window(e, iv("(0,inf]"))


def test_local_distance_of_trace_is_zero():
    e = WindowedSet.periodic("2", iv("(0,1]"))
    for probe_text in ("(0,4]", "(-6,6]", "(-7/3,13/4]"):
        probe = iv(probe_text)
        assert interval_local_distance(probe, e, window(e, probe)) == q("0")
    assert interval_local_distance(iv("(0,2]"), e, iv("(0,1]")) == q("0")
    assert interval_local_distance(iv("(0,2]"), e, iv("(1,2]")) == q("2")


# ---- global certificates ----------------------------------------------------


def test_certificate_every_member_is_infinitely_far():
    e = WindowedSet.periodic("2", iv("(0,1]"))
    for member in (IntervalSet.empty(), iv("(0,5]"), iv("(-10,10]"),
                   iv("(-inf,0]"), IntervalSet.line()):
        cert = global_distance_certificate(e, member)
        assert cert.value == INFINITY
        assert cert.tail_mass_left > 0 or cert.tail_mass_right > 0


def test_certificate_tail_masses():
    e = WindowedSet.periodic("2", iv("(0,1]"))
    cert = global_distance_certificate(e, iv("(0,5]"))
    assert (cert.tail_mass_left, cert.tail_mass_right) == (Fraction(1), Fraction(1))
    cert = global_distance_certificate(e, iv("(-inf,0]"))
    assert (cert.tail_mass_left, cert.tail_mass_right) == (Fraction(1), Fraction(1))


def test_certificate_degenerate_patterns_reach_zero():
    full = WindowedSet.periodic("2", iv("(0,2]"))
    assert global_distance_certificate(full, IntervalSet.line()).value == q("0")
    got = global_distance_certificate(full, iv("(-inf,0]"))
    assert got.value == INFINITY and got.tail_mass_right == Fraction(2)
    empty = WindowedSet.periodic("2", IntervalSet.empty())
    assert global_distance_certificate(empty, IntervalSet.empty()).value == q("0")
    assert global_distance_certificate(empty, iv("(0,3]")).value == q("3")


def test_certificate_reported_core_is_exact():
    full = WindowedSet.periodic("2", iv("(0,2]"))
    cert = global_distance_certificate(full, iv("(0,4]").complement())
    assert cert.value == q("4") and str(cert.core) == "(0,4]"
    assert "tail masses vanish" in cert.describe()


def test_certificate_needs_a_periodic_subject():
    with pytest.raises(PreconditionError):
        global_distance_certificate(WindowedSet.plain(iv("(0,1]")), IntervalSet.empty())


def test_demo_report():
    e = parse_windowed_set("periodic 2: (0,1]")
    rep = demo_local_approximability(
        e, [iv("(-6,6]")], [IntervalSet.empty(), iv("(0,5]")]
    )
    assert rep.ok
    assert all(entry.distance == q("0") for entry in rep.entries)
    assert len(rep.certificates) == 2
    assert all(cert.value == INFINITY for _, cert in rep.certificates)
