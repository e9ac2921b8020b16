"""Five-class decisions, the extension, hulls, and uniqueness analysis."""

import pytest

from measurext import (
    INFINITY,
    ZERO,
    ExtendedQuantity,
    PointSet,
    PreMeasure,
    class_maps,
    classify,
    extend,
    generate_ring,
    local_inner_outer,
    measurable_hull,
    uniqueness_report,
    validate_premeasure,
)
from measurext.errors import InputError, ResourceLimitError


def ps(n, *elements):
    return PointSet.from_elements(n, elements)


def q(text):
    return ExtendedQuantity.of(text)


# ---- classification -------------------------------------------------------


def test_f1_singleton_fails_every_class(f1):
    c = classify(f1, ps(4, 1))
    assert c.verdicts() == {
        "m": False, "m_ca": False, "m_ca_fin": False, "m_co": False, "m_co_fin": False,
    }
    assert str(c.ca_refuter.probe) == "{1,2}"
    assert (c.ca_refuter.whole, c.ca_refuter.part_in, c.ca_refuter.part_out) == (
        q("1"), q("1"), q("1"),
    )
    assert str(c.ca_fin_refuter.probe) == "{1,2}"
    assert str(c.local_refuter.probe) == "{1,2}"
    assert c.local_refuter.best_distance == q("1")
    assert str(c.co_fin_refuter) == "{1,2}"
    assert c.co_witness is None and c.co_best.best_distance == q("1")
    assert c.local_witnesses == () and c.co_fin_witnesses == ()


def test_f1_members_pass_every_class(f1):
    for member in f1.ring.members:
        c = classify(f1, member)
        assert all(c.verdicts().values()), str(member)
        assert c.co_witness == member
        assert len(c.local_witnesses) == len(f1.finite_family)
        for w in c.local_witnesses:
            assert w.approximant in f1.ring


def test_f2_null_piece_is_measurable_with_witness(f2):
    c = classify(f2, ps(3, 2))
    assert all(c.verdicts().values())
    # the witness is a member at global distance zero
    assert c.co_witness in f2.ring
    diff = c.co_witness ^ ps(3, 2)
    from measurext import outer_measure

    value, _ = outer_measure(f2, diff)
    assert value == ZERO


def test_f3_local_classes_accept_what_completion_rejects(f3):
    c = classify(f3, ps(2, 1))
    assert c.verdicts() == {
        "m": True, "m_ca": True, "m_ca_fin": True, "m_co": False, "m_co_fin": True,
    }
    assert c.co_best.best_distance == INFINITY


def test_probe_verdicts_match_restriction_route(f1):
    c = classify(f1, ps(4, 1))
    by_probe = {str(v.probe): v for v in c.probe_verdicts}
    assert set(by_probe) == {"{}", "{1,2}", "{3,4}", "{1,2,3,4}"}
    v = by_probe["{1,2}"]
    assert (v.outer, v.inner, v.measurable) == (q("1"), q("0"), False)
    for verdict in c.probe_verdicts:
        o, i, ok = local_inner_outer(f1, verdict.probe, ps(4, 1))
        assert (o, i, ok) == (verdict.outer, verdict.inner, verdict.measurable)


def test_classify_cap(f1):
    with pytest.raises(ResourceLimitError, match="cap"):
        classify(f1, ps(4, 1), universe_cap=3)


def test_classify_universe_mismatch(f1):
    with pytest.raises(InputError):
        classify(f1, ps(3, 1))


# ---- verdict maps ---------------------------------------------------------


def test_class_maps_f1(f1):
    maps = class_maps(f1)
    members = {m.bits for m in f1.ring.members}
    for s in range(16):
        expected = s in members
        assert bool(maps.m[s]) == expected
        assert bool(maps.m_ca[s]) == expected
        assert bool(maps.m_ca_fin[s]) == expected
        assert bool(maps.m_co[s]) == expected
        assert bool(maps.m_co_fin[s]) == expected


def test_class_maps_f3_separates_completion(f3):
    maps = class_maps(f3)
    assert bytes(maps.m) == b"\x01\x01\x01\x01"
    assert bytes(maps.m_co) == b"\x01\x00\x00\x01"
    assert bytes(maps.m_ca) == bytes(maps.m)
    assert bytes(maps.m_ca_fin) == bytes(maps.m)
    assert bytes(maps.m_co_fin) == bytes(maps.m)


def test_class_maps_agree_with_classify(f2):
    maps = class_maps(f2)
    for s in range(8):
        c = classify(f2, PointSet(3, s))
        assert bool(maps.m[s]) == c.in_m
        assert bool(maps.m_co[s]) == c.in_m_co


# ---- extension ------------------------------------------------------------


def test_extend_f1_is_the_ring_itself(f1):
    ext = extend(f1)
    assert ext.members == f1.ring.members
    assert ext.values == f1.values
    assert ps(4, 1) not in ext
    with pytest.raises(InputError):
        ext.value(ps(4, 1))


def test_extend_f2_reaches_the_power_set(f2):
    ext = extend(f2)
    assert len(ext) == 8
    assert ext.value(ps(3, 2)) == ZERO
    assert ext.value(ps(3, 1, 3)) == q("1")
    again = validate_premeasure(ext.sigma_algebra, dict(zip(ext.members, ext.values)))
    assert again.ok
    as_m = ext.as_premeasure()
    assert extend(as_m).members == ext.members


def test_extend_f3_measures_every_subset(f3):
    ext = extend(f3)
    assert len(ext) == 4
    assert ext.value(ps(2, 1)) == INFINITY
    assert ext.value(PointSet.empty(2)) == ZERO


def test_extend_cap(f1):
    with pytest.raises(ResourceLimitError):
        extend(f1, universe_cap=2)


# ---- measurable hulls -----------------------------------------------------


def test_hull_f1(f1):
    assert measurable_hull(f1, ps(4, 1)) == (ps(4, 1, 2), q("1"))
    assert measurable_hull(f1, ps(4, 1, 3)) == (PointSet.space(4), q("2"))
    assert measurable_hull(f1, PointSet.empty(4)) == (PointSet.empty(4), ZERO)
    assert measurable_hull(f1, ps(4, 2, 3)) == (PointSet.space(4), q("2"))


def test_hull_uncovered_set_degenerates():
    ring = generate_ring([ps(3, 1)], universe_size=3)
    m = PreMeasure.from_table(ring, {PointSet.empty(3): "0", ps(3, 1): "1/2"})
    hull, value = measurable_hull(m, ps(3, 2))
    assert hull is None and value == INFINITY


def test_hull_is_minimal_over_measurable_supersets(f1, f2, f3):
    from measurext import outer_measure

    for m in (f1, f2, f3):
        ext = extend(m)
        n = m.ring.universe_size
        for bits in range(1 << n):
            e = PointSet(n, bits)
            hull, value = measurable_hull(m, e)
            got, _ = outer_measure(m, e)
            assert value == got
            if hull is None:
                continue
            assert hull in ext and e.issubset(hull)
            assert ext.value(hull) == value
            for member in ext.members:
                if e.issubset(member):
                    assert value <= ext.value(member)


# ---- uniqueness -----------------------------------------------------------


def test_uniqueness_f1_sigma_finite_forces_the_extension(f1):
    rep = uniqueness_report(f1)
    assert rep.unique and rep.sigma_finite
    assert [str(p) for p in rep.finite_partition] == ["{1,2}", "{3,4}"]
    assert rep.free_atoms == () and rep.alternative is None


def test_uniqueness_f2_null_atoms_still_unique(f2):
    rep = uniqueness_report(f2)
    assert rep.unique and rep.sigma_finite
    assert [str(p) for p in rep.finite_partition] == ["{1}", "{2,3}"]


def test_uniqueness_f3_exhibits_a_second_extension(f3):
    rep = uniqueness_report(f3)
    assert not rep.unique and not rep.sigma_finite
    assert rep.finite_partition is None
    assert [str(a) for a in rep.free_atoms] == ["{1}", "{2}"]
    assert rep.alternative is not None and rep.alternative != rep.extension.values
    # the alternative is itself a valid measure agreeing on the ring
    alt_table = dict(zip(rep.extension.members, rep.alternative))
    assert validate_premeasure(rep.extension.sigma_algebra, alt_table).ok
    for member, value in zip(f3.ring.members, f3.values):
        assert alt_table[member] == value
    assert alt_table[ps(2, 1)] == ZERO
    assert alt_table[ps(2, 2)] == INFINITY


def test_uniqueness_uncovered_point_breaks_it():
    ring = generate_ring([ps(2, 1)], universe_size=2)
    m = PreMeasure.from_table(ring, {PointSet.empty(2): "0", ps(2, 1): "1"})
    rep = uniqueness_report(m)
    assert not rep.unique and not rep.sigma_finite
    assert [str(a) for a in rep.free_atoms] == ["{2}"]
