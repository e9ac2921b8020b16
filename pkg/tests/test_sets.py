"""Point sets, ring generation, exact closure validation, atoms, disjointify."""

import pytest

from measurext import PointSet, SetRing, atoms_of, disjointify, generate_ring, sym_diff
from measurext.errors import InputError, ResourceLimitError


def ps(n, *elements):
    return PointSet.from_elements(n, elements)


def test_point_set_basics():
    a = ps(4, 1, 3)
    assert a.elements() == (1, 3)
    assert len(a) == 2 and 3 in a and 2 not in a
    assert str(a) == "{1,3}"
    assert str(PointSet.empty(4)) == "{}"
    assert list(a) == [1, 3]
    assert not PointSet.empty(4) and a


def test_point_set_operators():
    a, b = ps(4, 1, 2), ps(4, 2, 3)
    assert (a | b) == ps(4, 1, 2, 3)
    assert (a & b) == ps(4, 2)
    assert (a - b) == ps(4, 1)
    assert (a ^ b) == ps(4, 1, 3) == sym_diff(a, b)
    assert a.complement() == ps(4, 3, 4)
    assert ps(4, 1).issubset(a) and not a.issubset(b)
    assert ps(4, 1).isdisjoint(ps(4, 2))


def test_point_set_rejects_out_of_range():
    with pytest.raises(InputError):
        ps(3, 4)
    with pytest.raises(InputError):
        PointSet(3, 1 << 3)
    with pytest.raises(InputError):
        ps(3, 1) | ps(4, 1)


def test_generate_ring_f1_shape():
    ring = generate_ring([ps(4, 1, 2), ps(4, 3, 4)], force_algebra=True)
    assert [str(s) for s in ring.members] == ["{}", "{1,2}", "{3,4}", "{1,2,3,4}"]
    assert ring.is_algebra
    ring.ensure_valid()


def test_generate_ring_without_algebra_keeps_space_out():
    ring = generate_ring([ps(3, 1)], universe_size=3)
    assert [str(s) for s in ring.members] == ["{}", "{1}"]
    assert not ring.is_algebra
    ring.ensure_valid()


def test_generate_ring_needs_some_size():
    with pytest.raises(InputError):
        generate_ring([])
    ring = generate_ring([], force_algebra=True, universe_size=2)
    assert [str(s) for s in ring.members] == ["{}", "{1,2}"]


def test_generate_ring_member_cap():
    gens = [ps(12, i) for i in range(1, 13)]
    with pytest.raises(ResourceLimitError):
        generate_ring(gens, member_cap=100)


def test_set_ring_requires_empty_set_and_no_duplicates():
    space = PointSet.space(2)
    with pytest.raises(InputError):
        SetRing(space, (ps(2, 1),))
    with pytest.raises(InputError):
        SetRing(space, (PointSet.empty(2), ps(2, 1), ps(2, 1)))


def test_ensure_valid_detects_missing_member():
    ring = generate_ring([ps(4, 1, 2), ps(4, 3, 4)], force_algebra=True)
    broken = SetRing(ring.universe, tuple(m for m in ring.members if str(m) != "{3,4}"))
    with pytest.raises(InputError, match="not closed"):
        broken.ensure_valid()


def test_atoms_partition_and_decompose():
    ring = generate_ring([ps(4, 1, 2), ps(4, 2, 3)], force_algebra=True)
    part = atoms_of(ring)
    assert [str(a) for a in part] == ["{1}", "{2}", "{3}", "{4}"]
    assert str(part.carrier) == "{1,2,3,4}"
    assert part.decompose(ps(4, 1, 2)) == (ps(4, 1), ps(4, 2))


def test_atoms_skip_uncovered_points():
    ring = generate_ring([ps(3, 1)], universe_size=3)
    part = atoms_of(ring)
    assert [str(a) for a in part] == ["{1}"]
    assert str(part.carrier) == "{1}"


def test_disjointify_preserves_running_unions():
    ring = generate_ring([ps(4, 1, 2), ps(4, 2, 3)], force_algebra=True)
    seq = [ps(4, 1, 2), ps(4, 2, 3), ps(4, 1, 2, 3)]
    out = disjointify(ring, seq)
    assert [str(s) for s in out] == ["{1,2}", "{3}", "{}"]
    union = PointSet.empty(4)
    for given, piece in zip(seq, out):
        assert piece.issubset(given)
        union = union | piece
    assert union == ps(4, 1, 2, 3)


def test_disjointify_rejects_non_members():
    ring = generate_ring([ps(3, 1)], universe_size=3)
    with pytest.raises(InputError):
        disjointify(ring, [ps(3, 2)])
