"""Outer and inner measures and the localized approximation distances.

These are the literal definitions, computed over the pre-measure's own
member table without the kernel lookup tables, so they stay an independent
route the kernels can be checked against:

* the outer measure of E is the infimum of total measure over member covers
  of E; over a finite ring that infimum is attained by the smallest member
  containing E (the intersection of all containing members), and is infinite
  when no member contains E;
* the inner measure of E is m(space) - m*(space minus E), defined when the
  space is a member of finite measure;
* the distance localized at a finite-measure member A is the outer measure
  of A intersected with the symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, MeasureExtError, PreconditionError
from .premeasure import PreMeasure
from .quantity import INFINITY, ExtendedQuantity, qsum
from .sets import PointSet


@dataclass(frozen=True)
class CoverWitness:
    """A member cover attaining the outer measure, with its exact total."""

    cover: tuple[PointSet, ...]
    total: ExtendedQuantity
    disjoint: bool


def _check_subject(m: PreMeasure, e: PointSet) -> None:
    if e.universe_size != m.ring.universe_size:
        raise InputError(
            f"set over a {e.universe_size}-point universe against a ring over "
            f"{m.ring.universe_size} points"
        )


def outer_measure(m: PreMeasure, e: PointSet) -> tuple[ExtendedQuantity, CoverWitness | None]:
    """Outer measure of ``e`` with an attaining cover, or (inf, None) when uncovered.

    The witness is the atom decomposition of the smallest containing member:
    a disjoint member cover whose total equals the outer measure exactly.
    """
    _check_subject(m, e)
    hull_bits = None
    for member in m.ring.members:
        if not (e.bits & ~member.bits):
            hull_bits = member.bits if hull_bits is None else hull_bits & member.bits
    if hull_bits is None:
        return INFINITY, None
    hull = PointSet(e.universe_size, hull_bits)
    value = m.value(hull)
    parts = tuple(a for a in m.atoms if a.bits & hull_bits)
    total = qsum(m.value(a) for a in parts)
    if total != value:
        raise MeasureExtError(
            f"internal: atom decomposition of {hull} sums to {total}, not {value}"
        )
    return value, CoverWitness(cover=parts, total=total, disjoint=True)


def inner_measure(m: PreMeasure, e: PointSet) -> ExtendedQuantity:
    """Inner measure of ``e``: total measure minus the outer measure of the complement.

    Needs the space to be a member of finite measure.
    """
    _check_subject(m, e)
    space = m.ring.universe
    if space not in m.ring:
        raise PreconditionError("inner measure needs the space to be a ring member")
    total = m.value(space)
    if total.is_infinite():
        raise PreconditionError("inner measure needs the space to have finite measure")
    if e.bits & ~space.bits:
        raise InputError(f"{e} is not contained in the space {space}")
    rest, _ = outer_measure(m, space - e)
    return total - rest


def local_distance(
    m: PreMeasure, probe: PointSet, e: PointSet, f: PointSet
) -> ExtendedQuantity:
    """Distance between ``e`` and ``f`` localized at the finite-measure member ``probe``."""
    _check_subject(m, e)
    _check_subject(m, f)
    if probe not in m.ring:
        raise PreconditionError(f"probe {probe} is not a ring member")
    if m.value(probe).is_infinite():
        raise PreconditionError(f"probe {probe} has infinite measure")
    value, _ = outer_measure(m, probe & (e ^ f))
    return value


def global_distance(m: PreMeasure, e: PointSet, f: PointSet) -> ExtendedQuantity:
    """Outer measure of the symmetric difference; may be infinite."""
    _check_subject(m, e)
    _check_subject(m, f)
    value, _ = outer_measure(m, e ^ f)
    return value
