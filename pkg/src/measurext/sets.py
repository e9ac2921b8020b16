"""Finite point sets, set rings, and atom partitions over a labeled universe.

The universe of size n is the label set {1, ..., n}; a subset is stored as an
n-bit mask with bit i-1 standing for label i.  A ring here is a nonempty
finite family containing the empty set and closed under union, intersection,
and difference; because the family is finite, closure under those operations
makes it exactly the family of all unions of its atom partition, which is
what `ensure_valid` checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from . import kernels
from .errors import InputError, ResourceLimitError

DEFAULT_MEMBER_CAP = 65536


@dataclass(frozen=True, order=True)
class PointSet:
    """An immutable subset of {1..universe_size}, encoded as a bitmask."""

    universe_size: int
    bits: int

    def __post_init__(self):
        if self.universe_size < 0:
            raise InputError("universe size must be nonnegative")
        if self.bits < 0 or self.bits >> self.universe_size:
            raise InputError(
                f"bitmask {self.bits:#x} does not fit a universe of size {self.universe_size}"
            )

    @classmethod
    def from_elements(cls, universe_size: int, elements: Iterable[int]) -> "PointSet":
        bits = 0
        for e in elements:
            if not 1 <= e <= universe_size:
                raise InputError(
                    f"element {e} outside universe {{1..{universe_size}}}"
                )
            bits |= 1 << (e - 1)
        return cls(universe_size, bits)

    @classmethod
    def empty(cls, universe_size: int) -> "PointSet":
        return cls(universe_size, 0)

    @classmethod
    def space(cls, universe_size: int) -> "PointSet":
        return cls(universe_size, (1 << universe_size) - 1)

    def elements(self) -> tuple[int, ...]:
        out = []
        rest = self.bits
        while rest:
            low = rest & -rest
            out.append(low.bit_length())
            rest ^= low
        return tuple(out)

    def _check_peer(self, other: "PointSet") -> None:
        if self.universe_size != other.universe_size:
            raise InputError(
                f"universe sizes differ: {self.universe_size} vs {other.universe_size}"
            )

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.universe_size and (self.bits >> (element - 1)) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return PointSet(self.universe_size, self.bits | other.bits)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return PointSet(self.universe_size, self.bits & other.bits)

    def __xor__(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return PointSet(self.universe_size, self.bits ^ other.bits)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return PointSet(self.universe_size, self.bits & ~other.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._check_peer(other)
        return not (self.bits & ~other.bits)

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check_peer(other)
        return not (self.bits & other.bits)

    def complement(self) -> "PointSet":
        """Complement within the full space {1..universe_size}."""
        return PointSet(
            self.universe_size, ((1 << self.universe_size) - 1) ^ self.bits
        )

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"

    def __repr__(self) -> str:
        return f"PointSet({self.universe_size}, {self})"


def sym_diff(a: PointSet, b: PointSet) -> PointSet:
    """Symmetric difference; the 'addition' the localized distances measure."""
    return a ^ b


@dataclass(frozen=True)
class SetRing:
    """A finite ring of sets over a space.

    ``universe`` is the ring's space: the full label set for top-level rings,
    or the restriction window for rings produced by restriction.  Members are
    kept sorted by bitmask; construction normalizes order and enforces the
    cheap shape checks, while `ensure_valid` proves closure exactly.
    """

    universe: PointSet
    members: tuple[PointSet, ...]

    def __post_init__(self):
        n = self.universe.universe_size
        seen = set()
        for m in self.members:
            if m.universe_size != n:
                raise InputError("ring member lives in a different universe")
            if m.bits & ~self.universe.bits:
                raise InputError(f"member {m} is not contained in the space {self.universe}")
            if m.bits in seen:
                raise InputError(f"duplicate member {m}")
            seen.add(m.bits)
        if 0 not in seen:
            raise InputError("ring must contain the empty set")
        object.__setattr__(
            self, "members", tuple(sorted(self.members, key=lambda m: m.bits))
        )

    @cached_property
    def _member_bits(self) -> frozenset:
        return frozenset(m.bits for m in self.members)

    @property
    def universe_size(self) -> int:
        return self.universe.universe_size

    @property
    def is_algebra(self) -> bool:
        return self.universe.bits in self._member_bits

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: PointSet) -> bool:
        return (
            item.universe_size == self.universe_size
            and item.bits in self._member_bits
        )

    def member_masks(self) -> list[int]:
        return [m.bits for m in self.members]

    def ensure_valid(self) -> "SetRing":
        """Prove closure under union/intersection/difference, or raise InputError.

        Every member is a union of refinement atoms; a closed family must
        contain all 2^k such unions, and conversely a family of all atom
        unions is closed.  Comparing the member count against 2^k is
        therefore a complete test.
        """
        atoms = kernels.refine_atoms(self.member_masks())
        if len(self.members) != (1 << len(atoms)):
            raise InputError(
                "family is not closed under union/intersection/difference "
                f"({len(self.members)} members, {len(atoms)} atoms)"
            )
        return self


@dataclass(frozen=True)
class AtomPartition:
    """The atoms of a ring: minimal nonempty members, partitioning the carrier."""

    atoms: tuple[PointSet, ...]

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.atoms)

    @cached_property
    def carrier(self) -> PointSet:
        if not self.atoms:
            return PointSet.empty(0)
        out = self.atoms[0]
        for a in self.atoms[1:]:
            out = out | a
        return out

    def decompose(self, member: PointSet) -> tuple[PointSet, ...]:
        """Write ``member`` as its disjoint atom cover; raises if atoms straddle it."""
        parts = []
        rest = member.bits
        for a in self.atoms:
            if a.bits & member.bits:
                if a.bits & ~member.bits:
                    raise InputError(f"atom {a} straddles {member}")
                parts.append(a)
                rest &= ~a.bits
        if rest:
            raise InputError(f"{member} is not covered by the atoms")
        return tuple(parts)


def atoms_of(ring: SetRing) -> AtomPartition:
    """Atom partition of the ring's carrier, canonically ordered by lowest label."""
    n = ring.universe_size
    masks = kernels.refine_atoms(ring.member_masks())
    return AtomPartition(tuple(PointSet(n, a) for a in masks))


def generate_ring(
    generators: Iterable[PointSet],
    force_algebra: bool = False,
    *,
    universe_size: int | None = None,
    member_cap: int = DEFAULT_MEMBER_CAP,
) -> SetRing:
    """Smallest ring containing the generators (an algebra if ``force_algebra``).

    The space is the full label universe; its size comes from the generators
    or from ``universe_size`` when there are none.  Raises
    ResourceLimitError when the closure would exceed ``member_cap`` members.
    """
    gens = list(generators)
    sizes = {g.universe_size for g in gens}
    if universe_size is not None:
        sizes.add(universe_size)
    if len(sizes) > 1:
        raise InputError(f"generators disagree on universe size: {sorted(sizes)}")
    if not sizes:
        raise InputError("cannot infer the universe: no generators and no universe_size")
    n = sizes.pop()
    space = PointSet.space(n)
    seeds = [g.bits for g in gens]
    if force_algebra:
        seeds.append(space.bits)
    masks = kernels.closure(seeds, member_cap)
    if masks is None:
        raise ResourceLimitError(
            f"ring closure exceeded the member cap of {member_cap}"
        )
    return SetRing(space, tuple(PointSet(n, b) for b in masks))


def disjointify(ring: SetRing, sets: Iterable[PointSet]) -> tuple[PointSet, ...]:
    """Replace a member sequence by disjoint members with the same running unions.

    The i-th output is the i-th input minus everything before it, so the
    partial unions agree and the results stay in the ring.
    """
    out = []
    so_far = PointSet.empty(ring.universe_size)
    for s in sets:
        if s not in ring:
            raise InputError(f"{s} is not a ring member")
        piece = s - so_far
        if piece not in ring:
            raise InputError(f"difference {piece} escaped the ring; family is not closed")
        out.append(piece)
        so_far = so_far | s
    return tuple(out)
