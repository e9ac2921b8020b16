"""Kernel backend selection and per-instance scan tables.

The compiled module ``measurext._fastscan`` and the pure module
``measurext._scan_py`` expose the same functions.  ``DEFAULT`` points at the
compiled one when it imported cleanly (and ``MEASUREXT_PURE_SCAN`` is not
set); instances whose scaled weights do not fit the compiled kernels' 64-bit
arithmetic fall back to the pure module on their own.

``ScanTables`` converts a ring with exact rational atom weights into the
integer tables the scans consume: weights are multiplied by the least common
denominator so finite masses stay exact integers, and infinite atoms are
tracked by index mask.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import cached_property

from . import _scan_py
from .quantity import INFINITY, ExtendedQuantity

try:  # compiled twin; optional
    from . import _fastscan  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _fastscan = None

if os.environ.get("MEASUREXT_PURE_SCAN"):
    _fastscan = None

PURE = _scan_py
COMPILED = _fastscan
DEFAULT = _fastscan if _fastscan is not None else _scan_py
BACKEND = "compiled" if _fastscan is not None else "pure"

# Compiled kernels sum masses in signed 64-bit integers; stay clear of the edge.
_MASS_LIMIT = 1 << 62
_MASK_LIMIT = 62


def _mask_impl(masks):
    if DEFAULT is not PURE and any(s.bit_length() > _MASK_LIMIT for s in masks):
        return PURE
    return DEFAULT


def closure(seeds, cap):
    seeds = list(seeds)
    return _mask_impl(seeds).closure(seeds, cap)


def refine_atoms(members):
    members = list(members)
    return _mask_impl(members).refine_atoms(members)


class ScanTables:
    """Precomputed lookup tables for one measured ring over an n-element universe.

    Parameters are plain data so both kernel backends and the engine-level
    oracle can be checked against the same object: ``members`` are sorted
    member masks, ``atoms`` the canonical atom masks, ``weights`` the exact
    atom measures.
    """

    def __init__(
        self,
        n: int,
        members: list[int],
        atoms: list[int],
        weights: tuple[ExtendedQuantity, ...],
    ):
        self.n = n
        self.full = 1 << n
        self.members = members
        self.memset = frozenset(members)
        self.atoms = atoms
        self.k = len(atoms)
        self.weights = weights

        inf_mask = 0
        denom = 1
        for i, w in enumerate(weights):
            if w.is_infinite():
                inf_mask |= 1 << i
            else:
                denom = math.lcm(denom, w.finite.denominator)
        scaled = [
            0 if w.is_infinite() else int(w.finite * denom) for w in weights
        ]
        self.inf_mask = inf_mask
        self.denom = denom
        self.scaled = scaled

        total = sum(scaled)
        fits = total < _MASS_LIMIT and n <= _MASK_LIMIT and self.k <= _MASK_LIMIT
        self.impl = DEFAULT if fits else PURE
        self.backend = "compiled" if self.impl is _fastscan else "pure"

        self.amask = self.impl.atom_masks(n, atoms)
        self.union_tab = self.impl.union_table(atoms)
        self.mass = self.impl.mass_table(scaled, inf_mask)
        carrier = 0
        for a in atoms:
            carrier |= a
        self.carrier = carrier
        self.kmask = (1 << self.k) - 1
        self.finfam = [x for x in members if not (self.amask[x] & inf_mask)]

    # -- exact value reconstruction -------------------------------------

    def covered(self, s: int) -> bool:
        return not (s & ~self.carrier)

    def outer(self, s: int) -> ExtendedQuantity:
        """m*(s): sum of the weights of atoms meeting s; infinite when uncovered."""
        if s & ~self.carrier:
            return INFINITY
        a = self.amask[s]
        if a & self.inf_mask:
            return INFINITY
        return ExtendedQuantity(Fraction(self.mass[a], self.denom))

    def contained_amask(self, s: int) -> int:
        """Atom-index mask of atoms entirely inside s."""
        return self.kmask & ~self.amask[self.carrier & ~s]

    def inner_within(self, a_set: int, e: int) -> ExtendedQuantity:
        """Largest member mass inside ``a_set & e`` (used for finite probes)."""
        a = self.contained_amask(a_set & e)
        if a & self.inf_mask:
            return INFINITY
        return ExtendedQuantity(Fraction(self.mass[a], self.denom))

    def qty(self, scaled_mass: int) -> ExtendedQuantity:
        return ExtendedQuantity(Fraction(scaled_mass, self.denom))

    # -- bulk verdict maps ----------------------------------------------

    @cached_property
    def map_m(self) -> bytearray:
        return self.impl.scan_m(
            self.n, self.members, self.finfam, self.amask, self.mass,
            self.union_tab, self.memset,
        )

    @cached_property
    def map_mca(self) -> bytearray:
        return self.impl.scan_mca(
            self.n, self.amask, self.mass, self.inf_mask, self.carrier,
        )

    @cached_property
    def map_mca_fin(self) -> bytearray:
        return self.impl.scan_mca_fin(self.n, self.finfam, self.amask, self.mass)

    @cached_property
    def map_mco(self) -> bytearray:
        return self.impl.scan_mco(
            self.n, self.members, self.amask, self.mass, self.inf_mask,
            self.carrier, self.union_tab, self.memset, self.k,
        )

    @cached_property
    def map_mco_fin(self) -> bytearray:
        return self.impl.scan_mco_fin(
            self.n, self.members, self.finfam, self.amask, self.mass,
            self.union_tab, self.memset,
        )
