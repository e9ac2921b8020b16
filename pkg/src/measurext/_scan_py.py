"""Pure-Python scan kernels over bitmask-encoded set systems.

Every function here works on plain integers: a subset of an n-element
universe is the n-bit mask of its characteristic vector, ring members are
mask lists, and measure values are integers (weights pre-scaled by a common
denominator; infinite atoms tracked in a separate index mask).  The compiled
module ``_fastscan`` implements the same API; callers select one at import
time and may mix per instance.

Verdict scans evaluate the class quantifiers literally, with two sound
shortcuts: a candidate witness is tried first (distances are nonnegative, so
one zero settles a "min = 0" or an existential question), and quantifier
loops exit on the first decisive element.
"""

from __future__ import annotations

from typing import Sequence


def closure(seeds: Sequence[int], cap: int) -> list[int] | None:
    """Close ``seeds`` (plus the empty set) under union/intersection/difference.

    Returns the sorted member masks, or None once the member count exceeds
    ``cap``.
    """
    members = {0}
    members.update(seeds)
    if len(members) > cap:
        return None
    frontier = list(members)
    while frontier:
        produced = []
        snapshot = list(members)
        for x in frontier:
            for y in snapshot:
                for z in (x | y, x & y, x & ~y, y & ~x):
                    if z not in members:
                        members.add(z)
                        produced.append(z)
                        if len(members) > cap:
                            return None
        frontier = produced
    return sorted(members)


def refine_atoms(members: Sequence[int]) -> list[int]:
    """Common refinement of the members, restricted to their union.

    The result is the list of atom masks, pairwise disjoint, sorted by their
    lowest element so atom numbering is canonical.
    """
    carrier = 0
    for m in members:
        carrier |= m
    blocks = [carrier] if carrier else []
    for m in members:
        nxt = []
        for b in blocks:
            inner = b & m
            outer = b & ~m
            if inner and outer:
                nxt.append(inner)
                nxt.append(outer)
            else:
                nxt.append(b)
        blocks = nxt
    blocks.sort(key=lambda b: b & -b)
    return blocks


def atom_masks(n: int, atoms: Sequence[int]) -> list[int]:
    """For every subset mask s of the universe, the atom-index mask of atoms meeting s."""
    full = 1 << n
    elem_bit = [0] * n
    for i, a in enumerate(atoms):
        abit = 1 << i
        rest = a
        while rest:
            low = rest & -rest
            elem_bit[low.bit_length() - 1] = abit
            rest ^= low
    out = [0] * full
    for s in range(1, full):
        low = s & -s
        out[s] = out[s ^ low] | elem_bit[low.bit_length() - 1]
    return out


def union_table(atoms: Sequence[int]) -> list[int]:
    """For every atom-index mask, the union of those atoms as a universe mask."""
    out = [0] * (1 << len(atoms))
    for a in range(1, 1 << len(atoms)):
        low = a & -a
        out[a] = out[a ^ low] | atoms[low.bit_length() - 1]
    return out


def mass_table(weights: Sequence[int], inf_mask: int) -> list[int]:
    """For every atom-index mask, the sum of its finite scaled weights.

    Infinite atoms contribute 0 here; callers must test ``mask & inf_mask``
    before trusting the finite part.
    """
    out = [0] * (1 << len(weights))
    for a in range(1, 1 << len(weights)):
        low = a & -a
        i = low.bit_length() - 1
        w = 0 if (inf_mask >> i) & 1 else weights[i]
        out[a] = out[a ^ low] + w
    return out


def scan_m(
    n: int,
    members: Sequence[int],
    finfam: Sequence[int],
    amask: Sequence[int],
    mass: Sequence[int],
    union_tab: Sequence[int],
    memset: frozenset,
) -> bytearray:
    """Local-approximability verdict per subset.

    E is in the class iff for every finite-measure member A the minimum of
    the localized distance d_A(E, B) over ring members B is exactly 0.  All
    d_A values are finite because A carries no infinite atoms.
    """
    full = 1 << n
    out = bytearray(full)
    for e in range(full):
        ok = 1
        for a_set in finfam:
            cand = union_tab[amask[a_set & e]]
            if cand in memset and mass[amask[a_set & (e ^ cand)]] == 0:
                continue
            best = -1
            for b in members:
                v = mass[amask[a_set & (e ^ b)]]
                if v == 0:
                    best = 0
                    break
                if best < 0 or v < best:
                    best = v
            if best != 0:
                ok = 0
                break
        out[e] = ok
    return out


def scan_mca(
    n: int,
    amask: Sequence[int],
    mass: Sequence[int],
    inf_mask: int,
    carrier: int,
) -> bytearray:
    """Caratheodory verdict per subset: outer measure splits additively on every probe.

    Probes F outside the carrier, or touching an infinite atom, satisfy the
    equation automatically (both sides are infinite because the probe's two
    halves jointly meet the same atoms), so only covered finite probes are
    compared.
    """
    full = 1 << n
    notcar = (full - 1) & ~carrier
    out = bytearray(full)
    for e in range(full):
        ec = e ^ (full - 1)
        good = 1
        for f in range(full):
            if f & notcar:
                continue
            a = amask[f]
            if a & inf_mask:
                continue
            if mass[a] != mass[amask[f & e]] + mass[amask[f & ec]]:
                good = 0
                break
        out[e] = good
    return out


def scan_mca_fin(
    n: int,
    finfam: Sequence[int],
    amask: Sequence[int],
    mass: Sequence[int],
) -> bytearray:
    """Caratheodory verdict with probes restricted to finite-measure members."""
    full = 1 << n
    out = bytearray(full)
    for e in range(full):
        ec = e ^ (full - 1)
        good = 1
        for f in finfam:
            if mass[amask[f]] != mass[amask[f & e]] + mass[amask[f & ec]]:
                good = 0
                break
        out[e] = good
    return out


def scan_mco(
    n: int,
    members: Sequence[int],
    amask: Sequence[int],
    mass: Sequence[int],
    inf_mask: int,
    carrier: int,
    union_tab: Sequence[int],
    memset: frozenset,
    k: int,
) -> bytearray:
    """Completion verdict per subset: some member is at global distance 0.

    Any set sticking out of the carrier has infinite distance to every
    member.  The candidate is the union of atoms fully inside E.
    """
    full = 1 << n
    kmask = (1 << k) - 1
    out = bytearray(full)
    for e in range(full):
        if e & ~carrier:
            continue
        contained = kmask & ~amask[e ^ (full - 1)]
        cand = union_tab[contained]
        x = amask[e ^ cand]
        if cand in memset and not (x & inf_mask) and mass[x] == 0:
            out[e] = 1
            continue
        for s in members:
            x = amask[e ^ s]
            if not (x & inf_mask) and mass[x] == 0:
                out[e] = 1
                break
    return out


def scan_mco_fin(
    n: int,
    members: Sequence[int],
    finfam: Sequence[int],
    amask: Sequence[int],
    mass: Sequence[int],
    union_tab: Sequence[int],
    memset: frozenset,
) -> bytearray:
    """Localized completion verdict: per finite member A, some member is at d_A-distance 0."""
    full = 1 << n
    out = bytearray(full)
    for e in range(full):
        ok = 1
        for a_set in finfam:
            cand = union_tab[amask[a_set & e]]
            if cand in memset and mass[amask[a_set & (e ^ cand)]] == 0:
                continue
            found = 0
            for s in members:
                if mass[amask[a_set & (e ^ s)]] == 0:
                    found = 1
                    break
            if not found:
                ok = 0
                break
        out[e] = ok
    return out
