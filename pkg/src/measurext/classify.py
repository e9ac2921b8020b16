"""Measurability classes, the extension they carry, hulls, and uniqueness.

Five classes of subsets are decided for a measured ring, all by literal
evaluation of their definitions over the finite universe:

* locally approximable sets: for every finite-measure member A, ring members
  come d_A-arbitrarily close (distance exactly 0 in the finite setting);
* the splitting class: the outer measure splits additively over every finite
  covered probe (all probes / finite-measure members only);
* the completion classes: some member is at distance 0 globally, or at
  distance 0 under every d_A.

The locally approximable class is a sigma-algebra containing the ring; the
outer measure restricted to it is the extension.  `uniqueness_report`
decides whether that extension is the only one agreeing with the original
pre-measure, by decomposing the class into its atoms and checking which atom
masses are forced; when some are not, it exhibits a second extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import engine, kernels
from .errors import InputError, MeasureExtError, ResourceLimitError
from .premeasure import PreMeasure
from .quantity import INFINITY, ZERO, ExtendedQuantity, qsum
from .sets import PointSet, SetRing

DEFAULT_EXTEND_CAP = 16
DEFAULT_CLASSIFY_CAP = 20

# Above this many probe/member pairs, per-probe verdicts switch from the
# restriction engine to the table identity (same value, checked by tests).
_HONEST_PROBE_BUDGET = 1 << 22


@dataclass(frozen=True)
class LocalWitness:
    """A member at localized distance 0 from the subject, for one probe."""

    probe: PointSet
    approximant: PointSet


@dataclass(frozen=True)
class LocalRefuter:
    """A probe where no member gets closer than ``best_distance`` > 0."""

    probe: PointSet
    best_member: PointSet
    best_distance: ExtendedQuantity


@dataclass(frozen=True)
class SplitRefuter:
    """A probe on which the outer measure fails to split additively."""

    probe: PointSet
    whole: ExtendedQuantity
    part_in: ExtendedQuantity
    part_out: ExtendedQuantity


@dataclass(frozen=True)
class ProbeVerdict:
    """Outer/inner agreement of the subject inside one finite-measure member."""

    probe: PointSet
    outer: ExtendedQuantity
    inner: ExtendedQuantity
    measurable: bool


@dataclass(frozen=True)
class Classification:
    """Verdicts of one subset for all five classes, with evidence.

    Witness tuples hold one entry per finite-measure probe when the subject
    is in the class; the refuter fields hold the first counterexample found
    when it is not.
    """

    subject: PointSet
    in_m: bool
    in_m_ca: bool
    in_m_ca_fin: bool
    in_m_co: bool
    in_m_co_fin: bool
    local_witnesses: tuple[LocalWitness, ...]
    local_refuter: LocalRefuter | None
    ca_refuter: SplitRefuter | None
    ca_fin_refuter: SplitRefuter | None
    co_witness: PointSet | None
    co_best: LocalRefuter | None
    co_fin_witnesses: tuple[LocalWitness, ...]
    co_fin_refuter: PointSet | None
    probe_verdicts: tuple[ProbeVerdict, ...]

    def verdicts(self) -> dict[str, bool]:
        return {
            "m": self.in_m,
            "m_ca": self.in_m_ca,
            "m_ca_fin": self.in_m_ca_fin,
            "m_co": self.in_m_co,
            "m_co_fin": self.in_m_co_fin,
        }


def _cap_check(m: PreMeasure, cap: int, what: str) -> None:
    n = m.ring.universe_size
    if n > cap:
        raise ResourceLimitError(
            f"{what} over a {n}-point universe exceeds the cap of {cap} points"
        )


def local_inner_outer(
    m: PreMeasure, probe: PointSet, e: PointSet
) -> tuple[ExtendedQuantity, ExtendedQuantity, bool]:
    """Outer and inner measure of the trace of ``e`` under the restriction to ``probe``.

    The probe must be a finite-measure member; the restriction is then a
    finite algebra, so both values exist and their agreement is exactly
    measurability of the trace.
    """
    sub = m.restrict_to(probe)
    trace = e & probe
    outer, _ = engine.outer_measure(sub, trace)
    inner = engine.inner_measure(sub, trace)
    return outer, inner, outer == inner


def _probe_verdicts(m: PreMeasure, e: PointSet) -> tuple[ProbeVerdict, ...]:
    t = m.tables
    probes = m.finite_family.members
    if len(probes) * len(m.ring.members) <= _HONEST_PROBE_BUDGET:
        out = []
        for probe in probes:
            o, i, ok = local_inner_outer(m, probe, e)
            out.append(ProbeVerdict(probe, o, i, ok))
        return tuple(out)
    # identity: within a finite member, outer = mass of atoms met, inner =
    # mass of atoms contained
    out = []
    for probe in probes:
        o = t.qty(t.mass[t.amask[probe.bits & e.bits]])
        i = t.qty(t.mass[t.contained_amask(probe.bits & e.bits)])
        out.append(ProbeVerdict(probe, o, i, o == i))
    return tuple(out)


def classify(
    m: PreMeasure, e: PointSet, *, universe_cap: int = DEFAULT_CLASSIFY_CAP
) -> Classification:
    """Decide all five classes for one subset, with witnesses or refuters."""
    _cap_check(m, universe_cap, "classification")
    if e.universe_size != m.ring.universe_size:
        raise InputError("subject lives in a different universe than the ring")
    t = m.tables
    n = t.n
    full_mask = t.full - 1
    eb = e.bits
    members = t.members

    def ps(bits: int) -> PointSet:
        return PointSet(n, bits)

    # locally approximable: every finite probe admits a distance-0 member
    in_m = True
    local_witnesses: list[LocalWitness] = []
    local_refuter = None
    for a_set in t.finfam:
        cand = t.union_tab[t.amask[a_set & eb]]
        if cand in t.memset and t.mass[t.amask[a_set & (eb ^ cand)]] == 0:
            local_witnesses.append(LocalWitness(ps(a_set), ps(cand)))
            continue
        best = -1
        best_b = 0
        zero_b = None
        for b in members:
            v = t.mass[t.amask[a_set & (eb ^ b)]]
            if v == 0:
                zero_b = b
                break
            if best < 0 or v < best:
                best, best_b = v, b
        if zero_b is not None:
            local_witnesses.append(LocalWitness(ps(a_set), ps(zero_b)))
        else:
            in_m = False
            local_refuter = LocalRefuter(ps(a_set), ps(best_b), t.qty(best))
            local_witnesses = []
            break

    # splitting class: outer measure additive over every finite covered probe
    def split_scan(probe_bits_iter) -> SplitRefuter | None:
        notcar = full_mask & ~t.carrier
        for f in probe_bits_iter:
            if f & notcar:
                continue
            a = t.amask[f]
            if a & t.inf_mask:
                continue
            lhs = t.mass[a]
            p_in = t.mass[t.amask[f & eb]]
            p_out = t.mass[t.amask[f & ~eb]]
            if lhs != p_in + p_out:
                return SplitRefuter(ps(f), t.qty(lhs), t.qty(p_in), t.qty(p_out))
        return None

    ca_refuter = split_scan(range(t.full))
    ca_fin_refuter = split_scan(t.finfam)

    # completion, global: some member at outer-measure-0 symmetric difference
    co_witness = None
    co_best = None
    if not (eb & ~t.carrier):
        best_v: ExtendedQuantity | None = None
        best_s = 0
        contained = t.contained_amask(eb)
        order = [t.union_tab[contained]] + members
        for s in order:
            if s not in t.memset:
                continue
            x = t.amask[eb ^ s]
            if (x & t.inf_mask) or (eb ^ s) & ~t.carrier:
                v = INFINITY
            else:
                v = t.qty(t.mass[x])
            if v == ZERO:
                co_witness = ps(s)
                break
            if best_v is None or v < best_v:
                best_v, best_s = v, s
        if co_witness is None:
            co_best = LocalRefuter(ps(full_mask), ps(best_s), best_v)
    else:
        co_best = LocalRefuter(ps(full_mask), ps(0), INFINITY)

    # completion, localized: per finite probe, some member at d_A-distance 0
    in_co_fin = True
    co_fin_witnesses: list[LocalWitness] = []
    co_fin_refuter = None
    for a_set in t.finfam:
        cand = t.union_tab[t.amask[a_set & eb]]
        if cand in t.memset and t.mass[t.amask[a_set & (eb ^ cand)]] == 0:
            co_fin_witnesses.append(LocalWitness(ps(a_set), ps(cand)))
            continue
        found = None
        for s in members:
            if t.mass[t.amask[a_set & (eb ^ s)]] == 0:
                found = s
                break
        if found is None:
            in_co_fin = False
            co_fin_refuter = ps(a_set)
            co_fin_witnesses = []
            break
        co_fin_witnesses.append(LocalWitness(ps(a_set), ps(found)))

    result = Classification(
        subject=e,
        in_m=in_m,
        in_m_ca=ca_refuter is None,
        in_m_ca_fin=ca_fin_refuter is None,
        in_m_co=co_witness is not None,
        in_m_co_fin=in_co_fin,
        local_witnesses=tuple(local_witnesses),
        local_refuter=local_refuter,
        ca_refuter=ca_refuter,
        ca_fin_refuter=ca_fin_refuter,
        co_witness=co_witness,
        co_best=co_best,
        co_fin_witnesses=tuple(co_fin_witnesses),
        co_fin_refuter=co_fin_refuter,
        probe_verdicts=_probe_verdicts(m, e),
    )
    _check_chain(result)
    return result


def _check_chain(c: Classification) -> None:
    """The four localized/splitting classes coincide and contain the global one."""
    four = (c.in_m, c.in_m_ca, c.in_m_ca_fin, c.in_m_co_fin)
    if len(set(four)) != 1:
        raise MeasureExtError(
            f"internal: class verdicts disagree for {c.subject}: {c.verdicts()}"
        )
    if c.in_m_co and not c.in_m:
        raise MeasureExtError(
            f"internal: globally approximable {c.subject} not locally approximable"
        )


@dataclass(frozen=True)
class ClassMaps:
    """Per-subset verdict maps for all five classes; index = subset bitmask."""

    size: int
    m: bytes
    m_ca: bytes
    m_ca_fin: bytes
    m_co: bytes
    m_co_fin: bytes


def class_maps(m: PreMeasure, *, universe_cap: int = DEFAULT_EXTEND_CAP) -> ClassMaps:
    """Bulk verdicts for every subset of the universe at once."""
    _cap_check(m, universe_cap, "bulk classification")
    t = m.tables
    return ClassMaps(
        size=t.full,
        m=bytes(t.map_m),
        m_ca=bytes(t.map_mca),
        m_ca_fin=bytes(t.map_mca_fin),
        m_co=bytes(t.map_mco),
        m_co_fin=bytes(t.map_mco_fin),
    )


@dataclass(frozen=True)
class ExtensionTable:
    """The extension: the locally approximable sets with their outer-measure values."""

    sigma_algebra: SetRing
    values: tuple[ExtendedQuantity, ...]

    def __len__(self) -> int:
        return len(self.sigma_algebra.members)

    @property
    def members(self) -> tuple[PointSet, ...]:
        return self.sigma_algebra.members

    @cached_property
    def _by_bits(self) -> dict[int, ExtendedQuantity]:
        return {s.bits: v for s, v in zip(self.members, self.values)}

    def __contains__(self, item: PointSet) -> bool:
        return item in self.sigma_algebra

    def value(self, s: PointSet) -> ExtendedQuantity:
        if s not in self.sigma_algebra:
            raise InputError(f"{s} is not measurable here")
        return self._by_bits[s.bits]

    def as_premeasure(self) -> PreMeasure:
        """The extension as a measured ring, so every ring-level tool applies to it."""
        return PreMeasure(self.sigma_algebra, self.values)


def extend(m: PreMeasure, *, universe_cap: int = DEFAULT_EXTEND_CAP) -> ExtensionTable:
    """Materialize the extension over the full universe.

    Postconditions checked here: the space is measurable, every ring member
    is measurable with its original value, and the class is closed under
    complement.  Closure under union and countable additivity are theorems
    the property suites exercise.
    """
    _cap_check(m, universe_cap, "extension")
    t = m.tables
    n = t.n
    verdict = t.map_m
    members = tuple(PointSet(n, s) for s in range(t.full) if verdict[s])
    values = tuple(t.outer(s) for s in range(t.full) if verdict[s])
    space = PointSet.space(n)
    if not verdict[t.full - 1]:
        raise MeasureExtError("internal: the space is not measurable")
    for s in range(t.full):
        if verdict[s] and not verdict[(t.full - 1) ^ s]:
            raise MeasureExtError(
                f"internal: complement of measurable {PointSet(n, s)} is not measurable"
            )
    ext = ExtensionTable(SetRing(space, members), values)
    for member, v in zip(m.ring.members, m.values):
        if member.bits not in ext._by_bits:
            raise MeasureExtError(f"internal: ring member {member} not measurable")
        if ext._by_bits[member.bits] != v:
            raise MeasureExtError(
                f"internal: extension disagrees with the pre-measure on {member}"
            )
    return ext


def measurable_hull(
    m: PreMeasure, e: PointSet, *, universe_cap: int = DEFAULT_EXTEND_CAP
) -> tuple[PointSet | None, ExtendedQuantity]:
    """Smallest-measure measurable superset of ``e`` and the outer measure it attains.

    When no member covers ``e`` every measurable superset is uncovered too,
    so the hull degenerates to (None, inf).  Otherwise the union of the
    atoms meeting ``e`` is returned, and its optimality is verified against
    a literal minimum over all measurable supersets.
    """
    _cap_check(m, universe_cap, "hull computation")
    if e.universe_size != m.ring.universe_size:
        raise InputError("subject lives in a different universe than the ring")
    t = m.tables
    if not t.covered(e.bits):
        return None, INFINITY
    hull_bits = t.union_tab[t.amask[e.bits]]
    value = t.outer(e.bits)
    route_b, _ = engine.outer_measure(m, e)
    if route_b != value:
        raise MeasureExtError(
            f"internal: outer-measure routes disagree on {e}: {value} vs {route_b}"
        )
    if hull_bits not in t.memset or e.bits & ~hull_bits:
        raise MeasureExtError(f"internal: bad hull for {e}")
    verdict = t.map_m
    best: ExtendedQuantity | None = None
    s = e.bits
    while True:
        if verdict[s]:
            v = t.outer(s)
            if best is None or v < best:
                best = v
        if s == t.full - 1:
            break
        s = (s + 1) | e.bits
    if best != value:
        raise MeasureExtError(
            f"internal: hull value {value} is not the minimum {best} over supersets of {e}"
        )
    return PointSet(t.n, hull_bits), value


@dataclass(frozen=True)
class UniquenessReport:
    """Whether the extension is the only one agreeing with the pre-measure.

    ``free_atoms`` are the atoms of the measurable class whose mass is not
    forced; when any exist, ``alternative`` holds a second extension's
    values, aligned with ``extension.members``, that also agrees with the
    pre-measure on the ring.  ``finite_partition`` witnesses sigma-finiteness
    (a partition of the space into finite-measure members) when one exists.
    """

    unique: bool
    sigma_finite: bool
    finite_partition: tuple[PointSet, ...] | None
    free_atoms: tuple[PointSet, ...]
    extension: ExtensionTable
    alternative: tuple[ExtendedQuantity, ...] | None


def uniqueness_report(
    m: PreMeasure, *, universe_cap: int = DEFAULT_EXTEND_CAP
) -> UniquenessReport:
    """Decide uniqueness of the extension by forcing analysis on the class atoms.

    Every extension agreeing with the pre-measure is determined by its
    masses on the atoms of the measurable class.  A mass is forced when the
    atom sits inside a finite-measure ring atom (equal to it if the weight
    is positive, null if the weight is 0), or is the only piece of an
    infinite ring atom.  Atoms outside the carrier, and multiple pieces of
    one infinite ring atom, are free: zeroing one yields a second extension,
    which is constructed and verified here.
    """
    ext = extend(m, universe_cap=universe_cap)
    t = m.tables
    n = t.n
    space = PointSet.space(n)

    sigma_finite = t.carrier == t.full - 1 and t.inf_mask == 0
    partition = None
    if sigma_finite:
        partition = tuple(m.atoms)
        covered = 0
        for a in partition:
            if covered & a.bits or m.value(a).is_infinite():
                raise MeasureExtError("internal: bad finiteness partition")
            covered |= a.bits
        if covered != space.bits:
            raise MeasureExtError("internal: finiteness partition misses the space")

    matoms = kernels.refine_atoms(ext.sigma_algebra.member_masks())
    outside: list[int] = []
    by_ring_atom: dict[int, list[int]] = {}
    for tb in matoms:
        if not (tb & t.carrier):
            outside.append(tb)
            continue
        am = t.amask[tb]
        if am & (am - 1):
            raise MeasureExtError("internal: measurable atom straddles ring atoms")
        by_ring_atom.setdefault(am.bit_length() - 1, []).append(tb)

    free: list[int] = list(outside)
    for idx, pieces in by_ring_atom.items():
        w = t.weights[idx]
        if w.is_finite():
            if w.finite > 0 and (len(pieces) != 1 or pieces[0] != t.atoms[idx]):
                raise MeasureExtError(
                    "internal: a finite positive ring atom split into measurable pieces"
                )
        elif len(pieces) > 1:
            free.extend(pieces)
    free.sort()

    mass = {tb: t.outer(tb) for tb in matoms}
    for member, v in zip(ext.members, ext.values):
        total = qsum(mass[tb] for tb in matoms if not (tb & ~member.bits))
        if total != v:
            raise MeasureExtError(
                f"internal: extension value on {member} is not the sum of its atom masses"
            )

    if sigma_finite and free:
        raise MeasureExtError("internal: free atoms under a finiteness partition")

    alternative = None
    if free:
        alt_mass = dict(mass)
        alt_mass[free[0]] = ZERO
        alternative = tuple(
            qsum(alt_mass[tb] for tb in matoms if not (tb & ~member.bits))
            for member in ext.members
        )
        by_bits = dict(zip((s.bits for s in ext.members), alternative))
        for member, v in zip(m.ring.members, m.values):
            if by_bits[member.bits] != v:
                raise MeasureExtError(
                    f"internal: alternative extension disagrees with the pre-measure on {member}"
                )
        if alternative == ext.values:
            raise MeasureExtError("internal: alternative extension is not an alternative")

    return UniquenessReport(
        unique=not free,
        sigma_finite=sigma_finite,
        finite_partition=partition,
        free_atoms=tuple(PointSet(n, tb) for tb in free),
        extension=ext,
        alternative=alternative,
    )
