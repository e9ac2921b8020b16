"""Independent oracles, random instances, and theorem-as-property suites.

`oracle_outer` recomputes the outer measure by exhaustive enumeration of
disjoint atom covers, sharing no code with the hull shortcut in `engine` or
the mass tables in `kernels`; the equivalence suite pits all three routes
against each other on every subset of every pooled instance.

Suites are deterministic: the same (suite, count, seed) yields a
byte-identical report.  Each report carries one record per (instance,
property); failures embed the full instance document and a greedily
shrunk variant that still fails, for direct reproduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .classify import class_maps, extend, measurable_hull, uniqueness_report
from . import engine, intervals
from .errors import InputError, MeasureExtError, ResourceLimitError
from .instancefile import InstanceFile
from .premeasure import PreMeasure, validate_premeasure
from .quantity import INFINITY, ZERO, ExtendedQuantity, qsum
from .sets import PointSet, atoms_of, disjointify, generate_ring

PROFILES = ("finite_measure", "with_null_sets", "with_infinite_atoms")
ORACLE_ATOM_CAP = 16


@dataclass(frozen=True)
class InstanceSpec:
    """A reproducible instance: the document plus how it was drawn."""

    document: InstanceFile
    profile: str
    seed: str

    def build(self) -> PreMeasure:
        return self.document.build()

    def to_json_dict(self) -> dict:
        return {
            "profile": self.profile,
            "seed": self.seed,
            "instance": self.document.to_json_dict(),
        }


def random_instance(seed, profile: str) -> InstanceSpec:
    """Draw a valid instance: a generated ring with profile-shaped atom weights.

    ``with_null_sets`` zeroes at least one atom (a nonempty null member);
    ``with_infinite_atoms`` makes at least one atom infinite, so the
    finite-measure family is a proper subfamily.
    """
    if profile not in PROFILES:
        raise InputError(f"unknown profile {profile!r}; choose from {PROFILES}")
    rng = random.Random(f"measurext:{profile}:{seed}")
    n = rng.randint(2, 6)
    universe = tuple(str(i) for i in range(1, n + 1))
    gens = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 3))]
    force = rng.random() < 0.5
    ring = generate_ring(
        [PointSet(n, b) for b in gens], force_algebra=force, universe_size=n
    )
    partition = atoms_of(ring)
    weights: list[str] = []
    for _ in partition:
        weights.append(str(Fraction(rng.randint(0, 12), rng.randint(1, 16))))
    if profile == "with_null_sets":
        weights[rng.randrange(len(weights))] = "0"
    if profile == "with_infinite_atoms":
        for pos in rng.sample(range(len(weights)), rng.randint(1, max(1, len(weights) // 2))):
            weights[pos] = "inf"
    generators = tuple(
        tuple(universe[e - 1] for e in PointSet(n, b).elements()) for b in gens
    )
    measure = tuple(
        ("{" + ",".join(universe[e - 1] for e in a.elements()) + "}", w)
        for a, w in zip(partition, weights)
    )
    document = InstanceFile(
        universe=universe,
        generators=generators,
        force_algebra=force,
        measure_kind="atoms",
        measure=measure,
    )
    return InstanceSpec(document, profile, str(seed))


# ---------------------------------------------------------------------------
# brute-force outer-measure oracle


@lru_cache(maxsize=64)
def _oracle_tables(m: PreMeasure) -> tuple[tuple[int, ...], tuple[ExtendedQuantity, ...]]:
    atoms = [a.bits for a in m.atoms]
    if len(atoms) > ORACLE_ATOM_CAP:
        raise ResourceLimitError(
            f"oracle enumeration over {len(atoms)} atoms exceeds the cap of {ORACLE_ATOM_CAP}"
        )
    weights = m.atom_weights
    unions = []
    totals = []
    for pick in range(1 << len(atoms)):
        u = 0
        total = ZERO
        for i, a in enumerate(atoms):
            if (pick >> i) & 1:
                u |= a
                total = total + weights[i]
        unions.append(u)
        totals.append(total)
    return tuple(unions), tuple(totals)


def oracle_outer(m: PreMeasure, e: PointSet) -> ExtendedQuantity:
    """Exhaustive minimum of the total measure over disjoint atom covers of ``e``.

    Every countable member cover refines to a disjoint one assembled from
    atoms without increasing the total, so this minimum is the outer
    measure — computed here with none of the engine's hull machinery.
    """
    if e.universe_size != m.ring.universe_size:
        raise InputError("set belongs to a different universe")
    unions, totals = _oracle_tables(m)
    best: ExtendedQuantity | None = None
    for u, total in zip(unions, totals):
        if not (e.bits & ~u):
            if best is None or total < best:
                best = total
    return INFINITY if best is None else best


# ---------------------------------------------------------------------------
# property library (finite backend); each returns a witness dict or None


def _all_subsets(m: PreMeasure) -> list[PointSet]:
    n = m.ring.universe_size
    return [PointSet(n, s) for s in range(1 << n)]


def _rng_for(name: str, salt: str) -> random.Random:
    return random.Random(f"measurext:prop:{name}:{salt}")


def prop_ring_closed(m: PreMeasure, salt: str):
    try:
        m.ring.ensure_valid()
    except InputError as exc:
        return {"violation": str(exc)}
    members = m.ring.members
    for x in members:
        for y in members:
            for label, z in (("union", x | y), ("intersection", x & y), ("difference", x - y)):
                if z not in m.ring:
                    return {"violation": f"{label} of {x} and {y} -> {z} escapes the ring"}
    return None


def prop_atoms_partition(m: PreMeasure, salt: str):
    seen = 0
    for a in m.atoms:
        if not a.bits or (seen & a.bits):
            return {"violation": f"atom {a} empty or overlapping"}
        seen |= a.bits
    if seen != m.atoms.carrier.bits:
        return {"violation": "atoms do not cover the carrier"}
    for member in m.ring.members:
        try:
            parts = m.atoms.decompose(member)
        except InputError as exc:
            return {"violation": str(exc)}
        got = 0
        for p in parts:
            got |= p.bits
        if got != member.bits:
            return {"violation": f"decomposition of {member} reassembles to {PointSet(m.ring.universe_size, got)}"}
    return None


def prop_disjointify(m: PreMeasure, salt: str):
    rng = _rng_for("disjointify", salt)
    members = list(m.ring.members)
    sample = [rng.choice(members) for _ in range(min(5, len(members)))]
    pieces = disjointify(m.ring, sample)
    seen = PointSet.empty(m.ring.universe_size)
    acc = PointSet.empty(m.ring.universe_size)
    for original, piece in zip(sample, pieces):
        if not seen.isdisjoint(piece):
            return {"violation": f"piece {piece} overlaps earlier pieces"}
        seen = seen | piece
        acc = acc | original
        if seen != acc:
            return {"violation": "running unions diverge"}
    return None


def prop_outer_matches_oracle(m: PreMeasure, salt: str):
    for e in _all_subsets(m):
        hull_value, _ = engine.outer_measure(m, e)
        oracle_value = oracle_outer(m, e)
        table_value = m.tables.outer(e.bits)
        if not (hull_value == oracle_value == table_value):
            return {
                "set": str(e),
                "hull_route": str(hull_value),
                "oracle_route": str(oracle_value),
                "table_route": str(table_value),
            }
    return None


def prop_outer_witness_sound(m: PreMeasure, salt: str):
    for e in _all_subsets(m):
        value, witness = engine.outer_measure(m, e)
        if witness is None:
            if value != INFINITY:
                return {"set": str(e), "violation": "no witness for a finite value"}
            if any(e.issubset(member) for member in m.ring.members):
                return {"set": str(e), "violation": "uncovered verdict despite a covering member"}
            continue
        union = PointSet.empty(e.universe_size)
        for i, piece in enumerate(witness.cover):
            if piece not in m.ring:
                return {"set": str(e), "violation": f"cover piece {piece} not a member"}
            if witness.disjoint and not union.isdisjoint(piece):
                return {"set": str(e), "violation": f"cover piece {piece} overlaps"}
            union = union | piece
        if not e.issubset(union):
            return {"set": str(e), "violation": "cover misses part of the set"}
        total = qsum(m.value(piece) for piece in witness.cover)
        if total != witness.total or total != value:
            return {
                "set": str(e),
                "violation": f"cover total {total} vs declared {witness.total} vs value {value}",
            }
    return None


def prop_outer_extends_measure(m: PreMeasure, salt: str):
    for member, declared in zip(m.ring.members, m.values):
        value, _ = engine.outer_measure(m, member)
        if value != declared:
            return {"member": str(member), "outer": str(value), "measure": str(declared)}
    return None


def _random_disjoint_members(m: PreMeasure, rng: random.Random, want: int) -> list[PointSet]:
    picked: list[PointSet] = []
    union_bits = 0
    members = list(m.ring.members)
    rng.shuffle(members)
    for member in members:
        if not (member.bits & union_bits):
            picked.append(member)
            union_bits |= member.bits
            if len(picked) == want:
                break
    return picked


def prop_disjoint_family_additive(m: PreMeasure, salt: str):
    rng = _rng_for("disjoint-family", salt)
    for _ in range(50):
        family = _random_disjoint_members(m, rng, rng.randint(1, 6))
        union = PointSet.empty(m.ring.universe_size)
        for member in family:
            union = union | member
        total = qsum(m.value(member) for member in family)
        direct = m.value(union)
        outer, _ = engine.outer_measure(m, union)
        if not (total == direct == outer):
            return {
                "family": [str(s) for s in family],
                "sum": str(total),
                "measure_of_union": str(direct),
                "outer_of_union": str(outer),
            }
    return None


def prop_extension_contains_ring(m: PreMeasure, salt: str):
    ext = extend(m)
    for member, declared in zip(m.ring.members, m.values):
        if member not in ext:
            return {"member": str(member), "violation": "ring member not measurable"}
        if ext.value(member) != declared:
            return {
                "member": str(member),
                "extension": str(ext.value(member)),
                "measure": str(declared),
            }
    return None


def prop_extension_complement_closed(m: PreMeasure, salt: str):
    ext = extend(m)
    for s in ext.members:
        if s.complement() not in ext:
            return {"set": str(s), "violation": "complement not measurable"}
    return None


def prop_extension_union_closed(m: PreMeasure, salt: str):
    ext = extend(m)
    for s in ext.members:
        for t in ext.members:
            if (s | t) not in ext:
                return {"sets": [str(s), str(t)], "violation": "union not measurable"}
    return None


def prop_additive_pairs(m: PreMeasure, salt: str):
    ext = extend(m)
    for s in ext.members:
        for t in ext.members:
            if s.isdisjoint(t):
                lhs = ext.value(s) + ext.value(t)
                rhs = ext.value(s | t)
                if lhs != rhs:
                    return {"sets": [str(s), str(t)], "sum": str(lhs), "union": str(rhs)}
    return None


def prop_additive_triples(m: PreMeasure, salt: str):
    ext = extend(m)
    rng = _rng_for("triples", salt)
    members = list(ext.members)
    for _ in range(50):
        picked: list[PointSet] = []
        bits = 0
        for s in rng.sample(members, min(len(members), 8)):
            if not (s.bits & bits):
                picked.append(s)
                bits |= s.bits
            if len(picked) == 3:
                break
        union = PointSet.empty(m.ring.universe_size)
        for s in picked:
            union = union | s
        lhs = qsum(ext.value(s) for s in picked)
        rhs = ext.value(union)
        if lhs != rhs:
            return {"sets": [str(s) for s in picked], "sum": str(lhs), "union": str(rhs)}
    return None


def _is_sigma_finite(m: PreMeasure) -> bool:
    t = m.tables
    return t.carrier == t.full - 1 and t.inf_mask == 0


def prop_four_classes_coincide(m: PreMeasure, salt: str):
    maps = class_maps(m)
    names = ("m", "m_ca", "m_ca_fin", "m_co_fin")
    tables = (maps.m, maps.m_ca, maps.m_ca_fin, maps.m_co_fin)
    for s in range(maps.size):
        row = {name: bool(tab[s]) for name, tab in zip(names, tables)}
        if len(set(row.values())) != 1:
            return {"set": str(PointSet(m.ring.universe_size, s)), "verdicts": row}
    return None


def prop_completion_within(m: PreMeasure, salt: str):
    maps = class_maps(m)
    for s in range(maps.size):
        if maps.m_co[s] and not maps.m[s]:
            return {"set": str(PointSet(m.ring.universe_size, s))}
    return None


def prop_sigma_finite_collapse(m: PreMeasure, salt: str):
    if not _is_sigma_finite(m):
        return None
    maps = class_maps(m)
    for s in range(maps.size):
        if maps.m[s] != maps.m_co[s]:
            return {"set": str(PointSet(m.ring.universe_size, s)), "violation": "completion differs despite sigma-finiteness"}
    return None


def prop_sigma_finite_unique(m: PreMeasure, salt: str):
    report = uniqueness_report(m)
    if report.sigma_finite and not report.unique:
        return {"violation": "sigma-finite instance reported non-unique"}
    if report.sigma_finite:
        covered = PointSet.empty(m.ring.universe_size)
        for part in report.finite_partition:
            if not covered.isdisjoint(part) or m.value(part).is_infinite():
                return {"violation": f"bad partition element {part}"}
            covered = covered | part
        if covered != m.ring.universe:
            return {"violation": "partition does not cover the space"}
    return None


def prop_alternative_verified(m: PreMeasure, salt: str):
    report = uniqueness_report(m)
    if report.unique:
        return None
    ext = report.extension
    table = {s: v for s, v in zip(ext.members, report.alternative)}
    outcome = validate_premeasure(ext.sigma_algebra, table)
    if not outcome.ok:
        return {"violation": "; ".join(str(i) for i in outcome.issues)}
    for member, declared in zip(m.ring.members, m.values):
        if table[member] != declared:
            return {"member": str(member), "violation": "alternative disagrees on the ring"}
    if tuple(table[s] for s in ext.members) == ext.values:
        return {"violation": "alternative coincides with the extension"}
    return None


def prop_hull_tight(m: PreMeasure, salt: str):
    ext = extend(m)
    for e in _all_subsets(m):
        hull, value = measurable_hull(m, e)
        outer, _ = engine.outer_measure(m, e)
        if value != outer:
            return {"set": str(e), "hull_value": str(value), "outer": str(outer)}
        if hull is None:
            if outer != INFINITY:
                return {"set": str(e), "violation": "no hull despite finite outer measure"}
            continue
        if hull not in ext or not e.issubset(hull) or ext.value(hull) != value:
            return {"set": str(e), "hull": str(hull), "violation": "hull not measurable/containing/tight"}
        for t in ext.members:
            if e.issubset(t) and ext.value(t) < value:
                return {"set": str(e), "better": str(t), "violation": "hull is not minimal"}
    return None


def _random_subset(rng: random.Random, n: int) -> PointSet:
    return PointSet(n, rng.randrange(1 << n))


def prop_distance_pseudometric(m: PreMeasure, salt: str):
    rng = _rng_for("pseudometric", salt)
    n = m.ring.universe_size
    probes = [a for a in m.finite_family if a.bits] or list(m.finite_family)
    for _ in range(6):
        a = rng.choice(probes)
        e, b, g = (_random_subset(rng, n) for _ in range(3))
        d_eb = engine.local_distance(m, a, e, b)
        d_be = engine.local_distance(m, a, b, e)
        d_ee = engine.local_distance(m, a, e, e)
        d_eg = engine.local_distance(m, a, e, g)
        d_bg = engine.local_distance(m, a, b, g)
        if d_ee != ZERO:
            return {"probe": str(a), "set": str(e), "violation": f"self-distance {d_ee}"}
        if d_eb != d_be:
            return {"probe": str(a), "violation": f"asymmetry {d_eb} vs {d_be}"}
        if d_eg > d_eb + d_bg:
            return {
                "probe": str(a),
                "sets": [str(e), str(b), str(g)],
                "violation": f"triangle: {d_eg} > {d_eb} + {d_bg}",
            }
    return None


def prop_distance_complement_rules(m: PreMeasure, salt: str):
    rng = _rng_for("complement-rules", salt)
    n = m.ring.universe_size
    probes = [a for a in m.finite_family if a.bits] or list(m.finite_family)
    for _ in range(6):
        a = rng.choice(probes)
        e, b = (_random_subset(rng, n) for _ in range(2))
        base = engine.local_distance(m, a, e, b)
        comp = engine.local_distance(m, a, e.complement(), b.complement())
        within = engine.local_distance(m, a, e.complement(), a - b)
        if not (base == comp == within):
            return {
                "probe": str(a),
                "sets": [str(e), str(b)],
                "values": [str(base), str(comp), str(within)],
            }
    return None


def prop_distance_op_subadditive(m: PreMeasure, salt: str):
    rng = _rng_for("op-subadditive", salt)
    n = m.ring.universe_size
    probes = [a for a in m.finite_family if a.bits] or list(m.finite_family)
    for _ in range(6):
        a = rng.choice(probes)
        pairs = [(_random_subset(rng, n), _random_subset(rng, n)) for _ in range(3)]
        union_e = PointSet.empty(n)
        union_b = PointSet.empty(n)
        inter_e = PointSet.space(n)
        inter_b = PointSet.space(n)
        budget = ZERO
        for e_i, b_i in pairs:
            union_e, union_b = union_e | e_i, union_b | b_i
            inter_e, inter_b = inter_e & e_i, inter_b & b_i
            budget = budget + engine.local_distance(m, a, e_i, b_i)
        if engine.local_distance(m, a, union_e, union_b) > budget:
            return {"probe": str(a), "violation": "union bound fails"}
        if engine.local_distance(m, a, inter_e, inter_b) > budget:
            return {"probe": str(a), "violation": "intersection bound fails"}
    return None


def prop_distance_outer_bound(m: PreMeasure, salt: str):
    rng = _rng_for("outer-bound", salt)
    n = m.ring.universe_size
    probes = [a for a in m.finite_family if a.bits] or list(m.finite_family)
    for _ in range(6):
        a = rng.choice(probes)
        e, b = (_random_subset(rng, n) for _ in range(2))
        lhs, _ = engine.outer_measure(m, a & e)
        rhs, _ = engine.outer_measure(m, a & b)
        if lhs > rhs + engine.local_distance(m, a, e, b):
            return {"probe": str(a), "sets": [str(e), str(b)]}
    return None


def prop_outer_basic_laws(m: PreMeasure, salt: str):
    rng = _rng_for("outer-basic", salt)
    n = m.ring.universe_size
    empty_value, _ = engine.outer_measure(m, PointSet.empty(n))
    if empty_value != ZERO:
        return {"violation": f"outer measure of the empty set is {empty_value}"}
    for _ in range(6):
        e = _random_subset(rng, n)
        g = e | _random_subset(rng, n)
        h = _random_subset(rng, n)
        v_e, _ = engine.outer_measure(m, e)
        v_g, _ = engine.outer_measure(m, g)
        v_h, _ = engine.outer_measure(m, h)
        v_eh, _ = engine.outer_measure(m, e | h)
        if v_e > v_g:
            return {"sets": [str(e), str(g)], "violation": "monotonicity fails"}
        if v_eh > v_e + v_h:
            return {"sets": [str(e), str(h)], "violation": "subadditivity fails"}
    return None


# ---------------------------------------------------------------------------
# interval-backend properties (salt-only; no finite instance)

_DEMO_SET = intervals.WindowedSet.periodic(2, intervals.IntervalSet.from_pairs([(0, 1)]))


def _random_fraction(rng: random.Random, lo: int, hi: int) -> Fraction:
    return Fraction(rng.randint(lo * 4, hi * 4), rng.randint(1, 16))


def _random_bounded_iset(rng: random.Random) -> intervals.IntervalSet:
    pieces = []
    for _ in range(rng.randint(1, 3)):
        a = _random_fraction(rng, -20, 20)
        b = a + abs(_random_fraction(rng, 0, 10)) + Fraction(1, 16)
        pieces.append((a, b))
    return intervals.IntervalSet.from_pairs(pieces)


def _random_member_iset(rng: random.Random) -> intervals.IntervalSet:
    base = _random_bounded_iset(rng)
    pieces = list(base.components)
    if rng.random() < 0.3:
        pieces.append((intervals.NEG_INF, _random_fraction(rng, -24, -20)))
    if rng.random() < 0.3:
        pieces.append((_random_fraction(rng, 20, 24), intervals.POS_INF))
    if rng.random() < 0.05:
        return intervals.IntervalSet.empty()
    return intervals.IntervalSet.from_pairs(pieces)


def prop_interval_local_zero(salt: str):
    rng = _rng_for("interval-local", salt)
    probe = _random_bounded_iset(rng)
    witness = intervals.window(_DEMO_SET, probe)
    d = intervals.interval_local_distance(probe, _DEMO_SET, witness)
    if d != ZERO:
        return {"probe": str(probe), "witness": str(witness), "distance": str(d)}
    return None


def prop_interval_global_infinite(salt: str):
    rng = _rng_for("interval-global", salt)
    b = _random_member_iset(rng)
    cert = intervals.global_distance_certificate(_DEMO_SET, b)
    if not cert.value.is_infinite():
        return {"member": str(b), "value": str(cert.value)}
    # the certificate's tail claim, checked directly: beyond the threshold the
    # difference contributes exactly the per-period mass, each period
    p = cert.period
    for k in range(3):
        pane = intervals.IntervalSet.from_pairs(
            [(cert.threshold_right + k * p, cert.threshold_right + (k + 1) * p)]
        )
        diff = intervals.window(_DEMO_SET, pane) ^ (b & pane)
        if diff.measure() != ExtendedQuantity(cert.tail_mass_right):
            return {
                "member": str(b),
                "violation": f"right tail period {k} carries {diff.measure()}, "
                f"certificate claims {cert.tail_mass_right}",
            }
        pane = intervals.IntervalSet.from_pairs(
            [(cert.threshold_left - (k + 1) * p, cert.threshold_left - k * p)]
        )
        diff = intervals.window(_DEMO_SET, pane) ^ (b & pane)
        if diff.measure() != ExtendedQuantity(cert.tail_mass_left):
            return {
                "member": str(b),
                "violation": f"left tail period {k} carries {diff.measure()}, "
                f"certificate claims {cert.tail_mass_left}",
            }
    return None


def prop_interval_certificate_sound(salt: str):
    rng = _rng_for("interval-cert", salt)
    period = Fraction(rng.randint(1, 4))
    style = rng.randrange(3)
    if style == 0:
        pattern = intervals.IntervalSet.empty()
    elif style == 1:
        pattern = intervals.IntervalSet.from_pairs([(0, period)])
    else:
        cut_a = period * Fraction(rng.randint(0, 8), 8)
        cut_b = period * Fraction(rng.randint(0, 8), 8)
        pattern = intervals.IntervalSet.from_pairs(
            [(min(cut_a, cut_b), max(cut_a, cut_b))]
        )
    e = intervals.WindowedSet.periodic(period, pattern)
    b = _random_member_iset(rng)
    cert = intervals.global_distance_certificate(e, b)
    p = cert.period
    wide = intervals.IntervalSet.from_pairs(
        [(cert.threshold_left - 3 * p, cert.threshold_right + 3 * p)]
    )
    visible = (intervals.window(e, wide) ^ (b & wide)).measure()
    if cert.value.is_infinite():
        if cert.tail_mass_left == 0 and cert.tail_mass_right == 0:
            return {"subject": str(e), "member": str(b), "violation": "infinite value with zero tails"}
        floor = ExtendedQuantity(2 * (cert.tail_mass_left + cert.tail_mass_right))
        if visible < floor:
            return {
                "subject": str(e),
                "member": str(b),
                "violation": f"window shows {visible}, tails promise at least {floor}",
            }
        return None
    if visible != cert.value:
        return {
            "subject": str(e),
            "member": str(b),
            "violation": f"bounded value {cert.value} but a wider window shows {visible}",
        }
    return None


def prop_interval_algebra_laws(salt: str):
    rng = _rng_for("interval-algebra", salt)
    a = _random_member_iset(rng)
    b = _random_member_iset(rng)
    if (a | b) != (b | a) or (a & b) != (b & a):
        return {"violation": "commutativity fails", "sets": [str(a), str(b)]}
    if a.complement().complement() != a:
        return {"violation": "double complement fails", "set": str(a)}
    if (a - b) != (a & b.complement()):
        return {"violation": "difference identity fails", "sets": [str(a), str(b)]}
    ma, mb = a.measure(), b.measure()
    mu = (a | b).measure()
    if mu > ma + mb:
        return {"violation": "length subadditivity fails", "sets": [str(a), str(b)]}
    if (a & b).is_empty() and mu != ma + mb:
        return {"violation": "length additivity fails", "sets": [str(a), str(b)]}
    delta = _random_fraction(rng, -8, 8)
    if a.translate(delta).measure() != ma:
        return {"violation": "translation invariance fails", "set": str(a)}
    if not a.is_empty():
        shifted = a.translate(delta)
        if (shifted ^ a.translate(delta)) != intervals.IntervalSet.empty():
            return {"violation": "translate is not deterministic", "set": str(a)}
    return None


# ---------------------------------------------------------------------------
# suite registry and runner

FiniteProp = Callable[[PreMeasure, str], dict | None]
IntervalProp = Callable[[str], dict | None]


@dataclass(frozen=True)
class Suite:
    name: str
    kind: str  # "finite" | "interval"
    properties: tuple[tuple[str, Callable], ...]


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "ring_laws",
            "finite",
            (
                ("ring_closed", prop_ring_closed),
                ("atoms_partition", prop_atoms_partition),
                ("disjointify_sound", prop_disjointify),
            ),
        ),
        Suite(
            "outer_oracle_equiv",
            "finite",
            (
                ("outer_matches_oracle", prop_outer_matches_oracle),
                ("outer_witness_sound", prop_outer_witness_sound),
            ),
        ),
        Suite(
            "extension_agreement",
            "finite",
            (
                ("outer_extends_measure", prop_outer_extends_measure),
                ("disjoint_family_additive", prop_disjoint_family_additive),
            ),
        ),
        Suite(
            "sigma_algebra_closure",
            "finite",
            (
                ("contains_ring", prop_extension_contains_ring),
                ("complement_closed", prop_extension_complement_closed),
                ("union_closed", prop_extension_union_closed),
            ),
        ),
        Suite(
            "additivity_on_M",
            "finite",
            (
                ("additive_pairs", prop_additive_pairs),
                ("additive_triples", prop_additive_triples),
            ),
        ),
        Suite(
            "m_comp_chain",
            "finite",
            (
                ("four_classes_coincide", prop_four_classes_coincide),
                ("completion_within", prop_completion_within),
                ("sigma_finite_collapse", prop_sigma_finite_collapse),
            ),
        ),
        Suite(
            "uniqueness",
            "finite",
            (
                ("sigma_finite_unique", prop_sigma_finite_unique),
                ("alternative_verified", prop_alternative_verified),
            ),
        ),
        Suite(
            "measurable_hull",
            "finite",
            (("hull_tight", prop_hull_tight),),
        ),
        Suite(
            "distance_properties",
            "finite",
            (
                ("pseudometric", prop_distance_pseudometric),
                ("complement_rules", prop_distance_complement_rules),
                ("op_subadditive", prop_distance_op_subadditive),
                ("outer_bound", prop_distance_outer_bound),
                ("outer_basic_laws", prop_outer_basic_laws),
            ),
        ),
        Suite(
            "interval_approx",
            "interval",
            (
                ("local_zero", prop_interval_local_zero),
                ("global_infinite", prop_interval_global_infinite),
                ("certificate_sound", prop_interval_certificate_sound),
                ("algebra_laws", prop_interval_algebra_laws),
            ),
        ),
    )
}


@dataclass(frozen=True)
class PropertyRecord:
    instance: int
    property: str
    verdict: str  # "pass" | "fail"
    witness: dict | None

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance,
            "property": self.property,
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    count: int
    seed: int
    passed: bool
    records: tuple[PropertyRecord, ...]

    def failures(self) -> tuple[PropertyRecord, ...]:
        return tuple(r for r in self.records if r.verdict == "fail")

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "count": self.count,
            "seed": self.seed,
            "passed": self.passed,
            "records": [r.to_json_dict() for r in self.records],
        }


def _run_finite_property(prop: FiniteProp, m: PreMeasure, salt: str) -> dict | None:
    try:
        return prop(m, salt)
    except MeasureExtError as exc:
        return {"error": str(exc)}


def _shrink_candidates(doc: InstanceFile):
    """Smaller documents: drop an element from a multi-element atom, or merge
    two atoms into one (weights added, infinity absorbing)."""
    if doc.measure_kind != "atoms":
        return
    atom_sets = [
        tuple(part.strip() for part in key.strip()[1:-1].split(",") if part.strip())
        for key, _ in doc.measure
    ]
    values = [value for _, value in doc.measure]

    def rebuild(drop_labels: set[str], merged: dict[int, int]):
        universe = tuple(x for x in doc.universe if x not in drop_labels)
        if not universe:
            return None
        generators = tuple(
            tuple(x for x in g if x not in drop_labels) for g in doc.generators
        )
        new_atoms: dict[int, list[str]] = {}
        new_values: dict[int, ExtendedQuantity] = {}
        for i, labels in enumerate(atom_sets):
            target = merged.get(i, i)
            kept = [x for x in labels if x not in drop_labels]
            new_atoms.setdefault(target, []).extend(kept)
            v = ExtendedQuantity.of(values[i])
            new_values[target] = new_values.get(target, ExtendedQuantity.of(0)) + v
        measure = []
        for target in sorted(new_atoms):
            labels = [x for x in doc.universe if x in set(new_atoms[target])]
            if not labels:
                return None
            measure.append(("{" + ",".join(labels) + "}", str(new_values[target])))
        try:
            return InstanceFile(
                universe=universe,
                generators=generators,
                force_algebra=doc.force_algebra,
                measure_kind="atoms",
                measure=tuple(measure),
            )
        except InputError:
            return None

    for labels in atom_sets:
        for label in labels[1:]:
            cand = rebuild({label}, {})
            if cand is not None:
                yield cand
    for i in range(len(atom_sets) - 1):
        cand = rebuild(set(atom_sets[i + 1]), {i + 1: i})
        if cand is not None:
            yield cand


def shrink_instance(
    doc: InstanceFile, prop: FiniteProp, salt: str
) -> InstanceFile | None:
    """Greedily minimize a failing document while the property keeps failing."""

    def fails(candidate: InstanceFile) -> bool:
        try:
            m = candidate.build()
        except (InputError, ResourceLimitError):
            return False
        return _run_finite_property(prop, m, salt) is not None

    current = doc
    improved = True
    while improved:
        improved = False
        for cand in _shrink_candidates(current):
            if fails(cand):
                current = cand
                improved = True
                break
    return current if current is not doc else None


def run_suite(name: str, count: int, seed: int) -> SuiteReport:
    """Run one suite over ``count`` deterministic instances (or probe draws)."""
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    suite = SUITES[name]
    records: list[PropertyRecord] = []
    if suite.kind == "interval":
        for i in range(count):
            salt = f"{seed}:{i}"
            for prop_name, prop in suite.properties:
                try:
                    witness = prop(salt)
                except MeasureExtError as exc:
                    witness = {"error": str(exc)}
                records.append(
                    PropertyRecord(
                        i,
                        prop_name,
                        "fail" if witness is not None else "pass",
                        witness,
                    )
                )
    else:
        for i in range(count):
            salt = f"{seed}:{i}"
            spec = random_instance(salt, PROFILES[i % len(PROFILES)])
            m = spec.build()
            for prop_name, prop in suite.properties:
                witness = _run_finite_property(prop, m, salt)
                if witness is not None:
                    payload = dict(witness)
                    payload["instance_spec"] = spec.to_json_dict()
                    shrunk = shrink_instance(spec.document, prop, salt)
                    payload["shrunk_instance"] = (
                        shrunk.to_json_dict() if shrunk is not None else None
                    )
                    records.append(PropertyRecord(i, prop_name, "fail", payload))
                else:
                    records.append(PropertyRecord(i, prop_name, "pass", None))
    passed = all(r.verdict == "pass" for r in records)
    return SuiteReport(name, count, seed, passed, tuple(records))
