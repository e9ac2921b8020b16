"""Half-open rational intervals on the real line, and the periodic-set demo.

Finite unions of intervals (a, b] with rational endpoints (allowing -inf and
+inf) form an algebra; with length as the pre-measure, the bounded members
are exactly the finite-measure family.  A periodic set built from a bounded
pattern (the union of all its period translates) is locally approximable —
inside any bounded window its trace is itself a member — yet its distance to
every member is infinite as soon as both the pattern and its complement in
the period carry mass.  `global_distance_certificate` turns that argument
into checkable output: the symmetric difference is eventually periodic on
each side, so a positive per-period tail mass forces outer measure infinity,
and zero tail masses confine the difference to a bounded window where the
length is computed exactly.

Endpoints are Fraction, or the floats -inf/+inf acting purely as sentinels;
no other floats are accepted, so all arithmetic stays exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, MeasureExtError, PreconditionError
from .quantity import INFINITY, ExtendedQuantity

NEG_INF = float("-inf")
POS_INF = float("inf")

Endpoint = Fraction | float  # floats only as +-inf


def _to_endpoint(value) -> Endpoint:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"{value!r} is not an interval endpoint")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value == POS_INF or value == NEG_INF:
            return value
        raise InputError(
            f"finite endpoints must be exact rationals, got float {value!r}"
        )
    if isinstance(value, str):
        text = value.strip()
        if text in ("-inf", "-Infinity"):
            return NEG_INF
        if text in ("inf", "+inf", "Infinity"):
            return POS_INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse endpoint {value!r}") from exc
    raise InputError(f"cannot parse endpoint {value!r}")


def format_endpoint(x: Endpoint) -> str:
    if isinstance(x, float):
        return "inf" if x > 0 else "-inf"
    return str(x)


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of half-open intervals (lo, hi] in canonical form.

    Components are sorted, pairwise disjoint, and non-adjacent; lo < hi.
    Construct through `from_pairs` (which normalizes) unless the input is
    already canonical.
    """

    components: tuple[tuple[Endpoint, Endpoint], ...] = ()

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.components:
            for x in (lo, hi):
                if not isinstance(x, (Fraction, float)) or (
                    isinstance(x, float) and x not in (NEG_INF, POS_INF)
                ):
                    raise InputError(f"bad endpoint {x!r}")
            if not lo < hi:
                raise InputError(f"empty or reversed interval ({lo}, {hi}]")
            if prev_hi is not None and not prev_hi < lo:
                raise InputError("components must be sorted, disjoint, non-adjacent")
            prev_hi = hi

    @classmethod
    def from_pairs(cls, pairs) -> "IntervalSet":
        """Normalize arbitrary (lo, hi] pairs: drop empties, sort, merge overlaps."""
        cleaned = []
        for lo, hi in pairs:
            lo, hi = _to_endpoint(lo), _to_endpoint(hi)
            if lo < hi:
                cleaned.append((lo, hi))
            elif hi < lo:
                raise InputError(f"reversed interval ({lo}, {hi}]")
        cleaned.sort(key=lambda c: (c[0], c[1]))
        merged: list[tuple[Endpoint, Endpoint]] = []
        for lo, hi in cleaned:
            if merged and not merged[-1][1] < lo:
                last_lo, last_hi = merged[-1]
                merged[-1] = (last_lo, max(last_hi, hi))
            else:
                merged.append((lo, hi))
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def line(cls) -> "IntervalSet":
        return cls(((NEG_INF, POS_INF),))

    def is_empty(self) -> bool:
        return not self.components

    def is_bounded(self) -> bool:
        if not self.components:
            return True
        return self.components[0][0] != NEG_INF and self.components[-1][1] != POS_INF

    def contains(self, x: Fraction) -> bool:
        for lo, hi in self.components:
            if lo < x <= hi:
                return True
        return False

    def measure(self) -> ExtendedQuantity:
        """Total length; infinite as soon as any component is unbounded."""
        if not self.is_bounded():
            return INFINITY
        total = Fraction(0)
        for lo, hi in self.components:
            total += hi - lo
        return ExtendedQuantity(total)

    def translate(self, delta: Fraction) -> "IntervalSet":
        return IntervalSet(tuple((lo + delta, hi + delta) for lo, hi in self.components))

    def span(self) -> tuple[Endpoint, Endpoint] | None:
        if not self.components:
            return None
        return self.components[0][0], self.components[-1][1]

    def _combine(self, other: "IntervalSet", keep) -> "IntervalSet":
        """Sweep both component lists and keep the cells where ``keep(a, b)`` holds.

        Cut points are all finite endpoints of either set; membership is
        constant on each cell between consecutive cuts (and on the two
        unbounded outer cells), so testing one interior point per cell is
        exact.
        """
        cuts = sorted(
            {x for lo, hi in self.components + other.components
             for x in (lo, hi) if isinstance(x, Fraction)}
        )
        bounds: list[tuple[Endpoint, Endpoint]] = []
        if not cuts:
            bounds.append((NEG_INF, POS_INF))
        else:
            bounds.append((NEG_INF, cuts[0]))
            for a, b in zip(cuts, cuts[1:]):
                bounds.append((a, b))
            bounds.append((cuts[-1], POS_INF))
        picked = []
        for lo, hi in bounds:
            if isinstance(hi, Fraction):
                probe = hi
            elif isinstance(lo, Fraction):
                probe = lo + 1
            else:
                probe = Fraction(0)
            if keep(self.contains(probe), other.contains(probe)):
                picked.append((lo, hi))
        return IntervalSet.from_pairs(picked)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a or b)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a and b)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a and not b)

    def __xor__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a != b)

    def complement(self) -> "IntervalSet":
        return IntervalSet.line() - self

    def __str__(self) -> str:
        if not self.components:
            return "empty"
        return ",".join(
            f"({format_endpoint(lo)},{format_endpoint(hi)}]" for lo, hi in self.components
        )

    def __repr__(self) -> str:
        return f"IntervalSet.parse({str(self)!r})"


_COMPONENT = re.compile(r"\(\s*([^,()\[\]]+?)\s*,\s*([^,()\[\]]+?)\s*\]")
_SET_SHAPE = re.compile(
    r"\s*\(\s*[^,()\[\]]+?\s*,\s*[^,()\[\]]+?\s*\]\s*(?:,\s*\(\s*[^,()\[\]]+?\s*,\s*[^,()\[\]]+?\s*\]\s*)*"
)


def parse_interval_set(text: str) -> IntervalSet:
    """Parse comma-joined components "(a,b],(c,d]"; "empty" or "" is the empty set."""
    body = text.strip()
    if body in ("", "empty"):
        return IntervalSet.empty()
    if not _SET_SHAPE.fullmatch(body):
        raise InputError(f"cannot parse interval set {text!r}")
    pairs = [(lo, hi) for lo, hi in _COMPONENT.findall(body)]
    return IntervalSet.from_pairs(pairs)


@dataclass(frozen=True)
class WindowedSet:
    """A set described directly, or as all period translates of a bounded pattern.

    ``period`` None means the set simply is ``base``.  Otherwise the set is
    the union of base + k*period over all integers k, with base confined to
    (0, period].
    """

    base: IntervalSet
    period: Fraction | None = None

    def __post_init__(self):
        if self.period is not None:
            if not isinstance(self.period, Fraction) or self.period <= 0:
                raise InputError("period must be a positive rational")
            for lo, hi in self.base.components:
                if not (isinstance(lo, Fraction) and isinstance(hi, Fraction)):
                    raise InputError("periodic patterns must be bounded")
                if lo < 0 or hi > self.period:
                    raise InputError(
                        f"pattern component ({lo},{hi}] escapes (0,{self.period}]"
                    )

    @classmethod
    def plain(cls, base: IntervalSet) -> "WindowedSet":
        return cls(base, None)

    @classmethod
    def periodic(cls, period, pattern: IntervalSet) -> "WindowedSet":
        p = _to_endpoint(period)
        if not isinstance(p, Fraction):
            raise InputError("period must be a finite rational")
        return cls(pattern, p)

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    def __str__(self) -> str:
        if self.period is None:
            return str(self.base)
        return f"periodic {format_endpoint(self.period)}: {self.base}"


def parse_windowed_set(text: str) -> WindowedSet:
    body = text.strip()
    if body.startswith("periodic"):
        rest = body[len("periodic"):]
        head, sep, tail = rest.partition(":")
        if not sep:
            raise InputError(f"cannot parse periodic set {text!r}: missing ':'")
        return WindowedSet.periodic(head.strip(), parse_interval_set(tail))
    return WindowedSet.plain(parse_interval_set(body))


def window(e: WindowedSet, probe: IntervalSet) -> IntervalSet:
    """The exact trace of ``e`` on a bounded probe.

    Only finitely many pattern translates meet the probe, so the periodic
    case reduces to a finite union.
    """
    if not probe.is_bounded():
        raise PreconditionError("window probes must be bounded")
    if e.period is None:
        return e.base & probe
    if probe.is_empty():
        return IntervalSet.empty()
    lo, hi = probe.span()
    p = e.period
    k_min = math.floor(lo / p)
    k_max = math.ceil(hi / p)
    pieces = []
    for k in range(k_min, k_max + 1):
        pieces.extend(e.base.translate(k * p).components)
    return IntervalSet.from_pairs(pieces) & probe


def interval_local_distance(
    probe: IntervalSet, e: WindowedSet, b: IntervalSet
) -> ExtendedQuantity:
    """Length of probe ∩ (e symmetric-difference b), for a bounded probe."""
    if not probe.is_bounded():
        raise PreconditionError("localized distances need a bounded probe")
    trace_e = window(e, probe)
    trace_b = b & probe
    return (trace_e ^ trace_b).measure()


@dataclass(frozen=True)
class DistanceCertificate:
    """Exact value of the global distance from a periodic set to a member, with proof data.

    Beyond ``threshold_right`` (and symmetrically to the left of
    ``threshold_left``) the member's indicator is constant, so the symmetric
    difference repeats with the set's period; each period contributes
    ``tail_mass_right`` (resp. left).  A positive tail mass on either side
    forces value infinity; otherwise the difference lives inside the bounded
    core, whose exact length is the value.
    """

    value: ExtendedQuantity
    period: Fraction
    tail_mass_left: Fraction
    tail_mass_right: Fraction
    threshold_left: Fraction
    threshold_right: Fraction
    core: IntervalSet | None

    def describe(self) -> str:
        if self.value.is_infinite():
            return (
                f"distance inf: per-period tail mass {self.tail_mass_left} left of "
                f"{self.threshold_left} and {self.tail_mass_right} right of "
                f"{self.threshold_right} (period {self.period})"
            )
        return (
            f"distance {self.value}: both tail masses vanish beyond "
            f"[{self.threshold_left}, {self.threshold_right}], difference is {self.core}"
        )


def global_distance_certificate(e: WindowedSet, b: IntervalSet) -> DistanceCertificate:
    """Decide the outer measure of the symmetric difference of ``e`` and ``b`` exactly."""
    if not e.is_periodic:
        raise PreconditionError("global certificates need a periodic set")
    p = e.period
    pattern_mass = e.base.measure().finite
    comps = b.components
    left_in = bool(comps) and comps[0][0] == NEG_INF
    right_in = bool(comps) and comps[-1][1] == POS_INF
    finite_pts = [
        x for lo, hi in comps for x in (lo, hi) if isinstance(x, Fraction)
    ]
    thr_left = min(finite_pts, default=Fraction(0))
    thr_right = max(finite_pts, default=Fraction(0))
    mass_left = (p - pattern_mass) if left_in else pattern_mass
    mass_right = (p - pattern_mass) if right_in else pattern_mass

    if mass_left > 0 or mass_right > 0:
        return DistanceCertificate(
            value=INFINITY,
            period=p,
            tail_mass_left=mass_left,
            tail_mass_right=mass_right,
            threshold_left=thr_left,
            threshold_right=thr_right,
            core=None,
        )
    pane = IntervalSet.from_pairs([(thr_left - p, thr_right + p)])
    core = window(e, pane) ^ (b & pane)
    value = core.measure()
    if value.is_infinite():
        raise MeasureExtError("internal: bounded core with infinite length")
    return DistanceCertificate(
        value=value,
        period=p,
        tail_mass_left=mass_left,
        tail_mass_right=mass_right,
        threshold_left=thr_left,
        threshold_right=thr_right,
        core=core,
    )


@dataclass(frozen=True)
class DemoEntry:
    probe: IntervalSet
    witness: IntervalSet
    distance: ExtendedQuantity


@dataclass(frozen=True)
class DemoReport:
    """Local approximation witnesses per probe, plus global-failure certificates."""

    subject: WindowedSet
    entries: tuple[DemoEntry, ...]
    certificates: tuple[tuple[IntervalSet, DistanceCertificate], ...]

    @property
    def ok(self) -> bool:
        return all(entry.distance == ExtendedQuantity.of(0) for entry in self.entries)


def demo_local_approximability(
    e: WindowedSet,
    probes: list[IntervalSet],
    global_probes: list[IntervalSet] = (),
) -> DemoReport:
    """Exhibit the local/global contrast for a windowed set.

    For each bounded probe the trace of ``e`` is itself a member at
    localized distance 0 — the universal witness.  When ``e`` is periodic
    with a pattern that neither vanishes nor fills the period, every member
    is at infinite global distance; the certificates for the supplied
    members demonstrate it.
    """
    entries = []
    for probe in probes:
        witness = window(e, probe)
        entries.append(DemoEntry(probe, witness, interval_local_distance(probe, e, witness)))
    certificates = []
    if e.is_periodic:
        pattern_mass = e.base.measure().finite
        if 0 < pattern_mass < e.period:
            certificates = [
                (b, global_distance_certificate(e, b)) for b in global_probes
            ]
    return DemoReport(e, tuple(entries), tuple(certificates))
