"""Exact pre-measures on finite set rings.

A pre-measure assigns each ring member a value in [0, +inf], vanishes on the
empty set, and is additive over disjoint members.  Values are exact: rational
via Fraction, or the distinguished infinity.  `validate_premeasure` checks a
raw value table against those axioms and reports every violation instead of
stopping at the first, so the CLI can show a complete diagnosis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping

from .errors import InputError, PreconditionError
from .kernels import ScanTables
from .quantity import ExtendedQuantity, ZERO, qsum
from .sets import AtomPartition, PointSet, SetRing, atoms_of


def _parse_raw(value) -> Fraction | None:
    """Parse a table entry to Fraction, or None for infinity.

    Unlike ExtendedQuantity.of this admits negative values: validation must
    be able to name them as violations rather than choke on them.
    """
    if isinstance(value, ExtendedQuantity):
        return value.finite
    if isinstance(value, bool):
        raise InputError(f"boolean {value!r} is not a measure value")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text in ("inf", "+inf", "Infinity"):
            return None
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse measure value {value!r}") from exc
    raise InputError(f"cannot parse measure value {value!r}")


def _raw_add(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None or b is None:
        return None
    return a + b


def _raw_le(a: Fraction | None, b: Fraction | None) -> bool:
    if b is None:
        return True
    if a is None:
        return False
    return a <= b


def _raw_str(a: Fraction | None) -> str:
    return "inf" if a is None else str(a)


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "negative" | "empty-set" | "additivity" | "monotonicity"
    subjects: tuple[PointSet, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[ValidationIssue, ...]


def validate_premeasure(ring: SetRing, table: Mapping[PointSet, object]) -> ValidationReport:
    """Check a value table against the pre-measure axioms.

    The table must assign a value to every ring member and nothing else
    (anything less is malformed input, not an axiom violation).  The report
    lists all negative values, a nonzero empty-set value, every additivity
    failure over disjoint member pairs, and every monotonicity failure.
    """
    keys = {m.bits: m for m in table}
    want = {m.bits for m in ring.members}
    if set(keys) != want:
        missing = sorted(want - set(keys))
        extra = sorted(set(keys) - want)
        parts = []
        if missing:
            parts.append(
                "missing " + ", ".join(str(PointSet(ring.universe_size, b)) for b in missing)
            )
        if extra:
            parts.append("extra " + ", ".join(str(keys[b]) for b in extra))
        raise InputError("value table does not match the ring members: " + "; ".join(parts))

    raw: dict[int, Fraction | None] = {}
    for member, value in table.items():
        raw[member.bits] = _parse_raw(value)

    issues: list[ValidationIssue] = []
    n = ring.universe_size
    for bits, v in sorted(raw.items()):
        if v is not None and v < 0:
            ps = PointSet(n, bits)
            issues.append(ValidationIssue("negative", (ps,), f"m({ps}) = {v} < 0"))
    if raw[0] is None or raw[0] != 0:
        ps = PointSet.empty(n)
        issues.append(
            ValidationIssue("empty-set", (ps,), f"m({{}}) = {_raw_str(raw[0])}, expected 0")
        )

    members = ring.members
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if x.bits & y.bits:
                continue
            u = x.bits | y.bits
            total = _raw_add(raw[x.bits], raw[y.bits])
            if raw[u] != total:
                union = PointSet(n, u)
                issues.append(
                    ValidationIssue(
                        "additivity",
                        (x, y, union),
                        f"m({x}) + m({y}) = {_raw_str(total)} but m({union}) = {_raw_str(raw[u])}",
                    )
                )
    for x in members:
        for y in members:
            if x.bits != y.bits and not (x.bits & ~y.bits):
                if not _raw_le(raw[x.bits], raw[y.bits]):
                    issues.append(
                        ValidationIssue(
                            "monotonicity",
                            (x, y),
                            f"m({x}) = {_raw_str(raw[x.bits])} > m({y}) = {_raw_str(raw[y.bits])}",
                        )
                    )
    return ValidationReport(ok=not issues, issues=tuple(issues))


@dataclass(frozen=True)
class FiniteMeasureFamily:
    """The members of finite measure; the probes the localized distances use."""

    members: tuple[PointSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item: PointSet) -> bool:
        return item in set(self.members)


@dataclass(frozen=True)
class PreMeasure:
    """A validated exact pre-measure; ``values`` aligns with ``ring.members``."""

    ring: SetRing
    values: tuple[ExtendedQuantity, ...]

    def __post_init__(self):
        if len(self.values) != len(self.ring.members):
            raise InputError("one value per ring member is required")
        for v in self.values:
            if not isinstance(v, ExtendedQuantity):
                raise InputError(f"measure values must be ExtendedQuantity, got {v!r}")
        # members are sorted by bitmask, so the empty set is first
        if self.values[0] != ZERO:
            raise InputError("the empty set must have measure 0")

    @classmethod
    def from_table(cls, ring: SetRing, table: Mapping[PointSet, object]) -> "PreMeasure":
        ring.ensure_valid()
        report = validate_premeasure(ring, table)
        if not report.ok:
            lines = "; ".join(str(i) for i in report.issues)
            err = InputError(f"not a pre-measure: {lines}")
            err.report = report
            raise err
        by_bits = {m.bits: ExtendedQuantity.of(v) for m, v in table.items()}
        return cls(ring, tuple(by_bits[m.bits] for m in ring.members))

    @classmethod
    def from_atom_weights(
        cls, ring: SetRing, weights: Mapping[PointSet, object]
    ) -> "PreMeasure":
        """Build the unique pre-measure with the given atom weights.

        The keys must be exactly the ring's atoms; member values are the
        sums of the weights of the atoms they contain, which makes the
        result additive and monotone by construction.
        """
        ring.ensure_valid()
        partition = atoms_of(ring)
        given = {a.bits: ExtendedQuantity.of(v) for a, v in weights.items()}
        want = {a.bits for a in partition}
        if set(given) != want:
            raise InputError("weights must be keyed by exactly the ring's atoms")
        values = []
        for member in ring.members:
            values.append(
                qsum(given[a.bits] for a in partition if a.bits & member.bits)
            )
        return cls(ring, tuple(values))

    @cached_property
    def _value_by_bits(self) -> dict[int, ExtendedQuantity]:
        return {m.bits: v for m, v in zip(self.ring.members, self.values)}

    def value(self, member: PointSet) -> ExtendedQuantity:
        if member not in self.ring:
            raise InputError(f"{member} is not a ring member")
        return self._value_by_bits[member.bits]

    @cached_property
    def atoms(self) -> AtomPartition:
        return atoms_of(self.ring)

    @cached_property
    def atom_weights(self) -> tuple[ExtendedQuantity, ...]:
        return tuple(self.value(a) for a in self.atoms)

    @cached_property
    def finite_family(self) -> FiniteMeasureFamily:
        return FiniteMeasureFamily(
            tuple(m for m, v in zip(self.ring.members, self.values) if v.is_finite())
        )

    @cached_property
    def tables(self) -> ScanTables:
        return ScanTables(
            self.ring.universe_size,
            self.ring.member_masks(),
            [a.bits for a in self.atoms],
            self.atom_weights,
        )

    def restrict_to(self, window: PointSet) -> "PreMeasure":
        """Restriction to a finite-measure member; the result is a finite algebra over it.

        Because the ring is closed, the members inside the window are exactly
        the window-intersections of all members, so filtering suffices.
        """
        if window not in self.ring:
            raise PreconditionError(f"{window} is not a ring member")
        if self.value(window).is_infinite():
            raise PreconditionError(f"restriction window {window} has infinite measure")
        kept = [
            (m, v)
            for m, v in zip(self.ring.members, self.values)
            if not (m.bits & ~window.bits)
        ]
        sub_ring = SetRing(window, tuple(m for m, _ in kept))
        return PreMeasure(sub_ring, tuple(v for _, v in kept))
