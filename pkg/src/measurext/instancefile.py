"""The JSON instance format: universe labels, generators, and a measure.

A document looks like::

    {
      "universe": ["1", "2", "3", "4"],
      "generators": [["1", "2"], ["3", "4"]],
      "force_algebra": true,
      "measure": {"table": {"{}": "0", "{1,2}": "1", "{3,4}": "1", "{1,2,3,4}": "2"}}
    }

The measure is either a full ``table`` keyed by ring member, or ``atoms``
keyed by ring atom.  Set keys are comma-joined labels in braces; canonical
keys list labels in universe order, but any order is accepted on input.
Values are exact strings: "p/q", an integer string, or "inf" — never JSON
numbers.  Loading then dumping produces a canonical document; dumping is
idempotent from there, so files round-trip losslessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .classify import ExtensionTable
from .errors import InputError
from .premeasure import PreMeasure
from .sets import PointSet, atoms_of, generate_ring

_FORBIDDEN_IN_LABEL = set("{},\"")


@dataclass(frozen=True)
class InstanceFile:
    """A parsed instance document, still in label space."""

    universe: tuple[str, ...]
    generators: tuple[tuple[str, ...], ...]
    force_algebra: bool
    measure_kind: str  # "atoms" | "table"
    measure: tuple[tuple[str, str], ...]  # (set key, value string), as given

    def __post_init__(self):
        if not self.universe:
            raise InputError("universe must list at least one label")
        seen = set()
        for label in self.universe:
            if not isinstance(label, str) or not label:
                raise InputError(f"universe labels must be nonempty strings, got {label!r}")
            if _FORBIDDEN_IN_LABEL & set(label):
                raise InputError(f"label {label!r} contains a reserved character")
            if label in seen:
                raise InputError(f"duplicate universe label {label!r}")
            seen.add(label)
        if self.measure_kind not in ("atoms", "table"):
            raise InputError(
                f"measure must have exactly one of 'atoms' or 'table', got {self.measure_kind!r}"
            )

    # ---- label <-> position binding ------------------------------------

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i + 1 for i, label in enumerate(self.universe)}

    @property
    def size(self) -> int:
        return len(self.universe)

    def point_set(self, labels) -> PointSet:
        elements = []
        for label in labels:
            if label not in self._index:
                raise InputError(f"unknown label {label!r}")
            elements.append(self._index[label])
        if len(set(elements)) != len(elements):
            raise InputError(f"duplicate label in {list(labels)!r}")
        return PointSet.from_elements(self.size, elements)

    def parse_set_key(self, key: str) -> PointSet:
        text = key.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise InputError(f"set key {key!r} must be wrapped in braces")
        body = text[1:-1].strip()
        if not body:
            return PointSet.empty(self.size)
        return self.point_set(part.strip() for part in body.split(","))

    def format_set(self, ps: PointSet) -> str:
        if ps.universe_size != self.size:
            raise InputError("set belongs to a different universe")
        return "{" + ",".join(self.universe[e - 1] for e in ps.elements()) + "}"

    # ---- construction of the measured ring ------------------------------

    def build(self) -> PreMeasure:
        gens = [self.point_set(g) for g in self.generators]
        ring = generate_ring(
            gens, force_algebra=self.force_algebra, universe_size=self.size
        )
        table = {}
        for key, value in self.measure:
            ps = self.parse_set_key(key)
            if ps in table:
                raise InputError(f"measure.{self.measure_kind}: duplicate key {key!r}")
            table[ps] = value
        if self.measure_kind == "atoms":
            return PreMeasure.from_atom_weights(ring, table)
        return PreMeasure.from_table(ring, table)

    # ---- document (de)serialization --------------------------------------

    @classmethod
    def from_json_dict(cls, doc) -> "InstanceFile":
        if not isinstance(doc, dict):
            raise InputError("instance document must be a JSON object")
        extra = set(doc) - {"universe", "generators", "force_algebra", "measure"}
        if extra:
            raise InputError(f"unknown keys {sorted(extra)}")
        universe = doc.get("universe")
        if not isinstance(universe, list):
            raise InputError("'universe' must be a list of labels")
        generators = doc.get("generators", [])
        if not isinstance(generators, list) or any(
            not isinstance(g, list) for g in generators
        ):
            raise InputError("'generators' must be a list of label lists")
        for g in generators:
            for label in g:
                if not isinstance(label, str):
                    raise InputError(f"generator label {label!r} must be a string")
        force_algebra = doc.get("force_algebra", False)
        if not isinstance(force_algebra, bool):
            raise InputError("'force_algebra' must be a boolean")
        measure = doc.get("measure")
        if not isinstance(measure, dict) or len(measure) != 1:
            raise InputError("'measure' must be an object with exactly one of 'atoms' or 'table'")
        kind, mapping = next(iter(measure.items()))
        if not isinstance(mapping, dict):
            raise InputError(f"measure.{kind} must be an object")
        for key, value in mapping.items():
            if not isinstance(value, str):
                raise InputError(
                    f"measure.{kind}[{key!r}]: values must be strings like \"3/4\" or \"inf\", "
                    f"got {value!r}"
                )
        return cls(
            universe=tuple(universe),
            generators=tuple(tuple(g) for g in generators),
            force_algebra=force_algebra,
            measure_kind=kind,
            measure=tuple(mapping.items()),
        )

    @classmethod
    def loads(cls, text: str) -> "InstanceFile":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)

    @classmethod
    def load(cls, path) -> "InstanceFile":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        try:
            return cls.loads(text)
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from exc

    def to_json_dict(self) -> dict:
        """Canonical document: set keys in universe order, sorted by bitmask."""
        keyed = []
        for key, value in self.measure:
            ps = self.parse_set_key(key)
            keyed.append((ps.bits, self.format_set(ps), value))
        keyed.sort()
        return {
            "universe": list(self.universe),
            "generators": [list(g) for g in self.generators],
            "force_algebra": self.force_algebra,
            "measure": {self.measure_kind: {k: v for _, k, v in keyed}},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())


def document_for_extension(ext: ExtensionTable, universe: tuple[str, ...]) -> InstanceFile:
    """Serialize an extension as an instance file that rebuilds it exactly.

    The atoms of the measurable class generate it (every member is an atom
    union), so they make a compact generator list, and their masses pin the
    whole value table.
    """
    space_doc = InstanceFile(
        universe=universe,
        generators=(),
        force_algebra=False,
        measure_kind="atoms",
        measure=(),
    )
    m_bar = ext.as_premeasure()
    partition = atoms_of(ext.sigma_algebra)
    measure = tuple(
        (space_doc.format_set(a), str(m_bar.value(a))) for a in partition
    )
    generators = tuple(
        tuple(universe[e - 1] for e in a.elements()) for a in partition
    )
    return InstanceFile(
        universe=universe,
        generators=generators,
        force_algebra=False,
        measure_kind="atoms",
        measure=measure,
    )
