"""Exact measure extension over finite set systems, by local approximation.

The package works with rings of subsets of a finite universe measured by an
exact pre-measure (values are rationals or infinity).  It computes outer and
inner measures, localized approximation distances, five measurability
classes and their coincidence pattern, the extended measure on the class of
locally approximable sets, measurable hulls, and a uniqueness analysis of
the extension.  A rational-interval backend demonstrates the same
approximation notions on periodic subsets of the line.
"""

from .errors import (
    InputError,
    MeasureExtError,
    PreconditionError,
    ResourceLimitError,
    UndefinedArithmetic,
)
from .quantity import INFINITY, ZERO, ExtendedQuantity, qsum
from .sets import (
    AtomPartition,
    PointSet,
    SetRing,
    atoms_of,
    disjointify,
    generate_ring,
    sym_diff,
)
from .premeasure import (
    FiniteMeasureFamily,
    PreMeasure,
    ValidationIssue,
    ValidationReport,
    validate_premeasure,
)
from .engine import (
    CoverWitness,
    global_distance,
    inner_measure,
    local_distance,
    outer_measure,
)
from .classify import (
    Classification,
    ClassMaps,
    ExtensionTable,
    UniquenessReport,
    class_maps,
    classify,
    extend,
    local_inner_outer,
    measurable_hull,
    uniqueness_report,
)
from .intervals import (
    DemoReport,
    DistanceCertificate,
    IntervalSet,
    WindowedSet,
    demo_local_approximability,
    global_distance_certificate,
    interval_local_distance,
    parse_interval_set,
    parse_windowed_set,
    window,
)
from .instancefile import InstanceFile
from .testkit import (
    SUITES,
    InstanceSpec,
    SuiteReport,
    oracle_outer,
    random_instance,
    run_suite,
    shrink_instance,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AtomPartition",
    "ClassMaps",
    "Classification",
    "CoverWitness",
    "DemoReport",
    "DistanceCertificate",
    "ExtendedQuantity",
    "ExtensionTable",
    "FiniteMeasureFamily",
    "INFINITY",
    "InputError",
    "InstanceFile",
    "InstanceSpec",
    "IntervalSet",
    "MeasureExtError",
    "PointSet",
    "PreMeasure",
    "PreconditionError",
    "ResourceLimitError",
    "SUITES",
    "SetRing",
    "SuiteReport",
    "UndefinedArithmetic",
    "UniquenessReport",
    "ValidationIssue",
    "ValidationReport",
    "WindowedSet",
    "ZERO",
    "atoms_of",
    "class_maps",
    "classify",
    "demo_local_approximability",
    "disjointify",
    "extend",
    "generate_ring",
    "global_distance",
    "global_distance_certificate",
    "inner_measure",
    "interval_local_distance",
    "local_distance",
    "local_inner_outer",
    "measurable_hull",
    "oracle_outer",
    "outer_measure",
    "parse_interval_set",
    "parse_windowed_set",
    "qsum",
    "random_instance",
    "run_suite",
    "shrink_instance",
    "sym_diff",
    "uniqueness_report",
    "validate_premeasure",
    "window",
    "__version__",
]
