"""JSON Schema documents for the instance format and machine-readable output.

Values are always strings ("p/q", an integer string, or "inf"); nothing in
this package serializes a measure as a JSON number.  These schemas are data,
not enforced at runtime; the test suite validates real outputs against them.
"""

VALUE_STRING = {"type": "string", "pattern": r"^(?:-?[0-9]+(?:/[0-9]+)?|inf)$"}
SET_KEY = {"type": "string", "pattern": r"^\{[^{}]*\}$"}
LABEL = {"type": "string", "minLength": 1}

INSTANCE_FILE = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["universe", "generators", "force_algebra", "measure"],
    "additionalProperties": False,
    "properties": {
        "universe": {"type": "array", "items": LABEL, "minItems": 1},
        "generators": {"type": "array", "items": {"type": "array", "items": LABEL}},
        "force_algebra": {"type": "boolean"},
        "measure": {
            "type": "object",
            "minProperties": 1,
            "maxProperties": 1,
            "additionalProperties": False,
            "properties": {
                "atoms": {"type": "object", "additionalProperties": VALUE_STRING},
                "table": {"type": "object", "additionalProperties": VALUE_STRING},
            },
        },
    },
}

SUITE_REPORT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["suite", "count", "seed", "passed", "records"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "count": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "passed": {"type": "boolean"},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["instance", "property", "verdict", "witness"],
                "additionalProperties": False,
                "properties": {
                    "instance": {"type": "integer", "minimum": 0},
                    "property": {"type": "string"},
                    "verdict": {"enum": ["pass", "fail"]},
                    "witness": {"type": ["object", "null"]},
                },
            },
        },
    },
}

_ISSUE = {
    "type": "object",
    "required": ["kind", "subjects", "detail"],
    "additionalProperties": False,
    "properties": {
        "kind": {"enum": ["negative", "empty-set", "additivity", "monotonicity"]},
        "subjects": {"type": "array", "items": SET_KEY},
        "detail": {"type": "string"},
    },
}

VALIDATE_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "ok", "members", "issues"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "validate"},
        "ok": {"type": "boolean"},
        "members": {"type": "integer", "minimum": 1},
        "issues": {"type": "array", "items": _ISSUE},
    },
}

_VALUE_OR_INF = VALUE_STRING
_NULLABLE_SET = {"anyOf": [SET_KEY, {"type": "null"}]}

CLASSIFY_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "set", "verdicts", "evidence", "probe_verdicts"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "classify"},
        "set": SET_KEY,
        "verdicts": {
            "type": "object",
            "required": ["m", "m_ca", "m_ca_fin", "m_co", "m_co_fin"],
            "additionalProperties": False,
            "properties": {name: {"type": "boolean"} for name in
                           ("m", "m_ca", "m_ca_fin", "m_co", "m_co_fin")},
        },
        "evidence": {"type": "object"},
        "probe_verdicts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["probe", "outer", "inner", "measurable"],
                "additionalProperties": False,
                "properties": {
                    "probe": SET_KEY,
                    "outer": _VALUE_OR_INF,
                    "inner": _VALUE_OR_INF,
                    "measurable": {"type": "boolean"},
                },
            },
        },
    },
}

MEASURE_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "set", "kind", "value", "witness"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "measure"},
        "set": SET_KEY,
        "kind": {"enum": ["outer", "inner"]},
        "value": _VALUE_OR_INF,
        "witness": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["cover", "total", "disjoint"],
                    "additionalProperties": False,
                    "properties": {
                        "cover": {"type": "array", "items": SET_KEY},
                        "total": _VALUE_OR_INF,
                        "disjoint": {"type": "boolean"},
                    },
                },
            ]
        },
    },
}

DISTANCE_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "e", "f", "probe", "value"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "distance"},
        "e": SET_KEY,
        "f": SET_KEY,
        "probe": _NULLABLE_SET,
        "value": _VALUE_OR_INF,
    },
}

EXTEND_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "members", "atoms", "table", "written"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "extend"},
        "members": {"type": "integer", "minimum": 1},
        "atoms": {"type": "integer", "minimum": 0},
        "table": {"type": "object", "additionalProperties": _VALUE_OR_INF},
        "written": {"type": ["string", "null"]},
    },
}

HULL_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "set", "hull", "value"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "hull"},
        "set": SET_KEY,
        "hull": _NULLABLE_SET,
        "value": _VALUE_OR_INF,
    },
}

UNIQUE_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": [
        "command", "unique", "sigma_finite", "finite_partition", "free_atoms",
        "alternative",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "unique"},
        "unique": {"type": "boolean"},
        "sigma_finite": {"type": "boolean"},
        "finite_partition": {
            "anyOf": [{"type": "null"}, {"type": "array", "items": SET_KEY}]
        },
        "free_atoms": {"type": "array", "items": SET_KEY},
        "alternative": {
            "anyOf": [
                {"type": "null"},
                {"type": "object", "additionalProperties": _VALUE_OR_INF},
            ]
        },
    },
}

INTERVAL_DEMO_OUTPUT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "subject", "entries", "certificates", "ok"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "interval-demo"},
        "subject": {"type": "string"},
        "ok": {"type": "boolean"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["probe", "witness", "distance"],
                "additionalProperties": False,
                "properties": {
                    "probe": {"type": "string"},
                    "witness": {"type": "string"},
                    "distance": _VALUE_OR_INF,
                },
            },
        },
        "certificates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "member", "value", "period", "tail_mass_left", "tail_mass_right",
                    "threshold_left", "threshold_right", "core",
                ],
                "additionalProperties": False,
                "properties": {
                    "member": {"type": "string"},
                    "value": _VALUE_OR_INF,
                    "period": VALUE_STRING,
                    "tail_mass_left": VALUE_STRING,
                    "tail_mass_right": VALUE_STRING,
                    "threshold_left": VALUE_STRING,
                    "threshold_right": VALUE_STRING,
                    "core": {"type": ["string", "null"]},
                },
            },
        },
    },
}

CLI_OUTPUTS = {
    "validate": VALIDATE_OUTPUT,
    "classify": CLASSIFY_OUTPUT,
    "measure": MEASURE_OUTPUT,
    "distance": DISTANCE_OUTPUT,
    "extend": EXTEND_OUTPUT,
    "hull": HULL_OUTPUT,
    "unique": UNIQUE_OUTPUT,
    "suite": SUITE_REPORT,
    "interval-demo": INTERVAL_DEMO_OUTPUT,
}
