"""JSON Schemas for every CLI subcommand's --format json output.

These are the documented, stable output contracts; the test suite
validates real CLI output against them.
"""

_COEFFS = {"type": "array", "items": {"type": "integer"}, "minItems": 1}

_ROOT = {
    "type": "object",
    "properties": {
        "residue": {"type": "integer", "minimum": 0},
        "singular": {"type": "boolean"},
        "derivative_residue": {"type": "integer", "minimum": 0},
    },
    "required": ["residue", "singular", "derivative_residue"],
    "additionalProperties": False,
}

_NODE = {
    "type": "object",
    "properties": {
        "id": {"type": "integer", "minimum": 0},
        "value": {"type": "integer", "minimum": 0},
        "depth": {"type": "integer", "minimum": 0},
        "status": {
            "enum": ["expanded", "singular-leaf", "no-preimage-leaf", "frontier"]
        },
        "parent": {"type": ["integer", "null"]},
    },
    "required": ["id", "value", "depth", "status", "parent"],
    "additionalProperties": False,
}

ROOTS_SCHEMA = {
    "type": "object",
    "properties": {
        "poly": _COEFFS,
        "prime": {"type": "integer"},
        "target": {"type": "integer"},
        "roots": {"type": "array", "items": _ROOT},
        "degenerate": {"type": "boolean"},
    },
    "required": ["poly", "prime", "target", "roots", "degenerate"],
    "additionalProperties": False,
}

ORACLE_SCHEMA = {
    "type": "object",
    "properties": {
        "poly": _COEFFS,
        "modulus": {"type": "integer", "minimum": 2},
        "target": {"type": "integer"},
        "solutions": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": ["poly", "modulus", "target", "solutions"],
    "additionalProperties": False,
}

LIFT_SCHEMA = {
    "type": "object",
    "properties": {
        "poly": _COEFFS,
        "prime": {"type": "integer"},
        "precision": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "target": {"type": "integer"},
        "ladder": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "root": {"type": "integer", "minimum": 0},
        "digits": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": [
        "poly", "prime", "precision", "seed", "target", "ladder", "root", "digits",
    ],
    "additionalProperties": False,
}

PREIMAGES_SCHEMA = {
    "type": "object",
    "properties": {
        "poly": _COEFFS,
        "prime": {"type": "integer"},
        "precision": {"type": "integer", "minimum": 1},
        "target": {"type": "integer", "minimum": 0},
        "lifted": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "singular": {"type": "array", "items": _ROOT},
    },
    "required": ["poly", "prime", "precision", "target", "lifted", "singular"],
    "additionalProperties": False,
}

TREE_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer"},
        "k": {"type": "integer", "minimum": 1},
        "poly": _COEFFS,
        "seed": {"type": "integer", "minimum": 0},
        "depth": {"type": "integer", "minimum": 0},
        "complete": {"type": "boolean"},
        "nodes": {"type": "array", "items": _NODE, "minItems": 1},
    },
    "required": ["p", "k", "poly", "seed", "depth", "complete", "nodes"],
    "additionalProperties": False,
}

ORBIT_SCHEMA = {
    "type": "object",
    "properties": {
        "poly": _COEFFS,
        "prime": {"type": "integer"},
        "precision": {"type": "integer", "minimum": 1},
        "start": {"type": "integer"},
        "steps": {"type": "integer", "minimum": 0},
        "orbit": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "preperiodic": {"type": "boolean"},
        "tail_length": {"type": ["integer", "null"]},
        "cycle_length": {"type": ["integer", "null"]},
    },
    "required": [
        "poly", "prime", "precision", "start", "steps", "orbit",
        "preperiodic", "tail_length", "cycle_length",
    ],
    "additionalProperties": False,
}

DIST_SCHEMA = {
    "type": "object",
    "properties": {
        "metric": {"enum": ["series", "first-diff"]},
        "prime": {"type": ["integer", "null"]},
        "s": {"type": "array", "items": {"type": "integer"}},
        "t": {"type": "array", "items": {"type": "integer"}},
        "distance": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    },
    "required": ["metric", "prime", "s", "t", "distance"],
    "additionalProperties": False,
}

ERROR_SCHEMA = {
    "type": "object",
    "properties": {
        "error": {
            "type": "object",
            "properties": {
                "type": {"type": "string"},
                "message": {"type": "string"},
            },
            "required": ["type", "message"],
            "additionalProperties": False,
        },
    },
    "required": ["error"],
    "additionalProperties": False,
}

SCHEMAS = {
    "roots": ROOTS_SCHEMA,
    "oracle": ORACLE_SCHEMA,
    "lift": LIFT_SCHEMA,
    "preimages": PREIMAGES_SCHEMA,
    "tree": TREE_SCHEMA,
    "orbit": ORBIT_SCHEMA,
    "dist": DIST_SCHEMA,
    "error": ERROR_SCHEMA,
}
