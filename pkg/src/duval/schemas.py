"""JSON Schemas for ``duval --format json`` output, keyed by subcommand."""
from __future__ import annotations

SCHEMA_VERSION = 1

_int_list = {"type": "array", "items": {"type": "integer"}}
_str_list = {"type": "array", "items": {"type": "string"}}
_cycle = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}
_ade = {"type": "string", "pattern": "^(A[1-9][0-9]*|D([4-9]|[1-9][0-9]+)|E[678])$"}

GRAPH = {
    "type": "object",
    "required": ["vertices", "edges"],
    "additionalProperties": False,
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "weight", "genus"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "pattern": "^[A-Za-z0-9_]+$"},
                    "weight": {"type": "integer"},
                    "genus": {"type": "integer", "minimum": 0},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["u", "v", "mult"],
                "additionalProperties": False,
                "properties": {
                    "u": {"type": "string"},
                    "v": {"type": "string"},
                    "mult": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}


def _envelope(command: str, properties: dict, required: list[str]) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "additionalProperties": False,
        "required": ["schema", "command", *required],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "command": {"const": command},
            **properties,
        },
    }


_classification = {
    "type": "object",
    "required": ["type", "reason", "witness"],
    "additionalProperties": False,
    "properties": {
        "type": {"oneOf": [_ade, {"type": "null"}]},
        "reason": {"type": ["string", "null"]},
        "witness": {"type": "array", "items": {"type": ["string", "integer"]}},
    },
}

SCHEMAS: dict[str, dict] = {
    "check": _envelope(
        "check",
        {
            "graph": {"type": "string"},
            "vertices": _str_list,
            "definiteness": {
                "type": "object",
                "required": ["kind", "witness"],
                "additionalProperties": False,
                "properties": {
                    "kind": {"enum": ["negative_definite", "negative_semidefinite_degenerate", "indefinite"]},
                    "witness": {"oneOf": [_int_list, {"type": "null"}]},
                },
            },
            "classification": _classification,
            "fundamental_cycle": {"oneOf": [_cycle, {"type": "null"}]},
            "arithmetic_genus": {"type": ["integer", "null"]},
            "rational": {"type": ["boolean", "null"]},
            "multiplicity": {"type": ["integer", "null"]},
            "refusal": {"type": ["string", "null"]},
        },
        ["graph", "vertices", "definiteness", "classification", "fundamental_cycle",
         "arithmetic_genus", "rational", "multiplicity", "refusal"],
    ),
    "classify": _envelope(
        "classify",
        {"graph": {"type": "string"}, "classification": _classification},
        ["graph", "classification"],
    ),
    "zn": _envelope(
        "zn",
        {"graph": {"type": "string"}, "fundamental_cycle": _cycle},
        ["graph", "fundamental_cycle"],
    ),
    "rational": _envelope(
        "rational",
        {
            "graph": {"type": "string"},
            "rational": {"type": "boolean"},
            "arithmetic_genus": {"type": "integer"},
        },
        ["graph", "rational", "arithmetic_genus"],
    ),
    "mult": _envelope(
        "mult",
        {"graph": {"type": "string"}, "multiplicity": {"type": "integer", "minimum": 1}},
        ["graph", "multiplicity"],
    ),
    "gen": _envelope(
        "gen",
        {"name": {"type": "string"}, "graph": GRAPH},
        ["name", "graph"],
    ),
    "hj": _envelope(
        "hj",
        {
            "n": {"type": "integer", "minimum": 2},
            "q": {"type": "integer", "minimum": 1},
            "chain": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1},
            "graph": GRAPH,
        },
        ["n", "q", "chain", "graph"],
    ),
    "mckay": _envelope(
        "mckay",
        {
            "group": {"type": "string"},
            "type": _ade,
            "order": {"type": "integer", "minimum": 2},
            "equation": {
                "type": "object",
                "required": ["text", "monomials"],
                "additionalProperties": False,
                "properties": {
                    "text": {"type": "string"},
                    "monomials": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["coefficient", "exponents"],
                            "additionalProperties": False,
                            "properties": {
                                "coefficient": {"type": "integer"},
                                "exponents": {**_int_list, "minItems": 3, "maxItems": 3},
                            },
                        },
                    },
                },
            },
            "graph": GRAPH,
        },
        ["group", "type", "order", "equation", "graph"],
    ),
    "roots": _envelope(
        "roots",
        {
            "type": _ade,
            "order": _str_list,
            "count": {"type": "integer", "minimum": 2},
            "positive_count": {"type": "integer", "minimum": 1},
            "highest_root": _int_list,
            "cartan_determinant": {"type": "integer", "minimum": 1},
        },
        ["type", "order", "count", "positive_count", "highest_root", "cartan_determinant"],
    ),
}
