"""Published JSON schema for CLI result envelopes.

Every ``--format json`` payload of the CLI validates against
``ENVELOPE_SCHEMA``.  Rationals are always exact strings ("2", "-3/4"),
never floats.
"""

ENVELOPE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "supervol result envelope",
    "type": "object",
    "required": ["command", "params", "result", "rules"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "result": {},
        "rules": {"type": "array", "items": {"type": "string"}},
    },
}

VOLUME_EXPR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "exact symbolic volume",
    "type": "object",
    "required": ["coeff", "two_pi_power", "atoms"],
    "additionalProperties": False,
    "properties": {
        "coeff": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
        "two_pi_power": {"type": "integer"},
        "atoms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "exp"],
                "additionalProperties": False,
                "properties": {
                    "a": {"type": "integer", "minimum": 1},
                    "b": {"type": "integer", "minimum": 2},
                    "exp": {"type": "integer"},
                },
            },
        },
    },
}
