"""JSON Schema (draft 2020-12) for the CLI's ``--format json`` output.

Every rational is an exact string such as ``"5/2"`` or ``"-3"``; complex
coefficients use ``"a+bi"``.  Integers are used only for counts, indices and
the sampling size.  One JSON object is written per input line.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
COEFF = {"type": "string", "pattern": r"^[-+0-9/i]+$"}
COEFFS = {"type": "array", "items": COEFF}
NULLABLE_COEFFS = {"type": ["array", "null"], "items": COEFF}

DISTRIBUTION = {
    "type": "object",
    "required": ["n_minus", "n_plus", "n_axis", "axis_polynomial"],
    "properties": {
        "n_minus": {"type": "integer", "minimum": 0},
        "n_plus": {"type": "integer", "minimum": 0},
        "n_axis": {"type": "integer", "minimum": 0},
        "axis_polynomial": NULLABLE_COEFFS,
    },
}
NULLABLE_DISTRIBUTION = {"anyOf": [DISTRIBUTION, {"type": "null"}]}
FUNCTION = {
    "type": "object",
    "required": ["num", "den"],
    "properties": {"num": COEFFS, "den": COEFFS},
}

COMMANDS = {
    "stability": {
        "required": ["verdict", "distribution"],
        "properties": {
            "verdict": {"type": "string"},
            "method": {"const": "sturm"},
            "stable": {"type": "boolean"},
            "kind": {"enum": ["Stable", "UnstableOffAxis", "SimpleZeroRoot",
                              "ConjugatePairOnAxis", "DoubleZeroRoot", "Inconclusive"]},
            "case": {"enum": ["a", "b", "c", "d", "e", None]},
            "completed": {"type": "boolean"},
            "h": {"type": "array", "items": RATIONAL},
            "distribution": DISTRIBUTION,
        },
    },
    "distribution": {
        "required": ["method", "n_minus", "n_plus", "n_axis", "axis_polynomial"],
        "properties": {
            "method": {"enum": ["sturm", "routh", "hurwitz", "hankel", "cf"]},
            "note": {"type": ["string", "null"]},
            **DISTRIBUTION["properties"],
        },
    },
    "hurwitz": {
        "required": ["minors", "stable", "lienard_chipart", "quotient_sequence", "distribution"],
        "properties": {
            "minors": {"type": "array", "items": RATIONAL},
            "stable": {"type": "boolean"},
            "lienard_chipart": {"type": "boolean"},
            "quotient_sequence": {"type": ["array", "null"], "items": RATIONAL},
            "distribution": NULLABLE_DISTRIBUTION,
        },
    },
    "hankel": {
        "required": ["function", "markov", "minors", "shifted_minors", "rank", "signature",
                     "proper"],
        "properties": {
            "function": FUNCTION,
            "markov": {"type": "array", "items": RATIONAL},
            "minors": {"type": "array", "items": RATIONAL},
            "shifted_minors": {"type": "array", "items": RATIONAL},
            "rank": {"type": "integer", "minimum": 0},
            "signature": {"type": "integer"},
            "proper": {"type": "boolean"},
        },
    },
    "cf": {
        "required": ["function", "quotients", "index", "proper"],
        "properties": {
            "function": FUNCTION,
            "quotients": {"type": "array", "items": COEFFS},
            "index": {"type": "integer"},
            "proper": {"type": "boolean"},
        },
    },
    "hodograph": {
        "required": ["points", "out", "delta_over_pi", "crossing_indices", "n_minus", "n_plus"],
        "properties": {
            "points": {"type": "integer", "minimum": 2},
            "out": {"type": ["string", "null"]},
            "plot_format": {"enum": ["csv", "svg"]},
            "delta_over_pi": {"type": "integer"},
            "crossing_indices": {"type": "array", "items": {"enum": [-1, 1]}},
            "n_minus": {"type": "integer", "minimum": 0},
            "n_plus": {"type": "integer", "minimum": 0},
        },
    },
    "lorenz": {
        "required": ["sigma", "r", "b", "r_star", "fixed_points", "p0", "p0_verdict", "p12",
                     "p12_verdict", "p12_distribution"],
        "properties": {
            "sigma": RATIONAL,
            "r": RATIONAL,
            "b": RATIONAL,
            "r_star": {"anyOf": [RATIONAL, {"const": "inf"}]},
            "fixed_points": {"type": "array", "items": {"type": "string"}, "minItems": 1,
                             "maxItems": 3},
            "p0": COEFFS,
            "p0_verdict": {"type": "string"},
            "p12": NULLABLE_COEFFS,
            "p12_verdict": {"type": ["string", "null"]},
            "p12_distribution": NULLABLE_DISTRIBUTION,
        },
    },
    "crosscheck": {
        "required": ["agree", "methods"],
        "properties": {
            "agree": {"type": "boolean"},
            "methods": {
                "type": "array",
                "minItems": 5,
                "maxItems": 5,
                "items": {
                    "type": "object",
                    "required": ["method", "applicable", "note", "distribution"],
                    "properties": {
                        "method": {"enum": ["sturm", "routh", "hurwitz", "hankel", "cf"]},
                        "applicable": {"type": "boolean"},
                        "note": {"type": ["string", "null"]},
                        "distribution": NULLABLE_DISTRIBUTION,
                    },
                },
            },
        },
    },
}


def _branch(name: str, body: dict) -> dict:
    props = {"command": {"const": name}, **body["properties"]}
    if name != "lorenz":
        props["input"] = {"type": "string"}
    required = ["command", *body["required"]] + (["input"] if name != "lorenz" else [])
    return {
        "if": {"properties": {"command": {"const": name}}},
        "then": {"properties": props, "required": required},
    }


RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "routh-hurwitz CLI result",
    "type": "object",
    "required": ["command"],
    "properties": {"command": {"enum": sorted(COMMANDS)}},
    "allOf": [_branch(name, body) for name, body in COMMANDS.items()],
}
