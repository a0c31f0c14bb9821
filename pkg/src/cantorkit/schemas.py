"""JSON Schemas for the machine-readable outputs of the ``cantor`` CLI."""

FRACTION = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
PAPER_FRACTION = {"type": "string", "pattern": r"^-?[\d.e+-]+/\d+$"}
INTERVALS = {
    "type": "array",
    "items": {"type": "array", "items": FRACTION, "minItems": 2, "maxItems": 2},
}

ENDPOINTS = {
    "type": "object",
    "required": ["p", "q", "n", "fraction_style", "rows"],
    "properties": {
        "p": {"type": "integer"},
        "q": {"type": "integer"},
        "n": {"type": "integer", "minimum": 0},
        "fraction_style": {"enum": ["reduced", "paper"]},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["k", "a", "b", "interval"],
                "properties": {
                    "k": {"type": "integer", "minimum": 0},
                    "a": {"anyOf": [FRACTION, PAPER_FRACTION]},
                    "b": {"anyOf": [FRACTION, PAPER_FRACTION]},
                    "interval": {"type": "string"},
                },
            },
        },
    },
}

STAGE = {
    "type": "object",
    "required": ["spec", "stage", "intervals", "length"],
    "properties": {
        "spec": {"type": "string"},
        "stage": {"type": "integer"},
        "intervals": INTERVALS,
        "length": FRACTION,
    },
}

GAP_STATISTICS = {
    "type": "object",
    "required": ["stage", "count", "min_gap", "max_gap", "total_gap", "histogram"],
    "properties": {
        "stage": {"type": ["integer", "null"]},
        "count": {"type": "integer", "minimum": 0},
        "min_gap": {"anyOf": [FRACTION, {"type": "null"}]},
        "max_gap": {"anyOf": [FRACTION, {"type": "null"}]},
        "total_gap": FRACTION,
        "histogram": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [FRACTION, {"type": "integer"}],
                      "minItems": 2, "maxItems": 2},
        },
    },
}

GAPS = {
    "type": "object",
    "required": ["spec", "stage", "gaps", "statistics", "thickness_proxy"],
    "properties": {
        "spec": {"type": "string"},
        "stage": {"type": "integer"},
        "gaps": INTERVALS,
        "statistics": GAP_STATISTICS,
        "thickness_proxy": {"anyOf": [FRACTION, {"type": "null"}]},
    },
}

MEASURE = {
    "type": "object",
    "required": ["p", "q", "measure", "profile"],
    "properties": {
        "p": {"type": "integer"},
        "q": {"type": "integer"},
        "measure": FRACTION,
        "profile": {
            "type": "array",
            "items": {"type": "object", "required": ["n", "measure"],
                      "properties": {"n": {"type": "integer"}, "measure": FRACTION}},
        },
    },
}

DIMENSION = {
    "type": "object",
    "required": ["maps", "ratio_reciprocal", "decimal"],
    "properties": {
        "maps": {"type": "integer", "minimum": 2},
        "ratio_reciprocal": {"type": "integer", "minimum": 2},
        "decimal": {"type": "string", "pattern": r"^\d+(\.\d+)?$"},
    },
}

CDF_SAMPLES = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["x", "lower", "upper", "stage"],
        "properties": {"x": FRACTION, "lower": FRACTION, "upper": FRACTION,
                       "stage": {"type": "integer"}},
    },
}

COMPARISON_REPORT = {
    "type": "object",
    "required": ["left_label", "right_label", "stage", "equal",
                 "left_minus_right", "right_minus_left", "witness"],
    "properties": {
        "left_label": {"type": "string"},
        "right_label": {"type": "string"},
        "stage": {"type": "integer"},
        "equal": {"type": "boolean"},
        "left_minus_right": INTERVALS,
        "right_minus_left": INTERVALS,
        "witness": {"anyOf": [FRACTION, {"type": "null"}]},
        "witness_in_digit_set": {"type": ["boolean", "null"]},
    },
}

VERIFY = {
    "type": "object",
    "required": ["check", "all_equal", "reports"],
    "properties": {
        "check": {"enum": ["gamma3", "digit", "gamma2", "corollary"]},
        "all_equal": {"type": "boolean"},
        "reports": {"type": "array", "items": COMPARISON_REPORT},
    },
}

INTERSECT = {
    "type": "object",
    "required": ["a", "b", "t", "stage", "intervals", "length"],
    "properties": {
        "a": {"type": "string"},
        "b": {"type": "string"},
        "t": FRACTION,
        "stage": {"type": "integer"},
        "intervals": INTERVALS,
        "length": FRACTION,
    },
}

SWEEP = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["t", "length", "components"],
        "properties": {"t": FRACTION, "length": FRACTION, "components": {"type": "integer"}},
    },
}

BY_COMMAND = {
    "endpoints": ENDPOINTS,
    "stage": STAGE,
    "gaps": GAPS,
    "measure": MEASURE,
    "dim": DIMENSION,
    "cdf": CDF_SAMPLES,
    "verify": VERIFY,
    "intersect": INTERSECT,
}
