"""JSON schemas (draft 2020-12) for every ``--format json`` output of the CLI."""

_element = {"type": "string"}
_nullable_element = {"type": ["string", "null"]}

_law = {
    "type": "object",
    "required": ["law", "passed", "checked", "hits", "counterexample"],
    "properties": {
        "law": {"type": "string"},
        "passed": {"type": "boolean"},
        "checked": {"type": "integer", "minimum": 0},
        "hits": {"type": "integer", "minimum": 0},
        "counterexample": {"type": ["array", "null"], "items": _element},
    },
    "additionalProperties": False,
}

_axiom_section = {
    "type": "object",
    "required": ["structure", "seed", "trials", "ok", "laws"],
    "properties": {
        "structure": {"type": "string"},
        "seed": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 1},
        "ok": {"type": "boolean"},
        "laws": {"type": "array", "items": _law},
    },
    "additionalProperties": False,
}

CHECK_AXIOMS = {
    "type": "object",
    "required": ["schema_version", "command", "ok", "axioms", "derived"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"const": "check-axioms"},
        "ok": {"type": "boolean"},
        "axioms": _axiom_section,
        "derived": _axiom_section,
    },
    "additionalProperties": False,
}

MACHINE_SUMMARY = {
    "type": "object",
    "required": ["schema_version", "command", "structure", "states", "finals", "transitions", "iota", "output"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"enum": ["build", "minimize"]},
        "structure": {"type": "string"},
        "states": {"type": "integer", "minimum": 1},
        "finals": {"type": "integer", "minimum": 0},
        "transitions": {"type": "integer", "minimum": 0},
        "iota": _element,
        "output": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

APPLY = {
    "type": "object",
    "required": ["schema_version", "command", "word", "defined", "output"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"const": "apply"},
        "word": {"type": "string"},
        "defined": {"type": "boolean"},
        "output": _nullable_element,
    },
    "additionalProperties": False,
}

EQUIV = {
    "type": "object",
    "required": ["schema_version", "command", "max_len", "equivalent", "counterexample", "left", "right", "compared"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"const": "equiv"},
        "max_len": {"type": "integer", "minimum": 0},
        "equivalent": {"type": "boolean"},
        "counterexample": {"type": ["string", "null"]},
        "left": _nullable_element,
        "right": _nullable_element,
        "compared": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

INDEX = {
    "type": "object",
    "required": ["schema_version", "command", "index", "essential_classes", "error_class", "representatives"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"const": "index"},
        "index": {"type": "integer", "minimum": 1},
        "essential_classes": {"type": "integer", "minimum": 0},
        "error_class": {"type": "boolean"},
        "representatives": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

_arc = {
    "type": "object",
    "required": ["from", "symbol", "to", "weight"],
    "properties": {
        "from": {"type": "integer"},
        "symbol": {"type": "string"},
        "to": {"type": "integer"},
        "weight": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
    },
    "additionalProperties": False,
}

REPLICATE = {
    "type": "object",
    "required": ["schema_version", "structure", "alphabet", "entries", "index", "essential_classes",
                 "error_class", "classes", "arcs", "negative_cycle", "transducer", "minimized_states",
                 "checks", "ok"],
    "properties": {
        "schema_version": {"const": 1},
        "structure": {"type": "string"},
        "alphabet": {"type": "array", "items": {"type": "string"}},
        "entries": {"type": "integer", "minimum": 0},
        "index": {"type": "integer", "minimum": 1},
        "essential_classes": {"type": "integer", "minimum": 0},
        "error_class": {"type": "boolean"},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "representative", "essential", "explored_members", "slice_size",
                             "anchor", "uniform_factor", "chosen_member", "potential"],
                "properties": {
                    "index": {"type": "integer"},
                    "representative": {"type": "string"},
                    "essential": {"type": "boolean"},
                    "explored_members": {"type": "integer"},
                    "slice_size": {"type": ["integer", "null"]},
                    "anchor": {"type": ["string", "null"]},
                    "uniform_factor": _nullable_element,
                    "chosen_member": {"type": ["string", "null"]},
                    "potential": {
                        "type": ["object", "null"],
                        "required": ["source", "path", "weight"],
                        "properties": {
                            "source": {"type": "integer"},
                            "path": {"type": "string"},
                            "weight": {"type": "string"},
                        },
                    },
                },
                "additionalProperties": False,
            },
        },
        "arcs": {"type": "array", "items": _arc},
        "negative_cycle": {"type": ["array", "null"], "items": _arc},
        "transducer": {
            "type": "object",
            "required": ["states", "iota", "trivial"],
            "properties": {
                "states": {"type": "integer", "minimum": 1},
                "iota": _element,
                "trivial": {"type": "boolean"},
            },
        },
        "minimized_states": {"type": "integer", "minimum": 1},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "detail", "checked"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "checked": {"type": "integer"},
                },
            },
        },
        "ok": {"type": "boolean"},
    },
    "additionalProperties": False,
}

ERROR = {
    "type": "object",
    "required": ["schema_version", "command", "error", "lemma"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"type": "string"},
        "error": {"type": "string"},
        "lemma": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

BY_COMMAND = {
    "check-axioms": CHECK_AXIOMS,
    "build": MACHINE_SUMMARY,
    "minimize": MACHINE_SUMMARY,
    "apply": APPLY,
    "equiv": EQUIV,
    "index": INDEX,
    "replicate": REPLICATE,
}
