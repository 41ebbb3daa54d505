"""Run configuration: a versioned JSON document validated before use.

Unknown keys are rejected at every level so that misspelled options fail
loudly instead of silently running with defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

PROFILE_SPEC_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "csv": {"type": "string"},
        "builtin": {"enum": ["gaussian", "hermite", "ball_poly", "zero"]},
        "sigma": {"type": "number", "exclusiveMinimum": 0},
        "power": {"type": "integer", "minimum": 1},
    },
}

CONFIG_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["version"],
    "properties": {
        "version": {"const": "1"},
        "geometry": {
            "type": "object",
            "additionalProperties": False,
            "required": ["n", "gamma"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "gamma": {"type": "number", "minimum": 0},
            },
        },
        "grid": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "r_max": {"type": "number", "exclusiveMinimum": 0},
                "N": {"type": "integer", "minimum": 16},
                "grading": {"enum": ["uniform", "graded"]},
            },
        },
        "quadrature": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "tol": {"type": "number", "exclusiveMinimum": 0},
                "max_panels": {"type": "integer", "minimum": 64},
            },
        },
        "psi": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "a": {"type": "number", "exclusiveMinimum": 0},
                "b": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "suite": {"type": "string"},
        "output_dir": {"type": "string"},
        "transform": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"input": {"type": "string"}},
        },
        "propagate": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "f": PROFILE_SPEC_SCHEMA,
                "g": PROFILE_SPEC_SCHEMA,
                "t_list": {"type": "array", "minItems": 1,
                           "items": {"type": "number"}},
                "export_symbols": {"type": "boolean"},
            },
        },
        "verify": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "tolerance_override": {"type": ["number", "null"]},
            },
        },
        "sweep": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["wave", "multiplier", "power"]},
                "line": {"enum": ["upper", "lower"]},
                "alpha": {"type": "number"},
                "p_list": {"type": "array", "items": {"type": "number"}},
                "pairs": {"type": "array",
                          "items": {"type": "array", "minItems": 2,
                                    "maxItems": 2,
                                    "items": {"type": ["number", "string"]}}},
                "t_list": {"type": "array", "items": {"type": "number"}},
                "t_exp": {"type": "number"},
                "p": {"type": "number"},
                "q": {"type": "number"},
                "rank_one_mixed": {"type": "boolean"},
                "lambda_min_exp": {"type": "integer"},
                "lambda_max_exp": {"type": "integer"},
                "expect_growth": {"type": "boolean"},
            },
        },
    },
}

DEFAULTS = {
    "geometry": {"n": 3, "gamma": 0.0},
    "grid": {"r_max": 64.0, "N": 4096, "grading": "graded"},
    "quadrature": {"tol": 1e-8, "max_panels": 200000},
    "psi": {"a": 1.0, "b": 2.0},
}


@dataclass
class RunConfig:
    raw: dict = field(default_factory=dict)

    @property
    def geometry(self):
        from .geometry import DunklGeometry
        g = {**DEFAULTS["geometry"], **self.raw.get("geometry", {})}
        return DunklGeometry(n=g["n"], gamma=g["gamma"])

    @property
    def grid_params(self) -> dict:
        return {**DEFAULTS["grid"], **self.raw.get("grid", {})}

    @property
    def psi_params(self) -> dict:
        return {**DEFAULTS["psi"], **self.raw.get("psi", {})}

    @property
    def quadrature(self) -> dict:
        return {**DEFAULTS["quadrature"], **self.raw.get("quadrature", {})}

    def section(self, name: str) -> dict:
        return dict(self.raw.get(name, {}))


def load_config(path: str) -> RunConfig:
    """Parse and validate; schema violations raise ``ValueError``."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON ({exc})") from exc
    return validate_config(data, source=path)


def validate_config(data: dict, source: str = "<config>") -> RunConfig:
    try:
        jsonschema.validate(data, CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ValueError(f"{source}: invalid configuration: "
                         f"{exc.message} (at {'/'.join(map(str, exc.path))})"
                         ) from exc
    psi = {**DEFAULTS["psi"], **data.get("psi", {})}
    if psi["a"] >= psi["b"]:
        raise ValueError(f"{source}: psi cutoff needs a < b")
    return RunConfig(raw=data)
