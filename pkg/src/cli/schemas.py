"""Run configurations: YAML file plus flag overrides, validated with marshmallow."""

import hashlib
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional, Union

import yaml
from marshmallow import Schema, ValidationError, fields, post_load, validate, validates, validates_schema

from config import DEFAULT_SEED
from gf import FieldError, parse_field

from .exceptions import UsageError

SUBCOMMANDS = ["thresholds", "solve-qdp", "reduce", "pgm", "prange", "verify", "sweep"]
SOLVERS = ["usd", "partial_usd", "pgm", "ml"]
VARIANTS = ["usd_path", "pgm_plain", "pgm_tweaked", "pgm_counterexample"]
CODE_FAMILIES = ["random", "repetition"]

# never part of the config hash
OUTPUT_KEYS = ("out",)


@dataclass
class RunConfig:
    subcommand: str
    field: str = "2"
    n: Optional[int] = None
    k: Optional[int] = None
    omega: Optional[float] = None
    omega_prime: Optional[float] = None
    theta: Optional[float] = None
    keep_fraction: Optional[float] = None
    epsilon: Optional[float] = None
    trials: int = 1
    seed: int = DEFAULT_SEED
    budget: Optional[int] = None
    workers: Optional[int] = None
    solver: str = "usd"
    variant: str = "usd_path"
    code: str = "random"
    rates: Optional[List[float]] = None
    omega_grid: Optional[List[float]] = None
    out: Optional[str] = None
    format: str = "csv"

    def to_dict(self) -> dict:
        return asdict(self)

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise UsageError(f"{self.subcommand} needs {flags}")

    @property
    def config_hash(self) -> str:
        return config_hash(self)


class RunConfigSchema(Schema):
    subcommand = fields.String(required=True, validate=validate.OneOf(SUBCOMMANDS))
    field = fields.String(load_default="2")
    n = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))
    k = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=0))
    omega = fields.Float(load_default=None, allow_none=True, validate=validate.Range(min=0.0, max=1.0))
    omega_prime = fields.Float(load_default=None, allow_none=True, validate=validate.Range(min=0.0, max=1.0))
    theta = fields.Float(load_default=None, allow_none=True,
                         validate=validate.Range(min=0.0, max=2 * math.pi, max_inclusive=False))
    keep_fraction = fields.Float(load_default=None, allow_none=True, validate=validate.Range(min=0.0, max=1.0))
    epsilon = fields.Float(load_default=None, allow_none=True, validate=validate.Range(min=0.0, min_inclusive=False))
    trials = fields.Integer(load_default=1, validate=validate.Range(min=1))
    seed = fields.Integer(load_default=DEFAULT_SEED, validate=validate.Range(min=0))
    budget = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))
    workers = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))
    solver = fields.String(load_default="usd", validate=validate.OneOf(SOLVERS))
    variant = fields.String(load_default="usd_path", validate=validate.OneOf(VARIANTS))
    code = fields.String(load_default="random", validate=validate.OneOf(CODE_FAMILIES))
    rates = fields.List(fields.Float(validate=validate.Range(min=0.0, max=1.0)), load_default=None, allow_none=True)
    omega_grid = fields.List(fields.Float(validate=validate.Range(min=0.0, max=1.0)), load_default=None, allow_none=True)
    out = fields.String(load_default=None, allow_none=True)
    format = fields.String(load_default="csv", validate=validate.OneOf(["csv", "json"]))

    @validates("field")
    def validate_field(self, value, **kwargs):
        try:
            parse_field(value)
        except FieldError as err:
            raise ValidationError(str(err))

    @validates_schema
    def validate_dimensions(self, data, **kwargs):
        n, k = data.get("n"), data.get("k")
        if n is not None and k is not None and k > n:
            raise ValidationError(f"k={k} exceeds n={n}", field_name="k")
        omega, omega_prime = data.get("omega"), data.get("omega_prime")
        if data.get("solver") == "partial_usd" and omega is not None and omega_prime is not None and omega_prime > omega:
            raise ValidationError("omega_prime must not exceed omega", field_name="omega_prime")

    @post_load
    def make_config(self, data, **kwargs) -> RunConfig:
        return RunConfig(**data)


def load_run_config(values: dict, path: Optional[Union[str, Path]] = None) -> RunConfig:
    """Validate `values` layered over the YAML file at `path` (flags win)."""
    merged = {}
    if path is not None:
        try:
            with open(path, "r") as f:
                merged.update(yaml.safe_load(f) or {})
        except (OSError, yaml.YAMLError) as err:
            raise UsageError(f"cannot read config file {path}: {err}")
    merged.update({key: value for key, value in values.items() if value is not None})
    try:
        return RunConfigSchema().load(merged)
    except ValidationError as err:
        raise UsageError(f"invalid run configuration: {err.messages}")


def save_run_config(run_config: RunConfig, path: Union[str, Path]) -> None:
    with open(path, "w") as f:
        yaml.safe_dump(run_config.to_dict(), f, sort_keys=True)


def config_hash(run_config: RunConfig) -> str:
    """SHA-256 of the canonical JSON of everything but the output location."""
    payload = {key: value for key, value in run_config.to_dict().items() if key not in OUTPUT_KEYS}
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
