"""Runtime configuration.

Precedence, strongest first: explicit flags / keyword overrides, then the
environment (KHS_CACHE, KHS_KV_BOUND, KHS_CP_MODE, KHS_KERNEL), then an
optional JSON config file, then built-in defaults.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

__all__ = ["Config", "load_config", "DEFAULT_KV_BOUND", "CALIBRATED", "LITERAL"]

CALIBRATED = "calibrated"
LITERAL = "literal"

# Published verification range for the class-number condition on the real
# cyclotomic subfield; the condition is not decidable from Bernoulli data,
# so below this bound we report "holds" and above it "unknown".
DEFAULT_KV_BOUND = 2**31

_ENV_KEYS = {
    "bernoulli_cache_path": "KHS_CACHE",
    "verified_kv_bound": "KHS_KV_BOUND",
    "default_cp_mode": "KHS_CP_MODE",
}


def default_cache_path() -> Path:
    return Path(os.path.expanduser("~/.cache/khs/bernoulli.tsv"))


@dataclass(frozen=True)
class Config:
    bernoulli_cache_path: Path = default_cache_path()
    verified_kv_bound: int = DEFAULT_KV_BOUND
    default_cp_mode: str = CALIBRATED
    output_format: str = "ascii"

    def __post_init__(self):
        if self.default_cp_mode not in (CALIBRATED, LITERAL):
            raise ValueError(
                f"cp mode must be {CALIBRATED!r} or {LITERAL!r}, "
                f"got {self.default_cp_mode!r}"
            )
        if self.verified_kv_bound < 3:
            raise ValueError("verified_kv_bound must be at least 3")


def _from_file(path: Path) -> dict:
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    if not isinstance(raw, dict):
        raise ValueError(f"config file {path} must contain a JSON object")
    allowed = {
        "bernoulli_cache_path",
        "verified_kv_bound",
        "default_cp_mode",
        "output_format",
    }
    unknown = set(raw) - allowed
    if unknown:
        raise ValueError(f"unknown config keys in {path}: {sorted(unknown)}")
    return raw


def load_config(config_file: Path | str | None = None, **overrides) -> Config:
    """Build a Config from defaults, file, environment, and overrides."""
    values: dict = {}
    if config_file is not None:
        values.update(_from_file(Path(config_file)))

    for field, env_key in _ENV_KEYS.items():
        env_val = os.environ.get(env_key)
        if env_val:
            values[field] = env_val

    for key, val in overrides.items():
        if val is not None:
            values[key] = val

    if "bernoulli_cache_path" in values:
        values["bernoulli_cache_path"] = Path(values["bernoulli_cache_path"])
    if "verified_kv_bound" in values:
        values["verified_kv_bound"] = int(values["verified_kv_bound"])
    if "default_cp_mode" in values:
        values["default_cp_mode"] = str(values["default_cp_mode"]).lower()

    return replace(Config(), **values)
