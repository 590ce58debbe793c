"""Run configuration with ``WN_`` environment overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .groups import DEFAULT_CUTOFF

ENV_PREFIX = "WN_"
FORMATS = ("text", "json")


@dataclass(frozen=True)
class Config:
    cutoff: int = DEFAULT_CUTOFF
    workers: int = 1
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    @classmethod
    def from_env(cls, environ: dict | None = None) -> Config:
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            values[f.name] = raw if f.type in (str, "str") else int(raw)
        return cls(**values)

    def override(self, **kwargs) -> Config:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})
