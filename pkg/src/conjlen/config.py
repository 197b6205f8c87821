"""Search constants and budgets, loadable from a JSON file."""

import json
import time
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .errors import MalformedInput, Undecided


@dataclass(frozen=True)
class Config:
    # radius multiplier for H-conjugator and root searches (radius = c_search * n)
    c_search: int = 4
    word_budget: int = 10**6
    # cap on ball sizes used by the bounded searches
    node_budget: int = 60_000
    # consecutive over-length steps before the phi-twist scan gives up in one direction
    patience: int = 3
    max_twist: int = 64
    oracle_nodes: int = 400_000
    deadline_ms: int = 0
    seed: int = 0
    phi_path: str = ""
    assume_atoroidal: bool = False

    def __post_init__(self):
        for f in ("c_search", "word_budget", "node_budget", "patience", "max_twist", "oracle_nodes"):
            if getattr(self, f) <= 0:
                raise MalformedInput(f"config value {f} must be positive")
        if self.deadline_ms < 0:
            raise MalformedInput("deadline_ms must be non-negative")

    def with_(self, **changes):
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def to_dict(self):
        return asdict(self)


def load_config(path=None, **overrides):
    data = {}
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedInput(f"cannot read config {path}: {exc}") from exc
        known = {f.name for f in fields(Config)}
        unknown = set(data) - known
        if unknown:
            raise MalformedInput(f"unknown config keys: {', '.join(sorted(unknown))}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    return Config(**data)


class Deadline:
    """Cooperative cancellation: ``check()`` raises Undecided once time is up."""

    def __init__(self, ms=0):
        self.end = time.monotonic() + ms / 1000 if ms else None

    def check(self, radius=None):
        if self.end is not None and time.monotonic() > self.end:
            raise Undecided("deadline reached", radius)


NO_DEADLINE = Deadline(0)
