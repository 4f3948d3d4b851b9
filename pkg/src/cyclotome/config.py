"""Run budgets shared by the distance oracles, searches and field construction."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

FIELD_CAP = 2**20
ROOT_FIELD_CAP = 2**32
ENUMERATION_BUDGET = 2**24
SUPPORT_WEIGHT_MAX = 8
SUPPORT_NODE_BUDGET = 3_000_000
N_CAP = 255

_ENV_KEYS = {
    "enum": "enumeration",
    "weight": "support_weight_max",
    "nodes": "support_nodes",
    "n": "n_cap",
}


@dataclass(frozen=True)
class Budget:
    """Limits for exhaustive computations.

    ``enumeration`` bounds q**k for full codeword enumeration; ``support_weight_max``
    and ``support_nodes`` bound the increasing-weight support search; ``n_cap``
    bounds splitting searches and factorisations.
    """

    enumeration: int = ENUMERATION_BUDGET
    support_weight_max: int = SUPPORT_WEIGHT_MAX
    support_nodes: int = SUPPORT_NODE_BUDGET
    n_cap: int = N_CAP
    field_cap: int = FIELD_CAP
    root_field_cap: int = ROOT_FIELD_CAP

    def __post_init__(self) -> None:
        for name in ("enumeration", "support_weight_max", "support_nodes", "n_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")

    def with_(self, **changes) -> "Budget":
        return replace(self, **changes)

    @classmethod
    def from_env(cls, var: str = "CYCLOTOME_BUDGET") -> "Budget":
        """Defaults, overridden by ``enum=N,weight=W,nodes=M,n=C`` in the environment."""
        raw = os.environ.get(var, "").strip()
        if not raw:
            return cls()
        changes = {}
        for item in raw.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in _ENV_KEYS:
                raise ValueError(f"unknown {var} key {key!r}")
            changes[_ENV_KEYS[key]] = int(value)
        return cls(**changes)


DEFAULT_BUDGET = Budget()
