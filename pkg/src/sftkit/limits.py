"""Resource caps for searches and constructions."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import InputError, ResourceLimitError

ENV_MAX_CELLS = "SFTKIT_MAX_CELLS"


@dataclass(frozen=True)
class Limits:
    max_cells: int = 100_000  # ball, box or torus size
    max_patterns: int = 2_000_000  # materialized admissible patterns
    max_states: int = 2_000_000  # frontier states per layer in counting
    max_alphabet: int = 65_536  # product alphabet size
    max_forbidden: int = 1_000_000  # lifted forbidden patterns in a product
    max_table_rows: int = 1_000_000  # rows of a local-map table

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ENV_MAX_CELLS)
        if raw is None:
            return cls()
        try:
            cells = int(raw)
        except ValueError:
            raise InputError(f"expected an integer, got {raw!r}", ENV_MAX_CELLS) from None
        if cells < 1:
            raise InputError("must be positive", ENV_MAX_CELLS)
        return replace(cls(), max_cells=cells)

    def check(self, what: str, size: int, cap: int) -> None:
        if size > cap:
            raise ResourceLimitError(what, size, cap)


DEFAULT_LIMITS = Limits()


def resolve_limits(limits: Limits | None) -> Limits:
    return DEFAULT_LIMITS if limits is None else limits
