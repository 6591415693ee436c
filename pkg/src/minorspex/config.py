"""Run-wide settings shared by the command line and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .search import worker_count
from .spectral import COMPARE_EPS, DEFAULT_TOL

OUTPUT_MODES = ("json", "table", "graph6")


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOL
    epsilon: float = COMPARE_EPS
    workers: int = field(default_factory=worker_count)
    output: str = "json"

    def __post_init__(self) -> None:
        if not 0 < self.tolerance <= self.epsilon:
            raise ValueError("need 0 < tolerance <= epsilon")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.output not in OUTPUT_MODES:
            raise ValueError(f"output must be one of {OUTPUT_MODES}")
