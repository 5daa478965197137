import os
from dataclasses import dataclass, field
from typing import Optional

DEFAULT_TERM_BUDGET = 10**7
DEFAULT_ORBIT_DEPTH = 6
DEFAULT_INVARIANT_BOUND = 3
DEFAULT_DIGITS = 12
DEFAULT_MAX_GENUS = 3

COMMANDS = ("tables", "basis", "rep", "irr", "invariants", "eval", "check")
FORMATS = ("json", "csv", "text")
STRATEGIES = ("accel", "naive")


def term_budget() -> int:
    """Term budget for diagram evaluation, overridable through SKEINREP_BUDGET."""
    value = os.environ.get("SKEINREP_BUDGET")
    if value:
        budget = int(value)
        if budget <= 0:
            raise ValueError("SKEINREP_BUDGET must be positive")
        return budget
    return DEFAULT_TERM_BUDGET


def max_genus() -> int:
    value = os.environ.get("SKEINREP_MAX_GENUS")
    return int(value) if value else DEFAULT_MAX_GENUS


@dataclass
class RunConfig:
    command: str
    r: int = 5
    genus: int = 1
    output: Optional[str] = None
    fmt: str = "json"
    budget: int = field(default_factory=term_budget)
    depth: int = DEFAULT_ORBIT_DEPTH
    bound: int = DEFAULT_INVARIANT_BOUND
    digits: int = DEFAULT_DIGITS
    strategy: str = "accel"
    curve: Optional[str] = None
    diagram_file: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.r < 3:
            raise ValueError("r must be at least 3")
        if self.genus < 1 or self.genus > max_genus():
            raise ValueError(f"genus must lie in 1..{max_genus()}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {', '.join(STRATEGIES)}")
        for name in ("budget", "depth", "bound", "digits"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
