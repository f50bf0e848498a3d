"""Verification reports shared by every auditor and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    lhs: str
    rhs: str
    residual: str
    # Sort key locating the counterexample (basis indices, masks, ...).
    at: tuple = ()

    def to_dict(self) -> dict[str, Any]:
        return {"at": list(self.at), "lhs": self.lhs, "rhs": self.rhs, "residual": self.residual}


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    checked_count: int
    violations: list[Violation] = field(default_factory=list)

    def __post_init__(self):
        self.violations = sorted(self.violations, key=lambda v: (v.at, v.lhs))

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: Report) -> Report:
        return Report(self.command, self.parameters,
                      self.checked_count + other.checked_count,
                      self.violations + other.violations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "checked_count": self.checked_count,
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return f"{self.command}: checked {self.checked_count}, violations {len(self.violations)} [{status}]"
