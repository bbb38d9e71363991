"""Verification results: violations are reported, never raised."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One failed condition, located in the object being checked."""

    kind: str
    location: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "location": self.location, "detail": self.detail}


@dataclass
class CheckReport:
    """Named check with its violations and any values worth reporting."""

    name: str
    violations: list[Violation] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, kind: str, location: str, detail: str = "") -> None:
        self.violations.append(Violation(kind, location, detail))

    def extend(self, other: "CheckReport") -> None:
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        data: dict[str, Any] = {
            "check": self.name,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }
        for key in sorted(self.details):
            data[key] = self.details[key]
        return data
