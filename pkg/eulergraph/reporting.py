"""Command reports: deterministic JSON and a plain-text table view."""

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .checks import CheckReport

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


def file_digest(path: str | Path) -> str:
    """sha256 of a file's bytes."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class Report:
    """Everything one CLI invocation produced."""

    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[CheckReport] = field(default_factory=list)
    error: dict[str, Any] | None = None
    output_format: str = field(default="json", repr=False)

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "ok" if all(c.passed for c in self.checks) else "violation"

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "violation": EXIT_VIOLATION, "error": EXIT_INPUT_ERROR}[self.status]

    def add_input(self, path: str | Path) -> None:
        self.inputs[str(path)] = file_digest(path)

    def to_dict(self) -> dict:
        data: dict[str, Any] = {
            "command": self.command,
            "inputs": dict(sorted(self.inputs.items())),
            "results": self.results,
            "checks": [c.to_dict() for c in self.checks],
            "status": self.status,
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render(self) -> str:
        return self.to_human() if self.output_format == "human" else self.to_json()

    def to_human(self) -> str:
        lines = [f"command: {' '.join(self.command)}", f"status:  {self.status}"]
        for path, digest in sorted(self.inputs.items()):
            lines.append(f"input:   {path} ({digest[:12]})")
        if self.error is not None:
            lines.append(f"error:   [{self.error.get('error')}] {self.error.get('message')}")
        if self.results:
            lines.append("")
            lines.append("results")
            lines.append("-" * 50)
            lines.extend(_render(self.results, indent=2))
        if self.checks:
            lines.append("")
            lines.append(f"{'check':<28} {'result':<8} violations")
            lines.append("-" * 50)
            for check in self.checks:
                verdict = "pass" if check.passed else "FAIL"
                lines.append(f"{check.name:<28} {verdict:<8} {len(check.violations)}")
                for violation in check.violations:
                    lines.append(f"    {violation.kind} @ {violation.location}: {violation.detail}")
        return "\n".join(lines) + "\n"


def _render(value: Any, indent: int) -> list[str]:
    pad = " " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_render(item, indent + 2))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return lines
    return [f"{pad}{_scalar(value)}"]


def _is_flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _scalar(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_scalar(v)}" for k, v in value.items()) + "}"
    if value is None:
        return "-"
    return str(value)
